//! Text formats for groups: `.grp` (generators in cycle notation) and `.mt`
//! (multiplication table, converted to the regular representation).

use std::path::Path;

use super::group::{FiniteGroup, GroupConfig};
use super::permutation::Permutation;
use crate::error::{Error, Result};

fn content_lines(text: &str) -> impl Iterator<Item = &str> {
    text.lines()
        .map(|l| l.split('#').next().unwrap_or("").trim())
        .filter(|l| !l.is_empty())
}

fn header(line: Option<&str>, key: &str) -> Result<usize> {
    let line = line.ok_or_else(|| Error::parse(format!("missing '{key} N' header")))?;
    let mut parts = line.split_whitespace();
    match (parts.next(), parts.next().map(str::parse::<usize>), parts.next()) {
        (Some(k), Some(Ok(n)), None) if k == key => Ok(n),
        _ => Err(Error::parse(format!("expected '{key} N', found '{line}'"))),
    }
}

pub fn parse_grp(text: &str, config: GroupConfig) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let degree = header(lines.next(), "degree")?;
    let gens = lines
        .map(|l| Permutation::parse_cycles(degree, l))
        .collect::<Result<Vec<_>>>()?;
    FiniteGroup::with_config(degree, gens, config)
}

pub fn write_grp(group: &FiniteGroup) -> String {
    let mut out = format!("degree {}\n", group.degree());
    for g in group.generators() {
        out.push_str(&g.to_string());
        out.push('\n');
    }
    out
}

/// Parse a multiplication table with 1-based entries. The identity is
/// located from the table; generators are picked greedily.
pub fn parse_mt(text: &str, config: GroupConfig) -> Result<FiniteGroup> {
    let mut lines = content_lines(text);
    let n = header(lines.next(), "order")?;
    if n == 0 {
        return Err(Error::parse("order must be positive"));
    }
    let mut table = Vec::with_capacity(n * n);
    let mut rows = 0;
    for line in lines {
        let row = line
            .split_whitespace()
            .map(|t| match t.parse::<usize>() {
                Ok(v) if (1..=n).contains(&v) => Ok(v - 1),
                _ => Err(Error::parse(format!("bad table entry '{t}'"))),
            })
            .collect::<Result<Vec<_>>>()?;
        if row.len() != n {
            return Err(Error::parse(format!("row {} has {} entries, expected {n}", rows + 1, row.len())));
        }
        table.extend(row);
        rows += 1;
    }
    if rows != n {
        return Err(Error::parse(format!("expected {n} rows, found {rows}")));
    }
    let identity = (0..n)
        .find(|&e| (0..n).all(|x| table[e * n + x] == x && table[x * n + e] == x))
        .ok_or_else(|| Error::parse("table has no identity"))?;
    // relabel so the identity is 0, then act on the right on labels
    let relabel = |x: usize| {
        if x == identity {
            0
        } else if x == 0 {
            identity
        } else {
            x
        }
    };
    let mul = |a: usize, b: usize| relabel(table[relabel(a) * n + relabel(b)]);
    for g in 0..n {
        let row: Vec<usize> = (0..n).map(|x| mul(x, g)).collect();
        let mut seen = vec![false; n];
        for &y in &row {
            if seen[y] {
                return Err(Error::parse("table rows are not permutations"));
            }
            seen[y] = true;
        }
    }
    let mut gens = Vec::new();
    let mut covered = vec![false; n];
    covered[0] = true;
    for g in 1..n {
        if covered[g] {
            continue;
        }
        gens.push(g);
        // recompute the closure of the chosen generators
        let mut list = vec![0];
        covered = vec![false; n];
        covered[0] = true;
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in &gens {
                let y = mul(x, s);
                if !covered[y] {
                    covered[y] = true;
                    list.push(y);
                }
            }
        }
    }
    // associativity with the middle factor restricted to generators
    for &g in &gens {
        for a in 0..n {
            for c in 0..n {
                if mul(mul(a, g), c) != mul(a, mul(g, c)) {
                    return Err(Error::parse("table is not associative"));
                }
            }
        }
    }
    FiniteGroup::from_cayley(n, &gens, mul, config)
}

pub fn load_group_file(path: &Path, config: GroupConfig) -> Result<FiniteGroup> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.display().to_string(),
        source,
    })?;
    match path.extension().and_then(|e| e.to_str()) {
        Some("mt") => parse_mt(&text, config),
        _ => parse_grp(&text, config),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grp_round_trip() {
        let g = parse_grp("# S3\ndegree 3\n(1,2,3)\n(1,2) # transposition\n", GroupConfig::default()).unwrap();
        assert_eq!(g.order(), 6);
        let again = parse_grp(&write_grp(&g), GroupConfig::default()).unwrap();
        assert_eq!(again.elements(), g.elements());
    }

    #[test]
    fn mt_klein_four() {
        let text = "order 4\n1 2 3 4\n2 1 4 3\n3 4 1 2\n4 3 2 1\n";
        let g = parse_mt(text, GroupConfig::default()).unwrap();
        assert_eq!(g.order(), 4);
        assert!(g.is_abelian());
        assert_eq!(g.exponent(), 2);
    }

    #[test]
    fn mt_rejects_bad_tables() {
        assert!(parse_mt("order 2\n1 2\n2 2\n", GroupConfig::default()).is_err());
        assert!(parse_mt("order 2\n1 2\n", GroupConfig::default()).is_err());
        assert!(parse_grp("degree x\n", GroupConfig::default()).is_err());
    }
}
