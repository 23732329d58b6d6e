use serde::Serialize;

use crate::error::{Error, Result};
use crate::numbers::factorize;

/// Which groups `verify-theorems` runs over.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CorpusSelection {
    /// Everything below.
    Default,
    /// Abelian groups of order at most 100 only.
    Abelian,
    /// VZ groups and the direct products built from them.
    Vz,
}

impl CorpusSelection {
    pub fn parse(name: &str) -> Result<Self> {
        match name {
            "default" => Ok(CorpusSelection::Default),
            "abelian" => Ok(CorpusSelection::Abelian),
            "vz" => Ok(CorpusSelection::Vz),
            _ => Err(Error::UnknownStrategy {
                kind: "corpus",
                name: name.to_string(),
            }),
        }
    }
}

/// Group spec strings, grouped by the checks that consume them.
#[derive(Debug, Clone, Default)]
pub struct Corpus {
    /// Abelian p-groups of order at most 200.
    pub abelian_p: Vec<String>,
    /// All abelian groups of order at most 100, including the trivial group.
    pub abelian: Vec<String>,
    /// Nonabelian groups whose nonlinear characters vanish off the center.
    pub vz: Vec<String>,
    /// `(p, m, spec)` for each extraspecial group.
    pub extraspecial: Vec<(u64, u32, String)>,
    /// Nilpotent pairs `(H, K)` whose product is checked for additivity of `μ`.
    pub pairs: Vec<(String, String)>,
}

/// Partitions of `n` into nonincreasing parts.
fn partitions(n: u32) -> Vec<Vec<u32>> {
    fn go(n: u32, max: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if n == 0 {
            out.push(cur.clone());
            return;
        }
        for part in (1..=max.min(n)).rev() {
            cur.push(part);
            go(n - part, part, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(n, n, &mut Vec::new(), &mut out);
    out
}

/// Primary invariants of every abelian group of order `n`, each list sorted
/// ascending.
pub fn abelian_invariant_lists(n: u64) -> Vec<Vec<u64>> {
    let mut lists = vec![Vec::new()];
    for (p, e) in factorize(n) {
        let mut next = Vec::new();
        for list in &lists {
            for part in partitions(e) {
                let mut l: Vec<u64> = list.clone();
                l.extend(part.iter().map(|&k| p.pow(k)));
                next.push(l);
            }
        }
        lists = next;
    }
    for l in lists.iter_mut() {
        l.sort_unstable();
    }
    lists
}

pub fn abelian_spec(invariants: &[u64]) -> String {
    let parts: Vec<String> = invariants.iter().map(u64::to_string).collect();
    format!("abelian:{}", parts.join(","))
}

fn is_prime_power(n: u64) -> bool {
    factorize(n).len() == 1
}

fn product(a: &str, b: &str) -> String {
    format!("product:({a})x({b})")
}

const VZ_GROUPS: [&str; 21] = [
    "extraspecial:2,1,q",
    "extraspecial:2,1,d",
    "extraspecial:3,1,p",
    "extraspecial:3,1,e",
    "extraspecial:5,1,p",
    "extraspecial:5,1,e",
    "extraspecial:2,2,d",
    "extraspecial:2,2,q",
    "extraspecial:3,2,p",
    "extraspecial:3,2,e",
    "heisenberg:2,2",
    "product:(extraspecial:3,1,p)x(abelian:3)",
    "product:(extraspecial:3,1,p)x(abelian:9)",
    "product:(extraspecial:3,1,e)x(abelian:3)",
    "product:(extraspecial:3,1,p)x(abelian:3,3)",
    "product:(extraspecial:2,1,q)x(abelian:2)",
    "product:(extraspecial:2,1,d)x(abelian:4)",
    "product:(extraspecial:3,1,p)x(abelian:5)",
    "product:(extraspecial:3,1,p)x(abelian:7)",
    "product:(extraspecial:2,1,q)x(abelian:3)",
    "product:(heisenberg:2,2)x(abelian:2)",
];

const PAIRS: [(&str, &str); 8] = [
    ("extraspecial:3,1,p", "abelian:5"),
    ("extraspecial:3,1,p", "abelian:7"),
    ("extraspecial:2,1,q", "abelian:3"),
    ("extraspecial:2,1,q", "abelian:2"),
    ("extraspecial:2,1,d", "abelian:4"),
    ("extraspecial:3,1,p", "abelian:9"),
    ("extraspecial:3,1,p", "abelian:3"),
    ("abelian:4", "abelian:2"),
];

impl Corpus {
    pub fn new(selection: CorpusSelection) -> Corpus {
        let abelian_up_to = |bound: u64, p_only: bool| -> Vec<String> {
            (1..=bound)
                .filter(|&n| !p_only || is_prime_power(n))
                .flat_map(abelian_invariant_lists)
                .map(|l| abelian_spec(&l))
                .collect()
        };
        let extraspecial = || {
            VZ_GROUPS
                .iter()
                .filter_map(|s| {
                    let params = s.strip_prefix("extraspecial:")?;
                    let mut it = params.split(',');
                    let p = it.next()?.parse().ok()?;
                    let m = it.next()?.parse().ok()?;
                    Some((p, m, s.to_string()))
                })
                .collect()
        };
        let vz = || VZ_GROUPS.iter().map(|s| s.to_string()).collect();
        let pairs = || PAIRS.iter().map(|(a, b)| (a.to_string(), b.to_string())).collect();
        match selection {
            CorpusSelection::Default => Corpus {
                abelian_p: abelian_up_to(200, true),
                abelian: abelian_up_to(100, false),
                vz: vz(),
                extraspecial: extraspecial(),
                pairs: pairs(),
            },
            CorpusSelection::Abelian => Corpus {
                abelian_p: abelian_up_to(100, true),
                abelian: abelian_up_to(100, false),
                ..Corpus::default()
            },
            CorpusSelection::Vz => Corpus {
                vz: vz(),
                extraspecial: extraspecial(),
                pairs: pairs(),
                ..Corpus::default()
            },
        }
    }

    /// Every group spec in the corpus, including both factors and the product
    /// of each pair, without repeats and in first-seen order.
    pub fn all(&self) -> Vec<String> {
        let mut seen = std::collections::HashSet::new();
        let mut out = Vec::new();
        let pair_specs = self
            .pairs
            .iter()
            .flat_map(|(a, b)| [a.clone(), b.clone(), product(a, b)]);
        for s in self
            .abelian_p
            .iter()
            .chain(&self.abelian)
            .chain(&self.vz)
            .cloned()
            .chain(pair_specs)
        {
            if seen.insert(s.clone()) {
                out.push(s);
            }
        }
        out
    }

    pub fn product_of(a: &str, b: &str) -> String {
        product(a, b)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn abelian_counts() {
        // number of abelian groups of order 16, 72 and 1
        assert_eq!(abelian_invariant_lists(16).len(), 5);
        assert_eq!(abelian_invariant_lists(72).len(), 6);
        assert_eq!(abelian_invariant_lists(1), vec![Vec::<u64>::new()]);
        assert_eq!(abelian_invariant_lists(12), vec![vec![3, 4], vec![2, 2, 3]]);
    }

    #[test]
    fn default_corpus_shape() {
        let c = Corpus::new(CorpusSelection::Default);
        assert!(c.abelian_p.contains(&"abelian:2,2,2,2,2,2,2".to_string()));
        assert!(c.abelian.contains(&"abelian:2,3".to_string()));
        assert!(c.pairs.len() >= 5);
        assert_eq!(c.extraspecial.len(), 10);
    }
}
