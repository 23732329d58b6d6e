use std::fmt;

use num_integer::Integer;

use crate::error::{Error, Result};

/// A permutation of `{0, .., degree-1}` stored by its image list.
///
/// Products act on the right: `a.compose(&b)` maps `x` to `b(a(x))`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn new(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(Error::InvalidPermutation(format!(
                    "images {images:?} are not a bijection on 0..{n}"
                )));
            }
            seen[x] = true;
        }
        Ok(Permutation { images })
    }

    pub fn identity(degree: usize) -> Self {
        Permutation {
            images: (0..degree as u32).collect(),
        }
    }

    pub fn degree(&self) -> usize {
        self.images.len()
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    #[inline]
    pub fn apply(&self, point: usize) -> usize {
        self.images[point] as usize
    }

    pub fn is_identity(&self) -> bool {
        self.images.iter().enumerate().all(|(i, &x)| i as u32 == x)
    }

    pub fn compose(&self, other: &Permutation) -> Permutation {
        debug_assert_eq!(self.degree(), other.degree());
        Permutation {
            images: self.images.iter().map(|&x| other.images[x as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &x) in self.images.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation { images: inv }
    }

    /// Disjoint cycles of length at least two, each starting at its smallest point.
    pub fn cycles(&self) -> Vec<Vec<usize>> {
        let n = self.degree();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for start in 0..n {
            if seen[start] {
                continue;
            }
            let mut cyc = vec![start];
            seen[start] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[x] = true;
                cyc.push(x);
                x = self.apply(x);
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }

    pub fn order(&self) -> u64 {
        self.cycles()
            .iter()
            .fold(1u64, |acc, c| acc.lcm(&(c.len() as u64)))
    }

    /// Embed into a larger point set, acting on `offset..offset+degree`.
    pub fn shifted(&self, offset: usize, total_degree: usize) -> Permutation {
        let mut images: Vec<u32> = (0..total_degree as u32).collect();
        for (i, &x) in self.images.iter().enumerate() {
            images[offset + i] = offset as u32 + x;
        }
        Permutation { images }
    }

    /// Parse disjoint-cycle notation over 1-based points, e.g. `(1,2,3)(4,5)`.
    /// `()` or an empty string is the identity.
    pub fn parse_cycles(degree: usize, text: &str) -> Result<Permutation> {
        let mut images: Vec<u32> = (0..degree as u32).collect();
        let mut touched = vec![false; degree];
        let s: String = text.chars().filter(|c| !c.is_whitespace()).collect();
        let mut rest = s.as_str();
        while !rest.is_empty() {
            let Some(body) = rest.strip_prefix('(') else {
                return Err(Error::parse(format!("expected '(' in cycle text '{text}'")));
            };
            let close = body
                .find(')')
                .ok_or_else(|| Error::parse(format!("unclosed cycle in '{text}'")))?;
            let inner = &body[..close];
            rest = &body[close + 1..];
            if inner.is_empty() {
                continue;
            }
            let mut pts = Vec::new();
            for tok in inner.split(',') {
                let p: usize = tok
                    .parse()
                    .map_err(|_| Error::parse(format!("bad point '{tok}' in '{text}'")))?;
                if p == 0 || p > degree {
                    return Err(Error::parse(format!(
                        "point {p} out of range 1..={degree} in '{text}'"
                    )));
                }
                if touched[p - 1] {
                    return Err(Error::InvalidPermutation(format!(
                        "point {p} repeated in '{text}'"
                    )));
                }
                touched[p - 1] = true;
                pts.push(p - 1);
            }
            for w in 0..pts.len() {
                images[pts[w]] = pts[(w + 1) % pts.len()] as u32;
            }
        }
        Ok(Permutation { images })
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let cycles = self.cycles();
        if cycles.is_empty() {
            return write!(f, "()");
        }
        for c in cycles {
            let parts: Vec<String> = c.iter().map(|p| (p + 1).to_string()).collect();
            write!(f, "({})", parts.join(","))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Permutation{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_non_bijection() {
        assert!(Permutation::new(vec![0, 0, 1]).is_err());
        assert!(Permutation::new(vec![0, 3, 1]).is_err());
        assert!(Permutation::new(vec![2, 0, 1]).is_ok());
    }

    #[test]
    fn cycle_round_trip() {
        let p = Permutation::parse_cycles(6, "(1,2,3)(4,5)").unwrap();
        assert_eq!(p.images(), &[1, 2, 0, 4, 3, 5]);
        assert_eq!(p.to_string(), "(1,2,3)(4,5)");
        assert_eq!(p.order(), 6);
        assert_eq!(Permutation::parse_cycles(3, "()").unwrap(), Permutation::identity(3));
    }

    #[test]
    fn composition_acts_on_the_right() {
        let a = Permutation::parse_cycles(3, "(1,2)").unwrap();
        let b = Permutation::parse_cycles(3, "(2,3)").unwrap();
        // 1 -a-> 2 -b-> 3
        assert_eq!(a.compose(&b).apply(0), 2);
        assert!(a.compose(&a.inverse()).is_identity());
    }

    #[test]
    fn parse_errors() {
        assert!(Permutation::parse_cycles(3, "(1,4)").is_err());
        assert!(Permutation::parse_cycles(3, "(1,2").is_err());
        assert!(Permutation::parse_cycles(3, "(1,1)").is_err());
    }
}
