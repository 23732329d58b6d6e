use num_integer::Integer;

use super::Cyclotomic;
use crate::error::{Error, Result};

/// The automorphism `ζ_n ↦ ζ_n^k` of `Q(ζ_n)`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GaloisElement {
    n: u32,
    k: u32,
}

impl GaloisElement {
    pub fn new(n: u32, k: i64) -> Result<Self> {
        if k.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        Ok(GaloisElement {
            n,
            k: k.rem_euclid(n as i64) as u32,
        })
    }

    pub fn modulus(&self) -> u32 {
        self.n
    }

    pub fn exponent(&self) -> u32 {
        self.k
    }

    /// `self` after `other`.
    pub fn compose(&self, other: &GaloisElement) -> GaloisElement {
        assert_eq!(self.n, other.n);
        GaloisElement {
            n: self.n,
            k: ((self.k as u64 * other.k as u64) % self.n as u64) as u32,
        }
    }

    /// Apply to `a`, lifting `a` to the common conductor first.
    pub fn apply(&self, a: &Cyclotomic) -> Cyclotomic {
        let m = self.n.lcm(&a.conductor());
        let lifted = a.lift(m);
        // extend k to a unit mod m that agrees with k mod n
        let k = (0..m as u64)
            .map(|t| self.k as u64 + t * self.n as u64)
            .find(|&k| k.gcd(&(m as u64)) == 1)
            .expect("units lift along n | m");
        lifted.galois_unchecked((k % m as u64) as usize)
    }
}

/// Units mod `n` fixing every value, and coset representatives of that
/// stabilizer in `(Z/n)^*` chosen by the smallest-k rule. The number of
/// representatives is the degree of the field generated by the values.
pub fn stabilizer_and_orbit(values: &[Cyclotomic]) -> (usize, Vec<u32>) {
    let n = values.iter().map(Cyclotomic::conductor).fold(1u32, |a, b| a.lcm(&b));
    let vals: Vec<Cyclotomic> = values.iter().map(|v| v.lift(n)).collect();
    let units: Vec<u32> = (1..=n).filter(|k| k.gcd(&n) == 1).map(|k| k % n).collect();
    let stab: Vec<u32> = units
        .iter()
        .copied()
        .filter(|&k| vals.iter().all(|v| v.galois_unchecked(k as usize) == *v))
        .collect();
    let mut covered = vec![false; n as usize];
    let mut reps = Vec::new();
    let mut sorted_units = units.clone();
    sorted_units.sort_unstable();
    for k in sorted_units {
        let k = if n == 1 { 1 } else { k };
        if covered[(k % n) as usize] {
            continue;
        }
        reps.push(k);
        for &h in &stab {
            covered[((k as u64 * h as u64) % n as u64) as usize] = true;
        }
    }
    (reps.len(), reps)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn composition_multiplies_exponents() {
        let a = GaloisElement::new(8, 3).unwrap();
        let b = GaloisElement::new(8, 5).unwrap();
        assert_eq!(a.compose(&b).exponent(), 7);
        let z = Cyclotomic::root_of_unity(8, 1);
        assert_eq!(a.apply(&b.apply(&z)), a.compose(&b).apply(&z));
        assert!(GaloisElement::new(8, 2).is_err());
    }

    #[test]
    fn apply_lifts_conductor() {
        let s = GaloisElement::new(12, 5).unwrap();
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(s.apply(&i), Cyclotomic::root_of_unity(4, 1));
        let w = Cyclotomic::root_of_unity(3, 1);
        assert_eq!(s.apply(&w), Cyclotomic::root_of_unity(3, 2));
    }

    #[test]
    fn orbit_examples() {
        assert_eq!(stabilizer_and_orbit(&[Cyclotomic::from_int(4, 2)]), (1, vec![1]));
        let z = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(stabilizer_and_orbit(&[z]), (4, vec![1, 2, 3, 4]));
        let q8 = [2, -2, 0, 0, 0].map(|v| Cyclotomic::from_int(4, v));
        assert_eq!(stabilizer_and_orbit(&q8).0, 1);
        let r = &Cyclotomic::root_of_unity(5, 1) + &Cyclotomic::root_of_unity(5, 4);
        assert_eq!(stabilizer_and_orbit(&[r]), (2, vec![1, 2]));
    }
}
