//! Extraspecial and Heisenberg p-groups, realized through explicit cocycles on
//! `V × Z` and converted to their regular permutation representations.

use crate::error::{Error, Result};
use crate::numbers::is_prime;
use crate::perm::{FiniteGroup, GroupConfig};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ExtraspecialType {
    /// Odd `p`, exponent `p`.
    ExponentP,
    /// Odd `p`, exponent `p²`.
    ExponentP2,
    /// `p = 2`, central product of dihedral groups of order 8.
    Dihedral,
    /// `p = 2`, one quaternion factor.
    Quaternion,
}

impl ExtraspecialType {
    pub fn parse(s: &str) -> Result<Self> {
        match s {
            "p" => Ok(ExtraspecialType::ExponentP),
            "e" | "p2" => Ok(ExtraspecialType::ExponentP2),
            "d" | "+" | "plus" => Ok(ExtraspecialType::Dihedral),
            "q" | "-" | "minus" => Ok(ExtraspecialType::Quaternion),
            _ => Err(Error::parse(format!("unknown extraspecial type '{s}'"))),
        }
    }

    pub fn code(&self) -> &'static str {
        match self {
            ExtraspecialType::ExponentP => "p",
            ExtraspecialType::ExponentP2 => "e",
            ExtraspecialType::Dihedral => "d",
            ExtraspecialType::Quaternion => "q",
        }
    }
}

fn checked_order(p: u64, exp: u32, config: GroupConfig) -> Result<usize> {
    let order = p
        .checked_pow(exp)
        .filter(|&o| o as usize <= config.closure_bound)
        .ok_or(Error::BoundExceeded {
            what: "group order",
            size: usize::MAX,
            bound: config.closure_bound,
        })?;
    Ok(order as usize)
}

/// Elements are digit vectors `(x_1..x_m, y_1..y_m, z)` in base `p`; the
/// product adds componentwise and adds the cocycle to `z` mod `p`.
pub fn extraspecial(p: u64, m: u32, kind: ExtraspecialType, config: GroupConfig) -> Result<FiniteGroup> {
    if !is_prime(p) || m == 0 {
        return Err(Error::parse(format!("extraspecial needs a prime p and m ≥ 1, got ({p}, {m})")));
    }
    let odd = p != 2;
    match kind {
        ExtraspecialType::ExponentP | ExtraspecialType::ExponentP2 if !odd => {
            return Err(Error::parse("for p = 2 use type d (dihedral) or q (quaternion)"));
        }
        ExtraspecialType::Dihedral | ExtraspecialType::Quaternion if odd => {
            return Err(Error::parse("types d and q need p = 2"));
        }
        _ => {}
    }
    let n = checked_order(p, 1 + 2 * m, config)?;
    let m = m as usize;
    let p = p as usize;
    let dim = 2 * m + 1;
    let digits = |mut v: usize| -> Vec<usize> {
        (0..dim)
            .map(|_| {
                let d = v % p;
                v /= p;
                d
            })
            .collect()
    };
    let encode = |v: &[usize]| v.iter().rev().fold(0usize, |acc, &d| acc * p + d);
    let mul = |a: usize, b: usize| -> usize {
        let (da, db) = (digits(a), digits(b));
        let mut z = da[2 * m] + db[2 * m];
        for i in 0..m {
            z += da[i] * db[m + i];
        }
        match kind {
            ExtraspecialType::ExponentP2 => z += (da[0] + db[0]) / p,
            ExtraspecialType::Quaternion => z += da[0] * db[0] + da[m] * db[m],
            _ => {}
        }
        let mut v: Vec<usize> = (0..2 * m).map(|i| (da[i] + db[i]) % p).collect();
        v.push(z % p);
        encode(&v)
    };
    let gens: Vec<usize> = (0..2 * m).map(|i| p.pow(i as u32)).collect();
    FiniteGroup::from_cayley(n, &gens, mul, config)
}

/// Arithmetic in `F_{p^n}`, elements as base-`p` digit vectors packed into integers.
struct GaloisField {
    p: usize,
    n: usize,
    modulus: Vec<usize>,
}

impl GaloisField {
    fn new(p: usize, n: usize) -> GaloisField {
        let size = p.pow(n as u32);
        // first monic polynomial of degree n without zero divisors in the quotient
        for low in 0..size {
            let mut modulus: Vec<usize> = (0..n).map(|i| low / p.pow(i as u32) % p).collect();
            modulus.push(1);
            let f = GaloisField { p, n, modulus };
            if (1..size).all(|a| (1..size).all(|b| f.mul(a, b) != 0)) {
                return f;
            }
        }
        unreachable!("an irreducible polynomial exists in every degree")
    }

    fn size(&self) -> usize {
        self.p.pow(self.n as u32)
    }

    fn add(&self, a: usize, b: usize) -> usize {
        let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
        for _ in 0..self.n {
            out += (a % self.p + b % self.p) % self.p * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    fn mul(&self, a: usize, b: usize) -> usize {
        let (p, n) = (self.p, self.n);
        let da: Vec<usize> = (0..n).map(|i| a / p.pow(i as u32) % p).collect();
        let db: Vec<usize> = (0..n).map(|i| b / p.pow(i as u32) % p).collect();
        let mut prod = vec![0usize; 2 * n];
        for i in 0..n {
            for j in 0..n {
                prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
            }
        }
        for d in (n..2 * n).rev() {
            let c = prod[d];
            if c != 0 {
                for (k, &mk) in self.modulus.iter().enumerate() {
                    let idx = d - n + k;
                    prod[idx] = (prod[idx] + p * p - c * mk % p) % p;
                }
            }
        }
        (0..n).rev().fold(0, |acc, i| acc * p + prod[i])
    }
}

/// Heisenberg group of upper unitriangular 3×3 matrices over `F_{p^n}`,
/// of order `p^{3n}`, with `(a, b, c)(a', b', c') = (a + a', b + b', c + c' + ab')`.
pub fn heisenberg(p: u64, n: u32, config: GroupConfig) -> Result<FiniteGroup> {
    if !is_prime(p) || n == 0 {
        return Err(Error::parse(format!("heisenberg needs a prime p and n ≥ 1, got ({p}, {n})")));
    }
    let order = checked_order(p, 3 * n, config)?;
    let f = GaloisField::new(p as usize, n as usize);
    let q = f.size();
    let split = |v: usize| (v % q, v / q % q, v / (q * q));
    let mul = |x: usize, y: usize| {
        let (a, b, c) = split(x);
        let (a2, b2, c2) = split(y);
        let c3 = f.add(f.add(c, c2), f.mul(a, b2));
        f.add(a, a2) + q * f.add(b, b2) + q * q * c3
    };
    // a-basis and b-basis elements generate
    let mut gens = Vec::new();
    for i in 0..n {
        let unit = (p as usize).pow(i);
        gens.push(unit);
        gens.push(q * unit);
    }
    FiniteGroup::from_cayley(order, &gens, mul, config)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn field_of_order_nine() {
        let f = GaloisField::new(3, 2);
        let nonzero: Vec<usize> = (1..9).collect();
        for &a in &nonzero {
            assert!(nonzero.iter().any(|&b| f.mul(a, b) == 1));
        }
    }
}
