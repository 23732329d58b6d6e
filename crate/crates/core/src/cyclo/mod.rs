//! Exact arithmetic in cyclotomic fields `Q(ζ_n)` in the power basis modulo `Φ_n`.

mod field;
mod galois;
mod int;
mod text;

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{Signed, ToPrimitive, Zero};

use crate::error::{Error, Result};

pub use field::{field, FieldData};
pub use galois::{stabilizer_and_orbit, GaloisElement};
pub use int::IntCyclotomic;

/// An element of `Q(ζ_n)` in the basis `1, ζ_n, …, ζ_n^{φ(n)-1}`.
///
/// Only nonzero coefficients are stored, sorted by basis index, so equal
/// elements of the same conductor have identical term lists.
#[derive(Clone)]
pub struct Cyclotomic {
    field: Arc<FieldData>,
    terms: Vec<(u32, BigRational)>,
}

/// Dense accumulator over exponents `0..n`, reduced mod `Φ_n` on finish.
/// Integer coefficients are kept as machine integers until a non-integral
/// or large one arrives.
struct ExponentSum {
    field: Arc<FieldData>,
    ints: Option<Vec<i128>>,
    exps: Vec<BigRational>,
}

const SMALL: i128 = 1 << 60;

impl ExponentSum {
    fn new(field: Arc<FieldData>) -> Self {
        let ints = Some(vec![0i128; field.n as usize]);
        ExponentSum {
            field,
            ints,
            exps: Vec::new(),
        }
    }

    fn to_rational(&mut self) {
        if let Some(ints) = self.ints.take() {
            self.exps = ints
                .into_iter()
                .map(|c| BigRational::from_integer(BigInt::from(c)))
                .collect();
        }
    }

    fn add(&mut self, k: usize, c: &BigRational) {
        let n = self.field.n as usize;
        if let Some(ints) = self.ints.as_mut() {
            let small = c
                .is_integer()
                .then(|| c.to_integer().to_i128())
                .flatten()
                .filter(|v| v.abs() < SMALL && ints[k % n].abs() < SMALL);
            if let Some(v) = small {
                ints[k % n] += v;
                return;
            }
            self.to_rational();
        }
        self.exps[k % n] += c;
    }

    fn finish(self) -> Cyclotomic {
        let f = self.field;
        if let Some(ints) = self.ints {
            let mut out = vec![0i128; f.phi];
            for (k, &c) in ints.iter().enumerate() {
                if c != 0 {
                    for &(i, p) in &f.sparse_powers[k] {
                        out[i as usize] += c * p as i128;
                    }
                }
            }
            let terms = out
                .into_iter()
                .enumerate()
                .filter(|&(_, c)| c != 0)
                .map(|(i, c)| (i as u32, BigRational::from_integer(BigInt::from(c))))
                .collect();
            return Cyclotomic { field: f, terms };
        }
        let mut out = vec![BigRational::zero(); f.phi];
        for (k, c) in self.exps.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            for &(i, p) in &f.sparse_powers[k] {
                out[i as usize] += c * BigRational::from_integer(BigInt::from(p));
            }
        }
        Cyclotomic::from_dense(f, out)
    }
}

impl Cyclotomic {
    fn from_dense(field: Arc<FieldData>, dense: Vec<BigRational>) -> Self {
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|(_, c)| !c.is_zero())
            .map(|(k, c)| (k as u32, c))
            .collect();
        Cyclotomic { field, terms }
    }

    pub fn zero(n: u32) -> Self {
        Cyclotomic {
            field: field(n),
            terms: Vec::new(),
        }
    }

    pub fn from_rational(n: u32, q: BigRational) -> Self {
        let terms = if q.is_zero() { Vec::new() } else { vec![(0, q)] };
        Cyclotomic {
            field: field(n),
            terms,
        }
    }

    pub fn from_int(n: u32, v: i64) -> Self {
        Self::from_rational(n, BigRational::from_integer(BigInt::from(v)))
    }

    pub fn one(n: u32) -> Self {
        Self::from_int(n, 1)
    }

    /// `ζ_n^e`.
    pub fn root_of_unity(n: u32, e: i64) -> Self {
        let field = field(n);
        let k = e.rem_euclid(n as i64) as usize;
        let terms = field.sparse_powers[k]
            .iter()
            .map(|&(i, c)| (i, BigRational::from_integer(BigInt::from(c))))
            .collect();
        Cyclotomic { field, terms }
    }

    /// `Σ c·ζ_n^k` over integer `(k, c)` pairs, reduced mod `Φ_n`.
    pub fn from_exponent_terms(n: u32, terms: &[(u32, i64)]) -> Self {
        let field = field(n);
        let mut dense = vec![0i64; field.phi];
        for &(k, c) in terms {
            for &(i, p) in &field.sparse_powers[(k % n) as usize] {
                dense[i as usize] += c * p;
            }
        }
        let terms = dense
            .into_iter()
            .enumerate()
            .filter(|&(_, c)| c != 0)
            .map(|(i, c)| (i as u32, BigRational::from_integer(BigInt::from(c))))
            .collect();
        Cyclotomic { field, terms }
    }

    /// Build from rational coefficients on `ζ_n^k`, `0 ≤ k < n`, reducing mod `Φ_n`.
    pub fn from_exponent_coeffs(n: u32, coeffs: &[BigRational]) -> Self {
        let mut acc = ExponentSum::new(field(n));
        for (k, c) in coeffs.iter().enumerate() {
            if !c.is_zero() {
                acc.add(k, c);
            }
        }
        acc.finish()
    }

    pub fn conductor(&self) -> u32 {
        self.field.n
    }

    /// Nonzero coefficients as `(basis index, coefficient)`, index ascending.
    pub fn terms(&self) -> &[(u32, BigRational)] {
        &self.terms
    }

    pub fn coeff(&self, k: u32) -> BigRational {
        self.terms
            .iter()
            .find(|t| t.0 == k)
            .map_or_else(BigRational::zero, |t| t.1.clone())
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_rational(&self) -> bool {
        self.terms.iter().all(|t| t.0 == 0)
    }

    pub fn as_rational(&self) -> Result<BigRational> {
        if self.is_rational() {
            Ok(self.coeff(0))
        } else {
            Err(Error::NotRational(self.to_string()))
        }
    }

    /// The value as an `i64` when it is a rational integer.
    pub fn as_integer(&self) -> Option<i64> {
        let q = self.as_rational().ok()?;
        if q.is_integer() {
            q.to_integer().to_i64()
        } else {
            None
        }
    }

    pub fn is_negative_rational(&self) -> bool {
        self.is_rational() && self.coeff(0).is_negative()
    }

    /// Re-express in `Q(ζ_m)` for a multiple `m` of the conductor.
    pub fn lift(&self, m: u32) -> Self {
        let n = self.conductor();
        if m == n {
            return self.clone();
        }
        assert!(m % n == 0, "cannot lift Q(ζ_{n}) into Q(ζ_{m})");
        let step = (m / n) as usize;
        let mut acc = ExponentSum::new(field(m));
        for (k, c) in &self.terms {
            acc.add(*k as usize * step, c);
        }
        acc.finish()
    }

    fn common(&self, other: &Self) -> (Self, Self) {
        let m = self.conductor().lcm(&other.conductor());
        (self.lift(m), other.lift(m))
    }

    /// Image under `ζ_n ↦ ζ_n^k`; `k` must be a unit mod the conductor.
    pub fn galois(&self, k: i64) -> Result<Self> {
        let n = self.conductor();
        if k.gcd(&(n as i64)) != 1 {
            return Err(Error::NotCoprime { k, n });
        }
        Ok(self.galois_unchecked(k.rem_euclid(n as i64) as usize))
    }

    pub(crate) fn galois_unchecked(&self, k: usize) -> Self {
        if self.is_rational() {
            return self.clone();
        }
        let mut acc = ExponentSum::new(Arc::clone(&self.field));
        for (j, c) in &self.terms {
            acc.add(*j as usize * k, c);
        }
        acc.finish()
    }

    pub fn conj(&self) -> Self {
        let n = self.conductor() as usize;
        self.galois_unchecked(if n == 1 { 1 } else { n - 1 })
    }

    pub fn scale(&self, q: &BigRational) -> Self {
        if q.is_zero() {
            return Self::zero(self.conductor());
        }
        Cyclotomic {
            field: Arc::clone(&self.field),
            terms: self.terms.iter().map(|(k, c)| (*k, c * q)).collect(),
        }
    }

    /// Multiplicative inverse via the norm: `a⁻¹ = ∏_{σ≠1} σ(a) / N(a)`.
    pub fn inv(&self) -> Result<Self> {
        if self.is_zero() {
            return Err(Error::DivisionByZero);
        }
        if self.is_rational() {
            return Ok(Self::from_rational(self.conductor(), self.coeff(0).recip()));
        }
        let n = self.conductor() as i64;
        let mut others = Self::one(self.conductor());
        for k in 2..n {
            if k.gcd(&n) == 1 {
                others = &others * &self.galois_unchecked(k as usize);
            }
        }
        let norm = (&others * self).as_rational()?;
        Ok(others.scale(&norm.recip()))
    }

    pub fn div(&self, other: &Self) -> Result<Self> {
        Ok(self * &other.inv()?)
    }

    fn mul_same(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero(self.conductor());
        }
        if self.is_rational() {
            return other.scale(&self.terms[0].1);
        }
        if other.is_rational() {
            return self.scale(&other.terms[0].1);
        }
        let mut acc = ExponentSum::new(Arc::clone(&self.field));
        for (i, a) in &self.terms {
            for (j, b) in &other.terms {
                acc.add((*i + *j) as usize, &(a * b));
            }
        }
        acc.finish()
    }

    fn add_same(&self, other: &Self) -> Self {
        let mut terms = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() || j < other.terms.len() {
            let ki = self.terms.get(i).map_or(u32::MAX, |t| t.0);
            let kj = other.terms.get(j).map_or(u32::MAX, |t| t.0);
            if ki < kj {
                terms.push(self.terms[i].clone());
                i += 1;
            } else if kj < ki {
                terms.push(other.terms[j].clone());
                j += 1;
            } else {
                let c = &self.terms[i].1 + &other.terms[j].1;
                if !c.is_zero() {
                    terms.push((ki, c));
                }
                i += 1;
                j += 1;
            }
        }
        Cyclotomic {
            field: Arc::clone(&self.field),
            terms,
        }
    }

    /// Integer coefficients when every coefficient is integral.
    pub fn to_int(&self) -> Option<IntCyclotomic> {
        let mut dense = vec![0i128; self.field.phi];
        for (k, c) in &self.terms {
            if !c.is_integer() {
                return None;
            }
            dense[*k as usize] = c.to_integer().to_i128()?;
        }
        Some(IntCyclotomic::from_coeffs(Arc::clone(&self.field), dense))
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor() == other.conductor() {
            return self.terms == other.terms;
        }
        let (a, b) = self.common(other);
        a.terms == b.terms
    }
}

impl Eq for Cyclotomic {}

impl<'a> Add<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn add(self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor() != other.conductor() {
            let (a, b) = self.common(other);
            return a.add_same(&b);
        }
        self.add_same(other)
    }
}

impl<'a> Sub<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn sub(self, other: &Cyclotomic) -> Cyclotomic {
        self + &(-other)
    }
}

impl Neg for &Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        Cyclotomic {
            field: Arc::clone(&self.field),
            terms: self.terms.iter().map(|(k, c)| (*k, -c)).collect(),
        }
    }
}

impl<'a> Mul<&'a Cyclotomic> for &'a Cyclotomic {
    type Output = Cyclotomic;
    fn mul(self, other: &Cyclotomic) -> Cyclotomic {
        if self.conductor() != other.conductor() {
            let (a, b) = self.common(other);
            return a.mul_same(&b);
        }
        self.mul_same(other)
    }
}

macro_rules! forward_owned {
    ($tr:ident, $m:ident) => {
        impl $tr<Cyclotomic> for Cyclotomic {
            type Output = Cyclotomic;
            fn $m(self, other: Cyclotomic) -> Cyclotomic {
                (&self).$m(&other)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Cyclotomic {
    type Output = Cyclotomic;
    fn neg(self) -> Cyclotomic {
        -&self
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Cyclotomic({self})")
    }
}

pub fn rational(num: i64, den: i64) -> BigRational {
    BigRational::new(BigInt::from(num), BigInt::from(den))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn unit_examples() {
        assert_eq!(Cyclotomic::root_of_unity(1, 0), Cyclotomic::one(1));
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(&i * &i, Cyclotomic::from_int(4, -1));
        let mut s = Cyclotomic::zero(5);
        for e in 0..5 {
            s = &s + &Cyclotomic::root_of_unity(5, e);
        }
        assert!(s.is_zero());
    }

    #[test]
    fn rational_extraction() {
        let w = |e| Cyclotomic::root_of_unity(3, e);
        let s = &(&w(0) + &w(1)) + &w(2);
        assert_eq!(s.as_rational().unwrap(), rational(0, 1));
        let z = Cyclotomic::root_of_unity(6, 1);
        assert!((&z - &z).is_zero());
        let t = &z + &Cyclotomic::root_of_unity(6, 5);
        assert_eq!(t.as_integer(), Some(1));
        assert!(matches!(z.as_rational(), Err(Error::NotRational(_))));
    }

    #[test]
    fn galois_examples() {
        let z = Cyclotomic::root_of_unity(5, 1);
        assert_eq!(z.galois(1).unwrap(), z);
        assert_eq!(z.galois(4).unwrap(), Cyclotomic::root_of_unity(5, -1));
        let a = &z + &Cyclotomic::root_of_unity(5, 4);
        let b = &Cyclotomic::root_of_unity(5, 2) + &Cyclotomic::root_of_unity(5, 3);
        assert_eq!(a.galois(2).unwrap(), b);
        assert!(matches!(z.galois(5), Err(Error::NotCoprime { .. })));
    }

    #[test]
    fn mixed_conductors() {
        let i = Cyclotomic::root_of_unity(4, 1);
        let w = Cyclotomic::root_of_unity(3, 1);
        let p = &i * &w;
        assert_eq!(p.conductor(), 12);
        assert_eq!(p, Cyclotomic::root_of_unity(12, 7));
        assert_eq!(Cyclotomic::root_of_unity(4, 2), Cyclotomic::from_int(1, -1));
    }

    #[test]
    fn inverse() {
        let a = &Cyclotomic::root_of_unity(7, 1) + &Cyclotomic::from_int(7, 2);
        let inv = a.inv().unwrap();
        assert_eq!(&a * &inv, Cyclotomic::one(7));
        assert!(matches!(Cyclotomic::zero(7).inv(), Err(Error::DivisionByZero)));
    }
}
