use std::sync::Arc;

use super::field::FieldData;

/// Element of `Z[ζ_n]` with machine-integer coefficients in the power basis.
///
/// Used for bulk checks on character values, which are algebraic integers.
/// Arithmetic panics on `i128` overflow rather than wrapping.
#[derive(Clone, Debug)]
pub struct IntCyclotomic {
    field: Arc<FieldData>,
    coeffs: Vec<i128>,
}

impl PartialEq for IntCyclotomic {
    fn eq(&self, other: &Self) -> bool {
        self.field.n == other.field.n && self.coeffs == other.coeffs
    }
}

impl Eq for IntCyclotomic {}

impl IntCyclotomic {
    pub(crate) fn from_coeffs(field: Arc<FieldData>, coeffs: Vec<i128>) -> Self {
        IntCyclotomic { field, coeffs }
    }

    pub fn zero_in(field: Arc<FieldData>) -> Self {
        let coeffs = vec![0; field.phi];
        IntCyclotomic { field, coeffs }
    }

    pub fn coeffs(&self) -> &[i128] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|&c| c == 0)
    }

    pub fn as_integer(&self) -> Option<i128> {
        self.coeffs[1..].iter().all(|&c| c == 0).then(|| self.coeffs[0])
    }

    fn reduce(&self, exps: &[i128]) -> Self {
        let mut out = vec![0i128; self.field.phi];
        for (k, &c) in exps.iter().enumerate() {
            if c == 0 {
                continue;
            }
            for &(i, p) in &self.field.sparse_powers[k] {
                let o = &mut out[i as usize];
                *o = o.checked_add(c.checked_mul(p as i128).expect("overflow")).expect("overflow");
            }
        }
        IntCyclotomic {
            field: Arc::clone(&self.field),
            coeffs: out,
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let n = self.field.n as usize;
        let mut exps = vec![0i128; n];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b != 0 {
                    let e = &mut exps[(i + j) % n];
                    *e = e.checked_add(a.checked_mul(b).expect("overflow")).expect("overflow");
                }
            }
        }
        self.reduce(&exps)
    }

    pub fn add_assign_scaled(&mut self, other: &Self, k: i128) {
        for (a, &b) in self.coeffs.iter_mut().zip(&other.coeffs) {
            *a = a.checked_add(b.checked_mul(k).expect("overflow")).expect("overflow");
        }
    }

    pub fn galois(&self, k: usize) -> Self {
        let n = self.field.n as usize;
        let mut exps = vec![0i128; n];
        for (j, &c) in self.coeffs.iter().enumerate() {
            exps[j * k % n] += c;
        }
        self.reduce(&exps)
    }

    pub fn conj(&self) -> Self {
        let n = self.field.n as usize;
        self.galois(if n == 1 { 1 } else { n - 1 })
    }
}

#[cfg(test)]
mod tests {
    use crate::cyclo::Cyclotomic;

    #[test]
    fn norm_of_root_is_one() {
        let z = Cyclotomic::root_of_unity(9, 2).to_int().unwrap();
        assert_eq!(z.mul(&z.conj()).as_integer(), Some(1));
        let s = (&Cyclotomic::root_of_unity(8, 1) + &Cyclotomic::from_int(8, 1)).to_int().unwrap();
        // |1 + ζ_8|² = 2 + √2
        let n = s.mul(&s.conj());
        assert_eq!(n.as_integer(), None);
        assert_eq!(n, (&(&Cyclotomic::from_int(8, 2) + &Cyclotomic::root_of_unity(8, 1)) + &Cyclotomic::root_of_unity(8, 7)).to_int().unwrap());
    }
}
