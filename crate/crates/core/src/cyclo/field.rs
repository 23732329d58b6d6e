use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

/// Precomputed data for `Q(ζ_n)`: `Φ_n` and the reductions of `x^k` for `k < n`.
#[derive(Debug)]
pub struct FieldData {
    pub n: u32,
    pub phi: usize,
    /// Coefficients of `Φ_n`, constant term first, monic.
    pub poly: Vec<i64>,
    /// `powers[k]` holds `x^k mod Φ_n` in the power basis.
    pub powers: Vec<Vec<i64>>,
    /// Nonzero entries of `powers[k]` as `(basis index, coefficient)`.
    pub sparse_powers: Vec<Vec<(u32, i64)>>,
}

fn poly_div_exact(num: &[i64], den: &[i64]) -> Vec<i64> {
    // den is monic
    let mut rem = num.to_vec();
    let dl = den.len();
    let mut quot = vec![0i64; num.len() + 1 - dl];
    for i in (0..quot.len()).rev() {
        let c = rem[i + dl - 1];
        quot[i] = c;
        if c != 0 {
            for (j, &d) in den.iter().enumerate() {
                rem[i + j] -= c * d;
            }
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    quot
}

fn cyclotomic_poly(n: u32, cache: &HashMap<u32, Arc<FieldData>>) -> Vec<i64> {
    // x^n - 1 divided by Φ_d for proper divisors d
    let mut p = vec![0i64; n as usize + 1];
    p[0] = -1;
    p[n as usize] = 1;
    for d in 1..n {
        if n % d == 0 {
            let phi_d = match cache.get(&d) {
                Some(data) => data.poly.clone(),
                None => cyclotomic_poly(d, cache),
            };
            p = poly_div_exact(&p, &phi_d);
        }
    }
    p
}

fn build(n: u32, cache: &HashMap<u32, Arc<FieldData>>) -> FieldData {
    let poly = cyclotomic_poly(n, cache);
    let phi = poly.len() - 1;
    let mut powers = Vec::with_capacity(n as usize);
    let mut cur = vec![0i64; phi];
    cur[0] = 1;
    for _ in 0..n {
        powers.push(cur.clone());
        // multiply by x and reduce using x^phi = -Σ poly[i] x^i
        let top = cur[phi - 1];
        for i in (1..phi).rev() {
            cur[i] = cur[i - 1] - top * poly[i];
        }
        cur[0] = -top * poly[0];
    }
    let sparse_powers = powers
        .iter()
        .map(|row| {
            row.iter()
                .enumerate()
                .filter(|(_, &c)| c != 0)
                .map(|(i, &c)| (i as u32, c))
                .collect()
        })
        .collect();
    FieldData {
        n,
        phi,
        poly,
        powers,
        sparse_powers,
    }
}

static CACHE: OnceLock<Mutex<HashMap<u32, Arc<FieldData>>>> = OnceLock::new();

/// Shared data for `Q(ζ_n)`, built once per `n`.
pub fn field(n: u32) -> Arc<FieldData> {
    assert!(n >= 1, "cyclotomic conductor must be positive");
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    let mut guard = cache.lock().expect("field cache poisoned");
    if let Some(f) = guard.get(&n) {
        return Arc::clone(f);
    }
    let data = Arc::new(build(n, &guard));
    guard.insert(n, Arc::clone(&data));
    data
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(field(1).poly, vec![-1, 1]);
        assert_eq!(field(2).poly, vec![1, 1]);
        assert_eq!(field(4).poly, vec![1, 0, 1]);
        assert_eq!(field(6).poly, vec![1, -1, 1]);
        assert_eq!(field(12).poly, vec![1, 0, -1, 0, 1]);
        assert_eq!(field(9).phi, 6);
        // Φ_105 is the first with a coefficient of absolute value 2
        assert!(field(105).poly.iter().any(|&c| c == -2));
    }

    #[test]
    fn powers_wrap_around() {
        let f = field(5);
        assert_eq!(f.powers[4], vec![-1, -1, -1, -1]);
        assert_eq!(f.powers[0], vec![1, 0, 0, 0]);
    }
}
