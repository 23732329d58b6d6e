//! Small integer helpers shared by the group and character code.

/// Prime factorization by trial division, primes ascending.
pub fn factorize(mut n: u64) -> Vec<(u64, u32)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n % p == 0 {
            let mut e = 0;
            while n % p == 0 {
                n /= p;
                e += 1;
            }
            out.push((p, e));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, 1));
    }
    out
}

/// `Some((p, e))` when `n = p^e` with `e ≥ 1`.
pub fn prime_power(n: u64) -> Option<(u64, u32)> {
    match factorize(n).as_slice() {
        [(p, e)] => Some((*p, *e)),
        _ => None,
    }
}

pub fn is_prime(n: u64) -> bool {
    n >= 2 && prime_power(n) == Some((n, 1))
}

/// Number of prime factors counted with multiplicity.
pub fn big_omega(n: u64) -> u32 {
    factorize(n).iter().map(|&(_, e)| e).sum()
}

pub fn euler_phi(n: u64) -> u64 {
    factorize(n)
        .iter()
        .fold(n, |acc, &(p, _)| acc / p * (p - 1))
}

pub fn pow_mod(mut base: u64, mut exp: u64, m: u64) -> u64 {
    let mut acc = 1 % m;
    base %= m;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = (acc as u128 * base as u128 % m as u128) as u64;
        }
        base = (base as u128 * base as u128 % m as u128) as u64;
        exp >>= 1;
    }
    acc
}

/// Exact integer square root when `n` is a perfect square.
pub fn exact_sqrt(n: u64) -> Option<u64> {
    let r = (n as f64).sqrt().round() as u64;
    (r.saturating_sub(1)..=r + 1).find(|&x| x * x == n)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn factoring() {
        assert_eq!(factorize(1), vec![]);
        assert_eq!(factorize(360), vec![(2, 3), (3, 2), (5, 1)]);
        assert_eq!(prime_power(27), Some((3, 3)));
        assert_eq!(prime_power(12), None);
        assert_eq!(big_omega(12), 3);
        assert_eq!(euler_phi(12), 4);
        assert!(is_prime(97) && !is_prime(91));
        assert_eq!(exact_sqrt(729), Some(27));
        assert_eq!(exact_sqrt(8), None);
        assert_eq!(pow_mod(3, 4, 7), 4);
    }
}
