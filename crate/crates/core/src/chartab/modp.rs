//! Dense linear algebra over a prime field `F_q`, `q < 2^32`.

use crate::numbers::{factorize, pow_mod};

#[derive(Debug, Clone, Copy)]
pub struct Fp {
    pub q: u64,
}

impl Fp {
    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        (a + b) % self.q
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        (a + self.q - b) % self.q
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        a * b % self.q
    }

    pub fn inv(&self, a: u64) -> u64 {
        assert!(a % self.q != 0, "inverse of zero in F_{}", self.q);
        pow_mod(a, self.q - 2, self.q)
    }

    pub fn from_i64(&self, v: i64) -> u64 {
        v.rem_euclid(self.q as i64) as u64
    }

    /// Smallest generator of the multiplicative group.
    pub fn primitive_root(&self) -> u64 {
        let factors = factorize(self.q - 1);
        (2..self.q)
            .find(|&g| factors.iter().all(|&(p, _)| pow_mod(g, (self.q - 1) / p, self.q) != 1))
            .unwrap_or(1)
    }

    /// Reduce rows to reduced row echelon form in place, dropping zero rows.
    /// Returns the pivot column of each remaining row.
    pub fn rref(&self, rows: &mut Vec<Vec<u64>>) -> Vec<usize> {
        let ncols = rows.first().map_or(0, Vec::len);
        let mut pivots = Vec::new();
        let mut r = 0;
        for col in 0..ncols {
            let Some(p) = (r..rows.len()).find(|&i| rows[i][col] != 0) else {
                continue;
            };
            rows.swap(r, p);
            let inv = self.inv(rows[r][col]);
            for x in rows[r].iter_mut() {
                *x = self.mul(*x, inv);
            }
            let pivot_row = rows[r].clone();
            for (i, row) in rows.iter_mut().enumerate() {
                if i != r && row[col] != 0 {
                    let f = row[col];
                    for (x, &y) in row.iter_mut().zip(&pivot_row) {
                        if y != 0 {
                            *x = self.sub(*x, self.mul(f, y));
                        }
                    }
                }
            }
            pivots.push(col);
            r += 1;
            if r == rows.len() {
                break;
            }
        }
        rows.truncate(r);
        pivots
    }

    /// Basis of `{x : M x = 0}` for a square or rectangular `M` given by rows.
    pub fn nullspace(&self, m: &[Vec<u64>]) -> Vec<Vec<u64>> {
        let ncols = m.first().map_or(0, Vec::len);
        let mut rows = m.to_vec();
        let pivots = self.rref(&mut rows);
        let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
        free.iter()
            .map(|&f| {
                let mut v = vec![0u64; ncols];
                v[f] = 1;
                for (row, &pc) in rows.iter().zip(&pivots) {
                    v[pc] = self.sub(0, row[f]);
                }
                v
            })
            .collect()
    }

    /// Characteristic polynomial `det(xI - M)`, constant term first, via
    /// reduction to upper Hessenberg form.
    pub fn charpoly(&self, m: &[Vec<u64>]) -> Vec<u64> {
        let n = m.len();
        let mut h = m.to_vec();
        for k in 1..n.saturating_sub(1) {
            let Some(i) = (k..n).find(|&i| h[i][k - 1] != 0) else {
                continue;
            };
            if i != k {
                h.swap(i, k);
                for row in h.iter_mut() {
                    row.swap(i, k);
                }
            }
            let inv = self.inv(h[k][k - 1]);
            for i in k + 1..n {
                let u = self.mul(h[i][k - 1], inv);
                if u == 0 {
                    continue;
                }
                for j in 0..n {
                    let t = self.mul(u, h[k][j]);
                    h[i][j] = self.sub(h[i][j], t);
                }
                for row in h.iter_mut() {
                    let t = self.mul(u, row[i]);
                    row[k] = self.add(row[k], t);
                }
            }
        }
        let mut polys: Vec<Vec<u64>> = vec![vec![1]];
        for m1 in 1..=n {
            let prev = &polys[m1 - 1];
            let mut p = vec![0u64; m1 + 1];
            let hmm = h[m1 - 1][m1 - 1];
            for (i, &c) in prev.iter().enumerate() {
                p[i + 1] = self.add(p[i + 1], c);
                p[i] = self.sub(p[i], self.mul(hmm, c));
            }
            let mut t = 1u64;
            for i in 1..m1 {
                t = self.mul(t, h[m1 - i][m1 - i - 1]);
                let coef = self.mul(t, h[m1 - i - 1][m1 - 1]);
                if coef == 0 {
                    continue;
                }
                for (j, &c) in polys[m1 - i - 1].iter().enumerate() {
                    p[j] = self.sub(p[j], self.mul(coef, c));
                }
            }
            polys.push(p);
        }
        polys.pop().unwrap()
    }

    pub fn eval(&self, poly: &[u64], x: u64) -> u64 {
        poly.iter().rev().fold(0, |acc, &c| self.add(self.mul(acc, x), c))
    }

    /// Distinct roots in `F_q`, ascending.
    pub fn roots(&self, poly: &[u64]) -> Vec<u64> {
        (0..self.q).filter(|&x| self.eval(poly, x) == 0).collect()
    }
}

/// Smallest prime `q ≡ 1 (mod e)` with `q > 2√n`.
pub fn dixon_prime(e: u64, n: u64) -> u64 {
    let mut q = e + 1;
    loop {
        if q * q > 4 * n && crate::numbers::is_prime(q) {
            return q;
        }
        q += e;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn det(f: &Fp, m: &[Vec<u64>]) -> u64 {
        let n = m.len();
        let mut a = m.to_vec();
        let mut d = 1;
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| a[i][c] != 0) else {
                return 0;
            };
            if p != c {
                a.swap(p, c);
                d = f.sub(0, d);
            }
            d = f.mul(d, a[c][c]);
            let inv = f.inv(a[c][c]);
            for i in c + 1..n {
                let u = f.mul(a[i][c], inv);
                for j in c..n {
                    let t = f.mul(u, a[c][j]);
                    a[i][j] = f.sub(a[i][j], t);
                }
            }
        }
        d
    }

    #[test]
    fn charpoly_matches_determinants() {
        let f = Fp { q: 101 };
        let m: Vec<Vec<u64>> = (0..5)
            .map(|i| (0..5).map(|j| ((i * 7 + j * 13 + i * j) % 101) as u64).collect())
            .collect();
        let cp = f.charpoly(&m);
        assert_eq!(cp.len(), 6);
        for x in [0u64, 1, 5, 77] {
            let shifted: Vec<Vec<u64>> = (0..5)
                .map(|i| (0..5).map(|j| {
                    let v = f.sub(0, m[i][j]);
                    if i == j { f.add(v, x) } else { v }
                }).collect())
                .collect();
            assert_eq!(f.eval(&cp, x), det(&f, &shifted));
        }
    }

    #[test]
    fn nullspace_and_rref() {
        let f = Fp { q: 7 };
        let m = vec![vec![1, 2, 3], vec![2, 4, 6]];
        let ns = f.nullspace(&m);
        assert_eq!(ns.len(), 2);
        for v in &ns {
            let s = (0..3).fold(0, |acc, j| f.add(acc, f.mul(m[0][j], v[j])));
            assert_eq!(s, 0);
        }
        assert_eq!(dixon_prime(4, 8), 13);
        assert_eq!(Fp { q: 13 }.primitive_root(), 2);
    }
}
