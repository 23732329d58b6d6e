use super::modp::{dixon_prime, Fp};
use super::table::{Character, CharacterTable, Provenance};
use crate::cyclo::Cyclotomic;
use crate::error::{Error, Result};
use crate::perm::FiniteGroup;

pub const DEFAULT_DIXON_BOUND: usize = 4000;

/// `(A_j)[i][l] = #{x ∈ C_j : x⁻¹ z_l ∈ C_i}` where `z_l` represents class `l`.
/// The vector of central character values is a right eigenvector of `A_j`.
fn class_matrix(group: &FiniteGroup, j: usize, f: &Fp) -> Vec<Vec<u64>> {
    let classes = group.classes();
    let k = classes.len();
    let mut m = vec![vec![0u64; k]; k];
    for &x in &classes[j].members {
        let xi = group.inv(x);
        for (l, cl) in classes.iter().enumerate() {
            let i = group.class_of(group.mul(xi, cl.representative));
            m[i][l] += 1;
        }
    }
    for row in m.iter_mut() {
        for v in row.iter_mut() {
            *v %= f.q;
        }
    }
    m
}

fn mat_vec(f: &Fp, m: &[Vec<u64>], v: &[u64]) -> Vec<u64> {
    m.iter()
        .map(|row| {
            row.iter()
                .zip(v)
                .fold(0u64, |acc, (&a, &b)| if a == 0 || b == 0 { acc } else { f.add(acc, f.mul(a, b)) })
        })
        .collect()
}

/// `σ` with `m e_l = e_{σ(l)}` when `m` is a permutation matrix.
fn as_permutation(m: &[Vec<u64>]) -> Option<Vec<usize>> {
    let k = m.len();
    let mut sigma = vec![usize::MAX; k];
    let mut hit = vec![false; k];
    for (i, row) in m.iter().enumerate() {
        for (l, &v) in row.iter().enumerate() {
            match v {
                0 => {}
                1 if sigma[l] == usize::MAX && !hit[i] => {
                    sigma[l] = i;
                    hit[i] = true;
                }
                _ => return None,
            }
        }
    }
    sigma.iter().all(|&i| i != usize::MAX).then_some(sigma)
}

/// Eigenspaces of a permutation matrix on the whole space, one cycle at a
/// time: on a cycle `x, σx, …` of length `L`, `Σ_t λ^{-t} e_{σ^t x}` is an
/// eigenvector for each `L`-th root of unity `λ`.
fn permutation_eigenspaces(f: &Fp, sigma: &[usize], zeta: u64, e: u64) -> Vec<Space> {
    let k = sigma.len();
    let mut seen = vec![false; k];
    let mut by_value: std::collections::BTreeMap<u64, Vec<Vec<u64>>> = Default::default();
    for x in 0..k {
        if seen[x] {
            continue;
        }
        let mut cycle = vec![x];
        seen[x] = true;
        let mut y = sigma[x];
        while y != x {
            seen[y] = true;
            cycle.push(y);
            y = sigma[y];
        }
        let len = cycle.len() as u64;
        let omega = crate::numbers::pow_mod(zeta, e / len, f.q);
        let mut lambda = 1u64;
        for _ in 0..len {
            let step = f.inv(lambda);
            let mut v = vec![0u64; k];
            let mut w = 1u64;
            for &c in &cycle {
                v[c] = w;
                w = f.mul(w, step);
            }
            by_value.entry(lambda).or_default().push(v);
            lambda = f.mul(lambda, omega);
        }
    }
    by_value.into_values().map(|vs| Space::new(f, vs)).collect()
}

/// A subspace kept as an RREF basis; coordinates of a member are its entries
/// at the pivot columns.
struct Space {
    basis: Vec<Vec<u64>>,
    pivots: Vec<usize>,
}

impl Space {
    fn new(f: &Fp, mut basis: Vec<Vec<u64>>) -> Space {
        let pivots = f.rref(&mut basis);
        Space { basis, pivots }
    }

    fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Split by the eigenspaces of `m` restricted to this (invariant) space.
    fn split(&self, f: &Fp, m: &[Vec<u64>]) -> Result<Vec<Space>> {
        let d = self.dim();
        let images: Vec<Vec<u64>> = self.basis.iter().map(|b| mat_vec(f, m, b)).collect();
        // restricted[r][c]: coordinate r of the image of basis vector c
        let restricted: Vec<Vec<u64>> = (0..d)
            .map(|r| (0..d).map(|c| images[c][self.pivots[r]]).collect())
            .collect();
        let roots = f.roots(&f.charpoly(&restricted));
        if roots.len() <= 1 {
            return Ok(vec![Space {
                basis: self.basis.clone(),
                pivots: self.pivots.clone(),
            }]);
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for lambda in roots {
            let shifted: Vec<Vec<u64>> = (0..d)
                .map(|r| {
                    (0..d)
                        .map(|c| {
                            let v = restricted[r][c];
                            if r == c {
                                f.sub(v, lambda)
                            } else {
                                v
                            }
                        })
                        .collect()
                })
                .collect();
            let kernel = f.nullspace(&shifted);
            total += kernel.len();
            let vectors: Vec<Vec<u64>> = kernel
                .iter()
                .map(|u| {
                    let mut v = vec![0u64; self.basis[0].len()];
                    for (coef, b) in u.iter().zip(&self.basis) {
                        if *coef != 0 {
                            for (x, &y) in v.iter_mut().zip(b) {
                                *x = f.add(*x, f.mul(*coef, y));
                            }
                        }
                    }
                    v
                })
                .collect();
            parts.push(Space::new(f, vectors));
        }
        if total != d {
            return Err(Error::LiftingFailure(format!(
                "class matrix not diagonalizable on a {d}-dimensional space"
            )));
        }
        Ok(parts)
    }
}

/// Character table by the Burnside–Dixon method: simultaneous eigenvectors of
/// the class matrices over `F_q`, then lifting of each value to `Q(ζ_e)`
/// through power maps. The result is verified exactly before it is returned.
pub fn dixon_table(group: &FiniteGroup, bound: usize) -> Result<CharacterTable> {
    if group.order() > bound {
        return Err(Error::BoundExceeded {
            what: "character table",
            size: group.order(),
            bound,
        });
    }
    let n = group.order() as u64;
    let e = group.exponent();
    let f = Fp { q: dixon_prime(e, n) };
    let classes = group.classes();
    let k = classes.len();

    let mut order: Vec<usize> = (1..k).collect();
    order.sort_by_key(|&j| (classes[j].size(), j));
    let identity: Vec<Vec<u64>> = (0..k)
        .map(|i| (0..k).map(|j| u64::from(i == j)).collect())
        .collect();
    let zeta = crate::numbers::pow_mod(f.primitive_root(), (f.q - 1) / e, f.q);
    let mut spaces = vec![Space::new(&f, identity)];
    let mut whole = true;
    for &j in &order {
        if spaces.iter().all(|s| s.dim() == 1) {
            break;
        }
        let m = class_matrix(group, j, &f);
        if whole {
            if let Some(sigma) = as_permutation(&m) {
                spaces = permutation_eigenspaces(&f, &sigma, zeta, e);
                whole = false;
                continue;
            }
        }
        whole = false;
        let mut next = Vec::new();
        for s in &spaces {
            if s.dim() == 1 {
                next.push(Space {
                    basis: s.basis.clone(),
                    pivots: s.pivots.clone(),
                });
            } else {
                next.extend(s.split(&f, &m)?);
            }
        }
        spaces = next;
    }
    if spaces.len() != k {
        return Err(Error::LiftingFailure(format!(
            "found {} simultaneous eigenspaces for {k} classes",
            spaces.len()
        )));
    }

    let sizes: Vec<u64> = classes.iter().map(|c| c.size() as u64).collect();
    let inverse_class: Vec<usize> = classes
        .iter()
        .map(|c| group.class_of(group.inv(c.representative)))
        .collect();
    // power maps: class of g^t for each class representative g and t < o(g)
    let powers: Vec<Vec<usize>> = classes
        .iter()
        .map(|c| {
            let g = c.representative;
            let o = group.element_order(g) as usize;
            let mut out = Vec::with_capacity(o);
            let mut x = group.identity();
            for _ in 0..o {
                out.push(group.class_of(x));
                x = group.mul(x, g);
            }
            out
        })
        .collect();
    let max_degree = (n as f64).sqrt() as u64 + 1;
    let mut log: Vec<Option<u64>> = vec![None; f.q as usize];
    let mut x = 1u64;
    for j in 0..e {
        log[x as usize] = Some(j);
        x = f.mul(x, zeta);
    }

    let mut chars = Vec::with_capacity(k);
    for s in &spaces {
        let v = &s.basis[0];
        if v[0] == 0 {
            return Err(Error::LiftingFailure("eigenvector vanishes at the identity".into()));
        }
        let inv0 = f.inv(v[0]);
        let omega: Vec<u64> = v.iter().map(|&x| f.mul(x, inv0)).collect();
        let mut sum = 0u64;
        for l in 0..k {
            let t = f.mul(omega[l], omega[inverse_class[l]]);
            sum = f.add(sum, f.mul(t, f.inv(sizes[l] % f.q)));
        }
        if sum == 0 {
            return Err(Error::LiftingFailure("degree normalization is zero".into()));
        }
        let d2 = f.mul(n % f.q, f.inv(sum));
        let degree = (1..=max_degree)
            .find(|&d| d * d % f.q == d2 && n % d == 0)
            .ok_or_else(|| Error::LiftingFailure("no integer degree matches".into()))?;
        let chi_mod: Vec<u64> = (0..k)
            .map(|l| f.mul(f.mul(omega[l], degree % f.q), f.inv(sizes[l] % f.q)))
            .collect();

        let mut values = Vec::with_capacity(k);
        for (l, pm) in powers.iter().enumerate() {
            let o = pm.len() as u64;
            let step = e / o;
            if degree == 1 {
                // a linear character takes a single e-th root of unity
                let j = log[chi_mod[l] as usize].ok_or_else(|| {
                    Error::LiftingFailure(format!("value on class {l} is not a root of unity"))
                })?;
                values.push(Cyclotomic::root_of_unity(e as u32, j as i64));
                continue;
            }
            let z_o = crate::numbers::pow_mod(zeta, step, f.q);
            let inv_o = f.inv(o % f.q);
            let mut terms = Vec::new();
            let mut found = 0u64;
            for j in 0..o {
                if found == degree {
                    break;
                }
                // m_j = o⁻¹ Σ_t χ(g^t) ζ_o^{-jt}
                let mut acc = 0u64;
                let zj_inv = f.inv(crate::numbers::pow_mod(z_o, j, f.q));
                let mut w = 1u64;
                for &c in pm {
                    acc = f.add(acc, f.mul(chi_mod[c], w));
                    w = f.mul(w, zj_inv);
                }
                let mj = f.mul(acc, inv_o);
                if mj > degree - found {
                    return Err(Error::LiftingFailure(format!(
                        "eigenvalue multiplicity {mj} exceeds degree {degree} on class {l}"
                    )));
                }
                if mj != 0 {
                    found += mj;
                    terms.push(((j * step) as u32, mj as i64));
                }
            }
            if found != degree {
                return Err(Error::LiftingFailure(format!(
                    "eigenvalue multiplicities on class {l} sum to {found}, not {degree}"
                )));
            }
            values.push(Cyclotomic::from_exponent_terms(e as u32, &terms));
        }
        chars.push(Character { values });
    }
    let table = CharacterTable::new(group, chars, Provenance::Dixon);
    table.verify()?;
    Ok(table)
}
