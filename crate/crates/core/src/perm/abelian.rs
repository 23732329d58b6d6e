use super::bitset::BitSet;
use super::group::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};
use crate::numbers::{factorize, prime_power};

/// Primary decomposition of a finite abelian group whose elements are labelled
/// `0..n` with `0` the identity.
///
/// `basis[i]` has order `orders[i]`; every label is
/// `∏ basis[i]^coords[label][i]` with `0 ≤ coords[label][i] < orders[i]`.
/// The basis is sorted by (prime, prime power).
#[derive(Debug, Clone)]
pub struct AbelianDecomposition {
    pub basis: Vec<usize>,
    pub orders: Vec<u64>,
    pub coords: Vec<Vec<u64>>,
}

impl AbelianDecomposition {
    pub fn compute(n: usize, mul: impl Fn(usize, usize) -> usize) -> Self {
        let order_of = |x: usize| {
            let mut k = 1u64;
            let mut y = x;
            while y != 0 {
                y = mul(y, x);
                k += 1;
            }
            k
        };
        let orders_all: Vec<u64> = (0..n).map(order_of).collect();
        let mut basis: Vec<(u64, u64, usize)> = Vec::new();
        for (p, _) in factorize(n as u64) {
            let sylow: Vec<usize> = (0..n)
                .filter(|&x| orders_all[x] == 1 || prime_power(orders_all[x]).is_some_and(|(q, _)| q == p))
                .collect();
            let mut span = BitSet::from_indices(n, [0]);
            while span.count() < sylow.len() {
                // pick an element of largest order meeting the span trivially
                let mut best: Option<(u64, usize)> = None;
                for &x in &sylow {
                    let o = orders_all[x];
                    if best.is_some_and(|(bo, _)| bo >= o) {
                        continue;
                    }
                    let mut y = x;
                    let mut meets = false;
                    for _ in 1..o {
                        if span.contains(y) {
                            meets = true;
                            break;
                        }
                        y = mul(y, x);
                    }
                    if !meets {
                        best = Some((o, x));
                    }
                }
                let (o, x) = best.expect("an abelian p-group splits off a cyclic factor");
                let old: Vec<usize> = span.iter().collect();
                let mut power = x;
                for _ in 1..o {
                    for &w in &old {
                        span.insert(mul(w, power));
                    }
                    power = mul(power, x);
                }
                basis.push((p, o, x));
            }
            assert_eq!(span.count(), sylow.len(), "greedy basis must span the Sylow subgroup");
        }
        basis.sort_by_key(|&(p, o, x)| (p, o, x));
        let orders: Vec<u64> = basis.iter().map(|b| b.1).collect();
        let basis: Vec<usize> = basis.iter().map(|b| b.2).collect();

        let mut tuples: Vec<(usize, Vec<u64>)> = vec![(0, Vec::new())];
        for (&b, &o) in basis.iter().zip(&orders) {
            let mut next = Vec::with_capacity(tuples.len() * o as usize);
            for (x, c) in &tuples {
                let mut y = *x;
                for k in 0..o {
                    let mut c2 = c.clone();
                    c2.push(k);
                    next.push((y, c2));
                    y = mul(y, b);
                }
            }
            tuples = next;
        }
        let mut coords = vec![Vec::new(); n];
        for (x, c) in tuples {
            coords[x] = c;
        }
        AbelianDecomposition {
            basis,
            orders,
            coords,
        }
    }

    pub fn invariants(&self) -> Vec<u64> {
        self.orders.clone()
    }

    pub fn rank(&self) -> usize {
        self.orders.len()
    }
}

/// Decomposition of an abelian subgroup, labelling its elements in increasing
/// index order. Returns the decomposition and the label-to-element map.
pub fn decompose_subgroup(
    group: &FiniteGroup,
    a: &Subgroup,
) -> Result<(AbelianDecomposition, Vec<usize>)> {
    let elems: Vec<usize> = a.elements.iter().collect();
    for &x in &a.generators {
        for &y in &a.generators {
            if group.mul(x, y) != group.mul(y, x) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let mut label = vec![usize::MAX; group.order()];
    for (i, &e) in elems.iter().enumerate() {
        label[e] = i;
    }
    let d = AbelianDecomposition::compute(elems.len(), |x, y| label[group.mul(elems[x], elems[y])]);
    Ok((d, elems))
}

/// Decomposition of `G/N` for normal `N` with abelian quotient.
/// Returns the decomposition and the coset label of every element of `G`.
pub fn decompose_quotient(
    group: &FiniteGroup,
    n: &Subgroup,
) -> Result<(AbelianDecomposition, Vec<usize>)> {
    if !group.is_normal(n) {
        return Err(Error::NotNormal);
    }
    let gens = group.generator_indices();
    for &x in gens {
        for &y in gens {
            if !n.contains(group.commutator(x, y)) {
                return Err(Error::NotAbelian);
            }
        }
    }
    let mut label = vec![usize::MAX; group.order()];
    let mut reps = Vec::new();
    for g in 0..group.order() {
        if label[g] != usize::MAX {
            continue;
        }
        let id = reps.len();
        reps.push(g);
        for m in n.elements.iter() {
            label[group.mul(g, m)] = id;
        }
    }
    let d = AbelianDecomposition::compute(reps.len(), |x, y| label[group.mul(reps[x], reps[y])]);
    Ok((d, label))
}

/// Primary invariants of an abelian subgroup, sorted by (prime, power).
pub fn abelian_invariants(group: &FiniteGroup, a: &Subgroup) -> Result<Vec<u64>> {
    Ok(decompose_subgroup(group, a)?.0.invariants())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyclic_product(orders: &[usize]) -> (usize, impl Fn(usize, usize) -> usize + '_) {
        let n: usize = orders.iter().product();
        let mul = move |a: usize, b: usize| {
            let (mut a, mut b, mut out, mut scale) = (a, b, 0, 1);
            for &m in orders {
                out += ((a % m + b % m) % m) * scale;
                a /= m;
                b /= m;
                scale *= m;
            }
            out
        };
        (n, mul)
    }

    #[test]
    fn cyclic_12_splits_as_4_3() {
        let (n, mul) = cyclic_product(&[12]);
        let d = AbelianDecomposition::compute(n, mul);
        assert_eq!(d.invariants(), vec![4, 3]);
    }

    #[test]
    fn coordinates_are_consistent() {
        let orders = [6, 4, 2];
        let (n, mul) = cyclic_product(&orders);
        let d = AbelianDecomposition::compute(n, &mul);
        assert_eq!(d.invariants(), vec![2, 2, 4, 3]);
        for x in 0..n {
            let mut acc = 0;
            for (i, &c) in d.coords[x].iter().enumerate() {
                for _ in 0..c {
                    acc = mul(acc, d.basis[i]);
                }
            }
            assert_eq!(acc, x);
        }
    }

    #[test]
    fn trivial_group_has_no_invariants() {
        let d = AbelianDecomposition::compute(1, |_, _| 0);
        assert!(d.invariants().is_empty());
        assert_eq!(d.coords, vec![Vec::<u64>::new()]);
    }
}
