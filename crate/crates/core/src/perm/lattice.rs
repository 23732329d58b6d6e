use std::collections::HashSet;

use super::bitset::BitSet;
use super::group::{FiniteGroup, Subgroup};
use crate::error::{Error, Result};

/// Default order bound for subgroup enumeration.
pub const DEFAULT_SUBGROUP_BOUND: usize = 512;

/// One generator for each cyclic subgroup, the smallest element index
/// generating it. The identity is skipped.
pub fn cyclic_generators(group: &FiniteGroup) -> Vec<usize> {
    let mut seen: HashSet<BitSet> = HashSet::new();
    let mut out = Vec::new();
    for g in 1..group.order() {
        let c = group.closure(&[g]);
        if seen.insert(c.elements) {
            out.push(g);
        }
    }
    out
}

/// All subgroups, one representative per conjugacy class, built layer by layer
/// from the trivial group by adjoining cyclic generators. Each representative
/// is the smallest element set in its class; the list is sorted by
/// (order, element set).
pub fn subgroups_up_to_conjugacy(group: &FiniteGroup, bound: usize) -> Result<Vec<Subgroup>> {
    if group.order() > bound {
        return Err(Error::BoundExceeded {
            what: "subgroup enumeration",
            size: group.order(),
            bound,
        });
    }
    let abelian = group.is_abelian();
    let cyclic = cyclic_generators(group);
    let mut seen: HashSet<BitSet> = HashSet::new();
    let trivial = group.trivial_subgroup();
    seen.insert(trivial.elements.clone());
    let mut reps = vec![trivial.clone()];
    let mut layer = vec![trivial];
    while !layer.is_empty() {
        let mut next = Vec::new();
        for h in &layer {
            for &c in &cyclic {
                if h.contains(c) {
                    continue;
                }
                let k = group.extend(h, &[c]);
                if seen.contains(&k.elements) {
                    continue;
                }
                let orbit = if abelian {
                    vec![k.elements.clone()]
                } else {
                    conjugacy_orbit(group, &k.elements)
                };
                let min = orbit.iter().min().unwrap().clone();
                seen.extend(orbit);
                let rep = if min == k.elements {
                    k
                } else {
                    group.subgroup_from_elements(min)
                };
                next.push(rep);
            }
        }
        reps.extend(next.iter().cloned());
        layer = next;
    }
    reps.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    Ok(reps)
}

/// All distinct conjugates of an element set.
pub fn conjugacy_orbit(group: &FiniteGroup, set: &BitSet) -> Vec<BitSet> {
    let mut orbit = vec![set.clone()];
    let mut seen: HashSet<BitSet> = HashSet::from([set.clone()]);
    let mut head = 0;
    while head < orbit.len() {
        let cur = orbit[head].clone();
        head += 1;
        for &x in group.generator_indices() {
            let c = group.conjugate_set(&cur, x);
            if seen.insert(c.clone()) {
                orbit.push(c);
            }
        }
    }
    orbit
}

/// All normal subgroups, sorted by (order, element set).
pub fn normal_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let reps: Vec<usize> = group.classes().iter().map(|c| c.representative).collect();
    let trivial = group.trivial_subgroup();
    let mut seen: HashSet<BitSet> = HashSet::from([trivial.elements.clone()]);
    let mut all = vec![trivial];
    let mut head = 0;
    while head < all.len() {
        let n = all[head].clone();
        head += 1;
        for &r in &reps {
            if n.contains(r) {
                continue;
            }
            let mut seeds = n.generators.clone();
            seeds.push(r);
            let m = group.normal_closure(&seeds);
            if seen.insert(m.elements.clone()) {
                all.push(m);
            }
        }
    }
    all.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    all
}

/// Minimal normal subgroups: normal closures of single elements containing no
/// smaller nontrivial normal subgroup.
pub fn minimal_normal_subgroups(group: &FiniteGroup) -> Vec<Subgroup> {
    let mut closures: Vec<Subgroup> = Vec::new();
    let mut seen: HashSet<BitSet> = HashSet::new();
    for c in group.classes().iter().skip(1) {
        let m = group.normal_closure(&[c.representative]);
        if seen.insert(m.elements.clone()) {
            closures.push(m);
        }
    }
    let minimal: Vec<Subgroup> = closures
        .iter()
        .filter(|m| {
            !closures
                .iter()
                .any(|o| o.order() < m.order() && o.is_subgroup_of(m))
        })
        .cloned()
        .collect();
    let mut minimal = minimal;
    minimal.sort_by(|a, b| (a.order(), &a.elements).cmp(&(b.order(), &b.elements)));
    minimal
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn group(degree: usize, gens: &[&str]) -> FiniteGroup {
        let gens = gens
            .iter()
            .map(|g| Permutation::parse_cycles(degree, g).unwrap())
            .collect();
        FiniteGroup::from_generators(degree, gens).unwrap()
    }

    #[test]
    fn prime_cyclic_has_two_subgroups() {
        let g = group(5, &["(1,2,3,4,5)"]);
        assert_eq!(subgroups_up_to_conjugacy(&g, 512).unwrap().len(), 2);
    }

    #[test]
    fn s3_has_four_classes() {
        let g = group(3, &["(1,2,3)", "(1,2)"]);
        let subs = subgroups_up_to_conjugacy(&g, 512).unwrap();
        let orders: Vec<usize> = subs.iter().map(Subgroup::order).collect();
        assert_eq!(orders, vec![1, 2, 3, 6]);
        assert_eq!(normal_subgroups(&g).len(), 3);
        assert_eq!(minimal_normal_subgroups(&g).len(), 1);
    }

    #[test]
    fn bound_is_enforced() {
        let g = group(4, &["(1,2,3,4)", "(1,2)"]);
        assert!(matches!(
            subgroups_up_to_conjugacy(&g, 10),
            Err(Error::BoundExceeded { .. })
        ));
    }
}
