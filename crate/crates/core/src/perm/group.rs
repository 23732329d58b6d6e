use std::collections::{HashSet, VecDeque};

use num_integer::Integer;

use super::bitset::BitSet;
use super::permutation::Permutation;
use crate::error::{Error, Result};

/// Groups up to this order get a full multiplication table.
const TABLE_LIMIT: usize = 4096;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct GroupConfig {
    pub closure_bound: usize,
}

impl Default for GroupConfig {
    fn default() -> Self {
        GroupConfig {
            closure_bound: 20_000,
        }
    }
}

#[derive(Debug, Clone)]
pub struct ConjugacyClass {
    pub representative: usize,
    pub members: Vec<usize>,
}

impl ConjugacyClass {
    pub fn size(&self) -> usize {
        self.members.len()
    }
}

/// A subgroup given by its element indices in the ambient group.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Subgroup {
    pub elements: BitSet,
    pub generators: Vec<usize>,
}

impl Subgroup {
    pub fn order(&self) -> usize {
        self.elements.count()
    }

    pub fn contains(&self, g: usize) -> bool {
        self.elements.contains(g)
    }

    pub fn index_in(&self, group: &FiniteGroup) -> usize {
        group.order() / self.order()
    }

    pub fn is_trivial(&self) -> bool {
        self.order() == 1
    }

    pub fn is_subgroup_of(&self, other: &Subgroup) -> bool {
        self.elements.is_subset(&other.elements)
    }
}

/// A permutation group with all elements and conjugacy classes enumerated.
///
/// Elements are sorted lexicographically by image list, so the identity is
/// element 0. Classes are ordered by their smallest member, so the identity
/// class comes first.
#[derive(Debug, Clone)]
pub struct FiniteGroup {
    degree: usize,
    generators: Vec<Permutation>,
    elements: Vec<Permutation>,
    gen_indices: Vec<usize>,
    table: Option<Vec<u16>>,
    inverses: Vec<usize>,
    orders: Vec<u64>,
    classes: Vec<ConjugacyClass>,
    class_of: Vec<usize>,
    exponent: u64,
}

impl FiniteGroup {
    pub fn from_generators(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        Self::with_config(degree, generators, GroupConfig::default())
    }

    pub fn with_config(
        degree: usize,
        generators: Vec<Permutation>,
        config: GroupConfig,
    ) -> Result<Self> {
        for g in &generators {
            if g.degree() != degree {
                return Err(Error::InvalidPermutation(format!(
                    "generator {g} has degree {} but the group has degree {degree}",
                    g.degree()
                )));
            }
        }
        let identity = Permutation::identity(degree);
        let mut seen: HashSet<Permutation> = HashSet::new();
        seen.insert(identity.clone());
        let mut queue = VecDeque::from([identity]);
        while let Some(x) = queue.pop_front() {
            for s in &generators {
                let y = x.compose(s);
                if !seen.contains(&y) {
                    if seen.len() >= config.closure_bound {
                        return Err(Error::ClosureBoundExceeded {
                            bound: config.closure_bound,
                        });
                    }
                    seen.insert(y.clone());
                    queue.push_back(y);
                }
            }
        }
        let mut elements: Vec<Permutation> = seen.into_iter().collect();
        elements.sort();
        Ok(Self::from_sorted_elements(degree, generators, elements))
    }

    fn from_sorted_elements(
        degree: usize,
        generators: Vec<Permutation>,
        elements: Vec<Permutation>,
    ) -> Self {
        let n = elements.len();
        let find = |p: &Permutation| elements.binary_search(p).expect("closed set");
        let gen_indices: Vec<usize> = generators.iter().map(find).collect();
        let inverses: Vec<usize> = elements.iter().map(|p| find(&p.inverse())).collect();
        let orders: Vec<u64> = elements.iter().map(Permutation::order).collect();
        let exponent = orders.iter().fold(1u64, |a, &o| a.lcm(&o));

        let table = (n <= TABLE_LIMIT).then(|| {
            // right multiplication by each generator, then fill row by row
            // along a breadth-first spanning tree of words in the generators
            let right: Vec<Vec<usize>> = generators
                .iter()
                .map(|s| elements.iter().map(|x| find(&x.compose(s))).collect())
                .collect();
            let mut parent = vec![usize::MAX; n];
            let mut via = vec![0usize; n];
            let mut order = Vec::with_capacity(n);
            let mut seen = vec![false; n];
            seen[0] = true;
            order.push(0);
            let mut head = 0;
            while head < order.len() {
                let x = order[head];
                head += 1;
                for (si, r) in right.iter().enumerate() {
                    let y = r[x];
                    if !seen[y] {
                        seen[y] = true;
                        parent[y] = x;
                        via[y] = si;
                        order.push(y);
                    }
                }
            }
            let mut t = vec![0u16; n * n];
            for i in 0..n {
                t[i * n] = i as u16;
            }
            for &j in order.iter().skip(1) {
                let (pj, sj) = (parent[j], via[j]);
                for i in 0..n {
                    let ip = t[i * n + pj] as usize;
                    t[i * n + j] = right[sj][ip] as u16;
                }
            }
            t
        });

        let mut g = FiniteGroup {
            degree,
            generators,
            elements,
            gen_indices,
            table,
            inverses,
            orders,
            classes: Vec::new(),
            class_of: Vec::new(),
            exponent,
        };
        g.compute_classes();
        g
    }

    fn compute_classes(&mut self) {
        let n = self.order();
        let mut class_of = vec![usize::MAX; n];
        let mut classes = Vec::new();
        for start in 0..n {
            if class_of[start] != usize::MAX {
                continue;
            }
            let ci = classes.len();
            class_of[start] = ci;
            let mut members = vec![start];
            let mut head = 0;
            while head < members.len() {
                let x = members[head];
                head += 1;
                for &s in &self.gen_indices {
                    let y = self.conjugate(x, s);
                    if class_of[y] == usize::MAX {
                        class_of[y] = ci;
                        members.push(y);
                    }
                }
            }
            members.sort_unstable();
            classes.push(ConjugacyClass {
                representative: start,
                members,
            });
        }
        self.classes = classes;
        self.class_of = class_of;
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn order(&self) -> usize {
        self.elements.len()
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    /// Generators as element indices.
    pub fn generator_indices(&self) -> &[usize] {
        &self.gen_indices
    }

    pub fn elements(&self) -> &[Permutation] {
        &self.elements
    }

    pub fn element(&self, i: usize) -> &Permutation {
        &self.elements[i]
    }

    pub fn index_of(&self, p: &Permutation) -> Option<usize> {
        self.elements.binary_search(p).ok()
    }

    pub fn identity(&self) -> usize {
        0
    }

    pub fn classes(&self) -> &[ConjugacyClass] {
        &self.classes
    }

    pub fn class_of(&self, g: usize) -> usize {
        self.class_of[g]
    }

    pub fn exponent(&self) -> u64 {
        self.exponent
    }

    pub fn element_order(&self, g: usize) -> u64 {
        self.orders[g]
    }

    #[inline]
    pub fn mul(&self, a: usize, b: usize) -> usize {
        match &self.table {
            Some(t) => t[a * self.order() + b] as usize,
            None => self
                .index_of(&self.elements[a].compose(&self.elements[b]))
                .expect("closed under products"),
        }
    }

    #[inline]
    pub fn inv(&self, a: usize) -> usize {
        self.inverses[a]
    }

    /// `g^x = x⁻¹ g x`.
    #[inline]
    pub fn conjugate(&self, g: usize, x: usize) -> usize {
        self.mul(self.mul(self.inverses[x], g), x)
    }

    /// `[a, b] = a⁻¹ b⁻¹ a b`.
    pub fn commutator(&self, a: usize, b: usize) -> usize {
        let ab = self.mul(a, b);
        let ba = self.mul(b, a);
        self.mul(self.inverses[ba], ab)
    }

    pub fn pow(&self, g: usize, e: u64) -> usize {
        let e = e % self.orders[g];
        let mut acc = 0;
        for _ in 0..e {
            acc = self.mul(acc, g);
        }
        acc
    }

    pub fn is_abelian(&self) -> bool {
        let gens = &self.gen_indices;
        gens.iter()
            .all(|&a| gens.iter().all(|&b| self.mul(a, b) == self.mul(b, a)))
    }

    pub fn whole(&self) -> Subgroup {
        Subgroup {
            elements: BitSet::full(self.order()),
            generators: self.gen_indices.clone(),
        }
    }

    pub fn trivial_subgroup(&self) -> Subgroup {
        Subgroup {
            elements: BitSet::from_indices(self.order(), [0]),
            generators: Vec::new(),
        }
    }

    /// Subgroup generated by the given elements.
    pub fn closure(&self, gens: &[usize]) -> Subgroup {
        let mut elements = BitSet::from_indices(self.order(), [0]);
        let mut list = vec![0];
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in gens {
                let y = self.mul(x, s);
                if elements.insert(y) {
                    list.push(y);
                }
            }
        }
        let mut generators: Vec<usize> = gens.iter().copied().filter(|&g| g != 0).collect();
        generators.sort_unstable();
        generators.dedup();
        Subgroup {
            elements,
            generators,
        }
    }

    /// Extend `base` (a subgroup) by further generators.
    pub fn extend(&self, base: &Subgroup, extra: &[usize]) -> Subgroup {
        let mut gens = base.generators.clone();
        gens.extend(extra.iter().copied().filter(|&g| !base.contains(g)));
        if gens.len() == base.generators.len() {
            return base.clone();
        }
        let mut elements = base.elements.clone();
        let mut list: Vec<usize> = elements.iter().collect();
        let mut head = 0;
        while head < list.len() {
            let x = list[head];
            head += 1;
            for &s in &gens {
                let y = self.mul(x, s);
                if elements.insert(y) {
                    list.push(y);
                }
            }
        }
        Subgroup {
            elements,
            generators: gens,
        }
    }

    /// Wrap an element set already known to be a subgroup, choosing a small
    /// generating set greedily.
    pub fn subgroup_from_elements(&self, elements: BitSet) -> Subgroup {
        let mut current = self.trivial_subgroup();
        for g in elements.iter() {
            if !current.contains(g) {
                current = self.extend(&current, &[g]);
            }
        }
        debug_assert_eq!(current.elements, elements);
        current
    }

    pub fn is_normal(&self, h: &Subgroup) -> bool {
        h.generators.iter().all(|&a| {
            self.gen_indices
                .iter()
                .all(|&x| h.contains(self.conjugate(a, x)))
        })
    }

    /// Smallest normal subgroup containing the given elements.
    pub fn normal_closure(&self, seeds: &[usize]) -> Subgroup {
        let mut h = self.closure(seeds);
        loop {
            let extra: Vec<usize> = h
                .generators
                .iter()
                .flat_map(|&a| self.gen_indices.iter().map(move |&x| (a, x)))
                .map(|(a, x)| self.conjugate(a, x))
                .filter(|&c| !h.contains(c))
                .collect();
            if extra.is_empty() {
                return h;
            }
            h = self.extend(&h, &extra);
        }
    }

    /// `[A, B]` for normal subgroups `A` and `B`.
    pub fn commutator_subgroup(&self, a: &Subgroup, b: &Subgroup) -> Subgroup {
        let seeds: Vec<usize> = a
            .generators
            .iter()
            .flat_map(|&x| b.generators.iter().map(move |&y| (x, y)))
            .map(|(x, y)| self.commutator(x, y))
            .filter(|&c| c != 0)
            .collect();
        self.normal_closure(&seeds)
    }

    pub fn derived_subgroup(&self) -> Subgroup {
        self.commutator_subgroup(&self.whole(), &self.whole())
    }

    pub fn center(&self) -> Subgroup {
        let bits = BitSet::from_indices(
            self.order(),
            self.classes
                .iter()
                .filter(|c| c.size() == 1)
                .map(|c| c.representative),
        );
        self.subgroup_from_elements(bits)
    }

    /// `G = G_1 ≥ G_2 ≥ …` until the series stabilizes.
    pub fn lower_central_series(&self) -> Vec<Subgroup> {
        let g = self.whole();
        let mut series = vec![g.clone()];
        loop {
            let next = self.commutator_subgroup(series.last().unwrap(), &g);
            if next.elements == series.last().unwrap().elements {
                return series;
            }
            let done = next.is_trivial();
            series.push(next);
            if done {
                return series;
            }
        }
    }

    /// `Z_i(G)`, with `Z_0 = 1` and `Z_1 = Z(G)`.
    pub fn upper_central_term(&self, i: usize) -> Subgroup {
        let mut z = self.trivial_subgroup();
        for _ in 0..i {
            let bits = BitSet::from_indices(
                self.order(),
                (0..self.order()).filter(|&g| {
                    self.gen_indices
                        .iter()
                        .all(|&x| z.contains(self.commutator(g, x)))
                }),
            );
            if bits == z.elements {
                break;
            }
            z = self.subgroup_from_elements(bits);
        }
        z
    }

    /// Nilpotency class, or `None` when the lower central series stalls above 1.
    pub fn nilpotency_class(&self) -> Option<usize> {
        let series = self.lower_central_series();
        if series.last().unwrap().is_trivial() {
            Some(series.len() - 1)
        } else {
            None
        }
    }

    /// Largest normal subgroup contained in `h`: the union of the classes inside it.
    pub fn normal_core(&self, h: &Subgroup) -> Subgroup {
        let bits = self.core_bits(&h.elements);
        if bits == h.elements {
            return h.clone();
        }
        self.subgroup_from_elements(bits)
    }

    pub(crate) fn core_bits(&self, h: &BitSet) -> BitSet {
        BitSet::from_indices(
            self.order(),
            self.classes
                .iter()
                .filter(|c| c.members.iter().all(|&m| h.contains(m)))
                .flat_map(|c| c.members.iter().copied()),
        )
    }

    /// Core computed as the intersection of all conjugates of `h`.
    pub fn core_by_conjugates(&self, h: &Subgroup) -> BitSet {
        let mut acc = h.elements.clone();
        for x in 0..self.order() {
            acc.intersect_with(&self.conjugate_set(&h.elements, x));
        }
        acc
    }

    pub fn conjugate_set(&self, set: &BitSet, x: usize) -> BitSet {
        BitSet::from_indices(self.order(), set.iter().map(|g| self.conjugate(g, x)))
    }

    pub fn class_indices_in(&self, set: &BitSet) -> Vec<usize> {
        (0..self.classes.len())
            .filter(|&c| set.contains(self.classes[c].representative))
            .collect()
    }

    /// Whether `(G, N)` is a Camina pair: every `g ∉ N` satisfies `gN ⊆ Cl(g)`.
    /// For `N = G` the condition is vacuous and the answer is `true`.
    pub fn is_camina_pair(&self, n: &Subgroup) -> Result<bool> {
        if !self.is_normal(n) {
            return Err(Error::NotNormal);
        }
        Ok(self.camina_condition(n))
    }

    pub(crate) fn camina_condition(&self, n: &Subgroup) -> bool {
        let nsize = n.order();
        (0..self.order()).filter(|&g| !n.contains(g)).all(|g| {
            let cl = self.class_of[g];
            self.classes[cl].size() >= nsize
                && n.elements.iter().all(|m| self.class_of[self.mul(g, m)] == cl)
        })
    }

    /// Direct product acting on disjoint point sets.
    pub fn direct_product(&self, other: &FiniteGroup, config: GroupConfig) -> Result<FiniteGroup> {
        let total = self.degree + other.degree;
        let mut gens: Vec<Permutation> = self
            .generators
            .iter()
            .map(|g| g.shifted(0, total))
            .collect();
        gens.extend(other.generators.iter().map(|g| g.shifted(self.degree, total)));
        let size = self.order() * other.order();
        if size > config.closure_bound {
            return Err(Error::ClosureBoundExceeded {
                bound: config.closure_bound,
            });
        }
        FiniteGroup::with_config(total, gens, config)
    }

    /// Regular permutation representation of an abstract group given by its
    /// multiplication on `0..n`, with element 0 the identity.
    pub fn from_cayley(
        n: usize,
        generators: &[usize],
        mul: impl Fn(usize, usize) -> usize,
        config: GroupConfig,
    ) -> Result<FiniteGroup> {
        if n > config.closure_bound {
            return Err(Error::ClosureBoundExceeded {
                bound: config.closure_bound,
            });
        }
        let perms = generators
            .iter()
            .map(|&s| Permutation::new((0..n).map(|x| mul(x, s) as u32).collect()))
            .collect::<Result<Vec<_>>>()?;
        FiniteGroup::with_config(n, perms, config)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cyc(n: usize, text: &str) -> Permutation {
        Permutation::parse_cycles(n, text).unwrap()
    }

    #[test]
    fn trivial_group() {
        let g = FiniteGroup::from_generators(1, vec![]).unwrap();
        assert_eq!(g.order(), 1);
        assert_eq!(g.classes().len(), 1);
    }

    #[test]
    fn s3_structure() {
        let g = FiniteGroup::from_generators(3, vec![cyc(3, "(1,2,3)"), cyc(3, "(1,2)")]).unwrap();
        assert_eq!(g.order(), 6);
        assert_eq!(g.classes().len(), 3);
        assert_eq!(g.derived_subgroup().order(), 3);
        assert_eq!(g.center().order(), 1);
        assert_eq!(g.nilpotency_class(), None);
        let c2 = g.closure(&[g.index_of(&cyc(3, "(1,2)")).unwrap()]);
        assert!(g.normal_core(&c2).is_trivial());
        assert_eq!(g.core_by_conjugates(&c2).count(), 1);
    }

    #[test]
    fn closure_bound_is_enforced() {
        let gens = vec![cyc(5, "(1,2,3,4,5)"), cyc(5, "(1,2)")];
        let cfg = GroupConfig { closure_bound: 50 };
        assert!(matches!(
            FiniteGroup::with_config(5, gens, cfg),
            Err(Error::ClosureBoundExceeded { bound: 50 })
        ));
    }

    #[test]
    fn table_matches_composition() {
        let g = FiniteGroup::from_generators(4, vec![cyc(4, "(1,2,3,4)"), cyc(4, "(1,2)")]).unwrap();
        for a in 0..g.order() {
            for b in 0..g.order() {
                let p = g.element(a).compose(g.element(b));
                assert_eq!(g.mul(a, b), g.index_of(&p).unwrap());
            }
        }
    }
}
