use crate::numbers::prime_power;
use crate::perm::{BitSet, FiniteGroup};

/// Normal subgroups handled as sets of class indices, together with what the
/// searches need to test triviality and to bound remaining cost.
///
/// For nilpotent groups every nontrivial normal subgroup meets the central
/// socle, so a normal subgroup is trivial iff its central elements of prime
/// order are; those are tracked prime by prime.
pub(crate) struct NormalTracker {
    classes: usize,
    /// `(p, central classes of order 1 or p)`, only for nilpotent groups.
    socle: Option<Vec<(u64, BitSet)>>,
}

impl NormalTracker {
    pub(crate) fn new(group: &FiniteGroup) -> NormalTracker {
        let classes = group.classes().len();
        let socle = group.nilpotency_class().map(|_| {
            let mut parts: Vec<(u64, BitSet)> = Vec::new();
            for (c, cl) in group.classes().iter().enumerate() {
                if cl.size() != 1 {
                    continue;
                }
                let o = group.element_order(cl.representative);
                if o == 1 {
                    continue;
                }
                if let Some((p, 1)) = prime_power(o) {
                    match parts.iter_mut().find(|(q, _)| *q == p) {
                        Some((_, set)) => {
                            set.insert(c);
                        }
                        None => parts.push((p, BitSet::from_indices(classes, [0, c]))),
                    }
                }
            }
            parts.sort_by_key(|(p, _)| *p);
            parts
        });
        NormalTracker { classes, socle }
    }

    /// All central classes of prime order together with the identity
    /// (nilpotent case).
    pub(crate) fn socle_classes(&self) -> Option<BitSet> {
        self.socle.as_ref().map(|parts| {
            let mut all = BitSet::from_indices(self.classes, [0]);
            for (_, s) in parts {
                all.union_with(s);
            }
            all
        })
    }

    pub(crate) fn whole(&self) -> BitSet {
        BitSet::full(self.classes)
    }

    pub(crate) fn is_trivial(&self, k: &BitSet) -> bool {
        k.count() == 1
    }

    pub(crate) fn nilpotent(&self) -> bool {
        self.socle.is_some()
    }

    /// The primes dividing the order of the central socle (nilpotent case).
    pub(crate) fn primes(&self) -> Vec<u64> {
        self.socle.iter().flatten().map(|(p, _)| *p).collect()
    }

    /// Whether intersecting `current` with `other` makes progress towards
    /// the trivial subgroup.
    pub(crate) fn reduces(&self, current: &BitSet, other: &BitSet) -> bool {
        match &self.socle {
            Some(parts) => parts.iter().any(|(_, s)| {
                let now = current.intersection(s);
                now.intersection_count(other) < now.count()
            }),
            None => current.intersection_count(other) < current.count(),
        }
    }

    /// Lower bound on the total weight of further cuts needed to bring the
    /// socle part of `state` to the trivial subgroup, when each cut is a
    /// hyperplane and a cut avoiding the socle class `c` weighs at least
    /// `least[c]`: taking socle elements by decreasing `least`, every one
    /// that enlarges the span adds its value.
    pub(crate) fn level_bound(&self, group: &FiniteGroup, state: &BitSet, least: &[u64]) -> u64 {
        let Some(parts) = &self.socle else {
            return 0;
        };
        let mut elems: Vec<(u64, usize)> = parts
            .iter()
            .flat_map(|(_, s)| s.iter())
            .filter(|&c| c != 0 && state.contains(c))
            .map(|c| (least[c], c))
            .collect();
        elems.sort_by(|a, b| b.cmp(a));
        let mut span = BitSet::from_indices(group.order(), [group.identity()]);
        let mut total = 0;
        for (value, c) in elems {
            let z = group.classes()[c].representative;
            if span.contains(z) {
                continue;
            }
            total += value;
            let mut next = span.clone();
            let mut power = z;
            while power != group.identity() {
                for s in span.iter() {
                    next.insert(group.mul(s, power));
                }
                power = group.mul(power, z);
            }
            span = next;
        }
        total
    }

    /// `log_p |K ∩ Ω_p|` for each prime of the socle (nilpotent case).
    pub(crate) fn ranks(&self, k: &BitSet) -> Vec<u32> {
        self.socle
            .iter()
            .flatten()
            .map(|(p, s)| log(*p, k.intersection_count(s)))
            .collect()
    }
}

fn log(p: u64, mut n: usize) -> u32 {
    let mut r = 0;
    while n > 1 {
        n /= p as usize;
        r += 1;
    }
    r
}
