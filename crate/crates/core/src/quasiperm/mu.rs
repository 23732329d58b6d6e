use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use serde::Serialize;

use super::csearch::{Deadline, SearchConfig};
use super::socle::NormalTracker;
use crate::error::Result;
use crate::perm::lattice::{minimal_normal_subgroups, subgroups_up_to_conjugacy};
use crate::perm::{BitSet, FiniteGroup, Subgroup};

/// Subgroups whose coset actions together give a faithful action of degree
/// `total = Σ |G : H_i|`.
#[derive(Debug, Clone, Serialize)]
pub struct MuWitness {
    #[serde(skip)]
    pub subgroups: Vec<Subgroup>,
    pub orders: Vec<usize>,
    /// Generators of each subgroup in cycle notation.
    pub generators: Vec<Vec<String>>,
    pub indices: Vec<u64>,
    pub total: u64,
}

struct Candidate {
    subgroup: Subgroup,
    index: u64,
    /// The part of the core that decides faithfulness, as class indices:
    /// its central socle for nilpotent groups, the whole core otherwise.
    key: BitSet,
}

/// Shortest paths in the lattice of normal subgroups (or central socle
/// subspaces), from the whole group down to the trivial subgroup, each step
/// intersecting with a candidate core at the price of its index.
struct MuSearch {
    tracker: NormalTracker,
    primes: Vec<u64>,
    candidates: Vec<Candidate>,
    /// Normal subgroups (as classes) that must be avoided, each with the
    /// least index of a candidate avoiding it.
    avoid: Vec<(BitSet, u64)>,
    deadline: Deadline,
}

impl MuSearch {
    /// Consistent lower bound on the remaining total index from `state`.
    fn heuristic(&self, state: &BitSet) -> u64 {
        if self.tracker.is_trivial(state) {
            return 0;
        }
        let single = self
            .avoid
            .iter()
            .filter(|(m, _)| m.is_subset(state))
            .map(|(_, c)| *c)
            .max()
            .unwrap_or(1);
        if !self.tracker.nilpotent() {
            return single;
        }
        // a core cutting the p-socle down by t dimensions has index at least p^t ≥ p·t
        let linear: u64 = self
            .primes
            .iter()
            .zip(self.tracker.ranks(state))
            .map(|(p, r)| p * r as u64)
            .sum();
        single.max(linear)
    }

    /// Least total index reaching the trivial subgroup from `start` (A* with
    /// a consistent heuristic, deeper states first among equal estimates).
    fn astar(&mut self, start: &BitSet) -> Result<u64> {
        let mut best: HashMap<BitSet, u64> = HashMap::new();
        let mut heap = BinaryHeap::new();
        let mut seq = 0u64;
        best.insert(start.clone(), 0);
        heap.push(Reverse((self.heuristic(start), Reverse(0u64), seq, start.clone())));
        while let Some(Reverse((_, Reverse(g), _, state))) = heap.pop() {
            self.deadline.check()?;
            if best.get(&state).is_some_and(|b| *b < g) {
                continue;
            }
            if self.tracker.is_trivial(&state) {
                return Ok(g);
            }
            for c in &self.candidates {
                if !self.tracker.reduces(&state, &c.key) {
                    continue;
                }
                let next = state.intersection(&c.key);
                let g2 = g + c.index;
                if best.get(&next).is_some_and(|b| *b <= g2) {
                    continue;
                }
                let f = g2 + self.heuristic(&next);
                best.insert(next.clone(), g2);
                seq += 1;
                heap.push(Reverse((f, Reverse(g2), seq, next)));
            }
        }
        unreachable!("the trivial subgroup is a candidate core")
    }

    /// Lower bound on the total index of at most `slots` further subgroups
    /// reaching the trivial subgroup from `state` (nilpotent case): cutting
    /// `r` socle dimensions with `s` cores costs at least the cost of the most
    /// even split of `r` into `s` parts, `p^t` per part of size `t`.
    fn spread(&self, state: &BitSet, slots: usize) -> u64 {
        if !self.tracker.nilpotent() {
            return 0;
        }
        self.primes
            .iter()
            .zip(self.tracker.ranks(state))
            .map(|(&p, r)| {
                if r == 0 {
                    return 0;
                }
                let used = slots.min(r as usize).max(1) as u32;
                let (q, rem) = (r / used, r % used);
                rem as u64 * p.pow(q + 1) + (used - rem) as u64 * p.pow(q)
            })
            .max()
            .unwrap_or(0)
    }

    /// Whether `slots` further subgroups of total index at most `budget`
    /// reach the trivial subgroup from `state`; returns the first such
    /// collection's first member in candidate order.
    fn feasible(
        &mut self,
        state: &BitSet,
        slots: usize,
        budget: u64,
        failed: &mut HashMap<(BitSet, usize), u64>,
    ) -> Result<Option<usize>> {
        self.deadline.check()?;
        if slots == 0 || failed.get(&(state.clone(), slots)).is_some_and(|&b| b >= budget) {
            return Ok(None);
        }
        for j in 0..self.candidates.len() {
            let c = &self.candidates[j];
            if c.index > budget || !self.tracker.reduces(state, &c.key) {
                continue;
            }
            let next = state.intersection(&c.key);
            let rest = budget - c.index;
            if self.tracker.is_trivial(&next) {
                return Ok(Some(j));
            }
            if slots == 1 || self.heuristic(&next).max(self.spread(&next, slots - 1)) > rest {
                continue;
            }
            if self.feasible(&next, slots - 1, rest, failed)?.is_some() {
                return Ok(Some(j));
            }
        }
        let entry = failed.entry((state.clone(), slots)).or_insert(0);
        *entry = (*entry).max(budget);
        Ok(None)
    }
}

/// `μ(G)`: the least degree of a faithful permutation representation. The
/// witness uses as few subgroups as possible and is lexicographically first
/// among those, subgroups ordered by (index, element set).
pub fn mu_search(group: &FiniteGroup, bound: usize, config: &SearchConfig) -> Result<MuWitness> {
    let n = group.order();
    if n == 1 {
        return Ok(MuWitness {
            subgroups: vec![group.whole()],
            orders: vec![1],
            generators: vec![Vec::new()],
            indices: vec![1],
            total: 1,
        });
    }
    let tracker = NormalTracker::new(group);
    let classes = group.classes().len();
    let socle = tracker.socle_classes();
    let mut by_key: HashMap<BitSet, Candidate> = HashMap::new();
    for h in subgroups_up_to_conjugacy(group, bound)? {
        if h.order() == n {
            continue;
        }
        let core = BitSet::from_indices(classes, group.class_indices_in(&group.core_bits(&h.elements)));
        let key = match &socle {
            Some(s) => core.intersection(s),
            None => core,
        };
        let index = (n / h.order()) as u64;
        let keep = by_key
            .get(&key)
            .is_none_or(|c| (index, &h.elements) < (c.index, &c.subgroup.elements));
        if keep {
            by_key.insert(key.clone(), Candidate { subgroup: h, index, key });
        }
    }
    let mut candidates: Vec<Candidate> = by_key.into_values().collect();
    candidates.sort_by(|a, b| (a.index, &a.subgroup.elements).cmp(&(b.index, &b.subgroup.elements)));
    let targets: Vec<BitSet> = match &socle {
        Some(s) => s
            .iter()
            .filter(|&c| c != 0)
            .map(|c| BitSet::from_indices(classes, [0, c]))
            .collect(),
        None => minimal_normal_subgroups(group)
            .iter()
            .map(|m| BitSet::from_indices(classes, group.class_indices_in(&m.elements)))
            .collect(),
    };
    let avoid = targets
        .into_iter()
        .map(|m| {
            let cheapest = candidates
                .iter()
                .filter(|c| !m.is_subset(&c.key))
                .map(|c| c.index)
                .min()
                .unwrap_or(n as u64);
            (m, cheapest)
        })
        .collect();
    let mut search = MuSearch {
        primes: tracker.primes(),
        tracker,
        candidates,
        avoid,
        deadline: Deadline::new(config.time_limit, "permutation degree search"),
    };
    let start = match &socle {
        Some(s) => s.clone(),
        None => search.tracker.whole(),
    };
    let mu = search.astar(&start)?;

    // fewest subgroups first; the smallest feasible first member at each
    // step then yields the lexicographically first collection
    let mut failed = HashMap::new();
    let mut slots = 1;
    while search.spread(&start, slots) > mu || search.feasible(&start, slots, mu, &mut failed)?.is_none() {
        slots += 1;
    }
    let mut chosen = Vec::new();
    let mut state = start;
    let mut budget = mu;
    while !search.tracker.is_trivial(&state) {
        let j = search
            .feasible(&state, slots, budget, &mut failed)?
            .expect("an optimal continuation exists");
        let c = &search.candidates[j];
        state = state.intersection(&c.key);
        budget -= c.index;
        slots -= 1;
        chosen.push(j);
    }
    let subgroups: Vec<Subgroup> = chosen.iter().map(|&j| search.candidates[j].subgroup.clone()).collect();
    Ok(MuWitness {
        orders: subgroups.iter().map(Subgroup::order).collect(),
        generators: subgroups
            .iter()
            .map(|h| h.generators.iter().map(|&g| group.element(g).to_string()).collect())
            .collect(),
        indices: chosen.iter().map(|&j| search.candidates[j].index).collect(),
        subgroups,
        total: mu,
    })
}
