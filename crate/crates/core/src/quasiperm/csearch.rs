use std::time::{Duration, Instant};

use serde::Serialize;

use super::orbits::{galois_orbits, GaloisOrbit};
use super::socle::NormalTracker;
use crate::chartab::CharacterTable;
use crate::error::{Error, Result};
use crate::numbers::prime_power;
use crate::perm::{BitSet, FiniteGroup};

/// Limits for the exhaustive searches.
#[derive(Debug, Clone, Copy)]
pub struct SearchConfig {
    pub max_orbits: usize,
    pub time_limit: Option<Duration>,
}

impl Default for SearchConfig {
    fn default() -> Self {
        SearchConfig {
            max_orbits: 1024,
            time_limit: None,
        }
    }
}

/// A set `I` of Galois orbits with trivial common kernel and the class
/// function `ξ = Σ_{i∈I} w_i Θ_i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct QuasiPermWitness {
    pub orbits: Vec<usize>,
    /// Table rows of all members of the chosen orbits.
    pub characters: Vec<usize>,
    pub xi: Vec<i64>,
    /// `ξ(1)`.
    pub degree: u64,
    /// `|min_g ξ(g)|`.
    pub m: u64,
    /// `ξ(1) + m(ξ)`.
    pub total: u64,
    /// No proper subset of `I` has trivial common kernel.
    pub minimal: bool,
}

pub(crate) struct Deadline {
    end: Option<Instant>,
    ticks: u32,
    what: &'static str,
}

impl Deadline {
    pub(crate) fn new(limit: Option<Duration>, what: &'static str) -> Deadline {
        Deadline {
            end: limit.map(|d| Instant::now() + d),
            ticks: 0,
            what,
        }
    }

    pub(crate) fn check(&mut self) -> Result<()> {
        self.ticks = self.ticks.wrapping_add(1);
        if self.ticks % 1024 == 0 && self.end.is_some_and(|e| Instant::now() > e) {
            return Err(Error::TimeLimitExceeded(self.what));
        }
        Ok(())
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    /// Keep the first optimum met in lexicographic order.
    First,
    /// Keep every optimum.
    All,
}

struct CSearch<'a> {
    group: &'a FiniteGroup,
    tracker: NormalTracker,
    orbits: &'a [GaloisOrbit],
    candidates: Vec<usize>,
    /// `w_i (d_i − Θ_i(c))` for each candidate and class.
    delta: Vec<Vec<i64>>,
    /// `w_i d_i` for each candidate.
    weight: Vec<u64>,
    /// For each class, the least weight of a candidate whose kernel misses it.
    least: Vec<u64>,
    /// `(p, d(Z))` for p-groups: minimal sets have exactly `d(Z)` orbits and
    /// cost at least `p/(p−1)` times their weight.
    pgroup: Option<(u64, usize)>,
    mode: Mode,
    best: Option<i64>,
    found: Vec<Vec<usize>>,
    deadline: Deadline,
}

impl CSearch<'_> {
    fn pruned(&self, lower: i64) -> bool {
        match (self.mode, self.best) {
            (_, None) => false,
            (Mode::First, Some(b)) => lower >= b,
            (Mode::All, Some(b)) => lower > b,
        }
    }

    fn is_minimal(&self, chosen: &[usize]) -> bool {
        (0..chosen.len()).all(|skip| {
            let mut k = self.tracker.whole();
            for (i, &c) in chosen.iter().enumerate() {
                if i != skip {
                    k.intersect_with(&self.orbits[self.candidates[c]].kernel);
                }
            }
            !self.tracker.is_trivial(&k)
        })
    }

    fn record(&mut self, chosen: &[usize], cost: i64) {
        match self.best {
            Some(b) if cost > b => {}
            Some(b) if cost == b => {
                if self.mode == Mode::All {
                    self.found.push(chosen.to_vec());
                }
            }
            _ => {
                self.best = Some(cost);
                self.found = vec![chosen.to_vec()];
            }
        }
    }

    fn dfs(&mut self, start: usize, chosen: &mut Vec<usize>, kernel: &BitSet, sum: &[i64], weight: u64) -> Result<()> {
        self.deadline.check()?;
        for j in start..self.candidates.len() {
            let kj = &self.orbits[self.candidates[j]].kernel;
            if !self.tracker.reduces(kernel, kj) {
                continue;
            }
            let next: Vec<i64> = sum.iter().zip(&self.delta[j]).map(|(a, b)| a + b).collect();
            let cost = next.iter().copied().max().unwrap_or(0);
            let weight = weight + self.weight[j];
            let k = kernel.intersection(kj);
            let mut lower = cost;
            if let Some((p, _)) = self.pgroup {
                // some socle element lies outside every kernel of a finished
                // set, and there each orbit contributes p/(p−1) times its weight
                let w = (weight + self.tracker.level_bound(self.group, &k, &self.least)) * p;
                lower = lower.max(w.div_ceil(p - 1) as i64);
            }
            if self.pruned(lower) {
                continue;
            }
            chosen.push(j);
            if self.tracker.is_trivial(&k) {
                if self.is_minimal(chosen) {
                    self.record(chosen, cost);
                }
            } else if self.pgroup.is_none_or(|(_, size)| chosen.len() < size) {
                self.dfs(j + 1, chosen, &k, &next, weight)?;
            }
            chosen.pop();
        }
        Ok(())
    }
}

fn run(
    group: &FiniteGroup,
    orbits: &[GaloisOrbit],
    weights: Option<&[u32]>,
    config: &SearchConfig,
    mode: Mode,
) -> Result<Vec<QuasiPermWitness>> {
    if orbits.len() > config.max_orbits {
        return Err(Error::SearchBoundExceeded(format!(
            "{} Galois orbits exceed the bound {}",
            orbits.len(),
            config.max_orbits
        )));
    }
    let w = |i: usize| weights.map_or(1, |w| w[i]) as i64;
    let candidates: Vec<usize> = (0..orbits.len()).filter(|&i| !orbits[i].is_trivial()).collect();
    let delta: Vec<Vec<i64>> = candidates
        .iter()
        .map(|&i| orbits[i].theta.iter().map(|&t| w(i) * (orbits[i].d as i64 - t)).collect())
        .collect();
    let weight: Vec<u64> = candidates.iter().map(|&i| w(i) as u64 * orbits[i].d).collect();
    let classes = group.classes().len();
    let least: Vec<u64> = (0..classes)
        .map(|c| {
            candidates
                .iter()
                .zip(&weight)
                .filter(|(&i, _)| !orbits[i].kernel.contains(c))
                .map(|(_, &w)| w)
                .min()
                .unwrap_or(u64::MAX / 4)
        })
        .collect();
    let tracker = NormalTracker::new(group);
    let pgroup = match prime_power(group.order() as u64) {
        Some((p, _)) => Some((p, tracker.ranks(&tracker.whole())[0] as usize)),
        None => None,
    };
    let mut search = CSearch {
        group,
        tracker,
        orbits,
        candidates,
        delta,
        weight,
        least,
        pgroup,
        mode,
        best: None,
        found: Vec::new(),
        deadline: Deadline::new(config.time_limit, "quasi-permutation search"),
    };
    let whole = search.tracker.whole();
    if search.tracker.is_trivial(&whole) {
        search.found.push(Vec::new());
    } else {
        search.dfs(0, &mut Vec::new(), &whole, &vec![0; classes], 0)?;
    }
    let found = std::mem::take(&mut search.found);
    if found.is_empty() {
        return Err(Error::SearchBoundExceeded("no faithful orbit set found".into()));
    }
    Ok(found
        .into_iter()
        .map(|set| {
            let ids: Vec<usize> = set.iter().map(|&j| search.candidates[j]).collect();
            witness(orbits, &ids, weights)
        })
        .collect())
}

/// Evaluate `ξ = Σ w_i Θ_i` over the given orbits.
pub fn witness(orbits: &[GaloisOrbit], ids: &[usize], weights: Option<&[u32]>) -> QuasiPermWitness {
    let classes = orbits.first().map_or(1, |o| o.theta.len());
    let mut xi = vec![0i64; classes];
    for &i in ids {
        let w = weights.map_or(1, |w| w[i]) as i64;
        for (x, t) in xi.iter_mut().zip(&orbits[i].theta) {
            *x += w * t;
        }
    }
    let degree = xi[0] as u64;
    let m = if ids.is_empty() { 0 } else { xi.iter().min().copied().unwrap_or(0).unsigned_abs() };
    let mut characters: Vec<usize> = ids.iter().flat_map(|&i| orbits[i].members.iter().copied()).collect();
    characters.sort_unstable();
    let minimal = (0..ids.len()).all(|skip| {
        let mut k: Option<BitSet> = None;
        for (j, &i) in ids.iter().enumerate() {
            if j != skip {
                match &mut k {
                    Some(k) => k.intersect_with(&orbits[i].kernel),
                    None => k = Some(orbits[i].kernel.clone()),
                }
            }
        }
        k.is_none_or(|k| k.count() > 1)
    });
    QuasiPermWitness {
        orbits: ids.to_vec(),
        characters,
        xi,
        degree,
        m,
        total: degree + m,
        minimal,
    }
}

/// `c(G)` with the lexicographically smallest optimal minimal orbit set.
pub fn c_search(group: &FiniteGroup, table: &CharacterTable) -> Result<QuasiPermWitness> {
    c_search_with(group, &galois_orbits(table), None, &SearchConfig::default())
}

/// Weighted form: `ξ = Σ w_i Θ_i` with `w_i` the rational Schur index of
/// orbit `i`; unit weights give `c(G)`.
pub fn c_search_with(
    group: &FiniteGroup,
    orbits: &[GaloisOrbit],
    weights: Option<&[u32]>,
    config: &SearchConfig,
) -> Result<QuasiPermWitness> {
    Ok(run(group, orbits, weights, config, Mode::First)?.remove(0))
}

/// Every minimal orbit set attaining `c(G)`, in lexicographic order.
pub fn optimal_witnesses(
    group: &FiniteGroup,
    orbits: &[GaloisOrbit],
    config: &SearchConfig,
) -> Result<Vec<QuasiPermWitness>> {
    run(group, orbits, None, config, Mode::All)
}

/// Checks `m(ξ) = ξ(1)/(p−1)` and `|I| = d(Z(G))` for a p-group witness.
pub fn m_of_p_group_check(witness: &QuasiPermWitness, group: &FiniteGroup) -> bool {
    let Some((p, _)) = prime_power(group.order() as u64) else {
        return false;
    };
    let tracker = NormalTracker::new(group);
    let d = tracker.ranks(&tracker.whole()).first().copied().unwrap_or(0) as usize;
    witness.m * (p - 1) == witness.degree && witness.orbits.len() == d
}
