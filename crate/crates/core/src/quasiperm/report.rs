use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use super::csearch::{c_search_with, QuasiPermWitness, SearchConfig};
use super::formulas::evaluate_formulas;
use super::mu::{mu_search, MuWitness};
use super::orbits::galois_orbits;
use super::qdeg::{q_of, QMethod};
use crate::chartab::build_table;
use crate::error::{Error, Result};
use crate::perm::lattice::DEFAULT_SUBGROUP_BOUND;
use crate::perm::{profile, FiniteGroup, GroupProfile};

#[derive(Debug, Clone)]
pub struct ReportOptions {
    pub table_method: String,
    pub mu_bound: usize,
    pub search: SearchConfig,
}

impl Default for ReportOptions {
    fn default() -> Self {
        ReportOptions {
            table_method: "auto".into(),
            mu_bound: DEFAULT_SUBGROUP_BOUND,
            search: SearchConfig::default(),
        }
    }
}

/// A quantity that could not be computed, with the reason.
#[derive(Debug, Clone, Serialize)]
pub struct Skipped {
    pub quantity: &'static str,
    pub error: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct DegreeReport {
    pub order: usize,
    pub c: u64,
    pub q: Option<u64>,
    pub mu: Option<u64>,
    pub witness_c: QuasiPermWitness,
    pub witness_mu: Option<MuWitness>,
    pub formulas: BTreeMap<String, u64>,
    pub profile: GroupProfile,
    pub q_method: Option<QMethod>,
    pub skipped: Vec<Skipped>,
}

fn soft<T>(result: Result<T>, quantity: &'static str, skipped: &mut Vec<Skipped>) -> Result<Option<T>> {
    match result {
        Ok(v) => Ok(Some(v)),
        Err(e @ (Error::SchurIndicesUnknown | Error::BoundExceeded { .. })) => {
            skipped.push(Skipped {
                quantity,
                error: e.to_string(),
            });
            Ok(None)
        }
        Err(e) => Err(e),
    }
}

/// `c(G)` always; `q(G)` when licensed and `μ(G)` when within bounds, with
/// every applicable closed-form value alongside.
pub fn degree_report(group: &FiniteGroup, options: &ReportOptions) -> Result<DegreeReport> {
    let table = build_table(&options.table_method, group)?;
    let orbits = galois_orbits(&table);
    let prof = profile(group);
    let witness_c = c_search_with(group, &orbits, None, &options.search)?;
    let mut skipped = Vec::new();
    let mu = soft(mu_search(group, options.mu_bound, &options.search), "mu", &mut skipped)?;
    let q = match q_of(group, &orbits, None, options.mu_bound, &options.search) {
        Err(Error::BoundExceeded { .. }) if mu.is_none() => None,
        other => soft(other, "q", &mut skipped)?,
    };
    let formulas = evaluate_formulas(group, &table, &prof)?;
    Ok(DegreeReport {
        order: group.order(),
        c: witness_c.total,
        q: q.as_ref().map(|q| q.value),
        mu: mu.as_ref().map(|m| m.total),
        witness_c,
        witness_mu: mu,
        formulas,
        profile: prof,
        q_method: q.map(|q| q.method),
        skipped,
    })
}

impl fmt::Display for DegreeReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let opt = |v: Option<u64>| v.map_or_else(|| "-".to_string(), |v| v.to_string());
        writeln!(f, "order: {}", self.order)?;
        writeln!(
            f,
            "c = {}  (orbits {:?}, characters {:?}, xi(1) = {}, m = {})",
            self.c, self.witness_c.orbits, self.witness_c.characters, self.witness_c.degree, self.witness_c.m
        )?;
        match self.q_method {
            Some(m) => writeln!(f, "q = {}  ({m})", opt(self.q))?,
            None => writeln!(f, "q = -")?,
        }
        match &self.witness_mu {
            Some(w) => writeln!(f, "mu = {}  (subgroup indices {:?})", w.total, w.indices)?,
            None => writeln!(f, "mu = -")?,
        }
        for (name, value) in &self.formulas {
            let mark = if *value == self.c { "matches c" } else { "DIFFERS from c" };
            writeln!(f, "formula {name} = {value}  ({mark})")?;
        }
        for s in &self.skipped {
            writeln!(f, "skipped {}: {}", s.quantity, s.error)?;
        }
        Ok(())
    }
}
