use serde::Serialize;

use super::csearch::{c_search_with, QuasiPermWitness, SearchConfig};
use super::mu::{mu_search, MuWitness};
use super::orbits::GaloisOrbit;
use crate::error::{Error, Result};
use crate::numbers::prime_power;
use crate::perm::FiniteGroup;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum QMethod {
    /// Weighted orbit search with known rational Schur indices.
    #[serde(rename = "search")]
    Search,
    /// `q(G) = μ(G)` for p-groups.
    #[serde(rename = "q=mu-for-p-group")]
    MuForPGroup,
}

impl std::fmt::Display for QMethod {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            QMethod::Search => "search",
            QMethod::MuForPGroup => "q=mu-for-p-group",
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct QDegree {
    pub value: u64,
    pub method: QMethod,
    pub witness: Option<QuasiPermWitness>,
    pub mu: Option<MuWitness>,
}

/// `q(G)`, the least degree of a faithful rational quasi-permutation
/// representation.
///
/// Uses the weighted orbit search when Schur indices are known: supplied by
/// the caller (one per orbit), or all 1 for abelian groups and odd-order
/// p-groups. Other p-groups go through `μ(G)`. Anything else is refused.
pub fn q_of(
    group: &FiniteGroup,
    orbits: &[GaloisOrbit],
    schur_indices: Option<&[u32]>,
    mu_bound: usize,
    config: &SearchConfig,
) -> Result<QDegree> {
    let p = prime_power(group.order() as u64).map(|x| x.0);
    let weights: Option<Vec<u32>> = match schur_indices {
        Some(w) => Some(w.to_vec()),
        None if group.is_abelian() || p.is_some_and(|p| p != 2) => Some(vec![1; orbits.len()]),
        None => None,
    };
    if let Some(w) = weights {
        let witness = c_search_with(group, orbits, Some(&w), config)?;
        return Ok(QDegree {
            value: witness.total,
            method: QMethod::Search,
            witness: Some(witness),
            mu: None,
        });
    }
    if p.is_some() {
        let mu = mu_search(group, mu_bound, config)?;
        return Ok(QDegree {
            value: mu.total,
            method: QMethod::MuForPGroup,
            witness: None,
            mu: Some(mu),
        });
    }
    Err(Error::SchurIndicesUnknown)
}
