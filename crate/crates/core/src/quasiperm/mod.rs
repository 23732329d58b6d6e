//! Quasi-permutation degrees: Galois orbits of characters, the searches for
//! `c(G)`, `q(G)` and `μ(G)`, and the closed-form evaluators they are checked
//! against.

mod csearch;
mod formulas;
mod mu;
mod orbits;
mod qdeg;
mod report;
mod socle;

pub use csearch::{c_search, c_search_with, m_of_p_group_check, optimal_witnesses, witness, QuasiPermWitness, SearchConfig};
pub use formulas::{
    aligned_center_basis, c_abelian_formula, c_abelian_of_invariants, c_camina3_formula, c_vz_formula,
    center_scaling, evaluate_formulas, formula, formulas, t_of_invariants, AlignedBasis, Formula, VzFormula,
};
pub use mu::{mu_search, MuWitness};
pub use orbits::{galois_orbits, GaloisOrbit};
pub use qdeg::{q_of, QDegree, QMethod};
pub use report::{degree_report, DegreeReport, ReportOptions, Skipped};
