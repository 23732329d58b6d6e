//! Permutation groups with enumerated elements and conjugacy classes.

pub mod abelian;
mod bitset;
mod group;
pub mod io;
pub mod lattice;
mod permutation;
pub mod profile;

pub use bitset::BitSet;
pub use group::{ConjugacyClass, FiniteGroup, GroupConfig, Subgroup};
pub use permutation::Permutation;
pub use profile::{profile, Camina3Params, GroupProfile};
