//! Exact computation of minimal faithful permutation degrees and
//! quasi-permutation degrees of small finite groups.

pub mod error;
pub mod numbers;
pub mod chartab;
pub mod cyclo;
pub mod families;
pub mod perm;
pub mod quasiperm;
pub mod verify;

pub use error::{Error, ErrorClass, Result};
