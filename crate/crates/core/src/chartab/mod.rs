//! Exact character tables: analytic for abelian and VZ groups, and the
//! general Dixon modular method.

mod abelian;
mod dixon;
pub mod io;
pub mod modp;
mod registry;
mod table;
mod vz;

pub use abelian::abelian_table;
pub use dixon::{dixon_table, DEFAULT_DIXON_BOUND};
pub use registry::{build_table, table_method, table_methods, TableMethod};
pub use table::{kernel_of, restrict_to, Character, CharacterTable, Provenance};
pub(crate) use table::kernel_bits;
pub use vz::vz_table;
