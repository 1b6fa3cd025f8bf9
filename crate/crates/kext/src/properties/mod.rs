//! Proposition checkers, the instance catalog, and brute-force oracles.

pub mod catalog;
pub mod checks;
pub mod oracle;

pub use catalog::{algebra_by_name, catalog, extension_by_name, Catalog};
pub use checks::{run_check, CheckId, InstanceOutcome, PropertyReport};
pub use oracle::{oracle_submodule_lattice, OracleLattice};
