//! Exact computational algebra over field towers: finite-dimensional
//! algebras, their module categories, and scalar extension along tower
//! inclusions, with mechanical verification of the structural identities
//! the extension functor preserves.

// structure-constant math reads as indexed sums over sc[i][j][k]; iterator
// rewrites obscure the shared index ranges
#![allow(clippy::needless_range_loop)]

pub mod algebra;
pub mod error;
pub mod exact;
pub mod io;
pub mod modules;
pub mod properties;
pub mod scalarext;

pub use error::{KextError, Result};
