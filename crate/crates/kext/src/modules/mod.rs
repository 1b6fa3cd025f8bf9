//! Right modules: construction, homomorphisms, socle theory, decomposition,
//! tensor operations.

pub mod core;
pub mod decompose;
pub mod hom;
pub mod socle;
pub mod tensor;

pub use core::{direct_sum_all, regular_module, ModRef, Module};
pub use decompose::{complement, decompose, is_simple, Decomposition, Summand};
pub use hom::{end_algebra, find_iso, hom_dim, hom_space, is_hom, min_poly};
pub use socle::{semisimplify, socle, socle_filtration, Filtration, FiltrationLayer};
pub use tensor::{dual_module, tensor_module};
