//! Finite-dimensional algebras: construction, radicals, structural
//! predicates.

pub mod construct;
pub mod core;
pub mod frobenius;
pub mod groups;
pub mod radical;
pub mod separable;

pub use construct::{
    algebra_from_matrix_span, build_algebra, group_algebra, matrix_algebra, poly_quotient_algebra,
    product_algebra, quaternion_algebra, triangular_algebra,
};
pub use core::{quotient_by_ideal, AlgRef, Algebra, GroupData};
pub use frobenius::{is_frobenius, FrobeniusReport};
pub use radical::{is_semisimple, radical};
pub use separable::{element_min_poly, is_separable_algebra};
