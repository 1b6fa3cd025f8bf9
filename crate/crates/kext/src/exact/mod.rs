//! Exact arithmetic: field towers, scalars, matrices, parsing, factorization.

pub mod factor;
pub mod mat;
pub mod parse;
pub mod scalar;
pub mod tower;
