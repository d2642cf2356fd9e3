//! Exact linear algebra over the rationals: matrices, reduced row echelon
//! form, kernels, subspace arithmetic and Plücker coordinates.

mod matrix;
mod minors;
mod scalar;
mod subspace;

pub use matrix::{Matrix, RationalMatrix};
pub use minors::{binomial, compound, maximal_row_minors, ring_determinant, subsets, WedgeBasis};
pub use scalar::{format_rational, parse_rational, rat, ratio, rational_pow, rational_root, Field, Rational, Ring};
pub use subspace::{column_span, combine, kernel, normalize_projective, pluecker, rref, unit, Subspace};
