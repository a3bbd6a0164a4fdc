//! Exact arithmetic: scalars, forms, polynomials and matrices.

pub mod form;
pub mod matrix;
pub mod poly;
pub mod scalar;

pub use form::{monomials, BinaryForm, Exp, TernaryForm};
pub use matrix::ExactMatrix;
pub use poly::{Poly1, Poly2};
pub use scalar::{canonical_projective, GaussRational, Scalar};
