//! Exact finite-field arithmetic: table-based fields GF(p^e), dense
//! univariate polynomials, and dense matrices.

pub mod field;
pub mod matrix;
pub mod poly;

pub use field::{Extension, Field, FieldElement};
pub use matrix::Matrix;
pub use poly::Polynomial;
