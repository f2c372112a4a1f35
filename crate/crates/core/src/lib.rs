//! BCH codes over prime-power alphabets: cyclotomic-coset analysis,
//! Euclidean/Hermitian dual-containment criteria with closed-form
//! design-distance thresholds, exact dimensions, sharpened minimum-distance
//! verdicts, derived quantum stabilizer parameter families — and an
//! independent polynomial/matrix oracle that re-derives the same answers
//! by brute force for cross-validation.

pub mod arith;
pub mod bch;
pub mod cyclotomic;
pub mod duality;
pub mod error;
pub mod gf;
pub mod oracle;
pub mod quantum;

pub use error::{Error, Result};
