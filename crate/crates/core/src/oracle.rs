//! Independent verification route: everything here re-derives code
//! properties from first principles — polynomial factorization, linear
//! algebra, and brute-force codeword enumeration — without consulting the
//! coset-based formulas it is used to check.

pub mod distance;
pub mod engine;
pub mod factor;
pub mod verify;

pub use distance::{
    css_min_distance, min_distance_bounded, min_distance_exhaustive, BoundedOutcome, OracleBudget,
    Verdict,
};
pub use engine::CyclicCodeOracle;
pub use verify::{run_grid, Check, DeltaSpec, GridSpec, VerifyReport};
