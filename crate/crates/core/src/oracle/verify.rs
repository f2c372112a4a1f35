//! Grid verification: run the formula route and the brute-force route
//! over a parameter grid and report every disagreement.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith::gcd;
use crate::bch::{self, BchCode};
use crate::duality::{self, Flavor};
use crate::error::{Error, Result};
use crate::gf::Matrix;
use crate::oracle::distance::{
    min_distance_bounded, min_distance_exhaustive, BoundedOutcome, OracleBudget, Verdict,
};
use crate::oracle::engine::CyclicCodeOracle;

/// Which comparisons between the formula route and the brute-force route
/// a verification run performs.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Check {
    /// Dual-containment predicate against parity-matrix self-orthogonality.
    Containment,
    /// Constructor dimension against the generator degree found by
    /// factorization, plus the closed-form dimension when it applies.
    Dimension,
    /// Enumerated minimum distance at least the designed distance.
    BchBound,
    /// Enumerated minimum distance inside the sharpened window when the
    /// sharpening hypothesis holds.
    DistanceVerdict,
    /// Enumerated dual distance at least the claimed dual bound.
    DualDistance,
}

impl Check {
    pub fn all() -> [Check; 5] {
        [
            Check::Containment,
            Check::Dimension,
            Check::BchBound,
            Check::DistanceVerdict,
            Check::DualDistance,
        ]
    }
}

/// Designed-distance range to sweep at each length.
#[derive(Clone, Debug, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum DeltaSpec {
    /// From 2 up to just past the sufficient threshold, so both sides of
    /// the containment boundary are exercised.
    Auto,
    /// From 2 up to n.
    FullRange,
    /// Explicit inclusive range, clamped to [2, n].
    Range(u64, u64),
}

/// A rectangle of code parameters to verify.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct GridSpec {
    /// Field sizes; for the Hermitian flavor these are the base sizes and
    /// codes live over their squares.
    pub qs: Vec<u64>,
    pub n_min: u64,
    pub n_max: u64,
    /// First designed exponents to try (normalized mod n, deduplicated).
    pub bs: Vec<u64>,
    pub delta: DeltaSpec,
    pub flavor: Flavor,
}

/// One disagreement between the two routes. Any entry here means a bug.
#[derive(Clone, Debug, Serialize)]
pub struct Mismatch {
    pub check: Check,
    pub flavor: Flavor,
    pub n: u64,
    pub q: u64,
    pub b: u64,
    pub delta: u64,
    pub detail: String,
}

/// A check the brute-force route could not settle within budget.
#[derive(Clone, Debug, Serialize)]
pub struct InconclusiveEntry {
    pub check: Check,
    pub flavor: Flavor,
    pub n: u64,
    pub q: u64,
    pub b: u64,
    pub delta: u64,
    pub reason: String,
}

#[derive(Clone, Debug, Default, Serialize)]
pub struct VerifyReport {
    /// Parameter tuples visited.
    pub instances: u64,
    /// Individual comparisons performed.
    pub checks_run: u64,
    pub mismatches: Vec<Mismatch>,
    pub inconclusive: Vec<InconclusiveEntry>,
}

/// Runs the requested checks over every (n, q, b, delta) tuple in the
/// grid, in parallel over (q, n) pairs, and returns a deterministic
/// report (entries sorted by parameters, not completion order).
pub fn run_grid(spec: &GridSpec, checks: &[Check], budget: &OracleBudget) -> Result<VerifyReport> {
    let mut qs = spec.qs.clone();
    qs.sort_unstable();
    qs.dedup();
    let mut pairs = Vec::new();
    for &q in &qs {
        let alphabet = match spec.flavor {
            Flavor::Euclidean => q,
            Flavor::Hermitian => q.checked_mul(q).ok_or_else(|| {
                Error::InvalidParameter(format!("base field size {q} squares out of range"))
            })?,
        };
        for n in spec.n_min.max(2)..=spec.n_max {
            if gcd(n, alphabet) == 1 {
                pairs.push((n, q, alphabet));
            }
        }
    }
    let outcomes: Result<Vec<PairOutcome>> = pairs
        .par_iter()
        .map(|&(n, q, alphabet)| check_pair(spec, checks, budget, n, q, alphabet))
        .collect();
    let mut report = VerifyReport::default();
    for outcome in outcomes? {
        report.instances += outcome.instances;
        report.checks_run += outcome.checks_run;
        report.mismatches.extend(outcome.mismatches);
        report.inconclusive.extend(outcome.inconclusive);
    }
    report
        .mismatches
        .sort_by_key(|m| (m.q, m.n, m.b, m.delta, m.check));
    report
        .inconclusive
        .sort_by_key(|e| (e.q, e.n, e.b, e.delta, e.check));
    Ok(report)
}

#[derive(Default)]
struct PairOutcome {
    instances: u64,
    checks_run: u64,
    mismatches: Vec<Mismatch>,
    inconclusive: Vec<InconclusiveEntry>,
}

/// What the enumeration side managed to learn about a minimum distance.
enum DistanceInfo {
    Exact(u64),
    AtLeast(u64),
}

fn distance_info(gen: &Matrix, par: &Matrix, budget: &OracleBudget) -> DistanceInfo {
    match min_distance_exhaustive(gen, budget) {
        Verdict::Conclusive(d) => DistanceInfo::Exact(d),
        Verdict::Inconclusive(_) => match min_distance_bounded(par, budget) {
            BoundedOutcome::FoundExact(d) => DistanceInfo::Exact(d),
            BoundedOutcome::NoneUpTo(w) => DistanceInfo::AtLeast(w + 1),
        },
    }
}

fn check_pair(
    spec: &GridSpec,
    checks: &[Check],
    budget: &OracleBudget,
    n: u64,
    q: u64,
    alphabet: u64,
) -> Result<PairOutcome> {
    let engine = CyclicCodeOracle::new(n, alphabet)?;
    let (lo, hi) = match spec.delta {
        DeltaSpec::Auto => {
            let sufficient = duality::threshold_report(n, q, spec.flavor)?.sufficient;
            (2, n.min(sufficient + 2))
        }
        DeltaSpec::FullRange => (2, n),
        DeltaSpec::Range(lo, hi) => (lo.max(2), hi.min(n)),
    };
    let mut bs: Vec<u64> = spec.bs.iter().map(|&b| b % n).collect();
    bs.sort_unstable();
    bs.dedup();
    let mut out = PairOutcome::default();
    for &b in &bs {
        for delta in lo..=hi {
            out.instances += 1;
            check_instance(spec, checks, budget, &engine, n, q, alphabet, b, delta, &mut out)?;
        }
    }
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn check_instance(
    spec: &GridSpec,
    checks: &[Check],
    budget: &OracleBudget,
    engine: &CyclicCodeOracle,
    n: u64,
    q: u64,
    alphabet: u64,
    b: u64,
    delta: u64,
    out: &mut PairOutcome,
) -> Result<()> {
    let code = BchCode::construct(n, alphabet, b, delta)?;
    let mismatch = |check: Check, detail: String| Mismatch {
        check,
        flavor: spec.flavor,
        n,
        q,
        b,
        delta,
        detail,
    };
    let inconclusive = |check: Check, reason: String| InconclusiveEntry {
        check,
        flavor: spec.flavor,
        n,
        q,
        b,
        delta,
        reason,
    };
    for &check in checks {
        match check {
            Check::Containment => {
                let formula = match spec.flavor {
                    Flavor::Euclidean => duality::euclidean_dual_containing(code.defining_set(), n),
                    Flavor::Hermitian => {
                        duality::hermitian_dual_containing(code.defining_set(), n, q)
                    }
                };
                let brute = match spec.flavor {
                    Flavor::Euclidean => engine.euclidean_dual_containing(b, delta)?,
                    Flavor::Hermitian => engine.hermitian_dual_containing(b, delta)?,
                };
                out.checks_run += 1;
                if formula != brute {
                    out.mismatches.push(mismatch(
                        check,
                        format!("exponent criterion says {formula}, parity enumeration says {brute}"),
                    ));
                }
            }
            Check::Dimension => {
                let brute = engine.dimension(b, delta)?;
                out.checks_run += 1;
                if code.k() != brute {
                    out.mismatches.push(mismatch(
                        check,
                        format!("coset count gives k = {}, generator degree gives k = {brute}", code.k()),
                    ));
                }
                if code.narrow_sense() {
                    if let Ok(closed) = bch::dimension_formula(n, alphabet, delta) {
                        out.checks_run += 1;
                        if closed != code.k() {
                            out.mismatches.push(mismatch(
                                check,
                                format!(
                                    "closed form gives k = {closed}, coset count gives k = {}",
                                    code.k()
                                ),
                            ));
                        }
                    }
                }
            }
            Check::BchBound => {
                let g = engine.generator(b, delta)?;
                let gen = engine.generator_matrix(&g);
                let par = engine.parity_check_matrix(&g)?;
                out.checks_run += 1;
                match distance_info(&gen, &par, budget) {
                    DistanceInfo::Exact(d) => {
                        if d < delta {
                            out.mismatches.push(mismatch(
                                check,
                                format!("minimum distance {d} is below the designed distance {delta}"),
                            ));
                        }
                    }
                    DistanceInfo::AtLeast(floor) => {
                        if floor < delta {
                            out.inconclusive.push(inconclusive(
                                check,
                                format!("only verified distance >= {floor}, designed distance is {delta}"),
                            ));
                        }
                    }
                }
            }
            Check::DistanceVerdict => {
                if !code.narrow_sense() {
                    continue;
                }
                let verdict = match bch::distance_verdict(n, alphabet, delta) {
                    Ok(v) => v,
                    Err(_) => continue, // hypotheses do not cover this shape
                };
                let g = engine.generator(b, delta)?;
                let gen = engine.generator_matrix(&g);
                let par = engine.parity_check_matrix(&g)?;
                out.checks_run += 1;
                match distance_info(&gen, &par, budget) {
                    DistanceInfo::Exact(d) => {
                        if d < verdict.d_low {
                            out.mismatches.push(mismatch(
                                check,
                                format!("distance {d} misses the floor {}", verdict.d_low),
                            ));
                        }
                        if let Some(hi) = verdict.d_high {
                            if d > hi {
                                out.mismatches.push(mismatch(
                                    check,
                                    format!("distance {d} exceeds the ceiling {hi}"),
                                ));
                            }
                        }
                        if let Some(exact) = verdict.forced_exact {
                            if d != exact {
                                out.mismatches.push(mismatch(
                                    check,
                                    format!("distance {d} is not the forced value {exact}"),
                                ));
                            }
                        }
                    }
                    DistanceInfo::AtLeast(floor) => {
                        if floor < verdict.d_low {
                            out.inconclusive.push(inconclusive(
                                check,
                                format!(
                                    "only verified distance >= {floor}, floor claim is {}",
                                    verdict.d_low
                                ),
                            ));
                        } else if verdict.d_high.is_some() {
                            out.inconclusive.push(inconclusive(
                                check,
                                format!("ceiling claim needs the exact distance; only verified >= {floor}"),
                            ));
                        }
                    }
                }
            }
            Check::DualDistance => {
                if !code.narrow_sense() {
                    continue;
                }
                let bound = match bch::dual_distance_lower_bound(&code, spec.flavor) {
                    Ok(bound) => bound,
                    Err(_) => continue, // outside the guaranteed regime
                };
                // The Hermitian dual is the entrywise Frobenius image of the
                // Euclidean dual, so both have the same weights and one
                // enumeration covers both flavors.
                let g = engine.generator(b, delta)?;
                let dual_gen = engine.parity_check_matrix(&g)?;
                let dual_par = engine.generator_matrix(&g);
                out.checks_run += 1;
                match distance_info(&dual_gen, &dual_par, budget) {
                    DistanceInfo::Exact(d) => {
                        if d < bound {
                            out.mismatches.push(mismatch(
                                check,
                                format!("dual distance {d} is below the claimed bound {bound}"),
                            ));
                        }
                    }
                    DistanceInfo::AtLeast(floor) => {
                        if floor < bound {
                            out.inconclusive.push(inconclusive(
                                check,
                                format!("only verified dual distance >= {floor}, claim is {bound}"),
                            ));
                        }
                    }
                }
            }
        }
    }
    Ok(())
}
