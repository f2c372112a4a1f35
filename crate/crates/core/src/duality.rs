//! Dual-containment predicates on defining sets and the closed-form
//! design-distance thresholds (sufficient, necessary, exact, and
//! non-narrow-sense bounds) for both duality flavors.
//!
//! Conventions: a code with defining set Z contains its Euclidean dual iff
//! Z ∩ (−Z) = ∅, and its Hermitian dual iff Z ∩ (−q̄·Z) = ∅ where the code
//! lives over GF(q̄²). All Hermitian entry points take the *base* q̄ and
//! derive the alphabet q̄² internally.

use num_bigint::{BigInt, BigUint};
use num_rational::Ratio;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};

use crate::arith::isqrt;
use crate::cyclotomic::{multiplicative_order, negate, scale_negate, sorted_intersects, CosetContext};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Flavor {
    Euclidean,
    Hermitian,
}

impl std::fmt::Display for Flavor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Flavor::Euclidean => write!(f, "euclidean"),
            Flavor::Hermitian => write!(f, "hermitian"),
        }
    }
}

fn normalized(z: &[u64], n: u64) -> Vec<u64> {
    let mut v: Vec<u64> = z.iter().map(|&x| x % n).collect();
    v.sort_unstable();
    v.dedup();
    v
}

/// Z ∩ (−Z) = ∅: the code with defining set Z contains its Euclidean dual.
pub fn euclidean_dual_containing(z: &[u64], n: u64) -> bool {
    let z = normalized(z, n);
    !sorted_intersects(&z, &negate(&z, n))
}

/// Z ∩ (−q̄·Z) = ∅ for a code over GF(q̄²): contains its Hermitian dual.
pub fn hermitian_dual_containing(z: &[u64], n: u64, q_base: u64) -> bool {
    let z = normalized(z, n);
    !sorted_intersects(&z, &scale_negate(&z, n, q_base))
}

/// The exact rational κ = n·(q^⌈m/2⌉ − 1 − (q−2)·[m odd]) / (q^m − 1) with
/// m = ord_n(q) ≥ 2; ⌊κ⌋ is the sufficient narrow-sense Euclidean
/// dual-containment threshold.
pub fn kappa(n: u64, q: u64) -> Result<Ratio<BigInt>> {
    let m = multiplicative_order(q, n)?;
    if m < 2 {
        return Err(Error::HypothesisViolated(
            "kappa requires ord_n(q) ≥ 2; use the order-one rule ⌊(n+1)/2⌋".into(),
        ));
    }
    let qb = BigUint::from(q);
    let mut num = qb.pow(m.div_ceil(2) as u32) - 1u32;
    if m % 2 == 1 {
        num -= BigUint::from(q - 2);
    }
    let num = BigInt::from(BigUint::from(n) * num);
    let den = BigInt::from(qb.pow(m as u32) - 1u32);
    Ok(Ratio::new(num, den))
}

/// Narrow-sense Euclidean threshold when ord_n(q) = 1 (n | q−1): containment
/// holds iff δ ≤ ⌊(n+1)/2⌋, exactly.
pub fn euclid_order_one_threshold(n: u64, q: u64) -> Result<u64> {
    if n == 0 || q < 2 || q % n != 1 % n {
        return Err(Error::HypothesisViolated(format!(
            "order-one rule needs q ≡ 1 (mod n); got n={n}, q={q}"
        )));
    }
    Ok(n.div_ceil(2))
}

/// ⌊q√n⌋, computed exactly: for m = ord_n(q) ≥ 2, every narrow-sense
/// δ ≥ this value fails Euclidean dual containment.
pub fn euclid_necessary(n: u64, q: u64) -> u64 {
    isqrt(q as u128 * q as u128 * n as u128) as u64
}

/// Some(κ) when κ is integral and m ≥ 2: then narrow-sense containment
/// holds iff 2 ≤ δ ≤ κ (an exact boundary). None otherwise.
pub fn euclid_exact_threshold(n: u64, q: u64) -> Result<Option<u64>> {
    let m = multiplicative_order(q, n)?;
    if m < 2 {
        return Ok(None);
    }
    let k = kappa(n, q)?;
    if k.is_integer() {
        Ok(Some(k.to_integer().to_u64().expect("κ < n fits u64")))
    } else {
        Ok(None)
    }
}

/// Exponent e with q^e = n + 1, when n is a primitive length for q.
pub fn primitive_exponent(n: u64, q: u64) -> Option<u32> {
    if q < 2 {
        return None;
    }
    let target = n as u128 + 1;
    let mut acc: u128 = 1;
    let mut e = 0u32;
    while acc < target {
        acc = acc.checked_mul(q as u128)?;
        e += 1;
    }
    (acc == target && e >= 1).then_some(e)
}

/// Primitive-length Euclidean bound valid for every b: with n = q^m − 1 and
/// m ≥ 2, any δ strictly above the returned value gives a code that cannot
/// contain its Euclidean dual.
pub fn nonnarrow_euclid_bound(n: u64, q: u64) -> Result<u64> {
    let m = primitive_exponent(n, q).ok_or_else(|| {
        Error::HypothesisViolated(format!("n = {n} is not q^m − 1 for q = {q}"))
    })?;
    if m < 2 {
        return Err(Error::HypothesisViolated(
            "primitive non-narrow-sense bound needs m ≥ 2".into(),
        ));
    }
    let value = if m % 2 == 0 {
        (q as u128).pow(m / 2) - 1
    } else {
        2 * ((q as u128).pow(m.div_ceil(2)) - q as u128 + 1)
    };
    Ok(value as u64)
}

/// Narrow-sense Hermitian sufficient threshold over GF(q̄²): with
/// m = ord_n(q̄²), every δ ≤ ⌊n·(q̄^{m+[m even]} − 1 − (q̄²−2)·[m even]) /
/// (q̄^{2m} − 1)⌋ gives a Hermitian-dual-containing code.
pub fn hermitian_sufficient(n: u64, q_base: u64) -> Result<u64> {
    let q2 = q_base
        .checked_mul(q_base)
        .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
    let m = multiplicative_order(q2, n)?;
    let qb = BigUint::from(q_base);
    let mut num = qb.pow((m + u64::from(m % 2 == 0)) as u32) - 1u32;
    if m % 2 == 0 {
        num -= BigUint::from(q2 - 2);
    }
    let num = BigUint::from(n) * num;
    let den = qb.pow(2 * m as u32) - 1u32;
    Ok((num / den).to_u64().expect("threshold < n fits u64"))
}

/// Largest δ covered by the Hermitian dual-distance lemma:
/// ⌊n·(q̄^m − 1)/(q̄^{2m} − 1)⌋ with m = ord_n(q̄²). This is the threshold
/// the quantum Hermitian family gates on; it coincides with
/// [`hermitian_sufficient`] for odd m and is smaller for even m.
pub fn hermitian_dual_delta_max(n: u64, q_base: u64) -> Result<u64> {
    let q2 = q_base
        .checked_mul(q_base)
        .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
    let m = multiplicative_order(q2, n)?;
    let qb = BigUint::from(q_base);
    let num = BigUint::from(n) * (qb.pow(m as u32) - 1u32);
    let den = qb.pow(2 * m as u32) - 1u32;
    Ok((num / den).to_u64().expect("threshold < n fits u64"))
}

/// Divisible-length Hermitian bound valid for every b: when (q̄^m + 1) | n
/// with m = ord_n(q̄²) odd, any δ strictly above n/(q̄^m + 1) gives a code
/// that cannot contain its Hermitian dual. The even-m analogue is false
/// (counterexample: n = 15, q̄ = 2, b = 2, δ = 3 is dual-containing), so
/// even m reports NotApplicable.
pub fn hermitian_nonnarrow_special(n: u64, q_base: u64) -> Result<u64> {
    let q2 = q_base
        .checked_mul(q_base)
        .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
    let m = multiplicative_order(q2, n)?;
    let qm: u128 = {
        let mut acc: u128 = 1;
        for _ in 0..m {
            acc = acc.saturating_mul(q_base as u128);
        }
        acc
    };
    let divisor = qm + 1;
    if divisor > n as u128 || !(n as u128).is_multiple_of(divisor) {
        return Err(Error::HypothesisViolated(format!(
            "n = {n} is not divisible by q̄^m + 1 = {divisor}"
        )));
    }
    if m % 2 == 0 {
        return Err(Error::NotApplicable(
            "divisible-length Hermitian bound holds only for odd m".into(),
        ));
    }
    Ok((n as u128 / divisor) as u64)
}

/// Primitive-length Hermitian bound valid for every b: with n = q̄^{2m} − 1,
/// any δ strictly above the returned value gives a code that cannot contain
/// its Hermitian dual — for m odd the bound is q̄^m − 1, for even m ≥ 4 it
/// is 2(q̄^{m+1} − q̄² + 1); m = 2 is outside the theorem.
pub fn hermitian_nonnarrow_primitive_bound(n: u64, q_base: u64) -> Result<u64> {
    let q2 = q_base
        .checked_mul(q_base)
        .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
    let m = primitive_exponent(n, q2).ok_or_else(|| {
        Error::HypothesisViolated(format!(
            "n = {n} is not q̄^{{2m}} − 1 for q̄ = {q_base}"
        ))
    })?;
    if m == 2 {
        return Err(Error::NotApplicable(
            "primitive Hermitian bound excludes m = 2".into(),
        ));
    }
    let q = q_base as u128;
    let value = if m % 2 == 1 {
        q.pow(m) - 1
    } else {
        2 * (q.pow(m + 1) - q * q + 1)
    };
    Ok(value as u64)
}

/// Aggregated narrow-sense thresholds (and the all-b primitive bound) for
/// one (n, q, flavor) triple.
#[derive(Clone, Debug)]
pub struct ThresholdReport {
    pub n: u64,
    /// The base parameter as passed in: q itself for Euclidean, q̄ for
    /// Hermitian.
    pub q: u64,
    /// Alphabet of the code: q, or q̄² for Hermitian.
    pub alphabet: u64,
    /// m = ord_n(alphabet).
    pub m: u64,
    pub flavor: Flavor,
    /// The sufficient/necessary/exact entries below are statements about
    /// narrow-sense codes (b = 1); `nonnarrow` holds for every b.
    pub narrow_sense: bool,
    /// Exact rational κ (Euclidean, m ≥ 2 only).
    pub kappa: Option<Ratio<BigInt>>,
    /// Every narrow-sense δ ≤ this is dual-containing.
    pub sufficient: u64,
    /// Every narrow-sense δ ≥ this fails containment (when present).
    pub necessary: Option<u64>,
    /// When present, narrow-sense containment holds iff δ ≤ this value
    /// (and it always equals `sufficient`).
    pub exact: Option<u64>,
    /// Primitive-length bound over all b: δ > this ⇒ not dual-containing.
    pub nonnarrow: Option<u64>,
}

impl ThresholdReport {
    /// κ as exact decimal strings (numerator, denominator).
    pub fn kappa_parts(&self) -> Option<(String, String)> {
        self.kappa
            .as_ref()
            .map(|k| (k.numer().to_string(), k.denom().to_string()))
    }
}

/// Builds the full [`ThresholdReport`] for (n, q, flavor); `q` is the base
/// parameter (so the Hermitian code lives over GF(q²)).
pub fn threshold_report(n: u64, q: u64, flavor: Flavor) -> Result<ThresholdReport> {
    match flavor {
        Flavor::Euclidean => {
            let ctx = CosetContext::new(n, q)?;
            let m = ctx.m();
            if m == 1 {
                let t = euclid_order_one_threshold(n, q)?;
                return Ok(ThresholdReport {
                    n,
                    q,
                    alphabet: q,
                    m,
                    flavor,
                    narrow_sense: true,
                    kappa: None,
                    sufficient: t,
                    necessary: Some(t + 1),
                    exact: Some(t),
                    nonnarrow: None,
                });
            }
            let k = kappa(n, q)?;
            let sufficient = k
                .floor()
                .to_integer()
                .to_u64()
                .expect("⌊κ⌋ < n fits u64");
            let necessary = euclid_necessary(n, q);
            assert!(
                sufficient <= necessary,
                "threshold inconsistency at n={n}, q={q}: ⌊κ⌋={sufficient} > ⌊q√n⌋={necessary}"
            );
            let exact = if k.is_integer() { Some(sufficient) } else { None };
            let nonnarrow = nonnarrow_euclid_bound(n, q).ok();
            Ok(ThresholdReport {
                n,
                q,
                alphabet: q,
                m,
                flavor,
                narrow_sense: true,
                kappa: Some(k),
                sufficient,
                necessary: Some(necessary),
                exact,
                nonnarrow,
            })
        }
        Flavor::Hermitian => {
            let q2 = q
                .checked_mul(q)
                .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
            let ctx = CosetContext::new(n, q2)?;
            let m = ctx.m();
            let sufficient = hermitian_sufficient(n, q)?;
            let nonnarrow = hermitian_nonnarrow_primitive_bound(n, q).ok();
            Ok(ThresholdReport {
                n,
                q,
                alphabet: q2,
                m,
                flavor,
                narrow_sense: true,
                kappa: None,
                sufficient,
                necessary: None,
                exact: None,
                nonnarrow,
            })
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn rat(n: i64, d: i64) -> Ratio<BigInt> {
        Ratio::new(BigInt::from(n), BigInt::from(d))
    }

    #[test]
    fn euclidean_containment_examples() {
        assert!(euclidean_dual_containing(&[1, 2, 4, 8], 15));
        assert!(!euclidean_dual_containing(&[0], 15));
        assert!(!euclidean_dual_containing(&[1, 2, 3, 4, 6, 8, 9, 12], 15));
        // Empty defining set: the whole space contains its (zero) dual.
        assert!(euclidean_dual_containing(&[], 15));
    }

    #[test]
    fn hermitian_containment_examples() {
        // n = 15 over GF(4), base q̄ = 2: δ = 5 defines {1,2,3,4,8,12}.
        assert!(hermitian_dual_containing(&[1, 2, 3, 4, 8, 12], 15, 2));
        // δ = 6 adds the coset {5}; −2·5 ≡ 5 (mod 15) breaks it.
        assert!(!hermitian_dual_containing(&[1, 2, 3, 4, 5, 8, 12], 15, 2));
        assert!(!hermitian_dual_containing(&[0], 15, 2));
    }

    #[test]
    fn kappa_values() {
        assert_eq!(kappa(15, 2).unwrap(), rat(3, 1));
        assert_eq!(kappa(31, 2).unwrap(), rat(7, 1));
        assert_eq!(kappa(26, 3).unwrap(), rat(7, 1));
        // Non-integral: n = 21, q = 2 has m = 6, κ = 21·7/63 = 7/3.
        assert_eq!(kappa(21, 2).unwrap(), rat(7, 3));
        assert!(kappa(3, 4).is_err()); // ord₃(4) = 1
    }

    #[test]
    fn order_one_rule() {
        assert_eq!(euclid_order_one_threshold(5, 11).unwrap(), 3);
        assert_eq!(euclid_order_one_threshold(1, 2).unwrap(), 1);
        // Reed–Solomon length n = q − 1 → ⌊q/2⌋.
        assert_eq!(euclid_order_one_threshold(6, 7).unwrap(), 3);
        assert!(euclid_order_one_threshold(15, 2).is_err());
    }

    #[test]
    fn necessary_threshold_is_exact_integer_sqrt() {
        assert_eq!(euclid_necessary(15, 2), 7);
        assert_eq!(euclid_necessary(63, 2), 15);
        // Perfect squares hit the boundary exactly.
        assert_eq!(euclid_necessary(9, 3), 9);
        assert_eq!(euclid_necessary(4, 2), 4);
    }

    #[test]
    fn exact_threshold_gate() {
        assert_eq!(euclid_exact_threshold(15, 2).unwrap(), Some(3));
        assert_eq!(euclid_exact_threshold(31, 2).unwrap(), Some(7));
        assert_eq!(euclid_exact_threshold(26, 3).unwrap(), Some(7));
        assert_eq!(euclid_exact_threshold(21, 2).unwrap(), None);
        // Primitive lengths always qualify.
        assert_eq!(euclid_exact_threshold(63, 2).unwrap(), Some(7));
    }

    #[test]
    fn primitive_exponent_detection() {
        assert_eq!(primitive_exponent(15, 2), Some(4));
        assert_eq!(primitive_exponent(15, 4), Some(2));
        assert_eq!(primitive_exponent(21, 2), None);
        assert_eq!(primitive_exponent(0, 2), None);
        assert_eq!(primitive_exponent(1, 2), Some(1));
    }

    #[test]
    fn nonnarrow_euclid_values() {
        assert_eq!(nonnarrow_euclid_bound(15, 2).unwrap(), 3);
        assert_eq!(nonnarrow_euclid_bound(31, 2).unwrap(), 14);
        assert_eq!(nonnarrow_euclid_bound(63, 2).unwrap(), 7);
        assert!(nonnarrow_euclid_bound(21, 2).is_err());
        assert!(nonnarrow_euclid_bound(1, 2).is_err()); // m = 1
    }

    #[test]
    fn hermitian_sufficient_values() {
        assert_eq!(hermitian_sufficient(15, 2).unwrap(), 5);
        assert_eq!(hermitian_sufficient(5, 2).unwrap(), 1);
        // Primitive n = q̄^{2m} − 1 with m odd gives q̄^m − 1.
        assert_eq!(hermitian_sufficient(63, 2).unwrap(), 7);
    }

    #[test]
    fn hermitian_dual_delta_max_values() {
        // Even m: strictly below the sufficient threshold (3 < 5).
        assert_eq!(hermitian_dual_delta_max(15, 2).unwrap(), 3);
        // Odd m: coincides with the sufficient threshold.
        assert_eq!(hermitian_dual_delta_max(63, 2).unwrap(), 7);
        assert_eq!(hermitian_dual_delta_max(5, 2).unwrap(), 1);
    }

    #[test]
    fn hermitian_special_bound_scope() {
        // m = 2 (even) is excluded: the even case is genuinely false.
        assert_eq!(
            hermitian_nonnarrow_special(15, 2),
            Err(Error::NotApplicable(
                "divisible-length Hermitian bound holds only for odd m".into()
            ))
        );
        // n = 63, q̄ = 2: m = 3 odd, 2³+1 = 9 | 63 → 7.
        assert_eq!(hermitian_nonnarrow_special(63, 2).unwrap(), 7);
        assert!(matches!(
            hermitian_nonnarrow_special(26, 3),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn hermitian_primitive_bound_values() {
        assert!(matches!(
            hermitian_nonnarrow_primitive_bound(15, 2),
            Err(Error::NotApplicable(_))
        ));
        assert_eq!(hermitian_nonnarrow_primitive_bound(63, 2).unwrap(), 7);
        assert_eq!(hermitian_nonnarrow_primitive_bound(255, 2).unwrap(), 58);
        assert!(matches!(
            hermitian_nonnarrow_primitive_bound(26, 3),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn report_euclidean_primitive() {
        let r = threshold_report(15, 2, Flavor::Euclidean).unwrap();
        assert_eq!(r.m, 4);
        assert_eq!(r.alphabet, 2);
        assert_eq!(r.kappa, Some(rat(3, 1)));
        assert_eq!(r.sufficient, 3);
        assert_eq!(r.necessary, Some(7));
        assert_eq!(r.exact, Some(3));
        assert_eq!(r.nonnarrow, Some(3));
        assert_eq!(r.kappa_parts(), Some(("3".into(), "1".into())));
    }

    #[test]
    fn report_euclidean_order_one() {
        let r = threshold_report(6, 7, Flavor::Euclidean).unwrap();
        assert_eq!(r.m, 1);
        assert_eq!(r.kappa, None);
        assert_eq!(r.sufficient, 3);
        assert_eq!(r.necessary, Some(4));
        assert_eq!(r.exact, Some(3));
        assert_eq!(r.nonnarrow, None);
    }

    #[test]
    fn report_hermitian() {
        let r = threshold_report(15, 2, Flavor::Hermitian).unwrap();
        assert_eq!(r.alphabet, 4);
        assert_eq!(r.m, 2);
        assert_eq!(r.sufficient, 5);
        assert_eq!(r.necessary, None);
        assert_eq!(r.exact, None);
        assert_eq!(r.nonnarrow, None); // m = 2 exclusion
        let r63 = threshold_report(63, 2, Flavor::Hermitian).unwrap();
        assert_eq!(r63.sufficient, 7);
        assert_eq!(r63.nonnarrow, Some(7));
    }

    #[test]
    fn report_nonintegral_kappa_has_no_exact() {
        let r = threshold_report(21, 2, Flavor::Euclidean).unwrap();
        assert_eq!(r.kappa, Some(rat(7, 3)));
        assert_eq!(r.sufficient, 2);
        assert_eq!(r.exact, None);
        assert_eq!(r.nonnarrow, None);
    }
}
