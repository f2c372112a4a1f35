//! Quantum stabilizer code parameter families built from dual-containing
//! classical BCH codes: nested CSS pairs, the Euclidean and Hermitian
//! single-code constructions, and the alphabet-expansion family.

use num_traits::ToPrimitive;
use serde::Serialize;

use crate::bch::{dimension_deficit_per_m, dimension_formula, dual_distance_lower_bound, BchCode};
use crate::cyclotomic::multiplicative_order;
use crate::duality::{
    euclidean_dual_containing, hermitian_dual_containing, hermitian_dual_delta_max, kappa, Flavor,
};
use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Construction {
    NestedCss,
    EuclideanCss,
    Hermitian,
    Expanded,
}

/// The classical ingredients a quantum parameter set was derived from.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Provenance {
    pub classical_n: u64,
    pub classical_alphabet: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta: Option<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub delta_pair: Option<(u64, u64)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expansion_degree: Option<u64>,
}

/// An [[n, k, ≥ d_low]]_q parameter set with optional purity bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct QuantumCodeParams {
    pub n: u64,
    pub k: u64,
    /// Dimension by the commonly stated closed form for the expanded
    /// family; emitted only when it differs from the derivation-consistent
    /// `k` (the ceiling taken over the expanded alphabet).
    #[serde(skip_serializing_if = "Option::is_none")]
    pub k_as_printed: Option<u64>,
    pub d_low: u64,
    pub q: u64,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub pure_to: Option<u64>,
    pub construction: Construction,
    pub provenance: Provenance,
}

fn euclid_delta_max(n: u64, q: u64) -> Result<u64> {
    Ok(kappa(n, q)?
        .floor()
        .to_integer()
        .to_u64()
        .expect("⌊κ⌋ < n fits u64"))
}

/// CSS construction from the nested narrow-sense pair C(δ₂) ⊆ C(δ₁):
/// [[n, m(δ₂−δ₁−⌊(δ₂−1)/q⌋+⌊(δ₁−1)/q⌋), ≥ δ₁]]_q, pure to δ₂.
pub fn nested_css(n: u64, q: u64, delta1: u64, delta2: u64) -> Result<QuantumCodeParams> {
    let delta_max = euclid_delta_max(n, q)?;
    if delta1 < 2 || delta1 >= delta2 || delta2 > delta_max {
        return Err(Error::HypothesisViolated(format!(
            "nested pair needs 2 ≤ δ₁ < δ₂ ≤ {delta_max}; got ({delta1}, {delta2})"
        )));
    }
    let m = multiplicative_order(q, n)?;
    let k = m as i128
        * (delta2 as i128 - delta1 as i128 - ((delta2 - 1) / q) as i128
            + ((delta1 - 1) / q) as i128);
    assert!(k >= 0, "nested dimension cannot be negative");
    let k = k as u64;
    // Cross-route check: the same dimension via the closed-form classical
    // dimensions k(δ₁) − k(δ₂).
    let k1 = dimension_formula(n, q, delta1)?;
    let k2 = dimension_formula(n, q, delta2)?;
    assert_eq!(k, k1 - k2, "nested dimension routes disagree");
    Ok(QuantumCodeParams {
        n,
        k,
        k_as_printed: None,
        d_low: delta1,
        q,
        pure_to: Some(delta2),
        construction: Construction::NestedCss,
        provenance: Provenance {
            classical_n: n,
            classical_alphabet: q,
            delta: None,
            delta_pair: Some((delta1, delta2)),
            expansion_degree: None,
        },
    })
}

/// CSS construction from one Euclidean-dual-containing narrow-sense code:
/// [[n, n − 2m⌈(δ−1)(1−1/q)⌉, ≥ δ]]_q, pure to ⌊κ⌋ + 1.
pub fn euclid_css(n: u64, q: u64, delta: u64) -> Result<QuantumCodeParams> {
    let delta_max = euclid_delta_max(n, q)?;
    if delta < 2 || delta > delta_max {
        return Err(Error::HypothesisViolated(format!(
            "Euclidean CSS needs 2 ≤ δ ≤ {delta_max}; got δ={delta}"
        )));
    }
    let code = BchCode::construct(n, q, 1, delta)?;
    assert!(
        euclidean_dual_containing(code.defining_set(), n),
        "threshold guarantee failed: ({n},{q},δ={delta}) not Euclidean dual-containing"
    );
    let m = code.m();
    let k = n as i128 - 2 * (m * dimension_deficit_per_m(delta, q)) as i128;
    assert_eq!(
        k,
        2 * code.k() as i128 - n as i128,
        "CSS dimension routes disagree at ({n},{q},δ={delta})"
    );
    assert!(k >= 0);
    let pure_to = delta_max + 1;
    debug_assert_eq!(pure_to, dual_distance_lower_bound(&code, Flavor::Euclidean).unwrap());
    Ok(QuantumCodeParams {
        n,
        k: k as u64,
        k_as_printed: None,
        d_low: delta,
        q,
        pure_to: Some(pure_to),
        construction: Construction::EuclideanCss,
        provenance: Provenance {
            classical_n: n,
            classical_alphabet: q,
            delta: Some(delta),
            delta_pair: None,
            expansion_degree: None,
        },
    })
}

/// Hermitian construction from one Hermitian-dual-containing narrow-sense
/// code over GF(q̄²): [[n, n − 2m⌈(δ−1)(1−1/q̄²)⌉, ≥ δ]]_q̄, pure to
/// δ_max + 1 with δ_max = ⌊n(q̄^m−1)/(q̄^{2m}−1)⌋.
pub fn hermitian_family(n: u64, q_base: u64, delta: u64) -> Result<QuantumCodeParams> {
    let q2 = q_base
        .checked_mul(q_base)
        .ok_or_else(|| Error::InvalidParameter("base alphabet too large".into()))?;
    let m = multiplicative_order(q2, n)?;
    if m < 2 {
        return Err(Error::HypothesisViolated(
            "Hermitian family needs ord_n(q̄²) ≥ 2".into(),
        ));
    }
    let delta_max = hermitian_dual_delta_max(n, q_base)?;
    if delta < 2 || delta > delta_max {
        return Err(Error::HypothesisViolated(format!(
            "Hermitian family needs 2 ≤ δ ≤ {delta_max}; got δ={delta}"
        )));
    }
    let code = BchCode::construct(n, q2, 1, delta)?;
    assert!(
        hermitian_dual_containing(code.defining_set(), n, q_base),
        "threshold guarantee failed: ({n},{q2},δ={delta}) not Hermitian dual-containing"
    );
    let k = n as i128 - 2 * (m * dimension_deficit_per_m(delta, q2)) as i128;
    assert_eq!(
        k,
        2 * code.k() as i128 - n as i128,
        "Hermitian dimension routes disagree at ({n},{q2},δ={delta})"
    );
    assert!(k >= 0);
    let pure_to = delta_max + 1;
    debug_assert_eq!(pure_to, dual_distance_lower_bound(&code, Flavor::Hermitian).unwrap());
    Ok(QuantumCodeParams {
        n,
        k: k as u64,
        k_as_printed: None,
        d_low: delta,
        q: q_base,
        pure_to: Some(pure_to),
        construction: Construction::Hermitian,
        provenance: Provenance {
            classical_n: n,
            classical_alphabet: q2,
            delta: Some(delta),
            delta_pair: None,
            expansion_degree: None,
        },
    })
}

/// Expansion of the Euclidean CSS family from GF(q^l) down to GF(q):
/// [[l·n, l·(n − 2m⌈(δ−1)(1−1/q^l)⌉), ≥ δ]]_q. The ceiling uses q^l, as
/// the underlying derivation does; the variant with q in the ceiling is
/// reported as `k_as_printed` when the two differ.
pub fn expanded_family(n: u64, q: u64, l: u64, delta: u64) -> Result<QuantumCodeParams> {
    if l < 1 {
        return Err(Error::InvalidParameter("expansion degree must be ≥ 1".into()));
    }
    let big_q = (0..l).try_fold(1u64, |acc, _| acc.checked_mul(q)).ok_or_else(|| {
        Error::InvalidParameter(format!("q^l overflows: q={q}, l={l}"))
    })?;
    let inner = euclid_css(n, big_q, delta)?;
    let m = multiplicative_order(big_q, n)?;
    let k = l * inner.k;
    let printed = l as i128 * n as i128
        - 2 * (l * m * dimension_deficit_per_m(delta, q)) as i128;
    let k_as_printed = if printed != k as i128 && printed >= 0 {
        Some(printed as u64)
    } else {
        None
    };
    Ok(QuantumCodeParams {
        n: l * n,
        k,
        k_as_printed,
        d_low: delta,
        q,
        pure_to: None,
        construction: Construction::Expanded,
        provenance: Provenance {
            classical_n: n,
            classical_alphabet: big_q,
            delta: Some(delta),
            delta_pair: None,
            expansion_degree: Some(l),
        },
    })
}

fn sorted_subset(a: &[u64], b: &[u64]) -> bool {
    let mut j = 0;
    for &x in a {
        while j < b.len() && b[j] < x {
            j += 1;
        }
        if j == b.len() || b[j] != x {
            return false;
        }
        j += 1;
    }
    true
}

/// General CSS lemma for an explicitly nested pair C₁ ⊆ C₂ (equivalently
/// Z₂ ⊆ Z₁ on defining sets): [[n, k₂ − k₁, ≥ δ₂]], distance reported as
/// the designed distance of the larger code.
pub fn css_general(c1: &BchCode, c2: &BchCode) -> Result<QuantumCodeParams> {
    if c1.n() != c2.n() || c1.q() != c2.q() {
        return Err(Error::InvalidParameter(
            "CSS pair must share length and alphabet".into(),
        ));
    }
    if !sorted_subset(c2.defining_set(), c1.defining_set()) {
        return Err(Error::NotNested);
    }
    Ok(QuantumCodeParams {
        n: c1.n(),
        k: c2.k() - c1.k(),
        k_as_printed: None,
        d_low: c2.delta(),
        q: c1.q(),
        pure_to: None,
        construction: Construction::NestedCss,
        provenance: Provenance {
            classical_n: c1.n(),
            classical_alphabet: c1.q(),
            delta: None,
            delta_pair: Some((c2.delta(), c1.delta())),
            expansion_degree: None,
        },
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_css_examples() {
        let p = nested_css(31, 2, 3, 5).unwrap();
        assert_eq!((p.n, p.k, p.d_low), (31, 5, 3));
        assert_eq!(p.pure_to, Some(5));
        assert_eq!(p.q, 2);
        assert_eq!(p.provenance.delta_pair, Some((3, 5)));

        let zero = nested_css(15, 2, 2, 3).unwrap();
        assert_eq!((zero.n, zero.k, zero.d_low), (15, 0, 2));

        assert!(matches!(
            nested_css(15, 2, 3, 3),
            Err(Error::HypothesisViolated(_))
        ));
        assert!(matches!(
            nested_css(15, 2, 2, 4), // δ₂ beyond ⌊κ⌋ = 3
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn euclid_css_examples() {
        let p = euclid_css(31, 2, 7).unwrap();
        assert_eq!((p.n, p.k, p.d_low), (31, 1, 7));
        assert_eq!(p.pure_to, Some(8));

        let p15 = euclid_css(15, 2, 3).unwrap();
        assert_eq!((p15.n, p15.k, p15.d_low), (15, 7, 3));
        assert_eq!(p15.pure_to, Some(4));
        assert_eq!(p15.construction, Construction::EuclideanCss);

        assert!(matches!(
            euclid_css(15, 2, 4),
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn hermitian_family_examples() {
        let p = hermitian_family(15, 2, 3).unwrap();
        assert_eq!((p.n, p.k, p.d_low, p.q), (15, 7, 3, 2));
        assert_eq!(p.pure_to, Some(4));
        assert_eq!(p.provenance.classical_alphabet, 4);

        let p63 = hermitian_family(63, 2, 7).unwrap();
        assert_eq!((p63.n, p63.k, p63.d_low), (63, 33, 7));
        assert_eq!(p63.pure_to, Some(8));

        // δ_max = 3 for (15, q̄=2).
        assert!(matches!(
            hermitian_family(15, 2, 4),
            Err(Error::HypothesisViolated(_))
        ));
        // δ = 2 gives k = n − 2m.
        let p2 = hermitian_family(15, 2, 2).unwrap();
        assert_eq!(p2.k, 15 - 2 * 2);
    }

    #[test]
    fn expanded_family_examples() {
        let p = expanded_family(15, 2, 2, 3).unwrap();
        assert_eq!((p.n, p.k, p.d_low, p.q), (30, 14, 3, 2));
        assert_eq!(p.k_as_printed, Some(22));
        assert_eq!(p.provenance.expansion_degree, Some(2));
        assert_eq!(p.provenance.classical_alphabet, 4);

        // Degenerate l = 1 matches euclid_css and collapses k_as_printed.
        let p1 = expanded_family(15, 2, 1, 3).unwrap();
        let css = euclid_css(15, 2, 3).unwrap();
        assert_eq!((p1.n, p1.k, p1.d_low), (css.n, css.k, css.d_low));
        assert_eq!(p1.k_as_printed, None);

        assert!(matches!(
            expanded_family(15, 2, 2, 4), // κ(15, 4) = 3
            Err(Error::HypothesisViolated(_))
        ));
    }

    #[test]
    fn css_general_matches_nested() {
        let c1 = BchCode::construct(31, 2, 1, 5).unwrap();
        let c2 = BchCode::construct(31, 2, 1, 3).unwrap();
        let p = css_general(&c1, &c2).unwrap();
        assert_eq!((p.n, p.k, p.d_low), (31, 5, 3));
        let reference = nested_css(31, 2, 3, 5).unwrap();
        assert_eq!((p.n, p.k, p.d_low), (reference.n, reference.k, reference.d_low));
    }

    #[test]
    fn css_general_gates() {
        let c1 = BchCode::construct(15, 2, 1, 3).unwrap();
        let c2 = BchCode::construct(15, 2, 1, 5).unwrap();
        // Z(δ=5) ⊄ Z(δ=3): wrong nesting direction.
        assert_eq!(css_general(&c1, &c2).unwrap_err(), Error::NotNested);
        // Equal codes: k = 0.
        let c3 = BchCode::construct(15, 2, 1, 3).unwrap();
        assert_eq!(css_general(&c1, &c3).unwrap().k, 0);
        // Mismatched ambient parameters.
        let other = BchCode::construct(31, 2, 1, 3).unwrap();
        assert!(matches!(
            css_general(&c1, &other),
            Err(Error::InvalidParameter(_))
        ));
    }

    #[test]
    fn dimension_parity_and_bounds() {
        for p in [
            nested_css(31, 2, 3, 5).unwrap(),
            euclid_css(15, 2, 3).unwrap(),
            hermitian_family(63, 2, 7).unwrap(),
            expanded_family(15, 2, 2, 3).unwrap(),
        ] {
            assert!(p.k <= p.n);
            assert!(p.d_low >= 2);
            if let Some(pt) = p.pure_to {
                assert!(pt >= p.d_low);
            }
        }
    }
}
