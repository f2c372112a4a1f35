//! Exhaustive small-grid scans: every threshold the library reports is
//! replayed against the raw exponent-set predicates, boundary by
//! boundary, so a wrong inequality direction or an off-by-one cannot
//! hide.

use bchkit::arith::gcd;
use bchkit::bch;
use bchkit::cyclotomic::CosetContext;
use bchkit::duality::{
    euclid_order_one_threshold, euclidean_dual_containing, hermitian_dual_containing,
    hermitian_dual_delta_max, hermitian_nonnarrow_primitive_bound, hermitian_nonnarrow_special,
    hermitian_sufficient, nonnarrow_euclid_bound, threshold_report, Flavor,
};
use bchkit::Error;

/// Largest delta (>= 2) whose narrow-sense code is dual-containing, or 1
/// when none is. Also asserts that containment is downward closed, so a
/// single number describes the whole boundary.
fn true_euclid_max(ctx: &CosetContext) -> u64 {
    let n = ctx.n();
    let mut max = 1;
    let mut containing = true;
    for delta in 2..=n {
        let z = ctx.defining_set(1, delta).unwrap();
        let now = euclidean_dual_containing(&z, n);
        assert!(
            containing || !now,
            "containment must be downward closed, broken at delta = {delta} for n = {n}, q = {}",
            ctx.q()
        );
        if now {
            max = delta;
        }
        containing = now;
    }
    max
}

fn true_hermitian_max(ctx: &CosetContext, q_base: u64) -> u64 {
    let n = ctx.n();
    let mut max = 1;
    let mut containing = true;
    for delta in 2..=n {
        let z = ctx.defining_set(1, delta).unwrap();
        let now = hermitian_dual_containing(&z, n, q_base);
        assert!(containing || !now, "downward closure broken at delta = {delta}, n = {n}");
        if now {
            max = delta;
        }
        containing = now;
    }
    max
}

#[test]
fn euclidean_thresholds_bracket_the_true_boundary() {
    for q in [2u64, 3, 4, 5, 7, 8, 9, 11, 13, 16] {
        for n in 2..=100u64 {
            if gcd(n, q) != 1 {
                continue;
            }
            let ctx = CosetContext::new(n, q).unwrap();
            let report = threshold_report(n, q, Flavor::Euclidean).unwrap();
            let true_max = true_euclid_max(&ctx);
            assert!(
                report.sufficient <= 1 || report.sufficient <= true_max,
                "sufficient {} overshoots true boundary {true_max} at n = {n}, q = {q}",
                report.sufficient
            );
            let necessary = report.necessary.unwrap();
            assert!(
                true_max < necessary,
                "containing delta {true_max} at or past the necessary cutoff {necessary}, n = {n}, q = {q}"
            );
            if let Some(exact) = report.exact {
                assert_eq!(
                    true_max.max(1),
                    exact.max(1),
                    "exact threshold misses the true boundary at n = {n}, q = {q}"
                );
            }
        }
    }
}

#[test]
fn hermitian_thresholds_bracket_the_true_boundary() {
    for q_base in [2u64, 3, 4, 5] {
        let alphabet = q_base * q_base;
        for n in 2..=80u64 {
            if gcd(n, alphabet) != 1 {
                continue;
            }
            let ctx = CosetContext::new(n, alphabet).unwrap();
            let sufficient = hermitian_sufficient(n, q_base).unwrap();
            let true_max = true_hermitian_max(&ctx, q_base);
            assert!(
                sufficient <= 1 || sufficient <= true_max,
                "Hermitian sufficient {sufficient} overshoots boundary {true_max} at n = {n}, base {q_base}"
            );
            // The quantum gate is at most the sufficient threshold and
            // therefore also safe.
            let gate = hermitian_dual_delta_max(n, q_base).unwrap();
            assert!(gate <= sufficient, "n = {n}, base {q_base}");
        }
    }
}

#[test]
fn primitive_euclidean_bound_holds_for_every_offset() {
    // (n, q) with n = q^m - 1, m >= 2.
    let cases = [
        (15u64, 2u64),
        (31, 2),
        (63, 2),
        (8, 3),
        (26, 3),
        (80, 3),
        (15, 4),
        (63, 4),
        (24, 5),
        (124, 5),
        (48, 7),
        (63, 8),
        (80, 9),
    ];
    for (n, q) in cases {
        let bound = nonnarrow_euclid_bound(n, q).unwrap();
        let ctx = CosetContext::new(n, q).unwrap();
        for b in 0..n {
            for delta in bound + 1..=(bound + 6).min(n) {
                let z = ctx.defining_set(b, delta).unwrap();
                assert!(
                    !euclidean_dual_containing(&z, n),
                    "b = {b}, delta = {delta} containing past the bound {bound} at n = {n}, q = {q}"
                );
            }
        }
    }
}

#[test]
fn primitive_euclidean_bound_is_witnessed() {
    // At the bound itself some offset still gives a containing code, so
    // the constant is not leaving room on the table.
    for (n, q) in [(15u64, 2u64), (63, 2), (80, 3)] {
        let bound = nonnarrow_euclid_bound(n, q).unwrap();
        let ctx = CosetContext::new(n, q).unwrap();
        let witnessed = (0..n).any(|b| {
            let z = ctx.defining_set(b, bound).unwrap();
            euclidean_dual_containing(&z, n)
        });
        assert!(witnessed, "no offset achieves delta = {bound} at n = {n}, q = {q}");
    }
}

#[test]
fn divisible_hermitian_bound_holds_for_every_offset() {
    // (n, q̄) with (q̄^m + 1) | n and m odd.
    for (n, q_base) in [(9u64, 2u64), (63, 2), (12, 5), (24, 5)] {
        let bound = hermitian_nonnarrow_special(n, q_base).unwrap();
        let alphabet = q_base * q_base;
        let ctx = CosetContext::new(n, alphabet).unwrap();
        for b in 0..n {
            for delta in bound + 1..=(bound + 6).min(n) {
                if delta < 2 {
                    continue;
                }
                let z = ctx.defining_set(b, delta).unwrap();
                assert!(
                    !hermitian_dual_containing(&z, n, q_base),
                    "b = {b}, delta = {delta} containing past bound {bound}, n = {n}, base {q_base}"
                );
            }
        }
    }
}

#[test]
fn divisible_hermitian_bound_refuses_even_m() {
    // The even-m analogue is genuinely false, not merely unproven: at
    // n = 15 over GF(4) the offset-2 code with delta = 3 contains its
    // Hermitian dual even though 15 is divisible by 2^2 + 1.
    match hermitian_nonnarrow_special(15, 2) {
        Err(Error::NotApplicable(_)) => {}
        other => panic!("expected NotApplicable, got {other:?}"),
    }
    let ctx = CosetContext::new(15, 4).unwrap();
    let z = ctx.defining_set(2, 3).unwrap();
    assert!(hermitian_dual_containing(&z, 15, 2));
    // A strict inequality is also required: at n = 12, base 5, the bound
    // value n/(q̄+1) = 2 is itself achieved by the offset-3 code.
    assert_eq!(hermitian_nonnarrow_special(12, 5).unwrap(), 2);
    let ctx12 = CosetContext::new(12, 25).unwrap();
    let z12 = ctx12.defining_set(3, 2).unwrap();
    assert!(hermitian_dual_containing(&z12, 12, 5));
}

#[test]
fn primitive_hermitian_bound_holds_for_every_offset() {
    // (n, q̄) with n = q̄^{2m} - 1, m != 2.
    for (n, q_base) in [(63u64, 2u64), (24, 5), (255, 2), (728, 3)] {
        let bound = hermitian_nonnarrow_primitive_bound(n, q_base).unwrap();
        let alphabet = q_base * q_base;
        let ctx = CosetContext::new(n, alphabet).unwrap();
        for b in 0..n {
            for delta in bound + 1..=(bound + 6).min(n) {
                let z = ctx.defining_set(b, delta).unwrap();
                assert!(
                    !hermitian_dual_containing(&z, n, q_base),
                    "b = {b}, delta = {delta} containing past bound {bound}, n = {n}, base {q_base}"
                );
            }
        }
    }
    assert!(matches!(
        hermitian_nonnarrow_primitive_bound(15, 2),
        Err(Error::NotApplicable(_))
    ));
}

#[test]
fn order_one_threshold_is_exact() {
    for (n, q) in [(6u64, 7u64), (5, 11), (12, 13), (24, 25), (15, 16), (2, 3), (4, 5)] {
        let t = euclid_order_one_threshold(n, q).unwrap();
        assert_eq!(t, n.div_ceil(2));
        let ctx = CosetContext::new(n, q).unwrap();
        for delta in 2..=n {
            let z = ctx.defining_set(1, delta).unwrap();
            assert_eq!(
                euclidean_dual_containing(&z, n),
                delta <= t,
                "delta = {delta}, n = {n}, q = {q}"
            );
        }
    }
}

#[test]
fn dimension_formula_agrees_with_coset_counts_everywhere_in_scope() {
    for q in [2u64, 3, 4, 5, 7, 8, 9] {
        for n in 2..=150u64 {
            if gcd(n, q) != 1 {
                continue;
            }
            let ctx = CosetContext::new(n, q).unwrap();
            for delta in 2..=n.min(60) {
                match bch::dimension_formula(n, q, delta) {
                    Ok(k) => {
                        let z = ctx.defining_set(1, delta).unwrap();
                        assert_eq!(
                            k,
                            n - z.len() as u64,
                            "closed form disagrees at n = {n}, q = {q}, delta = {delta}"
                        );
                    }
                    Err(_) => continue,
                }
            }
        }
    }
}

#[test]
fn distance_verdict_floor_respects_designed_distance() {
    // Structural scan: the floor never drops below delta, the ceiling is
    // only ever delta + 1, and forcing only happens when q divides delta.
    for q in [2u64, 3, 4, 5] {
        for n in 2..=80u64 {
            if gcd(n, q) != 1 {
                continue;
            }
            for delta in 2..=n.min(40) {
                let verdict = match bch::distance_verdict(n, q, delta) {
                    Ok(v) => v,
                    Err(_) => continue,
                };
                let lift = u64::from(delta % q == 0);
                assert_eq!(verdict.d_low, delta + lift);
                if let Some(hi) = verdict.d_high {
                    assert!(verdict.applicable);
                    assert_eq!(hi, delta + 1);
                }
                match verdict.forced_exact {
                    Some(forced) => {
                        assert!(verdict.applicable && lift == 1);
                        assert_eq!(forced, delta + 1);
                    }
                    None => assert!(!verdict.applicable || lift == 0),
                }
            }
        }
    }
}
