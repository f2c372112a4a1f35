//! BCH codes: construction from (n, q, b, δ), exact dimension, generator
//! polynomial and matrices, dual defining sets, the closed-form dimension
//! formula, and the sharpened two-value minimum-distance verdict.

use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::ToPrimitive;

use crate::arith::isqrt;
use crate::cyclotomic::{negate, scale_negate, CosetContext};
use crate::duality::{hermitian_dual_delta_max, kappa, Flavor};
use crate::error::{Error, Result};
use crate::gf::{Extension, Field, Matrix, Polynomial};

/// A q-ary BCH code of length n with designed distance δ and start
/// exponent b: the cyclic code whose defining set is the union of the
/// cyclotomic cosets of b, b+1, …, b+δ−2 (mod n).
#[derive(Debug)]
pub struct BchCode {
    ctx: CosetContext,
    b: u64,
    delta: u64,
    z: Vec<u64>,
    k: u64,
    narrow_sense: bool,
    primitive: bool,
    generator: OnceLock<Result<Polynomial>>,
}

impl BchCode {
    pub fn construct(n: u64, q: u64, b: u64, delta: u64) -> Result<BchCode> {
        let ctx = CosetContext::new(n, q)?;
        if delta < 2 || delta > n {
            return Err(Error::DeltaOutOfRange { delta, max: n });
        }
        let b = b % n;
        let z = ctx.defining_set(b, delta)?;
        let k = n - z.len() as u64;
        let narrow_sense = b == 1 % n;
        let primitive = crate::duality::primitive_exponent(n, q)
            .map(|e| {
                debug_assert_eq!(e as u64, ctx.m());
                true
            })
            .unwrap_or(false);
        Ok(BchCode {
            ctx,
            b,
            delta,
            z,
            k,
            narrow_sense,
            primitive,
            generator: OnceLock::new(),
        })
    }

    pub fn n(&self) -> u64 {
        self.ctx.n()
    }

    pub fn q(&self) -> u64 {
        self.ctx.q()
    }

    /// Start exponent, normalized into [0, n).
    pub fn b(&self) -> u64 {
        self.b
    }

    pub fn delta(&self) -> u64 {
        self.delta
    }

    /// Exact dimension n − |Z|.
    pub fn k(&self) -> u64 {
        self.k
    }

    pub fn m(&self) -> u64 {
        self.ctx.m()
    }

    pub fn ctx(&self) -> &CosetContext {
        &self.ctx
    }

    /// The defining set Z, sorted ascending.
    pub fn defining_set(&self) -> &[u64] {
        &self.z
    }

    pub fn narrow_sense(&self) -> bool {
        self.narrow_sense
    }

    /// Whether n = q^m − 1.
    pub fn primitive(&self) -> bool {
        self.primitive
    }

    /// g(x) = Π_{z∈Z} (x − α^z) over GF(q), where α = γ^{(q^m−1)/n} is the
    /// canonical primitive n-th root of unity in GF(q^m). Memoized;
    /// computed at most once even under concurrent calls.
    pub fn generator_polynomial(&self) -> Result<Polynomial> {
        self.generator
            .get_or_init(|| {
                let base = Field::new(self.q())?;
                let ext = Extension::new(&base, self.m() as u32)?;
                let top = ext.top();
                let big_ord = top.order() - 1;
                debug_assert_eq!(big_ord % self.n(), 0);
                let alpha = top.element(top.exp_v(big_ord / self.n()))?;
                let g_top = Polynomial::product_of_linear_factors(&alpha, self.n(), &self.z)?;
                let g = g_top.project_to_subfield(&ext)?;
                debug_assert_eq!(g.degree(), Some(self.z.len()));
                debug_assert_eq!(g.leading_coeff(), 1);
                Ok(g)
            })
            .clone()
    }

    /// k×n generator matrix: rows are the cyclic shifts x^i·g(x), i < k.
    pub fn generator_matrix(&self) -> Result<Matrix> {
        let g = self.generator_polynomial()?;
        let n = self.n() as usize;
        let k = self.k as usize;
        let mut mat = Matrix::zero(g.field(), k, n);
        for i in 0..k {
            for (j, &c) in g.coeffs().iter().enumerate() {
                mat.set(i, i + j, c);
            }
        }
        Ok(mat)
    }

    /// (n−k)×n parity-check matrix: rows are shifts of the reversed
    /// check polynomial h(x) = (x^n − 1)/g(x). Satisfies G·Hᵀ = 0.
    pub fn parity_check_matrix(&self) -> Result<Matrix> {
        let g = self.generator_polynomial()?;
        let field = g.field().clone();
        let n = self.n() as usize;
        let k = self.k as usize;
        let (h, r) = Polynomial::xn_minus_one(&field, n).divrem(&g)?;
        debug_assert!(r.is_zero(), "generator must divide x^n − 1");
        let h_rev: Vec<u64> = h.coeffs().iter().rev().copied().collect();
        let mut mat = Matrix::zero(&field, n - k, n);
        for i in 0..n - k {
            for (j, &c) in h_rev.iter().enumerate() {
                mat.set(i, i + j, c);
            }
        }
        Ok(mat)
    }

    /// Defining set of the Euclidean dual: T = −(N ∖ Z), with |T| = k.
    pub fn dual_defining_set(&self) -> Vec<u64> {
        let t = negate(&self.complement(), self.n());
        debug_assert_eq!(t.len() as u64, self.k);
        t
    }

    /// Defining set of the Hermitian dual {−q̄·z : z ∉ Z}; the code must
    /// live over a square alphabet q = q̄².
    pub fn hermitian_dual_defining_set(&self) -> Result<Vec<u64>> {
        let q_base = square_root_of_alphabet(self.q())?;
        let t = scale_negate(&self.complement(), self.n(), q_base);
        debug_assert_eq!(t.len() as u64, self.k);
        Ok(t)
    }

    fn complement(&self) -> Vec<u64> {
        let mut member = vec![false; self.n() as usize];
        for &z in &self.z {
            member[z as usize] = true;
        }
        (0..self.n()).filter(|&x| !member[x as usize]).collect()
    }
}

/// q̄ with q̄² = q, or HypothesisViolated.
pub(crate) fn square_root_of_alphabet(q: u64) -> Result<u64> {
    let r = isqrt(q as u128) as u64;
    if r * r != q {
        return Err(Error::HypothesisViolated(format!(
            "Hermitian duality needs a square alphabet; {q} is not a square"
        )));
    }
    Ok(r)
}

/// ⌈(δ−1)(1−1/q)⌉ computed exactly as (δ−1) − ⌊(δ−1)/q⌋.
pub fn dimension_deficit_per_m(delta: u64, q: u64) -> u64 {
    (delta - 1) - (delta - 1) / q
}

/// Closed-form narrow-sense dimension k = n − m·⌈(δ−1)(1−1/q)⌉, valid
/// under the gates q^⌊m/2⌋ < n and 2 ≤ δ ≤ min{⌊n·q^⌈m/2⌉/(q^m−1)⌋, n}.
pub fn dimension_formula(n: u64, q: u64, delta: u64) -> Result<u64> {
    let ctx = CosetContext::new(n, q)?;
    let m = ctx.m();
    let qb = BigUint::from(q);
    if qb.pow((m / 2) as u32) >= BigUint::from(n) {
        return Err(Error::HypothesisViolated(format!(
            "dimension formula needs q^⌊m/2⌋ < n; fails at n={n}, q={q}, m={m}"
        )));
    }
    let range_bound = (BigUint::from(n) * qb.pow(m.div_ceil(2) as u32)
        / (qb.pow(m as u32) - 1u32))
        .to_u64()
        .unwrap_or(u64::MAX)
        .min(n);
    if delta < 2 || delta > range_bound {
        return Err(Error::HypothesisViolated(format!(
            "dimension formula needs 2 ≤ δ ≤ {range_bound}; got δ={delta}"
        )));
    }
    Ok(n - m * dimension_deficit_per_m(delta, q))
}

/// Outcome of the two-value minimum-distance criterion for narrow-sense
/// codes.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct MinDistanceVerdict {
    /// Whether the counting condition Σ_{i≤⌊(δ+1)/2⌋} C(n,i)(q−1)^i >
    /// q^{m·⌈(δ−1)(1−1/q)⌉} holds (evaluated in arbitrary precision).
    pub applicable: bool,
    /// Unconditional lower bound: δ, improved to δ+1 when q | δ (then δ
    /// itself lies in the defining set, extending the consecutive run).
    pub d_low: u64,
    /// δ+1 when applicable: the distance is then δ or δ+1.
    pub d_high: Option<u64>,
    /// δ+1 when applicable and q | δ: the distance is then exactly δ+1.
    pub forced_exact: Option<u64>,
}

/// Two-value distance verdict for the narrow-sense code (n, q, δ), under
/// the same hypotheses as [`dimension_formula`].
pub fn distance_verdict(n: u64, q: u64, delta: u64) -> Result<MinDistanceVerdict> {
    let ctx = CosetContext::new(n, q)?;
    let m = ctx.m();
    // Same gates as the dimension formula (this is its sharpening).
    dimension_formula(n, q, delta)?;
    let exponent = m * dimension_deficit_per_m(delta, q);
    // The ball-counting sum is at most q^n (complete binomial theorem), so
    // exponent ≥ n settles the comparison without the big-integer work.
    let applicable = if exponent >= n {
        false
    } else {
        let radius = delta.div_ceil(2) as usize;
        let mut lhs = BigUint::from(0u32);
        let mut binom = BigUint::from(1u32); // C(n, 0)
        let qm1 = BigUint::from(q - 1);
        let mut qm1_pow = BigUint::from(1u32);
        for i in 0..=radius {
            if i > 0 {
                binom = binom * BigUint::from(n - i as u64 + 1) / BigUint::from(i as u64);
                qm1_pow *= &qm1;
            }
            lhs += &binom * &qm1_pow;
        }
        lhs > BigUint::from(q).pow(exponent as u32)
    };
    let lifted = delta.is_multiple_of(q);
    Ok(MinDistanceVerdict {
        applicable,
        d_low: if lifted { delta + 1 } else { delta },
        d_high: applicable.then_some(delta + 1),
        forced_exact: (applicable && lifted).then_some(delta + 1),
    })
}

/// Lower bound δ_max + 1 on the dual distance of a narrow-sense code with
/// δ ≤ δ_max, where δ_max is the flavor's dual-containment threshold
/// (Euclidean: ⌊κ⌋; Hermitian: ⌊n(q̄^m−1)/(q̄^{2m}−1)⌋).
pub fn dual_distance_lower_bound(code: &BchCode, flavor: Flavor) -> Result<u64> {
    if !code.narrow_sense() {
        return Err(Error::HypothesisViolated(
            "dual distance bound needs a narrow-sense code".into(),
        ));
    }
    let delta_max = match flavor {
        Flavor::Euclidean => kappa(code.n(), code.q())?
            .floor()
            .to_integer()
            .to_u64()
            .expect("⌊κ⌋ < n fits u64"),
        Flavor::Hermitian => {
            let q_base = square_root_of_alphabet(code.q())?;
            hermitian_dual_delta_max(code.n(), q_base)?
        }
    };
    if code.delta() > delta_max {
        return Err(Error::HypothesisViolated(format!(
            "dual distance bound needs δ ≤ {delta_max}; got δ={}",
            code.delta()
        )));
    }
    Ok(delta_max + 1)
}
