//! Brute-force cyclic-code engine.
//!
//! Builds BCH generator polynomials the long way: factor y^n - 1, fix a
//! root of maximal order, compute minimal polynomials by linear algebra,
//! and take least common multiples. No cyclotomic-coset bookkeeping is
//! involved, so agreement with the formula-based route is meaningful.
//! The engine's root of unity is generally a different primitive root
//! than the one the main constructor uses, so generator polynomials may
//! differ; invariant quantities (dimension, distance, dual containment)
//! must still match.

use std::collections::HashMap;
use std::sync::Mutex;

use crate::arith::{gcd, prime_divisors};
use crate::error::{Error, Result};
use crate::gf::{Field, Matrix, Polynomial};
use crate::oracle::factor::berlekamp_squarefree;

/// Lengths above this make the factorization matrix too large to be a
/// sensible cross-check.
pub const MAX_ORACLE_LENGTH: u64 = 2048;

/// Re-derives cyclic-code data for one (n, q) pair from scratch.
pub struct CyclicCodeOracle {
    field: Field,
    n: u64,
    fstar: Polynomial,
    minpolys: Mutex<HashMap<u64, Polynomial>>,
}

impl CyclicCodeOracle {
    /// Factors y^n - 1 over GF(q) and fixes the lexicographically smallest
    /// irreducible factor whose root has multiplicative order exactly n.
    pub fn new(n: u64, q: u64) -> Result<CyclicCodeOracle> {
        if n == 0 || n > MAX_ORACLE_LENGTH {
            return Err(Error::InvalidParameter(format!(
                "oracle supports lengths 1..={MAX_ORACLE_LENGTH}, got {n}"
            )));
        }
        if gcd(n, q) != 1 {
            return Err(Error::NotCoprime { n, q });
        }
        let field = Field::new(q)?;
        let whole = Polynomial::xn_minus_one(&field, n as usize);
        let factors = berlekamp_squarefree(&whole)?;
        let primes = prime_divisors(n);
        let y = Polynomial::monomial(&field, 1, 1)?;
        let one = Polynomial::one(&field);
        let mut fstar: Option<Polynomial> = None;
        for f in &factors {
            // f divides y^n - 1, so the order of y mod f divides n; it is
            // exactly n when no maximal proper divisor n/p reaches 1.
            let full_order = primes
                .iter()
                .all(|&p| y.pow_mod((n / p) as u128, f).map(|r| r != one).unwrap_or(false));
            if full_order && fstar.as_ref().is_none_or(|best| f.coeffs() < best.coeffs()) {
                fstar = Some(f.clone());
            }
        }
        let fstar = fstar.expect("y^n - 1 always has a factor of full order when gcd(n, q) = 1");
        Ok(CyclicCodeOracle {
            field,
            n,
            fstar,
            minpolys: Mutex::new(HashMap::new()),
        })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// The fixed irreducible factor of y^n - 1 whose root generates the
    /// n-th roots of unity.
    pub fn fstar(&self) -> &Polynomial {
        &self.fstar
    }

    /// Degree of the splitting extension.
    pub fn m(&self) -> usize {
        self.fstar.degree().unwrap()
    }

    /// Minimal polynomial over GF(q) of the s-th power of the fixed root.
    ///
    /// Works by Gaussian elimination: feed in successive powers of
    /// y^s mod fstar until one becomes linearly dependent on its
    /// predecessors; the dependency coefficients are the minimal
    /// polynomial. Results are memoized per exponent.
    pub fn minimal_polynomial(&self, s: u64) -> Polynomial {
        let s = s % self.n;
        if let Some(p) = self.minpolys.lock().unwrap().get(&s) {
            return p.clone();
        }
        let m = self.m();
        let beta = Polynomial::monomial(&self.field, 1, 1)
            .and_then(|y| y.pow_mod(s as u128, &self.fstar))
            .unwrap();
        // Rows of (vector, expression): vector = sum_j expression[j] * beta^j,
        // kept pivot-reduced so dependencies surface immediately.
        let mut rows: Vec<(usize, Vec<u64>, Vec<u64>)> = Vec::new();
        let mut power = Polynomial::one(&self.field);
        let mut minpoly = None;
        for t in 0..=m {
            let mut vec = vec![0u64; m];
            vec[..power.coeffs().len()].copy_from_slice(power.coeffs());
            let mut expr = vec![0u64; m + 1];
            expr[t] = 1;
            for (pivot, rvec, rexpr) in &rows {
                let c = vec[*pivot];
                if c != 0 {
                    for (vi, ri) in vec.iter_mut().zip(rvec) {
                        *vi = self.field.sub_v(*vi, self.field.mul_v(c, *ri));
                    }
                    for (ei, ri) in expr.iter_mut().zip(rexpr) {
                        *ei = self.field.sub_v(*ei, self.field.mul_v(c, *ri));
                    }
                }
            }
            if vec.iter().all(|&v| v == 0) {
                // expr[t] is still 1: earlier rows only involve lower powers.
                minpoly = Some(Polynomial::new(&self.field, &expr[..=t]).unwrap());
                break;
            }
            let pivot = vec.iter().position(|&v| v != 0).unwrap();
            let inv = self.field.inv_v(vec[pivot]).unwrap();
            for v in vec.iter_mut() {
                *v = self.field.mul_v(inv, *v);
            }
            for e in expr.iter_mut() {
                *e = self.field.mul_v(inv, *e);
            }
            rows.push((pivot, vec, expr));
            power = power.mul(&beta).unwrap().rem(&self.fstar).unwrap();
        }
        let minpoly = minpoly.expect("m + 1 vectors in an m-dimensional space must be dependent");
        self.minpolys.lock().unwrap().insert(s, minpoly.clone());
        minpoly
    }

    /// Generator polynomial as lcm of the minimal polynomials of the
    /// designed consecutive root powers b, b+1, ..., b+delta-2.
    pub fn generator(&self, b: u64, delta: u64) -> Result<Polynomial> {
        if delta < 2 || delta > self.n {
            return Err(Error::DeltaOutOfRange { delta, max: self.n });
        }
        let mut g = Polynomial::one(&self.field);
        for offset in 0..delta - 1 {
            let s = (b + offset) % self.n;
            let mp = self.minimal_polynomial(s);
            let common = g.gcd(&mp)?;
            g = g.mul(&mp.divrem(&common)?.0)?;
        }
        g.monic()
    }

    /// Code dimension: n minus the generator degree.
    pub fn dimension(&self, b: u64, delta: u64) -> Result<u64> {
        Ok(self.n - self.generator(b, delta)?.degree().unwrap() as u64)
    }

    /// The check polynomial (y^n - 1) / g.
    pub fn check_polynomial(&self, g: &Polynomial) -> Result<Polynomial> {
        let whole = Polynomial::xn_minus_one(&self.field, self.n as usize);
        let (h, r) = whole.divrem(g)?;
        assert!(r.is_zero(), "generator must divide y^n - 1");
        Ok(h)
    }

    /// Generator matrix with rows the cyclic shifts of g inside length n.
    pub fn generator_matrix(&self, g: &Polynomial) -> Matrix {
        let n = self.n as usize;
        let deg = g.degree().unwrap();
        let k = n - deg;
        let mut mat = Matrix::zero(&self.field, k, n);
        for i in 0..k {
            for (j, &c) in g.coeffs().iter().enumerate() {
                mat.set(i, i + j, c);
            }
        }
        mat
    }

    /// Parity-check matrix with rows the shifts of the reversed check
    /// polynomial; its rows span the Euclidean dual code.
    pub fn parity_check_matrix(&self, g: &Polynomial) -> Result<Matrix> {
        let n = self.n as usize;
        let h = self.check_polynomial(g)?;
        let k = h.degree().unwrap();
        let mut rev: Vec<u64> = h.coeffs().to_vec();
        rev.reverse();
        let rows = n - k;
        let mut mat = Matrix::zero(&self.field, rows, n);
        for i in 0..rows {
            for (j, &c) in rev.iter().enumerate() {
                mat.set(i, i + j, c);
            }
        }
        Ok(mat)
    }

    /// Whether the Euclidean dual of the (b, delta) code is contained in
    /// the code itself, decided by autocorrelations of the reversed check
    /// polynomial (equivalently H * H^T = 0).
    pub fn euclidean_dual_containing(&self, b: u64, delta: u64) -> Result<bool> {
        let g = self.generator(b, delta)?;
        let h = self.check_polynomial(&g)?;
        let mut rev: Vec<u64> = h.coeffs().to_vec();
        rev.reverse();
        let lags = self.n as usize - (rev.len() - 1);
        for lag in 0..lags {
            let mut acc = 0u64;
            for u in 0..rev.len().saturating_sub(lag) {
                acc = self
                    .field
                    .add_v(acc, self.field.mul_v(rev[u], rev[u + lag]));
            }
            if acc != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Hermitian analogue: the dual is taken under the inner product that
    /// conjugates one argument by the square root of the field order, so
    /// the lag sums conjugate one factor. Both lag directions are checked
    /// even though Frobenius symmetry makes them vanish together.
    pub fn hermitian_dual_containing(&self, b: u64, delta: u64) -> Result<bool> {
        let q = self.field.order();
        let root = crate::arith::isqrt(q as u128) as u64;
        if root * root != q {
            return Err(Error::HypothesisViolated(format!(
                "Hermitian duality needs a square field order, got {q}"
            )));
        }
        let conj = |v: u64| self.field.pow_v(v, root as i64).unwrap();
        let g = self.generator(b, delta)?;
        let h = self.check_polynomial(&g)?;
        let mut rev: Vec<u64> = h.coeffs().to_vec();
        rev.reverse();
        let lags = self.n as usize - (rev.len() - 1);
        for lag in 0..lags {
            let mut fwd = 0u64;
            let mut bwd = 0u64;
            for u in 0..rev.len().saturating_sub(lag) {
                fwd = self
                    .field
                    .add_v(fwd, self.field.mul_v(rev[u], conj(rev[u + lag])));
                bwd = self
                    .field
                    .add_v(bwd, self.field.mul_v(conj(rev[u]), rev[u + lag]));
            }
            if fwd != 0 || bwd != 0 {
                return Ok(false);
            }
        }
        Ok(true)
    }
}
