//! Dense univariate polynomials over a finite field.
//!
//! Coefficients are stored little-endian (constant term first) in the raw
//! integer encoding of the owning field, with trailing zeros trimmed; the
//! zero polynomial has an empty coefficient vector.

use crate::error::{Error, Result};
use crate::gf::field::{Extension, Field, FieldElement};

#[derive(Clone, PartialEq, Eq)]
pub struct Polynomial {
    field: Field,
    coeffs: Vec<u64>,
}

impl std::fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Poly{:?}/GF({})", self.coeffs, self.field.order())
    }
}

fn trim(coeffs: &mut Vec<u64>) {
    while coeffs.last() == Some(&0) {
        coeffs.pop();
    }
}

impl Polynomial {
    pub fn new(field: &Field, coeffs: &[u64]) -> Result<Polynomial> {
        if coeffs.iter().any(|&c| c >= field.order()) {
            return Err(Error::InvalidParameter(format!(
                "coefficient encoding out of range for GF({})",
                field.order()
            )));
        }
        let mut coeffs = coeffs.to_vec();
        trim(&mut coeffs);
        Ok(Polynomial { field: field.clone(), coeffs })
    }

    pub fn zero(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: Vec::new() }
    }

    pub fn one(field: &Field) -> Polynomial {
        Polynomial { field: field.clone(), coeffs: vec![1] }
    }

    /// The monomial c·x^k.
    pub fn monomial(field: &Field, c: u64, k: usize) -> Result<Polynomial> {
        if c >= field.order() {
            return Err(Error::InvalidParameter("coefficient out of range".into()));
        }
        if c == 0 {
            return Ok(Polynomial::zero(field));
        }
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Ok(Polynomial { field: field.clone(), coeffs })
    }

    /// x^n − 1.
    pub fn xn_minus_one(field: &Field, n: usize) -> Polynomial {
        let mut coeffs = vec![0; n + 1];
        coeffs[0] = field.neg_v(1);
        coeffs[n] = 1;
        Polynomial { field: field.clone(), coeffs }
    }

    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Trimmed little-endian coefficients.
    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> u64 {
        self.coeffs.get(i).copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn leading_coeff(&self) -> u64 {
        self.coeffs.last().copied().unwrap_or(0)
    }

    fn same_field(&self, other: &Polynomial) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.field.add_v(self.coeff(i), other.coeff(i)));
        }
        trim(&mut out);
        Ok(Polynomial { field: self.field.clone(), coeffs: out })
    }

    pub fn sub(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        let n = self.coeffs.len().max(other.coeffs.len());
        let mut out = Vec::with_capacity(n);
        for i in 0..n {
            out.push(self.field.sub_v(self.coeff(i), other.coeff(i)));
        }
        trim(&mut out);
        Ok(Polynomial { field: self.field.clone(), coeffs: out })
    }

    pub fn mul(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        if self.is_zero() || other.is_zero() {
            return Ok(Polynomial::zero(&self.field));
        }
        let mut out = vec![0u64; self.coeffs.len() + other.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in other.coeffs.iter().enumerate() {
                if b == 0 {
                    continue;
                }
                out[i + j] = self.field.add_v(out[i + j], self.field.mul_v(a, b));
            }
        }
        trim(&mut out);
        Ok(Polynomial { field: self.field.clone(), coeffs: out })
    }

    pub fn mul_scalar(&self, c: u64) -> Polynomial {
        if c == 0 {
            return Polynomial::zero(&self.field);
        }
        let coeffs = self.coeffs.iter().map(|&a| self.field.mul_v(a, c)).collect();
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Quotient and remainder: self = q·d + r with deg r < deg d.
    pub fn divrem(&self, d: &Polynomial) -> Result<(Polynomial, Polynomial)> {
        self.same_field(d)?;
        if d.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let dd = d.coeffs.len() - 1;
        if self.coeffs.len() < d.coeffs.len() {
            return Ok((Polynomial::zero(&self.field), self.clone()));
        }
        let lead_inv = self.field.inv_v(d.leading_coeff())?;
        let mut rem = self.coeffs.clone();
        let mut quot = vec![0u64; rem.len() - dd];
        for k in (dd..rem.len()).rev() {
            let c = self.field.mul_v(rem[k], lead_inv);
            if c == 0 {
                continue;
            }
            quot[k - dd] = c;
            for (i, &dc) in d.coeffs.iter().enumerate() {
                rem[k - dd + i] = self.field.sub_v(rem[k - dd + i], self.field.mul_v(c, dc));
            }
        }
        rem.truncate(dd);
        trim(&mut rem);
        trim(&mut quot);
        Ok((
            Polynomial { field: self.field.clone(), coeffs: quot },
            Polynomial { field: self.field.clone(), coeffs: rem },
        ))
    }

    pub fn rem(&self, d: &Polynomial) -> Result<Polynomial> {
        Ok(self.divrem(d)?.1)
    }

    /// Monic gcd (zero if both inputs are zero).
    pub fn gcd(&self, other: &Polynomial) -> Result<Polynomial> {
        self.same_field(other)?;
        let (mut a, mut b) = (self.clone(), other.clone());
        while !b.is_zero() {
            let r = a.rem(&b)?;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.monic()
        }
    }

    /// self^exp mod m, by square-and-multiply.
    pub fn pow_mod(&self, mut exp: u128, m: &Polynomial) -> Result<Polynomial> {
        self.same_field(m)?;
        if m.is_zero() {
            return Err(Error::DivisionByZero);
        }
        let mut acc = Polynomial::one(&self.field).rem(m)?;
        let mut base = self.rem(m)?;
        while exp > 0 {
            if exp & 1 == 1 {
                acc = acc.mul(&base)?.rem(m)?;
            }
            base = base.mul(&base)?.rem(m)?;
            exp >>= 1;
        }
        Ok(acc)
    }

    /// Evaluate at a raw element encoding, by Horner's rule.
    pub fn eval(&self, x: u64) -> u64 {
        let mut acc = 0u64;
        for &c in self.coeffs.iter().rev() {
            acc = self.field.add_v(self.field.mul_v(acc, x), c);
        }
        acc
    }

    pub fn monic(&self) -> Result<Polynomial> {
        let lead = self.leading_coeff();
        if lead == 0 {
            return Err(Error::DivisionByZero);
        }
        if lead == 1 {
            return Ok(self.clone());
        }
        Ok(self.mul_scalar(self.field.inv_v(lead)?))
    }

    /// x^deg · self(1/x): the coefficient vector reversed, then trimmed.
    pub fn reciprocal(&self) -> Polynomial {
        let mut coeffs: Vec<u64> = self.coeffs.iter().rev().copied().collect();
        trim(&mut coeffs);
        Polynomial { field: self.field.clone(), coeffs }
    }

    /// Formal derivative.
    pub fn derivative(&self) -> Polynomial {
        if self.coeffs.len() <= 1 {
            return Polynomial::zero(&self.field);
        }
        let p = self.field.characteristic();
        let mut out = Vec::with_capacity(self.coeffs.len() - 1);
        for (i, &c) in self.coeffs.iter().enumerate().skip(1) {
            let mult = i as u64 % p;
            // i·c computed as repeated addition collapsed to a prime-field
            // scalar times c.
            let mut term = 0u64;
            let mut acc = c;
            let mut k = mult;
            while k > 0 {
                if k & 1 == 1 {
                    term = self.field.add_v(term, acc);
                }
                acc = self.field.add_v(acc, acc);
                k >>= 1;
            }
            out.push(term);
        }
        trim(&mut out);
        Polynomial { field: self.field.clone(), coeffs: out }
    }

    /// Π_{z ∈ exponents} (x − α^z), requiring α to have multiplicative
    /// order exactly `n` (exponents are taken mod n).
    pub fn product_of_linear_factors(
        alpha: &FieldElement,
        n: u64,
        exponents: &[u64],
    ) -> Result<Polynomial> {
        let field = alpha.field().clone();
        if alpha.is_zero() || field.order_of(alpha.value())? != n {
            return Err(Error::WrongOrder);
        }
        let mut acc = Polynomial::one(&field);
        for &z in exponents {
            let root = field.exp_v(field.log_v(alpha.value())? * (z % n) % (field.order() - 1));
            let factor = Polynomial {
                field: field.clone(),
                coeffs: vec![field.neg_v(root), 1],
            };
            acc = acc.mul(&factor)?;
        }
        Ok(acc)
    }

    /// Reinterpret over the base field of `ext`, failing if any coefficient
    /// lies outside the embedded subfield.
    pub fn project_to_subfield(&self, ext: &Extension) -> Result<Polynomial> {
        if self.field != *ext.top() {
            return Err(Error::FieldMismatch);
        }
        let mut coeffs = Vec::with_capacity(self.coeffs.len());
        for &c in &self.coeffs {
            coeffs.push(ext.project_v(c)?);
        }
        Ok(Polynomial { field: ext.base().clone(), coeffs })
    }

    /// Coefficient-wise lift along `ext`'s embedding.
    pub fn embed_to_extension(&self, ext: &Extension) -> Result<Polynomial> {
        if self.field != *ext.base() {
            return Err(Error::FieldMismatch);
        }
        let coeffs = self.coeffs.iter().map(|&c| ext.embed_v(c)).collect();
        Ok(Polynomial { field: ext.top().clone(), coeffs })
    }
}
