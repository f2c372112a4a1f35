//! Finite fields GF(p^e) with exp/log tables, deterministic moduli
//! (Conway polynomials computed from their recursive definition), and
//! subfield embeddings into extension fields.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Arc, Mutex, OnceLock};

use crate::arith::{is_prime, pow_mod, prime_divisors, prime_power};
use crate::error::{Error, Result};

/// Hard ceiling on field size: exp/log tables must fit in memory.
pub const FIELD_SIZE_LIMIT: u128 = 1 << 20;
/// Conway moduli are computed up to this size; between here and the table
/// limit the smallest-encoding primitive modulus is used instead.
pub const CONWAY_LIMIT: u128 = 1 << 16;
/// Fields this small additionally precompute a full addition table.
const ADD_TABLE_LIMIT: u64 = 64;

// ---------------------------------------------------------------------------
// Polynomials over GF(p) as bare coefficient vectors (little-endian, mod p).
// Used only to select moduli and bootstrap the tables.
// ---------------------------------------------------------------------------

fn pp_trim(v: &mut Vec<u32>) {
    while v.last() == Some(&0) {
        v.pop();
    }
}

fn pp_mul(a: &[u32], b: &[u32], p: u64) -> Vec<u32> {
    if a.is_empty() || b.is_empty() {
        return Vec::new();
    }
    let mut out = vec![0u64; a.len() + b.len() - 1];
    for (i, &x) in a.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in b.iter().enumerate() {
            out[i + j] = (out[i + j] + x as u64 * y as u64) % p;
        }
    }
    let mut out: Vec<u32> = out.into_iter().map(|c| c as u32).collect();
    pp_trim(&mut out);
    out
}

/// Remainder modulo a monic polynomial.
fn pp_rem(a: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    debug_assert_eq!(*m.last().unwrap(), 1);
    let mut r: Vec<u64> = a.iter().map(|&c| c as u64).collect();
    let d = m.len() - 1;
    while r.len() > d {
        let lead = *r.last().unwrap() % p;
        let shift = r.len() - 1 - d;
        if lead != 0 {
            for (i, &mc) in m.iter().enumerate().take(d) {
                let sub = lead * mc as u64 % p;
                r[shift + i] = (r[shift + i] + p - sub) % p;
            }
        }
        r.pop();
    }
    let mut out: Vec<u32> = r.into_iter().map(|c| (c % p) as u32).collect();
    pp_trim(&mut out);
    out
}

fn pp_mulmod(a: &[u32], b: &[u32], m: &[u32], p: u64) -> Vec<u32> {
    pp_rem(&pp_mul(a, b, p), m, p)
}

fn pp_powmod(base: &[u32], mut exp: u128, m: &[u32], p: u64) -> Vec<u32> {
    let mut acc = vec![1u32];
    let mut b = pp_rem(base, m, p);
    while exp > 0 {
        if exp & 1 == 1 {
            acc = pp_mulmod(&acc, &b, m, p);
        }
        b = pp_mulmod(&b, &b, m, p);
        exp >>= 1;
    }
    acc
}

fn pp_is_one(v: &[u32]) -> bool {
    v == [1]
}

/// True iff x̄ has multiplicative order p^e − 1 in GF(p)[x]/(f); this forces
/// f irreducible with a primitive root, i.e. f is a primitive polynomial.
fn pp_is_primitive(f: &[u32], p: u64) -> bool {
    let e = (f.len() - 1) as u32;
    if f[0] == 0 {
        return false;
    }
    let ord: u128 = (p as u128).pow(e) - 1;
    let x = [0u32, 1];
    if !pp_is_one(&pp_powmod(&x, ord, f, p)) {
        return false;
    }
    // ord ≤ FIELD_SIZE_LIMIT − 1 so it fits u64 for factorization.
    for ell in prime_divisors(ord as u64) {
        if pp_is_one(&pp_powmod(&x, ord / ell as u128, f, p)) {
            return false;
        }
    }
    true
}

fn smallest_primitive_root(p: u64) -> u64 {
    let divs = prime_divisors(p - 1);
    (1..p)
        .find(|&r| divs.iter().all(|&ell| pow_mod(r, (p - 1) / ell, p) != 1))
        .expect("a prime modulus has a primitive root")
}

/// Evaluates g(x^t) mod f over GF(p) and returns whether it vanishes.
fn compose_power_vanishes(g: &[u32], t: u128, f: &[u32], p: u64) -> bool {
    let xt = pp_powmod(&[0, 1], t, f, p);
    // Horner in the quotient ring.
    let mut acc: Vec<u32> = Vec::new();
    for &c in g.iter().rev() {
        acc = pp_mulmod(&acc, &xt, f, p);
        if c != 0 {
            if acc.is_empty() {
                acc = vec![c];
            } else {
                acc[0] = ((acc[0] as u64 + c as u64) % p) as u32;
                pp_trim(&mut acc);
            }
        }
    }
    acc.is_empty()
}

/// The Conway polynomial C_{p,e}: the first monic primitive degree-e
/// polynomial, in the standard word order, compatible with C_{p,e/r} for
/// every prime r | e. Computed from the definition and memoized globally.
pub fn conway_polynomial(p: u64, e: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let size = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    if size > CONWAY_LIMIT {
        return Err(Error::FieldTooLarge {
            size,
            limit: CONWAY_LIMIT,
        });
    }
    Ok(conway_memo(p, e).iter().map(|&c| c as u64).collect())
}

type PolynomialCache = Mutex<HashMap<(u64, u32), Arc<Vec<u32>>>>;

fn conway_memo(p: u64, e: u32) -> Arc<Vec<u32>> {
    static MEMO: OnceLock<PolynomialCache> = OnceLock::new();
    let memo = MEMO.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(f) = memo.lock().unwrap().get(&(p, e)) {
        return f.clone();
    }
    let f = Arc::new(compute_conway(p, e));
    memo.lock().unwrap().insert((p, e), f.clone());
    f
}

fn compute_conway(p: u64, e: u32) -> Vec<u32> {
    if e == 1 {
        let r = smallest_primitive_root(p);
        return vec![((p - r) % p) as u32, 1];
    }
    // Compatibility targets: the Conway polynomial of each maximal proper
    // subfield (transitivity covers the rest), composed at x^t.
    let qe: u128 = (p as u128).pow(e);
    let subs: Vec<(Arc<Vec<u32>>, u128)> = prime_divisors(e as u64)
        .into_iter()
        .map(|r| {
            let sub_e = e / r as u32;
            let t = (qe - 1) / ((p as u128).pow(sub_e) - 1);
            (conway_memo(p, sub_e), t)
        })
        .collect();
    // Candidate order: the word (a_{e−1}, …, a_0) with a_i = (−1)^{e−i}·c_i,
    // compared lexicographically — i.e. plain base-p counting on the word.
    let mut word = vec![0u32; e as usize];
    loop {
        let mut f = Vec::with_capacity(e as usize + 1);
        for (i, &a) in word.iter().enumerate() {
            let c = if (e as usize - i) % 2 == 1 {
                ((p - a as u64) % p) as u32
            } else {
                a
            };
            f.push(c);
        }
        f.push(1);
        if pp_is_primitive(&f, p)
            && subs
                .iter()
                .all(|(sub, t)| compose_power_vanishes(sub, *t, &f, p))
        {
            return f;
        }
        // Increment the word as a base-p counter, least significant first.
        let mut i = 0;
        loop {
            assert!(i < word.len(), "no Conway polynomial found for ({p},{e})");
            word[i] += 1;
            if word[i] < p as u32 {
                break;
            }
            word[i] = 0;
            i += 1;
        }
    }
}

/// The monic primitive degree-e polynomial over GF(p) with the smallest
/// integer encoding Σ cᵢ pⁱ of its non-leading coefficients. Deterministic
/// fallback for fields beyond the Conway computation limit.
pub fn smallest_primitive_modulus(p: u64, e: u32) -> Result<Vec<u64>> {
    if !is_prime(p) {
        return Err(Error::NotPrime(p));
    }
    let q = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
    if q > FIELD_SIZE_LIMIT {
        return Err(Error::FieldTooLarge {
            size: q,
            limit: FIELD_SIZE_LIMIT,
        });
    }
    for t in 0..q {
        let mut f: Vec<u32> = Vec::with_capacity(e as usize + 1);
        let mut rest = t;
        for _ in 0..e {
            f.push((rest % p as u128) as u32);
            rest /= p as u128;
        }
        f.push(1);
        if pp_is_primitive(&f, p) {
            return Ok(f.into_iter().map(|c| c as u64).collect());
        }
    }
    unreachable!("every finite field has a primitive polynomial")
}

// ---------------------------------------------------------------------------
// Field
// ---------------------------------------------------------------------------

struct Repr {
    p: u64,
    e: u32,
    q: u64,
    modulus: Vec<u64>,
    /// exp[i] = encoding of γ^i for i in 0..q−1.
    exp: Vec<u64>,
    /// log[v] = i with γ^i = v, for v in 1..q; log[0] is a sentinel.
    log: Vec<u32>,
    /// Full addition table for tiny fields (index a·q + b).
    add: Option<Vec<u32>>,
}

/// A finite field GF(p^e) with exp/log multiplication tables.
///
/// Elements are canonically encoded as integers Σ cᵢ pⁱ in [0, q) where
/// (c₀, …, c_{e−1}) are the coefficients over GF(p). The multiplicative
/// generator γ is the residue of x for e ≥ 2 (the modulus is primitive),
/// or the smallest primitive root mod p for e = 1.
#[derive(Clone)]
pub struct Field(Arc<Repr>);

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0)
            || (self.0.q == other.0.q && self.0.modulus == other.0.modulus)
    }
}
impl Eq for Field {}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.0.q)
    }
}

impl Field {
    /// GF(q) for a prime power q, with the deterministic modulus choice:
    /// the Conway polynomial for q ≤ 2^16, the smallest-encoding primitive
    /// polynomial up to the table limit 2^20, `FieldTooLarge` beyond.
    pub fn new(q: u64) -> Result<Field> {
        let (p, e) = prime_power(q).ok_or(Error::NotPrimePower(q))?;
        Field::with_degree(p, e)
    }

    /// GF(p^e); same modulus policy as [`Field::new`].
    pub fn with_degree(p: u64, e: u32) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if e == 0 {
            return Err(Error::InvalidParameter("extension degree must be ≥ 1".into()));
        }
        let size = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if size > FIELD_SIZE_LIMIT {
            return Err(Error::FieldTooLarge {
                size,
                limit: FIELD_SIZE_LIMIT,
            });
        }
        let modulus = if size <= CONWAY_LIMIT {
            conway_polynomial(p, e)?
        } else {
            smallest_primitive_modulus(p, e)?
        };
        Ok(Field::build(p, e, modulus))
    }

    /// GF(p^deg) on a caller-chosen monic primitive modulus.
    pub fn with_modulus(p: u64, modulus: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if modulus.len() < 2 || *modulus.last().unwrap() != 1 {
            return Err(Error::InvalidParameter("modulus must be monic of degree ≥ 1".into()));
        }
        if modulus.iter().any(|&c| c >= p) {
            return Err(Error::InvalidParameter("modulus coefficients must lie in [0, p)".into()));
        }
        let e = (modulus.len() - 1) as u32;
        let size = (p as u128).checked_pow(e).unwrap_or(u128::MAX);
        if size > FIELD_SIZE_LIMIT {
            return Err(Error::FieldTooLarge {
                size,
                limit: FIELD_SIZE_LIMIT,
            });
        }
        let m32: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        if !pp_is_primitive(&m32, p) {
            return Err(Error::InvalidParameter("modulus is not primitive".into()));
        }
        Ok(Field::build(p, e, modulus.to_vec()))
    }

    fn build(p: u64, e: u32, modulus: Vec<u64>) -> Field {
        let q = p.pow(e);
        let m32: Vec<u32> = modulus.iter().map(|&c| c as u32).collect();
        let mut exp = Vec::with_capacity(q as usize - 1);
        let mut log = vec![u32::MAX; q as usize];
        if e == 1 {
            // γ is the root of the linear modulus x − r.
            let r = (p - modulus[0]) % p;
            let mut cur = 1u64;
            for i in 0..q - 1 {
                exp.push(cur);
                log[cur as usize] = i as u32;
                cur = cur * r % p;
            }
            assert_eq!(cur, 1, "generator order must be q − 1");
        } else {
            // γ = x̄; walk the powers in coefficient representation.
            let mut cur = vec![1u32];
            for i in 0..q - 1 {
                let enc = cur
                    .iter()
                    .rev()
                    .fold(0u64, |acc, &c| acc * p + c as u64);
                exp.push(enc);
                log[enc as usize] = i as u32;
                // Multiply by x and reduce.
                cur.insert(0, 0);
                cur = pp_rem(&cur, &m32, p);
            }
            assert_eq!(cur, vec![1u32], "generator order must be q − 1");
        }
        debug_assert!(log[1..].iter().all(|&l| l != u32::MAX));
        let add = if q <= ADD_TABLE_LIMIT {
            let mut t = vec![0u32; (q * q) as usize];
            for a in 0..q {
                for b in 0..q {
                    t[(a * q + b) as usize] = add_encoded(a, b, p, e) as u32;
                }
            }
            Some(t)
        } else {
            None
        };
        Field(Arc::new(Repr {
            p,
            e,
            q,
            modulus,
            exp,
            log,
            add,
        }))
    }

    pub fn characteristic(&self) -> u64 {
        self.0.p
    }

    pub fn degree(&self) -> u32 {
        self.0.e
    }

    /// Number of elements q = p^e.
    pub fn order(&self) -> u64 {
        self.0.q
    }

    /// Monic modulus coefficients, constant term first.
    pub fn modulus(&self) -> &[u64] {
        &self.0.modulus
    }

    pub fn zero(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 0 }
    }

    pub fn one(&self) -> FieldElement {
        FieldElement { field: self.clone(), value: 1 }
    }

    /// The fixed multiplicative generator γ.
    pub fn primitive_element(&self) -> FieldElement {
        let v = if self.0.q == 2 { 1 } else { self.0.exp[1] };
        FieldElement { field: self.clone(), value: v }
    }

    pub fn element(&self, value: u64) -> Result<FieldElement> {
        if value >= self.0.q {
            return Err(Error::InvalidParameter(format!(
                "encoding {value} out of range for GF({})",
                self.0.q
            )));
        }
        Ok(FieldElement { field: self.clone(), value })
    }

    /// All q elements in encoding order.
    pub fn elements(&self) -> impl Iterator<Item = FieldElement> + '_ {
        (0..self.0.q).map(move |v| FieldElement { field: self.clone(), value: v })
    }

    // ----- raw-value arithmetic (hot paths) -----

    #[inline]
    pub fn add_v(&self, a: u64, b: u64) -> u64 {
        let r = &*self.0;
        if let Some(t) = &r.add {
            return t[(a * r.q + b) as usize] as u64;
        }
        if r.p == 2 {
            return a ^ b;
        }
        add_encoded(a, b, r.p, r.e)
    }

    #[inline]
    pub fn neg_v(&self, a: u64) -> u64 {
        let r = &*self.0;
        if r.p == 2 {
            return a;
        }
        let mut out = 0u64;
        let mut mult = 1u64;
        let mut x = a;
        for _ in 0..r.e {
            let d = x % r.p;
            out += ((r.p - d) % r.p) * mult;
            mult *= r.p;
            x /= r.p;
        }
        out
    }

    #[inline]
    pub fn sub_v(&self, a: u64, b: u64) -> u64 {
        self.add_v(a, self.neg_v(b))
    }

    #[inline]
    pub fn mul_v(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        let r = &*self.0;
        let i = r.log[a as usize] as u64 + r.log[b as usize] as u64;
        let ord = r.q - 1;
        r.exp[(if i >= ord { i - ord } else { i }) as usize]
    }

    #[inline]
    pub fn inv_v(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let r = &*self.0;
        let ord = r.q - 1;
        Ok(r.exp[((ord - r.log[a as usize] as u64) % ord) as usize])
    }

    #[inline]
    pub fn div_v(&self, a: u64, b: u64) -> Result<u64> {
        Ok(self.mul_v(a, self.inv_v(b)?))
    }

    /// a^k for integer k (negative k inverts a nonzero base first).
    pub fn pow_v(&self, a: u64, k: i64) -> Result<u64> {
        if a == 0 {
            return match k.cmp(&0) {
                std::cmp::Ordering::Greater => Ok(0),
                std::cmp::Ordering::Equal => Ok(1),
                std::cmp::Ordering::Less => Err(Error::DivisionByZero),
            };
        }
        let r = &*self.0;
        let ord = (r.q - 1) as i128;
        let idx = (r.log[a as usize] as i128 * k as i128).rem_euclid(ord);
        Ok(r.exp[idx as usize])
    }

    /// Multiplicative order of a nonzero element.
    pub fn order_of(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        let r = &*self.0;
        let ord = r.q - 1;
        Ok(ord / num_integer::gcd(ord, r.log[a as usize] as u64))
    }

    /// γ^i for 0 ≤ i < q−1.
    pub fn exp_v(&self, i: u64) -> u64 {
        self.0.exp[(i % (self.0.q - 1)) as usize]
    }

    /// Discrete log base γ of a nonzero element.
    pub fn log_v(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::DivisionByZero);
        }
        Ok(self.0.log[a as usize] as u64)
    }
}

#[inline]
fn add_encoded(a: u64, b: u64, p: u64, e: u32) -> u64 {
    if p == 2 {
        return a ^ b;
    }
    let mut out = 0u64;
    let mut mult = 1u64;
    let (mut x, mut y) = (a, b);
    for _ in 0..e {
        out += (x % p + y % p) % p * mult;
        mult *= p;
        x /= p;
        y /= p;
    }
    out
}

/// An element of a [`Field`], carrying its owning field.
#[derive(Clone, PartialEq, Eq)]
pub struct FieldElement {
    field: Field,
    value: u64,
}

impl fmt::Debug for FieldElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}∈GF({})", self.value, self.field.order())
    }
}

impl FieldElement {
    pub fn field(&self) -> &Field {
        &self.field
    }

    /// Canonical integer encoding Σ cᵢ pⁱ.
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    fn same_field(&self, other: &FieldElement) -> Result<()> {
        if self.field == other.field {
            Ok(())
        } else {
            Err(Error::FieldMismatch)
        }
    }

    pub fn add(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.add_v(self.value, other.value),
        })
    }

    pub fn sub(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.sub_v(self.value, other.value),
        })
    }

    pub fn neg(&self) -> FieldElement {
        FieldElement {
            field: self.field.clone(),
            value: self.field.neg_v(self.value),
        }
    }

    pub fn mul(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.mul_v(self.value, other.value),
        })
    }

    pub fn inv(&self) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.inv_v(self.value)?,
        })
    }

    pub fn div(&self, other: &FieldElement) -> Result<FieldElement> {
        self.same_field(other)?;
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.div_v(self.value, other.value)?,
        })
    }

    pub fn pow(&self, k: i64) -> Result<FieldElement> {
        Ok(FieldElement {
            field: self.field.clone(),
            value: self.field.pow_v(self.value, k)?,
        })
    }

    /// x ↦ x^p, the field's absolute Frobenius.
    pub fn frobenius(&self) -> FieldElement {
        self.pow(self.field.characteristic() as i64)
            .expect("positive exponent cannot fail")
    }

    /// Multiplicative order (errors on zero).
    pub fn multiplicative_order(&self) -> Result<u64> {
        self.field.order_of(self.value)
    }
}

// ---------------------------------------------------------------------------
// Extensions and embeddings
// ---------------------------------------------------------------------------

/// GF(q^m) together with the recorded embedding of a base GF(q).
///
/// The embedding sends the base residue x̄ to the smallest-encoded root β of
/// the base modulus inside the extension and extends coefficient-wise; it is
/// an injective field homomorphism (deterministic, though not necessarily
/// the norm-compatible one).
pub struct Extension {
    base: Field,
    top: Field,
    beta: u64,
    embed_tbl: Vec<u64>,
    project_tbl: HashMap<u64, u64>,
}

impl Extension {
    pub fn new(base: &Field, m: u32) -> Result<Extension> {
        if m == 0 {
            return Err(Error::InvalidParameter("extension degree must be ≥ 1".into()));
        }
        let p = base.characteristic();
        let e = base.degree();
        let top_deg = e.checked_mul(m).ok_or_else(|| Error::InvalidParameter("extension degree overflow".into()))?;
        let size = (p as u128).checked_pow(top_deg).unwrap_or(u128::MAX);
        if size > FIELD_SIZE_LIMIT {
            return Err(Error::FieldTooLarge {
                size,
                limit: FIELD_SIZE_LIMIT,
            });
        }
        let top = if m == 1 {
            base.clone()
        } else {
            Field::with_degree(p, top_deg)?
        };
        let q = base.order();
        let beta = if m == 1 {
            // Identity embedding.
            if e == 1 {
                (p - base.modulus()[0]) % p
            } else {
                p
            }
        } else if e == 1 {
            // Prime subfield: constants embed as themselves; β is the root
            // r of x − r, i.e. the constant r.
            (p - base.modulus()[0]) % p
        } else {
            // Roots of the base modulus lie in the unique subfield of size
            // q, whose nonzero elements are the powers of γ^{(Q−1)/(q−1)}.
            let big_ord = top.order() - 1;
            let step = big_ord / (q - 1);
            let mut roots: Vec<u64> = (0..q - 1)
                .map(|j| top.exp_v(j * step))
                .filter(|&cand| {
                    // Evaluate the base modulus at cand via Horner.
                    let mut acc = 0u64;
                    for &c in base.modulus().iter().rev() {
                        acc = top.add_v(top.mul_v(acc, cand), c % p);
                    }
                    acc == 0
                })
                .collect();
            roots.sort_unstable();
            *roots.first().ok_or(Error::WrongOrder)?
        };
        let mut embed_tbl = Vec::with_capacity(q as usize);
        let mut project_tbl = HashMap::with_capacity(q as usize);
        for v in 0..q {
            let img = if m == 1 {
                v
            } else {
                // Σ cᵢ βⁱ with (c₀,…) the base-p digits of v.
                let mut img = 0u64;
                let mut x = v;
                let mut bpow = 1u64; // β^0
                for _ in 0..e {
                    let d = x % p;
                    if d != 0 {
                        img = top.add_v(img, top.mul_v(d, bpow));
                    }
                    bpow = top.mul_v(bpow, beta);
                    x /= p;
                }
                img
            };
            embed_tbl.push(img);
            project_tbl.insert(img, v);
        }
        assert_eq!(project_tbl.len(), q as usize, "embedding must be injective");
        Ok(Extension {
            base: base.clone(),
            top,
            beta,
            embed_tbl,
            project_tbl,
        })
    }

    pub fn base(&self) -> &Field {
        &self.base
    }

    pub fn top(&self) -> &Field {
        &self.top
    }

    /// Image of the base residue x̄ in the extension.
    pub fn beta(&self) -> u64 {
        self.beta
    }

    pub fn embed_v(&self, v: u64) -> u64 {
        self.embed_tbl[v as usize]
    }

    pub fn project_v(&self, v: u64) -> Result<u64> {
        self.project_tbl
            .get(&v)
            .copied()
            .ok_or(Error::CoefficientOutsideSubfield)
    }

    pub fn embed(&self, a: &FieldElement) -> Result<FieldElement> {
        if *a.field() != self.base {
            return Err(Error::FieldMismatch);
        }
        self.top.element(self.embed_v(a.value()))
    }

    pub fn project(&self, a: &FieldElement) -> Result<FieldElement> {
        if *a.field() != self.top {
            return Err(Error::FieldMismatch);
        }
        self.base.element(self.project_v(a.value())?)
    }
}
