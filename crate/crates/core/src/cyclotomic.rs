//! Cyclotomic cosets of q modulo n and the defining sets built from them.

use num_bigint::BigUint;

use crate::arith::gcd;
use crate::error::{Error, Result};

/// Largest supported length; dense coset bookkeeping is O(n).
pub const MAX_LENGTH: u64 = 1 << 24;

/// Multiplicative order of q modulo n (requires gcd(n, q) = 1; n = 1 gives 1).
pub fn multiplicative_order(q: u64, n: u64) -> Result<u64> {
    if n == 0 {
        return Err(Error::InvalidParameter("modulus must be positive".into()));
    }
    if gcd(q, n) != 1 {
        return Err(Error::NotCoprime { n, q });
    }
    let target = 1 % n;
    let mut acc = q % n;
    let mut ord = 1u64;
    while acc != target {
        acc = (acc as u128 * q as u128 % n as u128) as u64;
        ord += 1;
    }
    Ok(ord)
}

/// Fixed (n, q) pair with gcd(n, q) = 1, carrying m = ord_n(q): the ambient
/// data for cyclotomic cosets {x·qʲ mod n}.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CosetContext {
    n: u64,
    q: u64,
    m: u64,
}

impl CosetContext {
    pub fn new(n: u64, q: u64) -> Result<CosetContext> {
        if n == 0 || n > MAX_LENGTH {
            return Err(Error::InvalidParameter(format!(
                "length must be in 1..={MAX_LENGTH}, got {n}"
            )));
        }
        if q < 2 {
            return Err(Error::InvalidParameter("alphabet must be ≥ 2".into()));
        }
        let m = multiplicative_order(q, n)?;
        Ok(CosetContext { n, q, m })
    }

    pub fn n(&self) -> u64 {
        self.n
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// The multiplicative order m = ord_n(q); codes of length n over GF(q)
    /// split over GF(q^m).
    pub fn m(&self) -> u64 {
        self.m
    }

    /// The coset of x (taken mod n), sorted ascending.
    pub fn coset(&self, x: u64) -> Vec<u64> {
        let x = x % self.n;
        let mut out = vec![x];
        let mut cur = (x as u128 * self.q as u128 % self.n as u128) as u64;
        while cur != x {
            out.push(cur);
            cur = (cur as u128 * self.q as u128 % self.n as u128) as u64;
        }
        out.sort_unstable();
        out
    }

    /// Smallest element of the coset of x: the canonical representative.
    pub fn coset_min(&self, x: u64) -> u64 {
        self.coset(x)[0]
    }

    /// All cosets partitioning 0..n, ordered by representative.
    pub fn all_cosets(&self) -> Vec<Vec<u64>> {
        let mut seen = vec![false; self.n as usize];
        let mut out = Vec::new();
        for x in 0..self.n {
            if seen[x as usize] {
                continue;
            }
            let c = self.coset(x);
            for &e in &c {
                seen[e as usize] = true;
            }
            out.push(c);
        }
        out
    }

    /// Union of the cosets of b, b+1, …, b+δ−2 (mod n): the defining set of
    /// a designed-distance-δ code. δ must lie in [1, n]; δ = 1 gives ∅.
    pub fn defining_set(&self, b: u64, delta: u64) -> Result<Vec<u64>> {
        if delta < 1 || delta > self.n {
            return Err(Error::DeltaOutOfRange { delta, max: self.n });
        }
        let mut member = vec![false; self.n as usize];
        for off in 0..delta - 1 {
            let x = (b % self.n + off) % self.n;
            if member[x as usize] {
                continue;
            }
            for e in self.coset(x) {
                member[e as usize] = true;
            }
        }
        Ok((0..self.n).filter(|&x| member[x as usize]).collect())
    }

    /// True when the size-m guarantee applies to the coset of x: under
    /// q^⌊m/2⌋ < n, every x with 1 ≤ x and x·(q^m − 1) ≤ n·q^⌈m/2⌉ has a
    /// full-size coset |C_x| = m. The claim is cross-asserted against the
    /// actual coset.
    pub fn coset_size_guarantee(&self, x: u64) -> bool {
        let x = x % self.n;
        if x == 0 {
            return false;
        }
        if self.m == 1 {
            return true;
        }
        let q = BigUint::from(self.q);
        let n = BigUint::from(self.n);
        let qm = q.pow(self.m as u32);
        if q.pow((self.m / 2) as u32) >= n {
            return false;
        }
        let lhs = BigUint::from(x) * (&qm - 1u32);
        let rhs = &n * q.pow(self.m.div_ceil(2) as u32);
        if lhs > rhs {
            return false;
        }
        assert_eq!(
            self.coset(x).len() as u64,
            self.m,
            "coset size guarantee violated at n={}, q={}, x={}",
            self.n,
            self.q,
            x
        );
        true
    }
}

/// {−z mod n : z ∈ set}, sorted.
pub fn negate(set: &[u64], n: u64) -> Vec<u64> {
    let mut out: Vec<u64> = set.iter().map(|&z| (n - z % n) % n).collect();
    out.sort_unstable();
    out
}

/// {−s·z mod n : z ∈ set}, sorted.
pub fn scale_negate(set: &[u64], n: u64, s: u64) -> Vec<u64> {
    let mut out: Vec<u64> = set
        .iter()
        .map(|&z| {
            let sz = (s as u128 * (z % n) as u128 % n as u128) as u64;
            (n - sz) % n
        })
        .collect();
    out.sort_unstable();
    out
}

/// Whether two sorted slices intersect.
pub fn sorted_intersects(a: &[u64], b: &[u64]) -> bool {
    let (mut i, mut j) = (0, 0);
    while i < a.len() && j < b.len() {
        match a[i].cmp(&b[j]) {
            std::cmp::Ordering::Less => i += 1,
            std::cmp::Ordering::Greater => j += 1,
            std::cmp::Ordering::Equal => return true,
        }
    }
    false
}
