use std::fmt;

use num_bigint::BigUint;

use crate::error::{Error, Result};

/// The finite group data `(n, p, r)` with `q = p^r`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct GroupParams {
    n: usize,
    p: u64,
    r: u32,
    q: i64,
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2;
    while d * d <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

impl GroupParams {
    pub fn new(n: usize, p: u64, r: u32) -> Result<Self> {
        if n == 0 {
            return Err(Error::InvalidParams("n must be at least 1".into()));
        }
        if !is_prime(p) {
            return Err(Error::InvalidParams(format!("p = {p} is not prime")));
        }
        if r == 0 {
            return Err(Error::InvalidParams("r must be at least 1".into()));
        }
        let q = i64::try_from(p)
            .ok()
            .and_then(|p| p.checked_pow(r))
            .ok_or_else(|| Error::InvalidParams(format!("q = {p}^{r} overflows")))?;
        let params = GroupParams { n, p, r, q };
        // Every series exponent is bounded by a small multiple of q^n.
        if q.checked_pow(n as u32).and_then(|v| v.checked_mul(64)).is_none() {
            return Err(Error::InvalidParams(format!("q^n = {q}^{n} is too large for exponent arithmetic")));
        }
        Ok(params)
    }

    /// Builds the parameters for a given prime power `q`.
    pub fn from_q(n: usize, q: u64) -> Result<Self> {
        for p in 2..=q {
            if q.is_multiple_of(p) {
                let mut r = 0;
                let mut rest = q;
                while rest.is_multiple_of(p) {
                    rest /= p;
                    r += 1;
                }
                if rest != 1 {
                    return Err(Error::InvalidParams(format!("q = {q} is not a prime power")));
                }
                return GroupParams::new(n, p, r);
            }
        }
        Err(Error::InvalidParams(format!("q = {q} is not a prime power")))
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn r(&self) -> u32 {
        self.r
    }

    pub fn q(&self) -> i64 {
        self.q
    }

    /// `p > n`, the Coxeter-number hypothesis of the PIM results.
    pub fn coxeter_ok(&self) -> bool {
        self.p > self.n as u64
    }

    pub fn q_pow(&self, i: usize) -> i64 {
        self.q.pow(i as u32)
    }

    /// `(q^n - 1) / (q - 1) = 1 + q + ... + q^{n-1}`.
    pub fn q_sum(&self) -> i64 {
        (0..self.n).map(|i| self.q_pow(i)).sum()
    }

    /// `rho = (n-1, ..., 1, 0)`.
    pub fn rho(&self) -> Vec<i64> {
        (0..self.n).rev().map(|i| i as i64).collect()
    }

    /// `|rho| = n(n-1)/2`.
    pub fn rho_size(&self) -> i64 {
        (self.n * (self.n - 1) / 2) as i64
    }

    /// Dimension of the Steinberg module, `q^{n(n-1)/2}`.
    pub fn steinberg_dim(&self) -> BigUint {
        BigUint::from(self.q as u64).pow(self.rho_size() as u32)
    }

    /// Exponents `q^i - 1` for `i = 1..=n`, the common denominator of every
    /// multiplicity series.
    pub fn steinberg_denominators(&self) -> Vec<i64> {
        (1..=self.n).map(|i| self.q_pow(i) - 1).collect()
    }

    /// Exponents `q^n - q^i` for `i = 0..n`, the degrees of the Dickson invariants.
    pub fn dickson_degrees(&self) -> Vec<i64> {
        let top = self.q_pow(self.n);
        (0..self.n).map(|i| top - self.q_pow(i)).collect()
    }

    /// Reduces a determinant power to its representative in `[0, q-2]`.
    pub fn reduce_k(&self, k: i64) -> i64 {
        k.rem_euclid(self.q - 1)
    }

    /// Reduces a determinant power to its representative in `[1, q-1]`.
    pub fn reduce_k_positive(&self, k: i64) -> i64 {
        match self.reduce_k(k) {
            0 => self.q - 1,
            k => k,
        }
    }
}

impl fmt::Display for GroupParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GL_{}({}) [p={}, r={}]", self.n, self.q, self.p, self.r)
    }
}
