use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

/// A finite Laurent polynomial in `t` with exact integer coefficients.
///
/// Stored densely from the lowest nonzero exponent; the zero polynomial has no
/// coefficients.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct LaurentPoly {
    low: i64,
    coeffs: Vec<BigInt>,
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly::default()
    }

    pub fn one() -> Self {
        LaurentPoly::monomial(BigInt::one(), 0)
    }

    /// `c t^e`.
    pub fn monomial(c: impl Into<BigInt>, e: i64) -> Self {
        LaurentPoly::from_dense(e, vec![c.into()])
    }

    /// `t^e`.
    pub fn t_pow(e: i64) -> Self {
        LaurentPoly::monomial(1, e)
    }

    /// `1 - t^d`.
    pub fn one_minus_t_pow(d: i64) -> Self {
        &LaurentPoly::one() - &LaurentPoly::t_pow(d)
    }

    /// Coefficients `coeffs[i]` of `t^{low + i}`.
    pub fn from_dense(low: i64, coeffs: Vec<BigInt>) -> Self {
        let mut p = LaurentPoly { low, coeffs };
        p.trim();
        p
    }

    pub fn from_terms<I, C>(terms: I) -> Self
    where
        I: IntoIterator<Item = (i64, C)>,
        C: Into<BigInt>,
    {
        let terms: Vec<(i64, BigInt)> = terms.into_iter().map(|(e, c)| (e, c.into())).collect();
        let Some(low) = terms.iter().map(|(e, _)| *e).min() else {
            return LaurentPoly::zero();
        };
        let high = terms.iter().map(|(e, _)| *e).max().expect("nonempty");
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in terms {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(Zero::is_zero) {
            self.coeffs.pop();
        }
        let lead = self.coeffs.iter().take_while(|c| c.is_zero()).count();
        if lead > 0 {
            self.coeffs.drain(..lead);
            self.low += lead as i64;
        }
        if self.coeffs.is_empty() {
            self.low = 0;
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Lowest exponent with a nonzero coefficient.
    pub fn low_degree(&self) -> Option<i64> {
        (!self.is_zero()).then_some(self.low)
    }

    /// Highest exponent with a nonzero coefficient.
    pub fn high_degree(&self) -> Option<i64> {
        (!self.is_zero()).then(|| self.low + self.coeffs.len() as i64 - 1)
    }

    pub fn coeff(&self, e: i64) -> BigInt {
        let i = e - self.low;
        if i < 0 {
            return BigInt::zero();
        }
        self.coeffs.get(i as usize).cloned().unwrap_or_default()
    }

    /// Nonzero terms `(exponent, coefficient)` in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.low + i as i64, c))
    }

    /// Value at `t = 1`.
    pub fn eval_at_one(&self) -> BigInt {
        self.coeffs.iter().sum()
    }

    /// Multiplies by `t^e`.
    pub fn shifted(&self, e: i64) -> Self {
        if self.is_zero() {
            return self.clone();
        }
        LaurentPoly { low: self.low + e, coeffs: self.coeffs.clone() }
    }

    pub fn scaled(&self, c: &BigInt) -> Self {
        LaurentPoly::from_dense(self.low, self.coeffs.iter().map(|x| x * c).collect())
    }

    pub fn pow(&self, k: u32) -> Self {
        let mut acc = LaurentPoly::one();
        for _ in 0..k {
            acc = &acc * self;
        }
        acc
    }

    /// Product of an iterator of polynomials.
    pub fn product<'a>(factors: impl IntoIterator<Item = &'a LaurentPoly>) -> Self {
        factors.into_iter().fold(LaurentPoly::one(), |acc, f| &acc * f)
    }

    /// Long division by a divisor whose highest coefficient is `+1` or `-1`.
    ///
    /// Returns `(quotient, remainder)` with `self = quotient * divisor + remainder`
    /// and the remainder spanning fewer exponents than the divisor, measured from
    /// the lowest exponent of `self`. Returns `None` for a zero divisor or a
    /// non-unit leading coefficient.
    pub fn div_rem(&self, divisor: &LaurentPoly) -> Option<(LaurentPoly, LaurentPoly)> {
        let d_high = divisor.high_degree()?;
        let d_low = divisor.low;
        let lead = divisor.coeff(d_high);
        if !lead.abs().is_one() {
            return None;
        }
        if self.is_zero() {
            return Some((LaurentPoly::zero(), LaurentPoly::zero()));
        }
        let d_span = d_high - d_low;
        let mut rem = self.coeffs.clone();
        let n_span = rem.len() as i64 - 1;
        if n_span < d_span {
            return Some((LaurentPoly::zero(), self.clone()));
        }
        let q_len = (n_span - d_span + 1) as usize;
        let mut quot = vec![BigInt::zero(); q_len];
        for qi in (0..q_len).rev() {
            let top = qi + d_span as usize;
            if rem[top].is_zero() {
                continue;
            }
            let factor = &rem[top] * &lead; // lead is +-1, so this is rem / lead
            for (j, dc) in divisor.coeffs.iter().enumerate() {
                rem[qi + j] -= &factor * dc;
            }
            quot[qi] = factor;
        }
        // self.low = quot.low + d_low
        let quotient = LaurentPoly::from_dense(self.low - d_low, quot);
        let remainder = LaurentPoly::from_dense(self.low, rem);
        Some((quotient, remainder))
    }
}

impl Add for &LaurentPoly {
    type Output = LaurentPoly;

    fn add(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return rhs.clone();
        }
        if rhs.is_zero() {
            return self.clone();
        }
        let low = self.low.min(rhs.low);
        let high = self.high_degree().unwrap().max(rhs.high_degree().unwrap());
        let mut coeffs = vec![BigInt::zero(); (high - low + 1) as usize];
        for (e, c) in self.terms().chain(rhs.terms()) {
            coeffs[(e - low) as usize] += c;
        }
        LaurentPoly::from_dense(low, coeffs)
    }
}

impl Neg for &LaurentPoly {
    type Output = LaurentPoly;

    fn neg(self) -> LaurentPoly {
        LaurentPoly { low: self.low, coeffs: self.coeffs.iter().map(|c| -c).collect() }
    }
}

impl Sub for &LaurentPoly {
    type Output = LaurentPoly;

    fn sub(self, rhs: &LaurentPoly) -> LaurentPoly {
        self + &(-rhs)
    }
}

impl Mul for &LaurentPoly {
    type Output = LaurentPoly;

    fn mul(self, rhs: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || rhs.is_zero() {
            return LaurentPoly::zero();
        }
        let mut coeffs = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        LaurentPoly::from_dense(self.low + rhs.low, coeffs)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (e, c) in self.terms() {
            let neg = c.is_negative();
            let mag = c.abs();
            if first {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            first = false;
            match (e, mag.is_one()) {
                (0, _) => write!(f, "{mag}")?,
                (_, true) => write!(f, "t^{e}")?,
                (_, false) => write!(f, "{mag}*t^{e}")?,
            }
        }
        Ok(())
    }
}
