use std::fmt;
use std::ops::{Add, Mul, Sub};

use num_bigint::BigInt;
use num_traits::Zero;

use super::LaurentPoly;
use crate::error::{Error, Result};

/// A truncated Laurent series `sum_{e = shift}^{trunc} c_e t^e`.
///
/// Coefficients below `shift` are zero; coefficients above `trunc` are unknown.
#[derive(Debug, Clone, Eq)]
pub struct LaurentSeries {
    shift: i64,
    trunc: i64,
    coeffs: Vec<BigInt>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ArithKind {
    Add,
    Sub,
    Mul,
}

impl LaurentSeries {
    /// `coeffs` must hold exactly `trunc - shift + 1` entries (none when
    /// `trunc < shift`).
    pub fn new(shift: i64, trunc: i64, coeffs: Vec<BigInt>) -> Result<Self> {
        let expected = (trunc - shift + 1).max(0) as usize;
        if coeffs.len() != expected {
            return Err(Error::InvalidArgument(format!(
                "series with shift {shift} and trunc {trunc} needs {expected} coefficients, got {}",
                coeffs.len()
            )));
        }
        Ok(LaurentSeries { shift, trunc, coeffs })
    }

    pub fn zero(trunc: i64) -> Self {
        LaurentSeries::from_poly(&LaurentPoly::zero(), trunc)
    }

    /// Truncates a polynomial. The stored range starts at `min(0, lowest exponent)`.
    pub fn from_poly(p: &LaurentPoly, trunc: i64) -> Self {
        let shift = p.low_degree().unwrap_or(0).min(0);
        let coeffs = (shift..=trunc).map(|e| p.coeff(e)).collect();
        LaurentSeries { shift, trunc, coeffs }
    }

    pub fn shift(&self) -> i64 {
        self.shift
    }

    pub fn trunc(&self) -> i64 {
        self.trunc
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    /// The coefficient of `t^a`; an error outside `[shift, trunc]`.
    pub fn coefficient_at(&self, a: i64) -> Result<&BigInt> {
        if a < self.shift || a > self.trunc {
            return Err(Error::OutOfRange { exponent: a, low: self.shift, high: self.trunc });
        }
        Ok(&self.coeffs[(a - self.shift) as usize])
    }

    /// Coefficient with implicit zeros below `shift`; panics above `trunc`.
    pub(crate) fn coeff(&self, a: i64) -> BigInt {
        assert!(a <= self.trunc, "t^{a} is beyond the truncation {}", self.trunc);
        if a < self.shift {
            BigInt::zero()
        } else {
            self.coeffs[(a - self.shift) as usize].clone()
        }
    }

    /// Nonzero terms in increasing exponent order.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &BigInt)> + '_ {
        self.coeffs.iter().enumerate().filter(|(_, c)| !c.is_zero()).map(move |(i, c)| (self.shift + i as i64, c))
    }

    /// The known part as a polynomial.
    pub fn to_poly(&self) -> LaurentPoly {
        LaurentPoly::from_dense(self.shift, self.coeffs.clone())
    }

    /// Re-truncates at a lower horizon.
    pub fn truncated(&self, trunc: i64) -> Result<Self> {
        if trunc > self.trunc {
            return Err(Error::TruncationMismatch(trunc, self.trunc));
        }
        Ok(LaurentSeries::from_poly(&self.to_poly(), trunc).with_shift_at_most(self.shift))
    }

    fn with_shift_at_most(mut self, shift: i64) -> Self {
        if shift < self.shift {
            let pad = (self.shift - shift) as usize;
            let mut coeffs = vec![BigInt::zero(); pad];
            coeffs.append(&mut self.coeffs);
            self.coeffs = coeffs;
            self.shift = shift;
        }
        self
    }

    /// Multiplies by a polynomial; the result is known up to `trunc + low(p)`.
    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        let Some(low) = p.low_degree() else {
            return LaurentSeries::zero(self.trunc);
        };
        let trunc = self.trunc + low;
        let prod = &self.to_poly() * p;
        LaurentSeries::from_poly(&prod, trunc).with_shift_at_most(self.shift + low)
    }

    pub fn arith(&self, other: &LaurentSeries, kind: ArithKind) -> LaurentSeries {
        match kind {
            ArithKind::Add => self.combine(other, |a, b| a + b),
            ArithKind::Sub => self.combine(other, |a, b| a - b),
            ArithKind::Mul => {
                // Each factor is only known to its own horizon; the product is
                // known as far as both partial sums are.
                let trunc = (self.trunc + other.shift).min(other.trunc + self.shift);
                let prod = &self.to_poly() * &other.to_poly();
                LaurentSeries::from_poly(&prod, trunc).with_shift_at_most(self.shift + other.shift)
            }
        }
    }

    fn combine(&self, other: &LaurentSeries, op: impl Fn(BigInt, BigInt) -> BigInt) -> LaurentSeries {
        let shift = self.shift.min(other.shift);
        let trunc = self.trunc.min(other.trunc);
        let coeffs = (shift..=trunc).map(|e| op(self.coeff(e), other.coeff(e))).collect();
        LaurentSeries { shift, trunc, coeffs }
    }

    /// Canonical JSON: `{"shift":s,"trunc":t,"coeffs":[...]}` with decimal
    /// integers of arbitrary size.
    pub fn to_json(&self) -> String {
        let coeffs: Vec<String> = self.coeffs.iter().map(BigInt::to_string).collect();
        format!("{{\"shift\":{},\"trunc\":{},\"coeffs\":[{}]}}", self.shift, self.trunc, coeffs.join(","))
    }

    pub fn from_json(s: &str) -> Result<Self> {
        let v: serde_json::Value = serde_json::from_str(s).map_err(|e| Error::Parse(e.to_string()))?;
        LaurentSeries::from_json_value(&v)
    }

    pub fn from_json_value(v: &serde_json::Value) -> Result<Self> {
        let int = |key: &str| -> Result<i64> {
            v.get(key)
                .and_then(serde_json::Value::as_i64)
                .ok_or_else(|| Error::Parse(format!("missing integer field {key:?}")))
        };
        let shift = int("shift")?;
        let trunc = int("trunc")?;
        let coeffs = v
            .get("coeffs")
            .and_then(serde_json::Value::as_array)
            .ok_or_else(|| Error::Parse("missing array field \"coeffs\"".into()))?
            .iter()
            .map(|c| match c {
                serde_json::Value::Number(num) => {
                    num.to_string().parse::<BigInt>().map_err(|e| Error::Parse(format!("bad coefficient {num}: {e}")))
                }
                other => Err(Error::Parse(format!("bad coefficient {other}"))),
            })
            .collect::<Result<Vec<_>>>()?;
        LaurentSeries::new(shift, trunc, coeffs)
    }
}

/// Equal iff the truncations match and every coefficient up to `trunc`
/// agrees, counting entries below either `shift` as zero.
impl PartialEq for LaurentSeries {
    fn eq(&self, other: &Self) -> bool {
        if self.trunc != other.trunc {
            return false;
        }
        let low = self.shift.min(other.shift);
        (low..=self.trunc).all(|e| self.coeff(e) == other.coeff(e))
    }
}

impl Add for &LaurentSeries {
    type Output = LaurentSeries;

    fn add(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.arith(rhs, ArithKind::Add)
    }
}

impl Sub for &LaurentSeries {
    type Output = LaurentSeries;

    fn sub(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.arith(rhs, ArithKind::Sub)
    }
}

impl Mul for &LaurentSeries {
    type Output = LaurentSeries;

    fn mul(self, rhs: &LaurentSeries) -> LaurentSeries {
        self.arith(rhs, ArithKind::Mul)
    }
}

impl fmt::Display for LaurentSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let p = self.to_poly();
        if p.is_zero() {
            write!(f, "O(t^{})", self.trunc + 1)
        } else {
            write!(f, "{p} + O(t^{})", self.trunc + 1)
        }
    }
}
