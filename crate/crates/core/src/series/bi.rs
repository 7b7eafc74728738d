use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::Zero;

use super::{LaurentPoly, LaurentSeries};
use crate::error::{Error, Result};

/// A series in `(t, s)`, truncated in `t` and polynomial in `s` of degree at
/// most `max_s`. Only nonzero coefficients are stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BiSeries {
    trunc_t: i64,
    max_s: usize,
    coeffs: BTreeMap<(i64, usize), BigInt>,
}

impl BiSeries {
    pub fn zero(trunc_t: i64, max_s: usize) -> Self {
        BiSeries { trunc_t, max_s, coeffs: BTreeMap::new() }
    }

    pub fn trunc_t(&self) -> i64 {
        self.trunc_t
    }

    pub fn max_s(&self) -> usize {
        self.max_s
    }

    /// Nonzero coefficients keyed by `(t exponent, s exponent)`.
    pub fn coeffs(&self) -> &BTreeMap<(i64, usize), BigInt> {
        &self.coeffs
    }

    /// Coefficient of `t^a s^b` (zero when absent).
    pub fn coeff(&self, a: i64, b: usize) -> Result<BigInt> {
        if a > self.trunc_t {
            return Err(Error::OutOfRange { exponent: a, low: i64::MIN, high: self.trunc_t });
        }
        Ok(self.coeffs.get(&(a, b)).cloned().unwrap_or_default())
    }

    /// The coefficient of `s^b` as a series in `t`.
    pub fn slice(&self, b: usize) -> LaurentSeries {
        let p = LaurentPoly::from_terms(
            self.coeffs.iter().filter(|((_, sb), _)| *sb == b).map(|((ta, _), c)| (*ta, c.clone())),
        );
        LaurentSeries::from_poly(&p, self.trunc_t)
    }
}

/// Assembles `sum_b s^b f_b(t)` from its `s`-slices.
pub fn bi_collect(slices: &BTreeMap<usize, LaurentSeries>, max_s: usize, trunc_t: i64) -> Result<BiSeries> {
    let mut out = BiSeries::zero(trunc_t, max_s);
    for (&b, f) in slices {
        if b > max_s {
            return Err(Error::InvalidArgument(format!("s-degree {b} exceeds the bound {max_s}")));
        }
        if f.trunc() != trunc_t {
            return Err(Error::TruncationMismatch(f.trunc(), trunc_t));
        }
        for (a, c) in f.terms() {
            if !c.is_zero() {
                out.coeffs.insert((a, b), c.clone());
            }
        }
    }
    Ok(out)
}

/// The `s^0` slice.
pub fn bi_eval_s0(f: &BiSeries) -> LaurentSeries {
    f.slice(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn series(terms: &[(i64, i64)], trunc: i64) -> LaurentSeries {
        LaurentSeries::from_poly(&LaurentPoly::from_terms(terms.iter().copied()), trunc)
    }

    #[test]
    fn collect_and_extract() {
        let s0 = series(&[(0, 1), (3, 2)], 6);
        let s1 = series(&[(-1, 4), (2, 1)], 6);
        let slices = BTreeMap::from([(0, s0.clone()), (1, s1.clone())]);
        let bi = bi_collect(&slices, 2, 6).unwrap();
        assert_eq!(bi_eval_s0(&bi), s0);
        assert_eq!(bi.slice(1), s1);
        assert_eq!(bi.slice(2), LaurentSeries::zero(6));
        assert_eq!(bi.coeff(-1, 1).unwrap(), BigInt::from(4));
        assert!(bi.coeff(7, 0).is_err());
    }

    #[test]
    fn single_slice_has_only_that_degree() {
        let slices = BTreeMap::from([(1, series(&[(2, 5)], 4))]);
        let bi = bi_collect(&slices, 3, 4).unwrap();
        assert!(bi.coeffs().keys().all(|&(_, b)| b == 1));
    }

    #[test]
    fn empty_map_is_zero() {
        let bi = bi_collect(&BTreeMap::new(), 2, 10).unwrap();
        assert_eq!(bi, BiSeries::zero(10, 2));
    }

    #[test]
    fn inconsistent_truncations_are_rejected() {
        let slices = BTreeMap::from([(0, series(&[(0, 1)], 4)), (1, series(&[(0, 1)], 5))]);
        assert!(matches!(bi_collect(&slices, 2, 4), Err(Error::TruncationMismatch(5, 4))));
        let slices = BTreeMap::from([(3, series(&[(0, 1)], 4))]);
        assert!(bi_collect(&slices, 2, 4).is_err());
    }
}
