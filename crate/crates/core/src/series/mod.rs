//! Exact Laurent polynomials, truncated Laurent series in `t`, and the
//! `(t, s)` bi-graded variant.

mod bi;
mod laurent;
mod poly;
mod rational;

pub use bi::{bi_collect, bi_eval_s0, BiSeries};
pub use laurent::{ArithKind, LaurentSeries};
pub use poly::LaurentPoly;
pub use rational::{denominator_poly, exact_poly_quotient, expand_rational};

use num_bigint::BigInt;

use crate::error::Result;

/// `[t^a] f`.
pub fn coefficient_at(f: &LaurentSeries, a: i64) -> Result<&BigInt> {
    f.coefficient_at(a)
}

pub fn arith(a: &LaurentSeries, b: &LaurentSeries, kind: ArithKind) -> LaurentSeries {
    a.arith(b, kind)
}
