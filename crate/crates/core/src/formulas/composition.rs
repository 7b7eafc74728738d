use num_bigint::BigInt;

use super::steinberg::{det0_bracket, prefactor};
use super::ClosedForm;
use crate::combinatorics::{normalize, DominantWeight, GroupParams, Partition};
use crate::error::{Error, Result};
use crate::series::{exact_poly_quotient, LaurentPoly, LaurentSeries};
use crate::specialize::{elementary_single, monomial_spec, SpecPoints};

pub const WEDGE_TWIST: &str = "composition multiplicity of L(gamma), gamma from wedge^m x Det^k";
pub const GENERAL_1: &str = "composition multiplicity of L((q-1)rho - mu + k omega_n)";
pub const GENERAL_2: &str = "composition multiplicity of L((q-1)rho + w0 mu + k omega_n)";

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum GeneralPart {
    /// `mu_1 <= k`, target `(q-1) rho - mu + k omega_n`.
    One,
    /// `mu_1 + k < q-1`, target `(q-1) rho + w0 mu + k omega_n`.
    Two,
}

/// The simple module whose graded composition multiplicity in `S(V)` is wanted.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum CompositionTarget {
    /// `L(gamma)` with `gamma_i = (q-1)(n-i) - k - [i <= m]`, `1 <= m <= n-1`.
    WedgeTwist {
        m: usize,
        k: i64,
    },
    General {
        mu: Partition,
        k: i64,
        part: GeneralPart,
    },
}

/// A composition multiplicity series with its target weight in `X_r` and
/// the multiple of `(q-1) omega_n` applied to reach it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CompositionSeries {
    pub theorem: &'static str,
    pub series: LaurentSeries,
    pub target: DominantWeight,
    pub det_shift: i64,
}

fn fail(theorem: &'static str, hypothesis: String) -> Error {
    Error::precondition(theorem, hypothesis)
}

/// Closed form and normalized target weight.
pub fn composition_closed_form(
    params: &GroupParams,
    target: &CompositionTarget,
) -> Result<(ClosedForm, DominantWeight, i64)> {
    let n = params.n();
    let q = params.q();
    let desc = SpecPoints::descending(params);
    match target {
        CompositionTarget::WedgeTwist { m, k } => {
            let m = *m;
            if !(1..n).contains(&m) {
                return Err(fail(WEDGE_TWIST, format!("1 <= m <= n-1 (m={m}, n={n})")));
            }
            let k = params.reduce_k_positive(*k);
            let numerator = if k <= q - 2 {
                elementary_single(m, &desc).shifted(prefactor(params, q - k))
            } else {
                let st = prefactor(params, 1);
                let mut num = det0_bracket(params, m).shifted(st);
                if q == 2 {
                    num = &num - &LaurentPoly::t_pow(st);
                }
                num
            };
            let gamma: Vec<i64> = (1..=n).map(|i| (q - 1) * (n - i) as i64 - k - i64::from(i <= m)).collect();
            let (target, shift) = normalize(&DominantWeight::new(gamma)?, params);
            Ok((ClosedForm::steinberg(params, WEDGE_TWIST, numerator), target, shift))
        }
        CompositionTarget::General { mu, k, part } => {
            let theorem = match part {
                GeneralPart::One => GENERAL_1,
                GeneralPart::Two => GENERAL_2,
            };
            let p = params.p();
            // mu = () is St x Det^k, projective for every p
            if !params.coxeter_ok() && !mu.is_empty() {
                return Err(fail(theorem, format!("p > n (Coxeter number) (p={p}, n={n})")));
            }
            if mu.length() > n {
                return Err(fail(theorem, format!("l(mu) <= n (mu={mu}, n={n})")));
            }
            if mu.spread(n) as u64 > p - 1 {
                return Err(fail(theorem, format!("mu_1 - mu_n <= p-1 (mu={mu}, p={p})")));
            }
            let k = params.reduce_k(*k);
            let mu1 = mu.first() as i64;
            let rho = params.rho();
            let padded = mu.padded(n)?;
            let (points, weight) = match part {
                GeneralPart::One => {
                    if mu1 > k {
                        return Err(fail(theorem, format!("mu_1 <= k (mu_1={mu1}, k={k})")));
                    }
                    let w = (0..n).map(|i| (q - 1) * rho[i] - padded[i] as i64 + k).collect();
                    (desc, w)
                }
                GeneralPart::Two => {
                    if mu1 + k >= q - 1 {
                        return Err(fail(theorem, format!("mu_1 + k < q-1 (mu_1={mu1}, k={k}, q={q})")));
                    }
                    let w = (0..n).map(|i| (q - 1) * rho[i] + padded[n - 1 - i] as i64 + k).collect();
                    (SpecPoints::ascending(params), w)
                }
            };
            let numerator = monomial_spec(mu, &points)?.shifted(prefactor(params, k + 1));
            let (target, shift) = normalize(&DominantWeight::new(weight)?, params);
            Ok((ClosedForm::steinberg(params, theorem, numerator), target, shift))
        }
    }
}

/// Graded composition multiplicity of the target simple module in `S(V)`.
pub fn composition_multiplicity_series(
    params: &GroupParams,
    target: &CompositionTarget,
    trunc: i64,
) -> Result<CompositionSeries> {
    let (form, target, det_shift) = composition_closed_form(params, target)?;
    Ok(CompositionSeries { theorem: form.theorem, series: form.expand(trunc)?, target, det_shift })
}

/// The coinvariant-algebra multiplicity: a polynomial, with its value at `t = 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoinvariantPoly {
    pub theorem: &'static str,
    pub poly: LaurentPoly,
    pub value_at_1: BigInt,
    pub target: DominantWeight,
    pub det_shift: i64,
}

/// Multiplies the closed form by `prod_i (1 - t^{q^n - q^i})` and divides out
/// the denominator exactly. Only `General` targets are accepted.
pub fn coinvariant_multiplicity(params: &GroupParams, target: &CompositionTarget) -> Result<CoinvariantPoly> {
    let CompositionTarget::General { mu, .. } = target else {
        return Err(Error::InvalidArgument("coinvariant multiplicities need a General target".to_string()));
    };
    let (form, weight, det_shift) = composition_closed_form(params, target)?;
    let dickson =
        params.dickson_degrees().into_iter().fold(LaurentPoly::one(), |acc, d| &acc * &LaurentPoly::one_minus_t_pow(d));
    let (poly, exact) = exact_poly_quotient(&(&form.numerator * &dickson), &form.denominators)?;
    if !exact {
        return Err(Error::InexactDivision(format!("coinvariant numerator for mu={mu} on {params}")));
    }
    let value_at_1 = poly.eval_at_one();
    Ok(CoinvariantPoly { theorem: form.theorem, poly, value_at_1, target: weight, det_shift })
}
