use std::fmt;

use num_bigint::BigInt;

use super::ClosedForm;
use crate::combinatorics::{GroupParams, Partition};
use crate::error::{Error, Result};
use crate::series::{LaurentPoly, LaurentSeries};
use crate::specialize::{elementary_single, elementary_spec, schur_spec, SpecPoints};

pub const WEDGE: &str = "St in S(V) x wedge^m x Det^k";
pub const WEDGE_DET0: &str = "St in S(V) x wedge^m (k = 0)";
pub const WEDGE_DUAL: &str = "St in S(V) x (wedge^m)* x Det^k";
pub const WEDGE_NU: &str = "St in S(V) x wedge^nu x Det^k";
pub const WEDGE_NU_DUAL: &str = "St in S(V) x (wedge^nu)* x Det^k";
pub const SIMPLE: &str = "St in S(V) x L(mu) x Det^k";
pub const SIMPLE_DUAL: &str = "St in S(V) x L(mu)* x Det^k";
pub const POWER_DET: &str = "St in S(V) x V^l x Det^k";

/// The module tensored with `S(V) x Det^k`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum TensorFactor {
    Wedge(usize),
    WedgeNu(Partition),
    WedgeDual(usize),
    WedgeNuDual(Partition),
    Simple(Partition),
    SimpleDual(Partition),
    /// `V^{x l}`, i.e. `wedge^{(1^l)}`.
    PowerDet(usize),
    None,
}

impl fmt::Display for TensorFactor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TensorFactor::Wedge(m) => write!(f, "wedge({m})"),
            TensorFactor::WedgeNu(nu) => write!(f, "wedgenu{nu}"),
            TensorFactor::WedgeDual(m) => write!(f, "wedge-dual({m})"),
            TensorFactor::WedgeNuDual(nu) => write!(f, "wedgenu-dual{nu}"),
            TensorFactor::Simple(mu) => write!(f, "simple{mu}"),
            TensorFactor::SimpleDual(mu) => write!(f, "simple-dual{mu}"),
            TensorFactor::PowerDet(l) => write!(f, "powerdet({l})"),
            TensorFactor::None => write!(f, "none"),
        }
    }
}

/// `-n + c (q^n - 1)/(q - 1)`, the exponent of the usual prefactor.
pub(crate) fn prefactor(params: &GroupParams, c: i64) -> i64 {
    -(params.n() as i64) + c * params.q_sum()
}

/// `(1 - t^{q^n-1}) e_m(first n-1 points) + t^{q^n-1} e_m(all points)`.
pub(crate) fn det0_bracket(params: &GroupParams, m: usize) -> LaurentPoly {
    let n = params.n();
    let desc = SpecPoints::descending(params);
    let top = params.q_pow(n) - 1;
    let head = elementary_single(m, &desc.prefix(n - 1));
    let full = elementary_single(m, &desc);
    &(&LaurentPoly::one_minus_t_pow(top) * &head) + &full.shifted(top)
}

fn require(ok: bool, theorem: &'static str, hypothesis: impl FnOnce() -> String) -> Result<()> {
    if ok {
        Ok(())
    } else {
        Err(Error::precondition(theorem, hypothesis()))
    }
}

fn check_wedge(theorem: &'static str, m: usize, n: usize) -> Result<()> {
    require(m <= n, theorem, || format!("0 <= m <= n (m={m}, n={n})"))
}

fn check_nu(theorem: &'static str, nu: &Partition, n: usize) -> Result<()> {
    require(nu.first() <= n, theorem, || format!("nu_1 <= n (nu={nu}, n={n})"))
}

fn check_simple(theorem: &'static str, mu: &Partition, params: &GroupParams) -> Result<()> {
    let n = params.n();
    require(mu.length() <= n, theorem, || format!("l(mu) <= n (mu={mu}, n={n})"))?;
    require((1..params.p() as usize).contains(&mu.size()), theorem, || {
        format!("1 <= |mu| <= p-1 (|mu|={}, p={})", mu.size(), params.p())
    })
}

/// The rational closed form for `St` in `S(V) x F x Det^k`.
///
/// `k` is reduced modulo `q - 1`; each variant reads it in the window where
/// its hypothesis is stated (`[0, q-2]` for `Wedge`/`None`, `[1, q-1]` otherwise).
pub fn steinberg_closed_form(params: &GroupParams, factor: &TensorFactor, k: i64) -> Result<ClosedForm> {
    let n = params.n();
    let q = params.q();
    let k0 = params.reduce_k(k);
    let k1 = params.reduce_k_positive(k);
    let desc = SpecPoints::descending(params);
    let asc = SpecPoints::ascending(params);
    let form = |theorem, shift: i64, body: LaurentPoly| ClosedForm::steinberg(params, theorem, body.shifted(shift));

    match factor {
        TensorFactor::None => steinberg_closed_form(params, &TensorFactor::Wedge(0), k),
        TensorFactor::Wedge(m) => {
            let m = *m;
            if k0 == 0 {
                check_wedge(WEDGE_DET0, m, n)?;
                Ok(form(WEDGE_DET0, prefactor(params, 1), det0_bracket(params, m)))
            } else {
                check_wedge(WEDGE, m, n)?;
                Ok(form(WEDGE, prefactor(params, q - k0), elementary_single(m, &desc)))
            }
        }
        TensorFactor::WedgeDual(m) => {
            let m = *m;
            check_wedge(WEDGE_DUAL, m, n)?;
            if k1 == 1 {
                Ok(form(WEDGE_DUAL, prefactor(params, 1), det0_bracket(params, n - m)))
            } else {
                Ok(form(WEDGE_DUAL, prefactor(params, q + 1 - k1), elementary_single(n - m, &desc)))
            }
        }
        TensorFactor::WedgeNu(nu) => {
            check_nu(WEDGE_NU, nu, n)?;
            let l = nu.length() as i64;
            require(k1 + l < q, WEDGE_NU, || format!("1 <= k and k+l <= q-1 (k={k1}, l={l}, q={q})"))?;
            Ok(form(WEDGE_NU, prefactor(params, q - k1), elementary_spec(nu, &desc)?))
        }
        TensorFactor::WedgeNuDual(nu) => {
            check_nu(WEDGE_NU_DUAL, nu, n)?;
            let l = nu.length() as i64;
            require(l >= 1, WEDGE_NU_DUAL, || "a nonempty nu".to_string())?;
            require(l < k1, WEDGE_NU_DUAL, || format!("l < k <= q-1 (k={k1}, l={l}, q={q})"))?;
            Ok(form(WEDGE_NU_DUAL, prefactor(params, q - k1), elementary_spec(nu, &asc)?))
        }
        TensorFactor::Simple(mu) => {
            check_simple(SIMPLE, mu, params)?;
            let mu1 = mu.first() as i64;
            require(k1 + mu1 < q, SIMPLE, || format!("1 <= k and k+mu_1 <= q-1 (k={k1}, mu_1={mu1}, q={q})"))?;
            Ok(form(SIMPLE, prefactor(params, q - k1), schur_spec(mu, &desc)?))
        }
        TensorFactor::SimpleDual(mu) => {
            check_simple(SIMPLE_DUAL, mu, params)?;
            let mu1 = mu.first() as i64;
            require(mu1 < k1, SIMPLE_DUAL, || format!("mu_1 < k <= q-1 (k={k1}, mu_1={mu1}, q={q})"))?;
            Ok(form(SIMPLE_DUAL, prefactor(params, q - k1), schur_spec(mu, &asc)?))
        }
        TensorFactor::PowerDet(l) => Ok(form(POWER_DET, 0, power_det_numerator(params, *l, k1))),
    }
}

/// Two binomial sums in `E = t^-1 + ... + t^{-q^{n-2}}` and `t^{-q^{n-1}}`:
/// the first (`c <= q-1-k`) carries the prefactor with `q - k`, the second
/// (`c >= q-k`) the one with `2q - 1 - k`.
///
/// This agrees with the Pieri oracle whenever `l <= q-1`. For `l >= q` it
/// can disagree; e.g. GL_2(3), `l = 3`, `k = 2` gives `t^-1` a nonzero
/// coefficient.
fn power_det_numerator(params: &GroupParams, l: usize, k: i64) -> LaurentPoly {
    let n = params.n();
    let q = params.q();
    let desc = SpecPoints::descending(params);
    let e = elementary_single(1, &desc.prefix(n - 1));
    let last = -params.q_pow(n - 1);
    let mut low = LaurentPoly::zero();
    let mut high = LaurentPoly::zero();
    let mut binom = BigInt::from(1);
    for c in 0..=l {
        let term = e.pow((l - c) as u32).shifted(c as i64 * last).scaled(&binom);
        if c as i64 <= q - 1 - k {
            low = &low + &term;
        } else {
            high = &high + &term;
        }
        binom = binom * (l - c) / (c + 1);
    }
    &low.shifted(prefactor(params, q - k)) + &high.shifted(prefactor(params, 2 * q - 1 - k))
}

/// Graded multiplicity of `St` in `S(V) x F x Det^k`, expanded to `t^trunc`.
pub fn steinberg_multiplicity_series(
    params: &GroupParams,
    factor: &TensorFactor,
    k: i64,
    trunc: i64,
) -> Result<LaurentSeries> {
    steinberg_closed_form(params, factor, k)?.expand(trunc)
}

/// Rewrites `wedge^nu(V)* x Det^k` as `wedge^{nu*} x Det^{k'}` with
/// `nu* = (n - nu_l, ..., n - nu_1)` and `k' = k - l`; parts `nu_j = n`
/// contribute `wedge^0` and are dropped. Returns `(nu*, k')` with `k'` in
/// `[0, q-2]`.
pub fn dual_wedge_conversion(params: &GroupParams, nu: &Partition, k: i64) -> Result<(Partition, i64)> {
    let n = params.n();
    if nu.first() > n {
        return Err(Error::InvalidArgument(format!("nu_1 <= n fails for nu={nu}, n={n}")));
    }
    let parts = nu.parts().iter().map(|&v| n - v).filter(|&w| w > 0).collect();
    Ok((Partition::from_unsorted(parts), params.reduce_k(k - nu.length() as i64)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn params(n: usize, q: u64) -> GroupParams {
        GroupParams::from_q(n, q).unwrap()
    }

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn coeffs(s: &LaurentSeries, range: std::ops::RangeInclusive<i64>) -> Vec<i64> {
        range.map(|a| i64::try_from(s.coefficient_at(a).unwrap()).unwrap()).collect()
    }

    #[test]
    fn wedge_examples() {
        let s = steinberg_multiplicity_series(&params(2, 3), &TensorFactor::Wedge(1), 1, 7).unwrap();
        assert_eq!(coeffs(&s, 3..=7), vec![1, 0, 2, 0, 2]);
        let expected = crate::series::expand_rational(&LaurentPoly::from_terms([(3, 1), (5, 1)]), &[2, 8], 7).unwrap();
        assert_eq!(s, expected);

        for q in [2, 3, 4, 5, 7] {
            let s = steinberg_multiplicity_series(&params(1, q), &TensorFactor::Wedge(0), 0, 30).unwrap();
            for a in 0..=30 {
                assert_eq!(*s.coefficient_at(a).unwrap(), BigInt::from(i64::from(a % (q as i64 - 1) == 0)));
            }
        }

        let s = steinberg_multiplicity_series(&params(2, 2), &TensorFactor::Wedge(0), 0, 5).unwrap();
        assert_eq!(coeffs(&s, 0..=5), vec![0, 1, 1, 1, 2, 2]);
    }

    #[test]
    fn k_is_reduced() {
        let g = params(2, 5);
        for f in [TensorFactor::Wedge(1), TensorFactor::WedgeNu(p(&[1])), TensorFactor::PowerDet(2)] {
            let a = steinberg_multiplicity_series(&g, &f, 2, 30).unwrap();
            let b = steinberg_multiplicity_series(&g, &f, 6, 30).unwrap();
            let c = steinberg_multiplicity_series(&g, &f, -2, 30).unwrap();
            assert_eq!(a, b);
            assert_eq!(a, c);
        }
        let a = steinberg_multiplicity_series(&g, &TensorFactor::Wedge(2), 0, 40).unwrap();
        let b = steinberg_multiplicity_series(&g, &TensorFactor::Wedge(2), 4, 40).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn preconditions_name_the_hypothesis() {
        let g = params(2, 4);
        let err = steinberg_multiplicity_series(&g, &TensorFactor::WedgeNu(p(&[1, 1])), 2, 10).unwrap_err();
        match err {
            Error::Precondition { theorem, hypothesis } => {
                assert_eq!(theorem, WEDGE_NU);
                assert!(hypothesis.contains("k+l <= q-1"));
            }
            e => panic!("unexpected {e:?}"),
        }
        assert!(steinberg_multiplicity_series(&g, &TensorFactor::Wedge(3), 1, 10).is_err());
        assert!(steinberg_multiplicity_series(&g, &TensorFactor::WedgeNuDual(p(&[1, 1])), 2, 10).is_err());
        assert!(steinberg_multiplicity_series(&g, &TensorFactor::WedgeNuDual(Partition::empty()), 2, 10).is_err());
        // |mu| <= p - 1 with p = 2
        assert!(steinberg_multiplicity_series(&g, &TensorFactor::Simple(p(&[1, 1])), 1, 10).is_err());
        assert!(steinberg_multiplicity_series(&params(2, 5), &TensorFactor::Simple(p(&[3])), 2, 10).is_err());
        assert!(steinberg_multiplicity_series(&params(2, 5), &TensorFactor::SimpleDual(p(&[2])), 2, 10).is_err());
    }

    #[test]
    fn none_is_wedge_zero() {
        for (n, q) in [(1, 3), (2, 2), (2, 5), (3, 3)] {
            let g = params(n, q);
            for k in 0..q as i64 {
                assert_eq!(
                    steinberg_multiplicity_series(&g, &TensorFactor::None, k, 40).unwrap(),
                    steinberg_multiplicity_series(&g, &TensorFactor::Wedge(0), k, 40).unwrap()
                );
            }
        }
    }

    #[test]
    fn power_det_matches_wedge_nu_inside_the_window() {
        for (n, q) in [(1, 4), (2, 4), (2, 5), (3, 5)] {
            let g = params(n, q);
            for l in 1..=3usize {
                for k in 1..q as i64 {
                    if k + l as i64 > q as i64 - 1 {
                        continue;
                    }
                    assert_eq!(
                        steinberg_multiplicity_series(&g, &TensorFactor::PowerDet(l), k, 60).unwrap(),
                        steinberg_multiplicity_series(&g, &TensorFactor::WedgeNu(Partition::column(l)), k, 60).unwrap(),
                        "n={n} q={q} l={l} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn wedge_nu_with_one_part_is_wedge() {
        for (n, q) in [(2, 3), (3, 4)] {
            let g = params(n, q);
            for m in 1..=n {
                for k in 1..q as i64 - 1 {
                    assert_eq!(
                        steinberg_multiplicity_series(&g, &TensorFactor::WedgeNu(Partition::row(m)), k, 50).unwrap(),
                        steinberg_multiplicity_series(&g, &TensorFactor::Wedge(m), k, 50).unwrap()
                    );
                }
            }
            // the empty nu with k = q-1 is the Steinberg series itself
            assert_eq!(
                steinberg_multiplicity_series(&g, &TensorFactor::WedgeNu(Partition::empty()), 0, 50).unwrap(),
                steinberg_multiplicity_series(&g, &TensorFactor::Wedge(0), 0, 50).unwrap()
            );
        }
    }

    #[test]
    fn wedge_dual_is_shifted_wedge() {
        for (n, q) in [(1, 2), (2, 2), (2, 3), (3, 4), (3, 5)] {
            let g = params(n, q);
            for m in 0..=n {
                for k in 0..q as i64 {
                    assert_eq!(
                        steinberg_multiplicity_series(&g, &TensorFactor::WedgeDual(m), k, 60).unwrap(),
                        steinberg_multiplicity_series(&g, &TensorFactor::Wedge(n - m), k - 1, 60).unwrap(),
                        "n={n} q={q} m={m} k={k}"
                    );
                }
            }
        }
    }

    #[test]
    fn conversion_examples() {
        let g = params(3, 5);
        assert_eq!(dual_wedge_conversion(&g, &p(&[2, 1]), 3).unwrap(), (p(&[2, 1]), 1));
        assert_eq!(dual_wedge_conversion(&g, &p(&[3]), 3).unwrap(), (Partition::empty(), 2));
        assert_eq!(dual_wedge_conversion(&g, &p(&[1, 1]), 0).unwrap(), (p(&[2, 2]), 2));
    }
}
