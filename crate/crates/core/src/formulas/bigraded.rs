use std::collections::BTreeMap;

use super::steinberg::prefactor;
use crate::combinatorics::GroupParams;
use crate::error::Result;
use crate::series::{bi_collect, expand_rational, BiSeries, LaurentPoly};

pub const BIGRADED: &str = "St in S(V) x wedge(V) x Det^k, bigraded";

/// `prod_i (s + t^{d_i})` as coefficients of `s^0, s^1, ...`.
fn s_product(exponents: impl IntoIterator<Item = i64>) -> Vec<LaurentPoly> {
    let mut out = vec![LaurentPoly::one()];
    for d in exponents {
        let x = LaurentPoly::t_pow(d);
        let mut next = vec![LaurentPoly::zero(); out.len() + 1];
        for (b, c) in out.iter().enumerate() {
            next[b] = &next[b] + &(c * &x);
            next[b + 1] = &next[b + 1] + c;
        }
        out = next;
    }
    out
}

/// Multiplicity of `St` in `S(V) x wedge(V) x Det^k`, graded by `t` for `S`
/// and `s` for the exterior degree.
pub fn steinberg_bigraded(params: &GroupParams, k: i64, trunc: i64) -> Result<BiSeries> {
    let n = params.n();
    let q = params.q();
    let k = params.reduce_k(k);
    let numerator_in_s = if k == 0 {
        // t^-n (s t^{q^n-1} + t^{q^{n-1}}) prod_{i<n-1} (s + t^{q^i})
        let body = s_product((0..n - 1).map(|i| params.q_pow(i)));
        let mut out = vec![LaurentPoly::zero(); n + 1];
        for (b, c) in body.iter().enumerate() {
            out[b] = &out[b] + &c.shifted(params.q_pow(n - 1));
            out[b + 1] = &out[b + 1] + &c.shifted(params.q_pow(n) - 1);
        }
        out.into_iter().map(|c| c.shifted(-(n as i64))).collect()
    } else {
        s_product((0..n).map(|i| params.q_pow(i)))
            .into_iter()
            .map(|c| c.shifted(prefactor(params, q - 1 - k)))
            .collect::<Vec<_>>()
    };
    let denoms = params.steinberg_denominators();
    let mut slices = BTreeMap::new();
    for (b, c) in numerator_in_s.iter().enumerate() {
        slices.insert(b, expand_rational(c, &denoms, trunc)?);
    }
    bi_collect(&slices, n, trunc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{steinberg_multiplicity_series, TensorFactor};

    #[test]
    fn slices_are_wedge_series() {
        for (n, q) in [(1, 2), (1, 5), (2, 2), (2, 3), (3, 4)] {
            let g = GroupParams::from_q(n, q).unwrap();
            for k in 0..q as i64 - 1 {
                let bi = steinberg_bigraded(&g, k, 50).unwrap();
                assert_eq!(bi.max_s(), n);
                for m in 0..=n {
                    assert_eq!(
                        bi.slice(m),
                        steinberg_multiplicity_series(&g, &TensorFactor::Wedge(m), k, 50).unwrap(),
                        "n={n} q={q} k={k} m={m}"
                    );
                }
                assert!(bi.coeffs().keys().all(|&(_, b)| b <= n));
            }
        }
    }

    #[test]
    fn product_in_s() {
        let p = s_product([1, 2]);
        assert_eq!(p.len(), 3);
        assert_eq!(p[0], LaurentPoly::t_pow(3));
        assert_eq!(p[1], LaurentPoly::from_terms([(1, 1), (2, 1)]));
        assert_eq!(p[2], LaurentPoly::one());
    }
}
