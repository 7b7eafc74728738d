use std::collections::HashMap;

use num_bigint::BigInt;

use super::o2_series;
use crate::combinatorics::{dominance_leq, e_to_m_coeff, kostka, GroupParams, Partition};
use crate::error::{Error, Result};
use crate::formulas::{dual_wedge_conversion, GeneralPart};
use crate::series::LaurentSeries;

const SIMPLE_RECURSION: &str = "simple-module recursion";
const PIM_RECURSION: &str = "PIM recursion";

/// Partitions `gamma < mu` (strictly below in dominance) with `l(gamma) <= n`.
fn strictly_below(mu: &Partition, n: usize) -> Vec<Partition> {
    Partition::all_bounded(mu.size(), n)
        .into_iter()
        .filter(|g| g != mu && dominance_leq(g, mu).expect("equal sizes"))
        .collect()
}

/// `H(wedge^nu x Det^k)` or, with `dual`, `H((wedge^nu)* x Det^k)`, from the
/// Pieri oracle.
fn wedge_series(params: &GroupParams, nu: &Partition, k: i64, dual: bool, trunc: i64) -> Result<LaurentSeries> {
    if dual {
        let (conv, k2) = dual_wedge_conversion(params, nu, k)?;
        o2_series(params, &conv, k2, trunc)
    } else {
        o2_series(params, nu, k, trunc)
    }
}

/// `H(L(mu) x Det^k)` (or `H(L(mu)* x Det^k)` with `dual`) by peeling the
/// lower constituents off `wedge^{mu'} = sum_gamma K_{gamma' mu'} L(gamma)`.
pub fn o_simple_recursion(
    params: &GroupParams,
    mu: &Partition,
    k: i64,
    dual: bool,
    trunc: i64,
) -> Result<LaurentSeries> {
    let n = params.n();
    let q = params.q();
    let p = params.p();
    if mu.length() > n {
        return Err(Error::precondition(SIMPLE_RECURSION, format!("l(mu) <= n (mu={mu}, n={n})")));
    }
    if !(1..p as usize).contains(&mu.size()) {
        return Err(Error::precondition(SIMPLE_RECURSION, format!("1 <= |mu| <= p-1 (|mu|={})", mu.size())));
    }
    let k1 = params.reduce_k_positive(k);
    let mu1 = mu.first() as i64;
    let ok = if dual { mu1 < k1 } else { k1 + mu1 < q };
    if !ok {
        return Err(Error::precondition(SIMPLE_RECURSION, format!("k in the window for mu_1={mu1} (k={k1}, q={q})")));
    }

    fn go(
        params: &GroupParams,
        mu: &Partition,
        k: i64,
        dual: bool,
        trunc: i64,
        memo: &mut HashMap<Partition, LaurentSeries>,
    ) -> Result<LaurentSeries> {
        if let Some(s) = memo.get(mu) {
            return Ok(s.clone());
        }
        let conj = mu.conjugate();
        let mut acc = wedge_series(params, &conj, k, dual, trunc)?;
        for gamma in strictly_below(mu, params.n()) {
            let mult = kostka(&gamma.conjugate(), &conj);
            if mult == 0 {
                continue;
            }
            let lower = go(params, &gamma, k, dual, trunc, memo)?;
            acc = &acc - &scale(&lower, mult);
        }
        memo.insert(mu.clone(), acc.clone());
        Ok(acc)
    }
    go(params, mu, k1, dual, trunc, &mut HashMap::new())
}

fn scale(s: &LaurentSeries, c: u64) -> LaurentSeries {
    let c = BigInt::from(c);
    LaurentSeries::new(s.shift(), s.trunc(), s.coeffs().iter().map(|x| x * &c).collect()).expect("same length")
}

/// The graded multiplicity of the simple head of a PIM in `S(V)`, obtained from
/// `Hom(P, S(V))` by peeling the PIM decomposition of `St x wedge^{mu'}` (part
/// two) or `St x (wedge^{mu'})*` (part one):
/// `H(P_mu) = H(St x ...) - sum_{tau < mu} a_{mu' tau} H(P_tau)`.
pub fn o_pim_recursion(
    params: &GroupParams,
    mu: &Partition,
    k: i64,
    part: GeneralPart,
    trunc: i64,
) -> Result<LaurentSeries> {
    let n = params.n();
    let q = params.q();
    let p = params.p();
    if !params.coxeter_ok() {
        return Err(Error::precondition(PIM_RECURSION, format!("p > n (p={p}, n={n})")));
    }
    if mu.length() > n || mu.spread(n) as u64 > p - 1 {
        return Err(Error::precondition(PIM_RECURSION, format!("l(mu) <= n and mu_1 - mu_n <= p-1 (mu={mu})")));
    }
    let k = params.reduce_k(k);
    let mu1 = mu.first() as i64;
    let ok = match part {
        GeneralPart::One => mu1 <= k,
        GeneralPart::Two => mu1 + k < q - 1,
    };
    if !ok {
        return Err(Error::precondition(PIM_RECURSION, format!("k in the window for mu_1={mu1} (k={k}, q={q})")));
    }

    fn go(
        params: &GroupParams,
        mu: &Partition,
        k: i64,
        part: GeneralPart,
        trunc: i64,
        memo: &mut HashMap<Partition, LaurentSeries>,
    ) -> Result<LaurentSeries> {
        if let Some(s) = memo.get(mu) {
            return Ok(s.clone());
        }
        let conj = mu.conjugate();
        // Hom(St x M x Det^k, S) = Hom(St, S x M* x Det^{-k})
        let dual = matches!(part, GeneralPart::Two);
        let mut acc = wedge_series(params, &conj, -k, dual, trunc)?;
        for tau in strictly_below(mu, params.n()) {
            let mult = e_to_m_coeff(&conj, &tau);
            if mult == 0 {
                continue;
            }
            let lower = go(params, &tau, k, part, trunc, memo)?;
            acc = &acc - &scale(&lower, mult);
        }
        memo.insert(mu.clone(), acc.clone());
        Ok(acc)
    }
    go(params, mu, k, part, trunc, &mut HashMap::new())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::formulas::{steinberg_multiplicity_series, TensorFactor};

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn base_cases() {
        let g = GroupParams::new(2, 5, 1).unwrap();
        assert_eq!(o_simple_recursion(&g, &p(&[1]), 1, false, 30).unwrap(), o2_series(&g, &p(&[1]), 1, 30).unwrap());
        assert_eq!(o_simple_recursion(&g, &p(&[1, 1]), 1, false, 30).unwrap(), o2_series(&g, &p(&[2]), 1, 30).unwrap());
    }

    #[test]
    fn two_row_case_subtracts_the_column() {
        let g = GroupParams::new(2, 5, 1).unwrap();
        let expected = &o2_series(&g, &p(&[1, 1]), 1, 30).unwrap() - &o2_series(&g, &p(&[2]), 1, 30).unwrap();
        assert_eq!(o_simple_recursion(&g, &p(&[2]), 1, false, 30).unwrap(), expected);
        assert_eq!(expected, steinberg_multiplicity_series(&g, &TensorFactor::Simple(p(&[2])), 1, 30).unwrap());
    }

    #[test]
    fn preconditions() {
        let g = GroupParams::new(2, 5, 1).unwrap();
        assert!(o_simple_recursion(&g, &p(&[3]), 2, false, 10).is_err());
        assert!(o_simple_recursion(&g, &p(&[2]), 2, true, 10).is_err());
        assert!(o_simple_recursion(&g, &Partition::empty(), 2, false, 10).is_err());
        assert!(o_pim_recursion(&g, &p(&[3]), 2, GeneralPart::One, 10).is_err());
        assert!(
            o_pim_recursion(&GroupParams::new(2, 2, 1).unwrap(), &Partition::empty(), 0, GeneralPart::One, 10).is_err()
        );
    }
}
