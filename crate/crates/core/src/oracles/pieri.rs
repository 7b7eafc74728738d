use std::collections::HashMap;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{dominant_tuples, OracleQuery};
use crate::combinatorics::{pieri_column, pieri_row, DominantWeight, GroupParams, Partition};
use crate::error::Result;
use crate::series::LaurentSeries;

/// Applies one tensor step to a multiset of dominant weights, keeping only
/// weights that can still reach `target` (every step adds boxes).
fn step(
    weights: HashMap<DominantWeight, u64>,
    target: &[i64],
    expand: impl Fn(&DominantWeight) -> Vec<DominantWeight>,
) -> HashMap<DominantWeight, u64> {
    let mut out = HashMap::new();
    for (w, mult) in weights {
        for next in expand(&w) {
            if next.entries().iter().zip(target).all(|(x, t)| x <= t) {
                *out.entry(next).or_insert(0) += mult;
            }
        }
    }
    out
}

/// `[L(a w_1) x wedge^nu x L(w_n)^k x L(lambda) : L((q-1) rho + q lambda)]`.
fn count_for_lambda(query: &OracleQuery, lambda: &[i64]) -> u64 {
    let g = query.params();
    let q = g.q();
    let target: Vec<i64> = g.rho().iter().zip(lambda).map(|(r, l)| (q - 1) * r + q * l).collect();
    let start = DominantWeight::new(lambda.iter().map(|l| l + query.k()).collect()).expect("lambda is dominant");
    let mut weights = HashMap::from([(start, 1u64)]);
    weights = step(weights, &target, |w| pieri_row(w, query.a() as usize));
    for &part in query.nu().parts() {
        weights = step(weights, &target, |w| pieri_column(w, part));
    }
    weights.into_iter().filter(|(w, _)| w.entries() == target.as_slice()).map(|(_, m)| m).sum()
}

/// Universal oracle: sums the characteristic-zero tensor multiplicity over
/// dominant `lambda` of the forced size with `lambda_n >= 0`.
///
/// The bound `lambda_n >= 0`: the target weight is reached from
/// `lambda + k w_n` by adding `a_i >= 0` row boxes and `c_i >= 0` column boxes
/// in coordinate `i`, so `(q-1) lambda_i = a_i + c_i + k - (q-1) rho_i`.
/// At `i = n`, `rho_n = 0` and `(q-1) lambda_n = a_n + c_n + k >= 0`.
/// `o2_pieri_scan` with a negative floor checks this numerically.
pub fn o2_pieri(query: &OracleQuery) -> u64 {
    o2_pieri_scan(query, 0)
}

/// `o2_pieri` with `lambda_n >= floor`.
pub fn o2_pieri_scan(query: &OracleQuery, floor: i64) -> u64 {
    let Some(size) = query.forced_size() else {
        return 0;
    };
    dominant_tuples(query.params().n(), size, floor).iter().map(|lambda| count_for_lambda(query, lambda)).sum()
}

/// `sum_{a=0}^{trunc} o2_pieri(a) t^a`, evaluated in parallel over `a`.
pub fn o2_series(params: &GroupParams, nu: &Partition, k: i64, trunc: i64) -> Result<LaurentSeries> {
    let queries =
        (0..=trunc.max(-1)).map(|a| OracleQuery::new(params, a as u64, nu.clone(), k)).collect::<Result<Vec<_>>>()?;
    let coeffs: Vec<BigInt> = queries.par_iter().map(|q| BigInt::from(o2_pieri(q))).collect();
    LaurentSeries::new(0, trunc, coeffs)
}
