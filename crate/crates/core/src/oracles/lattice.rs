use std::collections::HashMap;

use super::{dominant_tuples, OracleQuery};
use crate::combinatorics::for_each_subset;
use crate::error::{Error, Result};

const ORACLE: &str = "lattice oracle";

/// Column counts `c_i` over all index tuples `i^j_1 < ... < i^j_{nu_j}`,
/// grouped: `c -> number of tuples giving c`.
fn column_profiles(n: usize, nu: &[usize]) -> HashMap<Vec<i64>, u64> {
    let mut profiles = HashMap::from([(vec![0i64; n], 1u64)]);
    for &part in nu {
        let mut next = HashMap::new();
        for (c, mult) in &profiles {
            for_each_subset(n, part, |rows| {
                let mut c = c.clone();
                for &i in rows {
                    c[i] += 1;
                }
                *next.entry(c).or_insert(0) += mult;
            });
        }
        profiles = next;
    }
    profiles
}

/// Number of `x in Z_+^len` with `sum_i weights[i] x_i = target`.
fn count_representations(target: i64, weights: &[i64]) -> u64 {
    if target < 0 {
        return 0;
    }
    let mut ways = vec![0u64; target as usize + 1];
    ways[0] = 1;
    for &w in weights {
        for v in w as usize..ways.len() {
            ways[v] += ways[v - w as usize];
        }
    }
    ways[target as usize]
}

/// Direct enumeration of the inequality system describing the Pieri
/// multiplicity, for `k >= 1` with `k + l(nu) <= q-1`; for `k = 0` only
/// `nu = ()` or a single part `(m)` is accepted and the substituted
/// coordinates `bar lambda` are counted instead.
pub fn o1_lattice(query: &OracleQuery) -> Result<u64> {
    let g = query.params();
    let q = g.q();
    let k = query.k();
    let l = query.nu().length() as i64;
    if k == 0 {
        return match query.nu().parts() {
            [] => Ok(det0_count(query, None)),
            [m] => Ok(det0_count(query, Some(*m))),
            _ => Err(Error::precondition(ORACLE, format!("k >= 1 when nu has more than one part (nu={})", query.nu()))),
        };
    }
    if k + l > q - 1 {
        return Err(Error::precondition(ORACLE, format!("k + l(nu) <= q-1 (k={k}, l={l}, q={q})")));
    }
    let Some(size) = query.forced_size() else {
        return Ok(0);
    };
    let n = g.n();
    let rho = g.rho();
    let profiles = column_profiles(n, query.nu().parts());
    let mut total = 0;
    for lambda in dominant_tuples(n, size, 0) {
        for (c, mult) in &profiles {
            let nonneg = (0..n).all(|i| (q - 1) * rho[i] + (q - 1) * lambda[i] - k - c[i] >= 0);
            let strip = (1..n).all(|i| (q - 1) * rho[i] + q * lambda[i] - c[i] <= lambda[i - 1] + k);
            if nonneg && strip {
                total += mult;
            }
        }
    }
    Ok(total)
}

/// The `k = 0` (equivalently `k = q-1`) count: for each index set
/// `i_1 < ... < i_m`, the number of `bar lambda in Z_+^n` with
/// `sum (q^i - 1) bar lambda_i = a + n - (q^n-1)/(q-1) + sum q^{i_j - 1} - [i_m = n](q^n - 1)`.
fn det0_count(query: &OracleQuery, m: Option<usize>) -> u64 {
    let g = query.params();
    let n = g.n();
    let weights = g.steinberg_denominators();
    let base = query.a() as i64 + n as i64 - g.q_sum();
    let m = m.unwrap_or(0);
    let mut total = 0;
    for_each_subset(n, m, |rows| {
        let mut rhs = base + rows.iter().map(|&i| g.q_pow(i)).sum::<i64>();
        if rows.last() == Some(&(n - 1)) {
            rhs -= g.q_pow(n) - 1;
        }
        total += count_representations(rhs, &weights);
    });
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinatorics::{GroupParams, Partition};

    fn query(n: usize, q: u64, a: u64, nu: &[usize], k: i64) -> OracleQuery {
        let g = GroupParams::from_q(n, q).unwrap();
        OracleQuery::new(&g, a, Partition::new(nu.to_vec()).unwrap(), k).unwrap()
    }

    #[test]
    fn examples() {
        assert_eq!(o1_lattice(&query(2, 3, 3, &[1], 1)).unwrap(), 1);
        assert_eq!(o1_lattice(&query(2, 3, 4, &[1], 1)).unwrap(), 0);
        // a + nk + |nu| < (q-1)|rho|
        assert_eq!(o1_lattice(&query(3, 5, 0, &[1], 1)).unwrap(), 0);
    }

    #[test]
    fn preconditions() {
        assert!(o1_lattice(&query(2, 4, 3, &[1, 1], 2)).is_err());
        assert!(o1_lattice(&query(2, 4, 3, &[1, 1], 0)).is_err());
        assert!(o1_lattice(&query(2, 4, 3, &[2], 0)).is_ok());
    }

    #[test]
    fn profiles_count_tuples() {
        let p = column_profiles(3, &[2, 1]);
        assert_eq!(p.values().sum::<u64>(), 9);
        assert_eq!(p[&vec![2, 1, 0]], 1);
        assert_eq!(p[&vec![1, 1, 1]], 3);
    }

    #[test]
    fn representations() {
        assert_eq!(count_representations(6, &[2, 3]), 2);
        assert_eq!(count_representations(0, &[]), 1);
        assert_eq!(count_representations(-1, &[1]), 0);
    }

    #[test]
    fn gl22_steinberg() {
        let c: Vec<u64> = (0..=5).map(|a| o1_lattice(&query(2, 2, a, &[], 0)).unwrap()).collect();
        assert_eq!(c, vec![0, 1, 1, 1, 2, 2]);
    }
}
