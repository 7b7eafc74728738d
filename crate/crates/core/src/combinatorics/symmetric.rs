use std::collections::HashMap;

use crate::error::{Error, Result};

use super::partition::{dominance_leq, Partition};

/// Coefficient `a_{nu,mu}` of the monomial function `m_mu` in `e_nu`.
///
/// Computed by expanding `prod_j e_{nu_j}` as a polynomial in `|nu|` variables
/// and reading off the coefficient of `x^mu`. Monomials that already exceed
/// `mu` in some variable are dropped during the expansion.
pub fn e_to_m_coeff(nu: &Partition, mu: &Partition) -> u64 {
    if nu.size() != mu.size() {
        return 0;
    }
    if !dominance_leq(mu, &nu.conjugate()).expect("equal sizes") {
        return 0;
    }
    let vars = nu.size().max(mu.length());
    let target = mu.padded(vars).expect("length fits");

    let mut poly: HashMap<Vec<usize>, u64> = HashMap::from([(vec![0; vars], 1)]);
    for &part in nu.parts() {
        let mut next: HashMap<Vec<usize>, u64> = HashMap::new();
        for (mono, coeff) in &poly {
            for_each_subset(vars, part, |subset| {
                let mut m = mono.clone();
                for &i in subset {
                    m[i] += 1;
                    if m[i] > target[i] {
                        return;
                    }
                }
                *next.entry(m).or_insert(0) += coeff;
            });
        }
        poly = next;
    }
    poly.get(&target).copied().unwrap_or(0)
}

/// Calls `f` on every strictly increasing `k`-subset of `0..n`.
pub(crate) fn for_each_subset(n: usize, k: usize, mut f: impl FnMut(&[usize])) {
    fn go(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if cur.len() == k {
            f(cur);
            return;
        }
        let need = k - cur.len();
        for i in start..=n.saturating_sub(need) {
            if i + need > n {
                break;
            }
            cur.push(i);
            go(i + 1, n, k, cur, f);
            cur.pop();
        }
    }
    if k > n {
        return;
    }
    go(0, n, k, &mut Vec::with_capacity(k), &mut f);
}

/// `|W^mu|`: the number of distinct rearrangements of `entries` padded with
/// zeros to `n` slots, `n! / prod_v (mult of v)!`.
pub fn orbit_count(entries: &[i64], n: usize) -> Result<u64> {
    if entries.len() > n {
        return Err(Error::InvalidArgument(format!("{} entries do not fit into {n} slots", entries.len())));
    }
    let mut counts: HashMap<i64, u64> = HashMap::new();
    for &e in entries {
        *counts.entry(e).or_insert(0) += 1;
    }
    *counts.entry(0).or_insert(0) += (n - entries.len()) as u64;

    // Build the multinomial as a product of binomials to keep intermediates small.
    let mut total: u64 = 1;
    let mut placed: u64 = 0;
    for &c in counts.values() {
        for i in 1..=c {
            placed += 1;
            total = total
                .checked_mul(placed)
                .ok_or_else(|| Error::InvalidArgument(format!("orbit of size n = {n} overflows")))?
                / i;
        }
    }
    Ok(total)
}

/// `orbit_count` for a partition.
pub fn partition_orbit_count(mu: &Partition, n: usize) -> Result<u64> {
    let entries: Vec<i64> = mu.parts().iter().map(|&p| p as i64).collect();
    orbit_count(&entries, n)
}
