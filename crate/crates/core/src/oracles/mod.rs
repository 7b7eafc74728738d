//! Brute-force counts of `dim Hom(St, S^a(V) x wedge^nu(V) x Det^k)` and the
//! recursions built on them. None of these touch the closed forms.

mod lattice;
mod pieri;
mod recursion;

pub use lattice::o1_lattice;
pub use pieri::{o2_pieri, o2_pieri_scan, o2_series};
pub use recursion::{o_pim_recursion, o_simple_recursion};

use crate::combinatorics::{GroupParams, Partition};
use crate::error::{Error, Result};

/// One coefficient request: degree `a` of `S(V) x wedge^nu(V) x Det^k`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct OracleQuery {
    params: GroupParams,
    a: u64,
    nu: Partition,
    k: i64,
}

impl OracleQuery {
    /// `k` is stored reduced to `[0, q-2]`.
    pub fn new(params: &GroupParams, a: u64, nu: Partition, k: i64) -> Result<Self> {
        if nu.first() > params.n() {
            return Err(Error::InvalidArgument(format!("wedge parts must be at most n = {} (nu={nu})", params.n())));
        }
        Ok(OracleQuery { params: *params, a, nu, k: params.reduce_k(k) })
    }

    pub fn params(&self) -> &GroupParams {
        &self.params
    }

    pub fn a(&self) -> u64 {
        self.a
    }

    pub fn nu(&self) -> &Partition {
        &self.nu
    }

    pub fn k(&self) -> i64 {
        self.k
    }

    /// `|lambda| = (a + nk + |nu| - (q-1)|rho|) / (q-1)`, or `None` when the
    /// quotient is not an integer.
    pub(crate) fn forced_size(&self) -> Option<i64> {
        let g = &self.params;
        let num = self.a as i64 + g.n() as i64 * self.k + self.nu.size() as i64 - (g.q() - 1) * g.rho_size();
        (num % (g.q() - 1) == 0).then(|| num / (g.q() - 1))
    }
}

/// Weakly decreasing `n`-tuples with entries `>= floor` summing to `size`.
pub(crate) fn dominant_tuples(n: usize, size: i64, floor: i64) -> Vec<Vec<i64>> {
    fn go(slots: usize, rest: i64, cap: i64, floor: i64, cur: &mut Vec<i64>, out: &mut Vec<Vec<i64>>) {
        if slots == 0 {
            if rest == 0 {
                out.push(cur.clone());
            }
            return;
        }
        // the remaining slots - 1 entries are at least `floor`
        let hi = cap.min(rest - (slots as i64 - 1) * floor);
        // and at most this entry, so it must take at least its share
        let lo = floor.max(div_ceil(rest, slots as i64));
        for v in (lo..=hi).rev() {
            cur.push(v);
            go(slots - 1, rest - v, v, floor, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if size < n as i64 * floor {
        return out;
    }
    go(n, size, i64::MAX, floor, &mut Vec::new(), &mut out);
    out
}

fn div_ceil(a: i64, b: i64) -> i64 {
    -((-a).div_euclid(b))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tuples() {
        assert_eq!(dominant_tuples(2, 3, 0), vec![vec![3, 0], vec![2, 1]]);
        assert_eq!(dominant_tuples(3, 0, 0), vec![vec![0, 0, 0]]);
        assert!(dominant_tuples(2, -1, 0).is_empty());
        assert_eq!(dominant_tuples(2, -1, -1), vec![vec![0, -1]]);
        for n in 1..=4 {
            for s in 0..=8 {
                let want = Partition::all_bounded(s as usize, n).len();
                assert_eq!(dominant_tuples(n, s, 0).len(), want);
            }
        }
        assert!(dominant_tuples(3, 2, -2).iter().all(|t| t.windows(2).all(|w| w[0] >= w[1]) && t[2] >= -2));
    }

    #[test]
    fn query_validation() {
        let g = GroupParams::from_q(2, 3).unwrap();
        assert!(OracleQuery::new(&g, 0, Partition::row(3), 0).is_err());
        let q = OracleQuery::new(&g, 4, Partition::row(1), 5).unwrap();
        assert_eq!(q.k(), 1);
        // (4 + 2 + 1 - 2) / 2 is not an integer
        assert_eq!(q.forced_size(), None);
    }
}
