//! The two Pieri expansions: tensoring an irreducible `GL_n` character with a
//! symmetric power (horizontal strip) or an exterior power (one box in each of
//! `m` distinct rows).

use super::partition::DominantWeight;
use super::symmetric::for_each_subset;

/// Highest weights of `L(lam) (x) S^a(V)` in characteristic zero, each of
/// multiplicity one: `lam + (a_1, ..., a_n)` with `sum a_i = a` and
/// `lam_i + a_i <= lam_{i-1}` for `i >= 2`.
pub fn pieri_row(lam: &DominantWeight, a: usize) -> Vec<DominantWeight> {
    let base = lam.entries();
    let n = base.len();
    let mut out = Vec::new();
    let mut cur = base.to_vec();
    fn go(i: usize, rest: i64, base: &[i64], cur: &mut Vec<i64>, out: &mut Vec<DominantWeight>) {
        let n = base.len();
        if i == n {
            if rest == 0 {
                out.push(DominantWeight::new_unchecked(cur.clone()));
            }
            return;
        }
        // Row 0 is unbounded; row i may grow up to the old length of row i-1.
        let cap = if i == 0 { rest } else { rest.min(base[i - 1] - base[i]) };
        // The remaining rows can absorb at most this much.
        let room: i64 = (i + 1..n).map(|j| base[j - 1] - base[j]).sum();
        let lo = (rest - room).max(0);
        for add in (lo..=cap).rev() {
            cur[i] = base[i] + add;
            go(i + 1, rest - add, base, cur, out);
        }
        cur[i] = base[i];
    }
    if n > 0 {
        go(0, a as i64, base, &mut cur, &mut out);
    }
    out
}

/// Highest weights of `L(lam) (x) wedge^m(V)`: all dominant
/// `lam + eps_{i_1} + ... + eps_{i_m}` with `i_1 < ... < i_m`.
pub fn pieri_column(lam: &DominantWeight, m: usize) -> Vec<DominantWeight> {
    let base = lam.entries();
    let n = base.len();
    let mut out = Vec::new();
    for_each_subset(n, m, |rows| {
        let mut w = base.to_vec();
        for &i in rows {
            w[i] += 1;
        }
        if w.windows(2).all(|p| p[0] >= p[1]) {
            out.push(DominantWeight::new_unchecked(w));
        }
    });
    out
}
