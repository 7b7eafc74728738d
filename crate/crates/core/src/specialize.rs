//! Symmetric polynomials evaluated at `x_i = t^{d_i}`.
//!
//! The two families that matter are `descending = (t^-1, t^-q, ..., t^-q^{n-1})`
//! and `ascending = (t, t^q, ..., t^{q^{n-1}})`.

use std::collections::HashMap;

use crate::combinatorics::{GroupParams, Partition};
use crate::error::{Error, Result};
use crate::series::LaurentPoly;

/// Exponents `(d_1, ..., d_n)` of a specialization `x_i -> t^{d_i}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpecPoints {
    exponents: Vec<i64>,
}

impl SpecPoints {
    pub fn new(exponents: Vec<i64>) -> Self {
        SpecPoints { exponents }
    }

    /// `(-1, -q, ..., -q^{n-1})`.
    pub fn descending(params: &GroupParams) -> Self {
        SpecPoints::new((0..params.n()).map(|i| -params.q_pow(i)).collect())
    }

    /// `(1, q, ..., q^{n-1})`.
    pub fn ascending(params: &GroupParams) -> Self {
        SpecPoints::new((0..params.n()).map(|i| params.q_pow(i)).collect())
    }

    pub fn exponents(&self) -> &[i64] {
        &self.exponents
    }

    pub fn n(&self) -> usize {
        self.exponents.len()
    }

    /// The first `k` points.
    pub fn prefix(&self, k: usize) -> SpecPoints {
        SpecPoints::new(self.exponents[..k.min(self.n())].to_vec())
    }
}

/// `e_m` at the points; zero when `m` exceeds the number of points.
pub fn elementary_single(m: usize, pts: &SpecPoints) -> LaurentPoly {
    // table[j] = e_j of the points seen so far
    let mut table = vec![LaurentPoly::zero(); m + 1];
    table[0] = LaurentPoly::one();
    for &d in pts.exponents() {
        let x = LaurentPoly::t_pow(d);
        for j in (1..=m).rev() {
            let term = &table[j - 1] * &x;
            table[j] = &table[j] + &term;
        }
    }
    table.swap_remove(m)
}

/// `e_nu = prod_j e_{nu_j}` at the points.
pub fn elementary_spec(nu: &Partition, pts: &SpecPoints) -> Result<LaurentPoly> {
    if nu.first() > pts.n() {
        return Err(Error::InvalidArgument(format!("e_{nu} needs nu_1 <= n = {}", pts.n())));
    }
    Ok(nu.parts().iter().fold(LaurentPoly::one(), |acc, &m| &acc * &elementary_single(m, pts)))
}

/// `m_mu` at the points: one term per distinct rearrangement of `mu`.
pub fn monomial_spec(mu: &Partition, pts: &SpecPoints) -> Result<LaurentPoly> {
    let n = pts.n();
    let mut entries = mu.padded(n).map_err(|_| Error::InvalidArgument(format!("m_{mu} needs l(mu) <= n = {n}")))?;
    entries.sort_unstable();
    let mut terms: Vec<(i64, i64)> = Vec::new();
    loop {
        let e: i64 = entries.iter().zip(pts.exponents()).map(|(&m, &d)| m as i64 * d).sum();
        terms.push((e, 1));
        if !next_permutation(&mut entries) {
            break;
        }
    }
    Ok(LaurentPoly::from_terms(terms))
}

fn next_permutation(v: &mut [usize]) -> bool {
    let Some(i) = (1..v.len()).rev().find(|&i| v[i - 1] < v[i]) else {
        return false;
    };
    let j = (i..v.len()).rev().find(|&j| v[j] > v[i - 1]).expect("pivot exists");
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// `s_mu` at the points via the dual Jacobi-Trudi determinant
/// `det(e_{mu'_i - i + j})` of size `mu_1`.
pub fn schur_spec(mu: &Partition, pts: &SpecPoints) -> Result<LaurentPoly> {
    let n = pts.n();
    if mu.length() > n {
        return Err(Error::InvalidArgument(format!("s_{mu} needs l(mu) <= n = {n}")));
    }
    let conj = mu.conjugate();
    let size = conj.length();
    if size == 0 {
        return Ok(LaurentPoly::one());
    }
    let e: Vec<LaurentPoly> = (0..=n).map(|k| elementary_single(k, pts)).collect();
    let entry = |i: usize, j: usize| -> Option<&LaurentPoly> {
        let k = conj.part(i) as i64 - i as i64 + j as i64;
        if k < 0 || k > n as i64 {
            None
        } else {
            Some(&e[k as usize])
        }
    };
    Ok(determinant(size, &entry))
}

/// Laplace expansion along rows, memoized over the set of used columns.
fn determinant<'a>(size: usize, entry: &dyn Fn(usize, usize) -> Option<&'a LaurentPoly>) -> LaurentPoly {
    fn go<'a>(
        row: usize,
        used: u32,
        size: usize,
        entry: &dyn Fn(usize, usize) -> Option<&'a LaurentPoly>,
        memo: &mut HashMap<u32, LaurentPoly>,
    ) -> LaurentPoly {
        if row == size {
            return LaurentPoly::one();
        }
        if let Some(v) = memo.get(&used) {
            return v.clone();
        }
        let mut acc = LaurentPoly::zero();
        let mut free_before = 0;
        for col in 0..size {
            if used & (1 << col) != 0 {
                continue;
            }
            if let Some(x) = entry(row, col) {
                let minor = go(row + 1, used | (1 << col), size, entry, memo);
                let term = x * &minor;
                acc = if free_before % 2 == 0 { &acc + &term } else { &acc - &term };
            }
            free_before += 1;
        }
        memo.insert(used, acc.clone());
        acc
    }
    assert!(size < 32, "determinant of size {size} is out of reach");
    go(0, 0, size, entry, &mut HashMap::new())
}
