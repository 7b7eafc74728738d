use num_bigint::BigUint;

use crate::combinatorics::{
    dominance_leq, e_to_m_coeff, normalize, orbit_count, steinberg_shift, DominantWeight, GroupParams, Partition,
};
use crate::error::{Error, Result};

pub const PIM: &str = "PIM decomposition of St x wedge^nu x Det^k";

/// `P(weight)^{mult}`; `tau` is the partition the weight was built from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PimEntry {
    pub weight: DominantWeight,
    pub tau: Partition,
    pub mult: u64,
}

/// A direct sum of PIMs, sorted lexicographically by weight.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PimDecomposition {
    pub entries: Vec<PimEntry>,
}

impl PimDecomposition {
    pub fn total_dim(&self, params: &GroupParams) -> Result<BigUint> {
        let mut total = BigUint::default();
        for e in &self.entries {
            total += pim_dim(params, &DominantWeight::from_partition(&e.tau, params.n())?)? * e.mult;
        }
        Ok(total)
    }
}

/// `dim P(mu^0) = q^{n(n-1)/2} |W^mu|`.
pub fn pim_dim(params: &GroupParams, mu: &DominantWeight) -> Result<BigUint> {
    if !params.coxeter_ok() {
        return Err(Error::precondition(PIM, format!("p > n (Coxeter number) (p={}, n={})", params.p(), params.n())));
    }
    let e = mu.entries();
    let spread = e[0] - mu.last();
    if spread > params.p() as i64 - 1 {
        return Err(Error::precondition(PIM, format!("mu_1 - mu_n <= p-1 (mu={mu}, p={})", params.p())));
    }
    Ok(params.steinberg_dim() * orbit_count(e, params.n())?)
}

/// `St x wedge^nu x Det^k` (or `St x (wedge^nu)* x Det^k` when `dual`) as a
/// sum of `P(tau^0 + k omega_n)` (resp. `P((q-1) rho - tau + k omega_n)`)
/// with multiplicity `a_{nu tau}` over `tau <= nu'`, `l(tau) <= n`.
pub fn pim_decompose(params: &GroupParams, nu: &Partition, k: i64, dual: bool) -> Result<PimDecomposition> {
    let n = params.n();
    let p = params.p();
    if !params.coxeter_ok() {
        return Err(Error::precondition(PIM, format!("p > n (Coxeter number) (p={p}, n={n})")));
    }
    if nu.first() > n {
        return Err(Error::precondition(PIM, format!("nu_1 <= n (nu={nu}, n={n})")));
    }
    let conj = nu.conjugate();
    if conj.spread(n) as u64 > p - 1 {
        return Err(Error::precondition(PIM, format!("nu'_1 - nu'_n <= p-1 (nu'={conj}, p={p})")));
    }
    let k = params.reduce_k(k);
    let q = params.q();
    let mut entries = Vec::new();
    for tau in Partition::all_bounded(nu.size(), n) {
        if !dominance_leq(&tau, &conj)? {
            continue;
        }
        let mult = e_to_m_coeff(nu, &tau);
        if mult == 0 {
            continue;
        }
        let t = DominantWeight::from_partition(&tau, n)?;
        let raw = if dual {
            let e = params.rho().iter().zip(t.entries()).map(|(r, x)| (q - 1) * r - x + k).collect();
            DominantWeight::new(e)?
        } else {
            steinberg_shift(&t, params).shift_det(k)
        };
        entries.push(PimEntry { weight: normalize(&raw, params).0, tau, mult });
    }
    entries.sort_by(|a, b| a.weight.entries().cmp(b.weight.entries()));
    Ok(PimDecomposition { entries })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn dim_examples() {
        let g = GroupParams::new(2, 3, 1).unwrap();
        assert_eq!(pim_dim(&g, &w(&[1, 0])).unwrap(), BigUint::from(6u32));
        assert_eq!(pim_dim(&g, &w(&[0, 0])).unwrap(), BigUint::from(3u32));
        let g = GroupParams::new(3, 5, 1).unwrap();
        assert_eq!(pim_dim(&g, &w(&[1, 1, 0])).unwrap(), BigUint::from(375u32));
        assert!(pim_dim(&g, &w(&[5, 0, 0])).is_err());
        assert!(pim_dim(&GroupParams::new(3, 2, 1).unwrap(), &w(&[0, 0, 0])).is_err());
    }

    #[test]
    fn decompose_examples() {
        let g = GroupParams::new(2, 5, 1).unwrap();
        let d = pim_decompose(&g, &p(&[1]), 0, false).unwrap();
        assert_eq!(d.entries.len(), 1);
        assert_eq!(d.entries[0].mult, 1);
        assert_eq!(d.entries[0].weight, w(&[4, 1]));

        let d = pim_decompose(&g, &p(&[1, 1]), 0, false).unwrap();
        let got: Vec<_> = d.entries.iter().map(|e| (e.weight.entries().to_vec(), e.mult)).collect();
        // (2)^0 = (4,2), (1,1)^0 = (5,1)
        assert_eq!(got, vec![(vec![4, 2], 1), (vec![5, 1], 2)]);
        assert_eq!(d.total_dim(&g).unwrap(), BigUint::from(20u32));
        assert!(d.entries.iter().all(|e| e.weight.q_restricted(&g)));

        assert!(pim_decompose(&GroupParams::new(3, 2, 1).unwrap(), &p(&[1]), 0, false).is_err());
        assert!(pim_decompose(&g, &p(&[3]), 0, false).is_err());
    }

    #[test]
    fn dual_weights_are_restricted() {
        let g = GroupParams::new(3, 5, 1).unwrap();
        for nu in [p(&[1]), p(&[2, 1]), p(&[1, 1]), p(&[3, 1])] {
            let d = pim_decompose(&g, &nu, 0, true).unwrap();
            for e in &d.entries {
                assert!(e.weight.q_restricted(&g));
            }
        }
    }
}
