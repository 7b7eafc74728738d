use super::{DominantWeight, GroupParams};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum WeightTransform {
    /// `lam -> lam^0 = (q-1) rho + w_0 lam`.
    SteinbergShift,
    /// `lam -> -w_0 lam`, the highest weight of the dual module.
    Dual,
    /// Add the multiple of `(q-1) omega_n` that puts the last entry in `[0, q-2]`.
    Normalize,
}

pub fn weight_transform(lam: &DominantWeight, params: &GroupParams, kind: WeightTransform) -> DominantWeight {
    match kind {
        WeightTransform::SteinbergShift => steinberg_shift(lam, params),
        WeightTransform::Dual => dual(lam),
        WeightTransform::Normalize => normalize(lam, params).0,
    }
}

pub fn steinberg_shift(lam: &DominantWeight, params: &GroupParams) -> DominantWeight {
    let q = params.q();
    let entries = params.rho().into_iter().zip(lam.entries().iter().rev()).map(|(r, l)| (q - 1) * r + l).collect();
    DominantWeight::new_unchecked(entries)
}

pub fn dual(lam: &DominantWeight) -> DominantWeight {
    DominantWeight::new_unchecked(lam.entries().iter().rev().map(|e| -e).collect())
}

/// Normalizes modulo `Det^{q-1}` and reports the multiple `c` such that the
/// result is `lam + c (q-1) omega_n`.
pub fn normalize(lam: &DominantWeight, params: &GroupParams) -> (DominantWeight, i64) {
    let step = params.q() - 1;
    let last = lam.last();
    let c = last.rem_euclid(step) - last;
    debug_assert_eq!(c % step, 0);
    (lam.shift_det(c), c / step)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn w(v: &[i64]) -> DominantWeight {
        DominantWeight::new(v.to_vec()).unwrap()
    }

    #[test]
    fn examples() {
        let g23 = GroupParams::new(2, 3, 1).unwrap();
        assert_eq!(weight_transform(&w(&[1, 0]), &g23, WeightTransform::SteinbergShift), w(&[2, 1]));
        assert_eq!(weight_transform(&w(&[3, 1, 0]), &g23, WeightTransform::Dual), w(&[0, -1, -3]));
        assert_eq!(weight_transform(&w(&[0, -1]), &g23, WeightTransform::Normalize), w(&[2, 1]));
        assert_eq!(normalize(&w(&[0, -1]), &g23).1, 1);
    }

    #[test]
    fn normalize_lands_in_range() {
        for q in [2u64, 3, 4, 5, 7] {
            let g = GroupParams::from_q(3, q).unwrap();
            for last in -20..20 {
                let lam = w(&[last + 5, last + 2, last]);
                let (norm, c) = normalize(&lam, &g);
                assert!((0..=g.q() - 2).contains(&norm.last()));
                assert_eq!(norm, lam.shift_det(c * (g.q() - 1)));
            }
        }
    }

    #[test]
    fn steinberg_shift_of_zero_is_steinberg_weight() {
        let g = GroupParams::new(3, 5, 1).unwrap();
        let st = steinberg_shift(&DominantWeight::zero(3), &g);
        assert_eq!(st, w(&[8, 4, 0]));
        assert!(st.q_restricted(&g));
        assert_eq!(dual(&dual(&st)), st);
    }
}
