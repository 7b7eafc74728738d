use num_bigint::BigInt;

use super::{LaurentPoly, LaurentSeries};
use crate::error::{Error, Result};

fn check_denominators(denoms: &[i64]) -> Result<()> {
    match denoms.iter().find(|&&d| d <= 0) {
        Some(d) => Err(Error::InvalidArgument(format!("denominator factor 1 - t^{d} needs a positive exponent"))),
        None => Ok(()),
    }
}

/// `prod_d (1 - t^d)` as a polynomial.
pub fn denominator_poly(denoms: &[i64]) -> Result<LaurentPoly> {
    check_denominators(denoms)?;
    Ok(denoms.iter().fold(LaurentPoly::one(), |acc, &d| &acc * &LaurentPoly::one_minus_t_pow(d)))
}

/// Expands `numerator / prod_d (1 - t^d)` as a power series up to `t^trunc`.
pub fn expand_rational(numerator: &LaurentPoly, denoms: &[i64], trunc: i64) -> Result<LaurentSeries> {
    check_denominators(denoms)?;
    let shift = numerator.low_degree().unwrap_or(0).min(0);
    let len = (trunc - shift + 1).max(0) as usize;
    let mut c: Vec<BigInt> = (0..len).map(|i| numerator.coeff(shift + i as i64)).collect();
    // Multiplying by 1/(1 - t^d) is the prefix recurrence c_i += c_{i-d}.
    for &d in denoms {
        let d = d as usize;
        for i in d..len {
            let (head, tail) = c.split_at_mut(i);
            tail[0] += &head[i - d];
        }
    }
    LaurentSeries::new(shift, trunc, c)
}

/// Divides `numer` by `prod_d (1 - t^d)` by polynomial long division.
///
/// Returns the quotient and whether the remainder vanished.
pub fn exact_poly_quotient(numer: &LaurentPoly, denoms: &[i64]) -> Result<(LaurentPoly, bool)> {
    let divisor = denominator_poly(denoms)?;
    let (quotient, remainder) = numer.div_rem(&divisor).expect("prod (1 - t^d) has leading coefficient +-1");
    Ok((quotient, remainder.is_zero()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn poly(terms: &[(i64, i64)]) -> LaurentPoly {
        LaurentPoly::from_terms(terms.iter().copied())
    }

    fn coeffs(s: &LaurentSeries) -> Vec<i64> {
        s.coeffs().iter().map(|c| i64::try_from(c).unwrap()).collect()
    }

    // Number of ways to write `a` as a nonnegative combination of `parts`
    // (with repeated parts counted as distinct colours), by plain enumeration.
    fn count_combinations(a: i64, parts: &[i64]) -> i64 {
        match parts.split_first() {
            None => i64::from(a == 0),
            Some((&d, rest)) => (0..=a / d).map(|k| count_combinations(a - k * d, rest)).sum(),
        }
    }

    #[test]
    fn expand_examples() {
        let s = expand_rational(&LaurentPoly::t_pow(1), &[1, 3], 5).unwrap();
        let oracle: Vec<i64> = (0..=5).map(|a| if a == 0 { 0 } else { count_combinations(a - 1, &[1, 3]) }).collect();
        assert_eq!(oracle, vec![0, 1, 1, 1, 2, 2]);
        assert_eq!(coeffs(&s), oracle);
        assert_eq!(*s.coefficient_at(4).unwrap(), BigInt::from(2));

        let one = expand_rational(&LaurentPoly::one(), &[], 3).unwrap();
        assert_eq!(coeffs(&one), vec![1, 0, 0, 0]);

        let cancel = expand_rational(&LaurentPoly::one_minus_t_pow(2), &[2], 10).unwrap();
        assert_eq!(cancel, LaurentSeries::from_poly(&LaurentPoly::one(), 10));

        assert!(expand_rational(&LaurentPoly::one(), &[0], 3).is_err());
        assert!(expand_rational(&LaurentPoly::one(), &[2, -1], 3).is_err());
    }

    #[test]
    fn expand_with_laurent_numerator() {
        let s = expand_rational(&poly(&[(-2, 1)]), &[1], 2).unwrap();
        assert_eq!(s.shift(), -2);
        assert_eq!(coeffs(&s), vec![1, 1, 1, 1, 1]);
    }

    #[test]
    fn quotient_examples() {
        let (q, exact) = exact_poly_quotient(&LaurentPoly::one_minus_t_pow(4), &[2]).unwrap();
        assert!(exact);
        assert_eq!(q, poly(&[(0, 1), (2, 1)]));

        let (_, exact) = exact_poly_quotient(&LaurentPoly::one_minus_t_pow(3), &[2]).unwrap();
        assert!(!exact);

        let body = poly(&[(0, 1), (1, 1), (2, 1)]);
        let numer = &(&LaurentPoly::one_minus_t_pow(1) * &LaurentPoly::one_minus_t_pow(2)) * &body;
        let (q, exact) = exact_poly_quotient(&numer, &[1, 2]).unwrap();
        assert!(exact);
        assert_eq!(q, body);
    }

    fn arb_poly() -> impl Strategy<Value = LaurentPoly> {
        (-4i64..4, prop::collection::vec(-3i64..4, 0..6))
            .prop_map(|(low, c)| LaurentPoly::from_dense(low, c.into_iter().map(BigInt::from).collect()))
    }

    proptest! {
        #[test]
        fn expansion_times_denominator_recovers_numerator(
            f in arb_poly(),
            denoms in prop::collection::vec(1i64..7, 0..4),
        ) {
            let trunc = 30;
            let s = expand_rational(&f, &denoms, trunc).unwrap();
            let back = s.mul_poly(&denominator_poly(&denoms).unwrap());
            prop_assert_eq!(back, LaurentSeries::from_poly(&f, trunc));
        }

        #[test]
        fn exact_quotient_multiplies_back(
            g in arb_poly(),
            denoms in prop::collection::vec(1i64..7, 0..4),
        ) {
            let d = denominator_poly(&denoms).unwrap();
            let numer = &g * &d;
            let (q, exact) = exact_poly_quotient(&numer, &denoms).unwrap();
            prop_assert!(exact);
            prop_assert_eq!(&q * &d, numer);
            prop_assert_eq!(q, g);
        }

        #[test]
        fn nonnegative_numerators_expand_nonnegatively(
            c in prop::collection::vec(0i64..5, 1..6),
            denoms in prop::collection::vec(1i64..7, 0..4),
        ) {
            let f = LaurentPoly::from_dense(0, c.into_iter().map(BigInt::from).collect());
            let s = expand_rational(&f, &denoms, 40).unwrap();
            prop_assert!(s.coeffs().iter().all(|x| x >= &BigInt::from(0)));
        }
    }
}
