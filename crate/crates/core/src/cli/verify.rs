use std::fmt::Write as _;

use num_bigint::BigInt;
use rayon::prelude::*;

use super::{FactorKind, Failure, Report, VerifyArgs, EXIT_MISMATCH, EXIT_OK};
use crate::combinatorics::{GroupParams, Partition};
use crate::error::{Error, Result};
use crate::formulas::{dual_wedge_conversion, steinberg_closed_form, TensorFactor};
use crate::oracles::{o1_lattice, o2_pieri, o_simple_recursion, OracleQuery};

struct Cell {
    factor: TensorFactor,
    k: i64,
}

enum Verdict {
    Pass { oracles: &'static str },
    Fail { a: i64, detail: String },
}

/// `S(V) x M x Det^k` rewritten as `S(V) x wedge^nu x Det^k'` for the oracles.
fn oracle_form(g: &GroupParams, factor: &TensorFactor, k: i64) -> Result<Option<(Partition, i64)>> {
    let wedge = |m: usize| if m == 0 { Partition::empty() } else { Partition::row(m) };
    Ok(match factor {
        TensorFactor::Wedge(m) => Some((wedge(*m), k)),
        TensorFactor::None => Some((Partition::empty(), k)),
        TensorFactor::WedgeNu(nu) => Some((nu.clone(), k)),
        TensorFactor::PowerDet(l) => Some((Partition::column(*l), k)),
        TensorFactor::WedgeDual(m) => Some((wedge(g.n() - m), k - 1)),
        TensorFactor::WedgeNuDual(nu) => Some(dual_wedge_conversion(g, nu, k)?),
        TensorFactor::Simple(_) | TensorFactor::SimpleDual(_) => None,
    })
}

fn check_cell(g: &GroupParams, cell: &Cell, amax: i64, fault: bool) -> Result<Verdict> {
    let form = steinberg_closed_form(g, &cell.factor, cell.k)?;
    let mut formula = form.expand(amax)?;
    if fault {
        let mut coeffs = formula.coeffs().to_vec();
        *coeffs.last_mut().expect("amax >= 0") += 1;
        formula = crate::series::LaurentSeries::new(formula.shift(), amax, coeffs)?;
    }
    let coeff = |a: i64| -> Result<BigInt> { formula.coefficient_at(a).cloned() };

    let Some((nu, k)) = oracle_form(g, &cell.factor, cell.k)? else {
        let (mu, dual) = match &cell.factor {
            TensorFactor::Simple(mu) => (mu, false),
            TensorFactor::SimpleDual(mu) => (mu, true),
            _ => unreachable!("only simple factors lack a wedge form"),
        };
        let rec = o_simple_recursion(g, mu, cell.k, dual, amax)?;
        for a in 0..=amax {
            let (f, r) = (coeff(a)?, rec.coefficient_at(a)?.clone());
            if f != r {
                return Ok(Verdict::Fail { a, detail: format!("formula={f} recursion={r}") });
            }
        }
        return Ok(Verdict::Pass { oracles: "recursion" });
    };

    let mut o1_used = true;
    for a in 0..=amax {
        let q = OracleQuery::new(g, a as u64, nu.clone(), k)?;
        let f = coeff(a)?;
        let o2 = BigInt::from(o2_pieri(&q));
        let o1 = match o1_lattice(&q) {
            Ok(v) => Some(BigInt::from(v)),
            Err(Error::Precondition { .. }) => {
                o1_used = false;
                None
            }
            Err(e) => return Err(e),
        };
        if f != o2 || o1.as_ref().is_some_and(|o1| *o1 != f) {
            let o1 = o1.map_or_else(|| "n/a".to_string(), |v| v.to_string());
            return Ok(Verdict::Fail { a, detail: format!("formula={f} o1={o1} o2={o2}") });
        }
    }
    Ok(Verdict::Pass { oracles: if o1_used { "o1,o2" } else { "o2" } })
}

/// Factors swept when `--factor` is absent.
fn default_factors(n: usize) -> Vec<TensorFactor> {
    let mut out = vec![TensorFactor::None];
    out.extend((0..=n).map(TensorFactor::Wedge));
    out.extend((0..=n).map(TensorFactor::WedgeDual));
    for size in 2..=n {
        for nu in Partition::all_bounded(size, size) {
            if nu.length() >= 2 && nu.first() <= n {
                out.push(TensorFactor::WedgeNu(nu.clone()));
                out.push(TensorFactor::WedgeNuDual(nu));
            }
        }
    }
    out
}

pub(super) fn cmd_verify(a: &VerifyArgs) -> std::result::Result<Report, Failure> {
    let g = a.params.params()?;
    if a.amax < 0 {
        return Err(Failure::usage("--amax must be nonnegative"));
    }
    let factors = match a.factor.factor {
        Some(kind) => vec![a.factor.factor(kind)?],
        None => {
            if a.factor.m.is_some() || a.factor.nu.is_some() || a.factor.mu.is_some() || a.factor.ell.is_some() {
                return Err(Failure::usage(format!(
                    "factor payload flags need --factor (e.g. --factor {})",
                    super::kind_name(FactorKind::Wedge)
                )));
            }
            default_factors(g.n())
        }
    };
    let ks: Vec<i64> = match a.k {
        Some(k) => vec![k],
        None => (1..g.q()).collect(),
    };
    let mut cells = Vec::new();
    for factor in factors {
        for &k in &ks {
            match steinberg_closed_form(&g, &factor, k) {
                Ok(_) => cells.push(Cell { factor: factor.clone(), k }),
                // an explicit cell must be valid; a sweep skips invalid twists
                Err(e @ Error::Precondition { .. }) if a.k.is_some() => return Err(e.into()),
                Err(Error::Precondition { .. }) => {}
                Err(e) => return Err(e.into()),
            }
        }
    }
    if cells.is_empty() {
        return Err(Failure::usage("no valid (factor, k) cell to verify"));
    }

    let verdicts: Vec<Result<Verdict>> =
        cells.par_iter().enumerate().map(|(i, c)| check_cell(&g, c, a.amax, a.inject_fault && i == 0)).collect();

    let mut body = String::new();
    let mut passed = 0;
    let mut first_failure = None;
    for (cell, verdict) in cells.iter().zip(verdicts) {
        match verdict? {
            Verdict::Pass { oracles } => {
                passed += 1;
                let _ = writeln!(body, "PASS {} k={} a=0..{} [{oracles}]", cell.factor, cell.k, a.amax);
            }
            Verdict::Fail { a: deg, detail } => {
                let _ = writeln!(body, "FAIL {} k={} a={deg}: {detail}", cell.factor, cell.k);
                first_failure.get_or_insert(format!("factor={} k={} a={deg}", cell.factor, cell.k));
            }
        }
    }
    let _ = writeln!(body, "{g}: {passed}/{} cells passed", cells.len());
    let code = match &first_failure {
        Some(f) => {
            let _ = writeln!(body, "first failure: {f}");
            EXIT_MISMATCH
        }
        None => EXIT_OK,
    };
    Ok(Report { body, note: None, code })
}
