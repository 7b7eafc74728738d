use super::steinberg::prefactor;
use super::ClosedForm;
use crate::combinatorics::{GroupParams, Partition};
use crate::error::{Error, Result};
use crate::series::{expand_rational, LaurentPoly, LaurentSeries};
use crate::specialize::{schur_spec, SpecPoints};

pub const DICKSON: &str = "Hilbert series of the Dickson invariants";
pub const SOCLE: &str = "socle multiplicity of L(mu) x Det^k (conjectural)";

/// `1 / prod_{i=0}^{n-1} (1 - t^{q^n - q^i})`.
pub fn dickson_series(params: &GroupParams, trunc: i64) -> Result<LaurentSeries> {
    expand_rational(&LaurentPoly::one(), &params.dickson_degrees(), trunc)
}

/// The conjectured socle multiplicity
/// `t^{k(q^n-1)/(q-1)} s_mu(t, t^q, ...) / prod_i (1 - t^{q^n - q^i})`.
///
/// For `mu = ()` this is the Dickson series and the result is not flagged as
/// a conjecture.
pub fn socle_conjecture_closed_form(params: &GroupParams, mu: &Partition, k: i64) -> Result<ClosedForm> {
    let n = params.n();
    let p = params.p();
    let q = params.q();
    if mu.length() > n {
        return Err(Error::precondition(SOCLE, format!("l(mu) <= n (mu={mu}, n={n})")));
    }
    if !mu.is_empty() && mu.size() as u64 > p - 1 {
        return Err(Error::precondition(SOCLE, format!("1 <= |mu| <= p-1 (|mu|={}, p={p})", mu.size())));
    }
    let k = params.reduce_k(k);
    let mu1 = mu.first() as i64;
    if k > q - 2 - mu1 {
        return Err(Error::precondition(SOCLE, format!("0 <= k <= q-2-mu_1 (k={k}, mu_1={mu1}, q={q})")));
    }
    let numerator = schur_spec(mu, &SpecPoints::ascending(params))?.shifted(prefactor(params, k) + n as i64);
    let (theorem, conjecture) = if mu.is_empty() && k == 0 { (DICKSON, false) } else { (SOCLE, true) };
    Ok(ClosedForm { theorem, conjecture, numerator, denominators: params.dickson_degrees() })
}

pub fn socle_conjecture_series(params: &GroupParams, mu: &Partition, k: i64, trunc: i64) -> Result<LaurentSeries> {
    socle_conjecture_closed_form(params, mu, k)?.expand(trunc)
}
