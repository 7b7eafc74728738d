//! Closed-form multiplicity series and the PIM bookkeeping around them.

mod bigraded;
mod composition;
mod invariants;
mod pim;
mod steinberg;

pub use bigraded::{steinberg_bigraded, BIGRADED};
pub use composition::{
    coinvariant_multiplicity, composition_closed_form, composition_multiplicity_series, CoinvariantPoly,
    CompositionSeries, CompositionTarget, GeneralPart, GENERAL_1, GENERAL_2, WEDGE_TWIST,
};
pub use invariants::{dickson_series, socle_conjecture_closed_form, socle_conjecture_series, DICKSON, SOCLE};
pub use pim::{pim_decompose, pim_dim, PimDecomposition, PimEntry, PIM};
pub use steinberg::{
    dual_wedge_conversion, steinberg_closed_form, steinberg_multiplicity_series, TensorFactor, POWER_DET, SIMPLE,
    SIMPLE_DUAL, WEDGE, WEDGE_DET0, WEDGE_DUAL, WEDGE_NU, WEDGE_NU_DUAL,
};

use crate::combinatorics::GroupParams;
use crate::error::Result;
use crate::series::{expand_rational, LaurentPoly, LaurentSeries};

/// `numerator / prod_d (1 - t^d)`, tagged with the result it comes from.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClosedForm {
    pub theorem: &'static str,
    pub conjecture: bool,
    pub numerator: LaurentPoly,
    pub denominators: Vec<i64>,
}

impl ClosedForm {
    /// A series over the common denominator `prod_{i=1}^n (1 - t^{q^i - 1})`.
    pub(crate) fn steinberg(params: &GroupParams, theorem: &'static str, numerator: LaurentPoly) -> Self {
        ClosedForm { theorem, conjecture: false, numerator, denominators: params.steinberg_denominators() }
    }

    pub fn expand(&self, trunc: i64) -> Result<LaurentSeries> {
        expand_rational(&self.numerator, &self.denominators, trunc)
    }
}
