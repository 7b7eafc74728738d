//! C ABI over `stmult`.
//!
//! Every fallible function returns a [`StmultStatus`]; on failure a message
//! is available from [`stmult_last_error`] on the same thread. Handles and
//! strings returned through out-pointers are owned by the caller and must be
//! released with the matching `*_free` function.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use num_bigint::BigInt;
use serde_json::{json, Value};

use stmult::combinatorics::{DominantWeight, GroupParams, Partition};
use stmult::formulas::{
    coinvariant_multiplicity, composition_multiplicity_series, pim_decompose, pim_dim, steinberg_closed_form,
    CompositionTarget, GeneralPart, TensorFactor,
};
use stmult::series::LaurentSeries;
use stmult::Error;

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StmultStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    /// A theorem hypothesis does not hold for the requested input.
    Precondition = 3,
    OutOfRange = 4,
    /// The value does not fit the requested integer type.
    Overflow = 5,
    Inexact = 6,
    Internal = 7,
}

/// Which module is tensored with `S(V) x Det^k`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StmultFactor {
    /// `wedge^m`, `m` from `m_or_ell`.
    Wedge = 0,
    /// `(wedge^m)*`.
    WedgeDual = 1,
    /// `wedge^nu`, parts from `parts`.
    WedgeNu = 2,
    /// `(wedge^nu)*`.
    WedgeNuDual = 3,
    /// `L(mu)`, parts from `parts`.
    Simple = 4,
    /// `L(mu)*`.
    SimpleDual = 5,
    /// `V^{x l}`, `l` from `m_or_ell`.
    PowerDet = 6,
    None = 7,
}

/// Group parameters `GL_n(p^r)`.
pub struct StmultParams(GroupParams);

/// A truncated multiplicity series with the name of the result it came from.
pub struct StmultSeries {
    series: LaurentSeries,
    theorem: CString,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

struct Fail(StmultStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::Precondition { .. } => StmultStatus::Precondition,
            Error::OutOfRange { .. } => StmultStatus::OutOfRange,
            Error::InexactDivision(_) => StmultStatus::Inexact,
            _ => StmultStatus::InvalidArgument,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(StmultStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, records any failure (including a panic) and maps it to a status.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> StmultStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            StmultStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(panic) => {
            let msg = panic
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| panic.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "panic".to_string());
            set_error(&format!("internal error: {msg}"));
            StmultStatus::Internal
        }
    }
}

unsafe fn params_ref<'a>(p: *const StmultParams) -> Result<&'a GroupParams, Fail> {
    p.as_ref().map(|p| &p.0).ok_or_else(|| null("params"))
}

unsafe fn partition(parts: *const usize, nparts: usize) -> Result<Partition, Fail> {
    if nparts == 0 {
        return Ok(Partition::empty());
    }
    if parts.is_null() {
        return Err(null("parts"));
    }
    let v = std::slice::from_raw_parts(parts, nparts).to_vec();
    Ok(Partition::new(v)?)
}

unsafe fn write_out<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior NUL").into_raw()
}

/// The message of the last failed call on this thread, or an empty string.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn stmult_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// # Safety
/// `out` must be a valid pointer to writable storage.
#[no_mangle]
pub unsafe extern "C" fn stmult_params_new(n: usize, p: u64, r: u32, out: *mut *mut StmultParams) -> StmultStatus {
    guard(|| {
        let g = GroupParams::new(n, p, r)?;
        write_out(out, Box::into_raw(Box::new(StmultParams(g))))
    })
}

/// # Safety
/// `params` must be null or come from `stmult_params_new` and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn stmult_params_free(params: *mut StmultParams) {
    if !params.is_null() {
        drop(Box::from_raw(params));
    }
}

/// # Safety
/// `params` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_params_q(params: *const StmultParams, out: *mut i64) -> StmultStatus {
    guard(|| write_out(out, params_ref(params)?.q()))
}

/// Multiplicity series of St in `S(V) x M x Det^k` up to `t^trunc`.
/// `m_or_ell` is read for `Wedge`, `WedgeDual` and `PowerDet`; `parts`
/// (weakly decreasing, `nparts` entries) for the partition-valued factors.
///
/// # Safety
/// `params` must be a live handle, `parts` must point to `nparts` values
/// (or `nparts` be zero) and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_steinberg_series(
    params: *const StmultParams,
    factor: StmultFactor,
    m_or_ell: usize,
    parts: *const usize,
    nparts: usize,
    k: i64,
    trunc: i64,
    out: *mut *mut StmultSeries,
) -> StmultStatus {
    guard(|| {
        let g = params_ref(params)?;
        let f = match factor {
            StmultFactor::Wedge => TensorFactor::Wedge(m_or_ell),
            StmultFactor::WedgeDual => TensorFactor::WedgeDual(m_or_ell),
            StmultFactor::WedgeNu => TensorFactor::WedgeNu(partition(parts, nparts)?),
            StmultFactor::WedgeNuDual => TensorFactor::WedgeNuDual(partition(parts, nparts)?),
            StmultFactor::Simple => TensorFactor::Simple(partition(parts, nparts)?),
            StmultFactor::SimpleDual => TensorFactor::SimpleDual(partition(parts, nparts)?),
            StmultFactor::PowerDet => TensorFactor::PowerDet(m_or_ell),
            StmultFactor::None => TensorFactor::None,
        };
        let form = steinberg_closed_form(g, &f, k)?;
        let series = form.expand(trunc)?;
        let theorem = CString::new(form.theorem).expect("no NUL");
        write_out(out, Box::into_raw(Box::new(StmultSeries { series, theorem })))
    })
}

/// Composition multiplicity series of `L((q-1) rho - mu + k)` (`part` 1) or
/// `L((q-1) rho + w0 mu + k)` (`part` 2) in `S(V)`.
///
/// # Safety
/// As for `stmult_steinberg_series`.
#[no_mangle]
pub unsafe extern "C" fn stmult_composition_series(
    params: *const StmultParams,
    parts: *const usize,
    nparts: usize,
    k: i64,
    part: u32,
    trunc: i64,
    out: *mut *mut StmultSeries,
) -> StmultStatus {
    guard(|| {
        let g = params_ref(params)?;
        let target = CompositionTarget::General { mu: partition(parts, nparts)?, k, part: general_part(part)? };
        let c = composition_multiplicity_series(g, &target, trunc)?;
        let theorem = CString::new(c.theorem).expect("no NUL");
        write_out(out, Box::into_raw(Box::new(StmultSeries { series: c.series, theorem })))
    })
}

fn general_part(part: u32) -> Result<GeneralPart, Fail> {
    match part {
        1 => Ok(GeneralPart::One),
        2 => Ok(GeneralPart::Two),
        _ => Err(Fail(StmultStatus::InvalidArgument, format!("part must be 1 or 2, got {part}"))),
    }
}

/// # Safety
/// `series` must be null or a handle from this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_free(series: *mut StmultSeries) {
    if !series.is_null() {
        drop(Box::from_raw(series));
    }
}

/// Lowest stored exponent; coefficients below it are zero.
///
/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_shift(series: *const StmultSeries, out: *mut i64) -> StmultStatus {
    guard(|| {
        let s = series.as_ref().ok_or_else(|| null("series"))?;
        write_out(out, s.series.shift())
    })
}

/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_trunc(series: *const StmultSeries, out: *mut i64) -> StmultStatus {
    guard(|| {
        let s = series.as_ref().ok_or_else(|| null("series"))?;
        write_out(out, s.series.trunc())
    })
}

/// Name of the result the series was computed from. Owned by the handle.
///
/// # Safety
/// `series` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_theorem(series: *const StmultSeries) -> *const c_char {
    series.as_ref().map_or(ptr::null(), |s| s.theorem.as_ptr())
}

unsafe fn coefficient(series: *const StmultSeries, a: i64) -> Result<BigInt, Fail> {
    let s = series.as_ref().ok_or_else(|| null("series"))?;
    Ok(s.series.coefficient_at(a)?.clone())
}

/// Coefficient of `t^a`; `Overflow` if it does not fit in 64 bits.
///
/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_coefficient(series: *const StmultSeries, a: i64, out: *mut i64) -> StmultStatus {
    guard(|| {
        let c = coefficient(series, a)?;
        let v =
            i64::try_from(&c).map_err(|_| Fail(StmultStatus::Overflow, format!("coefficient {c} exceeds 64 bits")))?;
        write_out(out, v)
    })
}

/// Coefficient of `t^a` as a decimal string; free with `stmult_string_free`.
///
/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_coefficient_str(
    series: *const StmultSeries,
    a: i64,
    out: *mut *mut c_char,
) -> StmultStatus {
    guard(|| {
        let c = coefficient(series, a)?;
        write_out(out, into_c_string(c.to_string()))
    })
}

/// `{"shift":..,"trunc":..,"coeffs":[..]}`; free with `stmult_string_free`.
///
/// # Safety
/// `series` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_to_json(series: *const StmultSeries, out: *mut *mut c_char) -> StmultStatus {
    guard(|| {
        let s = series.as_ref().ok_or_else(|| null("series"))?;
        write_out(out, into_c_string(s.series.to_json()))
    })
}

/// Parses canonical series JSON into a new handle.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_series_from_json(json: *const c_char, out: *mut *mut StmultSeries) -> StmultStatus {
    guard(|| {
        if json.is_null() {
            return Err(null("json"));
        }
        let text = CStr::from_ptr(json)
            .to_str()
            .map_err(|e| Fail(StmultStatus::InvalidArgument, format!("json is not UTF-8: {e}")))?;
        let series = LaurentSeries::from_json(text)?;
        let theorem = CString::default();
        write_out(out, Box::into_raw(Box::new(StmultSeries { series, theorem })))
    })
}

fn big(c: &impl ToString) -> Value {
    serde_json::from_str(&c.to_string()).expect("decimal integer")
}

/// PIM decomposition of `St x wedge^nu x Det^k` (or the dual when `dual` is
/// nonzero) as `[{"weight":[..],"mult":m,"dim":d}, ..]`; free with
/// `stmult_string_free`.
///
/// # Safety
/// `params` must be a live handle, `parts` point to `nparts` values and `out`
/// be writable.
#[no_mangle]
pub unsafe extern "C" fn stmult_pim_json(
    params: *const StmultParams,
    parts: *const usize,
    nparts: usize,
    k: i64,
    dual: i32,
    out: *mut *mut c_char,
) -> StmultStatus {
    guard(|| {
        let g = params_ref(params)?;
        let d = pim_decompose(g, &partition(parts, nparts)?, k, dual != 0)?;
        let mut entries = Vec::new();
        for e in &d.entries {
            let dim = pim_dim(g, &DominantWeight::from_partition(&e.tau, g.n())?)?;
            entries.push(json!({"weight": e.weight.entries(), "mult": e.mult, "dim": big(&dim)}));
        }
        write_out(out, into_c_string(Value::Array(entries).to_string()))
    })
}

/// Coinvariant-algebra multiplicity of the `part` 1 or 2 target as
/// `{"poly":{..series..},"value_at_1":..,"target":[..],"det_shift":..}`;
/// free with `stmult_string_free`.
///
/// # Safety
/// As for `stmult_pim_json`.
#[no_mangle]
pub unsafe extern "C" fn stmult_coinv_json(
    params: *const StmultParams,
    parts: *const usize,
    nparts: usize,
    k: i64,
    part: u32,
    out: *mut *mut c_char,
) -> StmultStatus {
    guard(|| {
        let g = params_ref(params)?;
        let target = CompositionTarget::General { mu: partition(parts, nparts)?, k, part: general_part(part)? };
        let c = coinvariant_multiplicity(g, &target)?;
        let high = c.poly.high_degree().unwrap_or(0);
        let poly: Value = serde_json::from_str(&LaurentSeries::from_poly(&c.poly, high).to_json()).expect("JSON");
        let v = json!({
            "theorem": c.theorem,
            "poly": poly,
            "value_at_1": big(&c.value_at_1),
            "target": c.target.entries(),
            "det_shift": c.det_shift,
        });
        write_out(out, into_c_string(v.to_string()))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn stmult_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
