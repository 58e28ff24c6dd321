//! C ABI for the bifuzzy integrals.
//!
//! Carriers live behind opaque handles created by `bfz_*_new` or
//! `bfz_*_from_json` and released with the matching `bfz_*_free`. Every
//! fallible call returns a [`BfzStatus`]; on failure the message is available
//! from [`bfz_last_error`] on the same thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::slice;

use bifuzzy::axioms::{run_characterization_suite, AxiomError, Carrier, Family};
use bifuzzy::bipolar_ops::{bipolar_max_variant, Variant};
use bifuzzy::io::{parse_bicapacity, parse_capacity, IoError};
use bifuzzy::unipolar::IntegralError;
use bifuzzy::{
    bipolar, unipolar, BiCapacity, Capacity, Coalition, Error, Measure, ScoreVector,
    SignedCoalition,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfzStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    Invalid = 4,
    Dimension = 5,
    Scale = 6,
    Link = 7,
    Panic = 8,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfzVariant {
    Neutral = 0,
    Right = 1,
    Left = 2,
}

impl From<BfzVariant> for Variant {
    fn from(v: BfzVariant) -> Self {
        match v {
            BfzVariant::Neutral => Variant::Neutral,
            BfzVariant::Right => Variant::Right,
            BfzVariant::Left => Variant::Left,
        }
    }
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BfzFamily {
    Choquet = 0,
    Shilkret = 1,
    ShilkretNegative = 2,
    Sugeno = 3,
    BipolarChoquet = 4,
    BipolarShilkret = 5,
    BipolarSugeno = 6,
}

impl BfzFamily {
    fn with_variant(self, v: BfzVariant) -> Family {
        match self {
            BfzFamily::Choquet => Family::Choquet,
            BfzFamily::Shilkret => Family::Shilkret,
            BfzFamily::ShilkretNegative => Family::ShilkretNegative,
            BfzFamily::Sugeno => Family::Sugeno,
            BfzFamily::BipolarChoquet => Family::BipolarChoquet,
            BfzFamily::BipolarShilkret => Family::BipolarShilkret(v.into()),
            BfzFamily::BipolarSugeno => Family::BipolarSugeno(v.into()),
        }
    }
}

/// Opaque capacity on the subsets of `{1, ..., n}`.
pub struct BfzCapacity(Capacity);

/// Opaque bi-capacity on the disjoint pairs of `{1, ..., n}`.
pub struct BfzBiCapacity(BiCapacity);

/// Outcome of a characterization suite run.
#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct BfzSuiteResult {
    pub passed: bool,
    pub roundtrip_exact: bool,
    /// Number of axioms in the bundle.
    pub axioms: usize,
    /// Number of axioms with at least one violation.
    pub failed_axioms: usize,
    pub violations: u64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(message: String) {
    let message = CString::new(message.replace('\0', " ")).expect("no interior NUL");
    LAST_ERROR.with(|slot| *slot.borrow_mut() = Some(message));
}

fn clear_last_error() {
    LAST_ERROR.with(|slot| *slot.borrow_mut() = None);
}

fn integral_status(e: &IntegralError) -> BfzStatus {
    match e {
        IntegralError::DimensionMismatch { .. } => BfzStatus::Dimension,
        IntegralError::ScaleViolation { .. } | IntegralError::PositiveComponent { .. } => {
            BfzStatus::Scale
        }
        IntegralError::LinkViolation { .. } => BfzStatus::Link,
    }
}

/// Failure of an entry point: a null argument or a library error.
enum Failure {
    Null(&'static str),
    Core(Error),
}

impl<E: Into<Error>> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Core(e.into())
    }
}

fn status_of(e: &Error) -> BfzStatus {
    match e {
        Error::Usage(_) | Error::Ops(_) => BfzStatus::InvalidArgument,
        Error::Io(IoError::Invalid(_))
        | Error::Io(IoError::EntryModel { .. })
        | Error::Model(_) => BfzStatus::Invalid,
        Error::Io(_) => BfzStatus::Parse,
        Error::Integral(e) | Error::Axiom(AxiomError::Integral(e)) => integral_status(e),
        Error::Axiom(_) => BfzStatus::InvalidArgument,
    }
}

/// Run `body`, record any error or panic, and translate it to a status.
fn guard(body: impl FnOnce() -> Result<(), Failure>) -> BfzStatus {
    clear_last_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => BfzStatus::Ok,
        Ok(Err(Failure::Null(what))) => {
            set_last_error(format!("`{what}` is null"));
            BfzStatus::NullPointer
        }
        Ok(Err(Failure::Core(e))) => {
            set_last_error(e.to_string());
            status_of(&e)
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            BfzStatus::Panic
        }
    }
}

unsafe fn floats<'a>(
    data: *const f64,
    len: usize,
    what: &'static str,
) -> Result<&'a [f64], Failure> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(Failure::Null(what));
    }
    Ok(slice::from_raw_parts(data, len))
}

unsafe fn text<'a>(s: *const c_char) -> Result<&'a str, Failure> {
    if s.is_null() {
        return Err(Failure::Null("json"));
    }
    CStr::from_ptr(s)
        .to_str()
        .map_err(|e| Error::Usage(format!("text is not UTF-8: {e}")).into())
}

unsafe fn deref<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Failure> {
    p.as_ref().ok_or(Failure::Null(what))
}

unsafe fn store<T>(out: *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure::Null("out"));
    }
    out.write(value);
    Ok(())
}

/// Message of the last failed call on this thread, or NULL after a success.
///
/// The pointer stays valid until the next `bfz_*` call on the same thread.
#[no_mangle]
pub extern "C" fn bfz_last_error() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// Build a capacity from `len = 2^n` values indexed by coalition bit mask
/// (bit `i - 1` set when criterion `i` belongs to the coalition).
///
/// # Safety
/// `table` must point to `len` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_new(
    n: usize,
    table: *const f64,
    len: usize,
    out: *mut *mut BfzCapacity,
) -> BfzStatus {
    guard(|| {
        let values = floats(table, len, "table")?.to_vec();
        let mu = Capacity::from_table(n, values)?;
        store(out, Box::into_raw(Box::new(BfzCapacity(mu))))
    })
}

/// Parse a capacity from carrier JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_from_json(
    json: *const c_char,
    out: *mut *mut BfzCapacity,
) -> BfzStatus {
    guard(|| {
        let mu = parse_capacity(text(json)?)?;
        store(out, Box::into_raw(Box::new(BfzCapacity(mu))))
    })
}

/// Number of criteria, 0 for NULL.
///
/// # Safety
/// `mu` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_n(mu: *const BfzCapacity) -> usize {
    mu.as_ref().map_or(0, |m| m.0.n())
}

/// Value at the coalition with bit mask `mask`.
///
/// # Safety
/// `mu` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_value(
    mu: *const BfzCapacity,
    mask: u32,
    out: *mut f64,
) -> BfzStatus {
    guard(|| {
        let mu = &deref(mu, "mu")?.0;
        let a = Coalition::from_mask(mask);
        if !a.fits(mu.n()) {
            return Err(Error::Usage(format!("mask {mask:#x} exceeds n = {}", mu.n())).into());
        }
        store(out, mu.value(a))
    })
}

/// # Safety
/// `mu` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_free(mu: *mut BfzCapacity) {
    if !mu.is_null() {
        drop(Box::from_raw(mu));
    }
}

/// Build a bi-capacity from `len = 3^n` values in ternary order: digit
/// `i - 1` of the index is 1 when criterion `i` is positive, 2 when negative.
///
/// # Safety
/// `table` must point to `len` readable doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_new(
    n: usize,
    table: *const f64,
    len: usize,
    out: *mut *mut BfzBiCapacity,
) -> BfzStatus {
    guard(|| {
        let values = floats(table, len, "table")?.to_vec();
        let mb = BiCapacity::from_table(n, values)?;
        store(out, Box::into_raw(Box::new(BfzBiCapacity(mb))))
    })
}

/// Parse a bi-capacity from carrier JSON.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_from_json(
    json: *const c_char,
    out: *mut *mut BfzBiCapacity,
) -> BfzStatus {
    guard(|| {
        let mb = parse_bicapacity(text(json)?)?;
        store(out, Box::into_raw(Box::new(BfzBiCapacity(mb))))
    })
}

/// Number of criteria, 0 for NULL.
///
/// # Safety
/// `mb` must be NULL or a live handle.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_n(mb: *const BfzBiCapacity) -> usize {
    mb.as_ref().map_or(0, |m| m.0.n())
}

/// Value at the pair with positive mask `pos` and negative mask `neg`.
///
/// # Safety
/// `mb` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_value(
    mb: *const BfzBiCapacity,
    pos: u32,
    neg: u32,
    out: *mut f64,
) -> BfzStatus {
    guard(|| {
        let mb = &deref(mb, "mb")?.0;
        let pair = SignedCoalition::new(Coalition::from_mask(pos), Coalition::from_mask(neg))?;
        if !pair.fits(mb.n()) {
            return Err(Error::Usage(format!("pair exceeds n = {}", mb.n())).into());
        }
        store(out, mb.value(pair))
    })
}

/// # Safety
/// `mb` must be NULL or a handle not yet freed.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_free(mb: *mut BfzBiCapacity) {
    if !mb.is_null() {
        drop(Box::from_raw(mb));
    }
}

unsafe fn unipolar_call(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
    f: impl FnOnce(&ScoreVector, &Capacity) -> Result<f64, IntegralError>,
) -> BfzStatus {
    guard(|| {
        let mu = &deref(mu, "mu")?.0;
        let x = ScoreVector::real(floats(x, len, "x")?.to_vec())?;
        store(out, f(&x, mu)?)
    })
}

unsafe fn bipolar_call(
    mb: *const BfzBiCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
    f: impl FnOnce(&ScoreVector, &BiCapacity) -> Result<f64, IntegralError>,
) -> BfzStatus {
    guard(|| {
        let mb = &deref(mb, "mb")?.0;
        let x = ScoreVector::real(floats(x, len, "x")?.to_vec())?;
        store(out, f(&x, mb)?)
    })
}

/// Choquet integral of `x` (any finite reals).
///
/// # Safety
/// `mu` must be a live handle, `x` must point to `len` doubles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_choquet(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::choquet)
}

/// Shilkret integral of `x`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_shilkret(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::shilkret)
}

/// Negative Shilkret integral; every score must be `<= 0`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_shilkret_negative(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::shilkret_negative)
}

/// Symmetric Shilkret integral of `x`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_shilkret_symmetric(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::shilkret_symmetric)
}

/// Sugeno integral of `x` in `[0, 1]^n`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_sugeno(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, |x, mu| {
        unipolar::sugeno(x, &Measure::from_capacity(mu))
    })
}

/// Negative Sugeno integral of `x` in `[-1, 0]^n`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_sugeno_negative(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::sugeno_negative)
}

/// Symmetric Sugeno integral of `x` in `[-1, 1]^n`.
///
/// # Safety
/// As for [`bfz_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_sugeno_symmetric(
    mu: *const BfzCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    unipolar_call(mu, x, len, out, unipolar::sugeno_symmetric)
}

/// Bipolar Choquet integral of `x` in `[-1, 1]^n`.
///
/// # Safety
/// `mb` must be a live handle, `x` must point to `len` doubles, `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bipolar_choquet(
    mb: *const BfzBiCapacity,
    x: *const f64,
    len: usize,
    out: *mut f64,
) -> BfzStatus {
    bipolar_call(mb, x, len, out, bipolar::bipolar_choquet)
}

/// Bipolar Shilkret integral of `x` in `[-1, 1]^n`.
///
/// # Safety
/// As for [`bfz_bipolar_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_bipolar_shilkret(
    mb: *const BfzBiCapacity,
    x: *const f64,
    len: usize,
    variant: BfzVariant,
    out: *mut f64,
) -> BfzStatus {
    bipolar_call(mb, x, len, out, |x, mb| {
        bipolar::bipolar_shilkret(x, mb, variant.into())
    })
}

/// Bipolar Sugeno integral of `x` in `[-1, 1]^n`.
///
/// # Safety
/// As for [`bfz_bipolar_choquet`].
#[no_mangle]
pub unsafe extern "C" fn bfz_bipolar_sugeno(
    mb: *const BfzBiCapacity,
    x: *const f64,
    len: usize,
    variant: BfzVariant,
    out: *mut f64,
) -> BfzStatus {
    bipolar_call(mb, x, len, out, |x, mb| {
        bipolar::bipolar_sugeno(x, mb, variant.into())
    })
}

/// Bipolar maximum of `len >= 1` finite reals.
///
/// # Safety
/// `xs` must point to `len` doubles and `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bipolar_max(
    xs: *const f64,
    len: usize,
    variant: BfzVariant,
    out: *mut f64,
) -> BfzStatus {
    guard(|| {
        let xs = floats(xs, len, "xs")?;
        store(out, bipolar_max_variant(xs, variant.into())?)
    })
}

fn summarize(
    carrier: &Carrier,
    family: Family,
    trials: u64,
    seed: u64,
    eps: f64,
) -> Result<BfzSuiteResult, Error> {
    let report = run_characterization_suite(family, carrier, trials, seed, eps)?;
    Ok(BfzSuiteResult {
        passed: report.passed,
        roundtrip_exact: report.roundtrip_exact,
        axioms: report.reports.len(),
        failed_axioms: report.reports.iter().filter(|r| !r.passed).count(),
        violations: report.reports.iter().map(|r| r.violation_count).sum(),
    })
}

/// Run the characterization suite of a unipolar family on `mu`.
/// `variant` is ignored by families without one.
///
/// # Safety
/// `mu` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_capacity_suite(
    mu: *const BfzCapacity,
    family: BfzFamily,
    variant: BfzVariant,
    trials: u64,
    seed: u64,
    eps: f64,
    out: *mut BfzSuiteResult,
) -> BfzStatus {
    guard(|| {
        let carrier = Carrier::Capacity(deref(mu, "mu")?.0.clone());
        store(
            out,
            summarize(&carrier, family.with_variant(variant), trials, seed, eps)?,
        )
    })
}

/// Run the characterization suite of a bipolar family on `mb`.
///
/// # Safety
/// `mb` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn bfz_bicapacity_suite(
    mb: *const BfzBiCapacity,
    family: BfzFamily,
    variant: BfzVariant,
    trials: u64,
    seed: u64,
    eps: f64,
    out: *mut BfzSuiteResult,
) -> BfzStatus {
    guard(|| {
        let carrier = Carrier::BiCapacity(deref(mb, "mb")?.0.clone());
        store(
            out,
            summarize(&carrier, family.with_variant(variant), trials, seed, eps)?,
        )
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn last_error() -> String {
        let p = bfz_last_error();
        assert!(!p.is_null());
        unsafe { CStr::from_ptr(p) }.to_string_lossy().into_owned()
    }

    #[test]
    fn capacity_lifecycle() {
        let table = [0.0, 0.3, 0.6, 1.0];
        let mut mu = ptr::null_mut();
        unsafe {
            assert_eq!(
                bfz_capacity_new(2, table.as_ptr(), 4, &mut mu),
                BfzStatus::Ok
            );
            assert!(bfz_last_error().is_null());
            assert_eq!(bfz_capacity_n(mu), 2);
            let mut v = 0.0;
            assert_eq!(bfz_capacity_value(mu, 0b10, &mut v), BfzStatus::Ok);
            assert_eq!(v, 0.6);
            assert_eq!(
                bfz_capacity_value(mu, 0b100, &mut v),
                BfzStatus::InvalidArgument
            );
            bfz_capacity_free(mu);
        }
    }

    #[test]
    fn invalid_table_reports_message() {
        let table = [0.0, 0.7, 0.6, 0.5];
        let mut mu = ptr::null_mut();
        let status = unsafe { bfz_capacity_new(2, table.as_ptr(), 4, &mut mu) };
        assert_eq!(status, BfzStatus::Invalid);
        assert!(mu.is_null());
        assert!(!last_error().is_empty());
    }

    #[test]
    fn null_out_pointer() {
        let status =
            unsafe { bfz_bipolar_max([0.5].as_ptr(), 1, BfzVariant::Neutral, ptr::null_mut()) };
        assert_eq!(status, BfzStatus::NullPointer);
        assert!(last_error().contains("out"));
    }

    #[test]
    fn tie_between_signs() {
        let xs = [0.4, -0.4];
        let mut v = f64::NAN;
        for (variant, want) in [
            (BfzVariant::Neutral, 0.0),
            (BfzVariant::Right, 0.4),
            (BfzVariant::Left, -0.4),
        ] {
            assert_eq!(
                unsafe { bfz_bipolar_max(xs.as_ptr(), 2, variant, &mut v) },
                BfzStatus::Ok
            );
            assert_eq!(v, want);
        }
    }
}
