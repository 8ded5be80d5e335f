//! C ABI over the `matchfield` library.
//!
//! Handles are opaque and owned by the caller, who releases them with the
//! matching `*_free`. Every fallible call returns an [`MfStatus`]; on failure
//! [`mf_last_error`] describes the cause for the calling thread. Strings
//! returned through `char **` are UTF-8, NUL-terminated and released with
//! [`mf_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use matchfield::coherence::coherence_witness;
use matchfield::field::{block_diagonal_matching_field, diagonal_matching_field};
use matchfield::ideal::{markov_generators, MarkovOptions};
use matchfield::polytope::{polytope_report, DEFAULT_CANDIDATE_LIMIT};
use matchfield::report::check;
use matchfield::weights::{induced_matching_field, WeightMatrix};
use matchfield::{Composition, Error, MatchingField};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MfStatus {
    Ok = 0,
    InvalidArgument = 1,
    Parse = 2,
    /// A weight matrix with a tied minimum, or an incoherent field.
    Incoherent = 3,
    NotPointed = 4,
    Precondition = 5,
    LimitExceeded = 6,
    Unsupported = 7,
    NullPointer = 8,
    Io = 9,
    Panic = 10,
}

/// A matching field.
pub struct MfField(MatchingField);

/// A weight matrix with exact rational entries.
pub struct MfWeights(WeightMatrix);

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).expect("NULs removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> MfStatus {
    match e {
        Error::InvalidArguments(_) => MfStatus::InvalidArgument,
        Error::Unsupported(_) => MfStatus::Unsupported,
        Error::Tie { .. } | Error::Incoherent { .. } => MfStatus::Incoherent,
        Error::NotPointed { .. } => MfStatus::NotPointed,
        Error::Precondition(_) => MfStatus::Precondition,
        Error::LimitExceeded(_) => MfStatus::LimitExceeded,
        Error::Parse(_) | Error::Json(_) => MfStatus::Parse,
        Error::Io(_) => MfStatus::Io,
    }
}

enum Fail {
    Null(&'static str),
    Lib(Error),
}

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail::Lib(e)
    }
}

impl From<serde_json::Error> for Fail {
    fn from(e: serde_json::Error) -> Self {
        Fail::Lib(Error::Json(e))
    }
}

fn guard(body: impl FnOnce() -> Result<(), Fail>) -> MfStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => MfStatus::Ok,
        Ok(Err(Fail::Null(what))) => {
            set_error(format!("{what} is NULL"));
            MfStatus::NullPointer
        }
        Ok(Err(Fail::Lib(e))) => {
            set_error(e.to_string());
            status_of(&e)
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            MfStatus::Panic
        }
    }
}

unsafe fn borrow<'a, T>(p: *const T, what: &'static str) -> Result<&'a T, Fail> {
    p.as_ref().ok_or(Fail::Null(what))
}

unsafe fn read_str<'a>(p: *const c_char, what: &'static str) -> Result<&'a str, Fail> {
    if p.is_null() {
        return Err(Fail::Null(what));
    }
    CStr::from_ptr(p).to_str().map_err(|e| Fail::Lib(Error::Parse(format!("{what}: {e}"))))
}

unsafe fn put<T>(out: *mut *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> Result<(), Fail> {
    if out.is_null() {
        return Err(Fail::Null("out"));
    }
    *out = CString::new(s).map_err(|e| Fail::Lib(Error::Parse(e.to_string())))?.into_raw();
    Ok(())
}

fn options(max_degree: usize) -> MarkovOptions {
    MarkovOptions::up_to(max_degree)
}

/// Message for the last failed call on this thread, or NULL. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn mf_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// # Safety
/// `s` must be NULL or a string returned by this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_from_json(json: *const c_char, out: *mut *mut MfField) -> MfStatus {
    guard(|| {
        let field: MatchingField = serde_json::from_str(read_str(json, "json")?)?;
        put(out, MfField(field))
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_diagonal(k: usize, n: usize, out: *mut *mut MfField) -> MfStatus {
    guard(|| put(out, MfField(diagonal_matching_field(k, n)?)))
}

/// The 3-row block diagonal field for block sizes `parts[0..len]`.
///
/// # Safety
/// `parts` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_block_diagonal(parts: *const usize, len: usize, out: *mut *mut MfField) -> MfStatus {
    guard(|| {
        if parts.is_null() {
            return Err(Fail::Null("parts"));
        }
        let a = Composition::new(std::slice::from_raw_parts(parts, len).to_vec())?;
        put(out, MfField(block_diagonal_matching_field(&a)?))
    })
}

/// # Safety
/// `field` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mf_field_k(field: *const MfField) -> usize {
    field.as_ref().map_or(0, |f| f.0.k())
}

/// # Safety
/// `field` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn mf_field_n(field: *const MfField) -> usize {
    field.as_ref().map_or(0, |f| f.0.n())
}

/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_to_json(field: *const MfField, out: *mut *mut c_char) -> MfStatus {
    guard(|| put_string(out, serde_json::to_string(&borrow(field, "field")?.0)?))
}

/// # Safety
/// `field` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mf_field_free(field: *mut MfField) {
    if !field.is_null() {
        drop(Box::from_raw(field));
    }
}

/// Accepts `{"rows": [...]}` or a bare array of rows; entries are integers or
/// rational strings such as `"-3/2"`.
///
/// # Safety
/// `json` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_weights_from_json(json: *const c_char, out: *mut *mut MfWeights) -> MfStatus {
    guard(|| {
        let m: WeightMatrix = serde_json::from_str(read_str(json, "json")?)?;
        put(out, MfWeights(m))
    })
}

/// Row-major integer entries of a `k × n` matrix.
///
/// # Safety
/// `entries` must point to `k * n` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_weights_from_rows(
    entries: *const i64,
    k: usize,
    n: usize,
    out: *mut *mut MfWeights,
) -> MfStatus {
    guard(|| {
        if entries.is_null() {
            return Err(Fail::Null("entries"));
        }
        let len = k.checked_mul(n).ok_or_else(|| Error::InvalidArguments("k * n overflows".into()))?;
        let flat = std::slice::from_raw_parts(entries, len);
        let rows: Vec<Vec<i64>> = flat.chunks(n.max(1)).map(<[i64]>::to_vec).collect();
        put(out, MfWeights(WeightMatrix::from_integers(&rows)?))
    })
}

/// The induced field; fails with `MF_STATUS_INCOHERENT` naming the tied subset.
///
/// # Safety
/// `weights` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_weights_induce(weights: *const MfWeights, out: *mut *mut MfField) -> MfStatus {
    guard(|| put(out, MfField(induced_matching_field(&borrow(weights, "weights")?.0)?)))
}

/// # Safety
/// `weights` must be NULL or a handle from this library, not yet freed.
#[no_mangle]
pub unsafe extern "C" fn mf_weights_free(weights: *mut MfWeights) {
    if !weights.is_null() {
        drop(Box::from_raw(weights));
    }
}

/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_is_coherent(field: *const MfField, out: *mut bool) -> MfStatus {
    guard(|| {
        let cert = coherence_witness(&borrow(field, "field")?.0)?;
        if out.is_null() {
            return Err(Fail::Null("out"));
        }
        *out = cert.is_coherent();
        Ok(())
    })
}

/// The coherence certificate as JSON: a weight matrix, or a Farkas witness.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_coherence_json(field: *const MfField, out: *mut *mut c_char) -> MfStatus {
    guard(|| {
        let cert = coherence_witness(&borrow(field, "field")?.0)?;
        put_string(out, cert.to_json().to_string())
    })
}

/// Coherence, hexagonality, quadratic generation up to `max_degree` and the
/// verdict, as one JSON report.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_check_json(
    field: *const MfField,
    max_degree: usize,
    out: *mut *mut c_char,
) -> MfStatus {
    guard(|| {
        let report = check(&borrow(field, "field")?.0, &options(max_degree))?;
        put_string(out, report.to_json().to_string())
    })
}

/// Minimal binomial generators of the field's ideal up to `max_degree`.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_ideal_json(
    field: *const MfField,
    max_degree: usize,
    out: *mut *mut c_char,
) -> MfStatus {
    guard(|| {
        let report = markov_generators(&borrow(field, "field")?.0, &options(max_degree))?;
        put_string(out, report.to_json().to_string())
    })
}

/// Vertices, f-vector and volumes of the field's polytope.
///
/// # Safety
/// `field` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn mf_field_polytope_json(field: *const MfField, out: *mut *mut c_char) -> MfStatus {
    guard(|| {
        let report = polytope_report(&borrow(field, "field")?.0, DEFAULT_CANDIDATE_LIMIT)?;
        put_string(out, serde_json::to_string(&report)?)
    })
}
