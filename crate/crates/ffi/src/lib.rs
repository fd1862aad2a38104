//! C ABI over `qrk`.
//!
//! Every fallible entry point returns a [`QrkStatus`] and writes its result
//! through an out-pointer. On failure the out-pointer is left untouched and
//! [`qrk_last_error_message`] describes the error for the calling thread.
//! Strings handed out are NUL-terminated and owned by the caller, who
//! releases them with [`qrk_string_free`]; polynomials with [`qrk_poly_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use qrk::catalog::{self, Overrides};
use qrk::dsl;
use qrk::exact::QLaurent;
use qrk::{partition, qnt, Error};

/// Result codes. Zero is success; all other values are errors.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum QrkStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullPointer = 1,
    /// A string argument was not valid UTF-8.
    InvalidUtf8 = 2,
    /// Bad argument: non-prime modulus, non-coprime pair, out-of-range value.
    InvalidArgument = 3,
    UnknownIdentity = 4,
    /// The expression did not parse.
    ParseError = 5,
    /// Arithmetic or convergence failure during evaluation.
    EvalError = 6,
    /// A Rust panic was caught at the boundary.
    Internal = 7,
}

/// Opaque Laurent polynomial with rational coefficients.
pub struct QrkPoly {
    poly: QLaurent,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("NUL bytes replaced");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(err: &Error) -> QrkStatus {
    match err {
        Error::UnknownIdentity(_) => QrkStatus::UnknownIdentity,
        Error::NotPrime(_) | Error::NotCoprime { .. } | Error::InvalidArgument(_) => QrkStatus::InvalidArgument,
        _ => QrkStatus::EvalError,
    }
}

/// Runs `body` with panics contained and errors recorded.
fn guard(body: impl FnOnce() -> Result<(), (QrkStatus, String)>) -> QrkStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(body)) {
        Ok(Ok(())) => QrkStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            QrkStatus::Internal
        }
    }
}

fn lib_err(e: Error) -> (QrkStatus, String) {
    (status_of(&e), e.to_string())
}

fn null() -> (QrkStatus, String) {
    (QrkStatus::NullPointer, "null pointer argument".into())
}

/// # Safety
/// `s` is null or a valid NUL-terminated string.
unsafe fn read_str<'a>(s: *const c_char) -> Result<&'a str, (QrkStatus, String)> {
    if s.is_null() {
        return Err(null());
    }
    CStr::from_ptr(s).to_str().map_err(|e| (QrkStatus::InvalidUtf8, e.to_string()))
}

/// # Safety
/// `out` is null or valid for a pointer write.
unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), (QrkStatus, String)> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|e| (QrkStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

fn json_err(e: serde_json::Error) -> (QrkStatus, String) {
    (QrkStatus::Internal, e.to_string())
}

/// Message for the last failed call on this thread, or null. The pointer
/// stays valid until the next `qrk_*` call on the same thread.
#[no_mangle]
pub extern "C" fn qrk_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |m| m.as_ptr()))
}

/// `chi_p(y) = (prod_{k=1}^{p-1} (y^k - 1) - p) / (1 + y + ... + y^{p-1})`.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_chi_poly(p: u64, out: *mut *mut QrkPoly) -> QrkStatus {
    guard(|| {
        if out.is_null() {
            return Err(null());
        }
        let chi = qnt::chi_poly(p).map_err(lib_err)?;
        *out = Box::into_raw(Box::new(QrkPoly { poly: chi.poly }));
        Ok(())
    })
}

/// Highest exponent, or 0 for the zero polynomial.
///
/// # Safety
/// `poly` comes from this library and `out` is valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qrk_poly_degree(poly: *const QrkPoly, out: *mut i64) -> QrkStatus {
    guard(|| {
        if poly.is_null() || out.is_null() {
            return Err(null());
        }
        *out = (*poly).poly.max_exponent().unwrap_or(0);
        Ok(())
    })
}

/// Renders the polynomial in ascending order, e.g. `-2 + y`.
///
/// # Safety
/// `poly` comes from this library and `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_poly_render(poly: *const QrkPoly, out: *mut *mut c_char) -> QrkStatus {
    guard(|| {
        if poly.is_null() {
            return Err(null());
        }
        write_string(out, (*poly).poly.to_string())
    })
}

/// # Safety
/// `poly` is null or came from this library and was not freed before.
#[no_mangle]
pub unsafe extern "C" fn qrk_poly_free(poly: *mut QrkPoly) {
    if !poly.is_null() {
        drop(Box::from_raw(poly));
    }
}

/// # Safety
/// `s` is null or was returned by this library and not freed before.
#[no_mangle]
pub unsafe extern "C" fn qrk_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// `p(n)` as a decimal string.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_partition_count(n: u64, out: *mut *mut c_char) -> QrkStatus {
    guard(|| {
        let n = usize::try_from(n).map_err(|e| (QrkStatus::InvalidArgument, e.to_string()))?;
        write_string(out, partition::partition_count(n).to_string())
    })
}

/// Verdict JSON for one registry id. `order` and `q_order` override the
/// defaults when positive. A failed identity is still `QRK_STATUS_OK`; read
/// `status` from the JSON.
///
/// # Safety
/// `id` is a NUL-terminated string; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_verify(id: *const c_char, order: i64, q_order: i64, out: *mut *mut c_char) -> QrkStatus {
    guard(|| {
        let id = read_str(id)?;
        let ov = Overrides {
            order: (order > 0).then_some(order as usize),
            q_order: (q_order > 0).then_some(q_order),
            ..Overrides::default()
        };
        let v = catalog::verify(id, &ov).map_err(lib_err)?;
        write_string(out, serde_json::to_string(&v).map_err(json_err)?)
    })
}

/// JSON array of verdicts for the whole registry, in registry order.
///
/// # Safety
/// `out` must be valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_verify_all_json(out: *mut *mut c_char) -> QrkStatus {
    guard(|| write_string(out, serde_json::to_string(&catalog::verify_all(false)).map_err(json_err)?))
}

/// Evaluates an expression as an x-series to `order`, with q-series
/// truncated at `q_order`, and renders it like `qrk eval`.
///
/// # Safety
/// `expr` is a NUL-terminated string; `out` is valid for a pointer write.
#[no_mangle]
pub unsafe extern "C" fn qrk_eval(expr: *const c_char, order: u32, q_order: i64, out: *mut *mut c_char) -> QrkStatus {
    guard(|| {
        let text = read_str(expr)?;
        let e = dsl::parse(text).map_err(|e| (QrkStatus::ParseError, e.to_string()))?;
        let s = dsl::eval_series(&e, order as usize, q_order).map_err(lib_err)?;
        write_string(out, s.to_string())
    })
}

/// Runs the q-Fermat congruence check for `a` modulo `[p]`.
///
/// # Safety
/// `passed` must be valid for a write.
#[no_mangle]
pub unsafe extern "C" fn qrk_q_fermat_check(a: u64, p: u64, passed: *mut bool) -> QrkStatus {
    guard(|| {
        if passed.is_null() {
            return Err(null());
        }
        *passed = qnt::q_fermat_check(a, p).map_err(lib_err)?.is_pass();
        Ok(())
    })
}
