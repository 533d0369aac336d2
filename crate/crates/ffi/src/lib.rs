//! C ABI over `stringy-core`.
//!
//! Every function returns a [`StringyStatus`]. On failure a message is kept
//! per thread and can be read with [`stringy_last_error`]. Polynomials are
//! returned as ascending `int64_t` coefficient arrays: the caller passes a
//! buffer and its capacity, and the required length is always written to
//! `len`, so a call with `cap = 0` queries the size.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use stringy_core::combinatorics::Partition;
use stringy_core::exactalg::LPoly;
use stringy_core::stringy::{stringy_e, StringyResult};
use stringy_core::symfun::{chi_a, quotient_e};
use stringy_core::Error;

/// Largest `n` accepted by [`stringy_compute`].
pub const STRINGY_MAX_N: usize = 8;
/// Largest `r` accepted by [`stringy_quotient_e`].
pub const STRINGY_MAX_R: usize = 8;
/// Largest `n` accepted by [`stringy_character`].
pub const STRINGY_MAX_CHARACTER_N: usize = 12;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StringyStatus {
    Ok = 0,
    InvalidArgument = 1,
    OutOfRange = 2,
    NullPointer = 3,
    Overflow = 4,
    BufferTooSmall = 5,
    Internal = 6,
}

/// Opaque handle to a computed stringy E-polynomial with its sectors.
pub struct StringyE {
    inner: StringyResult,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

struct Failure(StringyStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::OutOfRange { .. } => StringyStatus::OutOfRange,
            Error::InvalidArgument(_) | Error::Inhomogeneous(_) => StringyStatus::InvalidArgument,
            Error::Overflow(_) => StringyStatus::Overflow,
            _ => StringyStatus::Internal,
        };
        Failure(status, e.to_string())
    }
}

fn set_error(msg: Option<String>) {
    let c = msg.map(|m| CString::new(m.replace('\0', " ")).expect("no interior nul"));
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn guard(f: impl FnOnce() -> Result<(), Failure>) -> StringyStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error(None);
            StringyStatus::Ok
        }
        Ok(Err(Failure(status, msg))) => {
            set_error(Some(msg));
            status
        }
        Err(_) => {
            set_error(Some("internal panic".into()));
            StringyStatus::Internal
        }
    }
}

fn null(what: &str) -> Failure {
    Failure(StringyStatus::NullPointer, format!("{what} is null"))
}

fn check_range(what: &str, value: usize, min: usize, max: usize) -> Result<(), Failure> {
    if value < min || value > max {
        return Err(Failure(
            StringyStatus::OutOfRange,
            format!("{what} = {value} is outside the supported range {min}..={max}"),
        ));
    }
    Ok(())
}

unsafe fn handle<'a>(h: *const StringyE) -> Result<&'a StringyE, Failure> {
    h.as_ref().ok_or_else(|| null("handle"))
}

unsafe fn write_coeffs(p: &LPoly, buf: *mut i64, cap: usize, len: *mut usize) -> Result<(), Failure> {
    if len.is_null() {
        return Err(null("len"));
    }
    let coeffs = p
        .to_i64_vec()
        .ok_or_else(|| Failure(StringyStatus::Overflow, format!("coefficient of {p} exceeds int64")))?;
    *len = coeffs.len();
    if coeffs.len() > cap {
        return Err(Failure(
            StringyStatus::BufferTooSmall,
            format!("need {} coefficients, buffer holds {cap}", coeffs.len()),
        ));
    }
    if !coeffs.is_empty() {
        if buf.is_null() {
            return Err(null("buf"));
        }
        ptr::copy_nonoverlapping(coeffs.as_ptr(), buf, coeffs.len());
    }
    Ok(())
}

unsafe fn write_string(s: String, out: *mut *mut c_char) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null("out"));
    }
    let c = CString::new(s).map_err(|e| Failure(StringyStatus::Internal, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Computes `E_st(Z^(n))` for `2 <= n <= STRINGY_MAX_N`. On success `*out`
/// owns a handle to release with [`stringy_free`].
///
/// # Safety
/// `out` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stringy_compute(n: usize, out: *mut *mut StringyE) -> StringyStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        *out = ptr::null_mut();
        check_range("n", n, 2, STRINGY_MAX_N)?;
        let inner = stringy_e(n)?;
        *out = Box::into_raw(Box::new(StringyE { inner }));
        Ok(())
    })
}

/// Releases a handle. Null is ignored.
///
/// # Safety
/// `h` must be null or come from [`stringy_compute`] and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn stringy_free(h: *mut StringyE) {
    if !h.is_null() {
        drop(Box::from_raw(h));
    }
}

/// # Safety
/// `h` must be a live handle or null; `n` must be null or valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stringy_n(h: *const StringyE, n: *mut usize) -> StringyStatus {
    guard(|| {
        let h = handle(h)?;
        n.as_mut().map(|n| *n = h.inner.n).ok_or_else(|| null("n"))
    })
}

/// # Safety
/// As for [`stringy_n`].
#[no_mangle]
pub unsafe extern "C" fn stringy_sector_count(h: *const StringyE, count: *mut usize) -> StringyStatus {
    guard(|| {
        let h = handle(h)?;
        count
            .as_mut()
            .map(|c| *c = h.inner.sectors.len())
            .ok_or_else(|| null("count"))
    })
}

/// Coefficients of the total.
///
/// # Safety
/// `h` must be a live handle; `buf` must be valid for `cap` writes;
/// `len` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stringy_total(
    h: *const StringyE,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> StringyStatus {
    guard(|| write_coeffs(&handle(h)?.inner.total, buf, cap, len))
}

/// Coefficients of the untwisted sector.
///
/// # Safety
/// As for [`stringy_total`].
#[no_mangle]
pub unsafe extern "C" fn stringy_untwisted(
    h: *const StringyE,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> StringyStatus {
    guard(|| write_coeffs(&handle(h)?.inner.untwisted, buf, cap, len))
}

/// Coefficients of the sector at `index`, `e_factor · L^exponent`.
///
/// # Safety
/// As for [`stringy_total`].
#[no_mangle]
pub unsafe extern "C" fn stringy_sector_polynomial(
    h: *const StringyE,
    index: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> StringyStatus {
    guard(|| {
        let h = handle(h)?;
        let s = h.inner.sectors.get(index).ok_or_else(|| {
            Failure(
                StringyStatus::OutOfRange,
                format!("sector index {index} of {}", h.inner.sectors.len()),
            )
        })?;
        write_coeffs(&s.polynomial(), buf, cap, len)
    })
}

/// The full result as JSON. Release the string with [`stringy_string_free`].
///
/// # Safety
/// `h` must be a live handle; `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stringy_to_json(h: *const StringyE, out: *mut *mut c_char) -> StringyStatus {
    guard(|| {
        let h = handle(h)?;
        let s = serde_json::to_string(&h.inner).map_err(|e| Failure(StringyStatus::Internal, e.to_string()))?;
        write_string(s, out)
    })
}

/// `E(X(A_{r-1}) / S_μ)` for a partition `μ` of `r`, given as `mu_len`
/// parts in any order.
///
/// # Safety
/// `mu` must be valid for `mu_len` reads; `buf`, `cap`, `len` as for
/// [`stringy_total`].
#[no_mangle]
pub unsafe extern "C" fn stringy_quotient_e(
    mu: *const usize,
    mu_len: usize,
    buf: *mut i64,
    cap: usize,
    len: *mut usize,
) -> StringyStatus {
    guard(|| {
        if mu.is_null() {
            return Err(null("mu"));
        }
        let parts = std::slice::from_raw_parts(mu, mu_len).to_vec();
        let r = parts
            .iter()
            .try_fold(0usize, |acc, &p| acc.checked_add(p))
            .ok_or_else(|| Failure(StringyStatus::Overflow, "partition size overflows".into()))?;
        check_range("r", r, 1, STRINGY_MAX_R)?;
        let p = Partition::from_unsorted(parts)?;
        write_coeffs(&quotient_e(r, &p)?, buf, cap, len)
    })
}

/// `χ[A_{n-1}, q]` rendered in the h-basis, e.g. `h3 + (h1*h2 + h3)*q + h3*q^2`.
/// Release the string with [`stringy_string_free`].
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn stringy_character(n: usize, out: *mut *mut c_char) -> StringyStatus {
    guard(|| {
        check_range("n", n, 1, STRINGY_MAX_CHARACTER_N)?;
        write_string(chi_a(n).render(), out)
    })
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn stringy_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or null after a
/// successful one. Valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn stringy_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn stringy_version() -> *const c_char {
    static VERSION: &CStr = match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
        Ok(v) => v,
        Err(_) => panic!("version"),
    };
    VERSION.as_ptr()
}
