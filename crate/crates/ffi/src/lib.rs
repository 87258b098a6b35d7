//! C interface: opaque handles for polynomials and kernel reports, integer status codes
//! and a per-thread last-error message.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use mccool::freelie::{witt_dimension, LieElement};
use mccool::johnson::{kernel_report, omega, KernelOptions, KernelReport, LiePolynomial, SymbolSet, TauEngine};
use mccool::symmetry::kernel_character;

/// Status returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MccoolStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    InvalidArgument = 3,
    Computation = 4,
    Panic = 5,
}

/// A homogeneous polynomial over the symbols `a, b, c`.
pub struct MccoolPolynomial {
    inner: LiePolynomial,
}

/// Kernel of the Johnson morphism in one degree.
pub struct MccoolKernel {
    inner: KernelReport,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = CString::new(msg.into().replace('\0', " ")).expect("no interior nul");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn guard(f: impl FnOnce() -> Result<(), (MccoolStatus, String)>) -> MccoolStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => MccoolStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            MccoolStatus::Panic
        }
    }
}

fn computation(e: impl std::fmt::Display) -> (MccoolStatus, String) {
    (MccoolStatus::Computation, e.to_string())
}

unsafe fn deref<'a, T>(p: *const T) -> Result<&'a T, (MccoolStatus, String)> {
    p.as_ref().ok_or((MccoolStatus::NullPointer, "null handle".into()))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), (MccoolStatus, String)> {
    if out.is_null() {
        return Err((MccoolStatus::NullPointer, "null output pointer".into()));
    }
    out.write(value);
    Ok(())
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

/// Message of the last failed call on this thread, or null. Valid until the next call.
#[no_mangle]
pub extern "C" fn mccool_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Library version; a static string.
#[no_mangle]
pub extern "C" fn mccool_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}

/// Rank of the degree-`k` part of the free Lie ring on `n` generators.
#[no_mangle]
pub extern "C" fn mccool_witt_dimension(n: usize, k: usize) -> u64 {
    witt_dimension(n, k)
}

/// # Safety
/// `s` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mccool_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Writes a new handle for `omega` to `out`.
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_omega(out: *mut *mut MccoolPolynomial) -> MccoolStatus {
    guard(|| write(out, Box::into_raw(Box::new(MccoolPolynomial { inner: omega() }))))
}

/// Parses the JSON form of a polynomial over `a, b, c`.
///
/// # Safety
/// `json` must be a nul-terminated string and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_polynomial_from_json(
    json: *const c_char,
    out: *mut *mut MccoolPolynomial,
) -> MccoolStatus {
    guard(|| {
        if json.is_null() {
            return Err((MccoolStatus::NullPointer, "null string".into()));
        }
        let text = CStr::from_ptr(json).to_str().map_err(|e| (MccoolStatus::InvalidUtf8, e.to_string()))?;
        let parsed = serde_json::from_str(text).map_err(|e| (MccoolStatus::InvalidArgument, e.to_string()))?;
        let alpha = SymbolSet::abc().alphabet().clone();
        let inner =
            LieElement::from_json_in(&alpha, &parsed).map_err(|e| (MccoolStatus::InvalidArgument, e.to_string()))?;
        write(out, Box::into_raw(Box::new(MccoolPolynomial { inner })))
    })
}

/// JSON form of a polynomial; free with [`mccool_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_polynomial_to_json(p: *const MccoolPolynomial, out: *mut *mut c_char) -> MccoolStatus {
    guard(|| {
        let p = deref(p)?;
        let text = serde_json::to_string(&p.inner.to_json()).map_err(computation)?;
        write(out, into_c_string(text))
    })
}

/// Readable form of a polynomial; free with [`mccool_string_free`].
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_polynomial_to_string(
    p: *const MccoolPolynomial,
    out: *mut *mut c_char,
) -> MccoolStatus {
    guard(|| write(out, into_c_string(deref(p)?.inner.to_string())))
}

/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_polynomial_degree(p: *const MccoolPolynomial, out: *mut usize) -> MccoolStatus {
    guard(|| write(out, deref(p)?.inner.degree()))
}

/// Sets `out` to whether the Johnson morphism vanishes on `p`.
///
/// # Safety
/// `p` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_tau_vanishes(p: *const MccoolPolynomial, out: *mut bool) -> MccoolStatus {
    guard(|| {
        let p = deref(p)?;
        if p.inner.degree() == 0 {
            return Err((MccoolStatus::InvalidArgument, "degree 0".into()));
        }
        let d = TauEngine::new(SymbolSet::abc()).evaluate(&p.inner).map_err(computation)?;
        write(out, d.is_zero())
    })
}

/// # Safety
/// `p` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mccool_polynomial_free(p: *mut MccoolPolynomial) {
    if !p.is_null() {
        drop(Box::from_raw(p));
    }
}

/// Computes the kernel of the Johnson morphism in degree `k` (1 to 9).
///
/// # Safety
/// `out` must be valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_compute(k: usize, out: *mut *mut MccoolKernel) -> MccoolStatus {
    guard(|| {
        if k == 0 {
            return Err((MccoolStatus::InvalidArgument, "degree must be positive".into()));
        }
        let engine = TauEngine::new(SymbolSet::abc());
        let inner = kernel_report(&engine, k, &KernelOptions::default()).map_err(|e| match e {
            mccool::johnson::JohnsonError::DegreeCap { .. } => (MccoolStatus::InvalidArgument, e.to_string()),
            other => computation(other),
        })?;
        write(out, Box::into_raw(Box::new(MccoolKernel { inner })))
    })
}

/// # Safety
/// `k` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_dim(k: *const MccoolKernel, out: *mut usize) -> MccoolStatus {
    guard(|| write(out, deref(k)?.inner.kernel_dim))
}

/// # Safety
/// `k` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_domain_dim(k: *const MccoolKernel, out: *mut usize) -> MccoolStatus {
    guard(|| write(out, deref(k)?.inner.domain_dim))
}

/// New handle for basis element `index` of the integral kernel.
///
/// # Safety
/// `k` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_basis_element(
    k: *const MccoolKernel,
    index: usize,
    out: *mut *mut MccoolPolynomial,
) -> MccoolStatus {
    guard(|| {
        let k = deref(k)?;
        let inner = k.inner.basis.get(index).cloned().ok_or_else(|| {
            (MccoolStatus::InvalidArgument, format!("index {index} out of range {}", k.inner.kernel_dim))
        })?;
        write(out, Box::into_raw(Box::new(MccoolPolynomial { inner })))
    })
}

/// Character values on `id`, `(12)`, `(123)` written to `out[0..3]`.
///
/// # Safety
/// `k` must be a live handle and `out` valid for three writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_character(k: *const MccoolKernel, out: *mut i64) -> MccoolStatus {
    guard(|| {
        let chi: [i64; 3] = kernel_character(&deref(k)?.inner).map_err(computation)?.into();
        if out.is_null() {
            return Err((MccoolStatus::NullPointer, "null output pointer".into()));
        }
        ptr::copy_nonoverlapping(chi.as_ptr(), out, 3);
        Ok(())
    })
}

/// Kernel report as JSON; free with [`mccool_string_free`].
///
/// # Safety
/// `k` must be a live handle and `out` valid for writes.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_to_json(k: *const MccoolKernel, out: *mut *mut c_char) -> MccoolStatus {
    guard(|| {
        let text = serde_json::to_string(&deref(k)?.inner.to_json()).map_err(computation)?;
        write(out, into_c_string(text))
    })
}

/// # Safety
/// `k` must come from this library and not be freed twice.
#[no_mangle]
pub unsafe extern "C" fn mccool_kernel_free(k: *mut MccoolKernel) {
    if !k.is_null() {
        drop(Box::from_raw(k));
    }
}
