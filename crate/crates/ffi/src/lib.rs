//! C ABI over `pbwres`.
//!
//! Every entry point returns a [`PbwStatus`]. On failure the message is kept
//! per thread and can be read with [`pbw_last_error`]. Strings handed out by
//! the library must be released with [`pbw_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::sync::Arc;

use pbwres::text::{
    format_polynomial, format_resolution, parse_algebra, parse_module, parse_polynomial,
    parse_resolution,
};
use pbwres::{
    buchberger, minimal_filtered_resolution, validate_algebra, verify_resolution, Algebra, Error,
    Resolution, DEFAULT_STEP_CAP,
};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PbwStatus {
    Ok = 0,
    /// A mathematical check did not pass, or a cap was hit.
    CheckFailed = 1,
    /// Malformed or inconsistent input.
    InputError = 2,
    NullPointer = 3,
    InvalidUtf8 = 4,
    /// A panic was caught at the boundary.
    Internal = 5,
}

/// Opaque handle to a validated algebra.
pub struct PbwAlgebra {
    inner: Arc<Algebra>,
}

/// Opaque handle to a resolution.
pub struct PbwResolution {
    inner: Resolution,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).ok());
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

struct Failure(PbwStatus, String);

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let status = match e {
            Error::StepCapExceeded(_) | Error::MaxLengthExceeded(_) | Error::RewriteCap { .. } => {
                PbwStatus::CheckFailed
            }
            _ => PbwStatus::InputError,
        };
        Failure(status, e.to_string())
    }
}

type Outcome<T> = std::result::Result<T, Failure>;

fn guard(f: impl FnOnce() -> Outcome<()>) -> PbwStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PbwStatus::Ok,
        Ok(Err(Failure(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            PbwStatus::Internal
        }
    }
}

unsafe fn str_arg<'a>(p: *const c_char, what: &str) -> Outcome<&'a str> {
    if p.is_null() {
        return Err(Failure(PbwStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(PbwStatus::InvalidUtf8, format!("{what} is not UTF-8")))
}

unsafe fn ref_arg<'a, T>(p: *const T, what: &str) -> Outcome<&'a T> {
    p.as_ref()
        .ok_or_else(|| Failure(PbwStatus::NullPointer, format!("{what} is null")))
}

fn out_arg<T>(p: *mut T, what: &str) -> Outcome<()> {
    if p.is_null() {
        return Err(Failure(PbwStatus::NullPointer, format!("{what} is null")));
    }
    Ok(())
}

fn to_c(s: String) -> *mut c_char {
    CString::new(s.replace('\0', " "))
        .map(CString::into_raw)
        .unwrap_or(ptr::null_mut())
}

/// Message of the last failed call on this thread, or null. Owned by the
/// library; valid until the next call on the same thread.
#[no_mangle]
pub extern "C" fn pbw_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// # Safety
/// `s` must be null or a string returned by this library, freed once.
#[no_mangle]
pub unsafe extern "C" fn pbw_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses and validates an algebra file. On rejection returns `CheckFailed`
/// and the violations are in the last error.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pbw_algebra_parse(
    text: *const c_char,
    out: *mut *mut PbwAlgebra,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let text = str_arg(text, "text")?;
        let spec = pbwres::text::parse_algebra_spec(text)?;
        let report = validate_algebra(&spec);
        if !report.accepted() {
            return Err(Failure(
                PbwStatus::CheckFailed,
                report.messages().join("; "),
            ));
        }
        let alg = parse_algebra(text)?;
        *out = Box::into_raw(Box::new(PbwAlgebra {
            inner: Arc::new(alg),
        }));
        Ok(())
    })
}

/// # Safety
/// `alg` must be null or a handle from [`pbw_algebra_parse`], freed once.
#[no_mangle]
pub unsafe extern "C" fn pbw_algebra_free(alg: *mut PbwAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Number of generators, or 0 for a null handle.
///
/// # Safety
/// `alg` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pbw_algebra_generator_count(alg: *const PbwAlgebra) -> usize {
    alg.as_ref().map_or(0, |a| a.inner.n())
}

/// Product `f·g` in canonical text form.
///
/// # Safety
/// Pointers must be valid; `out` receives a string for [`pbw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pbw_multiply(
    alg: *const PbwAlgebra,
    f: *const c_char,
    g: *const c_char,
    out: *mut *mut c_char,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let a = &ref_arg(alg, "alg")?.inner;
        let f = parse_polynomial(a.spec(), str_arg(f, "f")?)?;
        let g = parse_polynomial(a.spec(), str_arg(g, "g")?)?;
        *out = to_c(format_polynomial(a.spec(), &a.try_mul(&f, &g)?));
        Ok(())
    })
}

/// Weighted degree of a nonzero polynomial.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pbw_degree(
    alg: *const PbwAlgebra,
    f: *const c_char,
    out: *mut u32,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        let a = &ref_arg(alg, "alg")?.inner;
        let f = parse_polynomial(a.spec(), str_arg(f, "f")?)?;
        *out = a.weighted_degree(&f)?;
        Ok(())
    })
}

/// Reduced Gröbner basis of the generators of a module file, one element
/// per line. `step_cap == 0` selects the default cap.
///
/// # Safety
/// Pointers must be valid; `out` receives a string for [`pbw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pbw_groebner_basis(
    alg: *const PbwAlgebra,
    module_text: *const c_char,
    step_cap: usize,
    out: *mut *mut c_char,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let a = &ref_arg(alg, "alg")?.inner;
        let file = parse_module(a, str_arg(module_text, "module_text")?)?;
        let cap = if step_cap == 0 {
            DEFAULT_STEP_CAP
        } else {
            step_cap
        };
        let gens: Vec<_> = file
            .elements()
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        let basis = if gens.is_empty() {
            Vec::new()
        } else {
            buchberger(&file.module, &gens, cap)?.reduced_basis()
        };
        let mut text = String::new();
        for g in &basis {
            text.push_str(&pbwres::text::format_module_element(&file.module, g));
            text.push('\n');
        }
        *out = to_c(text);
        Ok(())
    })
}

/// Minimal filtered free resolution of the quotient presented by a module
/// file. `max_length == 0` means the number of generators; `step_cap == 0`
/// the default cap.
///
/// # Safety
/// Pointers must be valid; `out` receives a handle for
/// [`pbw_resolution_free`].
#[no_mangle]
pub unsafe extern "C" fn pbw_resolve(
    alg: *const PbwAlgebra,
    module_text: *const c_char,
    max_length: usize,
    step_cap: usize,
    out: *mut *mut PbwResolution,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let a = &ref_arg(alg, "alg")?.inner;
        let file = parse_module(a, str_arg(module_text, "module_text")?)?;
        let gens: Vec<_> = file
            .elements()
            .into_iter()
            .filter(|g| !g.is_zero())
            .collect();
        if gens.is_empty() {
            return Err(Failure(
                PbwStatus::InputError,
                format!("module {} has no nonzero generators", file.name),
            ));
        }
        let max = if max_length == 0 { a.n() } else { max_length };
        let cap = if step_cap == 0 {
            DEFAULT_STEP_CAP
        } else {
            step_cap
        };
        let res = minimal_filtered_resolution(&file.module, &gens, max, cap, &file.name)?;
        *out = Box::into_raw(Box::new(PbwResolution { inner: res }));
        Ok(())
    })
}

/// Reads a resolution file.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_parse(
    alg: *const PbwAlgebra,
    text: *const c_char,
    out: *mut *mut PbwResolution,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        let a = &ref_arg(alg, "alg")?.inner;
        let res = parse_resolution(a, str_arg(text, "text")?)?;
        *out = Box::into_raw(Box::new(PbwResolution { inner: res }));
        Ok(())
    })
}

/// # Safety
/// `res` must be null or a live handle, freed once.
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_free(res: *mut PbwResolution) {
    if !res.is_null() {
        drop(Box::from_raw(res));
    }
}

/// Number of maps, or 0 for a null handle.
///
/// # Safety
/// `res` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_length(res: *const PbwResolution) -> usize {
    res.as_ref().map_or(0, |r| r.inner.length())
}

/// Rank of `L_step`.
///
/// # Safety
/// Pointers must be valid.
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_rank(
    res: *const PbwResolution,
    step: usize,
    out: *mut usize,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        let r = &ref_arg(res, "res")?.inner;
        let ranks = r.ranks();
        *out = *ranks.get(step).ok_or_else(|| {
            Failure(
                PbwStatus::InputError,
                format!("step {step} beyond length {}", r.length()),
            )
        })?;
        Ok(())
    })
}

/// Resolution in the text format.
///
/// # Safety
/// Pointers must be valid; `out` receives a string for [`pbw_string_free`].
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_to_string(
    res: *const PbwResolution,
    out: *mut *mut c_char,
) -> PbwStatus {
    guard(|| {
        out_arg(out, "out")?;
        *out = ptr::null_mut();
        *out = to_c(format_resolution(&ref_arg(res, "res")?.inner));
        Ok(())
    })
}

/// Runs every resolution check. `CheckFailed` names the failing checks in
/// the last error.
///
/// # Safety
/// `res` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn pbw_resolution_verify(res: *const PbwResolution) -> PbwStatus {
    guard(|| {
        let report = verify_resolution(&ref_arg(res, "res")?.inner)?;
        if report.passed() {
            Ok(())
        } else {
            Err(Failure(PbwStatus::CheckFailed, report.failures.join("; ")))
        }
    })
}
