//! C ABI for pi-forge.
//!
//! Every function returns a [`PfStatus`]; results come back through out
//! pointers. On failure the message is kept per thread and can be fetched with
//! [`pf_last_error_message`]. Strings returned by the library must be released
//! with [`pf_string_free`], algebras with [`pf_algebra_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use pi_forge::algebra::{builtin, AlgebraSpec};
use pi_forge::identity::{is_identity, Quotient};
use pi_forge::multilinear::Signature;
use pi_forge::parse::parse_polynomial;
use pi_forge::representation::{multiplicity, Partition};
use pi_forge::theorems::GeneratorSet;
use pi_forge::verify::verify_basis;
use pi_forge::Error;

/// Status codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum PfStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    Parse = 3,
    InvalidSpec = 4,
    UnknownAlgebra = 5,
    Mode = 6,
    DegreeCap = 7,
    Precondition = 8,
    NotAnIdentity = 9,
    Io = 10,
    Panic = 11,
}

/// Opaque algebra handle.
pub struct PfAlgebra {
    spec: AlgebraSpec,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<String>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(e: &Error) -> PfStatus {
    match e {
        Error::Parse { .. } | Error::Malformed(_) => PfStatus::Parse,
        Error::InvalidSpec(_) | Error::DimensionMismatch { .. } => PfStatus::InvalidSpec,
        Error::UnknownAlgebra(_) => PfStatus::UnknownAlgebra,
        Error::Mode(_) | Error::KindViolation(_) => PfStatus::Mode,
        Error::DegreeCap { .. } => PfStatus::DegreeCap,
        Error::NotMultilinear(_) | Error::Precondition(_) => PfStatus::Precondition,
        Error::NotAnIdentity { .. } => PfStatus::NotAnIdentity,
        Error::Io(_) => PfStatus::Io,
    }
}

/// Runs `f`, translating errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), (PfStatus, String)>) -> PfStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => PfStatus::Ok,
        Ok(Err((status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("internal panic".into());
            PfStatus::Panic
        }
    }
}

fn lib(e: Error) -> (PfStatus, String) {
    (status_of(&e), e.to_string())
}

unsafe fn read_str<'a>(p: *const c_char, what: &str) -> Result<&'a str, (PfStatus, String)> {
    if p.is_null() {
        return Err((PfStatus::NullPointer, format!("{what} is null")));
    }
    CStr::from_ptr(p).to_str().map_err(|_| (PfStatus::InvalidUtf8, format!("{what} is not valid UTF-8")))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), (PfStatus, String)> {
    if p.is_null() {
        Err((PfStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

/// Creates a built-in algebra (`A1`, `A2`, `A3`, `A-star`, `A1-star`, `A-trivial`).
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_algebra_builtin(name: *const c_char, out: *mut *mut PfAlgebra) -> PfStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = builtin(read_str(name, "name")?).map_err(lib)?;
        *out = Box::into_raw(Box::new(PfAlgebra { spec }));
        Ok(())
    })
}

/// Creates an algebra from a JSON spec.
///
/// # Safety
/// `json` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn pf_algebra_from_json(json: *const c_char, out: *mut *mut PfAlgebra) -> PfStatus {
    guard(|| {
        non_null(out, "out")?;
        let spec = AlgebraSpec::from_json(read_str(json, "json")?).map_err(lib)?;
        if !spec.validate().all_pass() {
            return Err((PfStatus::InvalidSpec, "algebra spec fails validation".into()));
        }
        *out = Box::into_raw(Box::new(PfAlgebra { spec }));
        Ok(())
    })
}

/// Releases an algebra; null is ignored.
///
/// # Safety
/// `alg` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pf_algebra_free(alg: *mut PfAlgebra) {
    if !alg.is_null() {
        drop(Box::from_raw(alg));
    }
}

/// Dimension of the algebra.
///
/// # Safety
/// `alg` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_algebra_dim(alg: *const PfAlgebra, out: *mut usize) -> PfStatus {
    guard(|| {
        non_null(alg, "algebra")?;
        non_null(out, "out")?;
        *out = (*alg).spec.dim();
        Ok(())
    })
}

/// Decides whether a polynomial (in the algebra's own mode) is an identity;
/// writes 1 or 0 to `holds`.
///
/// # Safety
/// `alg`, `poly` and `holds` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_is_identity(alg: *const PfAlgebra, poly: *const c_char, holds: *mut i32) -> PfStatus {
    guard(|| {
        non_null(alg, "algebra")?;
        non_null(holds, "holds")?;
        let spec = &(*alg).spec;
        let p = parse_polynomial(read_str(poly, "poly")?, spec.mode()).map_err(lib)?;
        *holds = i32::from(is_identity(spec, &p).map_err(lib)?.holds());
        Ok(())
    })
}

/// Dimension of P/Id for the signature `counts[0..len]`.
///
/// # Safety
/// `counts` must point to `len` values; `alg` and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn pf_quotient_dim(alg: *const PfAlgebra, counts: *const usize, len: usize, out: *mut usize) -> PfStatus {
    guard(|| {
        non_null(alg, "algebra")?;
        non_null(out, "out")?;
        if len > 0 {
            non_null(counts, "counts")?;
        }
        let spec = &(*alg).spec;
        let c = if len == 0 { &[][..] } else { std::slice::from_raw_parts(counts, len) };
        let sig = Signature::new(spec.mode(), c).map_err(lib)?;
        *out = Quotient::new(spec, &sig).map_err(lib)?.dim();
        Ok(())
    })
}

/// Multiplicity of a shape tuple written like `(3,1)|(1)`.
///
/// # Safety
/// `alg`, `shapes` and `out` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_multiplicity(alg: *const PfAlgebra, shapes: *const c_char, out: *mut usize) -> PfStatus {
    guard(|| {
        non_null(alg, "algebra")?;
        non_null(out, "out")?;
        let parts = read_str(shapes, "shapes")?.split('|').map(|s| s.parse::<Partition>()).collect::<Result<Vec<_>, _>>().map_err(lib)?;
        *out = multiplicity(&(*alg).spec, &parts).map_err(lib)?.multiplicity;
        Ok(())
    })
}

/// Verifies a bundled generator set against its algebra through `max_degree`;
/// writes 1 or 0 to `passed` and the verified degree to `through`.
///
/// # Safety
/// `name`, `passed` and `through` must be valid pointers.
#[no_mangle]
pub unsafe extern "C" fn pf_verify_bundled(name: *const c_char, max_degree: usize, passed: *mut i32, through: *mut usize) -> PfStatus {
    guard(|| {
        non_null(passed, "passed")?;
        non_null(through, "through")?;
        let set = GeneratorSet::bundled(read_str(name, "name")?).map_err(lib)?;
        let spec = set.algebra_spec().map_err(lib)?;
        let report = verify_basis(&spec, &set.generators, set.mode, max_degree).map_err(lib)?;
        *passed = i32::from(report.verdict());
        *through = report.verified_through();
        Ok(())
    })
}

/// Last error message of this thread, or null. Free with [`pf_string_free`].
#[no_mangle]
pub extern "C" fn pf_last_error_message() -> *mut c_char {
    LAST_ERROR.with(|e| match e.borrow().as_ref() {
        Some(m) => CString::new(m.replace('\0', " ")).map_or(std::ptr::null_mut(), CString::into_raw),
        None => std::ptr::null_mut(),
    })
}

/// Releases a string returned by the library; null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn pf_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
