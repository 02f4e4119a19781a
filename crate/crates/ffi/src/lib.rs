//! C ABI for `chromsym`.
//!
//! Objects cross the boundary as opaque handles created by `cs_*_parse` or
//! `cs_*_from_*` and released by the matching `cs_*_free`. Every fallible
//! call returns a [`CsStatus`]; on failure the output pointer is untouched
//! and [`cs_last_error_message`] describes the error on the calling thread.
//! Strings returned through `char **` are owned by the caller and released
//! with [`cs_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use chromsym::chromatic::{chromatic_poly, csf_cotree, csf_powersum, csf_stable, ChromaticError};
use chromsym::cotree::{from_cograph, ConstructExpr, CotreeError};
use chromsym::{Basis, GraphError, SimpleGraph, SymFunc};
use num_traits::ToPrimitive;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsStatus {
    Ok = 0,
    NullArgument = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    NotACograph = 4,
    GuardExceeded = 5,
    CapacityExceeded = 6,
    InvalidArgument = 7,
    Overflow = 8,
    Panic = 9,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CsBasis {
    M = 0,
    MTilde = 1,
    P = 2,
    E = 3,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct CsClassFlags {
    pub threshold: bool,
    pub trivially_perfect: bool,
    pub cograph: bool,
    pub claw_free: bool,
    pub triangle_free_complement: bool,
}

/// Opaque simple graph.
pub struct CsGraph(SimpleGraph);

/// Opaque construction expression.
pub struct CsExpr(ConstructExpr);

/// Opaque symmetric function.
pub struct CsSymFunc(SymFunc);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(CsStatus, String);

impl From<GraphError> for Failure {
    fn from(e: GraphError) -> Self {
        let status = match e {
            GraphError::Capacity(_) => CsStatus::CapacityExceeded,
            GraphError::SizeGuard { .. } => CsStatus::GuardExceeded,
            GraphError::Parse(_) => CsStatus::ParseError,
            _ => CsStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<CotreeError> for Failure {
    fn from(e: CotreeError) -> Self {
        match e {
            CotreeError::Graph(g) => g.into(),
            CotreeError::Parse(_) => Failure(CsStatus::ParseError, e.to_string()),
            CotreeError::NotACograph | CotreeError::EmptyGraph => Failure(CsStatus::NotACograph, e.to_string()),
            CotreeError::EnumerationLimit { .. } => Failure(CsStatus::GuardExceeded, e.to_string()),
            CotreeError::ComplementNode => Failure(CsStatus::InvalidArgument, e.to_string()),
        }
    }
}

impl From<ChromaticError> for Failure {
    fn from(e: ChromaticError) -> Self {
        match e {
            ChromaticError::Graph(g) => g.into(),
            ChromaticError::Guard { .. } => Failure(CsStatus::GuardExceeded, e.to_string()),
            ChromaticError::ComplementNode => Failure(CsStatus::InvalidArgument, e.to_string()),
        }
    }
}

fn set_last_error(message: &str) {
    let text = CString::new(message.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|slot| *slot.borrow_mut() = text);
}

/// Runs `f`, recording failures and converting panics into `CsStatus::Panic`.
fn guarded(f: impl FnOnce() -> Result<(), Failure>) -> CsStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_last_error("");
            CsStatus::Ok
        }
        Ok(Err(Failure(status, message))) => {
            set_last_error(&message);
            status
        }
        Err(_) => {
            set_last_error("internal panic");
            CsStatus::Panic
        }
    }
}

fn null() -> Failure {
    Failure(CsStatus::NullArgument, "null pointer argument".into())
}

unsafe fn text_arg<'a>(text: *const c_char) -> Result<&'a str, Failure> {
    if text.is_null() {
        return Err(null());
    }
    CStr::from_ptr(text)
        .to_str()
        .map_err(|e| Failure(CsStatus::InvalidUtf8, e.to_string()))
}

unsafe fn handle_arg<'a, T>(p: *const T) -> Result<&'a T, Failure> {
    p.as_ref().ok_or_else(null)
}

/// Basis arguments arrive as plain integers holding a `CsBasis` value.
fn basis_arg(b: u32) -> Result<Basis, Failure> {
    match b {
        0 => Ok(Basis::M),
        1 => Ok(Basis::MTilde),
        2 => Ok(Basis::P),
        3 => Ok(Basis::E),
        _ => Err(Failure(CsStatus::InvalidArgument, format!("unknown basis {b}"))),
    }
}

unsafe fn write_out<T>(out: *mut *mut T, value: T) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    *out = Box::into_raw(Box::new(value));
    Ok(())
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(null());
    }
    let c = CString::new(s).map_err(|e| Failure(CsStatus::InvalidArgument, e.to_string()))?;
    *out = c.into_raw();
    Ok(())
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next `cs_*` call on the same thread.
#[no_mangle]
pub extern "C" fn cs_last_error_message() -> *const c_char {
    LAST_ERROR.with(|slot| slot.borrow().as_ptr())
}

/// # Safety
/// `s` is null or was returned by this library and not yet freed.
#[no_mangle]
pub unsafe extern "C" fn cs_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Parses `n=<count>; edges=u-v,...`.
///
/// # Safety
/// `text` is null or NUL-terminated; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_parse(text: *const c_char, out: *mut *mut CsGraph) -> CsStatus {
    guarded(|| {
        let g: SimpleGraph = text_arg(text)?.parse()?;
        write_out(out, CsGraph(g))
    })
}

/// # Safety
/// `expr` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_from_expr(expr: *const CsExpr, out: *mut *mut CsGraph) -> CsStatus {
    guarded(|| {
        let g = handle_arg(expr)?.0.to_graph()?;
        write_out(out, CsGraph(g))
    })
}

/// # Safety
/// `g` is null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_free(g: *mut CsGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` is null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_vertex_count(g: *const CsGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.vertex_count())
}

/// # Safety
/// `g` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_to_string(g: *const CsGraph, out: *mut *mut c_char) -> CsStatus {
    guarded(|| write_string(out, handle_arg(g)?.0.to_string()))
}

/// # Safety
/// `g` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_classify(g: *const CsGraph, out: *mut CsClassFlags) -> CsStatus {
    guarded(|| {
        let flags = handle_arg(g)?.0.classify();
        let out = out.as_mut().ok_or_else(null)?;
        *out = CsClassFlags {
            threshold: flags.threshold,
            trivially_perfect: flags.trivially_perfect,
            cograph: flags.cograph,
            claw_free: flags.claw_free,
            triangle_free_complement: flags.triangle_free_complement,
        };
        Ok(())
    })
}

/// Chromatic polynomial evaluated at `t`.
///
/// # Safety
/// `g` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_graph_chromatic_eval(g: *const CsGraph, t: i64, out: *mut i64) -> CsStatus {
    guarded(|| {
        let value = chromatic_poly(&handle_arg(g)?.0)?.eval_int(t);
        let out = out.as_mut().ok_or_else(null)?;
        *out = value
            .to_integer()
            .to_i64()
            .ok_or_else(|| Failure(CsStatus::Overflow, format!("{value} does not fit in 64 bits")))?;
        Ok(())
    })
}

/// Parses a construction expression such as `J(U(K2,K1),K3)`.
///
/// # Safety
/// `text` is null or NUL-terminated; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_expr_parse(text: *const c_char, out: *mut *mut CsExpr) -> CsStatus {
    guarded(|| {
        let e = ConstructExpr::parse(text_arg(text)?).map_err(CotreeError::from)?;
        write_out(out, CsExpr(e))
    })
}

/// Canonical cotree of a cograph; `CS_STATUS_NOT_A_COGRAPH` otherwise.
///
/// # Safety
/// `g` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_expr_from_graph(g: *const CsGraph, out: *mut *mut CsExpr) -> CsStatus {
    guarded(|| {
        let e = from_cograph(&handle_arg(g)?.0)?;
        write_out(out, CsExpr(e))
    })
}

/// # Safety
/// `e` is null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_expr_free(e: *mut CsExpr) {
    if !e.is_null() {
        drop(Box::from_raw(e));
    }
}

/// Canonical text using only `K1`, `U(..)` and `J(..)`; with `sugar`,
/// all-leaf nodes print as `K<m>` / `E<m>`.
///
/// # Safety
/// `e` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_expr_canonical_string(e: *const CsExpr, sugar: bool, out: *mut *mut c_char) -> CsStatus {
    guarded(|| {
        let canonical = handle_arg(e)?.0.canonicalize();
        let text = if sugar { canonical.to_sugared_string() } else { canonical.to_string() };
        write_string(out, text)
    })
}

/// Chromatic symmetric function of a graph in `basis` (a `CsBasis` value);
/// the p basis uses the edge-subset expansion.
///
/// # Safety
/// `g` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_csf_graph(g: *const CsGraph, basis: u32, out: *mut *mut CsSymFunc) -> CsStatus {
    guarded(|| {
        let g = &handle_arg(g)?.0;
        let x = match basis_arg(basis)? {
            Basis::P => csf_powersum(g)?,
            b => csf_stable(g)?.to_basis(b),
        };
        write_out(out, CsSymFunc(x))
    })
}

/// Chromatic symmetric function of an expression by cotree recursion, in
/// `basis` (a `CsBasis` value).
///
/// # Safety
/// `e` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_csf_expr(e: *const CsExpr, basis: u32, out: *mut *mut CsSymFunc) -> CsStatus {
    guarded(|| {
        let x = csf_cotree(&handle_arg(e)?.0.canonicalize())?.to_basis(basis_arg(basis)?);
        write_out(out, CsSymFunc(x))
    })
}

/// # Safety
/// `f` is null or a live handle that is not used afterwards.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_free(f: *mut CsSymFunc) {
    if !f.is_null() {
        drop(Box::from_raw(f));
    }
}

/// One line per term, e.g. `24 * e[4]`.
///
/// # Safety
/// `f` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_to_text(f: *const CsSymFunc, out: *mut *mut c_char) -> CsStatus {
    guarded(|| write_string(out, handle_arg(f)?.0.to_text()))
}

/// # Safety
/// `f` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_to_json(f: *const CsSymFunc, out: *mut *mut c_char) -> CsStatus {
    guarded(|| {
        let json = serde_json::to_string(&handle_arg(f)?.0)
            .map_err(|e| Failure(CsStatus::InvalidArgument, e.to_string()))?;
        write_string(out, json)
    })
}

/// Basis-independent equality; false when either handle is null.
///
/// # Safety
/// `a` and `b` are null or live handles.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_equal(a: *const CsSymFunc, b: *const CsSymFunc) -> bool {
    match (a.as_ref(), b.as_ref()) {
        (Some(a), Some(b)) => a.0 == b.0,
        _ => false,
    }
}

/// Re-expresses `f` in `basis` as a new handle.
///
/// # Safety
/// `f` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_to_basis(f: *const CsSymFunc, basis: u32, out: *mut *mut CsSymFunc) -> CsStatus {
    guarded(|| {
        let x = handle_arg(f)?.0.to_basis(basis_arg(basis)?);
        write_out(out, CsSymFunc(x))
    })
}

/// True when every e-basis coefficient is non-negative.
///
/// # Safety
/// `f` is null or a live handle; `out` is null or writable.
#[no_mangle]
pub unsafe extern "C" fn cs_symfunc_is_e_positive(f: *const CsSymFunc, out: *mut bool) -> CsStatus {
    guarded(|| {
        let positive = handle_arg(f)?.0.is_e_positive();
        *out.as_mut().ok_or_else(null)? = positive;
        Ok(())
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    fn last_error() -> String {
        unsafe { CStr::from_ptr(cs_last_error_message()) }.to_string_lossy().into_owned()
    }

    #[test]
    fn null_arguments_are_reported() {
        let mut g = ptr::null_mut();
        assert_eq!(unsafe { cs_graph_parse(ptr::null(), &mut g) }, CsStatus::NullArgument);
        assert!(g.is_null());
        assert_eq!(last_error(), "null pointer argument");
        assert_eq!(unsafe { cs_graph_vertex_count(ptr::null()) }, 0);
        assert!(!unsafe { cs_symfunc_equal(ptr::null(), ptr::null()) });
    }

    #[test]
    fn error_codes_follow_library_errors() {
        let mut g = ptr::null_mut();
        let text = CString::new("n=65; edges=").unwrap();
        assert_eq!(unsafe { cs_graph_parse(text.as_ptr(), &mut g) }, CsStatus::CapacityExceeded);
        let text = CString::new("n=4; edges=0-1,1-2,2-3").unwrap();
        assert_eq!(unsafe { cs_graph_parse(text.as_ptr(), &mut g) }, CsStatus::Ok);
        assert_eq!(last_error(), "");
        let mut e = ptr::null_mut();
        assert_eq!(unsafe { cs_expr_from_graph(g, &mut e) }, CsStatus::NotACograph);
        assert!(e.is_null());
        unsafe { cs_graph_free(g) };
    }
}
