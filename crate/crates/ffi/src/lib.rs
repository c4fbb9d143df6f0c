//! C interface to `rwl-core`.
//!
//! Graphs are opaque `RwlGraph` handles released with `rwl_graph_free`.
//! Every fallible call returns an `RwlStatus`; on failure a message is
//! available from `rwl_last_error_message` on the same thread. Counts and
//! other results are returned as NUL-terminated decimal or JSON strings
//! owned by the caller and released with `rwl_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use rwl_core::formulas::{FormulaError, FormulaId};
use rwl_core::graph::{build_family, parse_graph, FamilyKind, FamilySpec, Graph};
use rwl_core::identities::{self, ClaimId, IdentityError, VerificationResult};
use rwl_core::walk::{self, WalkError, MAX_WALK_ORDER};

/// Result code of every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum RwlStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidUtf8 = 2,
    ParseError = 3,
    InvalidArgument = 4,
    TooLarge = 5,
    /// The check ran and did not pass; its report is still returned.
    VerificationFailed = 6,
    Internal = 7,
}

/// Opaque graph handle.
pub struct RwlGraph {
    graph: Graph,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

struct Failure(RwlStatus, String);

impl From<WalkError> for Failure {
    fn from(e: WalkError) -> Failure {
        let status = match e {
            WalkError::TooLarge { .. } => RwlStatus::TooLarge,
            _ => RwlStatus::InvalidArgument,
        };
        Failure(status, e.to_string())
    }
}

impl From<FormulaError> for Failure {
    fn from(e: FormulaError) -> Failure {
        Failure(RwlStatus::InvalidArgument, e.to_string())
    }
}

impl From<IdentityError> for Failure {
    fn from(e: IdentityError) -> Failure {
        Failure(RwlStatus::InvalidArgument, e.to_string())
    }
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

/// Runs `f`, records its error message, and turns panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<RwlStatus, Failure>) -> RwlStatus {
    set_error("");
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(status)) => status,
        Ok(Err(Failure(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            RwlStatus::Internal
        }
    }
}

unsafe fn read_str<'a>(p: *const c_char) -> Result<&'a str, Failure> {
    if p.is_null() {
        return Err(Failure(RwlStatus::NullPointer, "null string argument".into()));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| Failure(RwlStatus::InvalidUtf8, "argument is not valid UTF-8".into()))
}

unsafe fn graph_ref<'a>(g: *const RwlGraph) -> Result<&'a Graph, Failure> {
    g.as_ref()
        .map(|h| &h.graph)
        .ok_or_else(|| Failure(RwlStatus::NullPointer, "null graph handle".into()))
}

unsafe fn write_string(out: *mut *mut c_char, s: String) -> Result<(), Failure> {
    if out.is_null() {
        return Err(Failure(RwlStatus::NullPointer, "null output pointer".into()));
    }
    let c = CString::new(s).map_err(|_| Failure(RwlStatus::Internal, "interior NUL in result".into()))?;
    *out = c.into_raw();
    Ok(())
}

unsafe fn write_graph(out: *mut *mut RwlGraph, graph: Graph) -> Result<RwlStatus, Failure> {
    if out.is_null() {
        return Err(Failure(RwlStatus::NullPointer, "null output pointer".into()));
    }
    *out = Box::into_raw(Box::new(RwlGraph { graph }));
    Ok(RwlStatus::Ok)
}

/// Parses an edge list ("n m" header, then m lines "u v", `#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_parse(text: *const c_char, out: *mut *mut RwlGraph) -> RwlStatus {
    guard(|| {
        let text = read_str(text)?;
        let g = parse_graph(text).map_err(|e| Failure(RwlStatus::ParseError, e.to_string()))?;
        write_graph(out, g)
    })
}

/// Builds a family member. `kind` is one of `complete`, `path`, `cycle`,
/// `king`, `grid`; `m` is the row count of boards and must be 0 otherwise.
///
/// # Safety
/// `kind` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_family(kind: *const c_char, m: usize, n: usize, out: *mut *mut RwlGraph) -> RwlStatus {
    guard(|| {
        let invalid = |e: rwl_core::graph::GraphError| Failure(RwlStatus::InvalidArgument, e.to_string());
        let kind: FamilyKind = read_str(kind)?.parse().map_err(invalid)?;
        if m != 0 && !kind.is_board() {
            return Err(Failure(RwlStatus::InvalidArgument, format!("m applies only to boards, not {kind}")));
        }
        let spec = FamilySpec::new(kind, (m != 0).then_some(m), n).map_err(invalid)?;
        write_graph(out, build_family(&spec).map_err(invalid)?)
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_free(g: *mut RwlGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_order(g: *const RwlGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.order())
}

/// Edge count, or 0 for a null handle.
///
/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_edge_count(g: *const RwlGraph) -> usize {
    g.as_ref().map_or(0, |h| h.graph.edge_count())
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn rwl_graph_is_connected(g: *const RwlGraph) -> bool {
    g.as_ref().is_some_and(|h| h.graph.is_connected())
}

/// Number of random walk labelings by subset DP, as a decimal string.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_count_dp(g: *const RwlGraph, out: *mut *mut c_char) -> RwlStatus {
    guard(|| {
        let count = walk::count_labelings_dp(graph_ref(g)?)?;
        write_string(out, count.to_string())?;
        Ok(RwlStatus::Ok)
    })
}

/// Labelings whose first label goes to vertex `v`.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_count_started_at(g: *const RwlGraph, v: usize, out: *mut *mut c_char) -> RwlStatus {
    guard(|| {
        let count = walk::count_labelings_started_at(graph_ref(g)?, v)?;
        write_string(out, count.to_string())?;
        Ok(RwlStatus::Ok)
    })
}

/// Number of labelings found by simulating the walk; order at most 10.
///
/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_count_walk(g: *const RwlGraph, out: *mut *mut c_char) -> RwlStatus {
    guard(|| {
        let g = graph_ref(g)?;
        if g.order() > MAX_WALK_ORDER {
            return Err(WalkError::TooLarge { n: g.order(), limit: MAX_WALK_ORDER }.into());
        }
        write_string(out, walk::enumerate_labelings_walk(g)?.len().to_string())?;
        Ok(RwlStatus::Ok)
    })
}

/// Evaluates a named closed form at `n`. The result is an integer or a
/// reduced fraction `p/q`.
///
/// # Safety
/// `name` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_formula(name: *const c_char, n: usize, out: *mut *mut c_char) -> RwlStatus {
    guard(|| {
        let id: FormulaId = read_str(name)?.parse()?;
        write_string(out, id.evaluate(n)?.to_string())?;
        Ok(RwlStatus::Ok)
    })
}

/// Growth-rate sample points derived from a single bound.
fn ratio_points(n_max: usize) -> Vec<usize> {
    let mut ns: Vec<usize> = [16, 8, 4, 2, 1].iter().map(|d| n_max / d).filter(|&n| n >= 1).collect();
    ns.dedup();
    ns
}

fn run_claim(claim: ClaimId, n_max: usize) -> Result<VerificationResult, Failure> {
    Ok(match claim {
        ClaimId::GridForms | ClaimId::SumVsRecursion | ClaimId::InverseCentralSums | ClaimId::PublishedForms => identities::verify_exact_identity(claim, n_max)?,
        ClaimId::EgfGg2 => identities::verify_egf_gg2(n_max)?,
        ClaimId::OgfA087547 => identities::verify_ogf_a087547(n_max)?,
        ClaimId::EgfA182525 => identities::verify_egf_a182525(n_max)?,
        ClaimId::IntegralIdentities => identities::verify_integral_identities(n_max, 1e-8)?,
        ClaimId::Asymptotic => identities::check_asymptotic_gg2(&ratio_points(n_max))?,
        ClaimId::OracleEquivalence => {
            if n_max > MAX_WALK_ORDER {
                return Err(WalkError::TooLarge { n: n_max, limit: MAX_WALK_ORDER }.into());
            }
            identities::verify_oracle_equivalence(n_max, 200, 1)?
        }
    })
}

/// Runs a named check up to `n_max` and writes its JSON result to `out`.
///
/// `n_max` is the term count for the series checks, and for the growth-rate
/// check the points are `n_max/16, n_max/8, n_max/4, n_max/2, n_max`.
/// Returns `VerificationFailed` (with the report written) when the check
/// does not pass.
///
/// # Safety
/// `claim` must be a NUL-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn rwl_verify(claim: *const c_char, n_max: usize, out: *mut *mut c_char) -> RwlStatus {
    guard(|| {
        let claim: ClaimId = read_str(claim)?.parse()?;
        let result = run_claim(claim, n_max)?;
        let passed = result.passed();
        let json = result_json(&result)?;
        write_string(out, json)?;
        if passed {
            Ok(RwlStatus::Ok)
        } else {
            Err(Failure(RwlStatus::VerificationFailed, format!("{claim} failed")))
        }
    })
}

fn result_json(result: &VerificationResult) -> Result<String, Failure> {
    rwl_core::report::to_json(result).map_err(|e| Failure(RwlStatus::Internal, e.to_string()))
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn rwl_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Message for the last failed call on this thread, or an empty string.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn rwl_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Static name of a status code, e.g. `"RWL_STATUS_TOO_LARGE"`.
#[no_mangle]
pub extern "C" fn rwl_status_name(status: RwlStatus) -> *const c_char {
    let name: &'static CStr = match status {
        RwlStatus::Ok => c"RWL_STATUS_OK",
        RwlStatus::NullPointer => c"RWL_STATUS_NULL_POINTER",
        RwlStatus::InvalidUtf8 => c"RWL_STATUS_INVALID_UTF8",
        RwlStatus::ParseError => c"RWL_STATUS_PARSE_ERROR",
        RwlStatus::InvalidArgument => c"RWL_STATUS_INVALID_ARGUMENT",
        RwlStatus::TooLarge => c"RWL_STATUS_TOO_LARGE",
        RwlStatus::VerificationFailed => c"RWL_STATUS_VERIFICATION_FAILED",
        RwlStatus::Internal => c"RWL_STATUS_INTERNAL",
    };
    name.as_ptr()
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::ptr;

    #[test]
    fn ratio_points_are_increasing() {
        assert_eq!(ratio_points(400), [25, 50, 100, 200, 400]);
        assert_eq!(ratio_points(3), [1, 3]);
    }

    #[test]
    fn null_handles_are_harmless() {
        unsafe {
            rwl_graph_free(ptr::null_mut());
            rwl_string_free(ptr::null_mut());
            assert_eq!(rwl_graph_order(ptr::null()), 0);
        }
    }
}
