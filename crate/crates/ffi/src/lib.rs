//! C ABI for `tdcrit`.
//!
//! Graphs are opaque `TdcGraph` handles owned by the caller and released
//! with `tdc_graph_free`. Every fallible function returns a `TdcStatus`;
//! on failure `tdc_last_error_message` describes the most recent error on
//! the calling thread. Strings returned through `char **` out-parameters
//! are released with `tdc_string_free`.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use tdcrit::criticality::is_gamma_t_critical;
use tdcrit::families::{existence, ExistenceStatus, FamilyKind, FamilySpec};
use tdcrit::io::{parse_graph, to_graph6};
use tdcrit::solver::total_domination_number;
use tdcrit::Graph;

/// Opaque graph handle.
pub struct TdcGraph(Graph);

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Parse = 3,
    /// The graph has no total dominating set (empty or an isolated vertex).
    Infeasible = 4,
    Panic = 5,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TdcExistence {
    Exists = 0,
    NotExists = 1,
    Open = 2,
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: impl Into<String>) {
    let msg = msg.into().replace('\0', " ");
    LAST_ERROR.with(|e| *e.borrow_mut() = CString::new(msg).expect("no interior nul"));
}

fn fail(status: TdcStatus, msg: impl Into<String>) -> TdcStatus {
    set_error(msg);
    status
}

/// Runs `f`, turning a panic into `TdcStatus::Panic`.
fn guard(f: impl FnOnce() -> TdcStatus) -> TdcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(_) => fail(TdcStatus::Panic, "internal panic"),
    }
}

unsafe fn str_arg<'a>(p: *const c_char) -> Result<&'a str, TdcStatus> {
    if p.is_null() {
        return Err(fail(TdcStatus::NullPointer, "null string argument"));
    }
    CStr::from_ptr(p)
        .to_str()
        .map_err(|_| fail(TdcStatus::Parse, "string argument is not UTF-8"))
}

unsafe fn graph_arg<'a>(p: *const TdcGraph) -> Result<&'a Graph, TdcStatus> {
    p.as_ref()
        .map(|g| &g.0)
        .ok_or_else(|| fail(TdcStatus::NullPointer, "null graph handle"))
}

unsafe fn put_graph(out: *mut *mut TdcGraph, g: Graph) -> TdcStatus {
    *out = Box::into_raw(Box::new(TdcGraph(g)));
    TdcStatus::Ok
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> TdcStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TdcStatus::Ok
        }
        Err(_) => fail(TdcStatus::Panic, "string contains a nul byte"),
    }
}

macro_rules! try_status {
    ($e:expr) => {
        match $e {
            Ok(v) => v,
            Err(s) => return s,
        }
    };
}

/// A graph with `n` vertices and no edges.
#[no_mangle]
pub extern "C" fn tdc_graph_new(n: usize) -> *mut TdcGraph {
    Box::into_raw(Box::new(TdcGraph(Graph::empty(n))))
}

/// # Safety
/// `g` must be null or a handle from this library that has not been freed.
#[no_mangle]
pub unsafe extern "C" fn tdc_graph_free(g: *mut TdcGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle.
#[no_mangle]
pub unsafe extern "C" fn tdc_graph_add_edge(g: *mut TdcGraph, i: usize, j: usize) -> TdcStatus {
    guard(|| {
        let Some(g) = g.as_mut() else {
            return fail(TdcStatus::NullPointer, "null graph handle");
        };
        match g.0.add_edge(i, j) {
            Ok(()) => TdcStatus::Ok,
            Err(e) => fail(TdcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn tdc_graph_order(g: *const TdcGraph) -> usize {
    g.as_ref().map_or(0, |g| g.0.order())
}

/// Parses one graph in graph6 or edge-list form.
///
/// # Safety
/// `text` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tdc_graph_parse(
    text: *const c_char,
    out: *mut *mut TdcGraph,
) -> TdcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TdcStatus::NullPointer, "null out pointer");
        }
        let s = try_status!(str_arg(text));
        match parse_graph(s) {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdcStatus::Parse, e.to_string()),
        }
    })
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer. The string must be
/// released with `tdc_string_free`.
#[no_mangle]
pub unsafe extern "C" fn tdc_graph_to_graph6(
    g: *const TdcGraph,
    out: *mut *mut c_char,
) -> TdcStatus {
    guard(|| {
        let g = try_status!(graph_arg(g));
        if out.is_null() {
            return fail(TdcStatus::NullPointer, "null out pointer");
        }
        put_string(out, to_graph6(g))
    })
}

/// # Safety
/// `s` must be null or a string returned by this library.
#[no_mangle]
pub unsafe extern "C" fn tdc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Total domination number of `g`.
///
/// When `witness` is non-null it receives a minimum total dominating set
/// (ascending ids) if `witness_cap` is large enough; `witness_len` (if
/// non-null) always receives the set's size. A too-small buffer yields
/// `InvalidArgument` with `value` and `witness_len` still filled in.
///
/// # Safety
/// `g` must be a live handle, `value` a valid pointer, and `witness` point
/// to at least `witness_cap` writable elements when non-null.
#[no_mangle]
pub unsafe extern "C" fn tdc_gamma_t(
    g: *const TdcGraph,
    value: *mut usize,
    witness: *mut usize,
    witness_cap: usize,
    witness_len: *mut usize,
) -> TdcStatus {
    guard(|| {
        let g = try_status!(graph_arg(g));
        if value.is_null() {
            return fail(TdcStatus::NullPointer, "null value pointer");
        }
        let r = total_domination_number(g);
        let (Some(k), Some(set)) = (r.value.finite(), r.witness) else {
            return fail(TdcStatus::Infeasible, "graph has no total dominating set");
        };
        *value = k;
        if !witness_len.is_null() {
            *witness_len = k;
        }
        if !witness.is_null() {
            if witness_cap < k {
                return fail(TdcStatus::InvalidArgument, "witness buffer too small");
            }
            for (i, v) in set.iter().enumerate() {
                *witness.add(i) = v;
            }
        }
        TdcStatus::Ok
    })
}

/// Criticality verdict. `gamma_t` may be null.
///
/// # Safety
/// `g` must be a live handle and `critical` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tdc_is_critical(
    g: *const TdcGraph,
    critical: *mut bool,
    gamma_t: *mut usize,
) -> TdcStatus {
    guard(|| {
        let g = try_status!(graph_arg(g));
        if critical.is_null() {
            return fail(TdcStatus::NullPointer, "null out pointer");
        }
        match is_gamma_t_critical(g) {
            Ok(r) => {
                *critical = r.is_critical();
                if !gamma_t.is_null() {
                    *gamma_t = r.gamma();
                }
                TdcStatus::Ok
            }
            Err(e) => fail(TdcStatus::Infeasible, e.to_string()),
        }
    })
}

/// Builds a family member; `family` is a name such as `"four-odd"`.
///
/// # Safety
/// `family` must be a nul-terminated string and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tdc_construct(
    family: *const c_char,
    m: usize,
    delta: usize,
    out: *mut *mut TdcGraph,
) -> TdcStatus {
    guard(|| {
        if out.is_null() {
            return fail(TdcStatus::NullPointer, "null out pointer");
        }
        let name = try_status!(str_arg(family));
        let spec = name
            .parse::<FamilyKind>()
            .and_then(|k| FamilySpec::new(k, m, delta));
        match spec {
            Ok(spec) => put_graph(out, spec.build()),
            Err(e) => fail(TdcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Existence of an m-γt-critical graph of order Δ + m with δ ≥ 2.
/// `verdict` (if non-null) receives a description such as
/// `"Exists four-odd mainthm4"`, to be released with `tdc_string_free`.
///
/// # Safety
/// `status` must be a valid pointer; `verdict` null or valid.
#[no_mangle]
pub unsafe extern "C" fn tdc_existence(
    m: usize,
    delta: usize,
    status: *mut TdcExistence,
    verdict: *mut *mut c_char,
) -> TdcStatus {
    guard(|| {
        if status.is_null() {
            return fail(TdcStatus::NullPointer, "null status pointer");
        }
        let v = existence(m, delta);
        *status = match v.status {
            ExistenceStatus::Exists => TdcExistence::Exists,
            ExistenceStatus::NotExists => TdcExistence::NotExists,
            ExistenceStatus::Open => TdcExistence::Open,
        };
        if verdict.is_null() {
            TdcStatus::Ok
        } else {
            put_string(verdict, v.to_string())
        }
    })
}

/// Vertex amalgamation of `g1` at `v1` with `g2` at `v2`; the merged vertex
/// is 0.
///
/// # Safety
/// `g1`, `g2` must be live handles and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn tdc_amalgamate(
    g1: *const TdcGraph,
    v1: usize,
    g2: *const TdcGraph,
    v2: usize,
    out: *mut *mut TdcGraph,
) -> TdcStatus {
    guard(|| {
        let a = try_status!(graph_arg(g1));
        let b = try_status!(graph_arg(g2));
        if out.is_null() {
            return fail(TdcStatus::NullPointer, "null out pointer");
        }
        match Graph::vertex_amalgamation(a, v1, b, v2) {
            Ok(g) => put_graph(out, g),
            Err(e) => fail(TdcStatus::InvalidArgument, e.to_string()),
        }
    })
}

/// Message for the last failure on this thread. Valid until the next
/// failing call on the same thread; never null.
#[no_mangle]
pub extern "C" fn tdc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Library version, a static string.
#[no_mangle]
pub extern "C" fn tdc_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr().cast()
}
