//! C ABI over `trungcd`.
//!
//! Graphs and generated families cross the boundary as opaque handles owned
//! by the caller and released with the matching `*_free` function. Strings
//! returned through `out` parameters are NUL-terminated, heap-allocated by
//! Rust, and released with [`trungcd_string_free`]. Every fallible call
//! returns a [`TrungcdStatus`]; on failure, [`trungcd_last_error`] holds a
//! message for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};

use trungcd::error::{CheckError, GraphError, ParseError, TrungError};
use trungcd::{
    generate_girth4_family, ind_poly_enum, is_gorenstein_over_q, parse_edge_list, parse_graph6, run_checks, trung,
    write_edge_list, write_graph6, CheckSelection, Graph, Rational, Strategy, TrungResult, Verdict,
};

/// Status codes. Values 1-3 match the CLI exit codes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum TrungcdStatus {
    Ok = 0,
    ParseError = 1,
    DomainError = 2,
    ResourceError = 3,
    NullPointer = 4,
    InvalidUtf8 = 5,
}

/// Opaque graph handle.
pub struct TrungcdGraph {
    inner: Graph,
}

/// Opaque handle to the intermediate graphs of a generated family.
pub struct TrungcdFamily {
    members: Vec<TrungResult>,
}

/// Indices of the vertices added by the construction, plus the chosen vertex.
#[repr(C)]
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub struct TrungcdLabels {
    pub a: usize,
    pub b: usize,
    pub c: usize,
    pub v: usize,
}

pub const TRUNGCD_CHECK_WELL_COVERED: u32 = 1;
pub const TRUNGCD_CHECK_W2: u32 = 1 << 1;
pub const TRUNGCD_CHECK_EULERIAN: u32 = 1 << 2;
pub const TRUNGCD_CHECK_CM: u32 = 1 << 3;
pub const TRUNGCD_CHECK_GORENSTEIN: u32 = 1 << 4;
pub const TRUNGCD_CHECK_CHARNEY_DAVIS: u32 = 1 << 5;
pub const TRUNGCD_CHECK_ALL: u32 = (1 << 6) - 1;

pub const TRUNGCD_VERDICT_FALSE: i32 = 0;
pub const TRUNGCD_VERDICT_TRUE: i32 = 1;
pub const TRUNGCD_VERDICT_NOT_APPLICABLE: i32 = -1;

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn fail(status: TrungcdStatus, message: impl Into<String>) -> TrungcdStatus {
    let msg = CString::new(message.into().replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
    status
}

fn parse_status(e: ParseError) -> TrungcdStatus {
    let status = match e {
        ParseError::Graph6TooLarge(_) => TrungcdStatus::ResourceError,
        _ => TrungcdStatus::ParseError,
    };
    fail(status, e.to_string())
}

fn graph_status(e: GraphError) -> TrungcdStatus {
    let status = match e {
        GraphError::TooManyVertices(_) => TrungcdStatus::ResourceError,
        _ => TrungcdStatus::DomainError,
    };
    fail(status, e.to_string())
}

fn trung_status(e: TrungError) -> TrungcdStatus {
    match e {
        TrungError::Graph(g) => graph_status(g),
        other => fail(TrungcdStatus::DomainError, other.to_string()),
    }
}

fn check_status(e: CheckError) -> TrungcdStatus {
    fail(TrungcdStatus::ResourceError, e.to_string())
}

unsafe fn read_str<'a>(text: *const c_char) -> Result<&'a str, TrungcdStatus> {
    if text.is_null() {
        return Err(fail(TrungcdStatus::NullPointer, "null string argument"));
    }
    // SAFETY: caller passes a NUL-terminated string that outlives this call.
    CStr::from_ptr(text)
        .to_str()
        .map_err(|_| fail(TrungcdStatus::InvalidUtf8, "string argument is not UTF-8"))
}

unsafe fn put_string(out: *mut *mut c_char, s: String) -> TrungcdStatus {
    match CString::new(s) {
        Ok(c) => {
            *out = c.into_raw();
            TrungcdStatus::Ok
        }
        Err(_) => fail(TrungcdStatus::InvalidUtf8, "output contains an interior NUL"),
    }
}

unsafe fn put_graph(out: *mut *mut TrungcdGraph, graph: Graph) -> TrungcdStatus {
    *out = Box::into_raw(Box::new(TrungcdGraph { inner: graph }));
    TrungcdStatus::Ok
}

macro_rules! non_null {
    ($($p:expr),+) => {
        $(if $p.is_null() {
            return fail(TrungcdStatus::NullPointer, concat!("null argument: ", stringify!($p)));
        })+
    };
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn trungcd_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr() as *const c_char
}

/// Message for the most recent failure on this thread. The pointer stays
/// valid until the next failing call on the same thread.
#[no_mangle]
pub extern "C" fn trungcd_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses the edge-list text format.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_from_edge_list(
    text: *const c_char,
    out: *mut *mut TrungcdGraph,
) -> TrungcdStatus {
    non_null!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_edge_list(text.as_bytes()) {
        Ok(doc) => put_graph(out, doc.graph),
        Err(e) => parse_status(e),
    }
}

/// Parses one short-form graph6 record.
///
/// # Safety
/// `text` must be a NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_from_graph6(text: *const c_char, out: *mut *mut TrungcdGraph) -> TrungcdStatus {
    non_null!(out);
    let text = match read_str(text) {
        Ok(t) => t,
        Err(s) => return s,
    };
    match parse_graph6(text.as_bytes()) {
        Ok(g) => put_graph(out, g),
        Err(e) => parse_status(e),
    }
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`
/// (`u0, v0, u1, v1, ...`).
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable values (it may be null
/// when `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_from_edges(
    n: usize,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut TrungcdGraph,
) -> TrungcdStatus {
    non_null!(out);
    if edge_count > 0 && edges.is_null() {
        return fail(TrungcdStatus::NullPointer, "null edge array");
    }
    let flat: &[u32] = if edge_count == 0 {
        &[]
    } else {
        std::slice::from_raw_parts(edges, 2 * edge_count)
    };
    let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0] as usize, p[1] as usize)).collect();
    match Graph::from_edges(n, &pairs) {
        Ok(g) => put_graph(out, g),
        Err(e) => graph_status(e),
    }
}

/// Releases a graph handle. Null is ignored.
///
/// # Safety
/// `graph` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_free(graph: *mut TrungcdGraph) {
    if !graph.is_null() {
        drop(Box::from_raw(graph));
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_vertex_count(graph: *const TrungcdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.n())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_edge_count(graph: *const TrungcdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.edge_count())
}

/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trungcd_independence_number(graph: *const TrungcdGraph) -> usize {
    graph.as_ref().map_or(0, |g| g.inner.independence_number())
}

/// Canonical edge-list text.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_to_edge_list(
    graph: *const TrungcdGraph,
    out: *mut *mut c_char,
) -> TrungcdStatus {
    non_null!(graph, out);
    put_string(out, write_edge_list(&(*graph).inner))
}

/// graph6 record without a trailing newline.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_graph_to_graph6(graph: *const TrungcdGraph, out: *mut *mut c_char) -> TrungcdStatus {
    non_null!(graph, out);
    match write_graph6(&(*graph).inner) {
        Ok(bytes) => put_string(out, String::from_utf8(bytes).expect("graph6 is ASCII")),
        Err(e) => parse_status(e),
    }
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trungcd_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds `Tr(H, v)`. `labels` may be null.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable; `labels` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_trung(
    graph: *const TrungcdGraph,
    v: usize,
    out: *mut *mut TrungcdGraph,
    labels: *mut TrungcdLabels,
) -> TrungcdStatus {
    non_null!(graph, out);
    match trung(&(*graph).inner, v) {
        Ok(tr) => {
            if let Some(l) = labels.as_mut() {
                *l = TrungcdLabels {
                    a: tr.a,
                    b: tr.b,
                    c: tr.c,
                    v: tr.v,
                };
            }
            put_graph(out, tr.graph)
        }
        Err(e) => trung_status(e),
    }
}

/// Generates the girth-4 family from `C5`. `random == false` picks the
/// smallest degree-2 vertex each step and ignores `seed`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_family_generate(
    steps: usize,
    random: bool,
    seed: u64,
    out: *mut *mut TrungcdFamily,
) -> TrungcdStatus {
    non_null!(out);
    let strategy = if random {
        Strategy::Random { seed }
    } else {
        Strategy::First
    };
    match generate_girth4_family(steps, strategy) {
        Ok(members) => {
            *out = Box::into_raw(Box::new(TrungcdFamily { members }));
            TrungcdStatus::Ok
        }
        Err(e) => trung_status(e),
    }
}

/// # Safety
/// `family` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn trungcd_family_len(family: *const TrungcdFamily) -> usize {
    family.as_ref().map_or(0, |f| f.members.len())
}

/// Copies member `index` into a new graph handle. `labels` may be null.
///
/// # Safety
/// `family` must be a live handle; `out` must be writable; `labels` must be
/// null or writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_family_member(
    family: *const TrungcdFamily,
    index: usize,
    out: *mut *mut TrungcdGraph,
    labels: *mut TrungcdLabels,
) -> TrungcdStatus {
    non_null!(family, out);
    let members = &(*family).members;
    let Some(m) = members.get(index) else {
        return fail(TrungcdStatus::DomainError, format!("member index {index} out of range"));
    };
    if let Some(l) = labels.as_mut() {
        *l = TrungcdLabels {
            a: m.a,
            b: m.b,
            c: m.c,
            v: m.v,
        };
    }
    put_graph(out, m.graph.clone())
}

/// # Safety
/// `family` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn trungcd_family_free(family: *mut TrungcdFamily) {
    if !family.is_null() {
        drop(Box::from_raw(family));
    }
}

/// Independence polynomial as a JSON array of decimal strings.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_ind_poly_json(graph: *const TrungcdGraph, out: *mut *mut c_char) -> TrungcdStatus {
    non_null!(graph, out);
    let p = ind_poly_enum(&(*graph).inner);
    put_string(out, serde_json::to_string(&p).expect("polynomial serializes"))
}

/// `I(G, num/den)` as `"num/den"` in lowest terms.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_ind_poly_eval(
    graph: *const TrungcdGraph,
    num: i64,
    den: i64,
    out: *mut *mut c_char,
) -> TrungcdStatus {
    non_null!(graph, out);
    if den == 0 {
        return fail(TrungcdStatus::DomainError, "zero denominator");
    }
    let q = Rational::new(num.into(), den.into());
    let value = ind_poly_enum(&(*graph).inner).eval(&q);
    put_string(out, trungcd::checks::rational_string(&value))
}

/// Runs the checks selected by `flags` (`TRUNGCD_CHECK_*`) and writes the
/// JSON report. `force` lifts the W2 vertex cap.
///
/// # Safety
/// `graph` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_check_json(
    graph: *const TrungcdGraph,
    flags: u32,
    force: bool,
    out: *mut *mut c_char,
) -> TrungcdStatus {
    non_null!(graph, out);
    let selection = CheckSelection {
        well_covered: flags & TRUNGCD_CHECK_WELL_COVERED != 0,
        w2: flags & TRUNGCD_CHECK_W2 != 0,
        eulerian: flags & TRUNGCD_CHECK_EULERIAN != 0,
        cm: flags & TRUNGCD_CHECK_CM != 0,
        gorenstein: flags & TRUNGCD_CHECK_GORENSTEIN != 0,
        charney_davis: flags & TRUNGCD_CHECK_CHARNEY_DAVIS != 0,
    };
    match run_checks(&(*graph).inner, selection, force) {
        Ok(report) => put_string(out, serde_json::to_string(&report).expect("report serializes")),
        Err(e) => check_status(e),
    }
}

/// Gorenstein over Q as a `TRUNGCD_VERDICT_*` value.
///
/// # Safety
/// `graph` must be a live handle; `verdict` must be writable.
#[no_mangle]
pub unsafe extern "C" fn trungcd_is_gorenstein(graph: *const TrungcdGraph, verdict: *mut i32) -> TrungcdStatus {
    non_null!(graph, verdict);
    *verdict = match is_gorenstein_over_q(&(*graph).inner) {
        Verdict::Holds => TRUNGCD_VERDICT_TRUE,
        Verdict::Fails { .. } => TRUNGCD_VERDICT_FALSE,
        Verdict::NotApplicable { .. } => TRUNGCD_VERDICT_NOT_APPLICABLE,
    };
    TrungcdStatus::Ok
}
