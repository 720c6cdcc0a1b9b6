//! C ABI for `pdom`.
//!
//! Objects cross the boundary as opaque handles (`PdomParts`, `PdomGraph`,
//! `PdomResult`) that the caller releases with the matching `*_free`
//! function. Every fallible call returns a [`PdomStatus`]; on failure the
//! message is available through [`pdom_last_error`] on the same thread.
//!
//! Variable-length outputs use caller buffers: pass a buffer and its
//! capacity, receive the required length in `out_len`. A too-small buffer
//! yields `PDOM_STATUS_BUFFER_TOO_SMALL` with `out_len` set, so a first call
//! with capacity 0 can be used to size the buffer.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use pdom::oracle::{first_violation, solve_generic, GenericMode};
use pdom::{
    build_witness, compute_gamma, count_vector_gamma, expand_graph, Case, DemandValue, Error,
    GammaBreakdown, Graph, Limits, PartSet, PartSizes, VertexSet, WitnessCounts,
};

/// Status codes returned by every fallible function.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdomStatus {
    Ok = 0,
    InvalidArgument = 1,
    Precondition = 2,
    ResourceLimit = 3,
    Parse = 4,
    NullPointer = 5,
    BufferTooSmall = 6,
    Panic = 7,
}

/// Branch of the formula, mirroring `pdom::Case`.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdomCase {
    AllVertices = 0,
    FullParts = 1,
    Balanced = 2,
}

/// State of an optional `s2` value.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdomDemandKind {
    Absent = 0,
    Finite = 1,
    Infinite = 2,
}

/// Which witness subset to read from a result.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PdomWitnessKind {
    S1 = 0,
    S2 = 1,
}

/// Caps for the exhaustive routines; see [`pdom_limits_default`].
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PdomLimits {
    pub max_vertices: u64,
    pub max_states: u64,
    pub max_generic_vertices: u64,
}

/// Scalar part of a gamma computation.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct PdomSummary {
    pub gamma: u64,
    pub p: u64,
    pub case_: PdomCase,
    pub has_s1: bool,
    pub s1: u64,
    pub s2_kind: PdomDemandKind,
    /// Meaningful only when `s2_kind` is `Finite`.
    pub s2: u64,
}

/// Opaque part-size list.
pub struct PdomParts(PartSizes);

/// Opaque explicit graph.
pub struct PdomGraph(Graph);

/// Opaque gamma result with its witnesses.
pub struct PdomResult {
    breakdown: GammaBreakdown,
    counts: WitnessCounts,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_last_error(msg: String) {
    let msg = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(msg));
}

fn status_of(err: &Error) -> PdomStatus {
    match err {
        Error::InvalidArgument(_) => PdomStatus::InvalidArgument,
        Error::Precondition(_) => PdomStatus::Precondition,
        Error::ResourceLimit { .. } => PdomStatus::ResourceLimit,
        Error::Parse { .. } => PdomStatus::Parse,
    }
}

struct Fail(PdomStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(PdomStatus::NullPointer, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> PdomStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            PdomStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_last_error(msg);
            status
        }
        Err(_) => {
            set_last_error("internal panic".to_string());
            PdomStatus::Panic
        }
    }
}

unsafe fn slice_arg<'a, T>(data: *const T, len: usize, what: &str) -> Result<&'a [T], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null(what));
    }
    Ok(unsafe { std::slice::from_raw_parts(data, len) })
}

unsafe fn ref_arg<'a, T>(ptr: *const T, what: &str) -> Result<&'a T, Fail> {
    unsafe { ptr.as_ref() }.ok_or_else(|| null(what))
}

unsafe fn write_out<T>(out: *mut T, value: T, what: &str) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null(what));
    }
    unsafe { out.write(value) };
    Ok(())
}

/// Copies `items` into a caller buffer of capacity `cap`.
unsafe fn write_buffer<T: Copy>(
    items: &[T],
    buf: *mut T,
    cap: usize,
    out_len: *mut usize,
) -> Result<(), Fail> {
    unsafe { write_out(out_len, items.len(), "out_len")? };
    if items.len() > cap {
        return Err(Fail(
            PdomStatus::BufferTooSmall,
            format!("buffer holds {cap} items, {} needed", items.len()),
        ));
    }
    if !items.is_empty() {
        if buf.is_null() {
            return Err(null("buffer"));
        }
        unsafe { ptr::copy_nonoverlapping(items.as_ptr(), buf, items.len()) };
    }
    Ok(())
}

fn to_limits(l: &PdomLimits) -> Limits {
    Limits {
        max_vertices: l.max_vertices,
        max_states: l.max_states as u128,
        max_generic_vertices: usize::try_from(l.max_generic_vertices).unwrap_or(usize::MAX),
    }
}

unsafe fn limits_arg(limits: *const PdomLimits) -> Limits {
    match unsafe { limits.as_ref() } {
        Some(l) => to_limits(l),
        None => Limits::default(),
    }
}

/// Message of the last failed call on this thread, or null. The pointer is
/// valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn pdom_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |s| s.as_ptr()))
}

/// Static name of a status code.
#[no_mangle]
pub extern "C" fn pdom_status_name(status: PdomStatus) -> *const c_char {
    let s: &'static CStr = match status {
        PdomStatus::Ok => c"ok",
        PdomStatus::InvalidArgument => c"invalid argument",
        PdomStatus::Precondition => c"precondition violated",
        PdomStatus::ResourceLimit => c"resource limit exceeded",
        PdomStatus::Parse => c"parse error",
        PdomStatus::NullPointer => c"null pointer",
        PdomStatus::BufferTooSmall => c"buffer too small",
        PdomStatus::Panic => c"internal panic",
    };
    s.as_ptr()
}

#[no_mangle]
pub extern "C" fn pdom_limits_default() -> PdomLimits {
    let l = Limits::default();
    PdomLimits {
        max_vertices: l.max_vertices,
        max_states: l.max_states as u64,
        max_generic_vertices: l.max_generic_vertices as u64,
    }
}

/// Creates a part list from `len` sizes.
///
/// # Safety
/// `sizes` must point to `len` readable values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_parts_new(
    sizes: *const u64,
    len: usize,
    out: *mut *mut PdomParts,
) -> PdomStatus {
    guard(|| {
        let sizes = unsafe { slice_arg(sizes, len, "sizes")? };
        let parts = PartSizes::new(sizes.to_vec())?;
        unsafe { write_out(out, Box::into_raw(Box::new(PdomParts(parts))), "out") }
    })
}

/// Parses a comma-separated part list such as `"2,2,10,17"`.
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_parts_parse(
    text: *const c_char,
    out: *mut *mut PdomParts,
) -> PdomStatus {
    guard(|| {
        let text = unsafe { c_str_arg(text)? };
        let parts = pdom::io::parse_parts(text)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PdomParts(parts))), "out") }
    })
}

unsafe fn c_str_arg<'a>(text: *const c_char) -> Result<&'a str, Fail> {
    if text.is_null() {
        return Err(null("text"));
    }
    unsafe { CStr::from_ptr(text) }
        .to_str()
        .map_err(|_| Fail(PdomStatus::Parse, "text is not valid UTF-8".to_string()))
}

/// # Safety
/// `parts` must be null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn pdom_parts_free(parts: *mut PdomParts) {
    if !parts.is_null() {
        drop(unsafe { Box::from_raw(parts) });
    }
}

/// Number of parts, or 0 for a null handle.
///
/// # Safety
/// `parts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdom_parts_len(parts: *const PdomParts) -> usize {
    unsafe { parts.as_ref() }.map_or(0, |p| p.0.len())
}

/// Total vertex count, or 0 for a null handle.
///
/// # Safety
/// `parts` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdom_parts_total(parts: *const PdomParts) -> u64 {
    unsafe { parts.as_ref() }.map_or(0, |p| p.0.total())
}

/// Computes gamma_p with s1, s2, witnesses and witness counts.
///
/// # Safety
/// `parts` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_compute(
    parts: *const PdomParts,
    p: u64,
    out: *mut *mut PdomResult,
) -> PdomStatus {
    guard(|| {
        let parts = unsafe { ref_arg(parts, "parts")? };
        let breakdown = compute_gamma(&parts.0, p)?;
        let counts = build_witness(&parts.0, p)?;
        let result = Box::new(PdomResult { breakdown, counts });
        unsafe { write_out(out, Box::into_raw(result), "out") }
    })
}

/// # Safety
/// `result` must be null or a handle from [`pdom_compute`] not freed before.
#[no_mangle]
pub unsafe extern "C" fn pdom_result_free(result: *mut PdomResult) {
    if !result.is_null() {
        drop(unsafe { Box::from_raw(result) });
    }
}

/// # Safety
/// `result` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_result_summary(
    result: *const PdomResult,
    out: *mut PdomSummary,
) -> PdomStatus {
    guard(|| {
        let b = &unsafe { ref_arg(result, "result")? }.breakdown;
        let (s2_kind, s2) = match b.s2 {
            None => (PdomDemandKind::Absent, 0),
            Some(DemandValue::Finite(v)) => (PdomDemandKind::Finite, v),
            Some(DemandValue::Infinite) => (PdomDemandKind::Infinite, 0),
        };
        let summary = PdomSummary {
            gamma: b.gamma,
            p: b.p,
            case_: match b.case {
                Case::AllVertices => PdomCase::AllVertices,
                Case::FullParts => PdomCase::FullParts,
                Case::Balanced => PdomCase::Balanced,
            },
            has_s1: b.s1.is_some(),
            s1: b.s1.unwrap_or(0),
            s2_kind,
            s2,
        };
        unsafe { write_out(out, summary, "out") }
    })
}

/// Writes the 0-based part indices of a witness subset. `out_present` is
/// false (and `out_len` 0) when the witness is absent.
///
/// # Safety
/// `result` must be a live handle; `buf` must hold `cap` values; the out
/// pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_result_witness_set(
    result: *const PdomResult,
    which: PdomWitnessKind,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
    out_present: *mut bool,
) -> PdomStatus {
    guard(|| {
        let b = &unsafe { ref_arg(result, "result")? }.breakdown;
        let set: Option<&PartSet> = match which {
            PdomWitnessKind::S1 => b.s1_witness.as_ref(),
            PdomWitnessKind::S2 => b.s2_witness.as_ref(),
        };
        unsafe { write_out(out_present, set.is_some(), "out_present")? };
        let members = set.map_or(&[][..], |s| s.members());
        unsafe { write_buffer(members, buf, cap, out_len) }
    })
}

/// Writes the per-part counts of a minimum p-dominating set.
///
/// # Safety
/// `result` must be a live handle; `buf` must hold `cap` values.
#[no_mangle]
pub unsafe extern "C" fn pdom_result_witness_counts(
    result: *const PdomResult,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> PdomStatus {
    guard(|| {
        let r = unsafe { ref_arg(result, "result")? };
        unsafe { write_buffer(r.counts.counts(), buf, cap, out_len) }
    })
}

/// Count-vector oracle: minimum and lexicographically least optimal counts.
///
/// # Safety
/// `parts` must be a live handle; `limits` may be null for defaults; `buf`
/// must hold `cap` values; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_oracle_counts(
    parts: *const PdomParts,
    p: u64,
    limits: *const PdomLimits,
    out_value: *mut u64,
    buf: *mut u64,
    cap: usize,
    out_len: *mut usize,
) -> PdomStatus {
    guard(|| {
        let parts = unsafe { ref_arg(parts, "parts")? };
        let limits = unsafe { limits_arg(limits) };
        let (value, counts) = count_vector_gamma(&parts.0, p, &limits)?;
        unsafe { write_out(out_value, value, "out_value")? };
        unsafe { write_buffer(counts.counts(), buf, cap, out_len) }
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must hold `2 * edge_count` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_graph_new(
    vertex_count: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut PdomGraph,
) -> PdomStatus {
    guard(|| {
        let len = edge_count
            .checked_mul(2)
            .ok_or_else(|| Fail(PdomStatus::InvalidArgument, "edge count overflows".into()))?;
        let flat = unsafe { slice_arg(edges, len, "edges")? };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        let g = Graph::from_edges(vertex_count, &pairs)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PdomGraph(g))), "out") }
    })
}

/// Parses the edge-list text format (`n m`, then `m` lines `u v`).
///
/// # Safety
/// `text` must be a valid NUL-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_graph_parse(
    text: *const c_char,
    out: *mut *mut PdomGraph,
) -> PdomStatus {
    guard(|| {
        let text = unsafe { c_str_arg(text)? };
        let g = pdom::io::parse_graph_file(text)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PdomGraph(g))), "out") }
    })
}

/// Expands a part list into the explicit complete multipartite graph.
///
/// # Safety
/// `parts` must be a live handle; `limits` may be null; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_graph_from_parts(
    parts: *const PdomParts,
    limits: *const PdomLimits,
    out: *mut *mut PdomGraph,
) -> PdomStatus {
    guard(|| {
        let parts = unsafe { ref_arg(parts, "parts")? };
        let limits = unsafe { limits_arg(limits) };
        let g = expand_graph(&parts.0, &limits)?;
        unsafe { write_out(out, Box::into_raw(Box::new(PdomGraph(g))), "out") }
    })
}

/// # Safety
/// `graph` must be null or a handle from this library not freed before.
#[no_mangle]
pub unsafe extern "C" fn pdom_graph_free(graph: *mut PdomGraph) {
    if !graph.is_null() {
        drop(unsafe { Box::from_raw(graph) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `graph` must be null or a live handle.
#[no_mangle]
pub unsafe extern "C" fn pdom_graph_vertex_count(graph: *const PdomGraph) -> usize {
    unsafe { graph.as_ref() }.map_or(0, |g| g.0.vertex_count())
}

/// Checks whether `ids` is p-dominating in `graph`.
///
/// # Safety
/// `graph` must be a live handle; `ids` must hold `len` values;
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_is_p_dominating(
    graph: *const PdomGraph,
    ids: *const usize,
    len: usize,
    p: u64,
    out: *mut bool,
) -> PdomStatus {
    guard(|| {
        let g = unsafe { ref_arg(graph, "graph")? };
        let ids = unsafe { slice_arg(ids, len, "ids")? };
        if p == 0 {
            return Err(Fail(PdomStatus::InvalidArgument, "p must be at least 1".into()));
        }
        let set = VertexSet::new(ids.to_vec());
        let ok = first_violation(&g.0, &set, p)?.is_none();
        unsafe { write_out(out, ok, "out") }
    })
}

/// Exact gamma_p of an arbitrary graph. With `branch_and_bound` false the
/// witness is the lexicographically least minimum set.
///
/// # Safety
/// `graph` must be a live handle; `limits` may be null; `buf` must hold
/// `cap` values; out pointers must be writable.
#[no_mangle]
pub unsafe extern "C" fn pdom_oracle_generic(
    graph: *const PdomGraph,
    p: u64,
    branch_and_bound: bool,
    limits: *const PdomLimits,
    out_value: *mut u64,
    buf: *mut usize,
    cap: usize,
    out_len: *mut usize,
) -> PdomStatus {
    guard(|| {
        let g = unsafe { ref_arg(graph, "graph")? };
        let limits = unsafe { limits_arg(limits) };
        let mode = if branch_and_bound {
            GenericMode::BranchAndBound
        } else {
            GenericMode::Canonical
        };
        let (value, set) = solve_generic(&g.0, p, mode, &limits)?;
        unsafe { write_out(out_value, value, "out_value")? };
        unsafe { write_buffer(set.members(), buf, cap, out_len) }
    })
}
