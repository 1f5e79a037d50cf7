//! C ABI over the cyclemax library.  Graphs are opaque handles, every
//! fallible call returns a status code, and big integers cross the boundary
//! as heap-allocated decimal strings that the caller releases with
//! [`cm_string_free`].  The header is generated into `include/cyclemax.h`
//! at build time.

use cyclemax::bounds::{edge_bound_with_form, hmorph_bound, EdgeBoundForm};
use cyclemax::cycles::{count_cycles, turan_cycle_count};
use cyclemax::graph::{make_blowup, make_gamma};
use cyclemax::io::parse_auto;
use cyclemax::permanent::cycle_bound_blowup;
use cyclemax::{BlockMatrixSpec, BlowupSpec, Error, Graph};
use num_bigint::BigUint;
use std::ffi::{c_char, CStr, CString};
use std::ptr;

/// Status code returned by every fallible call.
#[repr(C)]
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum CmStatus {
    CmOk = 0,
    CmErrNullPointer = 1,
    CmErrInvalidArgument = 2,
    CmErrOutOfRange = 3,
    CmErrParse = 4,
    CmErrDomain = 5,
}

fn status_of(e: &Error) -> CmStatus {
    match e {
        Error::InvalidArgument(_) => CmStatus::CmErrInvalidArgument,
        Error::OutOfRange(_) => CmStatus::CmErrOutOfRange,
        Error::Parse(_) => CmStatus::CmErrParse,
        Error::OutsideDenseRegime(_) | Error::BoundSense(_) => CmStatus::CmErrDomain,
    }
}

/// Opaque graph handle.
pub struct CmGraph {
    inner: Graph,
}

fn write_handle(out: *mut *mut CmGraph, g: Graph) -> CmStatus {
    if out.is_null() {
        return CmStatus::CmErrNullPointer;
    }
    unsafe { *out = Box::into_raw(Box::new(CmGraph { inner: g })) };
    CmStatus::CmOk
}

fn write_decimal(out: *mut *mut c_char, value: &BigUint) -> CmStatus {
    if out.is_null() {
        return CmStatus::CmErrNullPointer;
    }
    // Decimal digits never contain interior NUL bytes.
    let s = CString::new(value.to_string()).unwrap();
    unsafe { *out = s.into_raw() };
    CmStatus::CmOk
}

/// Create an edgeless graph on `n` vertices.
#[no_mangle]
pub extern "C" fn cm_graph_new(n: usize, out: *mut *mut CmGraph) -> CmStatus {
    write_handle(out, Graph::new(n))
}

/// Parse a graph from UTF-8 text (edge list or graph6, auto-detected).
#[no_mangle]
pub unsafe extern "C" fn cm_graph_parse(text: *const c_char, out: *mut *mut CmGraph) -> CmStatus {
    if text.is_null() {
        return CmStatus::CmErrNullPointer;
    }
    let Ok(text) = CStr::from_ptr(text).to_str() else {
        return CmStatus::CmErrParse;
    };
    match parse_auto(text) {
        Ok(g) => write_handle(out, g),
        Err(e) => status_of(&e),
    }
}

/// Add an undirected edge; rejects loops, duplicates, and out-of-range
/// endpoints.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_add_edge(g: *mut CmGraph, u: usize, v: usize) -> CmStatus {
    let Some(g) = g.as_mut() else {
        return CmStatus::CmErrNullPointer;
    };
    match g.inner.add_edge(u, v) {
        Ok(()) => CmStatus::CmOk,
        Err(e) => status_of(&e),
    }
}

/// Build the i-th circulant base graph (3i-1 vertices, i-regular).
#[no_mangle]
pub extern "C" fn cm_graph_gamma(i: usize, out: *mut *mut CmGraph) -> CmStatus {
    match make_gamma(i) {
        Ok(g) => write_handle(out, g.into_graph()),
        Err(e) => status_of(&e),
    }
}

/// Build a blowup of the i-th circulant base with `len` part sizes.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_gamma_blowup(
    i: usize,
    sizes: *const usize,
    len: usize,
    out: *mut *mut CmGraph,
) -> CmStatus {
    if sizes.is_null() {
        return CmStatus::CmErrNullPointer;
    }
    let sizes = std::slice::from_raw_parts(sizes, len).to_vec();
    let base = match make_gamma(i) {
        Ok(b) => b,
        Err(e) => return status_of(&e),
    };
    match BlowupSpec::new(base, sizes) {
        Ok(spec) => write_handle(out, make_blowup(&spec)),
        Err(e) => status_of(&e),
    }
}

/// Release a graph handle.  Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_free(g: *mut CmGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Number of vertices; zero for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_vertex_count(g: *const CmGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.n())
}

/// Number of edges; zero for a null handle.
#[no_mangle]
pub unsafe extern "C" fn cm_graph_edge_count(g: *const CmGraph) -> usize {
    g.as_ref().map_or(0, |g| g.inner.m())
}

/// Exact cycle count as a decimal string.
#[no_mangle]
pub unsafe extern "C" fn cm_count_cycles(g: *const CmGraph, out: *mut *mut c_char) -> CmStatus {
    let Some(g) = g.as_ref() else {
        return CmStatus::CmErrNullPointer;
    };
    write_decimal(out, &count_cycles(&g.inner))
}

/// Successor-product cycle bound from the edge count; `full` selects the
/// whole-graph product instead of the per-vertex reduced form.
#[no_mangle]
pub unsafe extern "C" fn cm_edge_bound(
    n: usize,
    m: usize,
    girth: usize,
    full: bool,
    out: *mut *mut c_char,
) -> CmStatus {
    let form = if full {
        EdgeBoundForm::Full
    } else {
        EdgeBoundForm::Reduced
    };
    match edge_bound_with_form(n, m, girth, form) {
        Ok(v) => write_decimal(out, &v),
        Err(e) => status_of(&e),
    }
}

/// Factorial cycle bound for graphs homomorphic to a q-regular base on p
/// vertices.
#[no_mangle]
pub unsafe extern "C" fn cm_hmorph_bound(
    n: usize,
    p: usize,
    q: usize,
    girth: usize,
    out: *mut *mut c_char,
) -> CmStatus {
    match hmorph_bound(n, p, q, girth) {
        Ok(v) => write_decimal(out, &v),
        Err(e) => status_of(&e),
    }
}

/// Exact cycle count of the balanced complete bipartite graph on n
/// vertices.
#[no_mangle]
pub unsafe extern "C" fn cm_turan_exact(n: usize, out: *mut *mut c_char) -> CmStatus {
    match turan_cycle_count(n) {
        Ok(v) => write_decimal(out, &v),
        Err(e) => status_of(&e),
    }
}

/// Block-permanent cycle bound for a circulant blowup with the given part
/// sizes.
#[no_mangle]
pub unsafe extern "C" fn cm_gamma_perm_bound(
    i: usize,
    sizes: *const usize,
    len: usize,
    out: *mut *mut c_char,
) -> CmStatus {
    if sizes.is_null() {
        return CmStatus::CmErrNullPointer;
    }
    let sizes = std::slice::from_raw_parts(sizes, len).to_vec();
    let base = match make_gamma(i) {
        Ok(b) => b,
        Err(e) => return status_of(&e),
    };
    match BlockMatrixSpec::from_base(&base, sizes) {
        Ok(spec) => write_decimal(out, &cycle_bound_blowup(&spec)),
        Err(e) => status_of(&e),
    }
}

/// Release a string returned by this library.  Null is a no-op.
#[no_mangle]
pub unsafe extern "C" fn cm_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
