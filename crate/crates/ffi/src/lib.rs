//! C ABI over `kempe_reconfig`.
//!
//! Graphs and list assignments are opaque handles created and freed through
//! this interface. Every fallible call returns a [`KcStatus`]; on failure
//! [`kc_last_error_message`] describes the error for the calling thread.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};

use kempe_reconfig::coloring::first_l_coloring;
use kempe_reconfig::graph::{parse_graph6, vertex_connectivity};
use kempe_reconfig::harness::{verify_theorem2, AssignmentGenerator, SweepOptions};
use kempe_reconfig::oracle::classify;
use kempe_reconfig::{Color, Error, Graph, ListAssignment};

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum KcStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidInput = 2,
    Precondition = 3,
    ResourceLimit = 4,
    Internal = 5,
}

/// Opaque graph handle.
pub struct KcGraph(Graph);

/// Opaque, incrementally filled list assignment.
pub struct KcLists(Vec<Vec<Color>>);

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let c = CString::new(msg.replace('\0', " ")).expect("nul bytes removed");
    LAST_ERROR.with(|e| *e.borrow_mut() = c);
}

fn status_of(e: &Error) -> KcStatus {
    match e {
        Error::NodeCap { .. } => KcStatus::ResourceLimit,
        Error::Precondition(_) | Error::PaletteCap { .. } => KcStatus::Precondition,
        _ => KcStatus::InvalidInput,
    }
}

/// Runs `f`, recording errors and turning panics into `Internal`.
fn guard(f: impl FnOnce() -> Result<(), (KcStatus, String)>) -> KcStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            KcStatus::Ok
        }
        Ok(Err((status, msg))) => {
            set_error(&msg);
            status
        }
        Err(_) => {
            set_error("internal panic");
            KcStatus::Internal
        }
    }
}

fn lib(e: Error) -> (KcStatus, String) {
    (status_of(&e), e.to_string())
}

fn null(what: &str) -> (KcStatus, String) {
    (KcStatus::NullPointer, format!("{what} is null"))
}

unsafe fn deref<'a, T>(p: *const T, what: &str) -> Result<&'a T, (KcStatus, String)> {
    unsafe { p.as_ref() }.ok_or_else(|| null(what))
}

fn lists_of(g: &Graph, raw: &KcLists) -> Result<ListAssignment, (KcStatus, String)> {
    let lists = ListAssignment::new(raw.0.clone()).map_err(lib)?;
    lists.check_covers(g).map_err(lib)?;
    Ok(lists)
}

/// Parses a graph6 string.
///
/// # Safety
/// `text` must be a nul-terminated string; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_graph6(text: *const c_char, out: *mut *mut KcGraph) -> KcStatus {
    guard(|| {
        if text.is_null() {
            return Err(null("text"));
        }
        if out.is_null() {
            return Err(null("out"));
        }
        let s = unsafe { CStr::from_ptr(text) }
            .to_str()
            .map_err(|_| (KcStatus::InvalidInput, "text is not UTF-8".to_string()))?;
        let g = parse_graph6(s).map_err(lib)?;
        unsafe { *out = Box::into_raw(Box::new(KcGraph(g))) };
        Ok(())
    })
}

/// Builds a graph from `edge_count` pairs stored flat in `edges`.
///
/// # Safety
/// `edges` must point to `2 * edge_count` values (may be null when
/// `edge_count` is 0); `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_from_edges(
    n: usize,
    edges: *const usize,
    edge_count: usize,
    out: *mut *mut KcGraph,
) -> KcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        let flat: &[usize] = if edge_count == 0 {
            &[]
        } else if edges.is_null() {
            return Err(null("edges"));
        } else {
            unsafe { std::slice::from_raw_parts(edges, 2 * edge_count) }
        };
        let g = Graph::from_edges(n, flat.chunks_exact(2).map(|p| (p[0], p[1]))).map_err(lib)?;
        unsafe { *out = Box::into_raw(Box::new(KcGraph(g))) };
        Ok(())
    })
}

/// # Safety
/// `g` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_free(g: *mut KcGraph) {
    if !g.is_null() {
        drop(unsafe { Box::from_raw(g) });
    }
}

/// Vertex count, or 0 for a null handle.
///
/// # Safety
/// `g` must be a live handle or null.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_vertex_count(g: *const KcGraph) -> usize {
    unsafe { g.as_ref() }.map_or(0, |g| g.0.n())
}

/// # Safety
/// `g` must be a live handle; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_graph_connectivity(g: *const KcGraph, out: *mut usize) -> KcStatus {
    guard(|| {
        let g = unsafe { deref(g, "graph") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = vertex_connectivity(&g.0) };
        Ok(())
    })
}

/// An assignment of `n` empty lists; fill each with [`kc_lists_set`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_lists_new(n: usize, out: *mut *mut KcLists) -> KcStatus {
    guard(|| {
        if out.is_null() {
            return Err(null("out"));
        }
        unsafe { *out = Box::into_raw(Box::new(KcLists(vec![Vec::new(); n]))) };
        Ok(())
    })
}

/// Replaces the list of vertex `v` with `len` colors.
///
/// # Safety
/// `lists` must be a live handle; `colors` must point to `len` values.
#[no_mangle]
pub unsafe extern "C" fn kc_lists_set(lists: *mut KcLists, v: usize, colors: *const u32, len: usize) -> KcStatus {
    guard(|| {
        let lists = unsafe { lists.as_mut() }.ok_or_else(|| null("lists"))?;
        if v >= lists.0.len() {
            return Err((KcStatus::InvalidInput, format!("vertex {v} out of range")));
        }
        let slice: &[u32] = if len == 0 {
            &[]
        } else if colors.is_null() {
            return Err(null("colors"));
        } else {
            unsafe { std::slice::from_raw_parts(colors, len) }
        };
        lists.0[v] = slice.to_vec();
        Ok(())
    })
}

/// # Safety
/// `lists` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kc_lists_free(lists: *mut KcLists) {
    if !lists.is_null() {
        drop(unsafe { Box::from_raw(lists) });
    }
}

/// Whether some L-coloring exists.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_is_l_colorable(g: *const KcGraph, lists: *const KcLists, out: *mut bool) -> KcStatus {
    guard(|| {
        let g = unsafe { deref(g, "graph") }?;
        let raw = unsafe { deref(lists, "lists") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lists = lists_of(&g.0, raw)?;
        unsafe { *out = first_l_coloring(&g.0, &lists).is_some() };
        Ok(())
    })
}

/// Number of Kempe classes of L-colorings, enumerating at most `node_cap`
/// colorings.
///
/// # Safety
/// Handles must be live; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_class_count(
    g: *const KcGraph,
    lists: *const KcLists,
    node_cap: usize,
    out: *mut usize,
) -> KcStatus {
    guard(|| {
        let g = unsafe { deref(g, "graph") }?;
        let raw = unsafe { deref(lists, "lists") }?;
        if out.is_null() {
            return Err(null("out"));
        }
        let lists = lists_of(&g.0, raw)?;
        let classes = classify(&g.0, &lists, node_cap).map_err(lib)?;
        unsafe { *out = classes.class_count };
        Ok(())
    })
}

/// Sweeps tight assignments of a 4-connected graph and writes the report
/// JSON (without timing) to `*out_json`; free it with [`kc_string_free`].
/// `samples == 0` enumerates canonical assignments, otherwise samples that
/// many with `seed`.
///
/// # Safety
/// `g` must be a live handle; `out_json` must be writable.
#[no_mangle]
pub unsafe extern "C" fn kc_verify_theorem2_json(
    g: *const KcGraph,
    palette_cap: usize,
    samples: usize,
    seed: u64,
    out_json: *mut *mut c_char,
) -> KcStatus {
    guard(|| {
        let g = unsafe { deref(g, "graph") }?;
        if out_json.is_null() {
            return Err(null("out_json"));
        }
        let gen = if samples == 0 {
            AssignmentGenerator::exhaustive(g.0.clone(), palette_cap)
        } else {
            AssignmentGenerator::random(g.0.clone(), palette_cap, samples, seed)
        };
        let opts = SweepOptions {
            include_timing: false,
            ..SweepOptions::default()
        };
        let report = verify_theorem2(&g.0, &gen, opts).map_err(lib)?;
        let text = CString::new(report.to_json()).expect("JSON has no nul bytes");
        unsafe { *out_json = text.into_raw() };
        Ok(())
    })
}

/// # Safety
/// `s` must come from this library (or be null) and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn kc_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(unsafe { CString::from_raw(s) });
    }
}

/// Message for the last failed call on this thread; empty after a success.
/// Valid until the next call into this library on the same thread.
#[no_mangle]
pub extern "C" fn kc_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}
