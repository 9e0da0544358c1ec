//! C ABI over the strongedge toolkit.
//!
//! Graphs live behind an opaque `SeGraph` handle. Every entry point returns an
//! `SeStatus`; on failure `se_last_error_message` describes the error on the
//! calling thread. Strings handed out by the library are freed with
//! `se_string_free`, graphs with `se_graph_free`.

#![allow(non_camel_case_types)]

use std::cell::RefCell;
use std::ffi::{c_char, c_int, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;
use std::time::Duration;

use strongedge::coloring::chi_s_exact;
use strongedge::graph::{parse_edge_list, parse_graph6};
use strongedge::metrics::{classify, compute_metrics, mad_exact, ore_degree, Class, Scheme};
use strongedge::{ConflictGraph, Error, Graph};

/// Opaque graph handle.
pub struct SeGraph {
    inner: Graph,
}

#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeStatus {
    SE_OK = 0,
    SE_NULL_POINTER = 1,
    SE_INVALID_UTF8 = 2,
    SE_PARSE_ERROR = 3,
    SE_INVALID_ARGUMENT = 4,
    /// The quantity is undefined for this graph (for example, an edgeless graph).
    SE_UNDEFINED = 5,
    SE_TOO_LARGE = 6,
    SE_TIMEOUT = 7,
    SE_BUFFER_TOO_SMALL = 8,
    SE_INTERNAL = 9,
    SE_PANIC = 10,
}

/// Vertex classes, shared by both schemes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SeClass {
    SE_CLASS_UNCLASSIFIED = 0,
    SE_CLASS_DEG2 = 1,
    SE_CLASS_DEG3A = 2,
    SE_CLASS_DEG3B = 3,
    SE_CLASS_DEG3B_STRONG = 4,
    SE_CLASS_DEG3B_WEAK = 5,
    SE_CLASS_DEG3C = 6,
    SE_CLASS_DEG3C_WEAK = 7,
    SE_CLASS_DEG3C_MODERATE = 8,
    SE_CLASS_DEG3C_STRONG = 9,
    SE_CLASS_DEG3D = 10,
    SE_CLASS_DEG4 = 11,
    SE_CLASS_DEG4A = 12,
    SE_CLASS_DEG4B = 13,
    SE_CLASS_DEG4C_STRONG = 14,
    SE_CLASS_DEG4C_WEAK = 15,
    SE_CLASS_DEG4D = 16,
    SE_CLASS_DEG5 = 17,
}

impl From<Class> for SeClass {
    fn from(c: Class) -> SeClass {
        use SeClass::*;
        match c {
            Class::Unclassified => SE_CLASS_UNCLASSIFIED,
            Class::Deg2 => SE_CLASS_DEG2,
            Class::Deg3A => SE_CLASS_DEG3A,
            Class::Deg3B => SE_CLASS_DEG3B,
            Class::Deg3BStrong => SE_CLASS_DEG3B_STRONG,
            Class::Deg3BWeak => SE_CLASS_DEG3B_WEAK,
            Class::Deg3C => SE_CLASS_DEG3C,
            Class::Deg3CWeak => SE_CLASS_DEG3C_WEAK,
            Class::Deg3CModerate => SE_CLASS_DEG3C_MODERATE,
            Class::Deg3CStrong => SE_CLASS_DEG3C_STRONG,
            Class::Deg3D => SE_CLASS_DEG3D,
            Class::Deg4 => SE_CLASS_DEG4,
            Class::Deg4A => SE_CLASS_DEG4A,
            Class::Deg4B => SE_CLASS_DEG4B,
            Class::Deg4CStrong => SE_CLASS_DEG4C_STRONG,
            Class::Deg4CWeak => SE_CLASS_DEG4C_WEAK,
            Class::Deg4D => SE_CLASS_DEG4D,
            Class::Deg5 => SE_CLASS_DEG5,
        }
    }
}

thread_local! {
    static LAST_ERROR: RefCell<CString> = RefCell::new(CString::default());
}

fn set_error(msg: &str) {
    let msg = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = msg);
}

struct Fail(SeStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Fail {
        let status = match &e {
            Error::Graph6 { .. } | Error::EdgeList { .. } => SeStatus::SE_PARSE_ERROR,
            Error::Edgeless(_) => SeStatus::SE_UNDEFINED,
            Error::TooLarge { .. } => SeStatus::SE_TOO_LARGE,
            Error::Timeout { .. } => SeStatus::SE_TIMEOUT,
            Error::InvalidVertex(_)
            | Error::InvalidEdge(_)
            | Error::Domain(_)
            | Error::ColorOutOfRange { .. }
            | Error::Precondition(_)
            | Error::Config(_) => SeStatus::SE_INVALID_ARGUMENT,
            _ => SeStatus::SE_INTERNAL,
        };
        Fail(status, e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(SeStatus::SE_NULL_POINTER, format!("{what} is null"))
}

/// Runs `f`, converting errors and panics into a status plus a thread-local message.
fn guard(f: impl FnOnce() -> Result<(), Fail>) -> SeStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            set_error("");
            SeStatus::SE_OK
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(&msg);
            status
        }
        Err(payload) => {
            let msg = payload
                .downcast_ref::<&str>()
                .map(|s| s.to_string())
                .or_else(|| payload.downcast_ref::<String>().cloned())
                .unwrap_or_else(|| "panic".into());
            set_error(&format!("internal panic: {msg}"));
            SeStatus::SE_PANIC
        }
    }
}

unsafe fn text<'a>(s: *const c_char, what: &str) -> Result<&'a str, Fail> {
    if s.is_null() {
        return Err(null(what));
    }
    CStr::from_ptr(s).to_str().map_err(|e| Fail(SeStatus::SE_INVALID_UTF8, format!("{what}: {e}")))
}

unsafe fn graph<'a>(g: *const SeGraph) -> Result<&'a Graph, Fail> {
    g.as_ref().map(|h| &h.inner).ok_or_else(|| null("graph"))
}

unsafe fn out<'a, T>(p: *mut T, what: &str) -> Result<&'a mut T, Fail> {
    p.as_mut().ok_or_else(|| null(what))
}

fn scheme(theta: c_int) -> Result<Scheme, Fail> {
    match theta {
        7 => Ok(Scheme::Theta7),
        8 => Ok(Scheme::Theta8),
        _ => Err(Fail(SeStatus::SE_INVALID_ARGUMENT, format!("scheme must be 7 or 8, got {theta}"))),
    }
}

fn hand_out(g: Graph, out_graph: &mut *mut SeGraph) {
    *out_graph = Box::into_raw(Box::new(SeGraph { inner: g }));
}

/// Library version as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn se_version() -> *const c_char {
    static VERSION: &str = concat!(env!("CARGO_PKG_VERSION"), "\0");
    VERSION.as_ptr().cast()
}

/// Message for the last failed call on this thread; empty after a success.
/// The pointer stays valid until the next call into the library on this thread.
#[no_mangle]
pub extern "C" fn se_last_error_message() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ptr())
}

/// Parses one graph6 line.
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_graph` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn se_graph_from_graph6(text: *const c_char, out_graph: *mut *mut SeGraph) -> SeStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        *slot = ptr::null_mut();
        let line = self::text(text, "text")?;
        hand_out(parse_graph6(line.trim_end_matches(['\n', '\r']))?, slot);
        Ok(())
    })
}

/// Parses an edge list document (`u v` per line, optional `n=` header, `#` comments).
///
/// # Safety
/// `text` must be a NUL-terminated string and `out_graph` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn se_graph_from_edge_list(text: *const c_char, out_graph: *mut *mut SeGraph) -> SeStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        *slot = ptr::null_mut();
        hand_out(parse_edge_list(self::text(text, "text")?)?, slot);
        Ok(())
    })
}

/// Builds a graph on `n` vertices from `m` pairs stored flat in `pairs` (`2 * m` entries).
///
/// # Safety
/// `pairs` must point to `2 * m` readable values (it may be null when `m` is 0).
#[no_mangle]
pub unsafe extern "C" fn se_graph_from_edges(
    n: usize,
    pairs: *const usize,
    m: usize,
    out_graph: *mut *mut SeGraph,
) -> SeStatus {
    guard(|| {
        let slot = out(out_graph, "out_graph")?;
        *slot = ptr::null_mut();
        let flat = match m {
            0 => &[][..],
            _ if pairs.is_null() => return Err(null("pairs")),
            _ => std::slice::from_raw_parts(pairs, 2 * m),
        };
        let edges: Vec<(usize, usize)> = flat.chunks_exact(2).map(|p| (p[0], p[1])).collect();
        hand_out(Graph::from_edges(n, &edges)?, slot);
        Ok(())
    })
}

/// Releases a graph. Null is ignored.
///
/// # Safety
/// `g` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn se_graph_free(g: *mut SeGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// Vertex and edge counts.
///
/// # Safety
/// `g` must be a live handle; `n` and `m` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn se_graph_counts(g: *const SeGraph, n: *mut usize, m: *mut usize) -> SeStatus {
    guard(|| {
        let g = graph(g)?;
        *out(n, "n")? = g.n();
        *out(m, "m")? = g.m();
        Ok(())
    })
}

/// Ore-degree, the largest `d(u) + d(v)` over edges. `SE_UNDEFINED` for edgeless graphs.
///
/// # Safety
/// `g` must be a live handle; `theta` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn se_ore_degree(g: *const SeGraph, theta: *mut usize) -> SeStatus {
    guard(|| {
        let g = graph(g)?;
        *out(theta, "theta")? = ore_degree(g)?;
        Ok(())
    })
}

/// Exact maximum average degree as a reduced fraction.
///
/// # Safety
/// `g` must be a live handle; `num` and `den` valid pointers.
#[no_mangle]
pub unsafe extern "C" fn se_mad(g: *const SeGraph, num: *mut i64, den: *mut i64) -> SeStatus {
    guard(|| {
        let g = graph(g)?;
        let (num, den) = (out(num, "num")?, out(den, "den")?);
        let mad = mad_exact(g)?.mad;
        let (p, q) = mad.to_i128_pair().ok_or_else(|| Fail(SeStatus::SE_INTERNAL, "mad does not fit".into()))?;
        *num = i64::try_from(p).map_err(|_| Fail(SeStatus::SE_INTERNAL, "mad does not fit".into()))?;
        *den = i64::try_from(q).map_err(|_| Fail(SeStatus::SE_INTERNAL, "mad does not fit".into()))?;
        Ok(())
    })
}

/// Strong chromatic index. `budget_secs <= 0` means no time limit. When `colors`
/// is non-null it receives one color in `1..=chi` per edge and must hold `colors_len >= m`.
///
/// # Safety
/// `g` must be a live handle, `chi` a valid pointer, `colors` null or writable for `colors_len` values.
#[no_mangle]
pub unsafe extern "C" fn se_chi_s(
    g: *const SeGraph,
    budget_secs: f64,
    chi: *mut usize,
    colors: *mut u32,
    colors_len: usize,
) -> SeStatus {
    guard(|| {
        let g = graph(g)?;
        let chi = out(chi, "chi")?;
        if !colors.is_null() && colors_len < g.m() {
            return Err(Fail(SeStatus::SE_BUFFER_TOO_SMALL, format!("need {} colors, got {colors_len}", g.m())));
        }
        let budget = (budget_secs > 0.0 && budget_secs.is_finite()).then(|| Duration::from_secs_f64(budget_secs));
        let res = chi_s_exact(&ConflictGraph::new(g), budget)?;
        *chi = res.chi_s;
        if !colors.is_null() {
            let buf = std::slice::from_raw_parts_mut(colors, g.m());
            for (slot, c) in buf.iter_mut().zip(&res.coloring.colors) {
                *slot = c.unwrap_or(0);
            }
        }
        Ok(())
    })
}

/// Vertex classes under scheme 7 or 8, written to `labels` (`len >= n`).
///
/// # Safety
/// `g` must be a live handle and `labels` writable for `len` values.
#[no_mangle]
pub unsafe extern "C" fn se_classify(g: *const SeGraph, theta: c_int, labels: *mut SeClass, len: usize) -> SeStatus {
    guard(|| {
        let g = graph(g)?;
        let scheme = scheme(theta)?;
        if labels.is_null() {
            return Err(null("labels"));
        }
        if len < g.n() {
            return Err(Fail(SeStatus::SE_BUFFER_TOO_SMALL, format!("need {} labels, got {len}", g.n())));
        }
        let buf = std::slice::from_raw_parts_mut(labels, g.n());
        for (slot, &c) in buf.iter_mut().zip(&classify(g, scheme).labels) {
            *slot = c.into();
        }
        Ok(())
    })
}

/// All metrics as a JSON object. Free the result with `se_string_free`.
///
/// # Safety
/// `g` must be a live handle and `json` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn se_metrics_json(g: *const SeGraph, json: *mut *mut c_char) -> SeStatus {
    guard(|| {
        let slot = out(json, "json")?;
        *slot = ptr::null_mut();
        let g = graph(g)?;
        let text = serde_json::to_string(&compute_metrics(g)).map_err(|e| Fail(SeStatus::SE_INTERNAL, e.to_string()))?;
        *slot = CString::new(text).map_err(|e| Fail(SeStatus::SE_INTERNAL, e.to_string()))?.into_raw();
        Ok(())
    })
}

/// Releases a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not be used afterwards.
#[no_mangle]
pub unsafe extern "C" fn se_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
