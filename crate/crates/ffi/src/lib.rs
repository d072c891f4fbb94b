//! C ABI over `altpower`.
//!
//! Every fallible entry point returns an [`AltStatus`] and writes its result
//! through an out-pointer. On failure a message is kept per thread and can be
//! read with [`altpower_last_error`]. Graphs are opaque [`AltGraph`] handles
//! released with [`altpower_graph_free`]; strings returned by the library are
//! released with [`altpower_string_free`].

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use altpower::census::{
    classify_row, closed_form_counts, in_set_a, order_graph_verdict, two_connected, Row,
};
use altpower::graph::{
    components, order_graph, power_type_graph, proper_power_graph, quotient_power_graph, Limits,
    UndirectedGraph, VertexLabel,
};
use altpower::Error;

/// Status codes returned by every fallible call.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidArgument = 2,
    Capacity = 3,
    Parse = 4,
    Internal = 5,
    Panic = 6,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum AltGraphKind {
    Power = 0,
    Quotient = 1,
    PowerType = 2,
    Order = 3,
}

/// Component counts for one degree. `row` is the zero-based table row for
/// `n >= 11` and `-1` below that.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct AltCensusRow {
    pub n: u64,
    pub c0_ptype: u32,
    pub c0_order: u32,
    pub two_connected: bool,
    pub row: i32,
}

enum Inner {
    Power(UndirectedGraph<altpower::Permutation>),
    Quotient(UndirectedGraph<altpower::CyclicClass>),
    PowerType(UndirectedGraph<altpower::PartitionType>),
    Order(UndirectedGraph<altpower::graph::ElementOrder>),
}

/// Opaque graph handle.
pub struct AltGraph {
    inner: Inner,
    components: usize,
}

macro_rules! with_graph {
    ($g:expr, $v:ident => $body:expr) => {
        match &$g.inner {
            Inner::Power($v) => $body,
            Inner::Quotient($v) => $body,
            Inner::PowerType($v) => $body,
            Inner::Order($v) => $body,
        }
    };
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn clear_error() {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
}

fn status_of(e: &Error) -> AltStatus {
    match e {
        Error::Capacity { .. } => AltStatus::Capacity,
        Error::Parse(_) | Error::UnknownLabel(_) | Error::Json(_) => AltStatus::Parse,
        Error::Precondition(_) | Error::DegreeMismatch { .. } | Error::NotAlternating(_) => {
            AltStatus::InvalidArgument
        }
        _ => AltStatus::Internal,
    }
}

fn fail(status: AltStatus, msg: impl Into<String>) -> AltStatus {
    set_error(msg.into());
    status
}

/// Runs `f`, converting library errors and panics into status codes.
fn guard(f: impl FnOnce() -> Result<(), AltStatus>) -> AltStatus {
    clear_error();
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => AltStatus::Ok,
        Ok(Err(s)) => s,
        Err(_) => fail(AltStatus::Panic, "panic inside altpower"),
    }
}

fn lib<T>(r: altpower::Result<T>) -> Result<T, AltStatus> {
    r.map_err(|e| fail(status_of(&e), e.to_string()))
}

fn non_null<T>(p: *const T, what: &str) -> Result<(), AltStatus> {
    if p.is_null() {
        Err(fail(AltStatus::NullPointer, format!("{what} is null")))
    } else {
        Ok(())
    }
}

fn into_c_string(s: String) -> *mut c_char {
    CString::new(s).expect("no interior nul").into_raw()
}

fn row_index(row: Row) -> i32 {
    Row::ALL.iter().position(|r| *r == row).expect("row listed") as i32
}

/// Message for the most recent failure on this thread, or null. The pointer
/// stays valid until the next call into the library on the same thread.
#[no_mangle]
pub extern "C" fn altpower_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Library version as a static nul-terminated string.
#[no_mangle]
pub extern "C" fn altpower_version() -> *const c_char {
    static VERSION: &CStr =
        match CStr::from_bytes_with_nul(concat!(env!("CARGO_PKG_VERSION"), "\0").as_bytes()) {
            Ok(v) => v,
            Err(_) => panic!("bad version string"),
        };
    VERSION.as_ptr()
}

/// Builds a graph of the given kind for `A_n` under the default size limits.
///
/// # Safety
/// `out` must be a valid pointer to writable storage for one handle.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_build(
    kind: AltGraphKind,
    n: usize,
    out: *mut *mut AltGraph,
) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        let lim = Limits::default();
        let inner = match kind {
            AltGraphKind::Power => Inner::Power(lib(proper_power_graph(n, &lim))?),
            AltGraphKind::Quotient => Inner::Quotient(lib(quotient_power_graph(n, &lim))?),
            AltGraphKind::PowerType => Inner::PowerType(lib(power_type_graph(n, &lim))?),
            AltGraphKind::Order => Inner::Order(lib(order_graph(n, &lim))?),
        };
        let mut g = AltGraph {
            inner,
            components: 0,
        };
        g.components = with_graph!(g, x => components(x).component_count());
        *out = Box::into_raw(Box::new(g));
        Ok(())
    })
}

/// Releases a graph. Null is accepted.
///
/// # Safety
/// `g` must be null or a handle from [`altpower_graph_build`] not yet freed.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_free(g: *mut AltGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_vertex_count(
    g: *const AltGraph,
    out: *mut usize,
) -> AltStatus {
    guard(|| {
        non_null(g, "graph")?;
        non_null(out, "out")?;
        *out = with_graph!(&*g, x => x.vertex_count());
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_edge_count(
    g: *const AltGraph,
    out: *mut usize,
) -> AltStatus {
    guard(|| {
        non_null(g, "graph")?;
        non_null(out, "out")?;
        *out = with_graph!(&*g, x => x.edge_count());
        Ok(())
    })
}

/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_component_count(
    g: *const AltGraph,
    out: *mut usize,
) -> AltStatus {
    guard(|| {
        non_null(g, "graph")?;
        non_null(out, "out")?;
        *out = (*g).components;
        Ok(())
    })
}

/// Text label of vertex `index`, in the same encoding as the JSON records.
/// Free the result with [`altpower_string_free`].
///
/// # Safety
/// `g` must be a live handle and `out` writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_graph_vertex_label(
    g: *const AltGraph,
    index: usize,
    out: *mut *mut c_char,
) -> AltStatus {
    guard(|| {
        non_null(g, "graph")?;
        non_null(out, "out")?;
        let label = with_graph!(&*g, x => {
            if index >= x.vertex_count() {
                return Err(fail(
                    AltStatus::InvalidArgument,
                    format!("vertex {index} out of range ({} vertices)", x.vertex_count()),
                ));
            }
            x.label(index).encode()
        });
        *out = into_c_string(label);
        Ok(())
    })
}

/// Number of components of the quotient power graph as a decimal string,
/// from the closed forms. Free the result with [`altpower_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_closed_form_c0(n: usize, out: *mut *mut c_char) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        let row = lib(closed_form_counts(n))?;
        *out = into_c_string(row.c0.to_string());
        Ok(())
    })
}

/// Small counts for degree `n` from the closed forms.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_census_row(n: usize, out: *mut AltCensusRow) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        let r = lib(closed_form_counts(n))?;
        *out = AltCensusRow {
            n: n as u64,
            c0_ptype: r.c0_ptype,
            c0_order: r.c0_order,
            two_connected: r.two_connected,
            row: r.row.map_or(-1, row_index),
        };
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_two_connected(n: u64, out: *mut bool) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(two_connected(n))?;
        Ok(())
    })
}

/// Zero-based table row for `n >= 11`.
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_classify_row(n: u64, out: *mut i32) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = row_index(lib(classify_row(n))?.row);
        Ok(())
    })
}

/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn altpower_order_graph_components(n: u64, out: *mut u32) -> AltStatus {
    guard(|| {
        non_null(out, "out")?;
        *out = lib(order_graph_verdict(n))?;
        Ok(())
    })
}

/// Whether `n` lies in `P ∪ (P+1) ∪ (P+2) ∪ 2P ∪ (2P+1)`.
#[no_mangle]
pub extern "C" fn altpower_in_set_a(n: u64) -> bool {
    in_set_a(n)
}

/// Releases a string returned by the library. Null is accepted.
///
/// # Safety
/// `s` must be null or a string returned by this library not yet freed.
#[no_mangle]
pub unsafe extern "C" fn altpower_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn row_indices_follow_table_order() {
        assert_eq!(row_index(Row::ALL[0]), 0);
        assert_eq!(row_index(Row::NotInA), 9);
    }

    #[test]
    fn status_mapping() {
        let e = Error::Capacity {
            what: "x",
            n: 11,
            ceiling: 10,
        };
        assert_eq!(status_of(&e), AltStatus::Capacity);
        assert_eq!(
            status_of(&Error::Precondition("p".into())),
            AltStatus::InvalidArgument
        );
    }
}
