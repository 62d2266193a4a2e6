//! C ABI over `johnson-core`.
//!
//! Graphs and clique lists are opaque handles created by `jg_*_new`-style
//! calls and released with the matching `_free`. Every fallible call
//! returns a [`JgStatus`]; on failure, [`jg_last_error`] gives a message
//! for the calling thread.

#![allow(clippy::missing_safety_doc)]

use std::cell::RefCell;
use std::ffi::{c_char, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use johnson_core::{
    all_maximal_cliques, binomial, clique_number, clique_partition, clique_partition_number,
    enumerate_max_cliques, enumerate_min_cliques, extend_to_maximal, verify, Clique, CliqueClass,
    Error, JohnsonParams, MaximalClique, SubsetRank, VertexLabel,
};

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JgStatus {
    Ok = 0,
    NullPointer = 1,
    InvalidParams = 2,
    Range = 3,
    InvalidLabel = 4,
    Overflow = 5,
    NotAClique = 6,
    Regime = 7,
    CapExceeded = 8,
    Consistency = 9,
    Io = 10,
    BufferTooSmall = 11,
    Panic = 12,
}

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JgCliqueClass {
    Min = 0,
    Max = 1,
}

/// Which closed-form family to enumerate.
#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum JgFamily {
    Min = 0,
    Max = 1,
    All = 2,
}

/// Opaque graph handle.
pub struct JgGraph {
    params: JohnsonParams,
}

/// Opaque list of maximal cliques.
pub struct JgCliqueList {
    cliques: Vec<(JgCliqueClass, u64, Vec<u32>)>,
}

/// One entry of a clique list. `set` is borrowed from the list and stays
/// valid until the list is freed.
#[repr(C)]
pub struct JgCliqueInfo {
    pub kind: JgCliqueClass,
    pub size: u64,
    pub set: *const u32,
    pub set_len: usize,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn status_of(e: &Error) -> JgStatus {
    match e {
        Error::Overflow(_) => JgStatus::Overflow,
        Error::Range(_) => JgStatus::Range,
        Error::InvalidLabel(_) => JgStatus::InvalidLabel,
        Error::InvalidParams(_) => JgStatus::InvalidParams,
        Error::NotAClique(_) => JgStatus::NotAClique,
        Error::Regime(_) => JgStatus::Regime,
        Error::CapExceeded { .. } => JgStatus::CapExceeded,
        Error::Consistency(_) => JgStatus::Consistency,
        Error::Io(_) => JgStatus::Io,
    }
}

struct Fail(JgStatus, String);

impl From<Error> for Fail {
    fn from(e: Error) -> Self {
        Fail(status_of(&e), e.to_string())
    }
}

fn null(what: &str) -> Fail {
    Fail(JgStatus::NullPointer, format!("{what} is null"))
}

fn guard(f: impl FnOnce() -> Result<(), Fail>) -> JgStatus {
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(Ok(())) => {
            LAST_ERROR.with(|e| *e.borrow_mut() = None);
            JgStatus::Ok
        }
        Ok(Err(Fail(status, msg))) => {
            set_error(msg);
            status
        }
        Err(_) => {
            set_error("panic inside johnson-ffi".into());
            JgStatus::Panic
        }
    }
}

unsafe fn graph<'a>(g: *const JgGraph) -> Result<&'a JohnsonParams, Fail> {
    g.as_ref().map(|g| &g.params).ok_or_else(|| null("graph"))
}

unsafe fn write<T>(out: *mut T, value: T) -> Result<(), Fail> {
    if out.is_null() {
        return Err(null("output pointer"));
    }
    out.write(value);
    Ok(())
}

unsafe fn slice<'a>(data: *const u32, len: usize) -> Result<&'a [u32], Fail> {
    if len == 0 {
        return Ok(&[]);
    }
    if data.is_null() {
        return Err(null("label array"));
    }
    Ok(std::slice::from_raw_parts(data, len))
}

unsafe fn label(p: &JohnsonParams, data: *const u32, len: usize) -> Result<VertexLabel, Fail> {
    let l = VertexLabel::new(slice(data, len)?.iter().copied())?;
    p.check_vertex(&l)?;
    Ok(l)
}

unsafe fn emit_list(out: *mut *mut JgCliqueList, cliques: &[MaximalClique]) -> Result<(), Fail> {
    let cliques = cliques
        .iter()
        .map(|h| {
            let class = match h.class() {
                CliqueClass::Min => JgCliqueClass::Min,
                CliqueClass::Max => JgCliqueClass::Max,
            };
            (class, h.size(), h.defining_set().elements().to_vec())
        })
        .collect();
    write(out, Box::into_raw(Box::new(JgCliqueList { cliques })))
}

/// Message for the last failed call on this thread, or null. Valid until
/// the next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn jg_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

#[no_mangle]
pub unsafe extern "C" fn jg_binomial(n: u64, k: u64, out: *mut u64) -> JgStatus {
    guard(|| write(out, binomial(n, k)?))
}

/// Creates a handle for J_n(m, m-1). Requires m >= 2 and n >= m + 1.
#[no_mangle]
pub unsafe extern "C" fn jg_graph_new(n: u32, m: u32, out: *mut *mut JgGraph) -> JgStatus {
    guard(|| {
        let params = JohnsonParams::new(n, m)?;
        write(out, Box::into_raw(Box::new(JgGraph { params })))
    })
}

#[no_mangle]
pub unsafe extern "C" fn jg_graph_free(g: *mut JgGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

/// True when n = m + 1, where the graph is complete.
#[no_mangle]
pub unsafe extern "C" fn jg_graph_is_degenerate(g: *const JgGraph, out: *mut bool) -> JgStatus {
    guard(|| write(out, graph(g)?.is_degenerate()))
}

#[no_mangle]
pub unsafe extern "C" fn jg_graph_vertex_count(g: *const JgGraph, out: *mut u64) -> JgStatus {
    guard(|| write(out, graph(g)?.vertex_count()?))
}

#[no_mangle]
pub unsafe extern "C" fn jg_graph_edge_count(g: *const JgGraph, out: *mut u64) -> JgStatus {
    guard(|| write(out, graph(g)?.edge_count()?))
}

#[no_mangle]
pub unsafe extern "C" fn jg_graph_degree(g: *const JgGraph, out: *mut u64) -> JgStatus {
    guard(|| write(out, graph(g)?.degree()))
}

#[no_mangle]
pub unsafe extern "C" fn jg_clique_number(g: *const JgGraph, out: *mut u64) -> JgStatus {
    guard(|| write(out, clique_number(graph(g)?)))
}

#[no_mangle]
pub unsafe extern "C" fn jg_clique_partition_number(g: *const JgGraph, out: *mut u64) -> JgStatus {
    guard(|| write(out, clique_partition_number(graph(g)?)?))
}

/// Colex rank of the m-subset `label_ptr[0..len]`.
#[no_mangle]
pub unsafe extern "C" fn jg_rank(
    g: *const JgGraph,
    label_ptr: *const u32,
    len: usize,
    out: *mut u64,
) -> JgStatus {
    guard(|| {
        let p = graph(g)?;
        let l = label(p, label_ptr, len)?;
        write(out, p.rank(&l)?.0)
    })
}

/// Writes the m elements of the vertex with colex rank `r` into `out`,
/// which must hold at least `cap` >= m entries.
#[no_mangle]
pub unsafe extern "C" fn jg_unrank(
    g: *const JgGraph,
    r: u64,
    out: *mut u32,
    cap: usize,
) -> JgStatus {
    guard(|| {
        let p = graph(g)?;
        let l = p.unrank(SubsetRank(r))?;
        if out.is_null() {
            return Err(null("output buffer"));
        }
        if cap < l.len() {
            return Err(Fail(
                JgStatus::BufferTooSmall,
                format!("need {} entries, got {cap}", l.len()),
            ));
        }
        ptr::copy_nonoverlapping(l.elements().as_ptr(), out, l.len());
        Ok(())
    })
}

#[no_mangle]
pub unsafe extern "C" fn jg_are_adjacent(
    g: *const JgGraph,
    u: *const u32,
    u_len: usize,
    v: *const u32,
    v_len: usize,
    out: *mut bool,
) -> JgStatus {
    guard(|| {
        let p = graph(g)?;
        let (u, v) = (label(p, u, u_len)?, label(p, v, v_len)?);
        write(out, p.are_adjacent(&u, &v)?)
    })
}

/// Enumerates a closed-form family of maximal cliques in colex order of
/// their defining sets. `JgFamily::Max` fails with `Regime` when n = m + 1.
#[no_mangle]
pub unsafe extern "C" fn jg_cliques(
    g: *const JgGraph,
    family: JgFamily,
    out: *mut *mut JgCliqueList,
) -> JgStatus {
    guard(|| {
        let p = graph(g)?;
        let list: Vec<MaximalClique> = match family {
            JgFamily::Min => enumerate_min_cliques(p).collect(),
            JgFamily::Max => enumerate_max_cliques(p)?.collect(),
            JgFamily::All => all_maximal_cliques(p),
        };
        emit_list(out, &list)
    })
}

/// Maximal cliques containing the clique given as `count` labels of m
/// elements each, packed into `labels`.
#[no_mangle]
pub unsafe extern "C" fn jg_extend(
    g: *const JgGraph,
    labels: *const u32,
    count: usize,
    out: *mut *mut JgCliqueList,
) -> JgStatus {
    guard(|| {
        let p = graph(g)?;
        let m = p.m() as usize;
        let flat = slice(labels, count * m)?;
        let members = flat
            .chunks(m)
            .map(|c| {
                let l = VertexLabel::new(c.iter().copied())?;
                p.check_vertex(&l)?;
                Ok(l)
            })
            .collect::<Result<Vec<_>, Error>>()?;
        let ext = extend_to_maximal(&Clique::new(*p, &members)?)?;
        emit_list(out, &ext)
    })
}

/// A minimum clique partition of the edge set.
#[no_mangle]
pub unsafe extern "C" fn jg_partition(g: *const JgGraph, out: *mut *mut JgCliqueList) -> JgStatus {
    guard(|| {
        let part = clique_partition(graph(g)?)?;
        emit_list(out, part.parts())
    })
}

#[no_mangle]
pub unsafe extern "C" fn jg_clique_list_len(list: *const JgCliqueList) -> usize {
    list.as_ref().map_or(0, |l| l.cliques.len())
}

#[no_mangle]
pub unsafe extern "C" fn jg_clique_list_get(
    list: *const JgCliqueList,
    index: usize,
    out: *mut JgCliqueInfo,
) -> JgStatus {
    guard(|| {
        let l = list.as_ref().ok_or_else(|| null("clique list"))?;
        let (class, size, set) = l.cliques.get(index).ok_or_else(|| {
            Fail(
                JgStatus::Range,
                format!("index {index} out of {}", l.cliques.len()),
            )
        })?;
        write(
            out,
            JgCliqueInfo {
                kind: *class,
                size: *size,
                set: set.as_ptr(),
                set_len: set.len(),
            },
        )
    })
}

#[no_mangle]
pub unsafe extern "C" fn jg_clique_list_free(list: *mut JgCliqueList) {
    if !list.is_null() {
        drop(Box::from_raw(list));
    }
}

/// Runs the brute-force verification and returns its report as a JSON
/// line. `max_vertices` of 0 uses the default cap. Free with `jg_string_free`.
#[no_mangle]
pub unsafe extern "C" fn jg_verify_json(
    g: *const JgGraph,
    max_vertices: u64,
    out: *mut *mut c_char,
) -> JgStatus {
    guard(|| {
        let cap = if max_vertices == 0 {
            johnson_core::oracle::DEFAULT_MATERIALIZE_CAP
        } else {
            max_vertices
        };
        let report = verify(graph(g)?, cap)?;
        let s = CString::new(report.to_json_line(false))
            .map_err(|e| Fail(JgStatus::Io, e.to_string()))?;
        write(out, s.into_raw())
    })
}

#[no_mangle]
pub unsafe extern "C" fn jg_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
