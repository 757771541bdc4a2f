//! C ABI over the minprop propagation engine.
//!
//! Graphs are opaque handles created and freed through this interface; every
//! function returns a [`MinpropStatus`] and writes results through out
//! pointers. Vertex sets cross the boundary as `uint32_t` id arrays. Buffers
//! follow a query protocol: when a buffer is too small the call returns
//! `BUFFER_TOO_SMALL` and stores the required length, so callers may size,
//! allocate, and call again.

use std::ffi::{c_char, CString};

use minprop::families::{self, TreeSpec};
use minprop::{propagation, solver, Error, Graph, VertexSet};

/// Result of every call in this interface.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinpropStatus {
    Ok = 0,
    /// A required pointer argument was null.
    NullArgument = 1,
    /// Malformed input: self-loop, duplicate edge, id out of range, bad
    /// family parameters, or a seed that violates a precondition.
    InvalidArgument = 2,
    Disconnected = 3,
    NotATree = 4,
    /// The request exceeds a documented capacity cap.
    CapacityExceeded = 5,
    /// The restricted solve has no propagating subset.
    NoSolution = 6,
    /// The provided buffer is too small; the required length was stored.
    BufferTooSmall = 7,
}

fn status_of(e: &Error) -> MinpropStatus {
    match e {
        Error::Disconnected => MinpropStatus::Disconnected,
        Error::NotATree => MinpropStatus::NotATree,
        Error::Capacity { .. } => MinpropStatus::CapacityExceeded,
        _ => MinpropStatus::InvalidArgument,
    }
}

/// Graph families constructible through [`minprop_graph_family`].
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinpropFamily {
    /// `a` vertices; `b` ignored.
    Path = 0,
    Cycle = 1,
    Complete = 2,
    Star = 3,
    /// Bone of `a` vertices, total tooth size `b`.
    Comb = 4,
    /// Balanced `a`-ary tree with `b` levels.
    Tree = 5,
    /// `a` rows by `b` columns.
    Grid = 6,
}

/// Which minimum the solver computes.
#[repr(C)]
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum MinpropSolveMode {
    /// Minimum propagating set over all seeds.
    Unrestricted = 0,
    /// Seeds restricted to degree-1 vertices.
    LeavesOnly = 1,
    /// Tree oriented away from `root`; forcing follows that flow.
    TopDown = 2,
    /// Tree oriented toward `root`.
    BottomUp = 3,
}

/// Opaque graph handle.
pub struct MinpropGraph {
    inner: Graph,
}

/// Version of the underlying engine, as a static NUL-terminated string.
#[no_mangle]
pub extern "C" fn minprop_version() -> *const c_char {
    concat!(env!("CARGO_PKG_VERSION"), "\0").as_ptr() as *const c_char
}

unsafe fn slice_arg<'a>(ptr: *const u32, len: usize) -> Option<&'a [u32]> {
    if len == 0 {
        Some(&[])
    } else if ptr.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(ptr, len))
    }
}

fn boxed(graph: Graph, out: *mut *mut MinpropGraph) -> MinpropStatus {
    unsafe {
        *out = Box::into_raw(Box::new(MinpropGraph { inner: graph }));
    }
    MinpropStatus::Ok
}

/// Builds a simple undirected graph on `n` vertices from `edge_count` pairs
/// laid out flat as `u0 v0 u1 v1 …`. `edges` may be null when `edge_count`
/// is 0.
///
/// # Safety
/// `edges` must point to `2 * edge_count` readable `uint32_t` values, and
/// `out` must be a valid pointer. A handle returned here must be released
/// with [`minprop_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_new(
    n: u32,
    edges: *const u32,
    edge_count: usize,
    out: *mut *mut MinpropGraph,
) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    let Some(flat) = slice_arg(edges, edge_count.saturating_mul(2)) else {
        return MinpropStatus::NullArgument;
    };
    let pairs: Vec<(usize, usize)> = flat
        .chunks_exact(2)
        .map(|c| (c[0] as usize, c[1] as usize))
        .collect();
    match Graph::new(n as usize, &pairs) {
        Ok(g) => boxed(g, out),
        Err(e) => status_of(&e),
    }
}

/// Builds one of the canonical families; see [`MinpropFamily`] for how the
/// two parameters are read.
///
/// # Safety
/// `out` must be a valid pointer; the returned handle must be released with
/// [`minprop_graph_free`].
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_family(
    family: MinpropFamily,
    a: u32,
    b: u32,
    out: *mut *mut MinpropGraph,
) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    let (a, b) = (a as usize, b as usize);
    let built = match family {
        MinpropFamily::Path => families::path(a),
        MinpropFamily::Cycle => families::cycle(a),
        MinpropFamily::Complete => families::complete(a),
        MinpropFamily::Star => families::star(a),
        MinpropFamily::Comb => families::comb(a, b),
        MinpropFamily::Tree => families::balanced_tree(a, b),
        MinpropFamily::Grid => families::grid(a, b),
    };
    match built {
        Ok(g) => boxed(g, out),
        Err(e) => status_of(&e),
    }
}

/// Releases a graph handle; a null handle is ignored.
///
/// # Safety
/// `g` must be null or a handle obtained from this interface that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_free(g: *mut MinpropGraph) {
    if !g.is_null() {
        drop(Box::from_raw(g));
    }
}

unsafe fn graph_arg<'a>(g: *const MinpropGraph) -> Option<&'a Graph> {
    g.as_ref().map(|h| &h.inner)
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_order(
    g: *const MinpropGraph,
    out: *mut u32,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    *out = g.n() as u32;
    MinpropStatus::Ok
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_edge_count(
    g: *const MinpropGraph,
    out: *mut u64,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    *out = g.edge_count() as u64;
    MinpropStatus::Ok
}

/// # Safety
/// `g` must be a live handle and `out` a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_graph_has_edge(
    g: *const MinpropGraph,
    u: u32,
    v: u32,
    out: *mut bool,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    if u as usize >= g.n() || v as usize >= g.n() {
        return MinpropStatus::InvalidArgument;
    }
    *out = g.has_edge(u as usize, v as usize);
    MinpropStatus::Ok
}

unsafe fn seed_arg(g: &Graph, ptr: *const u32, len: usize) -> Result<VertexSet, MinpropStatus> {
    let Some(ids) = slice_arg(ptr, len) else {
        return Err(MinpropStatus::NullArgument);
    };
    let ids: Vec<usize> = ids.iter().map(|&v| v as usize).collect();
    VertexSet::from_ids(g.n(), &ids).map_err(|e| status_of(&e))
}

/// Writes the members of the closure of the seed set, ascending, into
/// `out_members` and their count into `out_len`. With `capacity` too small,
/// returns `BUFFER_TOO_SMALL` after storing the required length; a buffer of
/// the graph order is always enough.
///
/// # Safety
/// `g` must be a live handle, `seed` must point to `seed_len` readable ids,
/// `out_members` to `capacity` writable slots, and `out_len` must be valid.
#[no_mangle]
pub unsafe extern "C" fn minprop_closure(
    g: *const MinpropGraph,
    seed: *const u32,
    seed_len: usize,
    out_members: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out_len.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    let colored = match seed_arg(g, seed, seed_len) {
        Ok(s) => propagation::closure(g, &s),
        Err(status) => return status,
    };
    write_ids(&colored.ids(), out_members, capacity, out_len)
}

unsafe fn write_ids(
    ids: &[usize],
    buf: *mut u32,
    capacity: usize,
    out_len: *mut usize,
) -> MinpropStatus {
    *out_len = ids.len();
    if ids.len() > capacity {
        return MinpropStatus::BufferTooSmall;
    }
    if ids.is_empty() {
        return MinpropStatus::Ok;
    }
    if buf.is_null() {
        return MinpropStatus::NullArgument;
    }
    for (i, &v) in ids.iter().enumerate() {
        *buf.add(i) = v as u32;
    }
    MinpropStatus::Ok
}

/// Whether the seed's closure covers every vertex.
///
/// # Safety
/// `g` must be a live handle, `seed` must point to `seed_len` readable ids,
/// and `out` must be valid.
#[no_mangle]
pub unsafe extern "C" fn minprop_propagates(
    g: *const MinpropGraph,
    seed: *const u32,
    seed_len: usize,
    out: *mut bool,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    match seed_arg(g, seed, seed_len) {
        Ok(s) => {
            *out = propagation::propagates(g, &s);
            MinpropStatus::Ok
        }
        Err(status) => status,
    }
}

/// Rounds until the synchronized process covers the graph, or -1 when its
/// fixpoint falls short.
///
/// # Safety
/// `g` must be a live handle, `seed` must point to `seed_len` readable ids,
/// and `out_rounds` must be valid.
#[no_mangle]
pub unsafe extern "C" fn minprop_synchronized_rounds(
    g: *const MinpropGraph,
    seed: *const u32,
    seed_len: usize,
    out_rounds: *mut i64,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out_rounds.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    match seed_arg(g, seed, seed_len) {
        Ok(s) => {
            *out_rounds = match propagation::synchronized_rounds(g, &s) {
                Some(r) => r as i64,
                None => -1,
            };
            MinpropStatus::Ok
        }
        Err(status) => status,
    }
}

/// Runs the exact solver. `root` is read only by the top-down and bottom-up
/// modes. `out_size` receives the minimum cardinality. The witness buffer is
/// optional: pass a null `out_witness` to skip it, otherwise `out_witness_len`
/// must be valid and the buffer follows the usual size-query protocol.
/// `out_sets_tested` is optional.
///
/// # Safety
/// `g` must be a live handle; every non-null pointer must be valid for the
/// access described above.
#[no_mangle]
pub unsafe extern "C" fn minprop_solve(
    g: *const MinpropGraph,
    mode: MinpropSolveMode,
    root: u32,
    out_size: *mut u32,
    out_witness: *mut u32,
    witness_capacity: usize,
    out_witness_len: *mut usize,
    out_sets_tested: *mut u64,
) -> MinpropStatus {
    let (Some(g), false) = (graph_arg(g), out_size.is_null()) else {
        return MinpropStatus::NullArgument;
    };
    let solved = match mode {
        MinpropSolveMode::Unrestricted => solver::min_propagating_set(g),
        MinpropSolveMode::LeavesOnly => {
            match VertexSet::from_ids(g.n(), &g.leaves())
                .and_then(|c| solver::min_propagating_set_restricted(g, &c))
            {
                Ok(Some(r)) => Ok(r),
                Ok(None) => return MinpropStatus::NoSolution,
                Err(e) => Err(e),
            }
        }
        MinpropSolveMode::TopDown => solver::pi_topdown(g, root as usize),
        MinpropSolveMode::BottomUp => solver::pi_bottomup(g, root as usize),
    };
    let solved = match solved {
        Ok(r) => r,
        Err(e) => return status_of(&e),
    };
    *out_size = solved.size as u32;
    if !out_sets_tested.is_null() {
        *out_sets_tested = solved.sets_tested;
    }
    if !out_witness.is_null() {
        if out_witness_len.is_null() {
            return MinpropStatus::NullArgument;
        }
        return write_ids(
            &solved.witness.ids(),
            out_witness,
            witness_capacity,
            out_witness_len,
        );
    }
    MinpropStatus::Ok
}

/// Closed form for the minimum seed size of the balanced `m`-ary tree with
/// `k` levels.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_tree_pi_formula(m: u64, k: u32, out: *mut u64) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    match families::balanced_tree_pi(m, k) {
        Ok(v) => {
            *out = v;
            MinpropStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Number of vertices of the balanced `m`-ary tree with `k` levels.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_tree_order(m: u64, k: u32, out: *mut u64) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    match TreeSpec::new(m as usize, k as usize) {
        Ok(spec) => {
            *out = spec.vertex_count() as u64;
            MinpropStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// The `i`-th Jacobsthal number; indices above 65 exceed `uint64_t`.
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_jacobsthal(i: u32, out: *mut u64) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    if i > 65 {
        return MinpropStatus::CapacityExceeded;
    }
    *out = families::jacobsthal(i);
    MinpropStatus::Ok
}

/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_is_jacobsthal(x: u64, out: *mut bool) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    *out = families::is_jacobsthal(x);
    MinpropStatus::Ok
}

/// The alternating sign matrix count A(n) as a newly allocated decimal
/// string; free it with [`minprop_string_free`].
///
/// # Safety
/// `out` must be a valid pointer.
#[no_mangle]
pub unsafe extern "C" fn minprop_asm_count_string(n: u64, out: *mut *mut c_char) -> MinpropStatus {
    if out.is_null() {
        return MinpropStatus::NullArgument;
    }
    match families::asm_count(n) {
        Ok(v) => {
            let s = CString::new(v.to_string()).expect("decimal digits contain no NUL");
            *out = s.into_raw();
            MinpropStatus::Ok
        }
        Err(e) => status_of(&e),
    }
}

/// Frees a string returned by this interface; a null pointer is ignored.
///
/// # Safety
/// `s` must be null or a string obtained from this interface that has not
/// been freed yet.
#[no_mangle]
pub unsafe extern "C" fn minprop_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}
