//! C interface to treetopo.
//!
//! Every entry point returns a [`TtStatus`]; results go through out
//! pointers. On failure the message is kept per thread and can be read with
//! [`tt_last_error`]. Vertices are 1-based as in the Rust API.

use std::cell::RefCell;
use std::ffi::{c_char, CStr, CString};
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::ptr;

use treetopo::cycle_completion::{solve_fast, ExtraEdge};
use treetopo::tree_core::{root_at, RootedTree};
use treetopo::Error;

#[repr(C)]
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TtStatus {
    Ok = 0,
    Infeasible = 1,
    Malformed = 2,
    InvalidInput = 3,
    ResourceLimit = 4,
    Contract = 5,
    NullArgument = 6,
    Panic = 7,
}

/// Opaque rooted tree.
pub struct TtTree {
    inner: RootedTree,
}

/// Candidate non-tree edge for cycle completion.
#[repr(C)]
#[derive(Debug, Clone, Copy)]
pub struct TtExtraEdge {
    pub u: usize,
    pub v: usize,
    pub w: i64,
}

thread_local! {
    static LAST_ERROR: RefCell<Option<CString>> = const { RefCell::new(None) };
}

fn set_error(msg: String) {
    let c = CString::new(msg.replace('\0', " ")).unwrap_or_default();
    LAST_ERROR.with(|e| *e.borrow_mut() = Some(c));
}

fn fail(e: Error) -> TtStatus {
    let status = match &e {
        Error::Malformed(_) => TtStatus::Malformed,
        Error::InvalidInput(_) => TtStatus::InvalidInput,
        Error::ResourceLimit(_) => TtStatus::ResourceLimit,
        Error::Contract(_) => TtStatus::Contract,
    };
    set_error(e.to_string());
    status
}

fn null_arg(name: &str) -> TtStatus {
    set_error(format!("{name} is null"));
    TtStatus::NullArgument
}

/// Runs `f`, turning panics into `TtStatus::Panic`.
fn guard(f: impl FnOnce() -> TtStatus) -> TtStatus {
    LAST_ERROR.with(|e| *e.borrow_mut() = None);
    match catch_unwind(AssertUnwindSafe(f)) {
        Ok(s) => s,
        Err(p) => {
            let msg = p
                .downcast_ref::<String>()
                .cloned()
                .or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()))
                .unwrap_or_else(|| "unknown panic".into());
            set_error(format!("internal panic: {msg}"));
            TtStatus::Panic
        }
    }
}

unsafe fn slice<'a, T>(p: *const T, len: usize) -> Option<&'a [T]> {
    if len == 0 {
        Some(&[])
    } else if p.is_null() {
        None
    } else {
        Some(std::slice::from_raw_parts(p, len))
    }
}

/// Message of the last failed call on this thread, or null. Valid until the
/// next call into this library from the same thread.
#[no_mangle]
pub extern "C" fn tt_last_error() -> *const c_char {
    LAST_ERROR.with(|e| e.borrow().as_ref().map_or(ptr::null(), |c| c.as_ptr()))
}

/// Frees a string returned by this library. Null is ignored.
///
/// # Safety
/// `s` must come from this library and not have been freed.
#[no_mangle]
pub unsafe extern "C" fn tt_string_free(s: *mut c_char) {
    if !s.is_null() {
        drop(CString::from_raw(s));
    }
}

/// Builds a tree on vertices 1..=n from `n - 1` edges given as pairs
/// `edges[2i], edges[2i+1]`, rooted at `root`.
///
/// # Safety
/// `edges` must point to `2 * (n - 1)` values; `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_tree_new(n: usize, edges: *const usize, root: usize, out: *mut *mut TtTree) -> TtStatus {
    guard(|| {
        if out.is_null() {
            return null_arg("out");
        }
        let Some(flat) = slice(edges, 2 * n.saturating_sub(1)) else {
            return null_arg("edges");
        };
        let pairs: Vec<(usize, usize)> = flat.chunks_exact(2).map(|c| (c[0], c[1])).collect();
        match root_at(n, &pairs, root) {
            Ok(t) => {
                *out = Box::into_raw(Box::new(TtTree { inner: t }));
                TtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Attaches `weights[v - 1]` to each vertex v.
///
/// # Safety
/// `tree` must be live; `weights` must point to n values.
#[no_mangle]
pub unsafe extern "C" fn tt_tree_set_vertex_weights(tree: *mut TtTree, weights: *const i64) -> TtStatus {
    guard(|| {
        let Some(t) = tree.as_mut() else { return null_arg("tree") };
        let Some(w) = slice(weights, t.inner.n()) else { return null_arg("weights") };
        match t.inner.clone().with_vertex_weights(w) {
            Ok(inner) => {
                t.inner = inner;
                TtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// # Safety
/// `tree` must be null or a live handle from [`tt_tree_new`].
#[no_mangle]
pub unsafe extern "C" fn tt_tree_free(tree: *mut TtTree) {
    if !tree.is_null() {
        drop(Box::from_raw(tree));
    }
}

/// # Safety
/// `tree` must be live.
#[no_mangle]
pub unsafe extern "C" fn tt_tree_size(tree: *const TtTree) -> usize {
    tree.as_ref().map_or(0, |t| t.inner.n())
}

/// Grundy number of the tree.
///
/// # Safety
/// `tree` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_grundy(tree: *const TtTree, out: *mut u32) -> TtStatus {
    guard(|| {
        let Some(t) = tree.as_ref() else { return null_arg("tree") };
        if out.is_null() {
            return null_arg("out");
        }
        *out = treetopo::coloring::grundy_all(&t.inner).grundy;
        TtStatus::Ok
    })
}

/// Connected parts of sizes in [Q, 3Q-3]. Writes `part_of[v - 1]` (1-based
/// part ids) for every vertex and the number of parts.
///
/// # Safety
/// `tree` must be live; `part_of` must hold n values; `part_count` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_partition_bounded(
    tree: *const TtTree,
    q: usize,
    part_of: *mut usize,
    part_count: *mut usize,
) -> TtStatus {
    guard(|| {
        let Some(t) = tree.as_ref() else { return null_arg("tree") };
        if part_of.is_null() || part_count.is_null() {
            return null_arg("output buffer");
        }
        match treetopo::partitioning::partition_bounded(&t.inner, q) {
            Ok(Some(p)) => {
                std::slice::from_raw_parts_mut(part_of, t.inner.n()).copy_from_slice(&p.part[1..]);
                *part_count = p.part_count;
                TtStatus::Ok
            }
            Ok(None) => {
                set_error(format!("the tree has fewer than Q = {q} vertices"));
                TtStatus::Infeasible
            }
            Err(e) => fail(e),
        }
    })
}

/// Minimum total weight of extra edges putting every vertex on exactly one
/// cycle. `chosen` (m bytes, may be null) receives 1 for selected edges.
///
/// # Safety
/// `tree` must be live; `extras` must hold m edges; `total` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_cycle_complete(
    tree: *const TtTree,
    extras: *const TtExtraEdge,
    m: usize,
    total: *mut i64,
    chosen: *mut u8,
) -> TtStatus {
    guard(|| {
        let Some(t) = tree.as_ref() else { return null_arg("tree") };
        let Some(xs) = slice(extras, m) else { return null_arg("extras") };
        if total.is_null() {
            return null_arg("total");
        }
        let edges: Vec<ExtraEdge> = xs.iter().map(|e| ExtraEdge::new(e.u, e.v, e.w)).collect();
        let res = match solve_fast(&t.inner, &edges) {
            Ok(r) => r,
            Err(e) => return fail(e),
        };
        if !res.feasible {
            set_error("no cycle completion exists".into());
            return TtStatus::Infeasible;
        }
        *total = res.total_weight;
        if !chosen.is_null() {
            let picked: std::collections::HashSet<(usize, usize)> =
                res.chosen_edges.iter().map(|e| (e.u.min(e.v), e.u.max(e.v))).collect();
            for (i, e) in xs.iter().enumerate() {
                *chosen.add(i) = u8::from(picked.contains(&(e.u.min(e.v), e.u.max(e.v))));
            }
        }
        TtStatus::Ok
    })
}

/// Weight of a maximum matching over tree edges and sibling pairs, edge
/// weight |w(u) - w(v)|. Needs vertex weights.
///
/// # Safety
/// `tree` must be live; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_extended_matching(tree: *const TtTree, out: *mut i64) -> TtStatus {
    guard(|| {
        let Some(t) = tree.as_ref() else { return null_arg("tree") };
        if out.is_null() {
            return null_arg("out");
        }
        match treetopo::matching::extended_tree_max_weight_matching(&t.inner) {
            Ok(m) => {
                *out = m.weight;
                TtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Minimum root height of a strict binary tree over the leaf heights, in order.
///
/// # Safety
/// `heights` must hold n values; `out` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_min_height(heights: *const i64, n: usize, out: *mut i64) -> TtStatus {
    guard(|| {
        let Some(h) = slice(heights, n) else { return null_arg("heights") };
        if out.is_null() {
            return null_arg("out");
        }
        match treetopo::treebuild::build_linear(h) {
            Ok(t) => {
                *out = t.root_height();
                TtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Labeled trees on n vertices with exactly p leaves, as a decimal string
/// to be released with [`tt_string_free`].
///
/// # Safety
/// `out` must be writable.
#[no_mangle]
pub unsafe extern "C" fn tt_count_labeled_leaves(n: usize, p: usize, out: *mut *mut c_char) -> TtStatus {
    guard(|| {
        if out.is_null() {
            return null_arg("out");
        }
        match treetopo::counting::labeled_trees_with_leaves(n, p) {
            Ok(c) => {
                *out = CString::new(c.to_string()).expect("digits contain no NUL").into_raw();
                TtStatus::Ok
            }
            Err(e) => fail(e),
        }
    })
}

/// Runs the command-line tool in-process with `argv[0..argc]` (argv[0] is
/// the program name) and stores its exit code (0 ok, 2 infeasible, 1 error).
///
/// # Safety
/// `argv` must hold `argc` NUL-terminated strings; `exit_code` writable.
#[no_mangle]
pub unsafe extern "C" fn tt_cli_run(argc: usize, argv: *const *const c_char, exit_code: *mut i32) -> TtStatus {
    guard(|| {
        let Some(ptrs) = slice(argv, argc) else { return null_arg("argv") };
        if exit_code.is_null() {
            return null_arg("exit_code");
        }
        let mut args = Vec::with_capacity(argc);
        for &p in ptrs {
            if p.is_null() {
                return null_arg("argv entry");
            }
            match CStr::from_ptr(p).to_str() {
                Ok(s) => args.push(s.to_owned()),
                Err(_) => return fail(Error::Malformed("argument is not UTF-8".into())),
            }
        }
        *exit_code = treetopo::cli::run(args);
        TtStatus::Ok
    })
}
