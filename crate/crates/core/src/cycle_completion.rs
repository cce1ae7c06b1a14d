//! Cycle completion: add non-tree edges so that every vertex lies on exactly
//! one cycle.
//!
//! A chosen set of extra edges is valid iff the fundamental cycles they close
//! (tree path plus the edge) are pairwise vertex-disjoint and cover all
//! vertices. Three solvers are provided for the weighted model (an O(n^2) DP,
//! an O((n + m) log n) DP using LCA buckets and a range-add segment tree, and
//! a bottleneck variant), plus an exact solver for the unit-weight model where
//! any non-adjacent pair may be connected.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::tree_core::{AddSegTree, DfsNumbering, LcaIndex, RootedTree, Vertex};

/// Largest accepted extra-edge weight.
pub const MAX_EXTRA_WEIGHT: i64 = 1 << 40;

/// A candidate non-tree edge. Stored with `u < v`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct ExtraEdge {
    pub u: Vertex,
    pub v: Vertex,
    pub w: i64,
}

impl ExtraEdge {
    pub fn new(u: Vertex, v: Vertex, w: i64) -> Self {
        ExtraEdge { u: u.min(v), v: u.max(v), w }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CycleCompletionResult {
    pub feasible: bool,
    /// Meaningful only when `feasible`.
    pub total_weight: i64,
    pub chosen_edges: Vec<ExtraEdge>,
}

impl CycleCompletionResult {
    fn infeasible() -> Self {
        CycleCompletionResult { feasible: false, total_weight: 0, chosen_edges: Vec::new() }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MinimaxResult {
    pub feasible: bool,
    pub w_max: Option<i64>,
    pub chosen_edges: Vec<ExtraEdge>,
}

/// Normalises and validates extra edges: endpoints in range, distinct,
/// not a tree edge, no duplicate pair, weight in `0..=MAX_EXTRA_WEIGHT`.
pub fn validate_extras(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<Vec<ExtraEdge>> {
    let mut seen = std::collections::HashSet::with_capacity(extras.len());
    extras
        .iter()
        .map(|e| {
            let e = ExtraEdge::new(e.u, e.v, e.w);
            if !tree.contains(e.u) || !tree.contains(e.v) {
                return Err(invalid(format!("extra edge ({},{}) has an endpoint outside the tree", e.u, e.v)));
            }
            if e.u == e.v {
                return Err(invalid(format!("extra edge ({},{}) is a self-loop", e.u, e.v)));
            }
            if tree.is_tree_edge(e.u, e.v) {
                return Err(invalid(format!("extra edge ({},{}) duplicates a tree edge", e.u, e.v)));
            }
            if !(0..=MAX_EXTRA_WEIGHT).contains(&e.w) {
                return Err(invalid(format!("extra edge ({},{}) has weight {} outside 0..=2^40", e.u, e.v, e.w)));
            }
            if !seen.insert((e.u, e.v)) {
                return Err(invalid(format!("extra edge ({},{}) listed twice", e.u, e.v)));
            }
            Ok(e)
        })
        .collect()
}

/// A sum of wA terms, some of which may be infinite: `inf` counts the
/// infinite terms, `sum` adds the finite ones. Subtraction removes terms.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
struct Acc {
    inf: i64,
    sum: i64,
}

impl Acc {
    fn of(w: Option<i64>) -> Acc {
        match w {
            Some(s) => Acc { inf: 0, sum: s },
            None => Acc { inf: 1, sum: 0 },
        }
    }
    fn add(self, o: Acc) -> Acc {
        Acc { inf: self.inf + o.inf, sum: self.sum + o.sum }
    }
    fn sub(self, o: Acc) -> Acc {
        Acc { inf: self.inf - o.inf, sum: self.sum - o.sum }
    }
    fn finite(self) -> Option<i64> {
        (self.inf == 0).then_some(self.sum)
    }
}

/// Per-vertex DP state shared by both weighted solvers.
struct Tables {
    wa: Vec<Option<i64>>,
    wb: Vec<Acc>,
    /// index into the extra list of the argmin candidate for wA(i)
    choice: Vec<Option<usize>>,
}

impl Tables {
    fn new(n: usize) -> Self {
        Tables { wa: vec![None; n + 1], wb: vec![Acc::default(); n + 1], choice: vec![None; n + 1] }
    }

    fn compute_wb(&mut self, tree: &RootedTree, i: Vertex) {
        self.wb[i] = tree.children(i).iter().fold(Acc::default(), |acc, &s| acc.add(Acc::of(self.wa[s])));
    }

    /// Candidate for wA(i) from edge `e`, given wAsum(i, u) and wAsum(i, v).
    fn candidate(&self, i: Vertex, e: &ExtraEdge, sum_u: Acc, sum_v: Acc) -> Option<i64> {
        let base = if e.u == i {
            sum_v
        } else if e.v == i {
            sum_u
        } else {
            sum_u.add(sum_v).sub(self.wb[i])
        };
        base.finite().map(|s| s + e.w)
    }

    fn offer(&mut self, i: Vertex, idx: usize, value: Option<i64>, extras: &[ExtraEdge]) {
        let Some(value) = value else { return };
        let better = match (self.wa[i], self.choice[i]) {
            (Some(cur), Some(c)) => {
                value < cur || (value == cur && (extras[idx].u, extras[idx].v) < (extras[c].u, extras[c].v))
            }
            _ => true,
        };
        if better {
            self.wa[i] = Some(value);
            self.choice[i] = Some(idx);
        }
    }

    /// Recovers the chosen edges by walking down from the root.
    fn traceback(&self, tree: &RootedTree, extras: &[ExtraEdge]) -> CycleCompletionResult {
        let root = tree.root();
        let Some(total) = self.wa[root] else {
            return CycleCompletionResult::infeasible();
        };
        let mut on_path = vec![false; tree.n() + 1];
        let mut chosen = Vec::new();
        let mut stack = vec![root];
        let mut path = Vec::new();
        while let Some(x) = stack.pop() {
            let e = extras[self.choice[x].expect("finite wA has a witness")];
            chosen.push(e);
            path.clear();
            path.push(x);
            for end in [e.u, e.v] {
                let mut y = end;
                while y != x {
                    path.push(y);
                    y = tree.parent(y).expect("endpoint lies below its LCA");
                }
            }
            for &y in &path {
                on_path[y] = true;
            }
            for &y in &path {
                stack.extend(tree.children(y).iter().copied().filter(|&s| !on_path[s]));
            }
        }
        chosen.sort();
        debug_assert_eq!(chosen.iter().map(|e| e.w).sum::<i64>(), total);
        CycleCompletionResult { feasible: true, total_weight: total, chosen_edges: chosen }
    }
}

fn naive_lca(tree: &RootedTree, depth: &[usize], mut a: Vertex, mut b: Vertex) -> Vertex {
    while depth[a] > depth[b] {
        a = tree.parent(a).unwrap();
    }
    while depth[b] > depth[a] {
        b = tree.parent(b).unwrap();
    }
    while a != b {
        a = tree.parent(a).unwrap();
        b = tree.parent(b).unwrap();
    }
    a
}

/// O(n^2) DP: wAsum(i, ·) is recomputed by a traversal of T(i) for every
/// vertex that has candidate edges.
pub fn solve_quadratic(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<CycleCompletionResult> {
    let extras = validate_extras(tree, extras)?;
    let n = tree.n();
    let depth = tree.depths();
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (idx, e) in extras.iter().enumerate() {
        bucket[naive_lca(tree, &depth, e.u, e.v)].push(idx);
    }
    let mut t = Tables::new(n);
    let mut wasum = vec![Acc::default(); n + 1];
    let mut stack = Vec::new();
    for i in tree.postorder() {
        t.compute_wb(tree, i);
        if tree.is_leaf(i) || bucket[i].is_empty() {
            continue;
        }
        wasum[i] = t.wb[i];
        stack.push(i);
        while let Some(x) = stack.pop() {
            for &c in tree.children(x) {
                wasum[c] = wasum[x].sub(Acc::of(t.wa[c])).add(t.wb[c]);
                stack.push(c);
            }
        }
        for &idx in &bucket[i] {
            let e = extras[idx];
            let cand = t.candidate(i, &e, wasum[e.u], wasum[e.v]);
            t.offer(i, idx, cand, &extras);
        }
    }
    Ok(t.traceback(tree, &extras))
}

/// O((n + m) log n) DP. Extras are bucketed by LCA; wAsum(i, p) for every
/// p in T(i) is kept in a range-add segment tree over DFS numbers, shifted by
/// `wB(i) - wA(s)` on T(s) for each son `s` when `i` is processed.
pub fn solve_fast(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<CycleCompletionResult> {
    let extras = validate_extras(tree, extras)?;
    Ok(fast_core(tree, &extras, &DfsNumbering::new(tree), &LcaIndex::new(tree), i64::MAX))
}

fn fast_core(
    tree: &RootedTree,
    extras: &[ExtraEdge],
    dfs: &DfsNumbering,
    lca: &LcaIndex,
    weight_cap: i64,
) -> CycleCompletionResult {
    let n = tree.n();
    let mut bucket: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (idx, e) in extras.iter().enumerate() {
        if e.w <= weight_cap {
            bucket[lca.lca_unchecked(e.u, e.v)].push(idx);
        }
    }
    let mut t = Tables::new(n);
    // finite parts and infinity counts of wAsum
    let mut sums = AddSegTree::zeros(n);
    let mut infs = AddSegTree::zeros(n);
    let query = |sums: &AddSegTree, infs: &AddSegTree, p: Vertex| Acc {
        inf: infs.point_query(dfs.num(p)).unwrap(),
        sum: sums.point_query(dfs.num(p)).unwrap(),
    };
    for i in tree.postorder() {
        t.compute_wb(tree, i);
        let wb = t.wb[i];
        sums.point_set(dfs.num(i), wb.sum).unwrap();
        infs.point_set(dfs.num(i), wb.inf).unwrap();
        for &s in tree.children(i) {
            let shift = wb.sub(Acc::of(t.wa[s]));
            let (l, r) = (dfs.num(s), dfs.max(s));
            sums.range_add(l, r, shift.sum).unwrap();
            infs.range_add(l, r, shift.inf).unwrap();
        }
        for &idx in &bucket[i] {
            let e = extras[idx];
            let cand = t.candidate(i, &e, query(&sums, &infs, e.u), query(&sums, &infs, e.v));
            t.offer(i, idx, cand, extras);
        }
    }
    t.traceback(tree, extras)
}

/// Minimises the largest added weight: binary search over the distinct extra
/// weights, testing feasibility with the fast DP restricted to edges of
/// weight at most the probe.
pub fn solve_minimax(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<MinimaxResult> {
    let extras = validate_extras(tree, extras)?;
    let dfs = DfsNumbering::new(tree);
    let lca = LcaIndex::new(tree);
    let mut weights: Vec<i64> = extras.iter().map(|e| e.w).collect();
    weights.sort_unstable();
    weights.dedup();
    let run = |cap: i64| fast_core(tree, &extras, &dfs, &lca, cap);
    let Some(&top) = weights.last() else {
        return Ok(MinimaxResult { feasible: false, w_max: None, chosen_edges: Vec::new() });
    };
    let best = run(top);
    if !best.feasible {
        return Ok(MinimaxResult { feasible: false, w_max: None, chosen_edges: Vec::new() });
    }
    let (mut lo, mut hi) = (0, weights.len() - 1);
    let mut witness = best;
    while lo < hi {
        let mid = (lo + hi) / 2;
        let r = run(weights[mid]);
        if r.feasible {
            hi = mid;
            witness = r;
        } else {
            lo = mid + 1;
        }
    }
    if witness.chosen_edges.iter().any(|e| e.w > weights[lo]) {
        witness = run(weights[lo]);
    }
    let w_max = witness.chosen_edges.iter().map(|e| e.w).max();
    debug_assert_eq!(w_max, Some(weights[lo]));
    Ok(MinimaxResult { feasible: true, w_max, chosen_edges: witness.chosen_edges })
}

// Open-path states of a vertex in the unit-weight solver: the vertex is
// covered (CLOSED), or it heads an uncovered path of 1, 2 or >= 3 vertices.
const CLOSED: usize = 0;
const OPEN3: usize = 3;

/// How a son takes part in its parent's decision.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum Role {
    /// son's own subtree is fully covered (its state CLOSED)
    Done,
    /// son's open path of >= 3 vertices is closed by the edge (son, endpoint)
    SelfClose,
    /// son's open path of the given length continues through the parent
    Join(usize),
}

// fold slots: no join yet, one join with son state 1/2/3, two joins
const FOLD: usize = 5;
const TWO: usize = 4;

/// Unit weights, any non-adjacent pair allowed: the minimum number of extra
/// edges, or infeasible.
///
/// Every vertex tracks `l(i)`, the length of an uncovered path starting at
/// `i` inside T(i), and its far endpoint `e(i)`. Two open son paths may be
/// joined through `i` by the edge `(e(s1), e(s2))`; an open path of at least
/// three vertices may be closed on its own by `(s, e(s))`. Since keeping a
/// short path open can be better or worse than closing it depending on the
/// ancestors, each vertex keeps the minimum edge count for each length class
/// {covered, 1, 2, >= 3} instead of committing to one.
pub fn greedy_unit_any_pair(tree: &RootedTree) -> CycleCompletionResult {
    let n = tree.n();
    let post = tree.postorder();
    let mut best = vec![[None::<u64>; 4]; n + 1];
    // per vertex, per son position: fold slots after that son + back-pointers
    let mut trace: Vec<Vec<[(Option<u64>, usize, Role); FOLD]>> = vec![Vec::new(); n + 1];
    for &i in &post {
        let mut fold: [Option<u64>; FOLD] = [Some(0), None, None, None, None];
        for &s in tree.children(i) {
            let b = best[s];
            let done = b[CLOSED];
            let self_close = b[OPEN3].map(|c| c + 1);
            let mut next: [(Option<u64>, usize, Role); FOLD] = [(None, 0, Role::Done); FOLD];
            let mut relax = |slot: usize, val: Option<u64>, from: usize, role: Role| {
                if let Some(v) = val {
                    if next[slot].0.is_none_or(|cur| v < cur) {
                        next[slot] = (Some(v), from, role);
                    }
                }
            };
            for (slot, cur) in fold.iter().enumerate() {
                let Some(cur) = *cur else { continue };
                relax(slot, done.map(|d| cur + d), slot, Role::Done);
                relax(slot, self_close.map(|d| cur + d), slot, Role::SelfClose);
                for len in 1..=3 {
                    let Some(j) = b[len] else { continue };
                    match slot {
                        0 => relax(len, Some(cur + j), slot, Role::Join(len)),
                        1..=3 => relax(TWO, Some(cur + j), slot, Role::Join(len)),
                        _ => {}
                    }
                }
            }
            fold = next.map(|x| x.0);
            trace[i].push(next);
        }
        best[i] = [
            fold[TWO].map(|c| c + 1),
            fold[0],
            fold[1],
            match (fold[2], fold[3]) {
                (Some(a), Some(b)) => Some(a.min(b)),
                (a, b) => a.or(b),
            },
        ];
    }

    let root = tree.root();
    let (root_state, total) = match (best[root][CLOSED], best[root][OPEN3]) {
        (Some(a), Some(b)) if b + 1 < a => (OPEN3, b + 1),
        (Some(a), _) => (CLOSED, a),
        (None, Some(b)) => (OPEN3, b + 1),
        (None, None) => return CycleCompletionResult::infeasible(),
    };

    // top-down: fix the state of every vertex and the role of every son
    let mut state = vec![0usize; n + 1];
    let mut role = vec![Role::Done; n + 1];
    state[root] = root_state;
    for &i in post.iter().rev() {
        let kids = tree.children(i);
        let mut slot = match state[i] {
            CLOSED => TWO,
            1 => 0,
            2 => 1,
            _ => match (trace_end(&trace[i], 2), trace_end(&trace[i], 3)) {
                (Some(a), Some(b)) if b < a => 3,
                (Some(_), _) => 2,
                _ => 3,
            },
        };
        for pos in (0..kids.len()).rev() {
            let (_, from, r) = trace[i][pos][slot];
            let s = kids[pos];
            role[s] = r;
            state[s] = match r {
                Role::Done => CLOSED,
                Role::SelfClose => OPEN3,
                Role::Join(len) => len,
            };
            slot = from;
        }
    }

    // bottom-up: endpoints e(i) and the edges themselves
    let mut end = vec![0usize; n + 1];
    let mut chosen = Vec::new();
    for &i in &post {
        let joined: Vec<Vertex> =
            tree.children(i).iter().copied().filter(|&s| matches!(role[s], Role::Join(_))).collect();
        for &s in tree.children(i) {
            if role[s] == Role::SelfClose {
                chosen.push(ExtraEdge::new(s, end[s], 1));
            }
        }
        match joined.as_slice() {
            [] => end[i] = i,
            [s] => end[i] = end[*s],
            [a, b] => {
                chosen.push(ExtraEdge::new(end[*a], end[*b], 1));
                end[i] = i;
            }
            _ => unreachable!("at most two son paths pass through a vertex"),
        }
    }
    if root_state == OPEN3 {
        chosen.push(ExtraEdge::new(root, end[root], 1));
    }
    chosen.sort();
    debug_assert_eq!(chosen.len() as u64, total);
    CycleCompletionResult { feasible: true, total_weight: total as i64, chosen_edges: chosen }
}

fn trace_end(trace: &[[(Option<u64>, usize, Role); FOLD]], slot: usize) -> Option<u64> {
    trace.last().and_then(|t| t[slot].0)
}

/// Checks that every vertex lies on exactly one fundamental cycle of `edges`
/// and that no edge is a tree edge or a self-loop.
pub fn check_cycle_cover(tree: &RootedTree, edges: &[ExtraEdge]) -> std::result::Result<(), String> {
    let n = tree.n();
    let lca = LcaIndex::new(tree);
    let mut diff = vec![0i64; n + 1];
    for e in edges {
        if e.u == e.v || !tree.contains(e.u) || !tree.contains(e.v) {
            return Err(format!("edge ({},{}) is not a pair of distinct tree vertices", e.u, e.v));
        }
        if tree.is_tree_edge(e.u, e.v) {
            return Err(format!("edge ({},{}) is a tree edge", e.u, e.v));
        }
        let top = lca.lca_unchecked(e.u, e.v);
        diff[e.u] += 1;
        diff[e.v] += 1;
        diff[top] -= 1;
        if let Some(p) = tree.parent(top) {
            diff[p] -= 1;
        }
    }
    for v in tree.postorder() {
        if let Some(p) = tree.parent(v) {
            diff[p] += diff[v];
        }
    }
    match (1..=n).find(|&v| diff[v] != 1) {
        Some(v) => Err(format!("vertex {v} lies on {} cycles", diff[v])),
        None => Ok(()),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    fn path(n: usize) -> RootedTree {
        let edges: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        root_at(n, &edges, 1).unwrap()
    }

    fn e(u: Vertex, v: Vertex, w: i64) -> ExtraEdge {
        ExtraEdge::new(u, v, w)
    }

    #[test]
    fn unit_path_of_three() {
        let r = greedy_unit_any_pair(&path(3));
        assert!(r.feasible);
        assert_eq!(r.chosen_edges, vec![e(1, 3, 1)]);
    }

    #[test]
    fn unit_star_and_pair_infeasible() {
        let star = root_at(4, &[(1, 2), (1, 3), (1, 4)], 1).unwrap();
        assert!(!greedy_unit_any_pair(&star).feasible);
        assert!(!greedy_unit_any_pair(&path(2)).feasible);
        assert!(!greedy_unit_any_pair(&path(1)).feasible);
    }

    #[test]
    fn unit_open_path_through_root() {
        // p=1 - i=2; i has a chain 3-4-5 and a leaf 6
        let t = root_at(6, &[(1, 2), (2, 3), (3, 4), (4, 5), (2, 6)], 1).unwrap();
        let r = greedy_unit_any_pair(&t);
        assert!(r.feasible);
        assert_eq!(r.chosen_edges, vec![e(1, 6, 1), e(3, 5, 1)]);
        check_cycle_cover(&t, &r.chosen_edges).unwrap();
    }

    #[test]
    fn weighted_examples() {
        let t = path(4);
        let extras = [e(1, 3, 2), e(1, 4, 7), e(2, 4, 4)];
        for solve in [solve_quadratic, solve_fast] {
            let r = solve(&t, &extras).unwrap();
            assert!(r.feasible);
            assert_eq!(r.total_weight, 7);
            assert_eq!(r.chosen_edges, vec![e(1, 4, 7)]);
            let r = solve(&path(3), &[e(1, 3, 9)]).unwrap();
            assert_eq!((r.feasible, r.total_weight), (true, 9));
            assert!(!solve(&t, &[e(1, 3, 2)]).unwrap().feasible);
            assert!(!solve(&t, &[]).unwrap().feasible);
        }
    }

    #[test]
    fn minimax_examples() {
        let r = solve_minimax(&path(4), &[e(1, 4, 7), e(2, 4, 4), e(1, 3, 2)]).unwrap();
        assert_eq!((r.feasible, r.w_max), (true, Some(7)));
        let r = solve_minimax(&path(3), &[e(1, 3, 9)]).unwrap();
        assert_eq!(r.w_max, Some(9));
        let r = solve_minimax(&path(3), &[]).unwrap();
        assert!(!r.feasible);
        assert_eq!(r.w_max, None);
    }

    #[test]
    fn tree_edge_rejected() {
        assert!(solve_quadratic(&path(3), &[e(1, 2, 1)]).is_err());
        assert!(solve_fast(&path(3), &[e(1, 3, 1), e(3, 1, 2)]).is_err());
        assert!(solve_fast(&path(3), &[e(1, 3, -1)]).is_err());
    }

    #[test]
    fn tie_prefers_smallest_pair() {
        // two leaves below the root, both closing with the root or each other
        let t = root_at(5, &[(1, 2), (2, 3), (1, 4), (4, 5)], 1).unwrap();
        let extras = [e(3, 5, 5), e(1, 3, 1), e(1, 5, 1), e(2, 5, 5)];
        let a = solve_quadratic(&t, &extras).unwrap();
        let b = solve_fast(&t, &extras).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.chosen_edges, vec![e(3, 5, 5)]);
    }

    #[test]
    fn cover_checker() {
        let t = path(4);
        assert!(check_cycle_cover(&t, &[e(1, 4, 0)]).is_ok());
        assert!(check_cycle_cover(&t, &[e(1, 3, 0), e(2, 4, 0)]).is_err());
        assert!(check_cycle_cover(&t, &[e(1, 3, 0)]).is_err());
    }
}
