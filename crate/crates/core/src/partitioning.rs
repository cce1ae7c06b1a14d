//! Tree partitioning: greedy parts with size bounds, and minimum-cost
//! extraction of k connected parts of prescribed sizes.

use serde::Serialize;

use crate::error::{invalid, Error, Result};
use crate::tree_core::{RootedTree, Vertex, NO_VERTEX};

/// Largest part count accepted by [`partition_connected`].
pub const K_MAX: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Partition {
    /// `part[v]` for v in 1..=n; slot 0 unused.
    pub part: Vec<usize>,
    /// `representative[p]` for p in 1..=part_count; slot 0 unused.
    pub representative: Vec<Vertex>,
    pub part_count: usize,
}

impl Partition {
    pub fn members(&self, p: usize) -> Vec<Vertex> {
        (1..self.part.len()).filter(|&v| self.part[v] == p).collect()
    }

    pub fn sizes(&self) -> Vec<usize> {
        let mut s = vec![0; self.part_count + 1];
        for &p in &self.part[1..] {
            s[p] += 1;
        }
        s.remove(0);
        s
    }
}

/// Upper bound on part sizes guaranteed by [`partition_bounded`].
pub fn bounded_max_size(q: usize) -> usize {
    (3 * q).saturating_sub(3).max(q)
}

fn assign(tree: &RootedTree, part: &mut [usize], from: Vertex, id: usize) {
    let mut stack = vec![from];
    while let Some(x) = stack.pop() {
        if part[x] != 0 {
            continue;
        }
        part[x] = id;
        stack.extend_from_slice(tree.children(x));
    }
}

/// Greedy bottom-up partition into parts of size in `[Q, max(3Q-3, Q)]`,
/// each connected together with its representative. `None` when `n < Q`.
pub fn partition_bounded(tree: &RootedTree, q: usize) -> Result<Option<Partition>> {
    if q == 0 {
        return Err(invalid("Q must be at least 1"));
    }
    let n = tree.n();
    if n < q {
        return Ok(None);
    }
    let mut part = vec![0usize; n + 1];
    let mut rep = vec![NO_VERTEX];
    let mut w = vec![0usize; n + 1];
    for i in tree.postorder() {
        let kids = tree.children(i);
        let mut ws = 0;
        let mut last_son = 0;
        for (j, &s) in kids.iter().enumerate() {
            ws += w[s];
            if ws >= q {
                rep.push(i);
                let id = rep.len() - 1;
                for &t in &kids[last_son..=j] {
                    assign(tree, &mut part, t, id);
                }
                last_son = j + 1;
                ws = 0;
            }
        }
        w[i] = ws + 1;
        if w[i] >= q {
            rep.push(i);
            let id = rep.len() - 1;
            assign(tree, &mut part, i, id);
            w[i] = 0;
        }
    }
    if w[tree.root()] > 0 {
        let target = tree
            .edges()
            .iter()
            .find_map(|&(a, b)| match (part[a], part[b]) {
                (0, p) if p > 0 => Some(p),
                (p, 0) if p > 0 => Some(p),
                _ => None,
            })
            .expect("a part is adjacent to the leftover component");
        for v in 1..=n {
            if part[v] == 0 {
                part[v] = target;
            }
        }
    }
    let part_count = rep.len() - 1;
    Ok(Some(Partition { part, representative: rep, part_count }))
}

/// Checks the structural guarantees of a bounded partition.
pub fn check_bounded(tree: &RootedTree, q: usize, p: &Partition) -> std::result::Result<(), String> {
    let n = tree.n();
    if p.part.len() != n + 1 || p.representative.len() != p.part_count + 1 {
        return Err("table lengths do not match".into());
    }
    if let Some(v) = (1..=n).find(|&v| p.part[v] == 0 || p.part[v] > p.part_count) {
        return Err(format!("vertex {v} has part id {}", p.part[v]));
    }
    let hi = bounded_max_size(q);
    for (idx, &s) in p.sizes().iter().enumerate() {
        if s < q || s > hi {
            return Err(format!("part {} has size {s} outside [{q},{hi}]", idx + 1));
        }
    }
    let adj = tree.adjacency();
    for id in 1..=p.part_count {
        let r = p.representative[id];
        if !tree.contains(r) {
            return Err(format!("part {id} has no representative"));
        }
        let inside = |v: Vertex| p.part[v] == id || v == r;
        let mut seen = vec![false; n + 1];
        let mut stack = vec![r];
        seen[r] = true;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && inside(y) {
                    seen[y] = true;
                    stack.push(y);
                }
            }
        }
        if let Some(v) = (1..=n).find(|&v| inside(v) && !seen[v]) {
            return Err(format!("part {id} plus its representative is disconnected at vertex {v}"));
        }
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedPartSpec {
    /// Nondecreasing part sizes; `k = sz.len()`.
    pub sz: Vec<usize>,
    /// `cv[v-1]` is the cost of leaving vertex v unassigned.
    pub cv: Vec<i64>,
    /// Cost of each tree edge, parallel to `tree.edges()`.
    pub ce: Vec<i64>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConnectedPartitionResult {
    pub feasible: bool,
    pub min_cost: i64,
    /// `assignment[v]` is the part of v (1-based) or `None`; slot 0 unused.
    pub assignment: Vec<Option<usize>>,
}

const INF: i64 = i64::MAX;

/// Cost table for one vertex: `c[j][S]`, j = open component size.
#[derive(Clone)]
struct Table {
    rows: usize,
    masks: usize,
    c: Vec<i64>,
}

impl Table {
    fn new(rows: usize, masks: usize) -> Self {
        Table { rows, masks, c: vec![INF; rows * masks] }
    }
    #[inline]
    fn get(&self, j: usize, s: usize) -> i64 {
        if j < self.rows {
            self.c[j * self.masks + s]
        } else {
            INF
        }
    }
    #[inline]
    fn set(&mut self, j: usize, s: usize, v: i64) {
        self.c[j * self.masks + s] = v;
    }
}

struct VertexTables {
    /// stages[x] = table before merging son x; stages[ns] = after all sons
    stages: Vec<Table>,
    /// after the part-closing step
    closed: Table,
}

fn validate_spec(tree: &RootedTree, spec: &ConnectedPartSpec) -> Result<()> {
    let n = tree.n();
    let k = spec.sz.len();
    if k > K_MAX {
        return Err(Error::ResourceLimit(format!("k = {k} exceeds the limit of {K_MAX} parts")));
    }
    if spec.sz.contains(&0) {
        return Err(invalid("part sizes must be positive"));
    }
    if spec.sz.windows(2).any(|w| w[0] > w[1]) {
        return Err(invalid("part sizes must be nondecreasing"));
    }
    if spec.sz.iter().sum::<usize>() > n {
        return Err(invalid("part sizes sum to more than n"));
    }
    if spec.cv.len() != n {
        return Err(invalid(format!("expected {n} vertex costs, got {}", spec.cv.len())));
    }
    if spec.ce.len() != n - 1 {
        return Err(invalid(format!("expected {} edge costs, got {}", n - 1, spec.ce.len())));
    }
    if spec.cv.iter().chain(&spec.ce).any(|&c| c < 0) {
        return Err(invalid("costs must be nonnegative"));
    }
    let total: i128 = spec.cv.iter().chain(&spec.ce).map(|&c| c as i128).sum();
    if total >= INF as i128 / 2 {
        return Err(invalid("total cost overflows"));
    }
    Ok(())
}

/// Minimum-cost selection of k vertex-disjoint connected parts of sizes
/// `sz`, paying for every vertex and edge outside all parts. Subset DP over
/// part-index sets, O(n^3 3^k).
pub fn partition_connected(tree: &RootedTree, spec: &ConnectedPartSpec) -> Result<ConnectedPartitionResult> {
    validate_spec(tree, spec)?;
    let n = tree.n();
    let k = spec.sz.len();
    let masks = 1usize << k;
    let full = masks - 1;
    let jmax = spec.sz.iter().copied().max().unwrap_or(0);
    let mut ce_up = vec![0i64; n + 1];
    for (&(a, b), &c) in tree.edges().iter().zip(&spec.ce) {
        let child = if tree.parent(a) == Some(b) { a } else { b };
        ce_up[child] = c;
    }
    let sizes = tree.subtree_sizes();
    let mut tabs: Vec<Option<VertexTables>> = (0..=n).map(|_| None).collect();

    for i in tree.postorder() {
        let rows = sizes[i].min(jmax) + 1;
        let mut cur = Table::new(rows, masks);
        cur.set(0, 0, spec.cv[i - 1]);
        if rows > 1 {
            cur.set(1, 0, 0);
        }
        let mut stages = Vec::with_capacity(tree.children(i).len() + 1);
        let mut grown = 1usize;
        for &s in tree.children(i) {
            let son = &tabs[s].as_ref().expect("sons come first").closed;
            let extra = ce_up[s];
            grown += sizes[s];
            let mut next = Table::new(rows, masks);
            for j in 0..rows.min(grown + 1) {
                let qlimit = j.saturating_sub(1).min(son.rows - 1);
                for set in 0..masks {
                    let mut best = INF;
                    let mut w = set;
                    loop {
                        for q in 0..=qlimit {
                            let a = cur.get(j - q, set ^ w);
                            let b = son.get(q, w);
                            if a == INF || b == INF {
                                continue;
                            }
                            let v = a + b + if q == 0 { extra } else { 0 };
                            best = best.min(v);
                        }
                        if w == 0 {
                            break;
                        }
                        w = (w - 1) & set;
                    }
                    next.set(j, set, best);
                }
            }
            stages.push(std::mem::replace(&mut cur, next));
        }
        let mut closed = cur.clone();
        stages.push(cur);
        for set in 0..masks {
            for j in 1..rows {
                let v = closed.get(j, set);
                if v == INF {
                    continue;
                }
                for (q, &size) in spec.sz.iter().enumerate() {
                    if size == j && set & (1 << q) == 0 {
                        let t = set | 1 << q;
                        if v < closed.get(0, t) {
                            closed.set(0, t, v);
                        }
                    }
                }
            }
        }
        tabs[i] = Some(VertexTables { stages, closed });
    }

    let root = tree.root();
    let best = tabs[root].as_ref().unwrap().closed.get(0, full);
    let mut assignment = vec![None; n + 1];
    if best == INF {
        return Ok(ConnectedPartitionResult { feasible: false, min_cost: 0, assignment });
    }
    traceback(tree, spec, &tabs, &ce_up, root, &mut assignment);
    Ok(ConnectedPartitionResult { feasible: true, min_cost: best, assignment })
}

/// Re-derives the argmin choices top-down. A work item is
/// (vertex, open size j, part set S, whether the closed table is meant,
/// part id of the open component containing the vertex).
fn traceback(
    tree: &RootedTree,
    spec: &ConnectedPartSpec,
    tabs: &[Option<VertexTables>],
    ce_up: &[i64],
    root: Vertex,
    out: &mut [Option<usize>],
) {
    let full = (1usize << spec.sz.len()) - 1;
    let mut work = vec![(root, 0usize, full, true, None::<usize>)];
    while let Some((i, mut j, mut set, from_closed, mut open_part)) = work.pop() {
        let t = tabs[i].as_ref().unwrap();
        let kids = tree.children(i);
        let mut target = if from_closed { t.closed.get(j, set) } else { t.stages[kids.len()].get(j, set) };
        if from_closed && j == 0 && t.stages[kids.len()].get(0, set) != target {
            // the vertex closed a part here: find which (j, S, q)
            let last = &t.stages[kids.len()];
            let found = (0..last.masks)
                .flat_map(|s| (1..last.rows).map(move |jj| (jj, s)))
                .find_map(|(jj, s)| {
                    spec.sz.iter().enumerate().find_map(|(q, &size)| {
                        (size == jj && s & (1 << q) == 0 && s | (1 << q) == set && last.get(jj, s) == target)
                            .then_some((jj, s, q))
                    })
                })
                .expect("closed value has a witness");
            j = found.0;
            set = found.1;
            open_part = Some(found.2 + 1);
            target = last.get(j, set);
        }
        if j > 0 {
            out[i] = open_part;
        }
        for x in (0..kids.len()).rev() {
            let s = kids[x];
            let before = &t.stages[x];
            let son = &tabs[s].as_ref().unwrap().closed;
            let qlimit = j.saturating_sub(1).min(son.rows - 1);
            let mut w = set;
            let mut hit = None;
            'search: loop {
                for q in 0..=qlimit {
                    let a = before.get(j - q, set ^ w);
                    let b = son.get(q, w);
                    if a == INF || b == INF {
                        continue;
                    }
                    if a + b + if q == 0 { ce_up[s] } else { 0 } == target {
                        hit = Some((w, q, a));
                        break 'search;
                    }
                }
                if w == 0 {
                    break;
                }
                w = (w - 1) & set;
            }
            let (w, q, a) = hit.expect("stage value has a witness");
            if q > 0 {
                work.push((s, q, w, true, open_part));
            } else {
                work.push((s, 0, w, true, None));
            }
            j -= q;
            set ^= w;
            target = a;
        }
    }
}

/// Cost of a given assignment: unassigned vertices plus edges whose
/// endpoints are not in the same part. Does not check part shapes.
pub fn assignment_cost(tree: &RootedTree, spec: &ConnectedPartSpec, assignment: &[Option<usize>]) -> i64 {
    let vc: i64 = (1..=tree.n()).filter(|&v| assignment[v].is_none()).map(|v| spec.cv[v - 1]).sum();
    let ec: i64 = tree
        .edges()
        .iter()
        .zip(&spec.ce)
        .filter(|(&(a, b), _)| assignment[a].is_none() || assignment[a] != assignment[b])
        .map(|(_, &c)| c)
        .sum();
    vc + ec
}

/// Checks that part p is connected with exactly `sz[p-1]` vertices.
pub fn check_connected_parts(
    tree: &RootedTree,
    spec: &ConnectedPartSpec,
    assignment: &[Option<usize>],
) -> std::result::Result<(), String> {
    let n = tree.n();
    let adj = tree.adjacency();
    for (idx, &size) in spec.sz.iter().enumerate() {
        let p = Some(idx + 1);
        let members: Vec<Vertex> = (1..=n).filter(|&v| assignment[v] == p).collect();
        if members.len() != size {
            return Err(format!("part {} has {} vertices, expected {size}", idx + 1, members.len()));
        }
        let mut seen = vec![false; n + 1];
        let mut stack = vec![members[0]];
        seen[members[0]] = true;
        let mut count = 1;
        while let Some(x) = stack.pop() {
            for &y in &adj[x] {
                if !seen[y] && assignment[y] == p {
                    seen[y] = true;
                    count += 1;
                    stack.push(y);
                }
            }
        }
        if count != size {
            return Err(format!("part {} is disconnected", idx + 1));
        }
    }
    if let Some(v) = (1..=n).find(|&v| assignment[v].is_some_and(|p| p == 0 || p > spec.sz.len())) {
        return Err(format!("vertex {v} has an unknown part id"));
    }
    Ok(())
}
