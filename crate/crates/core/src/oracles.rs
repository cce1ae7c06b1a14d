//! Exhaustive reference solvers. Slow on purpose and independent of the
//! algorithm modules: they only borrow the instance types.

use num_bigint::BigUint;
use num_traits::Zero;

use crate::counting::{ConstraintSet, Mode};
use crate::cycle_completion::{CycleCompletionResult, ExtraEdge, MinimaxResult};
use crate::error::{invalid, Error, Result};
use crate::flownet::{BoundedDigraph, FlowNetwork, StreamPlan};
use crate::partitioning::{ConnectedPartSpec, ConnectedPartitionResult};
use crate::spanning::{DcmstResult, WeightedGraph};
use crate::tree_core::{RootedTree, Vertex};

pub const CYCLE_M_MAX: usize = 18;
pub const PARTITION_N_MAX: usize = 12;
pub const GRUNDY_N_MAX: usize = 8;
pub const MATCHING_N_MAX: usize = 12;
pub const STREAM_N_MAX: usize = 5;
pub const STREAM_M_MAX: usize = 8;
pub const STREAM_BOUND_MAX: u64 = 2;
/// Largest number of count vectors the flow and stream oracles will scan.
pub const ENUMERATION_MAX: u64 = 4_000_000;
pub const FLOW_N_MAX: usize = 6;
pub const FLOW_M_MAX: usize = 9;
pub const SPANNING_N_MAX: usize = 7;
pub const SPANNING_M_MAX: usize = 24;
pub const LABELED_N_MAX: usize = 9;
pub const UNLABELED_N_MAX: usize = 14;
pub const SURJECTION_J_MAX: usize = 7;
pub const HEIGHT_N_MAX: usize = 11;

fn limit(what: &str, got: usize, max: usize) -> Result<()> {
    if got > max {
        return Err(Error::ResourceLimit(format!("{what} = {got} exceeds the oracle limit {max}")));
    }
    Ok(())
}

/// Vertices on the tree path between u and v, by climbing parents.
fn tree_path(tree: &RootedTree, depth: &[usize], mut u: Vertex, mut v: Vertex) -> Vec<Vertex> {
    let mut left = Vec::new();
    let mut right = Vec::new();
    while depth[u] > depth[v] {
        left.push(u);
        u = tree.parent(u).unwrap();
    }
    while depth[v] > depth[u] {
        right.push(v);
        v = tree.parent(v).unwrap();
    }
    while u != v {
        left.push(u);
        right.push(v);
        u = tree.parent(u).unwrap();
        v = tree.parent(v).unwrap();
    }
    left.push(u);
    left.extend(right.into_iter().rev());
    left
}

/// Subsets of extras whose fundamental cycles cover each vertex exactly once.
fn cycle_covers(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<Vec<u32>> {
    limit("number of extra edges", extras.len(), CYCLE_M_MAX)?;
    let n = tree.n();
    for e in extras {
        if !tree.contains(e.u) || !tree.contains(e.v) || e.u == e.v || tree.is_tree_edge(e.u, e.v) {
            return Err(invalid(format!("({},{}) is not a non-tree pair of tree vertices", e.u, e.v)));
        }
    }
    let depth = tree.depths();
    let cycles: Vec<Vec<Vertex>> = extras.iter().map(|e| tree_path(tree, &depth, e.u, e.v)).collect();
    let mut out = Vec::new();
    let mut hits = vec![0u8; n + 1];
    'subsets: for mask in 0u32..1 << extras.len() {
        hits.iter_mut().for_each(|h| *h = 0);
        for (i, c) in cycles.iter().enumerate() {
            if mask >> i & 1 == 1 {
                for &v in c {
                    hits[v] += 1;
                    if hits[v] > 1 {
                        continue 'subsets;
                    }
                }
            }
        }
        if hits[1..].iter().all(|&h| h == 1) {
            out.push(mask);
        }
    }
    Ok(out)
}

fn pick(extras: &[ExtraEdge], mask: u32) -> Vec<ExtraEdge> {
    let mut v: Vec<ExtraEdge> = (0..extras.len()).filter(|&i| mask >> i & 1 == 1).map(|i| extras[i]).collect();
    v.sort();
    v
}

pub fn brute_cycle_completion(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<CycleCompletionResult> {
    let extras: Vec<ExtraEdge> = extras.iter().map(|e| ExtraEdge::new(e.u, e.v, e.w)).collect();
    let best = cycle_covers(tree, &extras)?
        .into_iter()
        .map(|m| (pick(&extras, m).iter().map(|e| e.w).sum::<i64>(), m))
        .min();
    Ok(match best {
        Some((w, m)) => CycleCompletionResult { feasible: true, total_weight: w, chosen_edges: pick(&extras, m) },
        None => CycleCompletionResult { feasible: false, total_weight: 0, chosen_edges: Vec::new() },
    })
}

pub fn brute_minimax(tree: &RootedTree, extras: &[ExtraEdge]) -> Result<MinimaxResult> {
    let extras: Vec<ExtraEdge> = extras.iter().map(|e| ExtraEdge::new(e.u, e.v, e.w)).collect();
    let best = cycle_covers(tree, &extras)?
        .into_iter()
        .map(|m| (pick(&extras, m).iter().map(|e| e.w).max().unwrap_or(0), m))
        .min();
    Ok(match best {
        Some((w, m)) => MinimaxResult { feasible: true, w_max: Some(w), chosen_edges: pick(&extras, m) },
        None => MinimaxResult { feasible: false, w_max: None, chosen_edges: Vec::new() },
    })
}

/// Every non-adjacent pair as a unit-weight extra edge.
pub fn all_non_tree_pairs(tree: &RootedTree) -> Vec<ExtraEdge> {
    let n = tree.n();
    let mut v = Vec::new();
    for a in 1..=n {
        for b in a + 1..=n {
            if !tree.is_tree_edge(a, b) {
                v.push(ExtraEdge::new(a, b, 1));
            }
        }
    }
    v
}

pub const UNIT_N_MAX: usize = 20;

/// Unit-weight model with every non-adjacent pair available: a valid cover
/// is a split of the tree into vertex-disjoint paths of at least three
/// vertices, one added edge per path. Tries every subset of kept tree edges.
pub fn brute_unit_any_pair(tree: &RootedTree) -> Result<CycleCompletionResult> {
    let n = tree.n();
    limit("n", n, UNIT_N_MAX)?;
    let edges = tree.edges();
    let mut best: Option<Vec<ExtraEdge>> = None;
    'masks: for mask in 0u32..1 << edges.len() {
        let mut adj = vec![Vec::new(); n + 1];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        if adj.iter().any(|a| a.len() > 2) {
            continue;
        }
        let mut seen = vec![false; n + 1];
        let mut chosen = Vec::new();
        for s in 1..=n {
            if seen[s] || adj[s].len() == 2 {
                continue;
            }
            // walk the path starting at endpoint s
            let (mut prev, mut cur, mut len) = (0, s, 1);
            seen[s] = true;
            while let Some(&next) = adj[cur].iter().find(|&&x| x != prev) {
                prev = cur;
                cur = next;
                seen[cur] = true;
                len += 1;
            }
            if len < 3 {
                continue 'masks;
            }
            chosen.push(ExtraEdge::new(s, cur, 1));
            if best.as_ref().is_some_and(|b| chosen.len() >= b.len()) {
                continue 'masks;
            }
        }
        chosen.sort();
        best = Some(chosen);
    }
    Ok(match best {
        Some(c) => CycleCompletionResult { feasible: true, total_weight: c.len() as i64, chosen_edges: c },
        None => CycleCompletionResult { feasible: false, total_weight: 0, chosen_edges: Vec::new() },
    })
}

/// Tries every subset of kept tree edges. Components of two or more
/// vertices must be exactly the parts of size two or more; parts of size one
/// take the singletons with the largest vertex costs.
pub fn brute_connected_partition(tree: &RootedTree, spec: &ConnectedPartSpec) -> Result<ConnectedPartitionResult> {
    let n = tree.n();
    limit("n", n, PARTITION_N_MAX)?;
    let k = spec.sz.len();
    if spec.cv.len() != n || spec.ce.len() + 1 != n || spec.sz.contains(&0) {
        return Err(invalid("cost vectors or sizes do not fit the tree"));
    }
    let edges = tree.edges();
    let mut big: Vec<(usize, usize)> = spec.sz.iter().enumerate().filter(|(_, &s)| s > 1).map(|(i, &s)| (s, i + 1)).collect();
    big.sort();
    let ones: Vec<usize> = (0..k).filter(|&i| spec.sz[i] == 1).map(|i| i + 1).collect();
    let mut best: Option<(i64, Vec<Option<usize>>)> = None;
    for mask in 0u32..1 << edges.len() {
        // label components by flood fill over kept edges
        let mut adj = vec![Vec::new(); n + 1];
        for (i, &(a, b)) in edges.iter().enumerate() {
            if mask >> i & 1 == 1 {
                adj[a].push(b);
                adj[b].push(a);
            }
        }
        let mut comp = vec![0usize; n + 1];
        let mut comps: Vec<Vec<Vertex>> = Vec::new();
        for s in 1..=n {
            if comp[s] != 0 {
                continue;
            }
            comps.push(Vec::new());
            let id = comps.len();
            let mut stack = vec![s];
            comp[s] = id;
            while let Some(u) = stack.pop() {
                comps[id - 1].push(u);
                for &w in &adj[u] {
                    if comp[w] == 0 {
                        comp[w] = id;
                        stack.push(w);
                    }
                }
            }
        }
        let mut multi: Vec<(usize, usize)> =
            comps.iter().enumerate().filter(|(_, c)| c.len() > 1).map(|(i, c)| (c.len(), i)).collect();
        multi.sort();
        if multi.len() != big.len() || multi.iter().zip(&big).any(|(a, b)| a.0 != b.0) {
            continue;
        }
        let mut singles: Vec<Vertex> = comps.iter().filter(|c| c.len() == 1).map(|c| c[0]).collect();
        if singles.len() < ones.len() {
            continue;
        }
        singles.sort_by_key(|&v| std::cmp::Reverse(spec.cv[v - 1]));
        let mut assignment = vec![None; n + 1];
        for (&(_, ci), &(_, part)) in multi.iter().zip(&big) {
            for &v in &comps[ci] {
                assignment[v] = Some(part);
            }
        }
        for (&v, &part) in singles.iter().zip(&ones) {
            assignment[v] = Some(part);
        }
        let mut cost: i64 = (1..=n).filter(|&v| assignment[v].is_none()).map(|v| spec.cv[v - 1]).sum();
        cost += edges.iter().enumerate().filter(|&(i, _)| mask >> i & 1 == 0).map(|(i, _)| spec.ce[i]).sum::<i64>();
        if best.as_ref().is_none_or(|b| cost < b.0) {
            best = Some((cost, assignment));
        }
    }
    Ok(match best {
        Some((c, a)) => ConnectedPartitionResult { feasible: true, min_cost: c, assignment: a },
        None => ConnectedPartitionResult { feasible: false, min_cost: 0, assignment: vec![None; n + 1] },
    })
}

/// Largest first-fit color over all vertex orders.
pub fn brute_grundy(adj: &[Vec<Vertex>]) -> Result<u32> {
    let n = adj.len().saturating_sub(1);
    limit("n", n, GRUNDY_N_MAX)?;
    let mut order: Vec<Vertex> = (1..=n).collect();
    let mut best = 0;
    permute(&mut order, 0, &mut |ord| {
        let mut color = vec![0u32; n + 1];
        for &v in ord {
            let mut c = 1;
            while adj[v].iter().any(|&u| color[u] == c) {
                c += 1;
            }
            color[v] = c;
            best = best.max(c);
        }
    });
    Ok(best)
}

fn permute(a: &mut [Vertex], i: usize, f: &mut dyn FnMut(&[Vertex])) {
    if i == a.len() {
        f(a);
        return;
    }
    for j in i..a.len() {
        a.swap(i, j);
        permute(a, i + 1, f);
        a.swap(i, j);
    }
}

/// Maximum total weight of a matching in a graph on 1..=n.
pub fn brute_max_weight_matching(n: usize, edges: &[(Vertex, Vertex, i64)]) -> Result<i64> {
    limit("n", n, MATCHING_N_MAX)?;
    let mut w = vec![vec![None::<i64>; n + 1]; n + 1];
    for &(a, b, c) in edges {
        if !(1..=n).contains(&a) || !(1..=n).contains(&b) || a == b {
            return Err(invalid(format!("({a},{b}) is not an edge between distinct vertices")));
        }
        let cur = w[a][b].map_or(c, |x: i64| x.max(c));
        w[a][b] = Some(cur);
        w[b][a] = Some(cur);
    }
    fn go(v: usize, n: usize, used: &mut [bool], w: &[Vec<Option<i64>>]) -> i64 {
        let Some(v) = (v..=n).find(|&x| !used[x]) else { return 0 };
        used[v] = true;
        let mut best = go(v + 1, n, used, w);
        for u in v + 1..=n {
            if let (false, Some(c)) = (used[u], w[v][u]) {
                used[u] = true;
                best = best.max(c + go(v + 1, n, used, w));
                used[u] = false;
            }
        }
        used[v] = false;
        best
    }
    Ok(go(1, n, &mut vec![false; n + 1], &w))
}

/// Tree edges plus sibling pairs, each weighted by the weight difference.
pub fn extended_tree_edges(tree: &RootedTree) -> Vec<(Vertex, Vertex, i64)> {
    let w = |v| tree.vertex_weight(v).unwrap_or(0);
    let mut out: Vec<(Vertex, Vertex, i64)> = tree.edges().iter().map(|&(a, b)| (a, b, (w(a) - w(b)).abs())).collect();
    for v in 1..=tree.n() {
        let ch = tree.children(v);
        for (i, &a) in ch.iter().enumerate() {
            for &b in &ch[i + 1..] {
                out.push((a, b, (w(a) - w(b)).abs()));
            }
        }
    }
    out
}

/// Unit-weight edges between vertices at tree distance at most k.
pub fn tree_power_edges(tree: &RootedTree, k: usize) -> Vec<(Vertex, Vertex, i64)> {
    let n = tree.n();
    let adj = tree.adjacency();
    let mut out = Vec::new();
    for s in 1..=n {
        let mut dist = vec![usize::MAX; n + 1];
        dist[s] = 0;
        let mut queue = std::collections::VecDeque::from([s]);
        while let Some(u) = queue.pop_front() {
            for &v in &adj[u] {
                if dist[v] == usize::MAX {
                    dist[v] = dist[u] + 1;
                    queue.push_back(v);
                }
            }
        }
        out.extend((s + 1..=n).filter(|&v| dist[v] <= k).map(|v| (s, v, 1)));
    }
    out
}

/// Per-edge counts are enumerated; vertex counts are then forced (or taken
/// as small as the endpoint flags allow), and a DAG count vector with
/// balanced in/out splits into paths, so each vertex contributes
/// `npv - in` path starts.
pub fn brute_min_streams(g: &BoundedDigraph) -> Result<Option<StreamPlan>> {
    let n = g.n();
    limit("n", n, STREAM_N_MAX)?;
    limit("number of edges", g.edges.len(), STREAM_M_MAX)?;
    let bounds = g.edges.iter().flat_map(|e| [Some(e.lbe), e.ube]).chain(g.vertices.iter().flat_map(|v| [Some(v.lbv), v.ubv]));
    if bounds.flatten().any(|b| b > STREAM_BOUND_MAX) {
        return Err(Error::ResourceLimit(format!("bounds above {STREAM_BOUND_MAX}")));
    }
    // In a system with the fewest paths every path passes some element whose
    // lower bound is tight (otherwise drop it), so no count exceeds the sum
    // of all lower bounds.
    let cap = g.edges.iter().map(|e| e.lbe).sum::<u64>() + g.vertices.iter().map(|v| v.lbv).sum::<u64>();
    let hi: Vec<u64> = g.edges.iter().map(|e| e.ube.unwrap_or(cap).min(cap.max(e.lbe))).collect();
    scan_size(g.edges.iter().map(|e| e.lbe).zip(hi.iter().copied()))?;
    let mut npe: Vec<u64> = g.edges.iter().map(|e| e.lbe).collect();
    let mut best: Option<(u64, i64, Vec<u64>, Vec<u64>)> = None;
    loop {
        if let Some((p, s, npv)) = evaluate_counts(g, &npe) {
            if best.as_ref().is_none_or(|b| (p, s) < (b.0, b.1)) {
                best = Some((p, s, npe.clone(), npv));
            }
        }
        // odometer step
        let mut i = 0;
        while i < npe.len() && npe[i] == hi[i] {
            npe[i] = g.edges[i].lbe;
            i += 1;
        }
        if i == npe.len() {
            break;
        }
        npe[i] += 1;
    }
    Ok(best.map(|(p, cost_s, npe, npv)| StreamPlan { p, paths: peel_paths(g, &npe, &npv), cost_s }))
}

fn scan_size(ranges: impl Iterator<Item = (u64, u64)>) -> Result<()> {
    let mut total = 1u64;
    for (lo, hi) in ranges {
        total = total.saturating_mul(hi.saturating_sub(lo) + 1);
        if total > ENUMERATION_MAX {
            return Err(Error::ResourceLimit(format!("more than {ENUMERATION_MAX} count vectors to scan")));
        }
    }
    Ok(())
}

fn evaluate_counts(g: &BoundedDigraph, npe: &[u64]) -> Option<(u64, i64, Vec<u64>)> {
    let n = g.n();
    let mut inn = vec![0u64; n + 1];
    let mut out = vec![0u64; n + 1];
    for (e, &c) in g.edges.iter().zip(npe) {
        out[e.from] += c;
        inn[e.to] += c;
    }
    let mut npv = vec![0u64; n + 1];
    let (mut p, mut s) = (0u64, 0i64);
    for (i, v) in g.vertices.iter().enumerate() {
        let u = i + 1;
        let c = v.lbv.max(inn[u]).max(out[u]);
        if !v.is_source && c != inn[u] {
            return None;
        }
        if !v.is_dest && c != out[u] {
            return None;
        }
        if v.ubv.is_some_and(|b| c > b) {
            return None;
        }
        npv[u] = c;
        p += c - inn[u];
        s += (c - v.lbv) as i64 * v.cv;
    }
    s += g.edges.iter().zip(npe).map(|(e, &c)| (c - e.lbe) as i64 * e.ce).sum::<i64>();
    Some((p, s, npv))
}

fn peel_paths(g: &BoundedDigraph, npe: &[u64], npv: &[u64]) -> Vec<Vec<Vertex>> {
    let n = g.n();
    let mut rest = npe.to_vec();
    let mut inn = vec![0u64; n + 1];
    for (e, &c) in g.edges.iter().zip(npe) {
        inn[e.to] += c;
    }
    let mut starts: Vec<u64> = (0..=n).map(|u| if u == 0 { 0 } else { npv[u] - inn[u] }).collect();
    let mut through = npv.to_vec();
    let mut paths = Vec::new();
    while let Some(s) = (1..=n).find(|&u| starts[u] > 0) {
        starts[s] -= 1;
        let mut path = vec![s];
        let mut u = s;
        loop {
            through[u] -= 1;
            let outgoing: u64 = g.edges.iter().zip(&rest).filter(|(e, _)| e.from == u).map(|(_, &c)| c).sum();
            // stop here if the remaining passes through u exceed its out-flow
            if through[u] + 1 > outgoing {
                break;
            }
            let i = (0..g.edges.len()).find(|&i| g.edges[i].from == u && rest[i] > 0).unwrap();
            rest[i] -= 1;
            u = g.edges[i].to;
            path.push(u);
        }
        paths.push(path);
    }
    paths
}

/// Minimum value then minimum cost over all integral feasible flows with
/// nonnegative value. Returns (value, cost).
pub fn brute_min_feasible_flow(net: &FlowNetwork) -> Result<Option<(i64, i64)>> {
    limit("n", net.n, FLOW_N_MAX)?;
    limit("number of edges", net.edges.len(), FLOW_M_MAX)?;
    if net.edges.iter().any(|e| e.lower > STREAM_BOUND_MAX || e.upper.is_some_and(|u| u > STREAM_BOUND_MAX)) {
        return Err(Error::ResourceLimit(format!("bounds above {STREAM_BOUND_MAX}")));
    }
    // same argument with paths and cycles: costs are nonnegative, so every
    // path or cycle of an optimal decomposition meets a tight lower bound
    let cap = net.edges.iter().map(|e| e.lower).sum::<u64>();
    let hi: Vec<u64> = net.edges.iter().map(|e| e.upper.unwrap_or(cap).min(cap.max(e.lower))).collect();
    scan_size(net.edges.iter().map(|e| e.lower).zip(hi.iter().copied()))?;
    let mut f: Vec<u64> = net.edges.iter().map(|e| e.lower).collect();
    let mut best: Option<(i64, i64)> = None;
    loop {
        let mut bal = vec![0i64; net.n];
        for (e, &x) in net.edges.iter().zip(&f) {
            bal[e.from] += x as i64;
            bal[e.to] -= x as i64;
        }
        let conserved = (0..net.n).all(|v| v == net.s || v == net.t || bal[v] == 0);
        if conserved && bal[net.s] >= 0 {
            let cost: i64 = net.edges.iter().zip(&f).map(|(e, &x)| x as i64 * e.cost).sum();
            let cand = (bal[net.s], cost);
            if best.is_none_or(|b| cand < b) {
                best = Some(cand);
            }
        }
        let mut i = 0;
        while i < f.len() && f[i] == hi[i] {
            f[i] = net.edges[i].lower;
            i += 1;
        }
        if i == f.len() {
            break;
        }
        f[i] += 1;
    }
    Ok(best)
}

/// Minimum spanning tree with `deg(r) = k` over all (n-1)-edge subsets.
pub fn brute_spanning_trees(g: &WeightedGraph, r: usize, k: usize) -> Result<DcmstResult> {
    let n = g.n;
    limit("n", n, SPANNING_N_MAX)?;
    limit("number of edges", g.edges.len(), SPANNING_M_MAX)?;
    let m = g.edges.len();
    let mut best: Option<(i64, Vec<usize>)> = None;
    let mut chosen = Vec::with_capacity(n);
    choose(m, n - 1, 0, &mut chosen, &mut |sel| {
        let mut comp: Vec<usize> = (0..=n).collect();
        fn find(c: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while c[r] != r {
                r = c[r];
            }
            c[x] = r;
            r
        }
        let mut deg = 0;
        let mut w = 0;
        for &i in sel {
            let (a, b, c) = g.edges[i];
            let (ra, rb) = (find(&mut comp, a), find(&mut comp, b));
            if ra == rb {
                return;
            }
            comp[ra] = rb;
            deg += usize::from(a == r || b == r);
            w += c;
        }
        if deg == k && best.as_ref().is_none_or(|b| w < b.0) {
            best = Some((w, sel.to_vec()));
        }
    });
    Ok(match best {
        Some((w, sel)) => {
            let mut edges: Vec<(usize, usize, i64)> =
                sel.iter().map(|&i| g.edges[i]).map(|(a, b, c)| (a.min(b), a.max(b), c)).collect();
            edges.sort();
            DcmstResult { feasible: true, edges, total_weight: w, degree_r: k, diagnostic: None }
        }
        None => DcmstResult {
            feasible: false,
            edges: Vec::new(),
            total_weight: 0,
            degree_r: 0,
            diagnostic: Some("no spanning tree has the requested degree".into()),
        },
    })
}

fn choose(m: usize, need: usize, from: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if cur.len() == need {
        f(cur);
        return;
    }
    for i in from..m {
        if m - i < need - cur.len() {
            break;
        }
        cur.push(i);
        choose(m, need, i + 1, cur, f);
        cur.pop();
    }
}

/// All labeled trees on 1..=n, decoded from Prüfer sequences in
/// lexicographic order.
pub struct LabeledTrees {
    n: usize,
    seq: Vec<usize>,
    done: bool,
}

pub fn enumerate_labeled_trees(n: usize) -> Result<LabeledTrees> {
    limit("n", n, LABELED_N_MAX)?;
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    Ok(LabeledTrees { n, seq: vec![1; n.saturating_sub(2)], done: false })
}

fn decode_pruefer(n: usize, seq: &[usize]) -> Vec<(Vertex, Vertex)> {
    if n == 1 {
        return Vec::new();
    }
    let mut deg = vec![1usize; n + 1];
    for &x in seq {
        deg[x] += 1;
    }
    let mut edges = Vec::with_capacity(n - 1);
    for &x in seq {
        let leaf = (1..=n).find(|&v| deg[v] == 1).unwrap();
        edges.push((leaf.min(x), leaf.max(x)));
        deg[leaf] -= 1;
        deg[x] -= 1;
    }
    let rest: Vec<Vertex> = (1..=n).filter(|&v| deg[v] == 1).collect();
    edges.push((rest[0], rest[1]));
    edges
}

impl Iterator for LabeledTrees {
    type Item = Vec<(Vertex, Vertex)>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = decode_pruefer(self.n, &self.seq);
        let mut i = self.seq.len();
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.seq[i] < self.n {
                self.seq[i] += 1;
                break;
            }
            self.seq[i] = 1;
        }
        Some(out)
    }
}

/// Leaf-count histogram of all labeled trees on n vertices (`h[p]`).
pub fn brute_labeled_leaf_histogram(n: usize) -> Result<Vec<u64>> {
    let mut h = vec![0u64; n + 1];
    for edges in enumerate_labeled_trees(n)? {
        let mut deg = vec![0usize; n + 1];
        for &(a, b) in &edges {
            deg[a] += 1;
            deg[b] += 1;
        }
        let leaves = if n == 1 { 1 } else { (1..=n).filter(|&v| deg[v] == 1).count() };
        h[leaves] += 1;
    }
    Ok(h)
}

/// Rooted unlabeled trees on n vertices, one per isomorphism class, as
/// parent arrays in preorder (`parents[0] = 0`). Walks canonical level
/// sequences from the path down to the star.
pub struct UnlabeledRooted {
    level: Vec<usize>,
    done: bool,
}

pub fn enumerate_unlabeled_rooted(n: usize) -> Result<UnlabeledRooted> {
    limit("n", n, UNLABELED_N_MAX)?;
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    Ok(UnlabeledRooted { level: (0..n).collect(), done: false })
}

impl Iterator for UnlabeledRooted {
    type Item = Vec<Vertex>;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let l = &mut self.level;
        let n = l.len();
        let mut parents = vec![0usize; n];
        let mut last_at = vec![0usize; n];
        for i in 0..n {
            if l[i] > 0 {
                parents[i] = last_at[l[i] - 1] + 1;
            }
            last_at[l[i]] = i;
        }
        match (0..n).rev().find(|&i| l[i] > 1) {
            None => self.done = true,
            Some(p) => {
                let q = (0..p).rev().find(|&i| l[i] == l[p] - 1).unwrap();
                for i in p..n {
                    l[i] = l[i - (p - q)];
                }
            }
        }
        Some(parents)
    }
}

/// Free (unrooted) unlabeled trees on n vertices, one per isomorphism
/// class, as edge lists. Rooted shapes are deduplicated by the smallest
/// nested-parenthesis code over the tree's centers.
pub fn enumerate_free_trees(n: usize) -> Result<Vec<Vec<(Vertex, Vertex)>>> {
    let mut seen = std::collections::HashSet::new();
    let mut out = Vec::new();
    for parents in enumerate_unlabeled_rooted(n)? {
        let edges: Vec<(Vertex, Vertex)> = (2..=n).map(|v| (parents[v - 1], v)).collect();
        let mut adj = vec![Vec::new(); n + 1];
        for &(a, b) in &edges {
            adj[a].push(b);
            adj[b].push(a);
        }
        let code = centers(n, &adj).into_iter().map(|c| ahu(&adj, c, 0)).min().unwrap();
        if seen.insert(code) {
            out.push(edges);
        }
    }
    Ok(out)
}

/// Peels leaves layer by layer; one or two vertices remain.
fn centers(n: usize, adj: &[Vec<Vertex>]) -> Vec<Vertex> {
    if n == 1 {
        return vec![1];
    }
    let mut deg: Vec<usize> = adj.iter().map(Vec::len).collect();
    let mut layer: Vec<Vertex> = (1..=n).filter(|&v| deg[v] == 1).collect();
    let mut left = n;
    while left > 2 {
        left -= layer.len();
        let mut next = Vec::new();
        for &v in &layer {
            deg[v] = 0;
            for &u in &adj[v] {
                if deg[u] > 0 {
                    deg[u] -= 1;
                    if deg[u] == 1 {
                        next.push(u);
                    }
                }
            }
        }
        layer = next;
    }
    layer
}

fn ahu(adj: &[Vec<Vertex>], v: Vertex, from: Vertex) -> String {
    let mut kids: Vec<String> = adj[v].iter().filter(|&&u| u != from).map(|&u| ahu(adj, u, v)).collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Count of rooted unlabeled trees meeting the constraint at every vertex.
pub fn brute_unlabeled_constrained(n: usize, cs: &ConstraintSet) -> Result<BigUint> {
    let mut count = BigUint::zero();
    for parents in enumerate_unlabeled_rooted(n)? {
        let mut sons = vec![0usize; n + 1];
        for &p in &parents[1..] {
            sons[p] += 1;
        }
        let ok = (1..=n).all(|v| {
            let x = match cs.mode {
                Mode::Degree if v != 1 => sons[v] + 1,
                _ => sons[v],
            };
            cs.contains(x)
        });
        if ok {
            count += 1u32;
        }
    }
    Ok(count)
}

/// Onto functions from a j-set to a k-set, by listing all k^j functions.
pub fn brute_surjections(j: usize, k: usize) -> Result<u64> {
    limit("j", j, SURJECTION_J_MAX)?;
    if k == 0 {
        return Ok(u64::from(j == 0));
    }
    let total = (k as u64).pow(j as u32);
    let mut count = 0;
    for mut code in 0..total {
        let mut hit = vec![false; k];
        for _ in 0..j {
            hit[(code % k as u64) as usize] = true;
            code /= k as u64;
        }
        count += u64::from(hit.iter().all(|&h| h));
    }
    Ok(count)
}

/// Minimum root height over every bracketing of the leaf sequence.
pub fn brute_min_height(h: &[i64]) -> Result<i64> {
    limit("number of leaves", h.len(), HEIGHT_N_MAX)?;
    if h.is_empty() {
        return Err(invalid("leaf sequence is empty"));
    }
    fn go(h: &[i64]) -> i64 {
        if h.len() == 1 {
            return h[0];
        }
        (1..h.len()).map(|k| 1 + go(&h[..k]).max(go(&h[k..]))).min().unwrap()
    }
    Ok(go(h))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    fn path(n: usize) -> RootedTree {
        let e: Vec<_> = (1..n).map(|i| (i, i + 1)).collect();
        root_at(n, &e, 1).unwrap()
    }

    #[test]
    fn cycle_examples() {
        let r = brute_cycle_completion(&path(3), &[ExtraEdge::new(1, 3, 5)]).unwrap();
        assert!(r.feasible);
        assert_eq!(r.total_weight, 5);
        let star = root_at(4, &[(1, 2), (1, 3), (1, 4)], 1).unwrap();
        assert!(!brute_cycle_completion(&star, &all_non_tree_pairs(&star)).unwrap().feasible);
        assert!(!brute_unit_any_pair(&star).unwrap().feasible);
        for n in 3..=7 {
            let t = path(n);
            let a = brute_unit_any_pair(&t).unwrap();
            let b = brute_cycle_completion(&t, &all_non_tree_pairs(&t)).unwrap();
            assert_eq!((a.feasible, a.total_weight), (b.feasible, b.total_weight));
        }
        let many: Vec<ExtraEdge> = (0..19).map(|i| ExtraEdge::new(1, 3, i)).collect();
        assert!(matches!(brute_cycle_completion(&path(3), &many), Err(Error::ResourceLimit(_))));
    }

    #[test]
    fn partition_examples() {
        let t = path(3);
        let spec = ConnectedPartSpec { sz: vec![3], cv: vec![1; 3], ce: vec![1; 2] };
        assert_eq!(brute_connected_partition(&t, &spec).unwrap().min_cost, 0);
        let spec = ConnectedPartSpec { sz: vec![1, 1], cv: vec![1, 5, 1], ce: vec![1, 1] };
        let r = brute_connected_partition(&t, &spec).unwrap();
        assert_eq!(r.min_cost, 3);
        assert_eq!(r.assignment[2], Some(1));
        let spec = ConnectedPartSpec { sz: vec![2, 2], cv: vec![1; 3], ce: vec![1; 2] };
        assert!(!brute_connected_partition(&t, &spec).unwrap().feasible);
    }

    #[test]
    fn grundy_examples() {
        assert_eq!(brute_grundy(&path(1).adjacency()).unwrap(), 1);
        assert_eq!(brute_grundy(&path(4).adjacency()).unwrap(), 3);
        let star = root_at(4, &[(1, 2), (1, 3), (1, 4)], 1).unwrap();
        assert_eq!(brute_grundy(&star.adjacency()).unwrap(), 2);
    }

    #[test]
    fn matching_examples() {
        assert_eq!(brute_max_weight_matching(2, &[(1, 2, 5)]).unwrap(), 5);
        assert_eq!(brute_max_weight_matching(3, &[(1, 2, 9), (2, 3, 8), (1, 3, 1)]).unwrap(), 9);
        assert_eq!(brute_max_weight_matching(4, &[]).unwrap(), 0);
    }

    #[test]
    fn labeled_enumeration() {
        assert_eq!(enumerate_labeled_trees(3).unwrap().count(), 3);
        assert_eq!(enumerate_labeled_trees(4).unwrap().count(), 16);
        assert_eq!(enumerate_labeled_trees(1).unwrap().count(), 1);
        assert_eq!(brute_labeled_leaf_histogram(4).unwrap(), vec![0, 0, 12, 4, 0]);
        let mut seen = std::collections::HashSet::new();
        for t in enumerate_labeled_trees(5).unwrap() {
            let mut t = t;
            t.sort();
            assert!(seen.insert(t));
        }
        assert_eq!(seen.len(), 125);
    }

    #[test]
    fn unlabeled_enumeration() {
        let counts: Vec<usize> = (1..=8).map(|n| enumerate_unlabeled_rooted(n).unwrap().count()).collect();
        assert_eq!(counts, [1, 1, 2, 4, 9, 20, 48, 115]);
        let free: Vec<usize> = (1..=10).map(|n| enumerate_free_trees(n).unwrap().len()).collect();
        assert_eq!(free, [1, 1, 1, 2, 3, 6, 11, 23, 47, 106]);
        for p in enumerate_unlabeled_rooted(6).unwrap() {
            RootedTree::from_parents(&p).unwrap();
        }
    }

    #[test]
    fn small_helpers() {
        assert_eq!(brute_surjections(3, 2).unwrap(), 6);
        assert_eq!(brute_surjections(0, 0).unwrap(), 1);
        assert_eq!(brute_min_height(&[2, 1, 1, 3]).unwrap(), 4);
    }
}
