//! Flows with lower bounds, minimum feasible flow, and the stream-routing
//! problem on bounded DAGs built on top of them.
//!
//! `FlowNetwork` vertices are 0-based indices. `BoundedDigraph` vertices are
//! 1-based like every other user-facing type.

use std::collections::VecDeque;

use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Directed edge of a flow network. `upper = None` means unbounded.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct FlowEdge {
    pub from: usize,
    pub to: usize,
    pub lower: u64,
    pub upper: Option<u64>,
    pub cost: i64,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowNetwork {
    pub n: usize,
    pub edges: Vec<FlowEdge>,
    pub s: usize,
    pub t: usize,
}

impl FlowNetwork {
    pub fn new(n: usize, edges: Vec<FlowEdge>, s: usize, t: usize) -> Result<Self> {
        if s >= n || t >= n || s == t {
            return Err(invalid("source and sink must be distinct vertices of the network"));
        }
        for (idx, e) in edges.iter().enumerate() {
            if e.from >= n || e.to >= n {
                return Err(invalid(format!("edge {idx} has an endpoint outside 0..{n}")));
            }
            if e.upper.is_some_and(|u| u < e.lower) {
                return Err(invalid(format!("edge {idx} has lower bound above its upper bound")));
            }
            if e.cost < 0 {
                return Err(invalid(format!("edge {idx} has a negative cost")));
            }
        }
        Ok(FlowNetwork { n, edges, s, t })
    }

    /// Finite stand-in for an unbounded capacity: larger than any flow a
    /// cost-minimal solution needs on a single edge.
    fn infinity(&self) -> i64 {
        let total: u128 = self.edges.iter().map(|e| e.upper.unwrap_or(0) as u128 + e.lower as u128).sum();
        i64::try_from(total + 1).unwrap_or(i64::MAX / 4).min(i64::MAX / 4)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct FlowAssignment {
    /// Parallel to the network's edges.
    pub flow: Vec<u64>,
    /// Net flow out of the source.
    pub value: i64,
    pub cost: i64,
}

struct Residual {
    head: Vec<usize>,
    cap: Vec<i64>,
    cost: Vec<i64>,
    adj: Vec<Vec<usize>>,
}

impl Residual {
    fn new(n: usize) -> Self {
        Residual { head: Vec::new(), cap: Vec::new(), cost: Vec::new(), adj: vec![Vec::new(); n] }
    }

    /// Returns the arc id; its reverse is `id ^ 1`.
    fn add(&mut self, u: usize, v: usize, cap: i64, cost: i64) -> usize {
        let id = self.head.len();
        self.head.extend([v, u]);
        self.cap.extend([cap, 0]);
        self.cost.extend([cost, -cost]);
        self.adj[u].push(id);
        self.adj[v].push(id + 1);
        id
    }

    fn flow_on(&self, arc: usize) -> i64 {
        self.cap[arc ^ 1]
    }

    /// Successive shortest paths with Johnson potentials. All initial costs
    /// must be nonnegative. Returns (flow, cost).
    fn min_cost_max_flow(&mut self, s: usize, t: usize) -> (i64, i64) {
        let n = self.adj.len();
        let mut pot = vec![0i64; n];
        let mut dist = vec![0i64; n];
        let mut via = vec![usize::MAX; n];
        let (mut flow, mut cost) = (0i64, 0i64);
        loop {
            dist.fill(i64::MAX);
            via.fill(usize::MAX);
            dist[s] = 0;
            let mut heap = std::collections::BinaryHeap::new();
            heap.push(std::cmp::Reverse((0i64, s)));
            while let Some(std::cmp::Reverse((d, u))) = heap.pop() {
                if d > dist[u] {
                    continue;
                }
                for &a in &self.adj[u] {
                    if self.cap[a] <= 0 {
                        continue;
                    }
                    let v = self.head[a];
                    let nd = d + self.cost[a] + pot[u] - pot[v];
                    if nd < dist[v] {
                        dist[v] = nd;
                        via[v] = a;
                        heap.push(std::cmp::Reverse((nd, v)));
                    }
                }
            }
            if dist[t] == i64::MAX {
                break;
            }
            for v in 0..n {
                if dist[v] != i64::MAX {
                    pot[v] += dist[v];
                }
            }
            let mut push = i64::MAX;
            let mut v = t;
            while v != s {
                let a = via[v];
                push = push.min(self.cap[a]);
                v = self.head[a ^ 1];
            }
            let mut v = t;
            while v != s {
                let a = via[v];
                self.cap[a] -= push;
                self.cap[a ^ 1] += push;
                cost += push * self.cost[a];
                v = self.head[a ^ 1];
            }
            flow += push;
        }
        (flow, cost)
    }
}

fn net_out(net: &FlowNetwork, flow: &[u64], v: usize) -> i64 {
    net.edges
        .iter()
        .zip(flow)
        .map(|(e, &f)| match (e.from == v, e.to == v) {
            (true, false) => f as i64,
            (false, true) => -(f as i64),
            _ => 0,
        })
        .sum()
}

fn flow_cost(net: &FlowNetwork, flow: &[u64]) -> i64 {
    net.edges.iter().zip(flow).map(|(e, &f)| e.cost * f as i64).sum()
}

/// Minimum-cost maximum flow from `net.s` to `net.t`; all lower bounds must be 0.
pub fn min_cost_max_flow(net: &FlowNetwork) -> Result<FlowAssignment> {
    if net.edges.iter().any(|e| e.lower != 0) {
        return Err(invalid("min_cost_max_flow requires zero lower bounds"));
    }
    let inf = net.infinity();
    let mut r = Residual::new(net.n);
    let arcs: Vec<usize> =
        net.edges.iter().map(|e| r.add(e.from, e.to, e.upper.map_or(inf, |u| u as i64), e.cost)).collect();
    r.min_cost_max_flow(net.s, net.t);
    let flow: Vec<u64> = arcs.iter().map(|&a| r.flow_on(a) as u64).collect();
    Ok(FlowAssignment { value: net_out(net, &flow, net.s), cost: flow_cost(net, &flow), flow })
}

/// Feasible flow with lower bounds, or `None`.
///
/// Shifted network: every edge keeps capacity `upper - lower`; a super source
/// feeds each vertex the sum of its incoming lower bounds and a super sink
/// drains each vertex's outgoing lower bounds. An unbounded return edge from
/// the sink to the source turns the s-t flow into a circulation. Costs are
/// kept, so the result is a cheapest feasible flow.
pub fn feasible_flow(net: &FlowNetwork) -> Option<FlowAssignment> {
    feasible_flow_with(net, true)
}

fn feasible_flow_with(net: &FlowNetwork, with_costs: bool) -> Option<FlowAssignment> {
    let inf = net.infinity();
    let (sp, tp) = (net.n, net.n + 1);
    let mut r = Residual::new(net.n + 2);
    let arcs: Vec<usize> = net
        .edges
        .iter()
        .map(|e| {
            let cap = e.upper.map_or(inf, |u| (u - e.lower) as i64);
            r.add(e.from, e.to, cap, if with_costs { e.cost } else { 0 })
        })
        .collect();
    r.add(net.t, net.s, inf, 0);
    let mut lin = vec![0i64; net.n];
    let mut lout = vec![0i64; net.n];
    for e in &net.edges {
        lin[e.to] += e.lower as i64;
        lout[e.from] += e.lower as i64;
    }
    let demand: i64 = lin.iter().sum();
    for u in 0..net.n {
        if lin[u] > 0 {
            r.add(sp, u, lin[u], 0);
        }
        if lout[u] > 0 {
            r.add(u, tp, lout[u], 0);
        }
    }
    let (g, _) = r.min_cost_max_flow(sp, tp);
    if g != demand {
        return None;
    }
    let flow: Vec<u64> = arcs.iter().zip(&net.edges).map(|(&a, e)| e.lower + r.flow_on(a) as u64).collect();
    let fa = FlowAssignment { value: net_out(net, &flow, net.s), cost: flow_cost(net, &flow), flow };
    debug_assert!(check_flow(net, &fa).is_ok());
    Some(fa)
}

/// Verifies bounds and conservation everywhere except at the source and sink.
pub fn check_flow(net: &FlowNetwork, fa: &FlowAssignment) -> std::result::Result<(), String> {
    if fa.flow.len() != net.edges.len() {
        return Err("flow vector length differs from edge count".into());
    }
    for (idx, (e, &f)) in net.edges.iter().zip(&fa.flow).enumerate() {
        if f < e.lower || e.upper.is_some_and(|u| f > u) {
            return Err(format!("edge {idx} carries {f}, outside its bounds"));
        }
    }
    for v in 0..net.n {
        if v != net.s && v != net.t && net_out(net, &fa.flow, v) != 0 {
            return Err(format!("flow is not conserved at vertex {v}"));
        }
    }
    if fa.value != net_out(net, &fa.flow, net.s) {
        return Err("reported value differs from the net outflow of the source".into());
    }
    if fa.cost != flow_cost(net, &fa.flow) {
        return Err("reported cost differs from the flow's cost".into());
    }
    Ok(())
}

/// Feasible flow of minimum value, and among those one of minimum cost.
///
/// The value is capped by a new source feeding the old one through an edge
/// of capacity x; x is binary searched between 0 and the value of an
/// arbitrary feasible flow. Only nonnegative values are representable.
pub fn min_feasible_flow(net: &FlowNetwork) -> Option<FlowAssignment> {
    let first = feasible_flow_with(net, false)?;
    let gmax = first.value.max(0) as u64;
    let snew = net.n;
    let capped = |x: u64| {
        let mut edges = net.edges.clone();
        edges.push(FlowEdge { from: snew, to: net.s, lower: 0, upper: Some(x), cost: 0 });
        FlowNetwork { n: net.n + 1, edges, s: snew, t: net.t }
    };
    let (mut lo, mut hi) = (0u64, gmax);
    while lo < hi {
        let mid = lo + (hi - lo) / 2;
        if feasible_flow_with(&capped(mid), false).is_some() {
            debug_assert!(feasible_flow_with(&capped(mid + 1), false).is_some());
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    let g2 = capped(lo);
    let mut best = feasible_flow_with(&g2, true).expect("x = gmax is feasible");
    best.flow.pop();
    best.value = net_out(net, &best.flow, net.s);
    best.cost = flow_cost(net, &best.flow);
    debug_assert_eq!(best.value, lo as i64);
    debug_assert!(check_flow(net, &best).is_ok());
    Some(best)
}

/// Splits an integral flow into unit s-t paths (vertex sequences). Repeatedly
/// finds an s-t path over positive-flow edges by DFS, edges tried in input
/// order, and peels off its bottleneck.
pub fn decompose_paths(net: &FlowNetwork, fa: &FlowAssignment) -> Result<Vec<Vec<usize>>> {
    if fa.flow.len() != net.edges.len() {
        return Err(Error::Contract("flow vector length differs from edge count".into()));
    }
    if let Some(v) = (0..net.n).find(|&v| v != net.s && v != net.t && net_out(net, &fa.flow, v) != 0) {
        return Err(Error::Contract(format!("flow is not conserved at vertex {v}")));
    }
    let mut rest = fa.flow.clone();
    let mut out_edges = vec![Vec::new(); net.n];
    for (idx, e) in net.edges.iter().enumerate() {
        out_edges[e.from].push(idx);
    }
    let mut paths = Vec::new();
    loop {
        let mut via = vec![usize::MAX; net.n];
        let mut seen = vec![false; net.n];
        let mut stack = vec![net.s];
        seen[net.s] = true;
        while let Some(u) = stack.pop() {
            if u == net.t {
                break;
            }
            for &idx in out_edges[u].iter().rev() {
                let v = net.edges[idx].to;
                if rest[idx] > 0 && !seen[v] {
                    seen[v] = true;
                    via[v] = idx;
                    stack.push(v);
                }
            }
        }
        if !seen[net.t] {
            break;
        }
        let mut edge_path = Vec::new();
        let mut v = net.t;
        while v != net.s {
            edge_path.push(via[v]);
            v = net.edges[via[v]].from;
        }
        edge_path.reverse();
        let fp = edge_path.iter().map(|&i| rest[i]).min().unwrap();
        for &i in &edge_path {
            rest[i] -= fp;
        }
        let mut vs = vec![net.s];
        vs.extend(edge_path.iter().map(|&i| net.edges[i].to));
        for _ in 0..fp {
            paths.push(vs.clone());
        }
    }
    if rest.iter().any(|&f| f > 0) {
        return Err(Error::Contract("flow contains a circulation that is not part of an s-t path".into()));
    }
    Ok(paths)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StreamVertex {
    pub lbv: u64,
    pub ubv: Option<u64>,
    pub cv: i64,
    pub is_source: bool,
    pub is_dest: bool,
}

/// Directed edge between 1-based vertices.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct StreamEdge {
    pub from: usize,
    pub to: usize,
    pub lbe: u64,
    pub ube: Option<u64>,
    pub ce: i64,
}

/// DAG with path-count bounds and costs on vertices and edges.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BoundedDigraph {
    /// `vertices[u-1]` describes vertex u.
    pub vertices: Vec<StreamVertex>,
    pub edges: Vec<StreamEdge>,
}

impl BoundedDigraph {
    pub fn new(vertices: Vec<StreamVertex>, edges: Vec<StreamEdge>) -> Result<Self> {
        let n = vertices.len();
        for (i, v) in vertices.iter().enumerate() {
            if v.ubv.is_some_and(|u| u < v.lbv) {
                return Err(invalid(format!("vertex {} has lbv above ubv", i + 1)));
            }
            if v.cv < 0 {
                return Err(invalid(format!("vertex {} has a negative cost", i + 1)));
            }
        }
        for (idx, e) in edges.iter().enumerate() {
            if !(1..=n).contains(&e.from) || !(1..=n).contains(&e.to) {
                return Err(invalid(format!("edge {idx} has an endpoint outside 1..={n}")));
            }
            if e.ube.is_some_and(|u| u < e.lbe) {
                return Err(invalid(format!("edge {idx} has lbe above ube")));
            }
            if e.ce < 0 {
                return Err(invalid(format!("edge {idx} has a negative cost")));
            }
        }
        let g = BoundedDigraph { vertices, edges };
        let pairs: Vec<(usize, usize)> = g.edges.iter().map(|e| (e.from, e.to)).collect();
        check_acyclic(n, &pairs)?;
        Ok(g)
    }

    pub fn n(&self) -> usize {
        self.vertices.len()
    }
}

/// Rejects directed graphs (1-based) containing a cycle.
pub fn check_acyclic(n: usize, edges: &[(usize, usize)]) -> Result<()> {
    let mut indeg = vec![0usize; n + 1];
    let mut out = vec![Vec::new(); n + 1];
    for &(u, v) in edges {
        if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
            return Err(invalid(format!("edge ({u},{v}) has an endpoint outside 1..={n}")));
        }
        out[u].push(v);
        indeg[v] += 1;
    }
    let mut queue: VecDeque<usize> = (1..=n).filter(|&v| indeg[v] == 0).collect();
    let mut seen = 0;
    while let Some(u) = queue.pop_front() {
        seen += 1;
        for &v in &out[u] {
            indeg[v] -= 1;
            if indeg[v] == 0 {
                queue.push_back(v);
            }
        }
    }
    if seen != n {
        return Err(invalid("graph contains a directed cycle"));
    }
    Ok(())
}

/// Vertex u becomes `u_in = 2(u-1)` and `u_out = 2(u-1)+1`; `s = 2n`,
/// `t = 2n+1`. Edge order: the n vertex edges, the original edges, source
/// hookups, destination hookups, then (s,t).
pub fn split_vertices(g: &BoundedDigraph) -> FlowNetwork {
    let n = g.n();
    let (s, t) = (2 * n, 2 * n + 1);
    let mut edges = Vec::with_capacity(2 * n + g.edges.len() + 1);
    for (i, v) in g.vertices.iter().enumerate() {
        edges.push(FlowEdge { from: 2 * i, to: 2 * i + 1, lower: v.lbv, upper: v.ubv, cost: v.cv });
    }
    for e in &g.edges {
        edges.push(FlowEdge { from: 2 * (e.from - 1) + 1, to: 2 * (e.to - 1), lower: e.lbe, upper: e.ube, cost: e.ce });
    }
    for (i, v) in g.vertices.iter().enumerate() {
        if v.is_source {
            edges.push(FlowEdge { from: s, to: 2 * i, lower: 0, upper: None, cost: 0 });
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        if v.is_dest {
            edges.push(FlowEdge { from: 2 * i + 1, to: t, lower: 0, upper: None, cost: 0 });
        }
    }
    edges.push(FlowEdge { from: s, to: t, lower: 0, upper: None, cost: 0 });
    FlowNetwork { n: 2 * n + 2, edges, s, t }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StreamPlan {
    pub p: u64,
    /// Each path lists 1-based vertices from a source to a destination.
    pub paths: Vec<Vec<usize>>,
    pub cost_s: i64,
}

/// Minimum number of streams, and for that number the path system of
/// minimum cost S. `None` when no stream system satisfies the bounds.
pub fn min_streams(g: &BoundedDigraph) -> Option<StreamPlan> {
    let net = split_vertices(g);
    let fa = min_feasible_flow(&net)?;
    let base: i64 = g.edges.iter().map(|e| e.lbe as i64 * e.ce).sum::<i64>()
        + g.vertices.iter().map(|v| v.lbv as i64 * v.cv).sum::<i64>();
    let unit = decompose_paths(&net, &fa).expect("min_feasible_flow output is a valid acyclic flow");
    let paths: Vec<Vec<usize>> = unit
        .iter()
        .map(|p| p[1..p.len() - 1].iter().filter(|&&x| x % 2 == 0).map(|&x| x / 2 + 1).collect::<Vec<_>>())
        .filter(|p| !p.is_empty())
        .collect();
    let plan = StreamPlan { p: fa.value as u64, paths, cost_s: fa.cost - base };
    debug_assert!(check_stream_plan(g, &plan).is_ok(), "{:?} {g:?} {plan:?}", check_stream_plan(g, &plan));
    Some(plan)
}

/// Re-aggregates path counts and checks bounds, endpoints and the cost S.
pub fn check_stream_plan(g: &BoundedDigraph, plan: &StreamPlan) -> std::result::Result<(), String> {
    let n = g.n();
    if plan.paths.len() as u64 != plan.p {
        return Err(format!("{} paths reported for p = {}", plan.paths.len(), plan.p));
    }
    let mut npv = vec![0u64; n + 1];
    let mut npe = vec![0u64; g.edges.len()];
    let mut index: std::collections::HashMap<(usize, usize), Vec<usize>> = Default::default();
    for (i, e) in g.edges.iter().enumerate() {
        index.entry((e.from, e.to)).or_default().push(i);
    }
    let mut hops: std::collections::HashMap<(usize, usize), u64> = Default::default();
    for path in &plan.paths {
        let (&first, &last) = match (path.first(), path.last()) {
            (Some(a), Some(b)) => (a, b),
            _ => return Err("empty path".into()),
        };
        if path.iter().any(|&v| !(1..=n).contains(&v)) {
            return Err("path visits an unknown vertex".into());
        }
        if !g.vertices[first - 1].is_source || !g.vertices[last - 1].is_dest {
            return Err(format!("path {path:?} does not run from a source to a destination"));
        }
        for &v in path {
            npv[v] += 1;
        }
        for w in path.windows(2) {
            if !index.contains_key(&(w[0], w[1])) {
                return Err(format!("({},{}) is not an edge", w[0], w[1]));
            }
            *hops.entry((w[0], w[1])).or_default() += 1;
        }
    }
    // parallel edges: a vertex sequence only fixes the count per pair, so
    // spread it at lower bounds first, then onto the cheapest spare edges
    for (pair, ids) in &index {
        let mut left = hops.get(pair).copied().unwrap_or(0);
        for &i in ids {
            npe[i] = g.edges[i].lbe;
        }
        let need: u64 = ids.iter().map(|&i| g.edges[i].lbe).sum();
        if left < need {
            return Err(format!("pair {pair:?} carries {left} paths, below its lower bounds"));
        }
        left -= need;
        let mut by_cost = ids.clone();
        by_cost.sort_by_key(|&i| g.edges[i].ce);
        for i in by_cost {
            let room = g.edges[i].ube.map_or(left, |u| (u - npe[i]).min(left));
            npe[i] += room;
            left -= room;
        }
        if left > 0 {
            return Err(format!("pair {pair:?} carries more paths than its edges allow"));
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        let c = npv[i + 1];
        if c < v.lbv || v.ubv.is_some_and(|u| c > u) {
            return Err(format!("vertex {} lies on {c} paths, outside its bounds", i + 1));
        }
    }
    for (i, e) in g.edges.iter().enumerate() {
        if npe[i] < e.lbe || e.ube.is_some_and(|u| npe[i] > u) {
            return Err(format!("edge ({},{}) lies on {} paths, outside its bounds", e.from, e.to, npe[i]));
        }
    }
    let s: i64 = g.edges.iter().zip(&npe).map(|(e, &c)| (c - e.lbe) as i64 * e.ce).sum::<i64>()
        + g.vertices.iter().enumerate().map(|(i, v)| (npv[i + 1] - v.lbv) as i64 * v.cv).sum::<i64>();
    if s != plan.cost_s {
        return Err(format!("cost S recomputes to {s}, reported {}", plan.cost_s));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PathCover {
    pub p: usize,
    pub matching_size: usize,
    pub paths: Vec<Vec<usize>>,
}

/// Maximum bipartite matching by Hopcroft-Karp. `adj[x]` lists right
/// vertices (0-based) of left vertex x. Returns `mate_left`.
pub fn hopcroft_karp(left: usize, right: usize, adj: &[Vec<usize>]) -> Vec<Option<usize>> {
    const NIL: usize = usize::MAX;
    let mut ml = vec![NIL; left];
    let mut mr = vec![NIL; right];
    let mut dist = vec![0usize; left];
    loop {
        let mut queue = VecDeque::new();
        let mut found = false;
        for x in 0..left {
            if ml[x] == NIL {
                dist[x] = 0;
                queue.push_back(x);
            } else {
                dist[x] = usize::MAX;
            }
        }
        while let Some(x) = queue.pop_front() {
            for &y in &adj[x] {
                match mr[y] {
                    NIL => found = true,
                    x2 if dist[x2] == usize::MAX => {
                        dist[x2] = dist[x] + 1;
                        queue.push_back(x2);
                    }
                    _ => {}
                }
            }
        }
        if !found {
            break;
        }
        // iterative layered DFS
        let mut it = vec![0usize; left];
        for root in 0..left {
            if ml[root] != NIL {
                continue;
            }
            let mut stack = vec![root];
            while let Some(&x) = stack.last() {
                if it[x] == adj[x].len() {
                    dist[x] = usize::MAX;
                    stack.pop();
                    continue;
                }
                let y = adj[x][it[x]];
                it[x] += 1;
                let x2 = mr[y];
                if x2 == NIL {
                    // augment along the stack
                    let mut y = y;
                    for &xs in stack.iter().rev() {
                        let prev = ml[xs];
                        ml[xs] = y;
                        mr[y] = xs;
                        y = prev;
                    }
                    break;
                } else if dist[x2] == dist[x] + 1 {
                    stack.push(x2);
                }
            }
        }
    }
    ml.into_iter().map(|m| (m != NIL).then_some(m)).collect()
}

/// Minimum vertex-disjoint path cover of a DAG on vertices 1..=n.
pub fn min_path_cover(n: usize, edges: &[(usize, usize)]) -> Result<PathCover> {
    check_acyclic(n, edges)?;
    let mut adj = vec![Vec::new(); n];
    for &(u, v) in edges {
        adj[u - 1].push(v - 1);
    }
    let ml = hopcroft_karp(n, n, &adj);
    let mut has_pred = vec![false; n];
    for y in ml.iter().flatten() {
        has_pred[*y] = true;
    }
    let mut paths = Vec::new();
    for start in (0..n).filter(|&v| !has_pred[v]) {
        let mut path = vec![start + 1];
        let mut x = start;
        while let Some(y) = ml[x] {
            path.push(y + 1);
            x = y;
        }
        paths.push(path);
    }
    let matching_size = ml.iter().flatten().count();
    debug_assert_eq!(paths.len() + matching_size, n);
    Ok(PathCover { p: n - matching_size, matching_size, paths })
}
