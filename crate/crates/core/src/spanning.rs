//! Minimum spanning tree with a prescribed degree at one vertex, by a
//! parametric shift of the costs of the edges touching that vertex.

use serde::Serialize;

use crate::error::{invalid, malformed, Result};

/// Undirected multigraph on vertices 1..=n with positive integer weights.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedGraph {
    pub n: usize,
    pub edges: Vec<(usize, usize, i64)>,
}

impl WeightedGraph {
    pub fn new(n: usize, edges: Vec<(usize, usize, i64)>) -> Result<Self> {
        if n == 0 {
            return Err(invalid("graph needs at least one vertex"));
        }
        for (idx, &(u, v, w)) in edges.iter().enumerate() {
            if !(1..=n).contains(&u) || !(1..=n).contains(&v) {
                return Err(invalid(format!("edge {idx} has an endpoint outside 1..={n}")));
            }
            if u == v {
                return Err(invalid(format!("edge {idx} is a self-loop")));
            }
            if w <= 0 || w > 1 << 40 {
                return Err(invalid(format!("edge {idx} has weight {w}; weights must lie in 1..=2^40")));
            }
        }
        let g = WeightedGraph { n, edges };
        let mut dsu = Dsu::new(n + 1);
        let comps = g.edges.iter().filter(|&&(u, v, _)| dsu.union(u, v)).count();
        if comps != n - 1 {
            return Err(malformed("graph is disconnected"));
        }
        Ok(g)
    }

    pub fn degree(&self, r: usize) -> usize {
        self.edges.iter().filter(|&&(u, v, _)| u == r || v == r).count()
    }
}

pub(crate) struct Dsu {
    parent: Vec<usize>,
    rank: Vec<u8>,
}

impl Dsu {
    pub(crate) fn new(n: usize) -> Self {
        Dsu { parent: (0..n).collect(), rank: vec![0; n] }
    }

    pub(crate) fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    /// False when already joined.
    pub(crate) fn union(&mut self, a: usize, b: usize) -> bool {
        let (a, b) = (self.find(a), self.find(b));
        if a == b {
            return false;
        }
        let (a, b) = if self.rank[a] < self.rank[b] { (b, a) } else { (a, b) };
        self.parent[b] = a;
        if self.rank[a] == self.rank[b] {
            self.rank[a] += 1;
        }
        true
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Bias {
    /// r-edges win ties against other edges
    Prefer,
    /// r-edges lose ties against other edges
    Avoid,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ParamMst {
    /// Indices into the graph's edge list, in Kruskal acceptance order.
    pub edges: Vec<usize>,
    pub ne: usize,
}

fn touches(e: &(usize, usize, i64), r: usize) -> bool {
    e.0 == r || e.1 == r
}

/// Kruskal with r-edge costs shifted by `d`, order (cost, bias flag, index).
pub fn mst_with_param(g: &WeightedGraph, r: usize, d: i64, bias: Bias) -> Result<ParamMst> {
    if !(1..=g.n).contains(&r) {
        return Err(invalid(format!("vertex {r} is not in the graph")));
    }
    Ok(param_mst(g, r, d, bias))
}

fn param_mst(g: &WeightedGraph, r: usize, d: i64, bias: Bias) -> ParamMst {
    let mut order: Vec<(i64, u8, usize)> = g
        .edges
        .iter()
        .enumerate()
        .map(|(i, e)| {
            let at_r = touches(e, r);
            let cost = if at_r { e.2 + d } else { e.2 };
            let flag = match bias {
                Bias::Prefer => u8::from(!at_r),
                Bias::Avoid => u8::from(at_r),
            };
            (cost, flag, i)
        })
        .collect();
    order.sort_unstable();
    let mut dsu = Dsu::new(g.n + 1);
    let edges: Vec<usize> =
        order.into_iter().map(|(_, _, i)| i).filter(|&i| dsu.union(g.edges[i].0, g.edges[i].1)).collect();
    let ne = edges.iter().filter(|&&i| touches(&g.edges[i], r)).count();
    ParamMst { edges, ne }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DcmstResult {
    pub feasible: bool,
    /// Tree edges as (u, v, w), sorted.
    pub edges: Vec<(usize, usize, i64)>,
    pub total_weight: i64,
    pub degree_r: usize,
    pub diagnostic: Option<String>,
}

impl DcmstResult {
    fn infeasible(msg: String) -> Self {
        DcmstResult { feasible: false, edges: Vec::new(), total_weight: 0, degree_r: 0, diagnostic: Some(msg) }
    }
}

/// Minimum spanning tree in which `r` has degree exactly `k`.
pub fn dcmst(g: &WeightedGraph, r: usize, k: usize) -> Result<DcmstResult> {
    if !(1..=g.n).contains(&r) {
        return Err(invalid(format!("vertex {r} is not in the graph")));
    }
    let deg = g.degree(r);
    if k < 1 || k > deg {
        return Err(invalid(format!("k = {k} is outside 1..={deg}, the degree of {r}")));
    }
    let dmax = g.edges.iter().map(|e| e.2).max().unwrap_or(0) + 1;
    let ne_at = |d: i64| param_mst(g, r, d, Bias::Avoid).ne;
    if ne_at(-dmax) < k {
        return Ok(DcmstResult::infeasible(format!(
            "at most {} edges at {r} fit in a spanning tree",
            ne_at(-dmax)
        )));
    }
    if ne_at(dmax) > k {
        return Ok(DcmstResult::infeasible(format!("every spanning tree uses at least {} edges at {r}", ne_at(dmax))));
    }
    // smallest d with ne(d) <= k
    let (mut lo, mut hi) = (-dmax, dmax);
    let mut probes: Vec<(i64, usize)> = Vec::new();
    while lo < hi {
        let mid = lo + (hi - lo).div_euclid(2);
        let ne = ne_at(mid);
        probes.push((mid, ne));
        if ne <= k {
            hi = mid;
        } else {
            lo = mid + 1;
        }
    }
    probes.sort_unstable();
    debug_assert!(probes.windows(2).all(|w| w[0].1 >= w[1].1), "ne(d) must be nonincreasing");
    let dopt = lo;
    let at = param_mst(g, r, dopt, Bias::Avoid);
    let mut chosen: Vec<usize> = at.edges.iter().copied().filter(|&i| touches(&g.edges[i], r)).collect();
    if at.ne < k {
        // S(dopt - 1): with integer costs this ordering equals "prefer" at dopt
        let below = param_mst(g, r, dopt - 1, Bias::Avoid);
        let wider: Vec<usize> = below.edges.iter().copied().filter(|&i| touches(&g.edges[i], r)).collect();
        debug_assert!(chosen.iter().all(|i| wider.contains(i)), "S(dopt) must lie inside S(dopt-1)");
        let extra: Vec<usize> = wider.iter().copied().filter(|i| !chosen.contains(i)).collect();
        if extra.len() < k - at.ne {
            return Ok(DcmstResult::infeasible(format!(
                "ne({dopt}) = {} and only {} further edges at {r} are available at d = {}",
                at.ne,
                extra.len(),
                dopt - 1
            )));
        }
        chosen.extend(extra.into_iter().take(k - at.ne));
    }
    // fixed r-edges first, other r-edges excluded, the rest by weight
    let mut dsu = Dsu::new(g.n + 1);
    let mut tree: Vec<usize> = Vec::with_capacity(g.n - 1);
    for &i in &chosen {
        let ok = dsu.union(g.edges[i].0, g.edges[i].1);
        debug_assert!(ok);
        tree.push(i);
    }
    let mut rest: Vec<usize> = (0..g.edges.len()).filter(|&i| !touches(&g.edges[i], r)).collect();
    rest.sort_by_key(|&i| (g.edges[i].2, i));
    tree.extend(rest.into_iter().filter(|&i| dsu.union(g.edges[i].0, g.edges[i].1)));
    if tree.len() != g.n - 1 {
        return Ok(DcmstResult::infeasible(format!(
            "fixing {k} edges at {r} leaves the remaining graph disconnected"
        )));
    }
    let mut edges: Vec<(usize, usize, i64)> =
        tree.iter().map(|&i| g.edges[i]).map(|(u, v, w)| (u.min(v), u.max(v), w)).collect();
    edges.sort_unstable();
    let total_weight = edges.iter().map(|e| e.2).sum();
    let res = DcmstResult { feasible: true, edges, total_weight, degree_r: k, diagnostic: None };
    debug_assert!(check_spanning_tree(g, r, &res).is_ok());
    Ok(res)
}

/// Checks that the result is a spanning tree of `g` with the reported degree
/// at `r` and weight.
pub fn check_spanning_tree(g: &WeightedGraph, r: usize, res: &DcmstResult) -> std::result::Result<(), String> {
    if res.edges.len() + 1 != g.n {
        return Err(format!("{} edges for {} vertices", res.edges.len(), g.n));
    }
    let mut pool: std::collections::HashMap<(usize, usize, i64), usize> = std::collections::HashMap::new();
    for &(u, v, w) in &g.edges {
        *pool.entry((u.min(v), u.max(v), w)).or_default() += 1;
    }
    let mut dsu = Dsu::new(g.n + 1);
    for &(u, v, w) in &res.edges {
        let slot = pool.get_mut(&(u.min(v), u.max(v), w)).ok_or(format!("({u},{v},{w}) is not a graph edge"))?;
        if *slot == 0 {
            return Err(format!("({u},{v},{w}) used more often than it occurs"));
        }
        *slot -= 1;
        if !dsu.union(u, v) {
            return Err(format!("({u},{v}) closes a cycle"));
        }
    }
    let deg = res.edges.iter().filter(|e| e.0 == r || e.1 == r).count();
    if deg != res.degree_r {
        return Err(format!("vertex {r} has degree {deg}, reported {}", res.degree_r));
    }
    if res.edges.iter().map(|e| e.2).sum::<i64>() != res.total_weight {
        return Err("total weight does not match the edges".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn k3() -> WeightedGraph {
        // r=1, a=2, b=3
        WeightedGraph::new(3, vec![(1, 2, 1), (1, 3, 2), (2, 3, 10)]).unwrap()
    }

    #[test]
    fn param_examples() {
        let g = k3();
        let m = mst_with_param(&g, 1, 0, Bias::Prefer).unwrap();
        assert_eq!(m.ne, 2);
        assert_eq!(m.edges.iter().map(|&i| g.edges[i].2).sum::<i64>(), 3);
        let m = mst_with_param(&g, 1, 20, Bias::Avoid).unwrap();
        assert_eq!(m.ne, 1);
        assert_eq!(m.edges, vec![2, 0]);
        let star = WeightedGraph::new(4, vec![(1, 2, 5), (1, 3, 1), (4, 1, 2)]).unwrap();
        for d in [-100, 0, 100] {
            assert_eq!(mst_with_param(&star, 1, d, Bias::Avoid).unwrap().ne, 3);
        }
    }

    #[test]
    fn dcmst_examples() {
        let g = k3();
        let r = dcmst(&g, 1, 2).unwrap();
        assert_eq!((r.total_weight, r.edges.clone()), (3, vec![(1, 2, 1), (1, 3, 2)]));
        let r = dcmst(&g, 1, 1).unwrap();
        assert_eq!((r.total_weight, r.edges.clone()), (11, vec![(1, 2, 1), (2, 3, 10)]));
        assert!(dcmst(&g, 1, 3).is_err());
        assert!(dcmst(&g, 1, 0).is_err());
    }

    #[test]
    fn parallel_edges_cap_degree() {
        // two parallel edges 1-2 count toward deg(1) but only one fits
        let g = WeightedGraph::new(3, vec![(1, 2, 1), (1, 2, 2), (2, 3, 1)]).unwrap();
        let r = dcmst(&g, 1, 2).unwrap();
        assert!(!r.feasible);
        assert!(r.diagnostic.is_some());
    }

    #[test]
    fn rejects_bad_graphs() {
        assert!(WeightedGraph::new(3, vec![(1, 2, 1)]).is_err());
        assert!(WeightedGraph::new(2, vec![(1, 2, 0)]).is_err());
        assert!(WeightedGraph::new(2, vec![(1, 1, 3), (1, 2, 1)]).is_err());
    }
}
