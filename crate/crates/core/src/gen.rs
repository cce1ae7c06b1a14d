//! Seeded instance generators. Everything is driven by a ChaCha8 stream so
//! a seed reproduces the same instance on every platform.

use std::cmp::Reverse;
use std::collections::BinaryHeap;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::cycle_completion::ExtraEdge;
use crate::flownet::{StreamEdge, StreamVertex};
use crate::tree_core::Vertex;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

/// Uniform labeled tree on 1..=n from a random Prüfer sequence.
pub fn random_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    if n <= 1 {
        return Vec::new();
    }
    let seq: Vec<Vertex> = (0..n - 2).map(|_| rng.gen_range(1..=n)).collect();
    let mut deg = vec![1usize; n + 1];
    for &x in &seq {
        deg[x] += 1;
    }
    let mut leaves: BinaryHeap<Reverse<Vertex>> = (1..=n).filter(|&v| deg[v] == 1).map(Reverse).collect();
    let mut edges = Vec::with_capacity(n - 1);
    for &x in &seq {
        let Reverse(leaf) = leaves.pop().unwrap();
        edges.push((leaf, x));
        deg[x] -= 1;
        if deg[x] == 1 {
            leaves.push(Reverse(x));
        }
    }
    let Reverse(a) = leaves.pop().unwrap();
    let Reverse(b) = leaves.pop().unwrap();
    edges.push((a, b));
    edges
}

/// Tree where vertex v > 1 hangs below a uniform earlier vertex; shallow.
pub fn random_recursive_tree<R: Rng>(n: usize, rng: &mut R) -> Vec<(Vertex, Vertex)> {
    (2..=n).map(|v| (rng.gen_range(1..v), v)).collect()
}

/// Path 1-2-...-n, the deepest shape.
pub fn path_tree(n: usize) -> Vec<(Vertex, Vertex)> {
    (1..n).map(|i| (i, i + 1)).collect()
}

/// `m` distinct non-tree pairs with weights in `0..=wmax` (fewer if the
/// tree does not have that many).
pub fn random_extras<R: Rng>(n: usize, tree_edges: &[(Vertex, Vertex)], m: usize, wmax: i64, rng: &mut R) -> Vec<ExtraEdge> {
    let tree: std::collections::HashSet<(Vertex, Vertex)> =
        tree_edges.iter().map(|&(a, b)| (a.min(b), a.max(b))).collect();
    let room = n * n.saturating_sub(1) / 2 - tree.len();
    let m = m.min(room);
    let mut seen = std::collections::HashSet::with_capacity(m);
    let mut out = Vec::with_capacity(m);
    if room <= 4 * m {
        let mut all: Vec<(Vertex, Vertex)> =
            (1..=n).flat_map(|a| (a + 1..=n).map(move |b| (a, b))).filter(|p| !tree.contains(p)).collect();
        all.shuffle(rng);
        all.truncate(m);
        return all.into_iter().map(|(a, b)| ExtraEdge::new(a, b, rng.gen_range(0..=wmax))).collect();
    }
    while out.len() < m {
        let a = rng.gen_range(1..=n);
        let b = rng.gen_range(1..=n);
        let key = (a.min(b), a.max(b));
        if a == b || tree.contains(&key) || !seen.insert(key) {
            continue;
        }
        out.push(ExtraEdge::new(a, b, rng.gen_range(0..=wmax)));
    }
    out
}

/// Connected multigraph: a random spanning tree plus `extra` random edges,
/// weights in `1..=wmax`.
pub fn random_weighted_graph<R: Rng>(n: usize, extra: usize, wmax: i64, rng: &mut R) -> Vec<(usize, usize, i64)> {
    let mut edges: Vec<(usize, usize, i64)> =
        random_tree(n, rng).into_iter().map(|(a, b)| (a, b, rng.gen_range(1..=wmax))).collect();
    if n >= 2 {
        for _ in 0..extra {
            let a = rng.gen_range(1..=n);
            let mut b = rng.gen_range(1..n);
            if b >= a {
                b += 1;
            }
            edges.push((a, b, rng.gen_range(1..=wmax)));
        }
    }
    edges
}

/// DAG on 1..=n with edges oriented along a random topological order,
/// bounds in `0..=bmax` (upper bounds sometimes absent) and costs in
/// `0..=cmax`.
pub fn random_bounded_dag<R: Rng>(
    n: usize,
    m: usize,
    bmax: u64,
    cmax: i64,
    rng: &mut R,
) -> (Vec<StreamVertex>, Vec<StreamEdge>) {
    let mut order: Vec<usize> = (1..=n).collect();
    order.shuffle(rng);
    let bounds = |rng: &mut R| {
        let lo = if rng.gen_bool(0.5) { 0 } else { rng.gen_range(0..=bmax) };
        let hi = if rng.gen_bool(0.3) { None } else { Some(rng.gen_range(lo..=bmax.max(lo))) };
        (lo, hi)
    };
    let vertices = (0..n)
        .map(|_| {
            let (lbv, ubv) = bounds(rng);
            StreamVertex {
                lbv,
                ubv,
                cv: rng.gen_range(0..=cmax),
                is_source: rng.gen_bool(0.5),
                is_dest: rng.gen_bool(0.5),
            }
        })
        .collect();
    let mut edges = Vec::with_capacity(m);
    if n >= 2 {
        for _ in 0..m {
            let i = rng.gen_range(0..n - 1);
            let j = rng.gen_range(i + 1..n);
            let (lbe, ube) = bounds(rng);
            edges.push(StreamEdge { from: order[i], to: order[j], lbe, ube, ce: rng.gen_range(0..=cmax) });
        }
    }
    (vertices, edges)
}

pub fn random_leaf_seq<R: Rng>(n: usize, hmax: i64, rng: &mut R) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(0..=hmax)).collect()
}

pub fn random_vertex_weights<R: Rng>(n: usize, wmax: i64, rng: &mut R) -> Vec<i64> {
    (0..n).map(|_| rng.gen_range(0..=wmax)).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    #[test]
    fn trees_are_trees() {
        let mut r = rng(7);
        for n in 1..40 {
            root_at(n, &random_tree(n, &mut r), 1).unwrap();
            root_at(n, &random_recursive_tree(n, &mut r), 1).unwrap();
        }
    }

    #[test]
    fn seeds_reproduce() {
        assert_eq!(random_tree(30, &mut rng(3)), random_tree(30, &mut rng(3)));
        assert_ne!(random_tree(30, &mut rng(3)), random_tree(30, &mut rng(4)));
    }

    #[test]
    fn extras_avoid_tree_edges() {
        let mut r = rng(11);
        for n in 2..15 {
            let t = random_tree(n, &mut r);
            let ex = random_extras(n, &t, 10, 5, &mut r);
            let tree = root_at(n, &t, 1).unwrap();
            crate::cycle_completion::validate_extras(&tree, &ex).unwrap();
        }
    }

    #[test]
    fn dags_are_acyclic() {
        let mut r = rng(5);
        for n in 1..10 {
            let (v, e) = random_bounded_dag(n, 12, 2, 3, &mut r);
            crate::flownet::BoundedDigraph::new(v, e).unwrap();
        }
    }
}
