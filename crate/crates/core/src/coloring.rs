//! Worst-case first-fit coloring (Grundy number) of trees.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::tree_core::{RootedTree, Vertex};

/// First-fit colors (`colors[v]`, slot 0 unused) for a vertex order on a
/// 1-based adjacency list.
pub fn first_fit_color(adj: &[Vec<Vertex>], order: &[Vertex]) -> Result<Vec<u32>> {
    let n = adj.len().saturating_sub(1);
    if order.len() != n {
        return Err(invalid(format!("order has {} entries, expected {n}", order.len())));
    }
    let mut color = vec![0u32; n + 1];
    let mut seen = vec![false; n + 1];
    for &v in order {
        if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v], true) {
            return Err(invalid("order is not a permutation of 1..=n"));
        }
    }
    let mut taken = Vec::new();
    for &v in order {
        taken.clear();
        taken.extend(adj[v].iter().map(|&u| color[u]).filter(|&c| c > 0));
        taken.sort_unstable();
        taken.dedup();
        let mut c = 1;
        for &t in &taken {
            if t == c {
                c += 1;
            } else if t > c {
                break;
            }
        }
        color[v] = c;
    }
    Ok(color)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GrundyResult {
    /// Largest color of each vertex within its own subtree; slot 0 unused.
    pub c1: Vec<u32>,
    /// Largest color of each vertex when colored last in the whole tree.
    pub cmax: Vec<u32>,
    /// `colmax[i]` = largest color of parent(i) once T(i) is removed and
    /// parent(i) becomes the root; 0 for the root.
    pub colmax: Vec<u32>,
    pub grundy: u32,
}

/// Greedy color raise over son colors sorted nondecreasingly, optionally
/// skipping one occurrence of `skip`.
fn compute(sorted: &[u32], skip: Option<u32>) -> u32 {
    let mut c = 1;
    let mut skip = skip;
    for &x in sorted {
        if skip == Some(x) {
            skip = None;
            continue;
        }
        if x >= c {
            c += 1;
        }
    }
    c
}

/// Bottom-up pass: `c1[i]` for the tree as rooted.
pub fn bottom_up(tree: &RootedTree) -> Vec<u32> {
    let mut c1 = vec![0u32; tree.n() + 1];
    let mut buf = Vec::new();
    for i in tree.postorder() {
        buf.clear();
        buf.extend(tree.children(i).iter().map(|&s| c1[s]));
        buf.sort_unstable();
        c1[i] = compute(&buf, None);
    }
    c1
}

/// Grundy number together with the per-vertex values of the rerooting
/// pass, O(n log n).
///
/// Top-down, the son list of a vertex `p` is its own sons plus its parent
/// carrying `colmax(parent(p), p)`. `cmax(p)` is the greedy value of that
/// list; `colmax(p, i)` for a son `i` is the value of the list without `i`.
/// Sons with equal `c1` give equal `colmax`, so it is computed once per
/// distinct color, which keeps high-degree vertices linear.
pub fn grundy_all(tree: &RootedTree) -> GrundyResult {
    let n = tree.n();
    let c1 = bottom_up(tree);
    let mut cmax = vec![0u32; n + 1];
    let mut colmax = vec![0u32; n + 1];
    let mut list = Vec::new();
    let mut cache: Vec<(u32, u32)> = Vec::new();
    for p in tree.preorder() {
        list.clear();
        list.extend(tree.children(p).iter().map(|&s| c1[s]));
        if tree.parent(p).is_some() {
            list.push(colmax[p]);
        }
        list.sort_unstable();
        cmax[p] = compute(&list, None);
        cache.clear();
        for &i in tree.children(p) {
            let v = match cache.iter().find(|&&(k, _)| k == c1[i]) {
                Some(&(_, v)) => v,
                None => {
                    let v = compute(&list, Some(c1[i]));
                    cache.push((c1[i], v));
                    v
                }
            };
            colmax[i] = v;
        }
    }
    let grundy = cmax[1..].iter().copied().max().unwrap_or(0);
    assert!(
        grundy <= n.ilog2() + 1,
        "Grundy number {grundy} exceeds floor(log2 {n}) + 1"
    );
    debug_assert!((1..=n).all(|v| 1 <= c1[v] && c1[v] <= cmax[v]));
    GrundyResult { c1, cmax, colmax, grundy }
}

/// Parent array (`parents[v-1]`, 0 at the root) of the binomial tree B(k)
/// on 2^k vertices rooted at 1.
pub fn binomial_tree_parents(k: u32) -> Vec<Vertex> {
    let mut parents = vec![0usize];
    for _ in 0..k {
        let half = parents.len();
        let copy: Vec<Vertex> = parents.iter().map(|&p| if p == 0 { 1 } else { p + half }).collect();
        parents.extend(copy);
    }
    parents
}

pub fn binomial_tree(k: u32) -> RootedTree {
    RootedTree::from_parents(&binomial_tree_parents(k)).expect("binomial parents form a tree")
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    #[test]
    fn first_fit_examples() {
        let p2 = root_at(2, &[(1, 2)], 1).unwrap().adjacency();
        assert_eq!(first_fit_color(&p2, &[1, 2]).unwrap()[1..], [1, 2]);
        let p3 = root_at(3, &[(1, 2), (2, 3)], 1).unwrap().adjacency();
        // in visiting order the colors read 1, 1, 2
        assert_eq!(first_fit_color(&p3, &[1, 3, 2]).unwrap()[1..], [1, 2, 1]);
        assert!(first_fit_color(&p3, &[1, 1, 2]).is_err());
        assert!(first_fit_color(&p3, &[1, 2]).is_err());
    }

    #[test]
    fn grundy_examples() {
        assert_eq!(grundy_all(&root_at(1, &[], 1).unwrap()).grundy, 1);
        let p4 = root_at(4, &[(1, 2), (2, 3), (3, 4)], 1).unwrap();
        let r = grundy_all(&p4);
        assert_eq!(r.grundy, 3);
        assert_eq!(r.cmax[1..], [2, 3, 3, 2]);
        assert_eq!(grundy_all(&binomial_tree(3)).grundy, 4);
    }

    #[test]
    fn binomial_shapes() {
        assert_eq!(binomial_tree_parents(2), vec![0, 1, 1, 3]);
        for k in 0..8 {
            let t = binomial_tree(k);
            assert_eq!(t.n(), 1 << k);
            assert_eq!(t.children(1).len(), k as usize);
            assert_eq!(grundy_all(&t).grundy, k + 1);
        }
    }

    #[test]
    fn star_reroot() {
        let t = root_at(6, &[(1, 2), (1, 3), (1, 4), (1, 5), (1, 6)], 1).unwrap();
        let r = grundy_all(&t);
        assert_eq!(r.grundy, 2);
        assert!(r.cmax[2..].iter().all(|&c| c == 2));
        assert!(r.colmax[2..].iter().all(|&c| c == 2));
    }
}
