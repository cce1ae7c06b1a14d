//! Matchings on trees: maximum-weight matching in the extended tree (tree
//! edges plus sibling pairs, weight |w(x) - w(y)|), and a maximum matching in
//! the square (or any higher power) of a tree.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::tree_core::{RootedTree, Vertex, NO_VERTEX};

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct WeightedMatchingResult {
    pub weight: i64,
    /// Pairs (x, y) with x < y, sorted.
    pub edges: Vec<(Vertex, Vertex)>,
}

/// Interval tables over the weight-sorted sons of one vertex.
/// `ca[j][k]`: vertex matched, sons j..=k considered; `None` is -infinity.
/// Empty intervals (k < j) are answered by the accessors.
struct Intervals {
    ca: Vec<Vec<Option<i64>>>,
    cb: Vec<Vec<i64>>,
}

impl Intervals {
    fn ca(&self, j: usize, k: isize) -> Option<i64> {
        if k < j as isize {
            None
        } else {
            self.ca[j][k as usize]
        }
    }
    fn cb(&self, j: usize, k: isize) -> i64 {
        if k < j as isize {
            0
        } else {
            self.cb[j][k as usize]
        }
    }
}

fn sorted_sons(tree: &RootedTree, i: Vertex, w: &[i64]) -> Vec<Vertex> {
    let mut s = tree.children(i).to_vec();
    s.sort_by_key(|&x| (w[x], x));
    s
}

fn intervals(i: Vertex, sons: &[Vertex], w: &[i64], a: &[Option<i64>], b: &[i64]) -> Intervals {
    let m = sons.len();
    let mut t = Intervals { ca: vec![vec![None; m]; m], cb: vec![vec![0; m]; m] };
    let best = |x: Vertex| a[x].map_or(b[x], |v| v.max(b[x]));
    for j in 0..m {
        let s = sons[j];
        t.ca[j][j] = Some((w[i] - w[s]).abs() + b[s]);
        t.cb[j][j] = best(s);
    }
    for count in 1..m {
        for j in 0..m - count {
            let k = j + count;
            let (sj, sk) = (sons[j], sons[k]);
            let ki = k as isize;
            let pair = (w[sj] - w[sk]).abs() + b[sj] + b[sk];
            let ca = [
                t.ca(j + 1, ki - 1).map(|v| pair + v),
                Some((w[i] - w[sj]).abs() + b[sj] + t.cb(j + 1, ki)),
                Some((w[i] - w[sk]).abs() + b[sk] + t.cb(j, ki - 1)),
                t.ca(j + 1, ki).map(|v| best(sj) + v),
                t.ca(j, ki - 1).map(|v| best(sk) + v),
            ];
            t.ca[j][k] = ca.into_iter().flatten().max();
            t.cb[j][k] = (pair + t.cb(j + 1, ki - 1)).max(best(sj) + t.cb(j + 1, ki)).max(best(sk) + t.cb(j, ki - 1));
        }
    }
    t
}

/// Maximum-weight matching in the extended tree, O(n^2).
pub fn extended_tree_max_weight_matching(tree: &RootedTree) -> Result<WeightedMatchingResult> {
    if !tree.has_vertex_weights() {
        return Err(invalid("extended-tree matching needs vertex weights"));
    }
    let n = tree.n();
    let w: Vec<i64> = (0..=n).map(|v| if v == 0 { 0 } else { tree.vertex_weight(v).unwrap() }).collect();
    // A(i) is None for a leaf: a leaf cannot be matched inside its own subtree
    let mut a = vec![None::<i64>; n + 1];
    let mut b = vec![0i64; n + 1];
    for i in tree.postorder() {
        let sons = sorted_sons(tree, i, &w);
        if sons.is_empty() {
            continue;
        }
        let t = intervals(i, &sons, &w, &a, &b);
        let last = sons.len() as isize - 1;
        a[i] = t.ca(0, last);
        b[i] = t.cb(0, last);
    }
    let root = tree.root();
    let best = |x: Vertex| a[x].map_or(b[x], |v| v.max(b[x]));
    let weight = best(root);

    // traceback: (vertex, must be matched inside its subtree)
    let mut edges = Vec::new();
    let mut work = vec![(root, a[root].is_some_and(|v| v > b[root]))];
    while let Some((i, matched)) = work.pop() {
        let sons = sorted_sons(tree, i, &w);
        if sons.is_empty() {
            continue;
        }
        let t = intervals(i, &sons, &w, &a, &b);
        let (mut j, mut k) = (0isize, sons.len() as isize - 1);
        let mut in_a = matched;
        let free = |x: Vertex| (x, a[x].is_some_and(|v| v > b[x]));
        while j <= k {
            let (ju, ku) = (j as usize, k as usize);
            let (sj, sk) = (sons[ju], sons[ku]);
            let pair = (w[sj] - w[sk]).abs() + b[sj] + b[sk];
            let best_j = a[sj].map_or(b[sj], |v| v.max(b[sj]));
            let best_k = a[sk].map_or(b[sk], |v| v.max(b[sk]));
            if in_a {
                let target = t.ca(ju, k).expect("reachable CA state is finite");
                if j == k {
                    edges.push((i.min(sj), i.max(sj)));
                    work.push((sj, false));
                    break;
                }
                if t.ca(ju + 1, k - 1).map(|v| pair + v) == Some(target) {
                    edges.push((sj.min(sk), sj.max(sk)));
                    work.extend([(sj, false), (sk, false)]);
                    j += 1;
                    k -= 1;
                } else if (w[i] - w[sj]).abs() + b[sj] + t.cb(ju + 1, k) == target {
                    edges.push((i.min(sj), i.max(sj)));
                    work.push((sj, false));
                    in_a = false;
                    j += 1;
                } else if (w[i] - w[sk]).abs() + b[sk] + t.cb(ju, k - 1) == target {
                    edges.push((i.min(sk), i.max(sk)));
                    work.push((sk, false));
                    in_a = false;
                    k -= 1;
                } else if t.ca(ju + 1, k).map(|v| best_j + v) == Some(target) {
                    work.push(free(sj));
                    j += 1;
                } else {
                    debug_assert_eq!(t.ca(ju, k - 1).map(|v| best_k + v), Some(target));
                    work.push(free(sk));
                    k -= 1;
                }
            } else {
                let target = t.cb(ju, k);
                if j == k {
                    work.push(free(sj));
                    break;
                }
                if pair + t.cb(ju + 1, k - 1) == target {
                    edges.push((sj.min(sk), sj.max(sk)));
                    work.extend([(sj, false), (sk, false)]);
                    j += 1;
                    k -= 1;
                } else if best_j + t.cb(ju + 1, k) == target {
                    work.push(free(sj));
                    j += 1;
                } else {
                    debug_assert_eq!(best_k + t.cb(ju, k - 1), target);
                    work.push(free(sk));
                    k -= 1;
                }
            }
        }
    }
    edges.sort_unstable();
    let res = WeightedMatchingResult { weight, edges };
    debug_assert!(check_extended_matching(tree, &res).is_ok());
    Ok(res)
}

/// Checks disjointness, edge admissibility and the reported weight.
pub fn check_extended_matching(tree: &RootedTree, m: &WeightedMatchingResult) -> std::result::Result<(), String> {
    let mut used = vec![false; tree.n() + 1];
    let mut total = 0;
    for &(x, y) in &m.edges {
        if !tree.contains(x) || !tree.contains(y) || x == y {
            return Err(format!("({x},{y}) is not a pair of distinct vertices"));
        }
        let sibling = tree.parent(x).is_some() && tree.parent(x) == tree.parent(y);
        if !tree.is_tree_edge(x, y) && !sibling {
            return Err(format!("({x},{y}) is neither a tree edge nor a sibling pair"));
        }
        for v in [x, y] {
            if std::mem::replace(&mut used[v], true) {
                return Err(format!("vertex {v} is matched twice"));
            }
        }
        total += (tree.vertex_weight(x).unwrap_or(0) - tree.vertex_weight(y).unwrap_or(0)).abs();
    }
    if total != m.weight {
        return Err(format!("edges weigh {total}, reported {}", m.weight));
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct PowerMatchingResult {
    pub edges: Vec<(Vertex, Vertex)>,
    /// `matched[v]`; slot 0 unused.
    pub matched: Vec<bool>,
}

/// Maximum matching in the k-th power of the tree (k >= 2): leftover
/// sons are paired with each other, a last leftover with its parent.
/// Always matches floor(n/2) pairs.
pub fn power_matching(tree: &RootedTree, k: usize) -> Result<PowerMatchingResult> {
    if k < 2 {
        return Err(invalid("power matching needs k >= 2"));
    }
    let n = tree.n();
    let mut matched = vec![false; n + 1];
    let mut edges = Vec::with_capacity(n / 2);
    for i in tree.postorder() {
        let mut last_son = NO_VERTEX;
        for &s in tree.children(i) {
            if matched[s] {
                continue;
            }
            if last_son == NO_VERTEX {
                last_son = s;
            } else {
                edges.push((last_son, s));
                matched[last_son] = true;
                matched[s] = true;
                last_son = NO_VERTEX;
            }
        }
        if last_son != NO_VERTEX {
            edges.push((i, last_son));
            matched[i] = true;
            matched[last_son] = true;
        }
    }
    debug_assert_eq!(edges.len(), n / 2);
    Ok(PowerMatchingResult { edges, matched })
}

/// Checks disjointness and that every pair lies within tree distance 2.
pub fn check_power_matching(tree: &RootedTree, m: &PowerMatchingResult) -> std::result::Result<(), String> {
    let mut used = vec![false; tree.n() + 1];
    for &(x, y) in &m.edges {
        if !tree.contains(x) || !tree.contains(y) || x == y {
            return Err(format!("({x},{y}) is not a pair of distinct vertices"));
        }
        let near = tree.is_tree_edge(x, y)
            || (tree.parent(x).is_some() && tree.parent(x) == tree.parent(y))
            || tree.parent(x).and_then(|p| tree.parent(p)) == Some(y)
            || tree.parent(y).and_then(|p| tree.parent(p)) == Some(x);
        if !near {
            return Err(format!("({x},{y}) are farther apart than 2"));
        }
        for v in [x, y] {
            if std::mem::replace(&mut used[v], true) {
                return Err(format!("vertex {v} is matched twice"));
            }
        }
    }
    if used != m.matched {
        return Err("matched flags disagree with the edges".into());
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    fn star(weights: &[i64]) -> RootedTree {
        let n = weights.len();
        let edges: Vec<_> = (2..=n).map(|v| (1, v)).collect();
        root_at(n, &edges, 1).unwrap().with_vertex_weights(weights).unwrap()
    }

    #[test]
    fn extended_examples() {
        let r = extended_tree_max_weight_matching(&star(&[10, 1, 2])).unwrap();
        assert_eq!((r.weight, r.edges.clone()), (9, vec![(1, 2)]));
        let r = extended_tree_max_weight_matching(&star(&[0, 5, 3, 8])).unwrap();
        assert_eq!(r.weight, 10);
        assert_eq!(r.edges.len(), 2);
        let r = extended_tree_max_weight_matching(&star(&[4])).unwrap();
        assert_eq!((r.weight, r.edges.len()), (0, 0));
        let plain = root_at(2, &[(1, 2)], 1).unwrap();
        assert!(extended_tree_max_weight_matching(&plain).is_err());
    }

    #[test]
    fn deeper_tree() {
        // 1 -> 2,3 ; 2 -> 4,5 ; weights make the sibling pair (4,5) best
        let t = root_at(5, &[(1, 2), (1, 3), (2, 4), (2, 5)], 1).unwrap().with_vertex_weights(&[5, 5, 6, 0, 100]).unwrap();
        let r = extended_tree_max_weight_matching(&t).unwrap();
        assert_eq!(r.weight, 101);
        // (1,3) and the sibling pair (2,3) tie at weight 1
        assert_eq!(r.edges, vec![(2, 3), (4, 5)]);
        check_extended_matching(&t, &r).unwrap();
    }

    #[test]
    fn power_examples() {
        let p4 = root_at(4, &[(1, 2), (2, 3), (3, 4)], 1).unwrap();
        let m = power_matching(&p4, 2).unwrap();
        assert_eq!(m.edges.len(), 2);
        check_power_matching(&p4, &m).unwrap();
        let one = root_at(1, &[], 1).unwrap();
        assert!(power_matching(&one, 2).unwrap().edges.is_empty());
        let st = root_at(5, &[(1, 2), (1, 3), (1, 4), (1, 5)], 1).unwrap();
        let m = power_matching(&st, 3).unwrap();
        assert_eq!(m.edges, vec![(2, 3), (4, 5)]);
        assert!(!m.matched[1]);
        assert!(power_matching(&st, 1).is_err());
    }
}
