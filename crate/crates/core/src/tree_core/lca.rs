use super::{RootedTree, Vertex};
use crate::error::{invalid, Result};

/// Lowest common ancestor queries in O(1) after O(n log n) preprocessing:
/// an Euler tour of the tree and a sparse table of depth minima over it.
#[derive(Debug, Clone)]
pub struct LcaIndex {
    n: usize,
    tour: Vec<u32>,
    depth: Vec<u32>,
    first: Vec<u32>,
    // table[k][i] = tour position of the shallowest vertex in tour[i..i + 2^k]
    table: Vec<Vec<u32>>,
}

impl LcaIndex {
    pub fn new(tree: &RootedTree) -> Self {
        let n = tree.n();
        let depths = tree.depths();
        let mut tour = Vec::with_capacity(2 * n - 1);
        let mut first = vec![0u32; n + 1];
        first[tree.root()] = 0;
        tour.push(tree.root() as u32);
        // (vertex, index of the next child to descend into)
        let mut stack = vec![(tree.root(), 0usize)];
        while let Some(top) = stack.last_mut() {
            let (u, next) = *top;
            let kids = tree.children(u);
            if next < kids.len() {
                top.1 += 1;
                let c = kids[next];
                first[c] = tour.len() as u32;
                tour.push(c as u32);
                stack.push((c, 0));
            } else {
                stack.pop();
                if let Some(&(p, _)) = stack.last() {
                    tour.push(p as u32);
                }
            }
        }
        let depth: Vec<u32> = tour.iter().map(|&v| depths[v as usize] as u32).collect();
        let len = tour.len();
        let mut table = vec![(0..len as u32).collect::<Vec<_>>()];
        let mut span = 1;
        while 2 * span <= len {
            let prev = table.last().unwrap();
            let row: Vec<u32> = (0..=len - 2 * span)
                .map(|i| {
                    let (a, b) = (prev[i], prev[i + span]);
                    if depth[b as usize] < depth[a as usize] {
                        b
                    } else {
                        a
                    }
                })
                .collect();
            table.push(row);
            span *= 2;
        }
        LcaIndex { n, tour, depth, first, table }
    }

    pub fn lca(&self, u: Vertex, v: Vertex) -> Result<Vertex> {
        for x in [u, v] {
            if x == 0 || x > self.n {
                return Err(invalid(format!("vertex {x} outside 1..={}", self.n)));
            }
        }
        Ok(self.lca_unchecked(u, v))
    }

    /// [`LcaIndex::lca`] without range checks; panics on out-of-range ids.
    pub fn lca_unchecked(&self, u: Vertex, v: Vertex) -> Vertex {
        let (mut l, mut r) = (self.first[u] as usize, self.first[v] as usize);
        if l > r {
            std::mem::swap(&mut l, &mut r);
        }
        let k = (r - l + 1).ilog2() as usize;
        let (a, b) = (self.table[k][l], self.table[k][r + 1 - (1 << k)]);
        let pos = if self.depth[b as usize] < self.depth[a as usize] { b } else { a };
        self.tour[pos as usize] as Vertex
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    #[test]
    fn small_trees() {
        let path = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
        assert_eq!(LcaIndex::new(&path).lca(3, 3).unwrap(), 3);
        let star = root_at(3, &[(1, 2), (1, 3)], 1).unwrap();
        assert_eq!(LcaIndex::new(&star).lca(2, 3).unwrap(), 1);
        let t = root_at(5, &[(1, 2), (2, 3), (2, 4), (1, 5)], 1).unwrap();
        let idx = LcaIndex::new(&t);
        assert_eq!(idx.lca(3, 4).unwrap(), 2);
        assert_eq!(idx.lca(4, 5).unwrap(), 1);
        assert_eq!(idx.lca(2, 3).unwrap(), 2);
    }

    #[test]
    fn out_of_range() {
        let t = root_at(2, &[(1, 2)], 1).unwrap();
        let idx = LcaIndex::new(&t);
        assert!(idx.lca(0, 1).is_err());
        assert!(idx.lca(1, 3).is_err());
    }

    #[test]
    fn single_vertex() {
        let t = root_at(1, &[], 1).unwrap();
        assert_eq!(LcaIndex::new(&t).lca(1, 1).unwrap(), 1);
    }
}
