use std::collections::VecDeque;

use super::{Vertex, NO_VERTEX};
use crate::error::{invalid, malformed, Result};

/// A rooted tree on vertices `1..=n`.
///
/// Children keep the order in which their edges appear in the input; nothing
/// downstream relies on that order except documented tie-breaking.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RootedTree {
    n: usize,
    root: Vertex,
    parent: Vec<Vertex>,
    children: Vec<Vec<Vertex>>,
    vertex_weight: Option<Vec<i64>>,
    // weight of the edge (v, parent(v)), indexed by v
    edge_weight: Option<Vec<i64>>,
    edges: Vec<(Vertex, Vertex)>,
}

/// Roots the tree given by an undirected edge list at `r`.
pub fn root_at(n: usize, edges: &[(Vertex, Vertex)], r: Vertex) -> Result<RootedTree> {
    RootedTree::build(n, edges, None, r)
}

/// Like [`root_at`], additionally attaching one weight per edge.
pub fn root_at_weighted(n: usize, edges: &[(Vertex, Vertex, i64)], r: Vertex) -> Result<RootedTree> {
    let plain: Vec<_> = edges.iter().map(|&(u, v, _)| (u, v)).collect();
    let weights: Vec<_> = edges.iter().map(|&(_, _, w)| w).collect();
    RootedTree::build(n, &plain, Some(&weights), r)
}

impl RootedTree {
    fn build(
        n: usize,
        edges: &[(Vertex, Vertex)],
        weights: Option<&[i64]>,
        r: Vertex,
    ) -> Result<Self> {
        if n == 0 {
            return Err(malformed("a tree needs at least one vertex"));
        }
        if r == 0 || r > n {
            return Err(invalid(format!("root {r} outside 1..={n}")));
        }
        if edges.len() != n - 1 {
            return Err(malformed(format!(
                "a tree on {n} vertices has {} edges, got {}",
                n - 1,
                edges.len()
            )));
        }
        let mut adj: Vec<Vec<(Vertex, usize)>> = vec![Vec::new(); n + 1];
        for (idx, &(u, v)) in edges.iter().enumerate() {
            if u == 0 || u > n || v == 0 || v > n {
                return Err(malformed(format!("edge ({u},{v}) has an endpoint outside 1..={n}")));
            }
            if u == v {
                return Err(malformed(format!("self-loop at vertex {u}")));
            }
            adj[u].push((v, idx));
            adj[v].push((u, idx));
        }
        let mut parent = vec![NO_VERTEX; n + 1];
        let mut children = vec![Vec::new(); n + 1];
        let mut edge_weight = weights.map(|_| vec![0i64; n + 1]);
        let mut seen = vec![false; n + 1];
        let mut via = vec![usize::MAX; n + 1];
        let mut queue = VecDeque::from([r]);
        seen[r] = true;
        let mut visited = 1;
        while let Some(u) = queue.pop_front() {
            for &(v, idx) in &adj[u] {
                if idx == via[u] {
                    continue;
                }
                if seen[v] {
                    return Err(malformed(format!("edge ({u},{v}) closes a cycle")));
                }
                seen[v] = true;
                visited += 1;
                parent[v] = u;
                via[v] = idx;
                children[u].push(v);
                if let (Some(ew), Some(w)) = (edge_weight.as_mut(), weights) {
                    ew[v] = w[idx];
                }
                queue.push_back(v);
            }
        }
        if visited != n {
            return Err(malformed("edge set is disconnected"));
        }
        Ok(RootedTree {
            n,
            root: r,
            parent,
            children,
            vertex_weight: None,
            edge_weight,
            edges: edges.to_vec(),
        })
    }

    /// Builds a tree from a parent array: `parents[v - 1]` is the parent of
    /// `v`, with exactly one entry equal to [`NO_VERTEX`] marking the root.
    pub fn from_parents(parents: &[Vertex]) -> Result<Self> {
        let n = parents.len();
        let roots: Vec<_> = (1..=n).filter(|&v| parents[v - 1] == NO_VERTEX).collect();
        if roots.len() != 1 {
            return Err(malformed(format!("parent array has {} roots", roots.len())));
        }
        let edges: Vec<_> = (1..=n)
            .filter(|&v| parents[v - 1] != NO_VERTEX)
            .map(|v| (parents[v - 1], v))
            .collect();
        let tree = root_at(n, &edges, roots[0])?;
        // BFS keeps the orientation forced by a connected, acyclic parent array.
        debug_assert!((1..=n).all(|v| tree.parent[v] == parents[v - 1]));
        Ok(tree)
    }

    /// Attaches vertex weights (`weights[v - 1]` for vertex `v`).
    pub fn with_vertex_weights(mut self, weights: &[i64]) -> Result<Self> {
        if weights.len() != self.n {
            return Err(invalid(format!(
                "expected {} vertex weights, got {}",
                self.n,
                weights.len()
            )));
        }
        let mut w = vec![0; self.n + 1];
        w[1..].copy_from_slice(weights);
        self.vertex_weight = Some(w);
        Ok(self)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        match self.parent[v] {
            NO_VERTEX => None,
            p => Some(p),
        }
    }

    /// Parent array indexed by vertex; `NO_VERTEX` at the root and slot 0.
    pub fn parents(&self) -> &[Vertex] {
        &self.parent
    }

    pub fn children(&self, v: Vertex) -> &[Vertex] {
        &self.children[v]
    }

    pub fn is_leaf(&self, v: Vertex) -> bool {
        self.children[v].is_empty()
    }

    pub fn vertex_weight(&self, v: Vertex) -> Option<i64> {
        self.vertex_weight.as_ref().map(|w| w[v])
    }

    pub fn has_vertex_weights(&self) -> bool {
        self.vertex_weight.is_some()
    }

    /// Weight of the edge between `v` and its parent, when edge weights are present.
    pub fn parent_edge_weight(&self, v: Vertex) -> Option<i64> {
        if v == self.root {
            return None;
        }
        self.edge_weight.as_ref().map(|w| w[v])
    }

    pub fn has_edge_weights(&self) -> bool {
        self.edge_weight.is_some()
    }

    /// Edges in input order.
    pub fn edges(&self) -> &[(Vertex, Vertex)] {
        &self.edges
    }

    pub fn contains(&self, v: Vertex) -> bool {
        (1..=self.n).contains(&v)
    }

    pub fn is_tree_edge(&self, u: Vertex, v: Vertex) -> bool {
        self.contains(u) && self.contains(v) && (self.parent[u] == v || self.parent[v] == u)
    }

    /// Vertices in DFS preorder, children visited in stored order.
    pub fn preorder(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.n);
        let mut stack = vec![self.root];
        while let Some(u) = stack.pop() {
            order.push(u);
            stack.extend(self.children[u].iter().rev());
        }
        order
    }

    /// Vertices in an order where every vertex follows all its descendants.
    pub fn postorder(&self) -> Vec<Vertex> {
        let mut order = Vec::with_capacity(self.n);
        let mut stack = vec![(self.root, false)];
        while let Some((u, expanded)) = stack.pop() {
            if expanded {
                order.push(u);
            } else {
                stack.push((u, true));
                stack.extend(self.children[u].iter().rev().map(|&c| (c, false)));
            }
        }
        order
    }

    /// Depth of every vertex (root = 0), indexed by vertex.
    pub fn depths(&self) -> Vec<usize> {
        let mut depth = vec![0; self.n + 1];
        for u in self.preorder() {
            for &c in &self.children[u] {
                depth[c] = depth[u] + 1;
            }
        }
        depth
    }

    /// |T(v)| for every vertex, indexed by vertex.
    pub fn subtree_sizes(&self) -> Vec<usize> {
        let mut size = vec![1; self.n + 1];
        size[0] = 0;
        for u in self.postorder() {
            if let Some(p) = self.parent(u) {
                size[p] += size[u];
            }
        }
        size
    }

    /// Undirected adjacency lists indexed by vertex.
    pub fn adjacency(&self) -> Vec<Vec<Vertex>> {
        let mut adj = vec![Vec::new(); self.n + 1];
        for &(u, v) in &self.edges {
            adj[u].push(v);
            adj[v].push(u);
        }
        adj
    }

    /// The same tree rooted at `r`, keeping vertex and edge weights.
    pub fn rerooted(&self, r: Vertex) -> Result<RootedTree> {
        let mut tree = match &self.edge_weight {
            Some(_) => {
                let weighted: Vec<_> = self
                    .edges
                    .iter()
                    .map(|&(u, v)| {
                        let child = if self.parent[v] == u { v } else { u };
                        (u, v, self.edge_weight.as_ref().unwrap()[child])
                    })
                    .collect();
                root_at_weighted(self.n, &weighted, r)?
            }
            None => root_at(self.n, &self.edges, r)?,
        };
        tree.vertex_weight = self.vertex_weight.clone();
        Ok(tree)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn path_rooted_at_end() {
        let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
        assert_eq!(t.parent(2), Some(1));
        assert_eq!(t.parent(3), Some(2));
        assert_eq!(t.parent(1), None);
    }

    #[test]
    fn path_rooted_in_middle() {
        let t = root_at(3, &[(1, 2), (2, 3)], 2).unwrap();
        assert_eq!(t.children(2), &[1, 3]);
    }

    #[test]
    fn duplicate_edge_rejected() {
        let err = root_at(4, &[(1, 2), (1, 3), (3, 4), (1, 2)], 1).unwrap_err();
        assert!(matches!(err, crate::Error::Malformed(_)));
    }

    #[test]
    fn cycle_and_disconnection_rejected() {
        // right edge count, but a triangle plus an isolated vertex
        assert!(root_at(4, &[(1, 2), (2, 3), (3, 1)], 1).is_err());
        assert!(root_at(3, &[(1, 2), (1, 2)], 1).is_err());
        assert!(root_at(2, &[(1, 1)], 1).is_err());
        assert!(root_at(2, &[(1, 2)], 3).is_err());
    }

    #[test]
    fn parents_round_trip() {
        let t = RootedTree::from_parents(&[0, 1, 1, 3]).unwrap();
        assert_eq!(t.root(), 1);
        assert_eq!(t.children(1), &[2, 3]);
        assert_eq!(t.parent(4), Some(3));
        assert_eq!(t.subtree_sizes()[1..], [4, 1, 2, 1]);
        assert_eq!(t.postorder(), vec![2, 4, 3, 1]);
    }

    #[test]
    fn reroot_keeps_edge_weights() {
        let t = root_at_weighted(3, &[(1, 2, 5), (2, 3, 7)], 1).unwrap();
        assert_eq!(t.parent_edge_weight(3), Some(7));
        let r = t.rerooted(3).unwrap();
        assert_eq!(r.parent_edge_weight(2), Some(7));
        assert_eq!(r.parent_edge_weight(1), Some(5));
    }
}
