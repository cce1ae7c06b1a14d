use super::{RootedTree, Vertex};

/// Preorder DFS numbers with subtree intervals: T(v) occupies exactly
/// `num(v)..=max(v)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DfsNumbering {
    num: Vec<usize>,
    max: Vec<usize>,
    order: Vec<Vertex>,
}

impl DfsNumbering {
    pub fn new(tree: &RootedTree) -> Self {
        let n = tree.n();
        let order = tree.preorder();
        let mut num = vec![0; n + 1];
        for (i, &v) in order.iter().enumerate() {
            num[v] = i + 1;
        }
        let mut max = num.clone();
        for &v in order.iter().rev() {
            if let Some(p) = tree.parent(v) {
                max[p] = max[p].max(max[v]);
            }
        }
        DfsNumbering { num, max, order }
    }

    pub fn num(&self, v: Vertex) -> usize {
        self.num[v]
    }

    pub fn max(&self, v: Vertex) -> usize {
        self.max[v]
    }

    /// Vertex carrying DFS number `k` (1-based).
    pub fn vertex_at(&self, k: usize) -> Vertex {
        self.order[k - 1]
    }

    /// Whether `u` lies in T(`v`).
    pub fn in_subtree(&self, u: Vertex, v: Vertex) -> bool {
        self.num[v] <= self.num[u] && self.num[u] <= self.max[v]
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tree_core::root_at;

    #[test]
    fn chain() {
        let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
        let d = DfsNumbering::new(&t);
        assert_eq!((1..=3).map(|v| d.num(v)).collect::<Vec<_>>(), [1, 2, 3]);
        assert_eq!((1..=3).map(|v| d.max(v)).collect::<Vec<_>>(), [3, 3, 3]);
    }

    #[test]
    fn single_vertex() {
        let t = root_at(1, &[], 1).unwrap();
        let d = DfsNumbering::new(&t);
        assert_eq!((d.num(1), d.max(1)), (1, 1));
    }

    #[test]
    fn star() {
        let t = root_at(3, &[(1, 2), (1, 3)], 1).unwrap();
        let d = DfsNumbering::new(&t);
        assert_eq!((d.num(1), d.num(2), d.num(3)), (1, 2, 3));
        assert_eq!((d.max(1), d.max(2)), (3, 2));
        assert!(d.in_subtree(3, 1));
        assert!(!d.in_subtree(3, 2));
    }
}
