//! Strict binary trees over an ordered leaf sequence with minimum root
//! height, where an internal node is one taller than its taller child.

use serde::Serialize;

use crate::error::{invalid, Result};
use crate::tree_core::{ActiveLeafTrees, INF};

/// Leaves are nodes `0..n`, internal nodes `n..2n-1`; internal node `n + k`
/// has children `children[k]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BuiltTree {
    pub n_leaves: usize,
    pub children: Vec<(usize, usize)>,
    pub height: Vec<i64>,
    pub root: usize,
}

impl BuiltTree {
    fn leaves(h: &[i64]) -> Self {
        let n = h.len();
        let mut height = Vec::with_capacity(2 * n - 1);
        height.extend_from_slice(h);
        BuiltTree { n_leaves: n, children: Vec::with_capacity(n - 1), height, root: 0 }
    }

    fn join(&mut self, l: usize, r: usize) -> usize {
        let id = self.n_leaves + self.children.len();
        self.children.push((l, r));
        self.height.push(1 + self.height[l].max(self.height[r]));
        id
    }

    pub fn root_height(&self) -> i64 {
        self.height[self.root]
    }

    /// Parent array over all 2n-1 nodes, `None` at the root.
    pub fn parents(&self) -> Vec<Option<usize>> {
        let mut p = vec![None; self.height.len()];
        for (k, &(l, r)) in self.children.iter().enumerate() {
            p[l] = Some(self.n_leaves + k);
            p[r] = Some(self.n_leaves + k);
        }
        p
    }
}

fn validate(h: &[i64]) -> Result<()> {
    if h.is_empty() {
        return Err(invalid("leaf sequence is empty"));
    }
    if h.iter().any(|&x| !(0..=1 << 40).contains(&x)) {
        return Err(invalid("leaf heights must lie in 0..=2^40"));
    }
    Ok(())
}

/// Interval DP over all splits, O(n^3). Reference answer.
pub fn hmin_dp(h: &[i64]) -> Result<i64> {
    validate(h)?;
    let n = h.len();
    let mut t = vec![vec![0i64; n]; n];
    for i in 0..n {
        t[i][i] = h[i];
    }
    for len in 2..=n {
        for i in 0..=n - len {
            let j = i + len - 1;
            t[i][j] = 1 + (i..j).map(|k| t[i][k].max(t[k + 1][j])).min().unwrap();
        }
    }
    Ok(t[0][n - 1])
}

/// Operation counts of the rightmost-path stack, for the amortisation check.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq, Serialize)]
pub struct StackOps {
    pub pushes: usize,
    pub pops: usize,
}

/// Linear-time construction keeping the rightmost path of the current tree
/// as a stack (root at the bottom). For a new leaf, path nodes are dropped
/// from the top while the node above them would grow if the new leaf were
/// hung below them; the surviving top node is then replaced in place by a
/// new node (old top, new leaf) and the leaf is pushed.
pub fn build_linear(h: &[i64]) -> Result<BuiltTree> {
    build_linear_counted(h).map(|(t, _)| t)
}

pub fn build_linear_counted(h: &[i64]) -> Result<(BuiltTree, StackOps)> {
    validate(h)?;
    let n = h.len();
    let mut tree = BuiltTree::leaves(h);
    let mut ops = StackOps::default();
    // (node, height)
    let mut path: Vec<(usize, i64)> = vec![(0, h[0])];
    ops.pushes += 1;
    for leaf in 1..n {
        let hl = h[leaf];
        while path.len() >= 2 {
            let (_, hv_j) = path[path.len() - 1];
            let (_, hv_above) = path[path.len() - 2];
            if hv_above < 2 + hv_j.max(hl) {
                path.pop();
                ops.pops += 1;
            } else {
                break;
            }
        }
        let top = path.len() - 1;
        let (old, _) = path[top];
        let fresh = tree.join(old, leaf);
        if top > 0 {
            // the node above keeps its height: its left subtree dominates
            let above = path[top - 1].0;
            tree.children[above - n].1 = fresh;
            debug_assert_eq!(tree.height[above], 1 + tree.height[tree.children[above - n].0].max(tree.height[fresh]));
        }
        path[top] = (fresh, tree.height[fresh]);
        path.push((leaf, hl));
        ops.pushes += 1;
    }
    tree.root = path[0].0;
    debug_assert!(ops.pushes + ops.pops <= 2 * n);
    Ok((tree, ops))
}

/// Adjacent-merge construction: repeatedly join the two adjacent subtrees
/// whose combined height is smallest (leftmost on ties), using the active
/// leaf trees for O(log n) selection.
pub fn build_mergesim(h: &[i64]) -> Result<BuiltTree> {
    validate(h)?;
    let n = h.len();
    let mut tree = BuiltTree::leaves(h);
    let mut cur: Vec<i64> = h.to_vec();
    let mut node: Vec<usize> = (0..n).collect();
    let mut seg = ActiveLeafTrees::from_heights(h);
    for _ in 1..n {
        let (hc, i) = seg.min_hc();
        debug_assert!(hc < INF);
        let j = seg.next_active(i).expect("a merge candidate has a successor");
        let id = tree.join(node[i - 1], node[j - 1]);
        debug_assert_eq!(tree.height[id], hc);
        node[i - 1] = id;
        seg.deactivate(j);
        cur[i - 1] = hc;
        cur[j - 1] = INF;
        seg.set_hc(j, INF);
        match seg.next_active(i) {
            Some(k) => seg.set_hc(i, 1 + cur[i - 1].max(cur[k - 1])),
            None => seg.set_hc(i, INF),
        }
        // the predecessor's pair height depends on h(i) as well
        if let Some(p) = seg.prev_active(i) {
            seg.set_hc(p, 1 + cur[p - 1].max(cur[i - 1]));
        }
        if cfg!(debug_assertions) && n <= 64 {
            seg.check_invariants(&cur).expect("segment tree aggregates stay consistent");
        }
    }
    tree.root = node[0];
    Ok(tree)
}

/// Strictness, inorder leaf order and the height recurrence.
pub fn check_built(tree: &BuiltTree, h: &[i64]) -> std::result::Result<(), String> {
    let n = h.len();
    if tree.n_leaves != n || tree.children.len() + 1 != n || tree.height.len() != 2 * n - 1 {
        return Err("node counts do not match a strict binary tree over the leaves".into());
    }
    if tree.height[..n] != *h {
        return Err("leaf heights differ from the input".into());
    }
    let mut parent_count = vec![0usize; 2 * n - 1];
    for &(l, r) in &tree.children {
        if l >= 2 * n - 1 || r >= 2 * n - 1 {
            return Err("child index out of range".into());
        }
        parent_count[l] += 1;
        parent_count[r] += 1;
    }
    for v in 0..2 * n - 1 {
        let want = usize::from(v != tree.root);
        if parent_count[v] != want {
            return Err(format!("node {v} has {} parents", parent_count[v]));
        }
    }
    let mut inorder = Vec::with_capacity(n);
    let mut stack = vec![(tree.root, false)];
    let mut visited = 0usize;
    while let Some((v, expanded)) = stack.pop() {
        visited += 1;
        if visited > 4 * n {
            return Err("structure contains a cycle".into());
        }
        if v < n {
            inorder.push(v);
        } else if !expanded {
            let (l, r) = tree.children[v - n];
            stack.extend([(r, false), (v, true), (l, false)]);
        }
    }
    if inorder != (0..n).collect::<Vec<_>>() {
        return Err("inorder traversal does not visit the leaves in input order".into());
    }
    for (k, &(l, r)) in tree.children.iter().enumerate() {
        if tree.height[n + k] != 1 + tree.height[l].max(tree.height[r]) {
            return Err(format!("node {} breaks the height recurrence", n + k));
        }
    }
    Ok(())
}
