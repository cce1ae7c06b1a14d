//! Tree representation and the index structures shared by the tree algorithms:
//! DFS interval numbering, constant-time LCA, a range-add/point-query segment
//! tree and the active-leaf rank/min trees used by the adjacent-merge builder.
//!
//! Vertex ids are 1-based everywhere. Arrays indexed by vertex have length
//! `n + 1` and leave slot 0 unused.

mod active_leaf;
mod add_seg;
mod dfs;
mod lca;
mod rooted;

pub use active_leaf::ActiveLeafTrees;
pub use add_seg::AddSegTree;
pub use dfs::DfsNumbering;
pub use lca::LcaIndex;
pub use rooted::{root_at, root_at_weighted, RootedTree};

/// 1-based vertex id.
pub type Vertex = usize;

/// Sentinel for "no vertex" in parent arrays.
pub const NO_VERTEX: Vertex = 0;

/// Sentinel infinity for height-like quantities. Never used in arithmetic.
pub const INF: i64 = i64::MAX;
