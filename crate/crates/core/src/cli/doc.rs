//! Instance and result documents (JSON).

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::counting::{ConstraintSet, Mode};
use crate::cycle_completion::ExtraEdge;
use crate::error::{invalid, malformed, Result};
use crate::flownet::{BoundedDigraph, StreamEdge, StreamVertex};
use crate::partitioning::ConnectedPartSpec;
use crate::spanning::WeightedGraph;
use crate::tree_core::{root_at, root_at_weighted, RootedTree};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Kind {
    Tree,
    BoundedDag,
    WeightedGraph,
    LeafSeq,
    CountSpec,
}

/// One document shape for every kind; fields irrelevant to a kind stay
/// absent. Edge entries are `[u, v]` or `[u, v, weight]`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct InstanceDocument {
    pub kind: Kind,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<usize>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub root: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertex_weights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub extra_edges: Option<Vec<[i64; 3]>>,

    // bounded DAG: per-edge arrays parallel to `edges`, per-vertex arrays
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lbe: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ube: Option<Vec<Option<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ce: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub lbv: Option<Vec<u64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub ubv: Option<Vec<Option<u64>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub cv: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sources: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub dests: Option<Vec<usize>>,

    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sz: Option<Vec<usize>>,
    #[serde(default, rename = "Q", skip_serializing_if = "Option::is_none")]
    pub q: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub r: Option<usize>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub heights: Option<Vec<i64>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub p: Option<usize>,
    #[serde(default, rename = "S", skip_serializing_if = "Option::is_none")]
    pub s: Option<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub mode: Option<Mode>,
}

impl InstanceDocument {
    pub fn empty(kind: Kind) -> Self {
        InstanceDocument {
            kind,
            n: None,
            edges: Vec::new(),
            root: None,
            vertex_weights: None,
            extra_edges: None,
            lbe: None,
            ube: None,
            ce: None,
            lbv: None,
            ubv: None,
            cv: None,
            sources: None,
            dests: None,
            sz: None,
            q: None,
            k: None,
            r: None,
            heights: None,
            p: None,
            s: None,
            mode: None,
        }
    }

    /// Parses and reports serde's line/column diagnostics as malformed input.
    pub fn parse(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| malformed(format!("instance document: {e}")))
    }

    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }

    fn expect_kind(&self, want: Kind) -> Result<()> {
        if self.kind != want {
            return Err(invalid(format!("expected a {want:?} instance, got {:?}", self.kind)));
        }
        Ok(())
    }

    fn need_n(&self) -> Result<usize> {
        self.n.ok_or_else(|| invalid("field `n` is required"))
    }

    fn vertex(&self, x: i64, field: &str) -> Result<usize> {
        usize::try_from(x).map_err(|_| invalid(format!("`{field}` holds a negative vertex id {x}")))
    }

    fn pairs(&self) -> Result<Vec<(usize, usize)>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| match e.as_slice() {
                [u, v] | [u, v, _] => Ok((self.vertex(*u, "edges")?, self.vertex(*v, "edges")?)),
                _ => Err(invalid(format!("edges[{i}] must have 2 or 3 entries"))),
            })
            .collect()
    }

    fn triples(&self) -> Result<Vec<(usize, usize, i64)>> {
        self.edges
            .iter()
            .enumerate()
            .map(|(i, e)| match e.as_slice() {
                [u, v, w] => Ok((self.vertex(*u, "edges")?, self.vertex(*v, "edges")?, *w)),
                _ => Err(invalid(format!("edges[{i}] must be [u, v, weight]"))),
            })
            .collect()
    }

    /// Rooted tree, with edge weights if every edge carries one.
    pub fn tree(&self) -> Result<RootedTree> {
        self.expect_kind(Kind::Tree)?;
        let n = self.need_n()?;
        let r = self.root.unwrap_or(1);
        let weighted = !self.edges.is_empty() && self.edges.iter().all(|e| e.len() == 3);
        let tree = if weighted { root_at_weighted(n, &self.triples()?, r)? } else { root_at(n, &self.pairs()?, r)? };
        match &self.vertex_weights {
            Some(w) => tree.with_vertex_weights(w),
            None => Ok(tree),
        }
    }

    pub fn extras(&self) -> Result<Vec<ExtraEdge>> {
        let raw = self.extra_edges.as_ref().ok_or_else(|| invalid("field `extra_edges` is required"))?;
        raw.iter()
            .map(|&[u, v, w]| Ok(ExtraEdge::new(self.vertex(u, "extra_edges")?, self.vertex(v, "extra_edges")?, w)))
            .collect()
    }

    pub fn part_spec(&self, tree: &RootedTree) -> Result<ConnectedPartSpec> {
        let n = tree.n();
        Ok(ConnectedPartSpec {
            sz: self.sz.clone().ok_or_else(|| invalid("field `sz` is required"))?,
            cv: self.cv.clone().unwrap_or_else(|| vec![0; n]),
            ce: self.ce.clone().unwrap_or_else(|| vec![0; n.saturating_sub(1)]),
        })
    }

    pub fn digraph(&self) -> Result<BoundedDigraph> {
        self.expect_kind(Kind::BoundedDag)?;
        let n = self.need_n()?;
        let pairs = self.pairs()?;
        let m = pairs.len();
        let arr = |name: &str, len: usize, got: Option<usize>| -> Result<()> {
            match got {
                Some(l) if l != len => Err(invalid(format!("`{name}` has {l} entries, expected {len}"))),
                _ => Ok(()),
            }
        };
        arr("lbe", m, self.lbe.as_ref().map(Vec::len))?;
        arr("ube", m, self.ube.as_ref().map(Vec::len))?;
        arr("ce", m, self.ce.as_ref().map(Vec::len))?;
        arr("lbv", n, self.lbv.as_ref().map(Vec::len))?;
        arr("ubv", n, self.ubv.as_ref().map(Vec::len))?;
        arr("cv", n, self.cv.as_ref().map(Vec::len))?;
        let flag = |list: &Option<Vec<usize>>, name: &str| -> Result<Vec<bool>> {
            let mut f = vec![false; n + 1];
            for &v in list.as_deref().unwrap_or_default() {
                if !(1..=n).contains(&v) {
                    return Err(invalid(format!("`{name}` lists unknown vertex {v}")));
                }
                f[v] = true;
            }
            Ok(f)
        };
        let src = flag(&self.sources, "sources")?;
        let dst = flag(&self.dests, "dests")?;
        let vertices = (0..n)
            .map(|i| StreamVertex {
                lbv: self.lbv.as_ref().map_or(0, |a| a[i]),
                ubv: self.ubv.as_ref().and_then(|a| a[i]),
                cv: self.cv.as_ref().map_or(0, |a| a[i]),
                is_source: src[i + 1],
                is_dest: dst[i + 1],
            })
            .collect();
        let edges = pairs
            .iter()
            .enumerate()
            .map(|(i, &(from, to))| StreamEdge {
                from,
                to,
                lbe: self.lbe.as_ref().map_or(0, |a| a[i]),
                ube: self.ube.as_ref().and_then(|a| a[i]),
                ce: self.ce.as_ref().map_or(0, |a| a[i]),
            })
            .collect();
        BoundedDigraph::new(vertices, edges)
    }

    pub fn graph(&self) -> Result<WeightedGraph> {
        self.expect_kind(Kind::WeightedGraph)?;
        WeightedGraph::new(self.need_n()?, self.triples()?)
    }

    pub fn leaf_heights(&self) -> Result<Vec<i64>> {
        self.expect_kind(Kind::LeafSeq)?;
        self.heights.clone().ok_or_else(|| invalid("field `heights` is required"))
    }

    pub fn constraint(&self, n: usize) -> Result<ConstraintSet> {
        let mode = self.mode.unwrap_or(Mode::Sons);
        match &self.s {
            Some(s) => ConstraintSet::new(n, s, mode),
            None => Ok(ConstraintSet::unconstrained(n, mode)),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Ok,
    Infeasible,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Ok => 0,
            Status::Infeasible => 2,
            Status::Error => 1,
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct ResultDocument {
    pub status: Status,
    pub algorithm: String,
    #[serde(skip_serializing_if = "Value::is_null")]
    pub result: Value,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub error: Option<String>,
    pub elapsed_ms: f64,
}

impl ResultDocument {
    pub fn to_text(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("documents serialize");
        s.push('\n');
        s
    }
}
