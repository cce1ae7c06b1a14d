//! Command-line front end. `main.rs` only forwards to [`run`].

pub mod doc;

use std::ffi::OsString;
use std::io::{Read, Write};
use std::path::PathBuf;
use std::time::Instant;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use crate::coloring::grundy_all;
use crate::counting::{labeled_trees_with_leaves, unlabeled_constrained, unlabeled_constrained_slow, ConstraintSet, Mode};
use crate::cycle_completion::{
    check_cycle_cover, greedy_unit_any_pair, solve_fast, solve_minimax, solve_quadratic, CycleCompletionResult,
    ExtraEdge,
};
use crate::error::{invalid, Error, Result};
use crate::flownet::{check_stream_plan, min_path_cover, min_streams, StreamPlan};
use crate::matching::{check_extended_matching, check_power_matching, extended_tree_max_weight_matching, power_matching};
use crate::partitioning::{
    assignment_cost, check_bounded, check_connected_parts, partition_bounded, partition_connected, K_MAX,
};
use crate::spanning::{check_spanning_tree, dcmst, DcmstResult};
use crate::treebuild::{build_linear, build_mergesim, check_built, hmin_dp, BuiltTree};
use crate::{gen, oracles};
use doc::{InstanceDocument, Kind, ResultDocument, Status};

#[derive(Parser, Debug)]
#[command(name = "treetopo", version, about = "Optimization algorithms on trees and tree-like networks")]
pub struct Cli {
    /// Instance document; `-` or absent reads stdin.
    #[arg(short, long, global = true)]
    input: Option<PathBuf>,
    /// Result document; absent writes stdout.
    #[arg(short, long, global = true)]
    output: Option<PathBuf>,
    /// Lower the vertex-count cap of oracle runs (refused above the hard cap).
    #[arg(long, global = true)]
    limit_n: Option<usize>,
    /// Lower the part-count cap of connected partitioning (refused above the hard cap).
    #[arg(long, global = true)]
    limit_k: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
struct CycleAlg {
    #[arg(long)]
    fast: bool,
    #[arg(long)]
    quadratic: bool,
    #[arg(long)]
    greedy_unit: bool,
    #[arg(long)]
    minimax: bool,
}

#[derive(Args, Debug, Default)]
#[group(multiple = false)]
struct HeightAlg {
    #[arg(long)]
    linear: bool,
    #[arg(long)]
    mergesim: bool,
    #[arg(long)]
    dp: bool,
}

#[derive(Args, Debug, Default, Clone)]
struct CountArgs {
    #[arg(long)]
    n: Option<usize>,
    #[arg(long)]
    p: Option<usize>,
    /// Comma-separated allowed degrees or son counts.
    #[arg(long = "S", value_delimiter = ',')]
    s: Option<Vec<usize>>,
    #[arg(long, value_enum)]
    mode: Option<ModeArg>,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum ModeArg {
    Degree,
    Sons,
}

impl From<ModeArg> for Mode {
    fn from(m: ModeArg) -> Self {
        match m {
            ModeArg::Degree => Mode::Degree,
            ModeArg::Sons => Mode::Sons,
        }
    }
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Add extra edges so every vertex lies on exactly one cycle.
    CycleComplete(#[command(flatten)] CycleAlg),
    /// Split a tree into connected parts of size between Q and 3Q-3.
    PartitionBounded {
        #[arg(long = "Q")]
        q: Option<usize>,
    },
    /// Minimum-cost choice of connected parts with prescribed sizes.
    PartitionConnected,
    /// Fewest source-to-destination paths meeting all bounds, then least cost.
    MinStreams,
    /// Minimum vertex-disjoint path cover of a DAG.
    PathCover,
    /// Minimum spanning tree with a prescribed degree at one vertex.
    Dcmst {
        #[arg(long)]
        r: Option<usize>,
        #[arg(long)]
        k: Option<usize>,
    },
    /// Maximum-weight matching over tree edges and sibling pairs.
    MatchExtended,
    /// Maximum matching in a power of the tree.
    MatchPower {
        #[arg(long)]
        k: Option<usize>,
        /// Take a weighted-graph document and match in the power of its BFS tree from vertex 1.
        #[arg(long)]
        bfs_tree: bool,
    },
    /// Worst-case first-fit coloring.
    Grundy,
    /// Strict binary tree of minimum root height over a leaf sequence.
    BuildMinHeight(#[command(flatten)] HeightAlg),
    /// Labeled trees on n vertices with exactly p leaves.
    CountLabeledLeaves(#[command(flatten)] CountArgs),
    /// Unlabeled rooted trees with degree or son-count constraints.
    CountConstrained {
        #[command(flatten)]
        args: CountArgs,
        #[arg(long)]
        slow: bool,
    },
    /// Run the exhaustive reference solver for a problem.
    Oracle { name: Problem },
    /// Run the main algorithm and the reference solver and compare.
    Check {
        name: Problem,
        /// Deliberately corrupt the main answer (harness self-test).
        #[arg(long, hide = true)]
        perturb: bool,
    },
    /// Write a random instance document.
    Gen(GenArgs),
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq)]
pub enum Problem {
    CycleComplete,
    Minimax,
    GreedyUnit,
    PartitionConnected,
    Grundy,
    MatchExtended,
    MatchPower,
    MinStreams,
    Dcmst,
    BuildMinHeight,
    CountLabeledLeaves,
    CountConstrained,
}

#[derive(ValueEnum, Clone, Copy, Debug)]
enum GenKind {
    Tree,
    Dag,
    Graph,
    LeafSeq,
}

#[derive(Args, Debug)]
struct GenArgs {
    kind: GenKind,
    #[arg(long)]
    n: usize,
    #[arg(long)]
    seed: u64,
    /// Extra edges (tree, graph) or edges (dag).
    #[arg(long, default_value_t = 0)]
    m: usize,
    #[arg(long, default_value_t = 10)]
    wmax: i64,
    /// Attach vertex weights in 0..=wmax to a generated tree.
    #[arg(long)]
    vertex_weights: bool,
    #[arg(long, default_value_t = 2)]
    bmax: u64,
    #[arg(long, default_value_t = 5)]
    hmax: i64,
}

struct Outcome {
    status: Status,
    result: Value,
}

fn ok(result: Value) -> Outcome {
    Outcome { status: Status::Ok, result }
}

fn feasible_if(flag: bool, result: Value) -> Outcome {
    Outcome { status: if flag { Status::Ok } else { Status::Infeasible }, result }
}

fn witness(check: std::result::Result<(), String>) -> Result<()> {
    check.map_err(|e| Error::Contract(format!("witness failed validation: {e}")))
}

/// Parses `args`, runs the command and returns the process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(c) => c,
        Err(e) => {
            let _ = e.print();
            return if e.use_stderr() { 1 } else { 0 };
        }
    };
    if let Command::Gen(g) = &cli.command {
        return match generate(g) {
            Ok(d) => match emit(&cli.output, &d.to_text()) {
                Ok(()) => 0,
                Err(e) => report(&e),
            },
            Err(e) => report(&e),
        };
    }
    let start = Instant::now();
    let name = algorithm_name(&cli.command);
    let (status, result, error) = match dispatch(&cli) {
        Ok(o) => (o.status, o.result, None),
        Err(e) => {
            eprintln!("error: {e}");
            (Status::Error, Value::Null, Some(e.to_string()))
        }
    };
    let doc = ResultDocument { status, algorithm: name, result, error, elapsed_ms: start.elapsed().as_secs_f64() * 1e3 };
    match emit(&cli.output, &doc.to_text()) {
        Ok(()) => status.exit_code(),
        Err(e) => report(&e),
    }
}

fn report(e: &Error) -> i32 {
    eprintln!("error: {e}");
    1
}

fn emit(path: &Option<PathBuf>, text: &str) -> Result<()> {
    let io = |e: std::io::Error| invalid(format!("cannot write output: {e}"));
    match path {
        Some(p) => std::fs::write(p, text).map_err(io),
        None => std::io::stdout().write_all(text.as_bytes()).map_err(io),
    }
}

fn algorithm_name(c: &Command) -> String {
    let base = match c {
        Command::CycleComplete(a) => match (a.quadratic, a.greedy_unit, a.minimax) {
            (true, _, _) => "cycle-complete/quadratic",
            (_, true, _) => "cycle-complete/greedy-unit",
            (_, _, true) => "cycle-complete/minimax",
            _ => "cycle-complete/fast",
        },
        Command::PartitionBounded { .. } => "partition-bounded",
        Command::PartitionConnected => "partition-connected",
        Command::MinStreams => "min-streams",
        Command::PathCover => "path-cover",
        Command::Dcmst { .. } => "dcmst",
        Command::MatchExtended => "match-extended",
        Command::MatchPower { .. } => "match-power",
        Command::Grundy => "grundy",
        Command::BuildMinHeight(a) => match (a.mergesim, a.dp) {
            (true, _) => "build-min-height/mergesim",
            (_, true) => "build-min-height/dp",
            _ => "build-min-height/linear",
        },
        Command::CountLabeledLeaves(_) => "count-labeled-leaves",
        Command::CountConstrained { slow: true, .. } => "count-constrained/slow",
        Command::CountConstrained { .. } => "count-constrained",
        Command::Oracle { name } => return format!("oracle/{}", problem_name(*name)),
        Command::Check { name, .. } => return format!("check/{}", problem_name(*name)),
        Command::Gen(_) => "gen",
    };
    base.to_string()
}

fn problem_name(p: Problem) -> String {
    p.to_possible_value().map(|v| v.get_name().to_string()).unwrap_or_default()
}

fn read_doc(input: &Option<PathBuf>) -> Result<InstanceDocument> {
    let text = match input.as_deref() {
        Some(p) if p.as_os_str() != "-" => {
            std::fs::read_to_string(p).map_err(|e| invalid(format!("cannot read {}: {e}", p.display())))?
        }
        _ => {
            let mut s = String::new();
            std::io::stdin().read_to_string(&mut s).map_err(|e| invalid(format!("cannot read stdin: {e}")))?;
            s
        }
    };
    InstanceDocument::parse(&text)
}

fn dispatch(cli: &Cli) -> Result<Outcome> {
    if let Some(k) = cli.limit_k {
        if k > K_MAX {
            return Err(invalid(format!("--limit-k {k} is above the hard cap {K_MAX}")));
        }
    }
    match &cli.command {
        Command::CountLabeledLeaves(a) => {
            let a = merge_count_args(cli, a)?;
            let n = a.n.ok_or_else(|| invalid("count-labeled-leaves needs n"))?;
            let p = a.p.ok_or_else(|| invalid("count-labeled-leaves needs p"))?;
            Ok(ok(json!({ "n": n, "p": p, "count": labeled_trees_with_leaves(n, p)?.to_string() })))
        }
        Command::CountConstrained { args, slow } => {
            let a = merge_count_args(cli, args)?;
            let n = a.n.ok_or_else(|| invalid("count-constrained needs n"))?;
            let cs = constraint_from(&a, n)?;
            let count = if *slow { unlabeled_constrained_slow(n, &cs)? } else { unlabeled_constrained(n, &cs)? };
            Ok(ok(json!({ "n": n, "count": count.to_string() })))
        }
        Command::Oracle { name } => run_oracle(cli, *name, &read_doc(&cli.input)?).map(|(st, v)| Outcome { status: st, result: v }),
        Command::Check { name, perturb } => run_check(cli, *name, *perturb),
        Command::Gen(_) => unreachable!("handled before dispatch"),
        cmd => solve(cli, cmd, &read_doc(&cli.input)?),
    }
}

/// Flags win over fields of an optional count-spec document.
fn merge_count_args(cli: &Cli, a: &CountArgs) -> Result<CountArgs> {
    let mut out = a.clone();
    if cli.input.is_some() {
        let d = read_doc(&cli.input)?;
        if d.kind != Kind::CountSpec {
            return Err(invalid("counting commands take a count-spec document"));
        }
        out.n = out.n.or(d.n);
        out.p = out.p.or(d.p);
        out.s = out.s.or(d.s.clone());
        out.mode = out.mode.or(d.mode.map(|m| match m {
            Mode::Degree => ModeArg::Degree,
            Mode::Sons => ModeArg::Sons,
        }));
    }
    Ok(out)
}

fn constraint_from(a: &CountArgs, n: usize) -> Result<ConstraintSet> {
    let mode = a.mode.map_or(Mode::Sons, Mode::from);
    match &a.s {
        Some(s) => ConstraintSet::new(n, s, mode),
        None => Ok(ConstraintSet::unconstrained(n, mode)),
    }
}

fn cycle_json(r: &CycleCompletionResult) -> Value {
    json!({
        "feasible": r.feasible,
        "total_weight": r.feasible.then_some(r.total_weight),
        "chosen_edges": edge_list(&r.chosen_edges),
    })
}

fn edge_list(e: &[ExtraEdge]) -> Vec<[i64; 3]> {
    e.iter().map(|e| [e.u as i64, e.v as i64, e.w]).collect()
}

fn stream_json(p: &StreamPlan) -> Value {
    json!({ "p": p.p, "cost_S": p.cost_s, "paths": p.paths })
}

fn dcmst_json(r: &DcmstResult) -> Value {
    json!({
        "feasible": r.feasible,
        "total_weight": r.feasible.then_some(r.total_weight),
        "degree_r": r.degree_r,
        "edges": r.edges.iter().map(|&(u, v, w)| [u as i64, v as i64, w]).collect::<Vec<_>>(),
        "diagnostic": r.diagnostic,
    })
}

fn built_json(t: &BuiltTree) -> Value {
    json!({ "height": t.root_height(), "parents": t.parents(), "children": t.children })
}

fn solve(cli: &Cli, cmd: &Command, d: &InstanceDocument) -> Result<Outcome> {
    match cmd {
        Command::CycleComplete(a) => {
            let tree = d.tree()?;
            if a.greedy_unit {
                let r = greedy_unit_any_pair(&tree);
                if r.feasible {
                    witness(check_cycle_cover(&tree, &r.chosen_edges))?;
                }
                return Ok(feasible_if(r.feasible, cycle_json(&r)));
            }
            let extras = d.extras()?;
            if a.minimax {
                let r = solve_minimax(&tree, &extras)?;
                if r.feasible {
                    witness(check_cycle_cover(&tree, &r.chosen_edges))?;
                }
                let v = json!({ "feasible": r.feasible, "w_max": r.w_max, "chosen_edges": edge_list(&r.chosen_edges) });
                return Ok(feasible_if(r.feasible, v));
            }
            let r = if a.quadratic { solve_quadratic(&tree, &extras)? } else { solve_fast(&tree, &extras)? };
            if r.feasible {
                witness(check_cycle_cover(&tree, &r.chosen_edges))?;
            }
            Ok(feasible_if(r.feasible, cycle_json(&r)))
        }
        Command::PartitionBounded { q } => {
            let tree = d.tree()?;
            let q = q.or(d.q).ok_or_else(|| invalid("partition-bounded needs Q"))?;
            Ok(match partition_bounded(&tree, q)? {
                Some(p) => {
                    witness(check_bounded(&tree, q, &p))?;
                    ok(json!({
                        "part_count": p.part_count,
                        "sizes": p.sizes(),
                        "part": &p.part[1..],
                        "representative": &p.representative[1..],
                    }))
                }
                None => feasible_if(false, json!({ "reason": "fewer than Q vertices" })),
            })
        }
        Command::PartitionConnected => {
            let tree = d.tree()?;
            let spec = d.part_spec(&tree)?;
            if let Some(k) = cli.limit_k {
                if spec.sz.len() > k {
                    return Err(Error::ResourceLimit(format!("{} parts exceed --limit-k {k}", spec.sz.len())));
                }
            }
            let r = partition_connected(&tree, &spec)?;
            if r.feasible {
                witness(check_connected_parts(&tree, &spec, &r.assignment))?;
                if assignment_cost(&tree, &spec, &r.assignment) != r.min_cost {
                    return Err(Error::Contract("assignment cost differs from the reported optimum".into()));
                }
            }
            Ok(feasible_if(r.feasible, json!({ "feasible": r.feasible, "min_cost": r.min_cost, "assignment": &r.assignment[1..] })))
        }
        Command::MinStreams => {
            let g = d.digraph()?;
            Ok(match min_streams(&g) {
                Some(plan) => {
                    witness(check_stream_plan(&g, &plan))?;
                    ok(stream_json(&plan))
                }
                None => feasible_if(false, json!({ "feasible": false })),
            })
        }
        Command::PathCover => {
            if d.kind != Kind::BoundedDag {
                return Err(invalid("path-cover takes a bounded-dag document"));
            }
            let n = d.n.ok_or_else(|| invalid("field `n` is required"))?;
            let edges: Vec<(usize, usize)> = d.digraph()?.edges.iter().map(|e| (e.from, e.to)).collect();
            let pc = min_path_cover(n, &edges)?;
            witness(check_path_cover(n, &edges, &pc.paths))?;
            Ok(ok(json!({ "p": pc.p, "matching_size": pc.matching_size, "paths": pc.paths })))
        }
        Command::Dcmst { r, k } => {
            let g = d.graph()?;
            let r = r.or(d.r).ok_or_else(|| invalid("dcmst needs r"))?;
            let k = k.or(d.k).ok_or_else(|| invalid("dcmst needs k"))?;
            let res = dcmst(&g, r, k)?;
            if res.feasible {
                witness(check_spanning_tree(&g, r, &res))?;
            }
            Ok(feasible_if(res.feasible, dcmst_json(&res)))
        }
        Command::MatchExtended => {
            let tree = d.tree()?;
            let m = extended_tree_max_weight_matching(&tree)?;
            witness(check_extended_matching(&tree, &m))?;
            Ok(ok(json!({ "weight": m.weight, "edges": m.edges })))
        }
        Command::MatchPower { k, bfs_tree } => {
            let tree = if *bfs_tree { bfs_spanning_tree(&d.graph()?)? } else { d.tree()? };
            let m = power_matching(&tree, k.or(d.k).unwrap_or(2))?;
            witness(check_power_matching(&tree, &m))?;
            Ok(ok(json!({ "size": m.edges.len(), "edges": m.edges })))
        }
        Command::Grundy => {
            let tree = d.tree()?;
            let g = grundy_all(&tree);
            Ok(ok(json!({ "grundy": g.grundy, "cmax": &g.cmax[1..], "c1": &g.c1[1..] })))
        }
        Command::BuildMinHeight(a) => {
            let h = d.leaf_heights()?;
            if a.dp {
                return Ok(ok(json!({ "height": hmin_dp(&h)? })));
            }
            let t = if a.mergesim { build_mergesim(&h)? } else { build_linear(&h)? };
            witness(check_built(&t, &h))?;
            Ok(ok(built_json(&t)))
        }
        _ => unreachable!("non-solver commands are dispatched elsewhere"),
    }
}

/// Spanning tree of a connected graph by breadth-first search from 1.
fn bfs_spanning_tree(g: &crate::spanning::WeightedGraph) -> Result<crate::tree_core::RootedTree> {
    let mut adj = vec![Vec::new(); g.n + 1];
    for &(u, v, _) in &g.edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut seen = vec![false; g.n + 1];
    let mut queue = std::collections::VecDeque::from([1]);
    seen[1] = true;
    let mut edges = Vec::with_capacity(g.n - 1);
    while let Some(u) = queue.pop_front() {
        for &v in &adj[u] {
            if !seen[v] {
                seen[v] = true;
                edges.push((u, v));
                queue.push_back(v);
            }
        }
    }
    crate::tree_core::root_at(g.n, &edges, 1)
}

fn check_path_cover(n: usize, edges: &[(usize, usize)], paths: &[Vec<usize>]) -> std::result::Result<(), String> {
    let mut seen = vec![false; n + 1];
    let set: std::collections::HashSet<(usize, usize)> = edges.iter().copied().collect();
    for p in paths {
        for &v in p {
            if !(1..=n).contains(&v) || std::mem::replace(&mut seen[v], true) {
                return Err(format!("vertex {v} is unknown or covered twice"));
            }
        }
        if let Some(w) = p.windows(2).find(|w| !set.contains(&(w[0], w[1]))) {
            return Err(format!("({},{}) is not an edge", w[0], w[1]));
        }
    }
    match (1..=n).find(|&v| !seen[v]) {
        Some(v) => Err(format!("vertex {v} is not covered")),
        None => Ok(()),
    }
}

/// Largest instance size each oracle accepts.
pub fn oracle_cap(p: Problem) -> usize {
    match p {
        Problem::CycleComplete | Problem::Minimax => oracles::CYCLE_M_MAX,
        Problem::GreedyUnit => oracles::UNIT_N_MAX,
        Problem::PartitionConnected => oracles::PARTITION_N_MAX,
        Problem::Grundy => oracles::GRUNDY_N_MAX,
        Problem::MatchExtended | Problem::MatchPower => oracles::MATCHING_N_MAX,
        Problem::MinStreams => oracles::STREAM_N_MAX,
        Problem::Dcmst => oracles::SPANNING_N_MAX,
        Problem::BuildMinHeight => oracles::HEIGHT_N_MAX,
        Problem::CountLabeledLeaves => oracles::LABELED_N_MAX,
        Problem::CountConstrained => oracles::UNLABELED_N_MAX,
    }
}

fn instance_size(p: Problem, d: &InstanceDocument) -> usize {
    match p {
        Problem::CycleComplete | Problem::Minimax => d.extra_edges.as_ref().map_or(0, Vec::len),
        Problem::BuildMinHeight => d.heights.as_ref().map_or(0, Vec::len),
        _ => d.n.unwrap_or(0),
    }
}

fn guard_limits(cli: &Cli, p: Problem, d: &InstanceDocument) -> Result<()> {
    let cap = oracle_cap(p);
    let limit = match cli.limit_n {
        Some(l) if l > cap => return Err(invalid(format!("--limit-n {l} is above the hard cap {cap} of this oracle"))),
        Some(l) => l,
        None => cap,
    };
    let size = instance_size(p, d);
    if size > limit {
        return Err(Error::ResourceLimit(format!(
            "instance size {size} exceeds the oracle limit {limit}; shrink the instance or run the main algorithm alone"
        )));
    }
    Ok(())
}

fn count_doc(d: &InstanceDocument) -> Result<(usize, Option<usize>, ConstraintSet)> {
    if d.kind != Kind::CountSpec {
        return Err(invalid("expected a count-spec document"));
    }
    let n = d.n.ok_or_else(|| invalid("field `n` is required"))?;
    Ok((n, d.p, d.constraint(n)?))
}

fn run_oracle(cli: &Cli, p: Problem, d: &InstanceDocument) -> Result<(Status, Value)> {
    guard_limits(cli, p, d)?;
    let st = |f: bool| if f { Status::Ok } else { Status::Infeasible };
    Ok(match p {
        Problem::CycleComplete => {
            let r = oracles::brute_cycle_completion(&d.tree()?, &d.extras()?)?;
            (st(r.feasible), cycle_json(&r))
        }
        Problem::Minimax => {
            let r = oracles::brute_minimax(&d.tree()?, &d.extras()?)?;
            (st(r.feasible), json!({ "feasible": r.feasible, "w_max": r.w_max, "chosen_edges": edge_list(&r.chosen_edges) }))
        }
        Problem::GreedyUnit => {
            let r = oracles::brute_unit_any_pair(&d.tree()?)?;
            (st(r.feasible), cycle_json(&r))
        }
        Problem::PartitionConnected => {
            let tree = d.tree()?;
            let r = oracles::brute_connected_partition(&tree, &d.part_spec(&tree)?)?;
            (st(r.feasible), json!({ "feasible": r.feasible, "min_cost": r.min_cost, "assignment": &r.assignment[1..] }))
        }
        Problem::Grundy => (Status::Ok, json!({ "grundy": oracles::brute_grundy(&d.tree()?.adjacency())? })),
        Problem::MatchExtended => {
            let tree = d.tree()?;
            if !tree.has_vertex_weights() {
                return Err(invalid("extended-tree matching needs vertex weights"));
            }
            let w = oracles::brute_max_weight_matching(tree.n(), &oracles::extended_tree_edges(&tree))?;
            (Status::Ok, json!({ "weight": w }))
        }
        Problem::MatchPower => {
            let tree = d.tree()?;
            let k = d.k.unwrap_or(2);
            let size = oracles::brute_max_weight_matching(tree.n(), &oracles::tree_power_edges(&tree, k))?;
            (Status::Ok, json!({ "size": size }))
        }
        Problem::MinStreams => match oracles::brute_min_streams(&d.digraph()?)? {
            Some(plan) => (Status::Ok, stream_json(&plan)),
            None => (Status::Infeasible, json!({ "feasible": false })),
        },
        Problem::Dcmst => {
            let (r, k) = (d.r.ok_or_else(|| invalid("field `r` is required"))?, d.k.ok_or_else(|| invalid("field `k` is required"))?);
            let res = oracles::brute_spanning_trees(&d.graph()?, r, k)?;
            (st(res.feasible), dcmst_json(&res))
        }
        Problem::BuildMinHeight => (Status::Ok, json!({ "height": oracles::brute_min_height(&d.leaf_heights()?)? })),
        Problem::CountLabeledLeaves => {
            let (n, p, _) = count_doc(d)?;
            let p = p.ok_or_else(|| invalid("field `p` is required"))?;
            let h = oracles::brute_labeled_leaf_histogram(n)?;
            let c = h.get(p).copied().ok_or_else(|| invalid("need 1 <= p <= n"))?;
            (Status::Ok, json!({ "n": n, "p": p, "count": c.to_string() }))
        }
        Problem::CountConstrained => {
            let (n, _, cs) = count_doc(d)?;
            (Status::Ok, json!({ "n": n, "count": oracles::brute_unlabeled_constrained(n, &cs)?.to_string() }))
        }
    })
}

/// The main algorithm's answer reduced to what the oracle also reports.
fn main_summary(p: Problem, d: &InstanceDocument) -> Result<Value> {
    let tree = || d.tree();
    Ok(match p {
        Problem::CycleComplete => {
            let t = tree()?;
            let ex = d.extras()?;
            let (a, b) = (solve_fast(&t, &ex)?, solve_quadratic(&t, &ex)?);
            if (a.feasible, a.total_weight) != (b.feasible, b.total_weight) {
                return Err(Error::Contract("fast and quadratic solvers disagree".into()));
            }
            json!({ "feasible": a.feasible, "total_weight": a.feasible.then_some(a.total_weight) })
        }
        Problem::Minimax => {
            let r = solve_minimax(&tree()?, &d.extras()?)?;
            json!({ "feasible": r.feasible, "w_max": r.w_max })
        }
        Problem::GreedyUnit => {
            let r = greedy_unit_any_pair(&tree()?);
            json!({ "feasible": r.feasible, "total_weight": r.feasible.then_some(r.total_weight) })
        }
        Problem::PartitionConnected => {
            let t = tree()?;
            let r = partition_connected(&t, &d.part_spec(&t)?)?;
            json!({ "feasible": r.feasible, "min_cost": r.feasible.then_some(r.min_cost) })
        }
        Problem::Grundy => json!({ "grundy": grundy_all(&tree()?).grundy }),
        Problem::MatchExtended => json!({ "weight": extended_tree_max_weight_matching(&tree()?)?.weight }),
        Problem::MatchPower => json!({ "size": power_matching(&tree()?, d.k.unwrap_or(2))?.edges.len() }),
        Problem::MinStreams => match min_streams(&d.digraph()?) {
            Some(plan) => json!({ "p": plan.p, "cost_S": plan.cost_s }),
            None => json!({ "feasible": false }),
        },
        Problem::Dcmst => {
            let r = dcmst(&d.graph()?, d.r.unwrap_or(0), d.k.unwrap_or(0))?;
            json!({ "feasible": r.feasible, "total_weight": r.feasible.then_some(r.total_weight) })
        }
        Problem::BuildMinHeight => {
            let h = d.leaf_heights()?;
            json!({ "linear": build_linear(&h)?.root_height(), "mergesim": build_mergesim(&h)?.root_height() })
        }
        Problem::CountLabeledLeaves => {
            let (n, p, _) = count_doc(d)?;
            json!({ "count": labeled_trees_with_leaves(n, p.unwrap_or(0))?.to_string() })
        }
        Problem::CountConstrained => {
            let (n, _, cs) = count_doc(d)?;
            json!({ "count": unlabeled_constrained(n, &cs)?.to_string() })
        }
    })
}

/// The oracle's answer in the same shape as [`main_summary`].
fn oracle_summary(p: Problem, full: &Value) -> Value {
    let pick = |keys: &[&str]| {
        Value::Object(keys.iter().map(|&k| (k.to_string(), full.get(k).cloned().unwrap_or(Value::Null))).collect())
    };
    match p {
        Problem::CycleComplete | Problem::GreedyUnit | Problem::Dcmst => pick(&["feasible", "total_weight"]),
        Problem::Minimax => pick(&["feasible", "w_max"]),
        Problem::PartitionConnected => {
            let feasible = full["feasible"].as_bool().unwrap_or(false);
            json!({ "feasible": feasible, "min_cost": if feasible { full["min_cost"].clone() } else { Value::Null } })
        }
        Problem::Grundy => pick(&["grundy"]),
        Problem::MatchExtended => pick(&["weight"]),
        Problem::MatchPower => pick(&["size"]),
        Problem::MinStreams if full.get("feasible").is_some() => json!({ "feasible": false }),
        Problem::MinStreams => pick(&["p", "cost_S"]),
        Problem::BuildMinHeight => json!({ "linear": full["height"], "mergesim": full["height"] }),
        Problem::CountLabeledLeaves | Problem::CountConstrained => pick(&["count"]),
    }
}

fn run_check(cli: &Cli, p: Problem, perturb: bool) -> Result<Outcome> {
    let d = read_doc(&cli.input)?;
    let (_, full) = run_oracle(cli, p, &d)?;
    let want = oracle_summary(p, &full);
    let mut got = main_summary(p, &d)?;
    if perturb {
        got = json!({ "perturbed": got });
    }
    let agree = got == want;
    Ok(ok(json!({ "verdict": if agree { "agree" } else { "disagree" }, "main": got, "oracle": want })))
}

fn generate(g: &GenArgs) -> Result<InstanceDocument> {
    let mut rng = gen::rng(g.seed);
    let n = g.n;
    if n == 0 {
        return Err(invalid("--n must be at least 1"));
    }
    if g.wmax < 1 || g.hmax < 0 {
        return Err(invalid("--wmax must be positive and --hmax nonnegative"));
    }
    let mut d;
    match g.kind {
        GenKind::Tree => {
            d = InstanceDocument::empty(Kind::Tree);
            let edges = gen::random_tree(n, &mut rng);
            if g.m > 0 {
                let ex = gen::random_extras(n, &edges, g.m, g.wmax, &mut rng);
                d.extra_edges = Some(edge_list(&ex));
            }
            if g.vertex_weights {
                d.vertex_weights = Some(gen::random_vertex_weights(n, g.wmax, &mut rng));
            }
            d.edges = edges.iter().map(|&(a, b)| vec![a as i64, b as i64]).collect();
            d.root = Some(1);
        }
        GenKind::Dag => {
            d = InstanceDocument::empty(Kind::BoundedDag);
            let (vs, es) = gen::random_bounded_dag(n, g.m, g.bmax, g.wmax, &mut rng);
            d.edges = es.iter().map(|e| vec![e.from as i64, e.to as i64]).collect();
            d.lbe = Some(es.iter().map(|e| e.lbe).collect());
            d.ube = Some(es.iter().map(|e| e.ube).collect());
            d.ce = Some(es.iter().map(|e| e.ce).collect());
            d.lbv = Some(vs.iter().map(|v| v.lbv).collect());
            d.ubv = Some(vs.iter().map(|v| v.ubv).collect());
            d.cv = Some(vs.iter().map(|v| v.cv).collect());
            d.sources = Some((1..=n).filter(|&u| vs[u - 1].is_source).collect());
            d.dests = Some((1..=n).filter(|&u| vs[u - 1].is_dest).collect());
        }
        GenKind::Graph => {
            d = InstanceDocument::empty(Kind::WeightedGraph);
            d.edges = gen::random_weighted_graph(n, g.m, g.wmax, &mut rng)
                .into_iter()
                .map(|(a, b, w)| vec![a as i64, b as i64, w])
                .collect();
        }
        GenKind::LeafSeq => {
            d = InstanceDocument::empty(Kind::LeafSeq);
            d.heights = Some(gen::random_leaf_seq(n, g.hmax, &mut rng));
        }
    }
    if !matches!(g.kind, GenKind::LeafSeq) {
        d.n = Some(n);
    }
    Ok(d)
}
