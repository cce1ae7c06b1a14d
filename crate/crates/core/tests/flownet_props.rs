use proptest::prelude::*;
use rand::Rng;
use treetopo::flownet::{
    check_flow, check_stream_plan, decompose_paths, feasible_flow, min_cost_max_flow, min_feasible_flow,
    min_path_cover, min_streams, split_vertices, BoundedDigraph, FlowEdge, FlowNetwork, StreamEdge, StreamVertex,
};
use treetopo::gen;
use treetopo::oracles::{brute_min_feasible_flow, brute_min_streams};

fn random_network(rng: &mut impl Rng, n: usize, m: usize, bmax: u64) -> FlowNetwork {
    let edges = (0..m)
        .map(|_| {
            let from = rng.gen_range(0..n);
            let mut to = rng.gen_range(0..n - 1);
            if to >= from {
                to += 1;
            }
            let lower = if rng.gen_bool(0.6) { 0 } else { rng.gen_range(0..=bmax) };
            let upper = if rng.gen_bool(0.25) { None } else { Some(rng.gen_range(lower..=bmax.max(lower))) };
            FlowEdge { from, to, lower, upper, cost: rng.gen_range(0..5) }
        })
        .collect();
    FlowNetwork::new(n, edges, 0, n - 1).unwrap()
}

#[test]
fn min_feasible_flow_matches_enumeration() {
    let mut rng = gen::rng(401);
    let mut feasible = 0;
    for _ in 0..400 {
        let n = rng.gen_range(2..=5);
        let m = rng.gen_range(1..=7);
        let net = random_network(&mut rng, n, m, 2);
        let want = brute_min_feasible_flow(&net).unwrap();
        let got = min_feasible_flow(&net);
        match (&got, want) {
            (None, None) => {}
            (Some(fa), Some((v, c))) => {
                feasible += 1;
                check_flow(&net, fa).unwrap();
                assert_eq!((fa.value, fa.cost), (v, c), "{net:?}");
            }
            _ => panic!("feasibility differs on {net:?}: {got:?} vs {want:?}"),
        }
    }
    assert!(feasible >= 100, "only {feasible} feasible networks");
}

#[test]
fn feasible_flow_respects_bounds() {
    let mut rng = gen::rng(402);
    for _ in 0..500 {
        let n = rng.gen_range(2..=12);
        let m = rng.gen_range(1..=30);
        let net = random_network(&mut rng, n, m, 6);
        if let Some(fa) = feasible_flow(&net) {
            check_flow(&net, &fa).unwrap();
        }
    }
}

#[test]
fn max_flow_on_a_diamond() {
    let e = |from, to, upper, cost| FlowEdge { from, to, lower: 0, upper: Some(upper), cost };
    let net = FlowNetwork::new(4, vec![e(0, 1, 3, 1), e(0, 2, 2, 2), e(1, 3, 2, 1), e(2, 3, 3, 1), e(1, 2, 1, 0)], 0, 3)
        .unwrap();
    let fa = min_cost_max_flow(&net).unwrap();
    assert_eq!(fa.value, 5);
    // every edge saturated: 3*1 + 2*2 + 2*1 + 3*1 + 1*0
    assert_eq!(fa.cost, 12);
    check_flow(&net, &fa).unwrap();
    let paths = decompose_paths(&net, &fa).unwrap();
    assert_eq!(paths.len(), 5);
}

fn random_dag(rng: &mut impl Rng, n: usize, m: usize) -> BoundedDigraph {
    let (v, e) = gen::random_bounded_dag(n, m, 2, 3, rng);
    BoundedDigraph::new(v, e).unwrap()
}

#[test]
fn min_streams_matches_enumeration() {
    let mut rng = gen::rng(403);
    let mut feasible = 0;
    for _ in 0..400 {
        let n = rng.gen_range(1..=5);
        let m = rng.gen_range(0..=7);
        let g = random_dag(&mut rng, n, m);
        let want = brute_min_streams(&g).unwrap();
        let got = min_streams(&g);
        match (&got, &want) {
            (None, None) => {}
            (Some(a), Some(b)) => {
                feasible += 1;
                check_stream_plan(&g, a).unwrap();
                check_stream_plan(&g, b).unwrap();
                assert_eq!(a.p, b.p, "{g:?}");
                assert_eq!(a.cost_s, b.cost_s, "{g:?}");
            }
            _ => panic!("feasibility differs on {g:?}: {got:?} vs {want:?}"),
        }
    }
    assert!(feasible >= 100, "only {feasible} feasible DAGs");
}

#[test]
fn stream_examples() {
    let v = |source, dest| StreamVertex { lbv: 0, ubv: None, cv: 0, is_source: source, is_dest: dest };
    let e = |from, to, lbe| StreamEdge { from, to, lbe, ube: None, ce: 0 };
    let g = BoundedDigraph::new(vec![v(true, false), v(false, true), v(false, true)], vec![e(1, 2, 1), e(1, 3, 1)]).unwrap();
    let plan = min_streams(&g).unwrap();
    assert_eq!(plan.p, 2);
    let idle = BoundedDigraph::new(vec![v(true, true), v(false, true)], vec![e(1, 2, 0)]).unwrap();
    assert_eq!(min_streams(&idle).unwrap().p, 0);
    let mut tight = v(false, false);
    tight.lbv = 1;
    tight.ubv = Some(0);
    assert!(BoundedDigraph::new(vec![tight], vec![]).is_err());
    let mut stuck = v(false, true);
    stuck.lbv = 1;
    let g = BoundedDigraph::new(vec![v(false, false), stuck], vec![e(1, 2, 0)]).unwrap();
    assert!(min_streams(&g).is_none());
    let cyclic = BoundedDigraph::new(vec![v(true, true), v(true, true)], vec![e(1, 2, 0), e(2, 1, 0)]);
    assert!(cyclic.is_err());
}

#[test]
fn split_network_shape() {
    let mut rng = gen::rng(404);
    let g = random_dag(&mut rng, 4, 5);
    let net = split_vertices(&g);
    assert_eq!(net.n, 10);
    let sources = g.vertices.iter().filter(|v| v.is_source).count();
    let dests = g.vertices.iter().filter(|v| v.is_dest).count();
    assert_eq!(net.edges.len(), 4 + g.edges.len() + sources + dests + 1);
    assert!(net.edges.iter().all(|e| e.from != net.t && e.to != net.s));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(96))]
    #[test]
    fn path_cover_invariants(n in 1usize..40, m in 0usize..80, seed: u64) {
        let mut rng = gen::rng(seed);
        let (_, e) = gen::random_bounded_dag(n, m, 0, 0, &mut rng);
        let edges: Vec<(usize, usize)> = e.iter().map(|e| (e.from, e.to)).collect();
        let pc = min_path_cover(n, &edges).unwrap();
        prop_assert_eq!(pc.p + pc.matching_size, n);
        prop_assert_eq!(pc.paths.len(), pc.p);
        let mut seen = vec![0; n + 1];
        for p in &pc.paths {
            for &v in p {
                seen[v] += 1;
            }
            for w in p.windows(2) {
                prop_assert!(edges.contains(&(w[0], w[1])));
            }
        }
        prop_assert!(seen[1..].iter().all(|&c| c == 1));
    }

    #[test]
    fn larger_streams_are_valid(n in 1usize..25, m in 0usize..60, seed: u64) {
        let mut rng = gen::rng(seed);
        let (v, e) = gen::random_bounded_dag(n, m, 3, 5, &mut rng);
        let g = BoundedDigraph::new(v, e).unwrap();
        if let Some(plan) = min_streams(&g) {
            prop_assert!(check_stream_plan(&g, &plan).is_ok());
        }
    }
}
