use proptest::prelude::*;
use rand::Rng;
use treetopo::gen;
use treetopo::oracles::brute_spanning_trees;
use treetopo::spanning::{check_spanning_tree, dcmst, WeightedGraph};

#[test]
fn dcmst_matches_enumeration_for_every_k() {
    let mut rng = gen::rng(501);
    let mut checked = 0;
    for _ in 0..300 {
        let n = rng.gen_range(2..=7);
        let extra = rng.gen_range(0..=(24 - (n - 1)).min(n * (n - 1) / 2));
        // small weights force many ties
        let wmax = if rng.gen_bool(0.5) { 3 } else { 40 };
        let g = WeightedGraph::new(n, gen::random_weighted_graph(n, extra, wmax, &mut rng)).unwrap();
        let r = rng.gen_range(1..=n);
        for k in 1..=g.degree(r) {
            let got = dcmst(&g, r, k).unwrap();
            let want = brute_spanning_trees(&g, r, k).unwrap();
            assert_eq!(got.feasible, want.feasible, "{g:?} r={r} k={k}");
            if got.feasible {
                checked += 1;
                assert_eq!(got.total_weight, want.total_weight, "{g:?} r={r} k={k}");
                assert_eq!(got.degree_r, k);
                check_spanning_tree(&g, r, &got).unwrap();
            } else {
                assert!(got.diagnostic.is_some());
            }
        }
    }
    assert!(checked >= 300);
}

#[test]
fn bad_inputs() {
    assert!(WeightedGraph::new(3, vec![(1, 2, 1)]).is_err());
    assert!(WeightedGraph::new(2, vec![(1, 1, 1), (1, 2, 1)]).is_err());
    assert!(WeightedGraph::new(2, vec![(1, 2, 0)]).is_err());
    let g = WeightedGraph::new(3, vec![(1, 2, 1), (2, 3, 1)]).unwrap();
    assert!(dcmst(&g, 1, 2).is_err());
    assert!(dcmst(&g, 4, 1).is_err());
    assert!(dcmst(&g, 1, 0).is_err());
}

#[test]
fn forced_degree_at_a_hub() {
    // star edges are expensive, the rim is cheap
    let mut edges = vec![(1, 2, 10), (1, 3, 10), (1, 4, 10), (1, 5, 10)];
    edges.extend([(2, 3, 1), (3, 4, 1), (4, 5, 1)]);
    let g = WeightedGraph::new(5, edges).unwrap();
    for (k, w) in [(1, 13), (2, 22), (3, 31), (4, 40)] {
        let res = dcmst(&g, 1, k).unwrap();
        assert_eq!(res.total_weight, w, "k = {k}");
        check_spanning_tree(&g, 1, &res).unwrap();
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn dcmst_witness_is_valid(n in 2usize..40, extra in 0usize..80, seed: u64) {
        let mut rng = gen::rng(seed);
        let g = WeightedGraph::new(n, gen::random_weighted_graph(n, extra, 20, &mut rng)).unwrap();
        let r = 1 + seed as usize % n;
        let mut last = None;
        for k in 1..=g.degree(r) {
            let res = dcmst(&g, r, k).unwrap();
            if res.feasible {
                prop_assert!(check_spanning_tree(&g, r, &res).is_ok());
                last = Some(res.total_weight);
            }
        }
        prop_assert!(last.is_some() || g.degree(r) == 0);
    }
}
