use proptest::prelude::*;
use rand::Rng;
use treetopo::cycle_completion::{
    check_cycle_cover, greedy_unit_any_pair, solve_fast, solve_minimax, solve_quadratic, ExtraEdge,
};
use treetopo::gen;
use treetopo::oracles::{brute_cycle_completion, brute_minimax, brute_unit_any_pair, enumerate_free_trees};
use treetopo::tree_core::root_at;

#[test]
fn solvers_match_subset_oracle() {
    let mut rng = gen::rng(201);
    let mut feasible = 0;
    for _ in 0..1500 {
        let n = rng.gen_range(1..=9);
        let edges = gen::random_tree(n, &mut rng);
        let t = root_at(n, &edges, rng.gen_range(1..=n)).unwrap();
        let m = rng.gen_range(0..=12);
        let extras = gen::random_extras(n, &edges, m, 9, &mut rng);
        let want = brute_cycle_completion(&t, &extras).unwrap();
        feasible += usize::from(want.feasible);
        for got in [solve_quadratic(&t, &extras).unwrap(), solve_fast(&t, &extras).unwrap()] {
            assert_eq!(got.feasible, want.feasible, "{edges:?} {extras:?}");
            if got.feasible {
                assert_eq!(got.total_weight, want.total_weight, "{edges:?} {extras:?}");
                check_cycle_cover(&t, &got.chosen_edges).unwrap();
                assert_eq!(got.chosen_edges.iter().map(|e| e.w).sum::<i64>(), got.total_weight);
            }
        }
        let mm = solve_minimax(&t, &extras).unwrap();
        let bm = brute_minimax(&t, &extras).unwrap();
        assert_eq!((mm.feasible, mm.w_max), (bm.feasible, bm.w_max));
        if mm.feasible {
            check_cycle_cover(&t, &mm.chosen_edges).unwrap();
            assert_eq!(mm.chosen_edges.iter().map(|e| e.w).max(), mm.w_max);
        }
    }
    // the family must exercise the feasible branch, not only infeasibility
    assert!(feasible >= 150, "only {feasible} feasible instances");
}

#[test]
fn minimax_threshold_monotonicity() {
    let mut rng = gen::rng(202);
    for _ in 0..300 {
        let n = rng.gen_range(3..=14);
        let edges = gen::random_tree(n, &mut rng);
        let t = root_at(n, &edges, 1).unwrap();
        let extras = gen::random_extras(n, &edges, 3 * n, 20, &mut rng);
        let mm = solve_minimax(&t, &extras).unwrap();
        let mut weights: Vec<i64> = extras.iter().map(|e| e.w).collect();
        weights.sort();
        weights.dedup();
        for &w in &weights {
            let kept: Vec<ExtraEdge> = extras.iter().copied().filter(|e| e.w <= w).collect();
            let feasible = solve_quadratic(&t, &kept).unwrap().feasible;
            assert_eq!(feasible, mm.feasible && mm.w_max.unwrap() <= w);
        }
    }
}

#[test]
fn unit_model_matches_oracle_on_all_small_trees() {
    for n in 1..=9 {
        for edges in enumerate_free_trees(n).unwrap() {
            for r in 1..=n {
                let t = root_at(n, &edges, r).unwrap();
                let got = greedy_unit_any_pair(&t);
                let want = brute_unit_any_pair(&t).unwrap();
                assert_eq!(got.feasible, want.feasible, "{edges:?} rooted at {r}");
                if got.feasible {
                    assert_eq!(got.total_weight, want.total_weight, "{edges:?} rooted at {r}");
                    assert_eq!(got.chosen_edges.len() as i64, got.total_weight);
                    check_cycle_cover(&t, &got.chosen_edges).unwrap();
                }
            }
        }
    }
}

#[test]
fn unit_model_on_random_labelings() {
    let mut rng = gen::rng(203);
    for _ in 0..400 {
        let n = rng.gen_range(1..=16);
        let t = root_at(n, &gen::random_tree(n, &mut rng), rng.gen_range(1..=n)).unwrap();
        let got = greedy_unit_any_pair(&t);
        let want = brute_unit_any_pair(&t).unwrap();
        assert_eq!((got.feasible, got.total_weight * i64::from(got.feasible)), (want.feasible, want.total_weight * i64::from(want.feasible)));
    }
}

#[test]
fn invalid_extras_are_rejected() {
    let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
    assert!(solve_fast(&t, &[ExtraEdge::new(1, 2, 1)]).is_err());
    assert!(solve_fast(&t, &[ExtraEdge::new(1, 4, 1)]).is_err());
    assert!(solve_fast(&t, &[ExtraEdge::new(1, 3, -1)]).is_err());
    assert!(solve_fast(&t, &[ExtraEdge::new(1, 3, 1), ExtraEdge::new(3, 1, 2)]).is_err());
    assert!(solve_quadratic(&t, &[ExtraEdge::new(2, 2, 1)]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn fast_matches_quadratic(n in 2usize..120, seed: u64, density in 1usize..4) {
        let mut rng = gen::rng(seed);
        let edges = if seed % 3 == 0 { gen::path_tree(n) } else { gen::random_tree(n, &mut rng) };
        let t = root_at(n, &edges, 1 + (seed as usize) % n).unwrap();
        let extras = gen::random_extras(n, &edges, density * n, 50, &mut rng);
        let a = solve_fast(&t, &extras).unwrap();
        let b = solve_quadratic(&t, &extras).unwrap();
        prop_assert_eq!(a.feasible, b.feasible);
        if a.feasible {
            prop_assert_eq!(a.total_weight, b.total_weight);
            prop_assert!(check_cycle_cover(&t, &a.chosen_edges).is_ok());
            prop_assert!(check_cycle_cover(&t, &b.chosen_edges).is_ok());
        }
    }
}
