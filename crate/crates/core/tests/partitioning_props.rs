use proptest::prelude::*;
use rand::Rng;
use treetopo::gen;
use treetopo::oracles::brute_connected_partition;
use treetopo::partitioning::{
    assignment_cost, bounded_max_size, check_bounded, check_connected_parts, partition_bounded, partition_connected,
    ConnectedPartSpec,
};
use treetopo::tree_core::root_at;

#[test]
fn bounded_sizes_and_cover() {
    let mut rng = gen::rng(301);
    for _ in 0..300 {
        let n = rng.gen_range(1..=200);
        let t = root_at(n, &gen::random_tree(n, &mut rng), rng.gen_range(1..=n)).unwrap();
        for q in 1..=(n / 2).max(1) {
            let p = partition_bounded(&t, q).unwrap().expect("n >= Q");
            check_bounded(&t, q, &p).unwrap();
            let sizes = p.sizes();
            assert_eq!(sizes.iter().sum::<usize>(), n);
            assert!(sizes.iter().all(|&s| q <= s && s <= bounded_max_size(q)), "Q = {q}: {sizes:?}");
        }
    }
}

#[test]
fn bounded_small_cases() {
    let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
    assert!(partition_bounded(&t, 4).unwrap().is_none());
    assert!(partition_bounded(&t, 0).is_err());
    let p = partition_bounded(&t, 3).unwrap().unwrap();
    assert_eq!(p.sizes(), vec![3]);
    let one = root_at(1, &[], 1).unwrap();
    assert_eq!(partition_bounded(&one, 1).unwrap().unwrap().sizes(), vec![1]);
}

fn random_spec(n: usize, k: usize, rng: &mut impl Rng) -> ConnectedPartSpec {
    let mut sz: Vec<usize> = (0..k).map(|_| rng.gen_range(1..=(n / k).max(1) + 1)).collect();
    sz.sort();
    while sz.iter().sum::<usize>() > n {
        let i = sz.iter().enumerate().max_by_key(|&(_, s)| *s).unwrap().0;
        sz[i] -= 1;
        sz.retain(|&s| s > 0);
    }
    sz.sort();
    ConnectedPartSpec {
        sz,
        cv: (0..n).map(|_| rng.gen_range(0..10)).collect(),
        ce: (0..n.saturating_sub(1)).map(|_| rng.gen_range(0..10)).collect(),
    }
}

#[test]
fn connected_matches_edge_subset_oracle() {
    let mut rng = gen::rng(302);
    for _ in 0..400 {
        let n = rng.gen_range(1..=10);
        let t = root_at(n, &gen::random_tree(n, &mut rng), rng.gen_range(1..=n)).unwrap();
        let k = rng.gen_range(1..=3);
        let spec = random_spec(n, k, &mut rng);
        if spec.sz.is_empty() {
            continue;
        }
        let got = partition_connected(&t, &spec).unwrap();
        let want = brute_connected_partition(&t, &spec).unwrap();
        assert_eq!(got.feasible, want.feasible, "{spec:?}");
        if got.feasible {
            assert_eq!(got.min_cost, want.min_cost, "{:?} {spec:?}", t.edges());
            check_connected_parts(&t, &spec, &got.assignment).unwrap();
            assert_eq!(assignment_cost(&t, &spec, &got.assignment), got.min_cost);
        }
    }
}

#[test]
fn connected_examples() {
    let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
    let whole = ConnectedPartSpec { sz: vec![3], cv: vec![4, 4, 4], ce: vec![1, 1] };
    assert_eq!(partition_connected(&t, &whole).unwrap().min_cost, 0);
    let bad = ConnectedPartSpec { sz: vec![2, 2], cv: vec![0; 3], ce: vec![0; 2] };
    assert!(partition_connected(&t, &bad).is_err());
    let unsorted = ConnectedPartSpec { sz: vec![2, 1], cv: vec![0; 3], ce: vec![0; 2] };
    assert!(partition_connected(&t, &unsorted).is_err());
    let star = root_at(4, &[(1, 2), (1, 3), (1, 4)], 1).unwrap();
    let two_pairs = ConnectedPartSpec { sz: vec![2, 2], cv: vec![0; 4], ce: vec![0; 3] };
    assert!(!partition_connected(&star, &two_pairs).unwrap().feasible);
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]
    #[test]
    fn connected_witness_is_valid(n in 1usize..40, k in 1usize..5, seed: u64) {
        let mut rng = gen::rng(seed);
        let t = root_at(n, &gen::random_tree(n, &mut rng), 1).unwrap();
        let spec = random_spec(n, k, &mut rng);
        prop_assume!(!spec.sz.is_empty());
        let r = partition_connected(&t, &spec).unwrap();
        if r.feasible {
            prop_assert!(check_connected_parts(&t, &spec, &r.assignment).is_ok());
            prop_assert_eq!(assignment_cost(&t, &spec, &r.assignment), r.min_cost);
        }
    }
}
