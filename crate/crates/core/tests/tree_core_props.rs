use proptest::prelude::*;
use rand::Rng;
use treetopo::gen;
use treetopo::tree_core::{root_at, ActiveLeafTrees, AddSegTree, DfsNumbering, LcaIndex, RootedTree};

fn naive_lca(t: &RootedTree, u: usize, v: usize) -> usize {
    let mut anc = std::collections::HashSet::new();
    let mut x = Some(u);
    while let Some(y) = x {
        anc.insert(y);
        x = t.parent(y);
    }
    let mut x = v;
    while !anc.contains(&x) {
        x = t.parent(x).unwrap();
    }
    x
}

#[test]
fn dfs_intervals_match_subtree_sizes() {
    let mut rng = gen::rng(101);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=200);
        let r = rng.gen_range(1..=n);
        let t = root_at(n, &gen::random_tree(n, &mut rng), r).unwrap();
        let dfs = DfsNumbering::new(&t);
        let sizes = t.subtree_sizes();
        for v in 1..=n {
            assert_eq!(dfs.max(v) - dfs.num(v) + 1, sizes[v]);
            assert_eq!(dfs.vertex_at(dfs.num(v)), v);
        }
    }
}

#[test]
fn lca_matches_ancestor_intersection() {
    let mut rng = gen::rng(102);
    for round in 0..1000 {
        // all pairs on small trees, a sample on larger ones
        let n = if round % 10 == 0 { rng.gen_range(100..=200) } else { rng.gen_range(1..=40) };
        let t = root_at(n, &gen::random_tree(n, &mut rng), rng.gen_range(1..=n)).unwrap();
        let lca = LcaIndex::new(&t);
        let dfs = DfsNumbering::new(&t);
        for u in 1..=n {
            for v in 1..=n {
                let w = lca.lca(u, v).unwrap();
                assert_eq!(w, naive_lca(&t, u, v));
                assert!(dfs.in_subtree(u, w) && dfs.in_subtree(v, w));
            }
        }
    }
}

#[test]
fn lca_rejects_bad_ids() {
    let t = root_at(3, &[(1, 2), (2, 3)], 1).unwrap();
    let lca = LcaIndex::new(&t);
    assert!(lca.lca(0, 1).is_err());
    assert!(lca.lca(1, 4).is_err());
}

#[test]
fn add_seg_tree_matches_array() {
    let mut rng = gen::rng(103);
    let n = 97;
    let init: Vec<i64> = (0..n).map(|_| rng.gen_range(-50..50)).collect();
    let mut seg = AddSegTree::from_values(&init);
    let mut arr = init.clone();
    for _ in 0..10_000 {
        match rng.gen_range(0..3) {
            0 => {
                let l = rng.gen_range(1..=n);
                let r = rng.gen_range(l..=n);
                let d = rng.gen_range(-1000..1000);
                seg.range_add(l, r, d).unwrap();
                arr[l - 1..r].iter_mut().for_each(|x| *x += d);
            }
            1 => {
                let i = rng.gen_range(1..=n);
                let v = rng.gen_range(-1000..1000);
                seg.point_set(i, v).unwrap();
                arr[i - 1] = v;
            }
            _ => {
                let i = rng.gen_range(1..=n);
                assert_eq!(seg.point_query(i).unwrap(), arr[i - 1]);
            }
        }
    }
    assert!(seg.range_add(0, 2, 1).is_err());
    assert!(seg.point_query(n + 1).is_err());
}

#[test]
fn active_leaves_rank_unrank() {
    let mut rng = gen::rng(104);
    for _ in 0..200 {
        let n = rng.gen_range(2..=60);
        let h: Vec<i64> = (0..n).map(|_| rng.gen_range(0..5)).collect();
        let mut cur = h.clone();
        let mut seg = ActiveLeafTrees::from_heights(&h);
        let mut active: Vec<usize> = (1..=n).collect();
        for _ in 0..n - 1 {
            let pos = rng.gen_range(1..active.len());
            let j = active.remove(pos);
            seg.deactivate(j);
            cur[j - 1] = i64::MAX;
            seg.set_hc(j, i64::MAX);
            for (r, &i) in active.iter().enumerate() {
                assert_eq!(seg.rank(i), Some(r));
                assert_eq!(seg.unrank(r), Some(i));
                assert_eq!(seg.next_active(i), active.get(r + 1).copied());
                assert_eq!(seg.prev_active(i), r.checked_sub(1).map(|q| active[q]));
            }
            assert_eq!(seg.rank(j), None);
            assert_eq!(seg.unrank(active.len()), None);
            // refresh pair heights around the gap
            for w in active.windows(2) {
                seg.set_hc(w[0], 1 + cur[w[0] - 1].max(cur[w[1] - 1]));
            }
            if let Some(&last) = active.last() {
                seg.set_hc(last, i64::MAX);
            }
            seg.check_invariants(&cur).unwrap();
        }
    }
}

proptest! {
    #[test]
    fn rerooting_preserves_edges(n in 1usize..60, seed: u64, r in 1usize..60) {
        let mut rng = gen::rng(seed);
        let edges = gen::random_tree(n, &mut rng);
        let r = 1 + (r - 1) % n;
        let t = root_at(n, &edges, 1).unwrap();
        let u = t.rerooted(r).unwrap();
        prop_assert_eq!(u.root(), r);
        let mut a: Vec<_> = t.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        let mut b: Vec<_> = u.edges().iter().map(|&(x, y)| (x.min(y), x.max(y))).collect();
        a.sort();
        b.sort();
        prop_assert_eq!(a, b);
        prop_assert_eq!(u.preorder().len(), n);
        prop_assert_eq!(u.postorder().last().copied(), Some(r));
    }

    #[test]
    fn parent_array_round_trip(n in 1usize..80, seed: u64) {
        let mut rng = gen::rng(seed);
        let t = root_at(n, &gen::random_tree(n, &mut rng), 1).unwrap();
        let u = RootedTree::from_parents(&t.parents()[1..]).unwrap();
        for v in 1..=n {
            prop_assert_eq!(t.parent(v), u.parent(v));
        }
    }
}

#[test]
fn malformed_trees_are_rejected() {
    assert!(root_at(3, &[(1, 2)], 1).is_err());
    assert!(root_at(3, &[(1, 2), (2, 1)], 1).is_err());
    assert!(root_at(3, &[(1, 2), (2, 4)], 1).is_err());
    assert!(root_at(3, &[(1, 2), (2, 3)], 4).is_err());
    assert!(RootedTree::from_parents(&[0, 0]).is_err());
}
