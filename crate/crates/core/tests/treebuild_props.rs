use proptest::prelude::*;
use rand::Rng;
use treetopo::gen;
use treetopo::oracles::brute_min_height;
use treetopo::treebuild::{build_linear, build_linear_counted, build_mergesim, check_built, hmin_dp};

fn check_all(h: &[i64]) {
    let want = hmin_dp(h).unwrap();
    let (lin, ops) = build_linear_counted(h).unwrap();
    let ms = build_mergesim(h).unwrap();
    assert_eq!(lin.root_height(), want, "linear on {h:?}");
    assert_eq!(ms.root_height(), want, "mergesim on {h:?}");
    check_built(&lin, h).unwrap();
    check_built(&ms, h).unwrap();
    assert!(ops.pushes <= 2 * h.len() && ops.pops <= ops.pushes, "{ops:?} on {h:?}");
}

#[test]
fn exhaustive_small_alphabet() {
    for n in 1..=12u32 {
        let mut h = vec![0i64; n as usize];
        for code in 0..3u64.pow(n) {
            let mut c = code;
            for x in h.iter_mut() {
                *x = (c % 3) as i64;
                c /= 3;
            }
            check_all(&h);
        }
    }
}

#[test]
fn dp_matches_bracketing_oracle() {
    let mut rng = gen::rng(801);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=11);
        let h = gen::random_leaf_seq(n, rng.gen_range(0..=12), &mut rng);
        assert_eq!(hmin_dp(&h).unwrap(), brute_min_height(&h).unwrap(), "{h:?}");
    }
}

#[test]
fn random_sequences() {
    let mut rng = gen::rng(802);
    for _ in 0..1000 {
        let n = rng.gen_range(1..=60);
        let hmax = [1, 3, 10, 1000][rng.gen_range(0..4)];
        check_all(&gen::random_leaf_seq(n, hmax, &mut rng));
    }
}

#[test]
fn known_heights() {
    assert_eq!(build_linear(&[0; 8]).unwrap().root_height(), 3);
    assert_eq!(build_linear(&[0; 9]).unwrap().root_height(), 4);
    assert_eq!(build_linear(&[5]).unwrap().root_height(), 5);
    assert_eq!(build_linear(&[3, 0, 0, 0, 0, 0, 0, 0, 0]).unwrap().root_height(), 4);
    assert!(build_linear(&[]).is_err());
    assert!(build_mergesim(&[-1, 0]).is_err());
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]
    #[test]
    fn builders_agree_at_scale(n in 1usize..3000, hmax in 0i64..40, seed: u64) {
        let mut rng = gen::rng(seed);
        let h = gen::random_leaf_seq(n, hmax, &mut rng);
        let a = build_linear(&h).unwrap();
        let b = build_mergesim(&h).unwrap();
        prop_assert_eq!(a.root_height(), b.root_height());
        prop_assert!(check_built(&a, &h).is_ok());
        prop_assert!(check_built(&b, &h).is_ok());
        let lower = h.iter().copied().max().unwrap().max((n as f64).log2().ceil() as i64);
        prop_assert!(a.root_height() >= lower);
    }
}
