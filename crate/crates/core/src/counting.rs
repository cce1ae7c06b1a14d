//! Exact tree counting: labeled trees by number of leaves, and unlabeled
//! rooted trees whose vertex degrees (or son counts) lie in a given set.

use num_bigint::BigUint;
use num_traits::{One, Zero};
use serde::Serialize;

use crate::error::{invalid, Error, Result};

/// Largest n accepted by [`unlabeled_constrained_slow`].
pub const SLOW_N_MAX: usize = 22;

/// Pascal triangle `c[i][j]` for 0 <= j <= i <= nmax.
pub fn binomial_table(nmax: usize) -> Vec<Vec<BigUint>> {
    let mut c: Vec<Vec<BigUint>> = Vec::with_capacity(nmax + 1);
    for i in 0..=nmax {
        let mut row = vec![BigUint::one(); i + 1];
        for j in 1..i {
            row[j] = &c[i - 1][j - 1] + &c[i - 1][j];
        }
        c.push(row);
    }
    c
}

/// `nf[j][k]` = number of surjections from a j-set onto a k-set, j,k <= nmax.
/// Fixes how many elements land on the last target value.
pub fn surjection_table(nmax: usize, c: &[Vec<BigUint>]) -> Vec<Vec<BigUint>> {
    let mut nf = vec![vec![BigUint::zero(); nmax + 1]; nmax + 1];
    nf[0][0] = BigUint::one();
    for k in 1..=nmax {
        for j in k..=nmax {
            let mut s = BigUint::zero();
            for g in 1..=j - (k - 1) {
                if !nf[j - g][k - 1].is_zero() {
                    s += &c[j][g] * &nf[j - g][k - 1];
                }
            }
            nf[j][k] = s;
        }
    }
    nf
}

pub fn surjections(j: usize, k: usize) -> BigUint {
    let n = j.max(k);
    let c = binomial_table(n);
    surjection_table(n, &c)[j][k].clone()
}

/// Multisets of size `j` drawn from `i` kinds: C(i+j-1, j), built one factor
/// at a time with exact division.
pub fn cr(i: &BigUint, j: usize) -> BigUint {
    if j == 0 {
        return BigUint::one();
    }
    if i.is_zero() {
        return BigUint::zero();
    }
    let a = i + BigUint::from(j - 1);
    let mut c = BigUint::one();
    for t in 1..=j {
        let num = c * (&a - BigUint::from(t - 1));
        let t = BigUint::from(t);
        assert!((&num % &t).is_zero(), "inexact division in combinations with repetition");
        c = num / t;
    }
    c
}

/// `nt[i][j]` = labeled trees on i vertices with exactly j leaves, i <= n.
///
/// Strip the j leaves: what remains is a labeled tree on r = i - j vertices
/// with some k leaves. Every remaining leaf must receive at least one
/// stripped leaf (or it would have been a leaf already), while the r - k
/// inner vertices may receive any number. The number of such attachments,
/// `H_r(j, k)`, obeys `H_r(j, 0) = r^j` and
/// `H_r(j, k) = H_r(j, k-1) - H_{r-1}(j, k-1)` (inclusion-exclusion on one
/// designated target), so each j keeps only its previous row in r.
pub fn labeled_leaf_table(n: usize) -> Vec<Vec<BigUint>> {
    let c = binomial_table(n);
    let mut nt = vec![vec![BigUint::zero(); n + 1]; n + 1];
    if n >= 1 {
        nt[1][1] = BigUint::one();
    }
    if n >= 2 {
        nt[2][2] = BigUint::one();
    }
    // h_prev[j] holds the row H_{r-1}(j, .)
    let mut h_prev: Vec<Vec<BigUint>> = vec![Vec::new(); n + 1];
    for r in 1..n {
        for j in 1..=n - r {
            let top = j.min(r);
            let mut row = Vec::with_capacity(top + 1);
            row.push(BigUint::from(r).pow(j as u32));
            for k in 1..=top {
                let prev = h_prev[j].get(k - 1).cloned().unwrap_or_else(BigUint::zero);
                row.push(&row[k - 1] - prev);
            }
            let i = r + j;
            if i > 2 {
                let mut s = BigUint::zero();
                for k in 1..=top {
                    if !nt[r][k].is_zero() {
                        s += &nt[r][k] * &row[k];
                    }
                }
                nt[i][j] = &c[i][j] * s;
            }
            h_prev[j] = row;
        }
    }
    nt
}

pub fn labeled_trees_with_leaves(n: usize, p: usize) -> Result<BigUint> {
    if n == 0 || p == 0 || p > n {
        return Err(invalid(format!("need 1 <= p <= n, got n = {n}, p = {p}")));
    }
    Ok(labeled_leaf_table(n)[n][p].clone())
}

/// The same layered count but with every stripped leaf attached to a leaf of
/// the remaining tree: `C(i,j) * sum_k NT(i-j, k) * NF(j, k)`. Agrees with
/// [`labeled_leaf_table`] only for i <= 5; kept for comparison.
pub fn labeled_leaf_table_surjective_only(n: usize) -> Vec<Vec<BigUint>> {
    let c = binomial_table(n);
    let nf = surjection_table(n, &c);
    let mut nt = vec![vec![BigUint::zero(); n + 1]; n + 1];
    for i in 1..=n {
        for j in 1..=i {
            nt[i][j] = if i <= 2 {
                if i == j { BigUint::one() } else { BigUint::zero() }
            } else if j == i {
                BigUint::zero()
            } else {
                let s = (1..=j.min(i - j)).fold(BigUint::zero(), |acc, k| acc + &nt[i - j][k] * &nf[j][k]);
                &c[i][j] * s
            };
        }
    }
    nt
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, serde::Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    /// constraint on the number of neighbours
    Degree,
    /// constraint on the number of sons
    Sons,
}

/// Allowed degrees or son counts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstraintSet {
    pub allowed: Vec<bool>,
    pub mode: Mode,
}

impl ConstraintSet {
    /// `values` must lie in 0..n.
    pub fn new(n: usize, values: &[usize], mode: Mode) -> Result<Self> {
        if values.is_empty() {
            return Err(invalid("constraint set is empty"));
        }
        let mut allowed = vec![false; n.max(1)];
        for &x in values {
            if x >= n.max(1) {
                return Err(invalid(format!("constraint value {x} is outside 0..{}", n.max(1))));
            }
            allowed[x] = true;
        }
        Ok(ConstraintSet { allowed, mode })
    }

    pub fn unconstrained(n: usize, mode: Mode) -> Self {
        ConstraintSet { allowed: vec![true; n.max(1)], mode }
    }

    pub fn contains(&self, x: usize) -> bool {
        self.allowed.get(x).copied().unwrap_or(false)
    }

    /// Whether a non-root vertex with `sons` sons is allowed.
    fn inner_ok(&self, sons: usize) -> bool {
        match self.mode {
            Mode::Degree => self.contains(sons + 1),
            Mode::Sons => self.contains(sons),
        }
    }
}

/// Unlabeled rooted trees on n vertices satisfying the constraint everywhere
/// (the root's degree equals its son count).
///
/// `NT(i, j, p)`: trees on i vertices whose root has j sons, every son
/// subtree has at most p vertices, and every non-root vertex is allowed.
/// Layer p adds k >= 1 sons of size exactly p, chosen as a multiset among
/// the `TT(p)` allowed trees of size p. Only layers p-1 and p are stored.
pub fn unlabeled_constrained(n: usize, cs: &ConstraintSet) -> Result<BigUint> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if n == 1 {
        return Ok(BigUint::from(u8::from(cs.contains(0))));
    }
    // prev[i][j] = NT(i, j, p-1)
    let mut prev = vec![vec![BigUint::zero(); n]; n + 1];
    prev[1][0] = BigUint::one();
    for p in 1..n {
        let tt = (0..p).filter(|&j| cs.inner_ok(j)).fold(BigUint::zero(), |acc, j| acc + &prev[p][j]);
        let kmax = (n - 1) / p;
        let crs: Vec<BigUint> = (0..=kmax).map(|k| cr(&tt, k)).collect();
        let mut cur = prev.clone();
        if !tt.is_zero() {
            for i in 2..=n {
                for j in 1..i {
                    let mut add = BigUint::zero();
                    for k in 1..=((i - 1) / p).min(j) {
                        let base = &prev[i - k * p][j - k];
                        if !base.is_zero() {
                            add += base * &crs[k];
                        }
                    }
                    if !add.is_zero() {
                        cur[i][j] += add;
                    }
                }
            }
        }
        prev = cur;
    }
    Ok((0..n).filter(|&x| cs.contains(x)).fold(BigUint::zero(), |acc, x| acc + &prev[n][x]))
}

/// Cross-check by enumerating, for every size i, all multisets of son sizes
/// (partitions of i-1) and multiplying the multiset counts per size.
pub fn unlabeled_constrained_slow(n: usize, cs: &ConstraintSet) -> Result<BigUint> {
    if n == 0 {
        return Err(invalid("n must be at least 1"));
    }
    if n > SLOW_N_MAX {
        return Err(Error::ResourceLimit(format!("partition enumeration is capped at n = {SLOW_N_MAX}")));
    }
    let mut tok = vec![BigUint::zero(); n + 1];
    let mut tt = vec![BigUint::zero(); n + 1];
    for i in 1..=n {
        let mut nt2 = vec![BigUint::zero(); i];
        // y[j] = number of sons with j vertices
        let mut y = vec![0usize; i];
        for_each_partition(i - 1, i - 1, &mut y, &mut |y| {
            let x: usize = y.iter().sum();
            let ways = y
                .iter()
                .enumerate()
                .skip(1)
                .filter(|&(_, &c)| c > 0)
                .fold(BigUint::one(), |acc, (j, &c)| acc * cr(&tt[j], c));
            nt2[x] += ways;
        });
        for (x, v) in nt2.into_iter().enumerate() {
            if v.is_zero() {
                continue;
            }
            if cs.inner_ok(x) {
                tt[i] += &v;
            }
            if cs.contains(x) {
                tok[i] += v;
            }
        }
    }
    Ok(tok[n].clone())
}

/// Calls `f` with every y where sum_j j*y[j] = total, parts at most `max`.
fn for_each_partition(total: usize, max: usize, y: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
    if total == 0 {
        f(y);
        return;
    }
    for part in (1..=max.min(total)).rev() {
        y[part] += 1;
        for_each_partition(total - part, part, y, f);
        y[part] -= 1;
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn binomials() {
        let c = binomial_table(10);
        assert_eq!(c[4][2], big(6));
        assert!((0..=10).all(|i| c[i][0] == big(1)));
        assert_eq!(c[10].iter().sum::<BigUint>(), big(1024));
    }

    #[test]
    fn surjection_values() {
        assert_eq!(surjections(0, 0), big(1));
        assert_eq!(surjections(3, 2), big(6));
        assert_eq!(surjections(2, 3), big(0));
        let mut f = 1u64;
        for j in 1..=8u64 {
            f *= j;
            assert_eq!(surjections(j as usize, j as usize), big(f));
        }
    }

    #[test]
    fn multiset_counts() {
        assert_eq!(cr(&big(3), 2), big(6));
        assert_eq!(cr(&big(17), 0), big(1));
        assert!((0..20).all(|j| cr(&big(1), j) == big(1)));
        assert_eq!(cr(&big(0), 3), big(0));
    }

    #[test]
    fn labeled_leaves() {
        assert_eq!(labeled_trees_with_leaves(3, 2).unwrap(), big(3));
        assert_eq!(labeled_trees_with_leaves(4, 2).unwrap(), big(12));
        assert_eq!(labeled_trees_with_leaves(4, 3).unwrap(), big(4));
        assert_eq!(labeled_trees_with_leaves(1, 1).unwrap(), big(1));
        assert!(labeled_trees_with_leaves(3, 4).is_err());
        let t = labeled_leaf_table(9);
        for n in 2..=9u64 {
            let total: BigUint = t[n as usize].iter().sum();
            assert_eq!(total, big(n).pow(n as u32 - 2));
        }
    }

    #[test]
    fn surjective_only_variant_undercounts() {
        let a = labeled_leaf_table(7);
        let b = labeled_leaf_table_surjective_only(7);
        assert_eq!(a[5], b[5]);
        assert_eq!(b[6].iter().sum::<BigUint>(), big(936));
        assert_eq!(a[6].iter().sum::<BigUint>(), big(1296));
    }

    #[test]
    fn unlabeled_counts() {
        let want = [1u64, 1, 2, 4, 9, 20];
        for (n, &w) in (1..=6).zip(&want) {
            let cs = ConstraintSet::unconstrained(n, Mode::Sons);
            assert_eq!(unlabeled_constrained(n, &cs).unwrap(), big(w), "n = {n}");
            assert_eq!(unlabeled_constrained_slow(n, &cs).unwrap(), big(w), "n = {n}");
        }
        for (n, w) in [(3, 1u64), (5, 1), (7, 2), (4, 0)] {
            let cs = ConstraintSet::new(n, &[0, 2], Mode::Sons).unwrap();
            assert_eq!(unlabeled_constrained(n, &cs).unwrap(), big(w));
            assert_eq!(unlabeled_constrained_slow(n, &cs).unwrap(), big(w));
        }
        for n in 1..=12 {
            let cs = ConstraintSet::new(n.max(2), &[0, 1], Mode::Sons).unwrap();
            assert_eq!(unlabeled_constrained(n, &cs).unwrap(), big(1));
        }
        let cs = ConstraintSet::new(2, &[1], Mode::Degree).unwrap();
        assert_eq!(unlabeled_constrained_slow(2, &cs).unwrap(), big(1));
        assert_eq!(unlabeled_constrained(2, &cs).unwrap(), big(1));
        let cs = ConstraintSet::new(1, &[0], Mode::Degree).unwrap();
        assert_eq!(unlabeled_constrained(1, &cs).unwrap(), big(1));
        assert!(unlabeled_constrained_slow(23, &ConstraintSet::unconstrained(23, Mode::Sons)).is_err());
    }
}
