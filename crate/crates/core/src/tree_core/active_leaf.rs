use super::INF;

/// The pair of segment trees driving the adjacent-merge tree builder.
///
/// Tree A has `n` leaves, each active or inactive, and every node stores how
/// many active leaves lie below it; this yields `rank`, `unrank` and
/// `next_active` in O(log n). Tree B has `n - 1` leaves holding the combined
/// height `hc` of each active leaf with its active successor, and every node
/// keeps the minimum `hc` below it together with the leaf `lnum` attaining it
/// (leftmost on ties).
#[derive(Debug, Clone)]
pub struct ActiveLeafTrees {
    n: usize,
    size_a: usize,
    nactive: Vec<u32>,
    size_b: usize,
    hc: Vec<i64>,
    lnum: Vec<u32>,
}

impl ActiveLeafTrees {
    /// All `n` leaves active, every `hc` at the sentinel.
    pub fn new(n: usize) -> Self {
        let size_a = n.next_power_of_two().max(1);
        let mut nactive = vec![0u32; 2 * size_a];
        for leaf in 0..n {
            nactive[size_a + leaf] = 1;
        }
        for q in (1..size_a).rev() {
            nactive[q] = nactive[2 * q] + nactive[2 * q + 1];
        }
        let size_b = n.saturating_sub(1).next_power_of_two().max(1);
        let mut lnum = vec![0u32; 2 * size_b];
        for leaf in 0..size_b {
            lnum[size_b + leaf] = leaf as u32 + 1;
        }
        for q in (1..size_b).rev() {
            lnum[q] = lnum[2 * q];
        }
        ActiveLeafTrees { n, size_a, nactive, size_b, hc: vec![INF; 2 * size_b], lnum }
    }

    /// All leaves active with `hc(i) = 1 + max(h(i), h(i + 1))`.
    pub fn from_heights(h: &[i64]) -> Self {
        let mut t = Self::new(h.len());
        for i in 1..h.len() {
            t.hc[t.size_b + i - 1] = 1 + h[i - 1].max(h[i]);
        }
        for q in (1..t.size_b).rev() {
            t.pull_b(q);
        }
        t
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn active_count(&self) -> usize {
        self.nactive[1] as usize
    }

    pub fn is_active(&self, i: usize) -> bool {
        (1..=self.n).contains(&i) && self.nactive[self.size_a + i - 1] == 1
    }

    /// Number of active leaves strictly before active leaf `i`.
    pub fn rank(&self, i: usize) -> Option<usize> {
        if !self.is_active(i) {
            return None;
        }
        let (mut q, mut lo, mut span) = (1, 1, self.size_a);
        let mut acc = 0usize;
        while q < self.size_a {
            span /= 2;
            if i >= lo + span {
                acc += self.nactive[2 * q] as usize;
                q = 2 * q + 1;
                lo += span;
            } else {
                q *= 2;
            }
        }
        Some(acc)
    }

    /// The active leaf of rank `r`.
    pub fn unrank(&self, r: usize) -> Option<usize> {
        if r >= self.active_count() {
            return None;
        }
        let (mut q, mut r) = (1, r);
        while q < self.size_a {
            let left = self.nactive[2 * q] as usize;
            if left <= r {
                r -= left;
                q = 2 * q + 1;
            } else {
                q *= 2;
            }
        }
        Some(q - self.size_a + 1)
    }

    /// `unrank(rank(i) + 1)`; `None` when `i` is the last active leaf.
    pub fn next_active(&self, i: usize) -> Option<usize> {
        self.unrank(self.rank(i)? + 1)
    }

    /// `unrank(rank(i) - 1)`; `None` when `i` is the first active leaf.
    pub fn prev_active(&self, i: usize) -> Option<usize> {
        self.rank(i)?.checked_sub(1).and_then(|r| self.unrank(r))
    }

    /// Marks leaf `j` inactive, decrementing `nactive` along its root path.
    pub fn deactivate(&mut self, j: usize) {
        assert!(self.is_active(j), "leaf {j} is not active");
        let mut q = self.size_a + j - 1;
        while q >= 1 {
            self.nactive[q] -= 1;
            q >>= 1;
        }
    }

    pub fn hc(&self, i: usize) -> i64 {
        if i == 0 || i >= self.n {
            return INF;
        }
        self.hc[self.size_b + i - 1]
    }

    /// Sets `hc` of leaf `i` (1..n-1) and refreshes the minima above it.
    /// Leaf `n` has no slot in tree B and is ignored.
    pub fn set_hc(&mut self, i: usize, value: i64) {
        if i == 0 || i >= self.n {
            return;
        }
        let mut q = self.size_b + i - 1;
        self.hc[q] = value;
        while q > 1 {
            q >>= 1;
            self.pull_b(q);
        }
    }

    /// `(hc, lnum)` at the root of tree B.
    pub fn min_hc(&self) -> (i64, usize) {
        (self.hc[1], self.lnum[1] as usize)
    }

    fn pull_b(&mut self, q: usize) {
        let (l, r) = (2 * q, 2 * q + 1);
        if self.hc[l] <= self.hc[r] {
            self.hc[q] = self.hc[l];
            self.lnum[q] = self.lnum[l];
        } else {
            self.hc[q] = self.hc[r];
            self.lnum[q] = self.lnum[r];
        }
    }

    /// Checks every stored aggregate against a from-scratch recomputation,
    /// with leaf heights `h` (1-based: `h[i - 1]`) for the `hc` invariant.
    pub fn check_invariants(&self, h: &[i64]) -> Result<(), String> {
        for q in (1..self.size_a).rev() {
            if self.nactive[q] != self.nactive[2 * q] + self.nactive[2 * q + 1] {
                return Err(format!("nactive mismatch at node {q}"));
            }
        }
        for i in 1..self.n {
            let want = match (self.is_active(i), self.next_active(i)) {
                (true, Some(j)) => 1 + h[i - 1].max(h[j - 1]),
                _ => INF,
            };
            if self.hc(i) != want {
                return Err(format!("hc({i}) = {} but expected {want}", self.hc(i)));
            }
        }
        let best = (1..self.n).map(|i| self.hc(i)).min().unwrap_or(INF);
        if self.hc[1] != best {
            return Err(format!("root hc {} but minimum leaf hc {best}", self.hc[1]));
        }
        if self.n > 1 && self.hc(self.lnum[1] as usize) != best {
            return Err("lnum at root does not attain the minimum".into());
        }
        Ok(())
    }
}
