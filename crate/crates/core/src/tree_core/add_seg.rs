use crate::error::{invalid, Result};

/// Segment tree supporting "add `delta` to every leaf in `[l, r]`" and
/// "read leaf `i`", both in O(log n).
///
/// Range updates are parked as pending aggregates on the O(log n) canonical
/// nodes covering the interval; a point query sums the leaf and all its
/// ancestors' aggregates.
#[derive(Debug, Clone)]
pub struct AddSegTree {
    n: usize,
    size: usize,
    uagg: Vec<i64>,
}

impl AddSegTree {
    pub fn zeros(n: usize) -> Self {
        let size = n.next_power_of_two().max(1);
        AddSegTree { n, size, uagg: vec![0; 2 * size] }
    }

    /// Leaves initialised from `values` (leaf `i` holds `values[i - 1]`).
    pub fn from_values(values: &[i64]) -> Self {
        let mut t = Self::zeros(values.len());
        t.uagg[t.size..t.size + values.len()].copy_from_slice(values);
        t
    }

    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    /// Adds `delta` to leaves `l..=r` (1-based).
    pub fn range_add(&mut self, l: usize, r: usize, delta: i64) -> Result<()> {
        if l == 0 || l > r || r > self.n {
            return Err(invalid(format!("interval [{l},{r}] invalid for {} leaves", self.n)));
        }
        let (mut lo, mut hi) = (l - 1 + self.size, r + self.size);
        while lo < hi {
            if lo & 1 == 1 {
                self.uagg[lo] += delta;
                lo += 1;
            }
            if hi & 1 == 1 {
                hi -= 1;
                self.uagg[hi] += delta;
            }
            lo >>= 1;
            hi >>= 1;
        }
        Ok(())
    }

    pub fn point_query(&self, i: usize) -> Result<i64> {
        if i == 0 || i > self.n {
            return Err(invalid(format!("leaf {i} outside 1..={}", self.n)));
        }
        let mut node = i - 1 + self.size;
        let mut acc = 0;
        while node >= 1 {
            acc += self.uagg[node];
            node >>= 1;
        }
        Ok(acc)
    }

    /// Makes `point_query(i)` return `value` without touching other leaves.
    pub fn point_set(&mut self, i: usize, value: i64) -> Result<()> {
        let current = self.point_query(i)?;
        self.uagg[i - 1 + self.size] += value - current;
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn whole_range() {
        let mut t = AddSegTree::zeros(4);
        t.range_add(1, 4, 5).unwrap();
        assert_eq!(t.point_query(3).unwrap(), 5);
    }

    #[test]
    fn overlapping_ranges() {
        let mut t = AddSegTree::zeros(4);
        t.range_add(1, 2, 1).unwrap();
        t.range_add(2, 3, 2).unwrap();
        assert_eq!(
            (1..=4).map(|i| t.point_query(i).unwrap()).collect::<Vec<_>>(),
            [1, 3, 2, 0]
        );
    }

    #[test]
    fn identity_without_updates() {
        let t = AddSegTree::from_values(&[4, -1, 7]);
        assert_eq!(
            (1..=3).map(|i| t.point_query(i).unwrap()).collect::<Vec<_>>(),
            [4, -1, 7]
        );
    }

    #[test]
    fn bad_intervals() {
        let mut t = AddSegTree::zeros(3);
        assert!(t.range_add(2, 1, 1).is_err());
        assert!(t.range_add(0, 1, 1).is_err());
        assert!(t.range_add(1, 4, 1).is_err());
        assert!(t.point_query(4).is_err());
    }

    #[test]
    fn point_set_overrides_pending() {
        let mut t = AddSegTree::zeros(5);
        t.range_add(1, 5, 3).unwrap();
        t.point_set(2, 10).unwrap();
        assert_eq!(t.point_query(2).unwrap(), 10);
        assert_eq!(t.point_query(3).unwrap(), 3);
    }
}
