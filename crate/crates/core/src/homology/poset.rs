use crate::error::{Error, Result};

/// A finite poset on `0..n` whose labelling is a linear extension:
/// `a < b` implies `a < b` as integers. Chains are then sorted tuples.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Poset {
    /// `above[a]`: all `b` with `a < b`, ascending.
    above: Vec<Vec<u32>>,
}

impl Poset {
    /// From strict upper sets; rejects unsorted sets, labels that are not a
    /// linear extension, and relations that are not transitive.
    pub fn from_upper_sets(above: Vec<Vec<u32>>) -> Result<Self> {
        let n = above.len();
        for (a, up) in above.iter().enumerate() {
            if up.windows(2).any(|w| w[0] >= w[1]) || up.iter().any(|&b| b as usize <= a || b as usize >= n) {
                return Err(Error::InvalidParameters(format!("upper set of {a} is not sorted above {a}")));
            }
        }
        let p = Poset { above };
        for a in 0..n {
            for &b in &p.above[a] {
                if !p.above[b as usize].iter().all(|c| p.above[a].binary_search(c).is_ok()) {
                    return Err(Error::InvalidParameters(format!("relation not transitive at {a} < {b}")));
                }
            }
        }
        Ok(p)
    }

    /// Builds the strict order from a comparison on naturally labelled points.
    pub fn from_fn<F: Fn(usize, usize) -> bool>(n: usize, less: F) -> Result<Self> {
        let above = (0..n)
            .map(|a| ((a + 1)..n).filter(|&b| less(a, b)).map(|b| b as u32).collect())
            .collect();
        Self::from_upper_sets(above)
    }

    pub fn antichain(n: usize) -> Self {
        Poset {
            above: vec![Vec::new(); n],
        }
    }

    /// The chain `0 < 1 < … < n-1`.
    pub fn chain(n: usize) -> Self {
        Poset {
            above: (0..n).map(|a| ((a + 1) as u32..n as u32).collect()).collect(),
        }
    }

    pub fn len(&self) -> usize {
        self.above.len()
    }

    pub fn is_empty(&self) -> bool {
        self.above.is_empty()
    }

    pub fn above(&self, a: usize) -> &[u32] {
        &self.above[a]
    }

    pub fn less(&self, a: usize, b: usize) -> bool {
        self.above[a].binary_search(&(b as u32)).is_ok()
    }

    pub fn relation_count(&self) -> usize {
        self.above.iter().map(Vec::len).sum()
    }

    pub fn is_antichain(&self) -> bool {
        self.above.iter().all(Vec::is_empty)
    }

    /// The induced subposet on `keep`, relabelled in increasing order, with
    /// the map from new labels to old.
    pub fn induced(&self, keep: &[bool]) -> (Poset, Vec<usize>) {
        let mut new_label = vec![u32::MAX; self.len()];
        let mut old = Vec::new();
        for (a, &k) in keep.iter().enumerate() {
            if k {
                new_label[a] = old.len() as u32;
                old.push(a);
            }
        }
        let above = old
            .iter()
            .map(|&a| {
                self.above[a]
                    .iter()
                    .filter(|&&b| keep[b as usize])
                    .map(|&b| new_label[b as usize])
                    .collect()
            })
            .collect();
        (Poset { above }, old)
    }

    /// Number of chains of each cardinality `1, 2, …`, without listing them.
    pub fn chain_counts(&self) -> Vec<u128> {
        let n = self.len();
        // from[a][l]: chains of cardinality l+1 starting at a
        let mut from: Vec<Vec<u128>> = vec![Vec::new(); n];
        let mut totals: Vec<u128> = Vec::new();
        for a in (0..n).rev() {
            let mut counts = vec![1u128];
            for &b in &self.above[a] {
                for (l, &c) in from[b as usize].iter().enumerate() {
                    if counts.len() <= l + 1 {
                        counts.push(0);
                    }
                    counts[l + 1] += c;
                }
            }
            for (l, &c) in counts.iter().enumerate() {
                if totals.len() <= l {
                    totals.push(0);
                }
                totals[l] += c;
            }
            from[a] = counts;
        }
        totals
    }

    /// Reduced Euler characteristic of the order complex, from chain counts.
    pub fn reduced_euler_characteristic(&self) -> i128 {
        let mut chi: i128 = -1;
        for (d, &c) in self.chain_counts().iter().enumerate() {
            if d % 2 == 0 {
                chi += c as i128;
            } else {
                chi -= c as i128;
            }
        }
        chi
    }

    /// Whether `map` is an order-preserving bijection, i.e. `a < b` iff
    /// `map[a] < map[b]`.
    pub fn is_automorphism(&self, map: &[usize]) -> bool {
        let n = self.len();
        if map.len() != n {
            return false;
        }
        let mut seen = vec![false; n];
        for &m in map {
            if m >= n || seen[m] {
                return false;
            }
            seen[m] = true;
        }
        (0..n).all(|a| {
            self.above[a].len() == self.above[map[a]].len()
                && self.above[a].iter().all(|&b| self.less_any(map[a], map[b as usize]))
        })
    }

    /// `a < b` without assuming natural order of the arguments.
    fn less_any(&self, a: usize, b: usize) -> bool {
        a < b && self.less(a, b)
    }

    /// First `a < b` whose images are not comparable in the same way.
    pub fn first_order_violation(&self, map: &[usize]) -> Option<(usize, usize)> {
        for a in 0..self.len() {
            for &b in &self.above[a] {
                if !self.less_any(map[a], map[b as usize]) {
                    return Some((a, b as usize));
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn chain_counts_of_small_posets() {
        assert_eq!(Poset::chain(3).chain_counts(), vec![3, 3, 1]);
        assert_eq!(Poset::antichain(4).chain_counts(), vec![4]);
        assert_eq!(Poset::antichain(4).reduced_euler_characteristic(), 3);
        assert_eq!(Poset::antichain(0).reduced_euler_characteristic(), -1);
        assert_eq!(Poset::chain(3).reduced_euler_characteristic(), 0);
    }

    #[test]
    fn rejects_bad_relations() {
        assert!(Poset::from_upper_sets(vec![vec![1], vec![2], vec![]]).is_err());
        assert!(Poset::from_upper_sets(vec![vec![], vec![0]]).is_err());
        assert!(Poset::from_upper_sets(vec![vec![1, 2], vec![2], vec![]]).is_ok());
    }

    #[test]
    fn induced_subposet() {
        let p = Poset::chain(4);
        let (q, old) = p.induced(&[true, false, true, true]);
        assert_eq!(old, vec![0, 2, 3]);
        assert_eq!(q, Poset::chain(3));
    }

    #[test]
    fn automorphisms() {
        // two disjoint 2-chains 0<1, 2<3; swapping them preserves order
        let p = Poset::from_upper_sets(vec![vec![1], vec![], vec![3], vec![]]).unwrap();
        assert!(p.is_automorphism(&[2, 3, 0, 1]));
        assert!(!p.is_automorphism(&[1, 0, 2, 3]));
        assert_eq!(p.first_order_violation(&[1, 0, 2, 3]), Some((0, 1)));
    }
}
