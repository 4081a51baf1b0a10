//! Undirected edge sets over dense variable indices, and the neighborhood
//! views derived from them.

use alloc::collections::BTreeSet;
use alloc::string::String;
use alloc::vec::Vec;

use crate::error::{Error, Result};

/// Dense 0-based column index into a [`Dataset`](crate::Dataset).
pub type VariableId = usize;

/// An undirected simple graph over `d` variables.
///
/// Edges are stored as canonical `(i, j)` pairs with `i < j` in an ordered
/// set, so iteration order is lexicographic and independent of insertion
/// order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct EdgeSet {
    d: usize,
    edges: BTreeSet<(VariableId, VariableId)>,
}

/// Orders an unordered pair as `(min, max)`.
#[inline]
pub fn canonical(i: VariableId, j: VariableId) -> (VariableId, VariableId) {
    if i < j {
        (i, j)
    } else {
        (j, i)
    }
}

impl EdgeSet {
    /// The empty graph on `d` variables.
    pub fn empty(d: usize) -> Self {
        Self {
            d,
            edges: BTreeSet::new(),
        }
    }

    /// The complete graph on `d` variables.
    pub fn complete(d: usize) -> Self {
        let mut es = Self::empty(d);
        for i in 0..d {
            for j in i + 1..d {
                es.edges.insert((i, j));
            }
        }
        es
    }

    pub fn from_pairs<I>(d: usize, pairs: I) -> Result<Self>
    where
        I: IntoIterator<Item = (VariableId, VariableId)>,
    {
        let mut es = Self::empty(d);
        for (i, j) in pairs {
            es.insert(i, j)?;
        }
        Ok(es)
    }

    pub fn d(&self) -> usize {
        self.d
    }

    pub fn len(&self) -> usize {
        self.edges.len()
    }

    pub fn is_empty(&self) -> bool {
        self.edges.is_empty()
    }

    /// Number of distinct unordered pairs, `D(D-1)/2`.
    pub fn max_edges(&self) -> usize {
        pair_count(self.d)
    }

    fn check(&self, i: VariableId) -> Result<()> {
        if i >= self.d {
            Err(Error::IndexOutOfRange {
                index: i,
                d: self.d,
            })
        } else {
            Ok(())
        }
    }

    fn check_pair(&self, i: VariableId, j: VariableId) -> Result<(VariableId, VariableId)> {
        self.check(i)?;
        self.check(j)?;
        if i == j {
            return Err(Error::SelfLoop(i));
        }
        Ok(canonical(i, j))
    }

    pub fn contains(&self, i: VariableId, j: VariableId) -> bool {
        i != j && self.edges.contains(&canonical(i, j))
    }

    /// Inserts `{i, j}` in place. Returns whether the edge was new.
    pub fn insert(&mut self, i: VariableId, j: VariableId) -> Result<bool> {
        let e = self.check_pair(i, j)?;
        Ok(self.edges.insert(e))
    }

    /// Removes `{i, j}` in place. Returns whether the edge was present.
    pub fn remove(&mut self, i: VariableId, j: VariableId) -> Result<bool> {
        let e = self.check_pair(i, j)?;
        Ok(self.edges.remove(&e))
    }

    /// Returns a copy with `{i, j}` added. Idempotent on present edges.
    pub fn add_edge(&self, i: VariableId, j: VariableId) -> Result<Self> {
        let mut out = self.clone();
        out.insert(i, j)?;
        Ok(out)
    }

    /// Returns a copy with `{i, j}` removed. Idempotent on absent edges.
    pub fn remove_edge(&self, i: VariableId, j: VariableId) -> Result<Self> {
        let mut out = self.clone();
        out.remove(i, j)?;
        Ok(out)
    }

    /// Open neighborhood `N(i)`.
    pub fn neighborhood(&self, i: VariableId) -> Result<BTreeSet<VariableId>> {
        self.check(i)?;
        Ok(self
            .edges
            .iter()
            .filter_map(|&(a, b)| {
                if a == i {
                    Some(b)
                } else if b == i {
                    Some(a)
                } else {
                    None
                }
            })
            .collect())
    }

    /// Closed neighborhood `N[i] = N(i) ∪ {i}`.
    pub fn closed_neighborhood(&self, i: VariableId) -> Result<BTreeSet<VariableId>> {
        let mut n = self.neighborhood(i)?;
        n.insert(i);
        Ok(n)
    }

    /// Canonical edges in lexicographic order.
    pub fn iter(&self) -> impl Iterator<Item = (VariableId, VariableId)> + '_ {
        self.edges.iter().copied()
    }

    pub fn intersection_len(&self, other: &EdgeSet) -> usize {
        self.edges.intersection(&other.edges).count()
    }

    /// Applies the permutation `perm` (old index -> new index) to every edge.
    pub fn relabel(&self, perm: &[VariableId]) -> Result<Self> {
        if perm.len() != self.d {
            return Err(Error::DimensionMismatch {
                expected: self.d,
                found: perm.len(),
            });
        }
        Self::from_pairs(self.d, self.iter().map(|(i, j)| (perm[i], perm[j])))
    }

    /// Degree of every vertex.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = alloc::vec![0; self.d];
        for (i, j) in self.iter() {
            deg[i] += 1;
            deg[j] += 1;
        }
        deg
    }
}

pub(crate) fn pair_count(d: usize) -> usize {
    d * d.saturating_sub(1) / 2
}

/// Adjacency-list view of an [`EdgeSet`], rebuilt whenever the edge set
/// changes.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Neighborhood {
    open: Vec<BTreeSet<VariableId>>,
}

impl Neighborhood {
    pub fn new(es: &EdgeSet) -> Self {
        let mut open = alloc::vec![BTreeSet::new(); es.d()];
        for (i, j) in es.iter() {
            open[i].insert(j);
            open[j].insert(i);
        }
        Self { open }
    }

    pub fn d(&self) -> usize {
        self.open.len()
    }

    /// `N(i)`. Panics when `i` is out of range.
    pub fn open(&self, i: VariableId) -> &BTreeSet<VariableId> {
        &self.open[i]
    }

    /// `N[i]`.
    pub fn closed(&self, i: VariableId) -> BTreeSet<VariableId> {
        let mut n = self.open[i].clone();
        n.insert(i);
        n
    }

    /// `N(i) \ {j}` as a sorted vector.
    pub fn open_without(&self, i: VariableId, j: VariableId) -> Vec<VariableId> {
        self.open[i].iter().copied().filter(|&v| v != j).collect()
    }

    /// Variables outside `N[i]`.
    pub fn complement(&self, i: VariableId) -> Vec<VariableId> {
        (0..self.d())
            .filter(|&v| v != i && !self.open[i].contains(&v))
            .collect()
    }

    pub(crate) fn link(&mut self, i: VariableId, j: VariableId) {
        self.open[i].insert(j);
        self.open[j].insert(i);
    }

    pub(crate) fn unlink(&mut self, i: VariableId, j: VariableId) {
        self.open[i].remove(&j);
        self.open[j].remove(&i);
    }
}

/// The edge set a generator planted, used as the recovery target.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GroundTruth {
    pub edge_set: EdgeSet,
    pub label: String,
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::vec;
    use proptest::prelude::*;

    fn set(v: &[usize]) -> BTreeSet<usize> {
        v.iter().copied().collect()
    }

    #[test]
    fn add_edge_examples() {
        let e = EdgeSet::empty(3);
        let e1 = e.add_edge(0, 1).unwrap();
        assert_eq!(e1.iter().collect::<Vec<_>>(), vec![(0, 1)]);
        let e2 = e1.add_edge(1, 0).unwrap();
        assert_eq!(e2, e1);
        let e3 = e1.add_edge(1, 2).unwrap();
        assert_eq!(e3.iter().collect::<Vec<_>>(), vec![(0, 1), (1, 2)]);
    }

    #[test]
    fn remove_edge_examples() {
        let e = EdgeSet::from_pairs(2, [(0, 1)]).unwrap();
        assert!(e.remove_edge(0, 1).unwrap().is_empty());
        assert!(e.remove_edge(1, 0).unwrap().is_empty());
        assert!(EdgeSet::empty(2).remove_edge(0, 1).unwrap().is_empty());
    }

    #[test]
    fn neighborhood_examples() {
        let e = EdgeSet::from_pairs(3, [(0, 1), (1, 2)]).unwrap();
        assert_eq!(e.neighborhood(1).unwrap(), set(&[0, 2]));
        assert_eq!(e.neighborhood(0).unwrap(), set(&[1]));
        assert_eq!(EdgeSet::empty(3).neighborhood(0).unwrap(), set(&[]));
        assert_eq!(e.closed_neighborhood(0).unwrap(), set(&[0, 1]));
    }

    #[test]
    fn errors() {
        let e = EdgeSet::empty(3);
        assert_eq!(e.add_edge(1, 1), Err(Error::SelfLoop(1)));
        assert_eq!(
            e.add_edge(0, 3),
            Err(Error::IndexOutOfRange { index: 3, d: 3 })
        );
        assert!(e.remove_edge(5, 0).is_err());
        assert!(e.neighborhood(3).is_err());
    }

    #[test]
    fn complete_graph_size() {
        let e = EdgeSet::complete(9);
        assert_eq!(e.len(), 36);
        assert_eq!(e.max_edges(), 36);
        assert!(Neighborhood::new(&e).complement(4).is_empty());
    }

    fn arb_edges() -> impl Strategy<Value = (usize, Vec<(usize, usize)>)> {
        (2usize..8).prop_flat_map(|d| {
            let pair = (0..d, 0..d).prop_filter("no loops", |(a, b)| a != b);
            (Just(d), proptest::collection::vec(pair, 0..20))
        })
    }

    proptest! {
        #[test]
        fn neighborhood_matches_membership((d, pairs) in arb_edges()) {
            let es = EdgeSet::from_pairs(d, pairs).unwrap();
            let nb = Neighborhood::new(&es);
            for i in 0..d {
                prop_assert!(!nb.open(i).contains(&i));
                prop_assert!(nb.closed(i).contains(&i));
                prop_assert_eq!(&es.neighborhood(i).unwrap(), nb.open(i));
                for j in 0..d {
                    let adj = nb.open(i).contains(&j);
                    prop_assert_eq!(adj, nb.open(j).contains(&i));
                    prop_assert_eq!(adj, es.contains(i, j));
                }
            }
            prop_assert!(es.len() <= es.max_edges());
        }

        #[test]
        fn add_then_remove_is_identity((d, pairs) in arb_edges(), a in 0usize..8, b in 0usize..8) {
            let es = EdgeSet::from_pairs(d, pairs).unwrap();
            let (a, b) = (a % d, b % d);
            prop_assume!(a != b && !es.contains(a, b));
            let back = es.add_edge(a, b).unwrap().remove_edge(a, b).unwrap();
            prop_assert_eq!(back, es);
        }

        #[test]
        fn storage_is_canonical((d, mut pairs) in arb_edges()) {
            let fwd = EdgeSet::from_pairs(d, pairs.clone()).unwrap();
            pairs.reverse();
            let rev = EdgeSet::from_pairs(d, pairs.into_iter().map(|(a, b)| (b, a))).unwrap();
            prop_assert_eq!(fwd.iter().collect::<Vec<_>>(), rev.iter().collect::<Vec<_>>());
        }
    }
}
