//! The k-uniform hypergraph data model and its local query primitives:
//! links, codegrees, degrees, and exact edge density.

use crate::error::{Error, Result};
use num_rational::Ratio;

/// A k-uniform hypergraph on vertices `0..n`.
///
/// Edges are stored order-normalized and duplicate-free, so two structurally
/// equal hypergraphs compare equal with derived `Eq`/`Hash`. For hosts with at
/// most 128 vertices every edge is a fixed-width bitmask and membership tests
/// are word operations; larger hosts fall back to sorted vertex tuples.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    k: usize,
    n: usize,
    store: EdgeStore,
}

#[derive(Clone, PartialEq, Eq, Hash)]
enum EdgeStore {
    /// Sorted ascending; numeric order on masks is colex order on sets.
    Bits(Vec<u128>),
    /// Sorted lexicographically.
    Tuples(Vec<Box<[u32]>>),
}

pub(crate) fn mask_of(vertices: &[usize]) -> u128 {
    let mut m = 0u128;
    for &v in vertices {
        m |= 1u128 << v;
    }
    m
}

pub(crate) fn unmask(mut m: u128) -> Vec<usize> {
    let mut out = Vec::with_capacity(m.count_ones() as usize);
    while m != 0 {
        let v = m.trailing_zeros() as usize;
        out.push(v);
        m &= m - 1;
    }
    out
}

impl Hypergraph {
    /// Builds a normalized hypergraph, collapsing duplicate edges.
    ///
    /// Rejects edges with a repeated vertex, wrong cardinality, or an
    /// out-of-range vertex, each with its own error variant.
    pub fn new<I, E>(k: usize, n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        if k < 2 {
            return Err(Error::InvalidUniformity(k));
        }
        let mut sorted_edges: Vec<Vec<usize>> = Vec::new();
        for e in edges {
            sorted_edges.push(Self::check_edge(k, n, e.as_ref())?);
        }
        Ok(Self::from_checked(k, n, sorted_edges))
    }

    fn check_edge(k: usize, n: usize, e: &[usize]) -> Result<Vec<usize>> {
        if e.len() != k {
            return Err(Error::WrongEdgeSize {
                edge: e.to_vec(),
                got: e.len(),
                expected: k,
            });
        }
        let mut s = e.to_vec();
        s.sort_unstable();
        if s.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex { edge: e.to_vec() });
        }
        if let Some(&v) = s.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    edge: e.to_vec(),
                    vertex: v,
                    n,
                });
            }
        }
        Ok(s)
    }

    /// Edges must already be sorted vertex lists of length k within range.
    pub(crate) fn from_checked(k: usize, n: usize, edges: Vec<Vec<usize>>) -> Self {
        let store = if n <= 128 {
            let mut masks: Vec<u128> = edges.iter().map(|e| mask_of(e)).collect();
            masks.sort_unstable();
            masks.dedup();
            EdgeStore::Bits(masks)
        } else {
            let mut tuples: Vec<Box<[u32]>> = edges
                .iter()
                .map(|e| e.iter().map(|&v| v as u32).collect())
                .collect();
            tuples.sort_unstable();
            tuples.dedup();
            EdgeStore::Tuples(tuples)
        };
        Hypergraph { k, n, store }
    }

    /// The hypergraph with no edges.
    pub fn empty(k: usize, n: usize) -> Result<Self> {
        Self::new(k, n, std::iter::empty::<Vec<usize>>())
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_count(&self) -> usize {
        match &self.store {
            EdgeStore::Bits(v) => v.len(),
            EdgeStore::Tuples(v) => v.len(),
        }
    }

    /// Iterates edges as sorted vertex lists, in normalized storage order.
    pub fn edges(&self) -> impl Iterator<Item = Vec<usize>> + '_ {
        let (bits, tuples) = match &self.store {
            EdgeStore::Bits(v) => (Some(v.iter()), None),
            EdgeStore::Tuples(v) => (None, Some(v.iter())),
        };
        bits.into_iter()
            .flatten()
            .map(|&m| unmask(m))
            .chain(
                tuples
                    .into_iter()
                    .flatten()
                    .map(|t| t.iter().map(|&v| v as usize).collect()),
            )
    }

    /// Edges as sorted vertex lists, sorted lexicographically.
    ///
    /// This is the canonical order used by the file writers.
    pub fn edge_list(&self) -> Vec<Vec<usize>> {
        let mut out: Vec<Vec<usize>> = self.edges().collect();
        out.sort_unstable();
        out
    }

    /// Membership test; the query may be unsorted but must be duplicate-free.
    pub fn has_edge(&self, vertices: &[usize]) -> bool {
        if vertices.len() != self.k || vertices.iter().any(|&v| v >= self.n) {
            return false;
        }
        match &self.store {
            EdgeStore::Bits(masks) => {
                let m = mask_of(vertices);
                if m.count_ones() as usize != self.k {
                    return false;
                }
                masks.binary_search(&m).is_ok()
            }
            EdgeStore::Tuples(tuples) => {
                let mut s: Vec<u32> = vertices.iter().map(|&v| v as u32).collect();
                s.sort_unstable();
                if s.windows(2).any(|w| w[0] == w[1]) {
                    return false;
                }
                tuples.binary_search_by(|t| t.as_ref().cmp(s.as_slice())).is_ok()
            }
        }
    }

    /// Edge masks for hosts with n <= 128, sorted ascending.
    pub(crate) fn edge_masks(&self) -> Option<&[u128]> {
        match &self.store {
            EdgeStore::Bits(v) => Some(v),
            EdgeStore::Tuples(_) => None,
        }
    }

    pub fn degree(&self, v: usize) -> usize {
        match &self.store {
            EdgeStore::Bits(masks) => {
                let bit = 1u128 << v;
                masks.iter().filter(|&&m| m & bit != 0).count()
            }
            EdgeStore::Tuples(tuples) => {
                let v = v as u32;
                tuples.iter().filter(|t| t.contains(&v)).count()
            }
        }
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0usize; self.n];
        for e in self.edges() {
            for v in e {
                d[v] += 1;
            }
        }
        d
    }

    /// Minimum vertex degree; errors on an empty vertex set.
    pub fn min_degree(&self) -> Result<usize> {
        if self.n == 0 {
            return Err(Error::EmptyVertexSet);
        }
        Ok(self.degrees().into_iter().min().unwrap())
    }

    /// The link of a (k-1)-subset `s`: all vertices `v` with `s + {v}` an edge.
    ///
    /// The size of the result is the codegree of `s`.
    pub fn link(&self, s: &KSubset) -> Result<Vec<usize>> {
        s.validate(self.k - 1, self.n)?;
        let mut out = Vec::new();
        match &self.store {
            EdgeStore::Bits(masks) => {
                let sm = mask_of(s.elements());
                for &m in masks {
                    if m & sm == sm {
                        out.push((m & !sm).trailing_zeros() as usize);
                    }
                }
                out.sort_unstable();
            }
            EdgeStore::Tuples(_) => {
                for e in self.edges() {
                    if s.elements().iter().all(|v| e.contains(v)) {
                        let extra = e.iter().copied().find(|v| !s.elements().contains(v));
                        if let Some(v) = extra {
                            out.push(v);
                        }
                    }
                }
                out.sort_unstable();
                out.dedup();
            }
        }
        Ok(out)
    }

    /// All (k-1)-subsets drawn from the common link of every input tuple.
    ///
    /// A subset `w` qualifies when every vertex of `w` completes every tuple
    /// of `tuples` to an edge.
    pub fn common_link(&self, tuples: &[KSubset]) -> Result<Vec<KSubset>> {
        let mut common: Option<Vec<usize>> = None;
        for s in tuples {
            let l = self.link(s)?;
            common = Some(match common {
                None => l,
                Some(c) => c.into_iter().filter(|v| l.contains(v)).collect(),
            });
        }
        let common = common.unwrap_or_else(|| (0..self.n).collect());
        let mut out = Vec::new();
        for combo in crate::util::combinations(&common, self.k - 1) {
            out.push(KSubset::from_sorted(combo));
        }
        Ok(out)
    }

    /// Exact edge density e(H) / C(n, k).
    pub fn edge_density(&self) -> Result<Ratio<i64>> {
        if self.n < self.k {
            return Err(Error::HostTooSmall { n: self.n, k: self.k });
        }
        let denom = crate::util::binomial(self.n, self.k)?;
        Ok(Ratio::new(self.edge_count() as i64, denom))
    }

    /// Union with additional edges (validated like `new`).
    pub fn with_edges<I, E>(&self, extra: I) -> Result<Self>
    where
        I: IntoIterator<Item = E>,
        E: AsRef<[usize]>,
    {
        let mut all: Vec<Vec<usize>> = self.edges().collect();
        for e in extra {
            all.push(Self::check_edge(self.k, self.n, e.as_ref())?);
        }
        Ok(Self::from_checked(self.k, self.n, all))
    }

    /// True when every edge of `self` is an edge of `other`.
    pub fn is_edge_subset_of(&self, other: &Hypergraph) -> bool {
        self.k == other.k
            && self.n <= other.n
            && self.edges().all(|e| other.has_edge(&e))
    }

    /// Relabels vertices by `perm` (vertex v becomes perm[v]).
    pub fn permuted(&self, perm: &[usize]) -> Hypergraph {
        assert_eq!(perm.len(), self.n, "permutation length must equal n");
        let edges: Vec<Vec<usize>> = self
            .edges()
            .map(|e| {
                let mut img: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
                img.sort_unstable();
                img
            })
            .collect();
        Hypergraph::from_checked(self.k, self.n, edges)
    }
}

impl std::fmt::Debug for Hypergraph {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "Hypergraph(k={}, n={}, edges={:?})", self.k, self.n, self.edge_list())
    }
}

/// A sorted, duplicate-free tuple of vertex indices.
///
/// Carrier for link arguments, pigeonhole keys, and next-rung candidates;
/// the expected size (k or k-1) is checked at each use site.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KSubset {
    elems: Vec<usize>,
}

impl KSubset {
    /// Sorts the input and rejects duplicates.
    pub fn new(mut elems: Vec<usize>) -> Result<Self> {
        elems.sort_unstable();
        if elems.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::RepeatedVertex { edge: elems });
        }
        Ok(KSubset { elems })
    }

    pub(crate) fn from_sorted(elems: Vec<usize>) -> Self {
        debug_assert!(elems.windows(2).all(|w| w[0] < w[1]));
        KSubset { elems }
    }

    pub fn elements(&self) -> &[usize] {
        &self.elems
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        self.elems.is_empty()
    }

    fn validate(&self, expected: usize, n: usize) -> Result<()> {
        if self.elems.len() != expected {
            return Err(Error::WrongSubsetSize {
                subset: self.elems.clone(),
                got: self.elems.len(),
                expected,
            });
        }
        if let Some(&v) = self.elems.last() {
            if v >= n {
                return Err(Error::VertexOutOfRange {
                    edge: self.elems.clone(),
                    vertex: v,
                    n,
                });
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::constructions;

    #[test]
    fn smallest_nonempty_case() {
        let h = Hypergraph::new(3, 3, [[0, 1, 2]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.edge_list(), vec![vec![0, 1, 2]]);
    }

    #[test]
    fn duplicate_edges_collapse() {
        let h = Hypergraph::new(3, 4, [[0, 1, 2], [2, 1, 0]]).unwrap();
        assert_eq!(h.edge_count(), 1);
    }

    #[test]
    fn rejects_repeated_vertex() {
        let err = Hypergraph::new(3, 3, [[0, 1, 1]]).unwrap_err();
        assert!(matches!(err, Error::RepeatedVertex { .. }));
    }

    #[test]
    fn rejects_wrong_cardinality() {
        let err = Hypergraph::new(3, 4, [vec![0, 1]]).unwrap_err();
        assert!(matches!(err, Error::WrongEdgeSize { got: 2, .. }));
    }

    #[test]
    fn rejects_out_of_range_vertex() {
        let err = Hypergraph::new(3, 3, [[0, 1, 3]]).unwrap_err();
        assert!(matches!(err, Error::VertexOutOfRange { vertex: 3, .. }));
    }

    #[test]
    fn normalization_is_idempotent() {
        let h = Hypergraph::new(3, 5, [[4, 1, 0], [2, 3, 4], [0, 1, 4]]).unwrap();
        let rebuilt = Hypergraph::new(3, 5, h.edge_list()).unwrap();
        assert_eq!(h, rebuilt);
    }

    #[test]
    fn link_of_complete_graph() {
        let h = constructions::complete(3, 5).unwrap();
        let l = h.graph.link(&KSubset::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(l, vec![2, 3, 4]);
    }

    #[test]
    fn link_of_single_edge_miss() {
        let h = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        let l = h.link(&KSubset::new(vec![0, 3]).unwrap()).unwrap();
        assert!(l.is_empty());
    }

    #[test]
    fn link_in_zycle() {
        // rung 0 of the length-2 zycle is completed exactly by rung 1
        let z = constructions::zycle(3, 2).unwrap();
        let l = z.graph.link(&KSubset::new(vec![0, 1]).unwrap()).unwrap();
        assert_eq!(l, vec![2, 3]);
    }

    #[test]
    fn link_rejects_wrong_size() {
        let h = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        let err = h.link(&KSubset::new(vec![0]).unwrap()).unwrap_err();
        assert!(matches!(err, Error::WrongSubsetSize { .. }));
    }

    #[test]
    fn common_link_examples() {
        let c6 = constructions::complete(3, 6).unwrap().graph;
        let ws = c6.common_link(&[KSubset::new(vec![0, 1]).unwrap()]).unwrap();
        assert_eq!(ws.len(), 6); // 2-subsets of {2,3,4,5}

        let single = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        let ws = single
            .common_link(&[KSubset::new(vec![0, 1]).unwrap()])
            .unwrap();
        assert!(ws.is_empty()); // link is one vertex, no 2-subset

        let (b, _) = constructions::blow_up(&single, 2).unwrap();
        // copies of base vertices 0 and 1 are {0,1} and {2,3}; of 2: {4,5}
        let ws = b.common_link(&[KSubset::new(vec![0, 2]).unwrap()]).unwrap();
        assert_eq!(ws, vec![KSubset::new(vec![4, 5]).unwrap()]);
    }

    #[test]
    fn min_degree_examples() {
        assert_eq!(constructions::complete(3, 5).unwrap().graph.min_degree().unwrap(), 6);
        let single = Hypergraph::new(3, 4, [[0, 1, 2]]).unwrap();
        assert_eq!(single.min_degree().unwrap(), 0);
        assert_eq!(constructions::zycle(3, 2).unwrap().graph.min_degree().unwrap(), 3);
        assert!(matches!(
            Hypergraph::empty(3, 0).unwrap().min_degree(),
            Err(Error::EmptyVertexSet)
        ));
    }

    #[test]
    fn density_examples() {
        use num_rational::Ratio;
        assert_eq!(
            constructions::complete(3, 5).unwrap().graph.edge_density().unwrap(),
            Ratio::from_integer(1)
        );
        assert_eq!(
            Hypergraph::empty(3, 5).unwrap().edge_density().unwrap(),
            Ratio::from_integer(0)
        );
        assert_eq!(
            constructions::dj_construction(4).unwrap().graph.edge_density().unwrap(),
            Ratio::new(1, 2)
        );
        assert!(matches!(
            Hypergraph::empty(3, 2).unwrap().edge_density(),
            Err(Error::HostTooSmall { .. })
        ));
    }

    #[test]
    fn degree_sum_is_k_times_edges() {
        let z = constructions::zycle(3, 3).unwrap().graph;
        let total: usize = z.degrees().iter().sum();
        assert_eq!(total, 3 * z.edge_count());
    }

    #[test]
    fn large_host_tuple_fallback() {
        let h = Hypergraph::new(3, 200, [[0, 1, 2], [150, 199, 2]]).unwrap();
        assert_eq!(h.edge_count(), 2);
        assert!(h.has_edge(&[199, 150, 2]));
        assert!(!h.has_edge(&[0, 1, 3]));
        let l = h.link(&KSubset::new(vec![2, 150]).unwrap()).unwrap();
        assert_eq!(l, vec![199]);
        let rebuilt = Hypergraph::new(3, 200, h.edge_list()).unwrap();
        assert_eq!(h, rebuilt);
    }
}
