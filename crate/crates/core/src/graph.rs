//! Dense simple graphs on at most 128 vertices.
//!
//! Every vertex owns one 128-bit adjacency row, so neighbourhood
//! intersections, completeness tests and clique checks are a handful of
//! word operations. Graphs are immutable once built; use [`GraphBuilder`]
//! to assemble one and the derived-graph methods to obtain new values.

use std::fmt;

use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

/// Largest vertex count a [`Graph`] can hold.
pub const MAX_VERTICES: usize = 128;

/// A set of vertices stored as a 128-bit mask.
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u128);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    #[inline]
    pub const fn from_bits(bits: u128) -> Self {
        VertexSet(bits)
    }

    #[inline]
    pub const fn bits(self) -> u128 {
        self.0
    }

    /// `{0, 1, ..., n-1}`.
    #[inline]
    pub const fn prefix(n: usize) -> Self {
        if n >= 128 {
            VertexSet(u128::MAX)
        } else {
            VertexSet((1u128 << n) - 1)
        }
    }

    #[inline]
    pub const fn singleton(v: usize) -> Self {
        VertexSet(1u128 << v)
    }

    /// Builds a set from vertex ids.
    ///
    /// # Panics
    /// Panics if an id is `>= 128`.
    pub fn from_slice(vs: &[usize]) -> Self {
        vs.iter().copied().collect()
    }

    #[inline]
    pub const fn contains(self, v: usize) -> bool {
        v < 128 && (self.0 >> v) & 1 == 1
    }

    #[inline]
    pub fn insert(&mut self, v: usize) {
        self.0 |= 1u128 << v;
    }

    #[inline]
    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1u128 << v);
    }

    #[inline]
    pub const fn with(self, v: usize) -> Self {
        VertexSet(self.0 | (1u128 << v))
    }

    #[inline]
    pub const fn without(self, v: usize) -> Self {
        VertexSet(self.0 & !(1u128 << v))
    }

    #[inline]
    pub const fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    #[inline]
    pub const fn is_empty(self) -> bool {
        self.0 == 0
    }

    #[inline]
    pub const fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    #[inline]
    pub const fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    #[inline]
    pub const fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    #[inline]
    pub const fn is_disjoint(self, other: Self) -> bool {
        self.0 & other.0 == 0
    }

    #[inline]
    pub const fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Smallest member.
    #[inline]
    pub const fn first(self) -> Option<usize> {
        if self.0 == 0 {
            None
        } else {
            Some(self.0.trailing_zeros() as usize)
        }
    }

    /// Members in increasing order.
    #[inline]
    pub fn iter(self) -> Members {
        Members(self.0)
    }

    pub fn to_vec(self) -> Vec<usize> {
        self.iter().collect()
    }
}

/// Iterator over the members of a [`VertexSet`], ascending.
#[derive(Clone)]
pub struct Members(u128);

impl Iterator for Members {
    type Item = usize;

    #[inline]
    fn next(&mut self) -> Option<usize> {
        if self.0 == 0 {
            return None;
        }
        let v = self.0.trailing_zeros() as usize;
        self.0 &= self.0 - 1;
        Some(v)
    }

    fn size_hint(&self) -> (usize, Option<usize>) {
        let n = self.0.count_ones() as usize;
        (n, Some(n))
    }
}

impl ExactSizeIterator for Members {}

impl IntoIterator for VertexSet {
    type Item = usize;
    type IntoIter = Members;

    fn into_iter(self) -> Members {
        self.iter()
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            assert!(v < MAX_VERTICES, "vertex {v} does not fit in a VertexSet");
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_set().entries(self.iter()).finish()
    }
}

impl Serialize for VertexSet {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(self.iter())
    }
}

impl<'de> Deserialize<'de> for VertexSet {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let vs = Vec::<usize>::deserialize(d)?;
        if let Some(&v) = vs.iter().find(|&&v| v >= MAX_VERTICES) {
            return Err(serde::de::Error::custom(format!("vertex {v} out of range")));
        }
        Ok(vs.into_iter().collect())
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    rows: Vec<VertexSet>,
}

impl Graph {
    /// Edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Result<Graph, GraphError> {
        Ok(GraphBuilder::new(n)?.build())
    }

    /// Graph from an edge list. Duplicate edges are ignored.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Graph, GraphError> {
        let mut b = GraphBuilder::new(n)?;
        for &(u, v) in edges {
            b.add_edge(u, v)?;
        }
        Ok(b.build())
    }

    /// Builds a graph from raw adjacency rows, checking symmetry and
    /// irreflexivity.
    pub fn from_rows(rows: Vec<VertexSet>) -> Result<Graph, GraphError> {
        let n = rows.len();
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        let all = VertexSet::prefix(n);
        for (v, row) in rows.iter().enumerate() {
            if row.contains(v) {
                return Err(GraphError::SelfLoop { v });
            }
            if let Some(u) = row.difference(all).first() {
                return Err(GraphError::VertexOutOfRange { v: u, n });
            }
            for u in row.iter() {
                if !rows[u].contains(v) {
                    return Err(GraphError::Asymmetric { u: v, v: u });
                }
            }
        }
        Ok(Graph { rows })
    }

    #[inline]
    pub fn order(&self) -> usize {
        self.rows.len()
    }

    #[inline]
    pub fn vertices(&self) -> VertexSet {
        VertexSet::prefix(self.rows.len())
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    #[inline]
    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    /// Vertices other than `v` that are not adjacent to `v`.
    #[inline]
    pub fn non_neighbors(&self, v: usize) -> VertexSet {
        self.vertices().difference(self.rows[v]).without(v)
    }

    #[inline]
    pub fn degree(&self, v: usize) -> usize {
        self.rows[v].len()
    }

    pub fn rows(&self) -> &[VertexSet] {
        &self.rows
    }

    pub fn edge_count(&self) -> usize {
        self.rows.iter().map(|r| r.len()).sum::<usize>() / 2
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.rows.iter().enumerate().flat_map(|(u, row)| {
            row.difference(VertexSet::prefix(u + 1))
                .iter()
                .map(move |v| (u, v))
        })
    }

    /// Union of the neighbourhoods of `s`, minus `s` itself.
    pub fn neighborhood(&self, s: VertexSet) -> VertexSet {
        let mut acc = VertexSet::EMPTY;
        for v in s.iter() {
            acc = acc.union(self.rows[v]);
        }
        acc.difference(s)
    }

    /// Number of edges with both ends in `s`.
    pub fn edges_within(&self, s: VertexSet) -> usize {
        s.iter()
            .map(|v| self.rows[v].intersection(s).len())
            .sum::<usize>()
            / 2
    }

    fn check_set(&self, s: VertexSet) -> Result<(), GraphError> {
        match s.difference(self.vertices()).first() {
            Some(v) => Err(GraphError::VertexOutOfRange { v, n: self.order() }),
            None => Ok(()),
        }
    }

    /// The subgraph induced by `s`, relabelled to `0..|s|` in increasing
    /// order of the original labels. The second component maps new labels
    /// back to the originals.
    pub fn induced_subgraph(&self, s: VertexSet) -> Result<(Graph, Vec<usize>), GraphError> {
        self.check_set(s)?;
        let back = s.to_vec();
        let rows = back
            .iter()
            .map(|&orig| {
                back.iter()
                    .enumerate()
                    .filter(|&(_, &w)| self.rows[orig].contains(w))
                    .map(|(i, _)| i)
                    .collect()
            })
            .collect();
        Ok((Graph { rows }, back))
    }

    /// Subgraph induced by an ordered vertex list; new vertex `i` is
    /// `order[i]`. Used to read off pattern images.
    pub fn induced_by_sequence(&self, order: &[usize]) -> Result<Graph, GraphError> {
        let mut seen = VertexSet::EMPTY;
        for &v in order {
            if v >= self.order() {
                return Err(GraphError::VertexOutOfRange { v, n: self.order() });
            }
            if seen.contains(v) {
                return Err(GraphError::DuplicateVertex { v });
            }
            seen.insert(v);
        }
        let rows = order
            .iter()
            .map(|&a| {
                order
                    .iter()
                    .enumerate()
                    .filter(|&(_, &b)| self.rows[a].contains(b))
                    .map(|(j, _)| j)
                    .collect()
            })
            .collect();
        Ok(Graph { rows })
    }

    pub fn complement(&self) -> Graph {
        let all = self.vertices();
        let rows = self
            .rows
            .iter()
            .enumerate()
            .map(|(v, row)| all.difference(*row).without(v))
            .collect();
        Graph { rows }
    }

    /// Relabels so that old vertex `v` becomes `perm[v]`.
    pub fn permuted(&self, perm: &[usize]) -> Graph {
        debug_assert_eq!(perm.len(), self.order());
        let mut rows = vec![VertexSet::EMPTY; self.order()];
        for (v, row) in self.rows.iter().enumerate() {
            rows[perm[v]] = row.iter().map(|u| perm[u]).collect();
        }
        Graph { rows }
    }

    /// Graph with `v` deleted and higher labels shifted down by one.
    pub fn without_vertex(&self, v: usize) -> Graph {
        self.induced_subgraph(self.vertices().without(v))
            .expect("vertex set is in range")
            .0
    }

    /// Every vertex of `a` is adjacent to every vertex of `b`.
    pub fn is_complete(&self, a: VertexSet, b: VertexSet) -> Result<bool, GraphError> {
        self.check_pair(a, b)?;
        Ok(self.complete_to(a, b))
    }

    /// No vertex of `a` is adjacent to a vertex of `b`.
    pub fn is_anticomplete(&self, a: VertexSet, b: VertexSet) -> Result<bool, GraphError> {
        self.check_pair(a, b)?;
        Ok(self.anticomplete_to(a, b))
    }

    fn check_pair(&self, a: VertexSet, b: VertexSet) -> Result<(), GraphError> {
        self.check_set(a)?;
        self.check_set(b)?;
        if !a.is_disjoint(b) {
            return Err(GraphError::OverlappingSets);
        }
        Ok(())
    }

    /// Unchecked form of [`Graph::is_complete`] for internal hot paths.
    #[inline]
    pub(crate) fn complete_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| b.is_subset(self.rows[v]))
    }

    #[inline]
    pub(crate) fn anticomplete_to(&self, a: VertexSet, b: VertexSet) -> bool {
        a.iter().all(|v| self.rows[v].is_disjoint(b))
    }

    /// Pairwise adjacent (vacuously true for `|s| <= 1`).
    pub fn is_clique(&self, s: VertexSet) -> bool {
        s.iter().all(|v| s.without(v).is_subset(self.rows[v]))
    }

    /// Pairwise non-adjacent.
    pub fn is_independent(&self, s: VertexSet) -> bool {
        s.iter().all(|v| self.rows[v].is_disjoint(s))
    }

    /// `s` induces a connected subgraph. The empty set is not connected.
    pub fn is_connected_set(&self, s: VertexSet) -> bool {
        match s.first() {
            None => false,
            Some(v) => self.component_of(v, s) == s,
        }
    }

    /// Vertices reachable from `v` inside `within` (which must contain `v`).
    pub fn component_of(&self, v: usize, within: VertexSet) -> VertexSet {
        let mut reached = VertexSet::singleton(v);
        let mut frontier = reached;
        while !frontier.is_empty() {
            let next = self.neighborhood(frontier).intersection(within);
            frontier = next.difference(reached);
            reached = reached.union(frontier);
        }
        reached
    }

    /// Connected components of `G[within]`, ordered by smallest member.
    pub fn components(&self, within: VertexSet) -> Vec<VertexSet> {
        let mut left = within;
        let mut out = Vec::new();
        while let Some(v) = left.first() {
            let c = self.component_of(v, left);
            left = left.difference(c);
            out.push(c);
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges=", self.order())?;
        f.debug_list().entries(self.edges()).finish()?;
        write!(f, ")")
    }
}

/// Mutable staging area for a [`Graph`].
#[derive(Clone, Debug)]
pub struct GraphBuilder {
    rows: Vec<VertexSet>,
}

impl GraphBuilder {
    pub fn new(n: usize) -> Result<Self, GraphError> {
        if n > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n });
        }
        Ok(GraphBuilder {
            rows: vec![VertexSet::EMPTY; n],
        })
    }

    /// Starts from an existing graph.
    pub fn from_graph(g: &Graph) -> Self {
        GraphBuilder {
            rows: g.rows.clone(),
        }
    }

    pub fn order(&self) -> usize {
        self.rows.len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.rows[u].contains(v)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        self.rows[v]
    }

    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<&mut Self, GraphError> {
        let n = self.rows.len();
        for w in [u, v] {
            if w >= n {
                return Err(GraphError::VertexOutOfRange { v: w, n });
            }
        }
        if u == v {
            return Err(GraphError::SelfLoop { v });
        }
        self.rows[u].insert(v);
        self.rows[v].insert(u);
        Ok(self)
    }

    /// Appends a vertex adjacent to `nbrs`; returns its id.
    pub fn add_vertex(&mut self, nbrs: VertexSet) -> Result<usize, GraphError> {
        let v = self.rows.len();
        if v + 1 > MAX_VERTICES {
            return Err(GraphError::TooManyVertices { n: v + 1 });
        }
        if let Some(u) = nbrs.difference(VertexSet::prefix(v)).first() {
            return Err(GraphError::VertexOutOfRange { v: u, n: v + 1 });
        }
        for u in nbrs.iter() {
            self.rows[u].insert(v);
        }
        self.rows.push(nbrs);
        Ok(v)
    }

    pub fn build(self) -> Graph {
        Graph { rows: self.rows }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, wheel};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;

    fn set(vs: &[usize]) -> VertexSet {
        VertexSet::from_slice(vs)
    }

    #[test]
    fn induced_examples() {
        let c5 = cycle(5);
        assert_eq!(c5.induced_subgraph(c5.vertices()).unwrap().0, c5);

        let w5 = wheel(5);
        let (rim, back) = w5.induced_subgraph(set(&[0, 1, 2, 3, 4])).unwrap();
        assert_eq!(rim, c5);
        assert_eq!(back, vec![0, 1, 2, 3, 4]);

        let k5 = complete(5);
        assert_eq!(k5.induced_subgraph(set(&[0, 2, 4])).unwrap().0, complete(3));
    }

    #[test]
    fn induced_rejects_out_of_range() {
        let c5 = cycle(5);
        assert_eq!(
            c5.induced_subgraph(set(&[1, 7])).unwrap_err(),
            GraphError::VertexOutOfRange { v: 7, n: 5 }
        );
    }

    #[test]
    fn complement_examples() {
        assert_eq!(complete(5).complement(), Graph::empty(5).unwrap());
        // 0-1-2-3-4-0 complements to 0-2-4-1-3-0.
        let c5 = cycle(5);
        let comp = c5.complement();
        let expect = Graph::from_edges(5, &[(0, 2), (2, 4), (4, 1), (1, 3), (3, 0)]).unwrap();
        assert_eq!(comp, expect);
        assert_eq!(comp.permuted(&[0, 3, 1, 4, 2]), c5);
    }

    #[test]
    fn completeness_examples() {
        let w5 = wheel(5);
        let rim = set(&[0, 1, 2, 3, 4]);
        assert!(w5.is_complete(set(&[5]), rim).unwrap());

        let c5 = cycle(5);
        assert!(c5.is_anticomplete(set(&[0]), set(&[2, 3])).unwrap());
        assert!(!c5.is_complete(set(&[0]), set(&[1, 2])).unwrap());
        assert_eq!(
            c5.is_complete(set(&[0, 1]), set(&[1, 2])),
            Err(GraphError::OverlappingSets)
        );
    }

    #[test]
    fn clique_examples() {
        let c5 = cycle(5);
        assert!(c5.is_clique(VertexSet::EMPTY));
        assert!(c5.is_clique(set(&[0, 1])));
        assert!(!c5.is_clique(set(&[0, 1, 2])));
    }

    #[test]
    fn builder_rejects_bad_edges() {
        let mut b = GraphBuilder::new(3).unwrap();
        assert_eq!(b.add_edge(1, 1).unwrap_err(), GraphError::SelfLoop { v: 1 });
        assert!(b.add_edge(0, 3).is_err());
        assert!(GraphBuilder::new(129).is_err());
    }

    #[test]
    fn from_rows_checks_symmetry() {
        let rows = vec![set(&[1]), VertexSet::EMPTY];
        assert!(matches!(
            Graph::from_rows(rows),
            Err(GraphError::Asymmetric { .. })
        ));
    }

    #[test]
    fn components_and_connectivity() {
        let g = Graph::from_edges(6, &[(0, 1), (1, 2), (3, 4)]).unwrap();
        let comps = g.components(g.vertices());
        assert_eq!(comps, vec![set(&[0, 1, 2]), set(&[3, 4]), set(&[5])]);
        assert!(g.is_connected_set(set(&[0, 1, 2])));
        assert!(!g.is_connected_set(set(&[0, 2])));
        assert!(!g.is_connected_set(VertexSet::EMPTY));
    }

    proptest! {
        #[test]
        fn complement_is_involution(g in arb_graph(20)) {
            prop_assert_eq!(g.complement().complement(), g);
        }

        #[test]
        fn induced_preserves_adjacency(g in arb_graph(16), mask in any::<u16>()) {
            let s = VertexSet::from_bits(mask as u128).intersection(g.vertices());
            let (h, back) = g.induced_subgraph(s).unwrap();
            prop_assert_eq!(h.order(), s.len());
            for i in 0..h.order() {
                for j in 0..h.order() {
                    prop_assert_eq!(h.has_edge(i, j), g.has_edge(back[i], back[j]));
                }
            }
        }

        #[test]
        fn clique_iff_pairwise_complete(g in arb_graph(12), mask in any::<u16>()) {
            let s = VertexSet::from_bits(mask as u128).intersection(g.vertices());
            let vs = s.to_vec();
            let pairwise = vs.iter().enumerate().all(|(i, &a)| {
                vs[i + 1..].iter().all(|&b| {
                    g.is_complete(VertexSet::singleton(a), VertexSet::singleton(b)).unwrap()
                })
            });
            prop_assert_eq!(g.is_clique(s), pairwise);
        }
    }
}
