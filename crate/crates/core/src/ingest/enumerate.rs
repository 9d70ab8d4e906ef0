//! Isomorph-free enumeration of graphs with independence number at most
//! two, as complements of triangle-free graphs.
//!
//! Triangle-free classes on `k + 1` vertices are obtained from those on `k`
//! by adding a vertex joined to an independent set (every triangle-free
//! graph arises this way by deleting any vertex). Children are deduplicated
//! by canonical key, so each class is produced exactly once.

use std::collections::HashSet;

use thiserror::Error;

use super::canon::{canonical_labelling, CanonicalKey};
use crate::graph::{Graph, GraphBuilder, VertexSet};

pub const MAX_ENUMERATION_ORDER: usize = 10;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum EnumerateError {
    #[error("exhaustive enumeration supports n <= {MAX_ENUMERATION_ORDER}, got {n}")]
    TooLarge { n: usize },
}

/// Canonical representatives of the triangle-free classes on `n` vertices.
pub fn triangle_free_classes(n: usize) -> Result<Vec<Graph>, EnumerateError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::TooLarge { n });
    }
    let mut level = vec![Graph::empty(0).unwrap()];
    for _ in 0..n {
        level = Children::new(level).collect();
    }
    Ok(level)
}

/// One graph per isomorphism class of `n`-vertex graphs with `α ≤ 2`, in a
/// fixed order. Classes on `n - 1` vertices are built eagerly; the last
/// level streams.
pub fn enumerate_alpha2(n: usize) -> Result<Alpha2Stream, EnumerateError> {
    if n > MAX_ENUMERATION_ORDER {
        return Err(EnumerateError::TooLarge { n });
    }
    let inner = if n == 0 {
        Inner::Single(Some(Graph::empty(0).unwrap()))
    } else {
        Inner::Children(Children::new(triangle_free_classes(n - 1)?))
    };
    Ok(Alpha2Stream { inner })
}

pub struct Alpha2Stream {
    inner: Inner,
}

enum Inner {
    Single(Option<Graph>),
    Children(Children),
}

impl Iterator for Alpha2Stream {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        match &mut self.inner {
            Inner::Single(g) => g.take(),
            Inner::Children(c) => c.next().map(|t| t.complement()),
        }
    }
}

/// Triangle-free one-vertex extensions of `parents`, new classes only.
struct Children {
    parents: std::vec::IntoIter<Graph>,
    current: Option<(Graph, Vec<VertexSet>)>,
    seen: HashSet<CanonicalKey>,
}

impl Children {
    fn new(parents: Vec<Graph>) -> Self {
        Children {
            parents: parents.into_iter(),
            current: None,
            seen: HashSet::new(),
        }
    }
}

impl Iterator for Children {
    type Item = Graph;

    fn next(&mut self) -> Option<Graph> {
        loop {
            if let Some((parent, sets)) = &mut self.current {
                while let Some(s) = sets.pop() {
                    let mut b = GraphBuilder::from_graph(parent);
                    b.add_vertex(s)
                        .expect("parent order is below the vertex limit");
                    let child = b.build();
                    let (key, pos) = canonical_labelling(&child);
                    if self.seen.insert(key) {
                        return Some(child.permuted(&pos));
                    }
                }
            }
            let parent = self.parents.next()?;
            // Reversed so that popping yields increasing bitmask order.
            let mut sets = independent_sets(&parent);
            sets.reverse();
            self.current = Some((parent, sets));
        }
    }
}

fn independent_sets(g: &Graph) -> Vec<VertexSet> {
    let n = g.order();
    (0u128..1 << n)
        .map(VertexSet::from_bits)
        .filter(|&s| g.is_independent(s))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ingest::canon::canonical_key;
    use crate::invariants::independence_number;
    use crate::testutil::all_labelled;

    /// Labelled graphs filtered to `α ≤ 2`, deduplicated by canonical key.
    fn naive_count(n: usize) -> usize {
        all_labelled(n)
            .filter(|g| independence_number(g) <= 2)
            .map(|g| canonical_key(&g))
            .collect::<HashSet<_>>()
            .len()
    }

    #[test]
    fn small_counts() {
        let count = |n| enumerate_alpha2(n).unwrap().count();
        assert_eq!(count(1), 1);
        assert_eq!(count(3), 3);
        assert_eq!(count(4), 7);
    }

    #[test]
    fn matches_naive_oracle_up_to_six() {
        for n in 0..=6 {
            assert_eq!(
                enumerate_alpha2(n).unwrap().count(),
                naive_count(n),
                "n = {n}"
            );
        }
    }

    #[test]
    fn known_counts_through_eight() {
        // Triangle-free graphs up to isomorphism.
        let known = [1, 1, 2, 3, 7, 14, 38, 107, 410];
        for (n, &k) in known.iter().enumerate() {
            let graphs: Vec<Graph> = enumerate_alpha2(n).unwrap().collect();
            assert_eq!(graphs.len(), k, "n = {n}");
            let keys: HashSet<_> = graphs.iter().map(canonical_key).collect();
            assert_eq!(keys.len(), k);
            assert!(graphs
                .iter()
                .all(|g| g.order() == n && independence_number(g) <= 2));
        }
    }

    #[test]
    fn deterministic_order() {
        let a: Vec<Graph> = enumerate_alpha2(7).unwrap().collect();
        let b: Vec<Graph> = enumerate_alpha2(7).unwrap().collect();
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_large_n() {
        assert_eq!(
            enumerate_alpha2(11).err(),
            Some(EnumerateError::TooLarge { n: 11 })
        );
    }
}
