//! Maximal inflations of C5.
//!
//! An inflation is five non-empty cliques `X_0..X_4` (cyclic indices) with
//! `X_i` complete to `X_{i-1} ∪ X_{i+1}` and anticomplete to
//! `X_{i-2} ∪ X_{i+2}`. It is maximal when no outside vertex can join any
//! part without breaking those rules.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detect::{Pattern, PatternWitness};
use crate::graph::{Graph, VertexSet};

#[inline]
pub(crate) fn idx(i: usize, shift: isize) -> usize {
    (i as isize + shift).rem_euclid(5) as usize
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InflationPartition {
    pub parts: [VertexSet; 5],
    pub rest: VertexSet,
}

impl InflationPartition {
    /// The union of the five parts.
    pub fn covered(&self) -> VertexSet {
        self.parts.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b))
    }

    /// Relabels part `i` as part `i + by`.
    pub fn rotated(&self, by: usize) -> InflationPartition {
        let mut parts = [VertexSet::EMPTY; 5];
        for (i, &p) in self.parts.iter().enumerate() {
            parts[(i + by) % 5] = p;
        }
        InflationPartition {
            parts,
            rest: self.rest,
        }
    }

    /// Relabels part `i` as part `-i`.
    pub fn reflected(&self) -> InflationPartition {
        let mut parts = [VertexSet::EMPTY; 5];
        for (i, &p) in self.parts.iter().enumerate() {
            parts[idx(0, -(i as isize))] = p;
        }
        InflationPartition {
            parts,
            rest: self.rest,
        }
    }

    pub fn part_sizes(&self) -> [usize; 5] {
        self.parts.map(|p| p.len())
    }
}

/// `v` could join part `j`: complete to `X_{j-1} ∪ X_j ∪ X_{j+1}` and
/// anticomplete to `X_{j+2} ∪ X_{j+3}`.
pub fn can_absorb(g: &Graph, parts: &[VertexSet; 5], v: usize, j: usize) -> bool {
    let nb = g.neighbors(v);
    let near = parts[idx(j, -1)].union(parts[j]).union(parts[idx(j, 1)]);
    let far = parts[idx(j, 2)].union(parts[idx(j, 3)]);
    near.without(v).is_subset(nb) && far.is_disjoint(nb)
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum InflationError {
    #[error("seed is not an induced C5 of the graph")]
    InvalidSeed,
}

/// Grows the seed cycle into a maximal inflation.
///
/// Rest vertices are scanned in increasing order and offered to parts
/// `X_0..X_4` in order; after any absorption the scan restarts. The result
/// depends only on `g` and the seed.
pub fn maximal_inflation(
    g: &Graph,
    seed: &PatternWitness,
) -> Result<InflationPartition, InflationError> {
    if seed.pattern != Pattern::C5 || !seed.validate(g) {
        return Err(InflationError::InvalidSeed);
    }
    let mut parts = seed.rim().map(VertexSet::singleton);
    let mut rest = g.vertices().difference(seed.vertices());
    'scan: loop {
        for v in rest.iter() {
            if let Some(j) = (0..5).find(|&j| can_absorb(g, &parts, v, j)) {
                parts[j].insert(v);
                rest.remove(v);
                continue 'scan;
            }
        }
        break;
    }
    Ok(InflationPartition { parts, rest })
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "violation", rename_all = "snake_case")]
pub enum InflationViolation {
    EmptyPart {
        part: usize,
    },
    OutOfRange {
        vertex: usize,
    },
    Overlap {
        vertex: usize,
    },
    Uncovered {
        vertex: usize,
    },
    NotClique {
        part: usize,
        u: usize,
        v: usize,
    },
    NotComplete {
        part: usize,
        other: usize,
        u: usize,
        v: usize,
    },
    NotAnticomplete {
        part: usize,
        other: usize,
        u: usize,
        v: usize,
    },
    NotMaximal {
        vertex: usize,
        part: usize,
    },
}

/// All violated inflation conditions, maximality included. Empty means the
/// partition is a valid maximal inflation.
pub fn verify_inflation(g: &Graph, p: &InflationPartition) -> Vec<InflationViolation> {
    use InflationViolation::*;
    let mut out = Vec::new();
    let all = g.vertices();
    let mut seen = VertexSet::EMPTY;
    for set in p.parts.iter().chain(std::iter::once(&p.rest)) {
        for v in set.difference(all).iter() {
            out.push(OutOfRange { vertex: v });
        }
        for v in set.intersection(seen).iter() {
            out.push(Overlap { vertex: v });
        }
        seen = seen.union(*set);
    }
    for v in all.difference(seen).iter() {
        out.push(Uncovered { vertex: v });
    }
    if !out.is_empty() {
        return out;
    }
    for (i, &x) in p.parts.iter().enumerate() {
        if x.is_empty() {
            out.push(EmptyPart { part: i });
        }
        if let Some((u, v)) = missing_edge(g, x) {
            out.push(NotClique { part: i, u, v });
        }
        for other in [idx(i, 1)] {
            if let Some((u, v)) = cross_pair(g, x, p.parts[other], false) {
                out.push(NotComplete {
                    part: i,
                    other,
                    u,
                    v,
                });
            }
        }
        for other in [idx(i, 2)] {
            if let Some((u, v)) = cross_pair(g, x, p.parts[other], true) {
                out.push(NotAnticomplete {
                    part: i,
                    other,
                    u,
                    v,
                });
            }
        }
    }
    if !out.is_empty() {
        return out;
    }
    for v in p.rest.iter() {
        for j in 0..5 {
            if can_absorb(g, &p.parts, v, j) {
                out.push(NotMaximal { vertex: v, part: j });
            }
        }
    }
    out
}

fn missing_edge(g: &Graph, s: VertexSet) -> Option<(usize, usize)> {
    for u in s.iter() {
        if let Some(v) = s.without(u).difference(g.neighbors(u)).first() {
            return Some((u.min(v), u.max(v)));
        }
    }
    None
}

/// First pair `(u in a, v in b)` that is a non-edge (or an edge when
/// `want_edge` is true).
fn cross_pair(g: &Graph, a: VertexSet, b: VertexSet, want_edge: bool) -> Option<(usize, usize)> {
    for u in a.iter() {
        let hits = if want_edge {
            b.intersection(g.neighbors(u))
        } else {
            b.difference(g.neighbors(u))
        };
        if let Some(v) = hits.first() {
            return Some((u, v));
        }
    }
    None
}
