//! Runtime checks of the structural claims, each violation paired with the
//! certificate its refutation produces.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use super::{Decomposition, Evidence};
use crate::graph::{Graph, VertexSet};
use crate::inflation::{idx, InflationPartition};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum ClaimId {
    /// `Y_i` is anticomplete to `X_i` and a clique.
    #[serde(rename = "1")]
    Claim1,
    /// `Z_i` is a clique.
    #[serde(rename = "2")]
    Claim2,
    /// Each `Z_i` vertex is anticomplete to exactly one of `X_i`, `X_{i+1}`.
    #[serde(rename = "3")]
    Claim3,
    /// `Z_{i-1}^i ∪ Y_i ∪ Z_i` and `Z_{i-1} ∪ Y_i ∪ Z_i^i` are cliques.
    #[serde(rename = "4")]
    Claim4,
    /// Each `Z_i^i` vertex is complete to `Y_{i-1}` or to `Z_{i+1}^{i+2}`.
    #[serde(rename = "5")]
    Claim5,
    /// Each `Y_i` vertex is complete to `Y_{i-1}` or to `Y_{i+2}`.
    #[serde(rename = "6")]
    Claim6,
    /// `A_2` is complete to `Y_0''`.
    #[serde(rename = "A3Y1")]
    A3Y1,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimViolation {
    pub claim: ClaimId,
    /// Cyclic index the claim was instantiated at (`0` for `A3Y1`).
    pub index: usize,
    pub vertices: Vec<usize>,
    pub evidence: Evidence,
}

/// Every claim violation, in claim order, then index, then vertex order.
/// An empty result means all claims hold.
pub fn verify_claims(g: &Graph, p: &InflationPartition, d: &Decomposition) -> Vec<ClaimViolation> {
    let mut out = Vec::new();
    let x = &p.parts;
    let push = |out: &mut Vec<ClaimViolation>, claim, index, vertices, evidence| {
        out.push(ClaimViolation {
            claim,
            index,
            vertices,
            evidence,
        })
    };

    for i in 0..5 {
        for y in d.y[i].iter() {
            let nb = g.neighbors(y);
            if !x[i].is_disjoint(nb) {
                let ev = sees_own_part(g, x, i, y);
                push(&mut out, ClaimId::Claim1, i, vec![y], ev);
            }
        }
        for (u, w) in non_edges(g, d.y[i]) {
            let ev = clique_pair_evidence(g, x, d.y[i], i, u, w);
            push(&mut out, ClaimId::Claim1, i, vec![u, w], ev);
        }
    }

    for i in 0..5 {
        for (u, w) in non_edges(g, d.z[i]) {
            let ev = claim2_evidence(g, p, i, u, w);
            push(&mut out, ClaimId::Claim2, i, vec![u, w], ev);
        }
    }

    for i in 0..5 {
        let j = idx(i, 1);
        for z in d.z[i].iter() {
            let nb = g.neighbors(z);
            match (x[i].is_disjoint(nb), x[j].is_disjoint(nb)) {
                (true, true) => {
                    let ev = Evidence::Absorbable {
                        vertex: z,
                        part: idx(i, 3),
                    };
                    push(&mut out, ClaimId::Claim3, i, vec![z], ev);
                }
                (false, false) => {
                    let mut rim = rotated_parts(x, i);
                    rim[0] = rim[0].intersection(nb);
                    rim[1] = rim[1].intersection(nb);
                    let ev = Evidence::w5_or_unexplained(g, rim, VertexSet::singleton(z));
                    push(&mut out, ClaimId::Claim3, i, vec![z], ev);
                }
                _ => {}
            }
        }
    }

    for i in 0..5 {
        let prev = idx(i, -1);
        let first = d.z_hi[prev].union(d.y[i]).union(d.z[i]);
        let second = d.z[prev].union(d.y[i]).union(d.z_lo[i]);
        // Pairs inside one Y or Z class belong to Claims 1 and 2.
        let same_class = |u: usize, w: usize| {
            [d.y[i], d.z[i], d.z[prev]]
                .iter()
                .any(|s| s.contains(u) && s.contains(w))
        };
        let pairs: BTreeSet<(usize, usize)> = non_edges(g, first)
            .into_iter()
            .chain(non_edges(g, second))
            .filter(|&(u, w)| !same_class(u, w))
            .collect();
        for (u, w) in pairs {
            let ev = clique_pair_evidence(g, x, d.y[i], i, u, w);
            push(&mut out, ClaimId::Claim4, i, vec![u, w], ev);
        }
    }

    for i in 0..5 {
        let (prev, next) = (idx(i, -1), idx(i, 1));
        for z in d.z_lo[i].iter() {
            let nb = g.neighbors(z);
            let (Some(y), Some(z2)) = (
                d.y[prev].difference(nb).first(),
                d.z_hi[next].difference(nb).first(),
            ) else {
                continue;
            };
            let ev = if !g.has_edge(y, z2) {
                Evidence::IndependentTriple {
                    vertices: [z, y, z2],
                }
            } else {
                let s = VertexSet::singleton;
                let rim = [s(y), s(z2), x[prev], s(z), x[idx(i, 2)]];
                Evidence::w5_or_unexplained(g, rim, x[idx(i, 3)])
            };
            push(&mut out, ClaimId::Claim5, i, vec![z, y, z2], ev);
        }
    }

    for i in 0..5 {
        let (prev, skip) = (idx(i, -1), idx(i, 2));
        for y in d.y[i].iter() {
            let nb = g.neighbors(y);
            let (Some(a), Some(b)) = (
                d.y[prev].difference(nb).first(),
                d.y[skip].difference(nb).first(),
            ) else {
                continue;
            };
            let ev = if !g.has_edge(a, b) {
                Evidence::IndependentTriple {
                    vertices: [y, a, b],
                }
            } else {
                let s = VertexSet::singleton;
                let rim = [s(a), s(b), x[prev], s(y), x[skip]];
                Evidence::w5_or_unexplained(g, rim, x[idx(i, 3)])
            };
            push(&mut out, ClaimId::Claim6, i, vec![y, a, b], ev);
        }
    }

    for z in d.a3.iter() {
        let nb = g.neighbors(z);
        for y1 in d.y1_dprime.difference(nb).iter() {
            let ev = match d.y[4].difference(g.neighbors(y1)).first() {
                None => Evidence::Unexplained,
                Some(y5) if !nb.contains(y5) => Evidence::IndependentTriple {
                    vertices: [z, y1, y5],
                },
                Some(y5) => {
                    let s = VertexSet::singleton;
                    let rim = [s(z), s(y5), x[2], s(y1), x[4]];
                    Evidence::w5_or_unexplained(g, rim, x[3].intersection(nb))
                }
            };
            push(&mut out, ClaimId::A3Y1, 0, vec![z, y1], ev);
        }
    }
    out
}

/// `[X_i, X_{i+1}, .., X_{i+4}]`.
fn rotated_parts(x: &[VertexSet; 5], i: usize) -> [VertexSet; 5] {
    std::array::from_fn(|k| x[idx(i, k as isize)])
}

fn non_edges(g: &Graph, s: VertexSet) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for u in s.iter() {
        for w in s.difference(g.neighbors(u)).iter().filter(|&w| w > u) {
            out.push((u, w));
        }
    }
    out
}

/// A `Y_i` vertex `y` with a neighbour in `X_i` is the hub of a wheel over
/// that neighbour and one vertex from each other part.
fn sees_own_part(g: &Graph, x: &[VertexSet; 5], i: usize, y: usize) -> Evidence {
    let mut rim = rotated_parts(x, i);
    rim[0] = rim[0].intersection(g.neighbors(y));
    Evidence::w5_or_unexplained(g, rim, VertexSet::singleton(y))
}

/// Non-adjacent `u`, `w` that should both miss a common vertex of `X_i`. If
/// no such vertex exists, one of them is a `Y_i` vertex seeing `X_i`.
fn clique_pair_evidence(
    g: &Graph,
    x: &[VertexSet; 5],
    y_i: VertexSet,
    i: usize,
    u: usize,
    w: usize,
) -> Evidence {
    if let Some(ev) = Evidence::triple_with(g, u, w, x[i]) {
        return ev;
    }
    for t in [u, w] {
        if y_i.contains(t) && !x[i].is_disjoint(g.neighbors(t)) {
            return sees_own_part(g, x, i, t);
        }
    }
    triple_or_unexplained(g, u, w, g.vertices())
}

fn triple_or_unexplained(g: &Graph, u: usize, w: usize, pool: VertexSet) -> Evidence {
    Evidence::triple_with(g, u, w, pool)
        .or_else(|| Evidence::triple_with(g, u, w, g.vertices()))
        .unwrap_or(Evidence::Unexplained)
}

/// Two non-adjacent `Z_i` vertices: a common non-neighbour in `X_i ∪
/// X_{i+1}` gives a triple; otherwise one of them is the hub of a wheel
/// over the other's non-neighbours in `X_i` and `X_{i+1}`.
fn claim2_evidence(g: &Graph, p: &InflationPartition, i: usize, u: usize, w: usize) -> Evidence {
    let x = &p.parts;
    let pair = x[i].union(x[idx(i, 1)]);
    if let Some(ev) = Evidence::triple_with(g, u, w, pair) {
        return ev;
    }
    for (miss, hub) in [(u, w), (w, u)] {
        let avoid = g.neighbors(miss);
        let keep = g.neighbors(hub);
        let mut rim = rotated_parts(x, i);
        rim[0] = rim[0].difference(avoid).intersection(keep);
        rim[1] = rim[1].difference(avoid).intersection(keep);
        if let ev @ Evidence::W5 { .. } =
            Evidence::w5_or_unexplained(g, rim, VertexSet::singleton(hub))
        {
            return ev;
        }
    }
    triple_or_unexplained(g, u, w, g.vertices())
}
