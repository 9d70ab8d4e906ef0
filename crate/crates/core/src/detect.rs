//! Induced-pattern search, dominating edges and the co-star construction
//! around an induced wheel.
//!
//! Named patterns use fixed labellings:
//!
//! * `C5`: the cycle `0-1-2-3-4-0`.
//! * `W5`: rim `0..5` as in `C5`, hub `5`.
//! * `CoStar5`: clique `0..5`, vertex `5` anticomplete to it.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::families::{co_star5, cycle, wheel};
use crate::graph::{Graph, GraphBuilder, VertexSet};
use crate::invariants::maximum_independent_set;

/// Largest pattern [`find_induced`] accepts.
pub const MAX_PATTERN_ORDER: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Pattern {
    C5,
    W5,
    CoStar5,
    Custom {
        n: usize,
        edges: Vec<(usize, usize)>,
    },
}

impl Pattern {
    pub fn graph(&self) -> Result<Graph, DetectError> {
        match self {
            Pattern::C5 => Ok(cycle(5)),
            Pattern::W5 => Ok(wheel(5)),
            Pattern::CoStar5 => Ok(co_star5()),
            Pattern::Custom { n, edges } => {
                Graph::from_edges(*n, edges).map_err(|_| DetectError::MalformedPattern)
            }
        }
    }

    pub fn custom(g: &Graph) -> Pattern {
        Pattern::Custom {
            n: g.order(),
            edges: g.edges().collect(),
        }
    }
}

/// An induced copy of a pattern: pattern vertex `i` sits on host vertex
/// `mapping[i]`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PatternWitness {
    pub pattern: Pattern,
    pub mapping: Vec<usize>,
}

impl PatternWitness {
    /// The mapping is injective into `g` and reproduces the pattern's edges
    /// and non-edges exactly.
    pub fn validate(&self, g: &Graph) -> bool {
        let Ok(p) = self.pattern.graph() else {
            return false;
        };
        if self.mapping.len() != p.order() {
            return false;
        }
        match g.induced_by_sequence(&self.mapping) {
            Ok(image) => image == p,
            Err(_) => false,
        }
    }

    pub fn vertices(&self) -> VertexSet {
        self.mapping.iter().copied().collect()
    }

    /// For a `W5` witness: the hub.
    pub fn hub(&self) -> usize {
        self.mapping[5]
    }

    /// For `C5`/`W5` witnesses: the rim in cyclic order.
    pub fn rim(&self) -> [usize; 5] {
        [
            self.mapping[0],
            self.mapping[1],
            self.mapping[2],
            self.mapping[3],
            self.mapping[4],
        ]
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum DetectError {
    #[error("pattern has {order} vertices; at most {MAX_PATTERN_ORDER} supported")]
    PatternTooLarge { order: usize },
    #[error("pattern edge list is malformed")]
    MalformedPattern,
}

/// First induced copy of `pattern` in `g`, or `None` if there is none.
///
/// Pattern vertices are placed in order of decreasing degree (then index);
/// host candidates are filtered through the neighbourhood rows of already
/// placed vertices, where pattern non-edges prune exactly like edges.
pub fn find_induced(g: &Graph, pattern: &Graph) -> Result<Option<Vec<usize>>, DetectError> {
    let k = pattern.order();
    if k > MAX_PATTERN_ORDER {
        return Err(DetectError::PatternTooLarge { order: k });
    }
    if k > g.order() {
        return Ok(None);
    }
    let mut order: Vec<usize> = (0..k).collect();
    order.sort_by_key(|&p| (std::cmp::Reverse(pattern.degree(p)), p));
    let mut placed = vec![usize::MAX; k];
    if place(g, pattern, &order, 0, VertexSet::EMPTY, &mut placed) {
        Ok(Some(placed))
    } else {
        Ok(None)
    }
}

fn place(
    g: &Graph,
    pattern: &Graph,
    order: &[usize],
    depth: usize,
    used: VertexSet,
    placed: &mut [usize],
) -> bool {
    if depth == order.len() {
        return true;
    }
    let p = order[depth];
    let mut cand = g.vertices().difference(used);
    for &q in &order[..depth] {
        let host = g.neighbors(placed[q]);
        cand = if pattern.has_edge(p, q) {
            cand.intersection(host)
        } else {
            cand.difference(host)
        };
    }
    let need = pattern.degree(p);
    for h in cand.iter() {
        if g.degree(h) < need {
            continue;
        }
        placed[p] = h;
        if place(g, pattern, order, depth + 1, used.with(h), placed) {
            return true;
        }
    }
    placed[p] = usize::MAX;
    false
}

/// First induced copy of `pattern` with pattern vertex `i` drawn from
/// `candidates[i]`, trying pattern vertices in index order and candidates
/// in increasing order.
pub fn find_induced_within(
    g: &Graph,
    pattern: &Graph,
    candidates: &[VertexSet],
) -> Option<Vec<usize>> {
    fn go(
        g: &Graph,
        pattern: &Graph,
        candidates: &[VertexSet],
        placed: &mut Vec<usize>,
        used: VertexSet,
    ) -> bool {
        let p = placed.len();
        if p == pattern.order() {
            return true;
        }
        let mut cand = candidates[p].intersection(g.vertices()).difference(used);
        for (q, &h) in placed.iter().enumerate() {
            cand = if pattern.has_edge(p, q) {
                cand.intersection(g.neighbors(h))
            } else {
                cand.difference(g.neighbors(h))
            };
        }
        for h in cand.iter() {
            placed.push(h);
            if go(g, pattern, candidates, placed, used.with(h)) {
                return true;
            }
            placed.pop();
        }
        false
    }
    assert_eq!(candidates.len(), pattern.order());
    let mut placed = Vec::with_capacity(pattern.order());
    go(g, pattern, candidates, &mut placed, VertexSet::EMPTY).then_some(placed)
}

/// An induced `W5` whose rim position `i` comes from `rim[i]` and whose
/// hub comes from `hub`.
pub fn find_w5_within(g: &Graph, rim: [VertexSet; 5], hub: VertexSet) -> Option<PatternWitness> {
    let mut cands = rim.to_vec();
    cands.push(hub);
    find_induced_within(g, &wheel(5), &cands).map(|mapping| PatternWitness {
        pattern: Pattern::W5,
        mapping,
    })
}

/// First induced copy of a named pattern.
pub fn find_pattern(g: &Graph, pattern: Pattern) -> Option<PatternWitness> {
    let pg = pattern.graph().expect("named patterns are well formed");
    find_induced(g, &pg)
        .expect("named patterns fit the search")
        .map(|mapping| PatternWitness { pattern, mapping })
}

pub fn find_c5(g: &Graph) -> Option<PatternWitness> {
    find_pattern(g, Pattern::C5)
}

pub fn find_w5(g: &Graph) -> Option<PatternWitness> {
    find_pattern(g, Pattern::W5)
}

pub fn is_w5_free(g: &Graph) -> bool {
    find_w5(g).is_none()
}

/// Every vertex other than `u`, `v` is adjacent to `u` or `v`.
pub fn is_dominating_edge(g: &Graph, u: usize, v: usize) -> bool {
    g.has_edge(u, v)
        && g.vertices()
            .without(u)
            .without(v)
            .is_subset(g.neighbors(u).union(g.neighbors(v)))
}

/// Lexicographically smallest dominating edge `(u, v)`, `u < v`.
pub fn dominating_edge(g: &Graph) -> Option<(usize, usize)> {
    g.edges().find(|&(u, v)| is_dominating_edge(g, u, v))
}

/// Outcome of the co-star construction around an induced `W5`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Cor7Result {
    /// The spoke `hub - rim` dominates the graph.
    DominatingEdge { hub: usize, rim: usize },
    /// `mapping = [y_1, ..., y_5, hub]` induces the complement of `K_{1,5}`.
    CoStar { witness: PatternWitness },
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Cor7Error {
    #[error("independence number exceeds two: {independent:?} is independent")]
    AlphaExceeded { independent: Vec<usize> },
    #[error("the supplied W5 witness is not an induced W5")]
    InvalidWitness,
    #[error("rim positions {i} and {j} admit no distinct representatives; both are forced onto {vertex}")]
    Collision { i: usize, j: usize, vertex: usize },
    #[error("constructed vertex set {mapping:?} does not induce the complement of K_1,5")]
    NotCoStar { mapping: Vec<usize> },
}

/// Given an induced `W5` in a graph with independence number at most two,
/// either exhibits a dominating spoke or builds vertices `y_1..y_5` with
/// `y_i` non-adjacent to the rim vertex `x_i` and to the hub; together with
/// the hub they induce the complement of `K_{1,5}`.
///
/// Among valid choices of pairwise distinct `y_i` the lexicographically
/// smallest tuple is used, which is the lowest-index candidate per position
/// whenever those are already distinct.
pub fn corollary7_witness(g: &Graph, w5: &PatternWitness) -> Result<Cor7Result, Cor7Error> {
    if w5.pattern != Pattern::W5 || !w5.validate(g) {
        return Err(Cor7Error::InvalidWitness);
    }
    let independent = maximum_independent_set(g);
    if independent.len() > 2 {
        return Err(Cor7Error::AlphaExceeded {
            independent: independent.to_vec(),
        });
    }
    let z = w5.hub();
    let rim = w5.rim();
    if let Some(&x) = rim.iter().find(|&&x| is_dominating_edge(g, z, x)) {
        return Ok(Cor7Result::DominatingEdge { hub: z, rim: x });
    }
    // A non-dominating spoke z-x_i leaves some vertex missing both ends; it
    // lies off the wheel because every rim vertex is adjacent to z.
    let candidates: Vec<VertexSet> = rim
        .iter()
        .map(|&x| g.non_neighbors(z).intersection(g.non_neighbors(x)))
        .collect();
    let mut chosen = [usize::MAX; 5];
    if !distinct_representatives(&candidates, 0, VertexSet::EMPTY, &mut chosen) {
        return Err(collision(&candidates));
    }
    let mut mapping = chosen.to_vec();
    mapping.push(z);
    let witness = PatternWitness {
        pattern: Pattern::CoStar5,
        mapping,
    };
    if !witness.validate(g) {
        return Err(Cor7Error::NotCoStar {
            mapping: witness.mapping,
        });
    }
    Ok(Cor7Result::CoStar { witness })
}

fn distinct_representatives(
    candidates: &[VertexSet],
    i: usize,
    used: VertexSet,
    chosen: &mut [usize; 5],
) -> bool {
    if i == candidates.len() {
        return true;
    }
    for y in candidates[i].difference(used).iter() {
        chosen[i] = y;
        if distinct_representatives(candidates, i + 1, used.with(y), chosen) {
            return true;
        }
    }
    false
}

fn collision(candidates: &[VertexSet]) -> Cor7Error {
    let firsts: Vec<Option<usize>> = candidates.iter().map(|c| c.first()).collect();
    for i in 0..5 {
        for j in i + 1..5 {
            if firsts[i].is_some() && firsts[i] == firsts[j] {
                return Cor7Error::Collision {
                    i,
                    j,
                    vertex: firsts[i].unwrap(),
                };
            }
        }
    }
    // Hall's condition failed on a larger family; report the first pair that
    // shares its only candidates.
    for i in 0..5 {
        for j in i + 1..5 {
            if let Some(v) = candidates[i].intersection(candidates[j]).first() {
                return Cor7Error::Collision { i, j, vertex: v };
            }
        }
    }
    unreachable!("disjoint non-empty candidate sets always have representatives")
}

/// Builds the 11-vertex host used to exercise the co-star branch: a `W5`
/// (rim `0..5`, hub `5`) plus `y_i = 6 + i` adjacent to every rim vertex but
/// `x_i`, to every other `y_j`, and not to the hub.
pub fn co_star_host() -> Graph {
    let mut b = GraphBuilder::from_graph(&wheel(5));
    for i in 0..5 {
        let rim = VertexSet::prefix(5).without(i);
        let earlier_ys = VertexSet::from_bits(((1u128 << i) - 1) << 6);
        b.add_vertex(rim.union(earlier_ys)).unwrap();
    }
    b.build()
}
