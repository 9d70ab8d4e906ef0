//! Classification of the vertices outside a maximal C5 inflation, the
//! structural claims that hold for W5-free graphs with `α = 2`, and the
//! four-clique cover built from them.
//!
//! Indices are 0-based and cyclic mod 5 throughout. For a rest vertex `v`
//! let `M(v)` be the parts containing a non-neighbour of `v`:
//!
//! * `Y_i`: `M(v) = {i}`.
//! * `Z_i`: `M(v) = {i, i+1}`; `Z_i^i` (`z_lo`) is the part anticomplete to
//!   `X_i`, `Z_i^{i+1}` (`z_hi`) the part anticomplete to `X_{i+1}`.
//!
//! The special splits use fixed indices: `A_0 / B_0` and `A_2 / B_2` divide
//! `Z_0^0` and `Z_2^2` by completeness to `Y_4` and `Y_1` respectively, and
//! `Y_0' / Y_0''` divide `Y_0` by completeness to `Y_4`. Empty reference
//! sets count as complete, so they favour `A` and `Y'`.

mod claims;
mod cover;
mod pipeline;
mod theorems;


pub use claims::{verify_claims, ClaimId, ClaimViolation};
pub use cover::{build_cover, CliqueCover, CoverCertificate, CoverError};
pub use pipeline::{
    revalidate, verify_pipeline, Anomaly, Certificate, MinorCheck, Outcome, PipelineOptions,
};
pub use theorems::{
    remark6_check, remark6_consistent, seagull_condition, seagull_threshold_met, theorem2_check,
    Theorem2Report, TheoremError,
};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::detect::{find_w5_within, PatternWitness};
use crate::graph::{Graph, VertexSet};
use crate::inflation::{can_absorb, idx, verify_inflation, InflationPartition, InflationViolation};
use crate::invariants::maximum_independent_set;

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Decomposition {
    pub y: [VertexSet; 5],
    pub z: [VertexSet; 5],
    pub z_lo: [VertexSet; 5],
    pub z_hi: [VertexSet; 5],
    pub a1: VertexSet,
    pub b1: VertexSet,
    pub a3: VertexSet,
    pub b3: VertexSet,
    pub y1_prime: VertexSet,
    pub y1_dprime: VertexSet,
}

impl Decomposition {
    pub fn y_sizes(&self) -> [usize; 5] {
        self.y.map(|s| s.len())
    }

    pub fn z_sizes(&self) -> [usize; 5] {
        self.z.map(|s| s.len())
    }

    /// Checks every membership against its defining condition, so a
    /// decomposition read back from a certificate can be trusted without
    /// re-running [`classify`].
    pub fn check_definitions(&self, g: &Graph, p: &InflationPartition) -> Result<(), String> {
        let x = p.covered();
        let mut seen = VertexSet::EMPTY;
        for s in self.y.iter().chain(self.z.iter()) {
            if !s.is_disjoint(seen) {
                return Err("Y/Z classes overlap".into());
            }
            seen = seen.union(*s);
        }
        if seen != p.rest {
            return Err("Y/Z classes do not cover the rest vertices".into());
        }
        for i in 0..5 {
            for v in self.y[i].iter() {
                if missed_parts(g, p, v) != [i] {
                    return Err(format!("vertex {v} does not fit Y_{i}"));
                }
            }
            for v in self.z[i].iter() {
                if missed_parts(g, p, v) != sorted_pair(i, idx(i, 1)) {
                    return Err(format!("vertex {v} does not fit Z_{i}"));
                }
            }
            let lo = self.z[i].filter(|v| g.anticomplete_to(VertexSet::singleton(v), p.parts[i]));
            let hi = self.z[i]
                .filter(|v| g.anticomplete_to(VertexSet::singleton(v), p.parts[idx(i, 1)]));
            if lo != self.z_lo[i] || hi != self.z_hi[i] || !lo.is_disjoint(hi) {
                return Err(format!("Z_{i} split is wrong"));
            }
            if lo.union(hi) != self.z[i] {
                return Err(format!("Z_{i} split is not total"));
            }
        }
        let (a1, b1) = split_complete(g, self.z_lo[0], self.y[4]);
        let (a3, b3) = split_complete(g, self.z_lo[2], self.y[1]);
        let (y1p, y1dp) = split_complete(g, self.y[0], self.y[4]);
        if (a1, b1, a3, b3) != (self.a1, self.b1, self.a3, self.b3) {
            return Err("A/B split is wrong".into());
        }
        if (y1p, y1dp) != (self.y1_prime, self.y1_dprime) {
            return Err("Y' / Y'' split is wrong".into());
        }
        if !x.is_disjoint(p.rest) {
            return Err("rest overlaps the inflation".into());
        }
        Ok(())
    }
}

trait Filter {
    fn filter(self, f: impl FnMut(usize) -> bool) -> VertexSet;
}

impl Filter for VertexSet {
    fn filter(self, mut f: impl FnMut(usize) -> bool) -> VertexSet {
        self.iter().filter(|&v| f(v)).collect()
    }
}

fn sorted_pair(a: usize, b: usize) -> Vec<usize> {
    vec![a.min(b), a.max(b)]
}

/// Parts containing a non-neighbour of `v`, increasing.
fn missed_parts(g: &Graph, p: &InflationPartition, v: usize) -> Vec<usize> {
    let nb = g.neighbors(v);
    (0..5).filter(|&i| !p.parts[i].is_subset(nb)).collect()
}

/// Splits `s` into the vertices complete to `reference` and the rest.
fn split_complete(g: &Graph, s: VertexSet, reference: VertexSet) -> (VertexSet, VertexSet) {
    let complete = s.filter(|v| reference.is_subset(g.neighbors(v)));
    (complete, s.difference(complete))
}

/// Checkable evidence that some structural statement failed.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Evidence {
    /// An induced wheel.
    W5 { witness: PatternWitness },
    /// Three pairwise non-adjacent vertices.
    IndependentTriple { vertices: [usize; 3] },
    /// A rest vertex that fits part `part` of the inflation.
    Absorbable { vertex: usize, part: usize },
    /// No certificate could be assembled.
    Unexplained,
}

impl Evidence {
    pub fn validate(&self, g: &Graph, p: &InflationPartition) -> bool {
        match self {
            Evidence::W5 { witness } => {
                witness.pattern == crate::detect::Pattern::W5 && witness.validate(g)
            }
            Evidence::IndependentTriple {
                vertices: [a, b, c],
            } => {
                let s = VertexSet::from_slice(&[*a, *b, *c]);
                s.len() == 3 && s.is_subset(g.vertices()) && g.is_independent(s)
            }
            Evidence::Absorbable { vertex, part } => {
                *part < 5
                    && *vertex < g.order()
                    && p.rest.contains(*vertex)
                    && can_absorb(g, &p.parts, *vertex, *part)
            }
            Evidence::Unexplained => false,
        }
    }

    /// An induced W5 with rim position `i` from `rim[i]` and hub from `hub`,
    /// or `Unexplained`.
    pub(crate) fn w5_or_unexplained(g: &Graph, rim: [VertexSet; 5], hub: VertexSet) -> Evidence {
        match find_w5_within(g, rim, hub) {
            Some(witness) => Evidence::W5 { witness },
            None => Evidence::Unexplained,
        }
    }

    /// A vertex of `pool` missing both `u` and `v`, as an independent triple.
    pub(crate) fn triple_with(g: &Graph, u: usize, v: usize, pool: VertexSet) -> Option<Evidence> {
        if g.has_edge(u, v) || u == v {
            return None;
        }
        let w = pool
            .difference(g.neighbors(u))
            .difference(g.neighbors(v))
            .without(u)
            .without(v)
            .first()?;
        Some(Evidence::IndependentTriple {
            vertices: [u, v, w],
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum ClassifyError {
    #[error("independence number exceeds two")]
    AlphaExceeded { independent: Vec<usize> },
    #[error("partition is not a valid maximal inflation")]
    InvalidPartition { violations: Vec<InflationViolation> },
    #[error("rest vertex {vertex} fits no class")]
    Unclassifiable { vertex: usize, evidence: Evidence },
}

/// Sorts every rest vertex into its `Y` or `Z` class and computes the
/// `Z_i^i / Z_i^{i+1}`, `A / B` and `Y' / Y''` splits.
///
/// A vertex that fits no class is reported with a certificate: a W5 when it
/// is complete to all of `X` or sees both ends of its `Z` pair, an
/// independent triple when it misses non-consecutive parts, and an
/// absorbable placement when it is anticomplete to both parts of its pair.
pub fn classify(g: &Graph, p: &InflationPartition) -> Result<Decomposition, ClassifyError> {
    let indep = maximum_independent_set(g);
    if indep.len() > 2 {
        return Err(ClassifyError::AlphaExceeded {
            independent: indep.to_vec(),
        });
    }
    let violations = verify_inflation(g, p);
    if !violations.is_empty() {
        return Err(ClassifyError::InvalidPartition { violations });
    }
    let mut d = Decomposition::default();
    for v in p.rest.iter() {
        let nb = g.neighbors(v);
        let missed = missed_parts(g, p, v);
        let fail = |evidence| ClassifyError::Unclassifiable {
            vertex: v,
            evidence,
        };
        match missed.as_slice() {
            [] => {
                let rim = p.parts;
                return Err(fail(Evidence::w5_or_unexplained(
                    g,
                    rim,
                    VertexSet::singleton(v),
                )));
            }
            [i] => d.y[*i].insert(v),
            [a, b] if idx(*a, 1) == *b || idx(*b, 1) == *a => {
                let i = if idx(*a, 1) == *b { *a } else { *b };
                let j = idx(i, 1);
                let lo = p.parts[i].is_disjoint(nb);
                let hi = p.parts[j].is_disjoint(nb);
                match (lo, hi) {
                    (true, true) => {
                        return Err(fail(Evidence::Absorbable {
                            vertex: v,
                            part: idx(i, 3),
                        }))
                    }
                    (false, false) => {
                        let mut rim = p.parts;
                        rim[i] = rim[i].intersection(nb);
                        rim[j] = rim[j].intersection(nb);
                        return Err(fail(Evidence::w5_or_unexplained(
                            g,
                            rim,
                            VertexSet::singleton(v),
                        )));
                    }
                    (true, false) => d.z_lo[i].insert(v),
                    (false, true) => d.z_hi[i].insert(v),
                }
                d.z[i].insert(v);
            }
            _ => {
                // Two missed parts that are not cyclically adjacent are
                // anticomplete to each other.
                let (a, b) = non_consecutive(&missed);
                let u = p.parts[a].difference(nb).first().unwrap();
                let w = p.parts[b].difference(nb).first().unwrap();
                return Err(fail(Evidence::IndependentTriple {
                    vertices: [v, u, w],
                }));
            }
        }
    }
    (d.a1, d.b1) = split_complete(g, d.z_lo[0], d.y[4]);
    (d.a3, d.b3) = split_complete(g, d.z_lo[2], d.y[1]);
    (d.y1_prime, d.y1_dprime) = split_complete(g, d.y[0], d.y[4]);
    Ok(d)
}

/// Two members of `missed` (at least two distinct parts, or three or more)
/// that are not cyclic neighbours.
fn non_consecutive(missed: &[usize]) -> (usize, usize) {
    for (k, &a) in missed.iter().enumerate() {
        for &b in &missed[k + 1..] {
            if idx(a, 1) != b && idx(b, 1) != a {
                return (a, b);
            }
        }
    }
    unreachable!("three parts of a 5-cycle always include a non-adjacent pair")
}
