//! The four cliques covering every vertex, with parts `X_3` and `X_4`
//! counted twice.
//!
//! With 0-based parts:
//!
//! * `h1 = X_2 ∪ X_3 ∪ Y_4 ∪ Z_4 ∪ Y_0' ∪ A_0`
//! * `h2 = X_3 ∪ X_4 ∪ B_0 ∪ Z_0^1 ∪ Y_1 ∪ Z_1`
//! * `h3 = X_0 ∪ X_1 ∪ B_2 ∪ Z_2^3 ∪ Y_3 ∪ Z_3`
//! * `h4 = X_4 ∪ Y_0'' ∪ Y_2 ∪ A_2`

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::Decomposition;
use crate::detect::is_w5_free;
use crate::graph::{Graph, VertexSet};
use crate::inflation::InflationPartition;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CliqueCover {
    pub h1: VertexSet,
    pub h2: VertexSet,
    pub h3: VertexSet,
    pub h4: VertexSet,
}

impl CliqueCover {
    pub fn assemble(p: &InflationPartition, d: &Decomposition) -> CliqueCover {
        let x = &p.parts;
        let union = |sets: &[VertexSet]| sets.iter().fold(VertexSet::EMPTY, |a, &b| a.union(b));
        CliqueCover {
            h1: union(&[x[2], x[3], d.y[4], d.z[4], d.y1_prime, d.a1]),
            h2: union(&[x[3], x[4], d.b1, d.z_hi[0], d.y[1], d.z[1]]),
            h3: union(&[x[0], x[1], d.b3, d.z_hi[2], d.y[3], d.z[3]]),
            h4: union(&[x[4], d.y1_dprime, d.y[2], d.a3]),
        }
    }

    pub fn sets(&self) -> [VertexSet; 4] {
        [self.h1, self.h2, self.h3, self.h4]
    }
}

/// A verified cover together with the numbers of the clique bound.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoverCertificate {
    pub cover: CliqueCover,
    pub n: usize,
    pub sizes: [usize; 4],
    /// `|X_3|` and `|X_4|`, the parts lying in two cliques.
    pub double_counted: [usize; 2],
    pub size_sum: usize,
    pub max_size: usize,
    /// `⌈(n + 2) / 4⌉`.
    pub cover_bound: usize,
    /// Four times the clique size that guarantees the conjecture for this
    /// `n`: `n` when even, `n + 3` when odd.
    pub seagull_quarters: usize,
}

impl CoverCertificate {
    /// Re-checks the cover against the graph and the arithmetic of the
    /// bound.
    pub fn check(
        &self,
        g: &Graph,
        p: &InflationPartition,
        d: &Decomposition,
    ) -> Result<(), String> {
        if self.cover != CliqueCover::assemble(p, d) {
            return Err("cover sets differ from the decomposition".into());
        }
        let n = g.order();
        let sets = self.cover.sets();
        if let Some(k) = (0..4).find(|&k| !g.is_clique(sets[k])) {
            return Err(format!("h{} is not a clique", k + 1));
        }
        let sizes = sets.map(|s| s.len());
        let doubled = [p.parts[3].len(), p.parts[4].len()];
        let sum: usize = sizes.iter().sum();
        let max = *sizes.iter().max().unwrap();
        let expected = (
            n,
            sizes,
            doubled,
            sum,
            max,
            (n + 2).div_ceil(4),
            seagull_quarters(n),
        );
        let found = (
            self.n,
            self.sizes,
            self.double_counted,
            self.size_sum,
            self.max_size,
            self.cover_bound,
            self.seagull_quarters,
        );
        if expected != found {
            return Err("recorded sizes or bounds are wrong".into());
        }
        if sum != n + doubled[0] + doubled[1] {
            return Err("size identity fails".into());
        }
        if 4 * max < n + 2 || max < self.cover_bound || 4 * self.cover_bound < self.seagull_quarters
        {
            return Err("bound chain fails".into());
        }
        Ok(())
    }
}

pub(crate) fn seagull_quarters(n: usize) -> usize {
    if n.is_multiple_of(2) {
        n
    } else {
        n + 3
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Error, Serialize, Deserialize)]
#[serde(tag = "error", rename_all = "snake_case")]
pub enum CoverError {
    /// `cover` is 1-based. `host_w5_free` separates a broken precondition
    /// (false) from a genuine failure of the construction (true).
    #[error("h{cover} is not a clique: {u} and {v} are non-adjacent")]
    NotClique {
        cover: usize,
        u: usize,
        v: usize,
        host_w5_free: bool,
    },
    #[error("cover sizes sum to {sum}, expected {expected}")]
    CountMismatch { sum: usize, expected: usize },
}

/// Assembles the four cliques, checks each is a clique and checks the size
/// identity `Σ|h_j| = n + |X_3| + |X_4|`.
pub fn build_cover(
    g: &Graph,
    p: &InflationPartition,
    d: &Decomposition,
) -> Result<CoverCertificate, CoverError> {
    let cover = CliqueCover::assemble(p, d);
    let sets = cover.sets();
    for (k, &h) in sets.iter().enumerate() {
        for u in h.iter() {
            if let Some(v) = h.difference(g.neighbors(u)).without(u).first() {
                return Err(CoverError::NotClique {
                    cover: k + 1,
                    u: u.min(v),
                    v: u.max(v),
                    host_w5_free: is_w5_free(g),
                });
            }
        }
    }
    let n = g.order();
    let sizes = sets.map(|s| s.len());
    let double_counted = [p.parts[3].len(), p.parts[4].len()];
    let size_sum = sizes.iter().sum();
    let expected = n + double_counted[0] + double_counted[1];
    if size_sum != expected {
        return Err(CoverError::CountMismatch {
            sum: size_sum,
            expected,
        });
    }
    let max_size = *sizes.iter().max().unwrap();
    let cover_bound = (n + 2).div_ceil(4);
    debug_assert!(max_size >= cover_bound);
    Ok(CoverCertificate {
        cover,
        n,
        sizes,
        double_counted,
        size_sum,
        max_size,
        cover_bound,
        seagull_quarters: seagull_quarters(n),
    })
}
