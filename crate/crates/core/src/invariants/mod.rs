//! Exact independence, clique and chromatic numbers and maximum matchings.
//!
//! The chromatic number has two independent routes: a matching formula valid
//! when the independence number is at most two, and a general branch and
//! bound. Tests cross-check them.

mod clique;
mod coloring;
mod matching;

use serde::{Deserialize, Serialize};

pub use clique::{clique_number, independence_number, maximum_clique, maximum_independent_set};
pub use coloring::{
    chromatic_number, coloring_branch_and_bound, coloring_via_matching, optimal_coloring, Coloring,
};
pub use matching::{max_matching, maximum_matching};

use crate::graph::Graph;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InvariantReport {
    pub n: usize,
    pub alpha: usize,
    pub omega: usize,
    pub chi: usize,
}

impl InvariantReport {
    pub fn compute(g: &Graph) -> Self {
        InvariantReport {
            n: g.order(),
            alpha: independence_number(g),
            omega: clique_number(g),
            chi: chromatic_number(g),
        }
    }
}

#[cfg(test)]
mod tests;
