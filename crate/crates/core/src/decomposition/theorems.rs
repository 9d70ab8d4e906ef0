//! Checkers for known results on graphs with independence number two,
//! used as predicates on computed invariants.

use serde::{Deserialize, Serialize};
use thiserror::Error;

use super::cover::seagull_quarters;
use crate::graph::Graph;
use crate::invariants::{chromatic_number, clique_number, independence_number};
use crate::minors::hadwiger_number;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum TheoremError {
    #[error("independence number is {alpha}, expected 2")]
    AlphaNotTwo { alpha: usize },
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Theorem2Report {
    pub n: usize,
    pub h: usize,
    pub chi: usize,
    /// `h ≥ χ`.
    pub meets_chi: bool,
    /// `h ≥ ⌈n/2⌉`.
    pub meets_half: bool,
}

impl Theorem2Report {
    /// Both sides of the equivalence agree.
    pub fn holds(&self) -> bool {
        self.meets_chi == self.meets_half
    }
}

/// For `α(g) = 2`: `h ≥ χ` exactly when `h ≥ ⌈n/2⌉`.
pub fn theorem2_check(g: &Graph) -> Result<Theorem2Report, TheoremError> {
    let alpha = independence_number(g);
    if alpha != 2 {
        return Err(TheoremError::AlphaNotTwo { alpha });
    }
    let n = g.order();
    let (h, _) = hadwiger_number(g);
    let chi = chromatic_number(g);
    Ok(Theorem2Report {
        n,
        h,
        chi,
        meets_chi: h >= chi,
        meets_half: h >= n.div_ceil(2),
    })
}

/// `ω ≥ n/4` for even `n`, `ω ≥ (n+3)/4` for odd `n`.
pub fn seagull_threshold_met(n: usize, omega: usize) -> bool {
    4 * omega >= seagull_quarters(n)
}

pub fn seagull_condition(g: &Graph) -> bool {
    seagull_threshold_met(g.order(), clique_number(g))
}

/// With `α ≤ 2`, `R(3, 6) = 18` and `R(3, 7) = 23` force `n ≤ 17` when
/// `ω ≤ 5` and `n ≤ 22` when `ω ≤ 6`.
pub fn remark6_consistent(n: usize, omega: usize) -> bool {
    !(omega <= 5 && n > 17) && !(omega <= 6 && n > 22)
}

pub fn remark6_check(g: &Graph) -> bool {
    remark6_consistent(g.order(), clique_number(g))
}
