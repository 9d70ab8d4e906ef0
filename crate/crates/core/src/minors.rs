//! Exact clique-minor search.
//!
//! A `K_t` minor is certified by `t` pairwise disjoint branch sets, each
//! inducing a connected subgraph, with an edge between every two of them.
//!
//! The search fixes branch sets one at a time. Once `m` sets are fixed, the
//! `k = t - m` missing sets are pairwise adjacent and connected, so they all
//! live in a single component of the unused vertices, and every fixed set
//! must see at least `k` vertices of that component. Inside the component
//! the root vertex (highest degree, then lowest index) is either deleted or
//! belongs to the next branch set; in the latter case the connected sets
//! through the root are tried smallest first.

use std::time::Instant;

use serde::{Deserialize, Serialize};

use crate::graph::{Graph, VertexSet};
use crate::invariants::maximum_clique;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MinorWitness {
    pub branch_sets: Vec<VertexSet>,
}

impl MinorWitness {
    /// Order of the certified clique minor.
    pub fn order(&self) -> usize {
        self.branch_sets.len()
    }

    /// Keeps the first `t` branch sets, certifying `K_t`.
    pub fn truncated(&self, t: usize) -> MinorWitness {
        MinorWitness {
            branch_sets: self.branch_sets[..t.min(self.branch_sets.len())].to_vec(),
        }
    }
}

/// Branch sets are non-empty, inside `g`, pairwise disjoint, connected and
/// pairwise joined by an edge.
pub fn validate_minor_witness(g: &Graph, w: &MinorWitness) -> bool {
    let mut seen = VertexSet::EMPTY;
    for &b in &w.branch_sets {
        if b.is_empty() || !b.is_subset(g.vertices()) || !b.is_disjoint(seen) {
            return false;
        }
        if !g.is_connected_set(b) {
            return false;
        }
        seen = seen.union(b);
    }
    w.branch_sets.iter().enumerate().all(|(i, &a)| {
        let reach = g.neighborhood(a);
        w.branch_sets[i + 1..]
            .iter()
            .all(|&b| !reach.is_disjoint(b))
    })
}

/// Result of a possibly time-limited search.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Found(MinorWitness),
    Absent,
    BudgetExhausted,
}

/// `K_t`-minor search over one graph with an optional wall-clock deadline.
#[derive(Clone, Debug)]
pub struct MinorSearch<'a> {
    g: &'a Graph,
    deadline: Option<Instant>,
}

impl<'a> MinorSearch<'a> {
    pub fn new(g: &'a Graph) -> Self {
        MinorSearch { g, deadline: None }
    }

    pub fn with_deadline(mut self, deadline: Instant) -> Self {
        self.deadline = Some(deadline);
        self
    }

    pub fn clique_minor(&self, t: usize) -> SearchOutcome {
        let g = self.g;
        if t > g.order() {
            return SearchOutcome::Absent;
        }
        let clique = maximum_clique(g);
        if t <= clique.len() {
            let branch_sets = clique.iter().take(t).map(VertexSet::singleton).collect();
            return SearchOutcome::Found(MinorWitness { branch_sets });
        }
        let mut search = Search::new(g, t, self.deadline);
        // Most graphs of interest have a large clique; try extending it first.
        search.sets = clique.iter().map(VertexSet::singleton).collect();
        if search.extend(g.vertices().difference(clique)) {
            return SearchOutcome::Found(search.witness());
        }
        if search.timed_out {
            return SearchOutcome::BudgetExhausted;
        }
        search.sets.clear();
        if search.extend(g.vertices()) {
            SearchOutcome::Found(search.witness())
        } else if search.timed_out {
            SearchOutcome::BudgetExhausted
        } else {
            SearchOutcome::Absent
        }
    }

    /// Largest `t` with a `K_t` minor and a witness. On budget exhaustion
    /// returns the best witness found so far as `Err`.
    pub fn hadwiger_number(&self) -> Result<(usize, MinorWitness), MinorWitness> {
        let clique = maximum_clique(self.g);
        let mut best = MinorWitness {
            branch_sets: clique.iter().map(VertexSet::singleton).collect(),
        };
        loop {
            match self.clique_minor(best.order() + 1) {
                SearchOutcome::Found(w) => best = w,
                SearchOutcome::Absent => return Ok((best.order(), best)),
                SearchOutcome::BudgetExhausted => return Err(best),
            }
        }
    }
}

/// A `K_t`-minor witness if one exists.
pub fn has_clique_minor(g: &Graph, t: usize) -> Option<MinorWitness> {
    match MinorSearch::new(g).clique_minor(t) {
        SearchOutcome::Found(w) => Some(w),
        SearchOutcome::Absent => None,
        SearchOutcome::BudgetExhausted => unreachable!("no deadline set"),
    }
}

/// The Hadwiger number with a witness of that order.
pub fn hadwiger_number(g: &Graph) -> (usize, MinorWitness) {
    MinorSearch::new(g)
        .hadwiger_number()
        .unwrap_or_else(|_| unreachable!("no deadline set"))
}

struct Search<'a> {
    g: &'a Graph,
    t: usize,
    sets: Vec<VertexSet>,
    deadline: Option<Instant>,
    nodes: u64,
    timed_out: bool,
}

impl<'a> Search<'a> {
    fn new(g: &'a Graph, t: usize, deadline: Option<Instant>) -> Self {
        Search {
            g,
            t,
            sets: Vec::with_capacity(t),
            deadline,
            nodes: 0,
            timed_out: false,
        }
    }

    fn witness(&self) -> MinorWitness {
        MinorWitness {
            branch_sets: self.sets.clone(),
        }
    }

    fn out_of_time(&mut self) -> bool {
        if self.timed_out {
            return true;
        }
        self.nodes += 1;
        if self.nodes.is_multiple_of(256) {
            if let Some(d) = self.deadline {
                if Instant::now() >= d {
                    self.timed_out = true;
                }
            }
        }
        self.timed_out
    }

    fn extend(&mut self, avail: VertexSet) -> bool {
        if self.out_of_time() {
            return false;
        }
        let k = self.t - self.sets.len();
        if k == 0 {
            return true;
        }
        for comp in self.g.components(avail) {
            if !self.viable(comp, k) {
                continue;
            }
            if k == 1 {
                let last = self.shrink(comp);
                self.sets.push(last);
                return true;
            }
            if self.grow(comp, k) {
                return true;
            }
            if self.timed_out {
                return false;
            }
        }
        false
    }

    /// Necessary conditions for `k` more branch sets inside `comp`.
    fn viable(&self, comp: VertexSet, k: usize) -> bool {
        let g = self.g;
        if comp.len() < k {
            return false;
        }
        if self
            .sets
            .iter()
            .any(|&b| g.neighborhood(b).intersection(comp).len() < k)
        {
            return false;
        }
        if k >= 2 && g.edges_within(comp) < k * (k - 1) / 2 {
            return false;
        }
        // A singleton branch set needs k - 1 neighbours in `comp` and an edge
        // to every fixed set; every other set uses two or more vertices, so
        // k <= (|comp| + #singleton-capable) / 2.
        let capable = comp
            .iter()
            .filter(|&v| {
                let nb = g.neighbors(v);
                nb.intersection(comp).len() + 1 >= k && self.sets.iter().all(|b| !b.is_disjoint(nb))
            })
            .count();
        2 * k <= comp.len() + capable
    }

    fn touches_all(&self, s: VertexSet) -> bool {
        let reach = self.g.neighborhood(s);
        self.sets.iter().all(|b| !b.is_disjoint(reach))
    }

    fn grow(&mut self, comp: VertexSet, k: usize) -> bool {
        let g = self.g;
        let root = comp
            .iter()
            .max_by_key(|&v| {
                (
                    g.neighbors(v).intersection(comp).len(),
                    std::cmp::Reverse(v),
                )
            })
            .expect("component is non-empty");
        let max_size = comp.len() + 1 - k;
        let mut options = Vec::new();
        connected_sets_through(g, root, comp, max_size, &mut options);
        options.sort_unstable_by_key(|s| (s.len(), s.bits()));
        for s in options {
            if !self.touches_all(s) {
                continue;
            }
            self.sets.push(s);
            if self.extend(comp.difference(s)) {
                return true;
            }
            self.sets.pop();
            if self.timed_out {
                return false;
            }
        }
        self.extend(comp.without(root))
    }

    /// Drops vertices from the final branch set while it stays connected and
    /// adjacent to every other set.
    fn shrink(&self, mut s: VertexSet) -> VertexSet {
        for v in s.iter().collect::<Vec<_>>().into_iter().rev() {
            let smaller = s.without(v);
            if !smaller.is_empty() && self.g.is_connected_set(smaller) && self.touches_all(smaller)
            {
                s = smaller;
            }
        }
        s
    }
}

/// Every connected subset of `within` that contains `root` and has at most
/// `max_size` vertices, each exactly once.
fn connected_sets_through(
    g: &Graph,
    root: usize,
    within: VertexSet,
    max_size: usize,
    out: &mut Vec<VertexSet>,
) {
    fn rec(
        g: &Graph,
        s: VertexSet,
        excluded: VertexSet,
        within: VertexSet,
        max_size: usize,
        out: &mut Vec<VertexSet>,
    ) {
        out.push(s);
        if s.len() == max_size {
            return;
        }
        let ext = g.neighborhood(s).intersection(within).difference(excluded);
        let mut banned = excluded;
        for v in ext.iter() {
            rec(g, s.with(v), banned, within, max_size, out);
            banned.insert(v);
        }
    }
    rec(
        g,
        VertexSet::singleton(root),
        VertexSet::EMPTY,
        within,
        max_size,
        out,
    );
}
