use serde::{Deserialize, Serialize};

use super::clique::{clique_number, independence_number};
use super::matching::maximum_matching;
use crate::graph::{Graph, VertexSet};

/// A vertex colouring; `colors[v]` is in `0..count`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Coloring {
    pub colors: Vec<usize>,
    pub count: usize,
}

impl Coloring {
    /// Adjacent vertices differ, every colour is `< count`, and the
    /// colouring covers exactly the vertices of `g`.
    pub fn is_proper(&self, g: &Graph) -> bool {
        self.colors.len() == g.order()
            && self.colors.iter().all(|&c| c < self.count)
            && g.edges().all(|(u, v)| self.colors[u] != self.colors[v])
    }

    pub fn classes(&self) -> Vec<VertexSet> {
        let mut out = vec![VertexSet::EMPTY; self.count];
        for (v, &c) in self.colors.iter().enumerate() {
            out[c].insert(v);
        }
        out
    }
}

/// An optimal colouring. Graphs with independence number at most two are
/// coloured through a maximum matching of the complement; everything else
/// goes through branch and bound.
pub fn optimal_coloring(g: &Graph) -> Coloring {
    coloring_via_matching(g).unwrap_or_else(|| coloring_branch_and_bound(g))
}

pub fn chromatic_number(g: &Graph) -> usize {
    optimal_coloring(g).count
}

/// When every independent set has at most two vertices, colour classes are
/// singletons or non-adjacent pairs, so an optimal colouring is a maximum
/// matching of the complement plus singletons: `chi = n - nu(complement)`.
/// Returns `None` if the independence number exceeds two.
pub fn coloring_via_matching(g: &Graph) -> Option<Coloring> {
    if independence_number(g) > 2 {
        return None;
    }
    let n = g.order();
    let mut partner = vec![None; n];
    for (u, v) in maximum_matching(&g.complement()) {
        partner[u] = Some(v);
        partner[v] = Some(u);
    }
    let mut colors = vec![usize::MAX; n];
    let mut count = 0;
    for v in 0..n {
        if colors[v] != usize::MAX {
            continue;
        }
        colors[v] = count;
        if let Some(p) = partner[v] {
            colors[p] = count;
        }
        count += 1;
    }
    Some(Coloring { colors, count })
}

/// Exact colouring by DSATUR-ordered branch and bound, with the clique
/// number as lower bound and a greedy DSATUR colouring as first upper bound.
pub fn coloring_branch_and_bound(g: &Graph) -> Coloring {
    let n = g.order();
    if n == 0 {
        return Coloring {
            colors: Vec::new(),
            count: 0,
        };
    }
    let mut search = Dsatur {
        g,
        lower: clique_number(g),
        best: greedy_dsatur(g),
        classes: Vec::with_capacity(n),
        colors: vec![usize::MAX; n],
        uncolored: g.vertices(),
    };
    if search.best.count > search.lower {
        search.recurse();
    }
    search.best
}

fn saturation(g: &Graph, classes: &[VertexSet], v: usize) -> usize {
    let nb = g.neighbors(v);
    classes.iter().filter(|c| !c.is_disjoint(nb)).count()
}

/// Highest saturation, then most uncoloured neighbours, then lowest index.
fn pick_vertex(g: &Graph, classes: &[VertexSet], uncolored: VertexSet) -> usize {
    let mut pick = None;
    let mut best = (0, 0);
    for v in uncolored.iter() {
        let key = (
            saturation(g, classes, v),
            g.neighbors(v).intersection(uncolored).len(),
        );
        if pick.is_none() || key > best {
            best = key;
            pick = Some(v);
        }
    }
    pick.expect("at least one uncoloured vertex")
}

fn greedy_dsatur(g: &Graph) -> Coloring {
    let n = g.order();
    let mut classes: Vec<VertexSet> = Vec::new();
    let mut colors = vec![0; n];
    let mut uncolored = g.vertices();
    while !uncolored.is_empty() {
        let v = pick_vertex(g, &classes, uncolored);
        let nb = g.neighbors(v);
        let c = match classes.iter().position(|c| c.is_disjoint(nb)) {
            Some(c) => c,
            None => {
                classes.push(VertexSet::EMPTY);
                classes.len() - 1
            }
        };
        classes[c].insert(v);
        colors[v] = c;
        uncolored.remove(v);
    }
    Coloring {
        colors,
        count: classes.len(),
    }
}

struct Dsatur<'a> {
    g: &'a Graph,
    lower: usize,
    best: Coloring,
    classes: Vec<VertexSet>,
    colors: Vec<usize>,
    uncolored: VertexSet,
}

impl Dsatur<'_> {
    fn done(&self) -> bool {
        self.best.count == self.lower
    }

    fn recurse(&mut self) {
        if self.uncolored.is_empty() {
            if self.classes.len() < self.best.count {
                self.best = Coloring {
                    colors: self.colors.clone(),
                    count: self.classes.len(),
                };
            }
            return;
        }
        let v = pick_vertex(self.g, &self.classes, self.uncolored);
        let nb = self.g.neighbors(v);
        self.uncolored.remove(v);
        for c in 0..self.classes.len() {
            if self.classes[c].is_disjoint(nb) {
                self.classes[c].insert(v);
                self.colors[v] = c;
                self.recurse();
                self.classes[c].remove(v);
                if self.done() {
                    break;
                }
            }
        }
        if !self.done() && self.classes.len() + 1 < self.best.count {
            self.classes.push(VertexSet::singleton(v));
            self.colors[v] = self.classes.len() - 1;
            self.recurse();
            self.classes.pop();
        }
        self.colors[v] = usize::MAX;
        self.uncolored.insert(v);
    }
}
