use crate::graph::{Graph, VertexSet};

/// A maximum clique. Among maximum cliques, the one whose sorted vertex
/// list is lexicographically smallest is returned.
pub fn maximum_clique(g: &Graph) -> VertexSet {
    let mut best = VertexSet::EMPTY;
    expand(g, VertexSet::EMPTY, g.vertices(), &mut best);
    best
}

/// A maximum independent set (lexicographically smallest among maximum ones).
pub fn maximum_independent_set(g: &Graph) -> VertexSet {
    maximum_clique(&g.complement())
}

pub fn clique_number(g: &Graph) -> usize {
    maximum_clique(g).len()
}

pub fn independence_number(g: &Graph) -> usize {
    maximum_independent_set(g).len()
}

// Carraghan-Pardalos style: candidates are consumed in increasing order, so
// cliques are visited in lexicographic order and only strict improvements
// replace `best`.
fn expand(g: &Graph, current: VertexSet, mut cand: VertexSet, best: &mut VertexSet) {
    while let Some(v) = cand.first() {
        if current.len() + cand.len() <= best.len()
            || current.len() + colour_bound(g, cand) <= best.len()
        {
            return;
        }
        let next = current.with(v);
        let sub = cand.intersection(g.neighbors(v));
        if sub.is_empty() {
            if next.len() > best.len() {
                *best = next;
            }
        } else {
            expand(g, next, sub, best);
        }
        cand.remove(v);
    }
}

/// Number of colours a greedy colouring of `G[cand]` uses; bounds the
/// clique number of `G[cand]` from above.
fn colour_bound(g: &Graph, cand: VertexSet) -> usize {
    let mut left = cand;
    let mut colours = 0;
    while !left.is_empty() {
        colours += 1;
        let mut avail = left;
        while let Some(v) = avail.first() {
            left.remove(v);
            avail = avail.difference(g.neighbors(v)).without(v);
        }
    }
    colours
}
