//! Canonical labelling by equitable refinement and individualisation.
//!
//! The search tree individualises one vertex of the first non-singleton
//! cell at each level. Each discrete leaf gives a relabelled adjacency
//! matrix and the largest one is the canonical form. Subtrees are skipped
//! when their root vertex is a twin of one already tried, or lies in the
//! same orbit of the automorphisms found so far that fix the current path.

use crate::graph::{Graph, VertexSet};

/// Relabelled adjacency rows, comparable across isomorphic graphs.
pub type CanonicalKey = Vec<u128>;

/// Canonical key and the labelling `vertex -> position` that produces it.
pub fn canonical_labelling(g: &Graph) -> (CanonicalKey, Vec<usize>) {
    let n = g.order();
    let mut state = Canon {
        g,
        best: None,
        automorphisms: Vec::new(),
    };
    let cells = if n == 0 {
        Vec::new()
    } else {
        refine(g, vec![(0..n).collect()])
    };
    state.search(cells, &mut Vec::new());
    let (key, pos) = state.best.expect("the search reaches at least one leaf");
    (key, pos)
}

pub fn canonical_key(g: &Graph) -> CanonicalKey {
    canonical_labelling(g).0
}

/// `g` relabelled into canonical form.
pub fn canonical_form(g: &Graph) -> Graph {
    let (_, pos) = canonical_labelling(g);
    g.permuted(&pos)
}

pub fn are_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.order() == b.order()
        && a.edge_count() == b.edge_count()
        && canonical_key(a) == canonical_key(b)
}

struct Canon<'a> {
    g: &'a Graph,
    best: Option<(CanonicalKey, Vec<usize>)>,
    automorphisms: Vec<Vec<usize>>,
}

impl Canon<'_> {
    fn search(&mut self, cells: Vec<Vec<usize>>, path: &mut Vec<usize>) {
        let Some(target) = cells.iter().position(|c| c.len() > 1) else {
            self.leaf(&cells);
            return;
        };
        let cell = cells[target].clone();
        let mut tried: Vec<usize> = Vec::new();
        for &v in &cell {
            if tried
                .iter()
                .any(|&u| self.is_twin(u, v) || self.same_orbit(u, v, path))
            {
                continue;
            }
            tried.push(v);
            let mut next = cells.clone();
            let rest: Vec<usize> = cell.iter().copied().filter(|&w| w != v).collect();
            next.splice(target..=target, [vec![v], rest]);
            let next = refine(self.g, next);
            path.push(v);
            self.search(next, path);
            path.pop();
        }
    }

    fn leaf(&mut self, cells: &[Vec<usize>]) {
        let n = self.g.order();
        let mut pos = vec![0; n];
        for (p, c) in cells.iter().enumerate() {
            pos[c[0]] = p;
        }
        let mut key = vec![0u128; n];
        for v in 0..n {
            key[pos[v]] = self
                .g
                .neighbors(v)
                .iter()
                .fold(0, |acc, u| acc | 1 << pos[u]);
        }
        match &self.best {
            Some((best, best_pos)) if *best == key => {
                // Same matrix from two labellings: their composite is an
                // automorphism.
                let mut at = vec![0; n];
                for v in 0..n {
                    at[pos[v]] = v;
                }
                let gamma: Vec<usize> = (0..n).map(|v| at[best_pos[v]]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
            }
            Some((best, _)) if *best > key => {}
            _ => self.best = Some((key, pos)),
        }
    }

    /// Swapping twins is an automorphism fixing everything else.
    fn is_twin(&self, u: usize, v: usize) -> bool {
        let g = self.g;
        g.neighbors(u).without(v) == g.neighbors(v).without(u)
    }

    /// `u` and `v` are joined by the group generated by known automorphisms
    /// that fix every vertex of `path`.
    fn same_orbit(&self, u: usize, v: usize, path: &[usize]) -> bool {
        let gens: Vec<&Vec<usize>> = self
            .automorphisms
            .iter()
            .filter(|a| path.iter().all(|&p| a[p] == p))
            .collect();
        if gens.is_empty() {
            return false;
        }
        let mut orbit = VertexSet::singleton(u);
        let mut frontier = vec![u];
        while let Some(x) = frontier.pop() {
            for a in &gens {
                let y = a[x];
                if !orbit.contains(y) {
                    if y == v {
                        return true;
                    }
                    orbit.insert(y);
                    frontier.push(y);
                }
            }
        }
        false
    }
}

/// Coarsest equitable refinement of an ordered partition. Cells split by
/// the number of neighbours in a splitter cell, smaller counts first, so
/// the result commutes with relabelling.
fn refine(g: &Graph, mut cells: Vec<Vec<usize>>) -> Vec<Vec<usize>> {
    'outer: loop {
        for s in 0..cells.len() {
            let splitter: VertexSet = cells[s].iter().copied().collect();
            let mut out = Vec::with_capacity(cells.len());
            let mut split = false;
            for cell in &cells {
                if cell.len() == 1 {
                    out.push(cell.clone());
                    continue;
                }
                let mut keyed: Vec<(usize, usize)> = cell
                    .iter()
                    .map(|&v| (g.neighbors(v).intersection(splitter).len(), v))
                    .collect();
                keyed.sort_unstable();
                let mut start = 0;
                for k in 1..=keyed.len() {
                    if k == keyed.len() || keyed[k].0 != keyed[start].0 {
                        out.push(keyed[start..k].iter().map(|&(_, v)| v).collect());
                        start = k;
                    }
                }
                split |= keyed[0].0 != keyed[keyed.len() - 1].0;
            }
            if split {
                cells = out;
                continue 'outer;
            }
        }
        return cells;
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{complete, cycle, petersen, wheel};
    use crate::testutil::arb_graph;
    use proptest::prelude::*;
    use proptest::sample::subsequence;

    /// Isomorphism by trying every bijection.
    fn brute_isomorphic(a: &Graph, b: &Graph) -> bool {
        fn go(a: &Graph, b: &Graph, map: &mut Vec<usize>, used: &mut Vec<bool>) -> bool {
            let k = map.len();
            if k == a.order() {
                return true;
            }
            for w in 0..b.order() {
                if used[w] || (0..k).any(|q| a.has_edge(k, q) != b.has_edge(w, map[q])) {
                    continue;
                }
                used[w] = true;
                map.push(w);
                if go(a, b, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
            false
        }
        a.order() == b.order() && go(a, b, &mut Vec::new(), &mut vec![false; b.order()])
    }

    fn permutation(n: usize) -> impl Strategy<Value = Vec<usize>> {
        Just((0..n).collect::<Vec<_>>()).prop_shuffle()
    }

    #[test]
    fn symmetric_graphs_finish() {
        for g in [
            complete(40),
            Graph::empty(40).unwrap(),
            petersen(),
            cycle(30),
            wheel(12),
        ] {
            let c = canonical_form(&g);
            assert!(g.order() > 12 || brute_isomorphic(&c, &g));
            assert_eq!(c.edge_count(), g.edge_count());
        }
    }

    #[test]
    fn distinguishes_cospectral_pair() {
        // C4 + K1 and the star K_{1,4} share a spectrum but not a shape.
        let c4k1 = Graph::from_edges(5, &[(0, 1), (1, 2), (2, 3), (3, 0)]).unwrap();
        let star = Graph::from_edges(5, &[(0, 1), (0, 2), (0, 3), (0, 4)]).unwrap();
        assert!(!are_isomorphic(&c4k1, &star));
    }

    proptest! {
        #[test]
        fn invariant_under_relabelling(
            (g, perm) in arb_graph(11).prop_flat_map(|g| {
                let n = g.order();
                (Just(g), permutation(n))
            })
        ) {
            let h = g.permuted(&perm);
            prop_assert_eq!(canonical_key(&g), canonical_key(&h));
            prop_assert_eq!(canonical_form(&g), canonical_form(&h));
            prop_assert!(brute_isomorphic(&canonical_form(&g), &g));
        }

        #[test]
        fn agrees_with_brute_force(a in arb_graph(7), b in arb_graph(7)) {
            prop_assert_eq!(are_isomorphic(&a, &b), brute_isomorphic(&a, &b));
        }

        #[test]
        fn separates_one_edge_edits(g in arb_graph(9), picks in subsequence((0..36).collect::<Vec<_>>(), 1)) {
            // Adding or removing an edge changes the edge count, so the
            // keys must differ.
            let n = g.order();
            prop_assume!(n >= 2);
            let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
            let (u, v) = pairs[picks[0] % pairs.len()];
            let mut edges: Vec<(usize, usize)> = g.edges().filter(|&e| e != (u, v)).collect();
            if !g.has_edge(u, v) {
                edges.push((u, v));
            }
            let h = Graph::from_edges(n, &edges).unwrap();
            prop_assert_ne!(canonical_key(&g), canonical_key(&h));
        }
    }
}
