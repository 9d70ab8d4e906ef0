use proptest::prelude::*;

use super::*;
use crate::families::{c5_blowup, complete, cycle, octahedron, petersen, wheel};
use crate::graph::{Graph, VertexSet};
use crate::testutil::{all_labelled, arb_graph};

// Oracles below enumerate subsets directly and share no code with the
// implementations under test.

fn brute_clique_number(g: &Graph) -> usize {
    let n = g.order();
    (0u32..1 << n)
        .map(|m| VertexSet::from_bits(m as u128))
        .filter(|&s| {
            s.iter()
                .all(|u| s.iter().all(|v| u == v || g.has_edge(u, v)))
        })
        .map(|s| s.len())
        .max()
        .unwrap_or(0)
}

fn brute_matching(g: &Graph, free: VertexSet) -> usize {
    let Some(v) = free.first() else { return 0 };
    let rest = free.without(v);
    let mut best = brute_matching(g, rest);
    for u in rest.iter().filter(|&u| g.has_edge(u, v)) {
        best = best.max(1 + brute_matching(g, rest.without(u)));
    }
    best
}

/// Minimum number of independent sets partitioning the graph, by subset DP.
fn brute_chromatic(g: &Graph) -> usize {
    let n = g.order();
    let full = (1usize << n) - 1;
    let independent = |m: usize| {
        (0..n).all(|u| m >> u & 1 == 0 || (0..n).all(|v| m >> v & 1 == 0 || !g.has_edge(u, v)))
    };
    let mut best = vec![usize::MAX; 1 << n];
    best[0] = 0;
    for s in 1..=full {
        let low = s & s.wrapping_neg();
        let rest = s ^ low;
        let mut sub = rest;
        loop {
            let class = sub | low;
            if independent(class) && best[s ^ class] != usize::MAX {
                best[s] = best[s].min(best[s ^ class] + 1);
            }
            if sub == 0 {
                break;
            }
            sub = (sub - 1) & rest;
        }
    }
    best[full]
}

#[test]
fn independence_examples() {
    assert_eq!(independence_number(&complete(5)), 1);
    assert_eq!(independence_number(&cycle(5)), 2);
    assert_eq!(independence_number(&wheel(5)), 2);
}

#[test]
fn clique_examples() {
    assert_eq!(clique_number(&cycle(5)), 2);
    assert_eq!(clique_number(&wheel(5)), 3);
    assert_eq!(brute_clique_number(&octahedron()), 3);
    assert_eq!(clique_number(&octahedron()), 3);
    assert_eq!(clique_number(&Graph::empty(0).unwrap()), 0);
}

#[test]
fn clique_witness_is_lexicographically_first() {
    // Triangles {0,1,2} and {1,2,3}; the first is lexicographically smaller.
    let g = Graph::from_edges(4, &[(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).unwrap();
    assert_eq!(maximum_clique(&g), VertexSet::from_slice(&[0, 1, 2]));
    assert_eq!(
        maximum_independent_set(&cycle(5)),
        VertexSet::from_slice(&[0, 2])
    );
}

#[test]
fn matching_examples() {
    assert_eq!(max_matching(&cycle(5)), 2);
    assert_eq!(max_matching(&complete(4)), 2);
    assert_eq!(max_matching(&Graph::empty(6).unwrap()), 0);
    // Petersen has a perfect matching.
    assert_eq!(max_matching(&petersen()), 5);
}

#[test]
fn matching_needs_blossom() {
    // Triangle 0-1-2 with pendant paths; a greedy pass that matches 1-2
    // first has to be repaired through the odd cycle.
    let g = Graph::from_edges(6, &[(0, 1), (1, 2), (2, 0), (0, 3), (1, 4), (4, 5)]).unwrap();
    assert_eq!(max_matching(&g), 3);
}

#[test]
fn chromatic_examples() {
    assert_eq!(brute_chromatic(&cycle(5)), 3);
    assert_eq!(brute_chromatic(&wheel(5)), 4);
    assert_eq!(chromatic_number(&cycle(5)), 3);
    assert_eq!(chromatic_number(&wheel(5)), 4);
    assert_eq!(chromatic_number(&complete(1)), 1);
    assert_eq!(chromatic_number(&Graph::empty(0).unwrap()), 0);
    assert_eq!(chromatic_number(&petersen()), 3);
    assert_eq!(coloring_branch_and_bound(&petersen().complement()).count, 5);
}

#[test]
fn matching_route_only_for_alpha_two() {
    assert!(coloring_via_matching(&petersen()).is_none());
    let c = coloring_via_matching(&c5_blowup([2, 2, 2, 2, 2])).unwrap();
    assert!(c.is_proper(&c5_blowup([2, 2, 2, 2, 2])));
    assert_eq!(c.count, 5);
}

#[test]
fn invariant_report_bounds() {
    let r = InvariantReport::compute(&wheel(5));
    assert_eq!(
        r,
        InvariantReport {
            n: 6,
            alpha: 2,
            omega: 3,
            chi: 4
        }
    );
}

#[test]
fn exhaustive_small_graphs_against_oracles() {
    for n in 0..=6 {
        for g in all_labelled(n) {
            assert_eq!(clique_number(&g), brute_clique_number(&g), "{g:?}");
            assert_eq!(max_matching(&g), brute_matching(&g, g.vertices()), "{g:?}");
            let c = optimal_coloring(&g);
            assert!(c.is_proper(&g));
            assert_eq!(c.count, brute_chromatic(&g), "{g:?}");
            let b = coloring_branch_and_bound(&g);
            assert!(b.is_proper(&g));
            assert_eq!(b.count, c.count);
        }
    }
}

#[test]
fn fast_path_handles_forty_vertices() {
    // Random-ish alpha <= 2 graph: complement of a C5 blow-up is dense.
    let g = c5_blowup([8, 8, 8, 8, 8]);
    assert_eq!(independence_number(&g), 2);
    let c = optimal_coloring(&g);
    assert!(c.is_proper(&g));
    assert_eq!(c.count, 20);
    assert_eq!(clique_number(&g), 16);
}

proptest! {
    #[test]
    fn witnesses_validate(g in arb_graph(14)) {
        let k = maximum_clique(&g);
        prop_assert!(g.is_clique(k));
        let i = maximum_independent_set(&g);
        prop_assert!(g.is_independent(i));
        prop_assert_eq!(clique_number(&g), independence_number(&g.complement()));
        let m = maximum_matching(&g);
        let mut covered = VertexSet::EMPTY;
        for &(u, v) in &m {
            prop_assert!(g.has_edge(u, v));
            prop_assert!(!covered.contains(u) && !covered.contains(v));
            covered = covered.with(u).with(v);
        }
        prop_assert_eq!(m.len(), brute_matching(&g, g.vertices()));
    }

    #[test]
    fn chromatic_bounds(g in arb_graph(10)) {
        let r = InvariantReport::compute(&g);
        prop_assert!(r.omega <= r.chi && r.chi <= r.n);
        if r.n >= 1 {
            prop_assert!(r.alpha >= 1);
        }
        if r.alpha <= 2 {
            prop_assert_eq!(r.chi, r.n - max_matching(&g.complement()));
        }
    }

    #[test]
    fn deleting_a_vertex_is_monotone(g in arb_graph(10), pick in any::<usize>()) {
        prop_assume!(g.order() > 0);
        let v = pick % g.order();
        let h = g.without_vertex(v);
        prop_assert!(independence_number(&h) <= independence_number(&g));
        prop_assert!(clique_number(&h) <= clique_number(&g));
        prop_assert!(chromatic_number(&h) <= chromatic_number(&g));
    }
}
