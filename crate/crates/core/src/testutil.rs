use proptest::prelude::*;

use crate::graph::{Graph, GraphBuilder};

/// Uniform labelled graphs on `0..=max_n` vertices.
pub(crate) fn arb_graph(max_n: usize) -> impl Strategy<Value = Graph> {
    (0..=max_n).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * n.saturating_sub(1) / 2).prop_map(
            move |bits| {
                let mut b = GraphBuilder::new(n).unwrap();
                let mut k = 0;
                for v in 0..n {
                    for u in 0..v {
                        if bits[k] {
                            b.add_edge(u, v).unwrap();
                        }
                        k += 1;
                    }
                }
                b.build()
            },
        )
    })
}

/// Every labelled graph on `n` vertices, in bitmask order.
pub(crate) fn all_labelled(n: usize) -> impl Iterator<Item = Graph> {
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    let m = pairs.len();
    (0u64..(1u64 << m)).map(move |mask| {
        let mut b = GraphBuilder::new(n).unwrap();
        for (k, &(u, v)) in pairs.iter().enumerate() {
            if mask >> k & 1 == 1 {
                b.add_edge(u, v).unwrap();
            }
        }
        b.build()
    })
}

/// Graphs with independence number at most two: a random maximal
/// triangle-free graph, thinned by deleting edges, then complemented.
pub(crate) fn arb_alpha2(max_n: usize) -> impl Strategy<Value = Graph> {
    (1..=max_n, any::<u64>()).prop_flat_map(|(n, seed)| {
        let t = crate::ingest::random_alpha2(n, seed).complement();
        let m = t.edge_count();
        proptest::collection::vec(any::<bool>(), m).prop_map(move |keep| {
            let edges: Vec<(usize, usize)> = t
                .edges()
                .zip(&keep)
                .filter(|(_, &k)| k)
                .map(|(e, _)| e)
                .collect();
            Graph::from_edges(n, &edges).unwrap().complement()
        })
    })
}
