//! Small named graphs used as patterns, fixtures and examples.

use crate::graph::{Graph, GraphBuilder, VertexSet};

/// `K_n`.
pub fn complete(n: usize) -> Graph {
    let mut b = GraphBuilder::new(n).expect("n fits");
    for v in 0..n {
        for u in 0..v {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build()
}

/// The cycle `0-1-...-(n-1)-0`; `n >= 3`.
pub fn cycle(n: usize) -> Graph {
    assert!(n >= 3, "cycle needs at least 3 vertices");
    let mut b = GraphBuilder::new(n).expect("n fits");
    for v in 0..n {
        b.add_edge(v, (v + 1) % n).unwrap();
    }
    b.build()
}

/// The wheel on `k + 1` vertices: rim `0..k` is a `k`-cycle, `k` is the hub.
pub fn wheel(k: usize) -> Graph {
    let mut b = GraphBuilder::from_graph(&cycle(k));
    b.add_vertex(VertexSet::prefix(k)).unwrap();
    b.build()
}

/// Complement of the star `K_{1,5}`: `0..5` is a clique, `5` is isolated.
pub fn co_star5() -> Graph {
    let mut b = GraphBuilder::from_graph(&complete(5));
    b.add_vertex(VertexSet::EMPTY).unwrap();
    b.build()
}

/// Complete multipartite graph with the given part sizes; parts are
/// consecutive label ranges.
pub fn complete_multipartite(parts: &[usize]) -> Graph {
    let n = parts.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &p) in parts.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, p));
    }
    let mut b = GraphBuilder::new(n).expect("n fits");
    for v in 0..n {
        for u in 0..v {
            if part_of[u] != part_of[v] {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}

/// The octahedron `K_{2,2,2}`.
pub fn octahedron() -> Graph {
    complete_multipartite(&[2, 2, 2])
}

/// The Petersen graph: outer cycle `0..5`, spokes `i ~ i+5`, inner
/// pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut b = GraphBuilder::new(10).unwrap();
    for i in 0..5 {
        b.add_edge(i, (i + 1) % 5).unwrap();
        b.add_edge(i, i + 5).unwrap();
        b.add_edge(i + 5, (i + 2) % 5 + 5).unwrap();
    }
    b.build()
}

/// Blow-up of `C5`: part `i` becomes a clique of `sizes[i]` vertices, complete
/// to parts `i±1` and anticomplete to parts `i±2`. Part `i` occupies a
/// consecutive label range starting at `sizes[..i].sum()`.
pub fn c5_blowup(sizes: [usize; 5]) -> Graph {
    let n = sizes.iter().sum();
    let mut part_of = Vec::with_capacity(n);
    for (i, &s) in sizes.iter().enumerate() {
        part_of.extend(std::iter::repeat_n(i, s));
    }
    let mut b = GraphBuilder::new(n).expect("n fits");
    for v in 0..n {
        for u in 0..v {
            let d = (part_of[v] + 5 - part_of[u]) % 5;
            if matches!(d, 0 | 1 | 4) {
                b.add_edge(u, v).unwrap();
            }
        }
    }
    b.build()
}
