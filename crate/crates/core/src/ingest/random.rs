//! Seeded random graphs with independence number at most two.

use rand::seq::SliceRandom;
use rand::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::graph::{Graph, GraphBuilder};

/// Complement of a random maximal triangle-free graph: all vertex pairs are
/// shuffled and each is added as an edge unless it would close a triangle.
pub fn random_alpha2(n: usize, seed: u64) -> Graph {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut pairs: Vec<(usize, usize)> = (0..n).flat_map(|v| (0..v).map(move |u| (u, v))).collect();
    pairs.shuffle(&mut rng);
    let mut b = GraphBuilder::new(n).expect("order within the vertex limit");
    for (u, v) in pairs {
        if b.neighbors(u).is_disjoint(b.neighbors(v)) {
            b.add_edge(u, v).unwrap();
        }
    }
    b.build().complement()
}

/// Per-sample seeds derived from one master seed.
pub fn sample_seeds(seed: u64, samples: usize) -> Vec<u64> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    (0..samples).map(|_| rng.next_u64()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::complete;
    use crate::invariants::independence_number;
    use proptest::prelude::*;

    #[test]
    fn examples() {
        assert_eq!(random_alpha2(5, 17), random_alpha2(5, 17));
        assert_eq!(random_alpha2(1, 3), complete(1));
        assert_eq!(sample_seeds(9, 4), sample_seeds(9, 4));
        assert_eq!(sample_seeds(9, 4)[..2], sample_seeds(9, 2)[..]);
    }

    proptest! {
        #[test]
        fn alpha_at_most_two_and_maximal(n in 1usize..24, seed in any::<u64>()) {
            let g = random_alpha2(n, seed);
            prop_assert_eq!(g.order(), n);
            prop_assert!(independence_number(&g) <= 2);
            // Maximality of the triangle-free complement: every edge of `g`
            // has a common non-neighbour.
            let t = g.complement();
            for (u, v) in g.edges() {
                prop_assert!(!t.neighbors(u).is_disjoint(t.neighbors(v)));
            }
        }
    }
}
