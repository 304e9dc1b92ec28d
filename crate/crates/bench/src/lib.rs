//! Fixed inputs shared by the benchmarks.

use eqdeg_core::constructions::{complete_bipartite, half_graph};
use eqdeg_core::Graph;

/// Deterministic pseudo-random graph (xorshift), independent of any RNG crate.
pub fn scrambled(order: usize, density_percent: u64, seed: u64) -> Graph {
    let mut state = seed | 1;
    let mut edges = Vec::new();
    for u in 0..order {
        for v in u + 1..order {
            state ^= state << 13;
            state ^= state >> 7;
            state ^= state << 17;
            if state % 100 < density_percent {
                edges.push((u, v));
            }
        }
    }
    Graph::from_edges(order, &edges).expect("pairs in range")
}

pub fn large_bipartite(n: usize) -> Graph {
    complete_bipartite(n, n + 1).expect("positive parts")
}

pub fn half(n: usize) -> Graph {
    half_graph(n).expect("n >= 1")
}
