//! Shared inputs for the benchmarks under `benches/`.

use cyclespan_core::generators::{self, generate, NamedGraph};
use cyclespan_core::Graph;

/// Graphs small enough for the exact spectrum, by name.
pub fn spectrum_inputs() -> Vec<(&'static str, Graph)> {
    vec![
        ("petersen", generators::petersen()),
        ("hypercube_4", generators::hypercube(4)),
        ("k_9_9", generators::complete_bipartite(9, 9)),
        ("gnp_20", generate(&NamedGraph::RandomGnp { n: 20, p: 0.25 }, 1).expect("valid family")),
    ]
}

/// Hosts for exact-length path queries, with endpoints and a length.
pub fn path_inputs() -> Vec<(&'static str, Graph, usize, usize, usize)> {
    vec![
        ("k_6_6_len_9", generators::complete_bipartite(6, 6), 0, 6, 9),
        ("hypercube_5_len_11", generators::hypercube(5), 0, 31, 11),
        ("grid_5_5_len_10", generators::grid(5, 5), 0, 12, 10),
    ]
}
