//! Shared fixtures for the criterion benchmarks.

use ramsey_core::graph::{complete_graph, disjoint_union, Graph};

/// `K_3 + K_2`, the pattern that `K_6` does not arrow in two colours.
pub fn triangle_plus_edge() -> Graph {
    disjoint_union(&complete_graph(3), &complete_graph(2))
}
