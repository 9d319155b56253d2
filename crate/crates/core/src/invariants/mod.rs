//! Exact graph and hypergraph parameters.

mod a_param;
mod clique;
mod colouring;
mod girth;
mod hyper;

pub use a_param::a_parameter;
pub use clique::{clique_number, maximum_clique};
pub use colouring::{chromatic_number, is_k_colourable, k_colouring, VertexColouring};
pub use girth::{odd_girth, Girth};
pub use hyper::{
    girth_exceeds, hypergraph_girth, hypergraph_independence_number, maximum_independent_set, shortest_circuit,
    shortest_circuit_within, Circuit,
};
