//! Exact combinatorics for Ramsey arrowing: graph parameters, arrowing
//! decisions with certificates, and the recursive tower construction that
//! separates graphs of different chromatic number.

pub mod arrowing;
pub mod bitset;
pub mod constructions;
pub mod cycles;
pub mod error;
pub mod format;
pub mod graph;
pub mod hypergraph;
pub mod invariants;
pub mod subgraph;

pub use error::{Error, Result};
pub use graph::{Edge, Graph, Vertex};
pub use hypergraph::Hypergraph;
pub use subgraph::Embedding;
