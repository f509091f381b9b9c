//! Total domination numbers, total domination vertex criticality, and the
//! extremal critical graphs of order Δ + γt.

pub mod bitset;
pub mod canon;
pub mod claims;
pub mod cli;
pub mod criticality;
pub mod families;
pub mod graph;
pub mod io;
pub mod search;
pub mod solver;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError};
pub use solver::{DominationResult, GammaValue};
