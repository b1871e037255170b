pub mod bitset;
pub mod chromatic;
mod clique;
pub mod constructions;
pub mod domination;
pub mod error;
pub mod graph;
pub mod harness;
pub mod solve;
pub mod visibility;

pub use bitset::VertexSet;
pub use chromatic::Coloring;
pub use error::{KdmvError, Result};
pub use graph::Graph;
pub use solve::{Budget, SolveResult, Status, DEFAULT_BUDGET};

/// Largest supported vertex count.
pub const MAX_VERTICES: usize = 512;
