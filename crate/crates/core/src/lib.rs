//! Detection, decomposition and coloring for graph classes defined by
//! forbidden chorded cycles, with generators and a census driver.

pub mod bitset;
pub mod campaign;
pub mod coloring;
pub mod decompose;
pub mod detectors;
pub mod falsification;
pub mod generators;
pub mod graph;
pub mod io;

pub use bitset::VertexSet;
pub use graph::{Graph, GraphError, InducedSubgraph, LevelDecomposition};
