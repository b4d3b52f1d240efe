//! Tree-breadth, tree-length, path-breadth and path-length of graphs.
//!
//! Polynomial recognisers for tree-breadth one on bipartite and planar
//! graphs, exact exponential-time computation of the four parameters on small
//! graphs, and constructions of the hardness gadgets together with their
//! witness decompositions.

pub mod bipartite;
pub mod catalog;
pub mod chordal;
pub mod decomposition;
pub mod error;
pub mod generators;
pub mod graph;
pub mod oracle;
pub mod planar;
pub mod sets;

pub use decomposition::{Decomposition, Metrics, Shape, Violation};
pub use error::{Error, Result};
pub use graph::{DistanceMatrix, Graph};
