//! Executable algebra of graph properties on small graphs: products,
//! partitions, decompositions, forbidden subgraphs and factorisations,
//! checked exhaustively on the universe of all graphs up to a small order.

pub mod cli;
pub mod decomp;
pub mod error;
pub mod factorlab;
pub mod forbidden;
pub mod graph;
pub mod partition;
pub mod properties;
pub mod universe;

pub use error::{Error, Result};
pub use graph::{Graph, LabelledGraph, VertexSet, MAX_ORDER};
pub use properties::PropertyDef;
pub use universe::{PropertyView, Universe};
