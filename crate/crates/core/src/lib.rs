//! Search for small induced universal graphs.

pub mod completion;
pub mod enumerate;
pub mod error;
pub mod graph;
pub mod graph6;
pub mod heuristic;
pub mod iso;
pub mod record;
pub mod search;
pub mod seed;
pub mod verify;

pub use error::{Error, Result};
pub use graph::{Bits, Graph, VertexSet};
