pub mod bipartite;
pub mod cli;
pub mod coloring;
pub mod error;
pub mod expansion;
pub mod generator;
pub mod graph;
pub mod io;
pub mod oddhole;
pub mod oracle;
pub mod reed;
pub mod solve;

pub use error::{Error, Result};
pub use graph::{BipartiteOutcome, Bipartition, Graph};
