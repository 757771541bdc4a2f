//! Propagation dynamics on graphs.
//!
//! A colored vertex may pass its color to a neighbor only when that neighbor
//! is its *single* uncolored neighbor. Starting from a seed set, forces are
//! applied until none remain; a seed whose closure is the whole vertex set is
//! said to propagate. This crate simulates the process (sequential and
//! synchronized, on graphs and digraphs), computes minimum propagating sets
//! exactly with leaf-restricted and orientation-constrained variants,
//! generates the graph families the solver is cross-checked against, and runs
//! exhaustive desk-scale audits of extremal claims about the process.

pub mod families;
pub mod formats;
pub mod graph;
pub mod propagation;
pub mod solver;

pub use graph::{Digraph, Graph, VertexSet};
pub use propagation::{ForceEvent, Trace};
pub use solver::SolveResult;

use thiserror::Error;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error("self-loop on vertex {0}")]
    SelfLoop(usize),
    #[error("vertex {id} out of range for {n} vertices")]
    VertexOutOfRange { id: usize, n: usize },
    #[error("duplicate edge ({0}, {1})")]
    DuplicateEdge(usize, usize),
    #[error("duplicate arc ({0}, {1})")]
    DuplicateArc(usize, usize),
    #[error("edge ({0}, {1}) is not in the graph")]
    MissingEdge(usize, usize),
    #[error("edge ({0}, {1}) is already in the graph")]
    EdgePresent(usize, usize),
    #[error("vertex {vertex} has degree {degree}; smoothing needs degree 2")]
    SmoothDegree { vertex: usize, degree: usize },
    #[error("smoothing vertex {0} would create a multi-edge: its neighbors are adjacent")]
    SmoothWouldMultiEdge(usize),
    #[error("graph is disconnected")]
    Disconnected,
    #[error("graph is not a tree")]
    NotATree,
    #[error("seed set does not propagate")]
    DoesNotPropagate,
    #[error("not a hamilton path: {0}")]
    InvalidHamiltonPath(String),
    #[error("{what}: {actual} exceeds the supported maximum {limit}")]
    Capacity {
        what: &'static str,
        actual: usize,
        limit: usize,
    },
    #[error("{0}")]
    InvalidArgument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("trace event {index}: {message}")]
    TraceInvalid { index: usize, message: String },
}

pub type Result<T> = std::result::Result<T, Error>;
