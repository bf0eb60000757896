use thiserror::Error;

use crate::graph::{EdgeId, VertexId};
use crate::recognition::Claw;

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("loop at vertex {vertex}")]
    Loop { vertex: VertexId },
    #[error("duplicate edge {u}-{v}")]
    DuplicateEdge { u: VertexId, v: VertexId },
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: VertexId, n: usize },
    #[error("edge id {edge} out of range for a graph with {m} edges")]
    EdgeOutOfRange { edge: EdgeId, m: usize },
    #[error("edges must be distinct")]
    SameEdge,
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum RecognitionError {
    #[error("graph is not connected")]
    Disconnected,
    #[error("graph has {n} vertices, limit is {limit}")]
    TooLarge { n: usize, limit: usize },
    #[error("precondition failed: {0}")]
    Precondition(&'static str),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum PartialError {
    #[error("seed set is empty")]
    EmptySeedSet,
    #[error("vertex {0} is unreachable from the seed set")]
    Unreachable(VertexId),
    #[error("edge {0} is already colored")]
    AlreadyColored(EdgeId),
    #[error("greedy coloring stuck at edge {0}: no color available")]
    GreedyStuck(EdgeId),
    #[error(transparent)]
    Graph(#[from] GraphError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum SolverError {
    #[error("graph has {m} edges, solver limit is {limit}")]
    TooLarge { m: usize, limit: usize },
    #[error("argument out of range: {0}")]
    Argument(String),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum EngineError {
    #[error("graph is not claw-free: center {} with leaves {:?}", .0.center, .0.leaves)]
    NotClawFree(Claw),
    #[error("graph is not subcubic: vertex {vertex} has degree {degree}")]
    NotSubcubic { vertex: VertexId, degree: usize },
    #[error("internal invariant violated: {message}")]
    InternalInvariantViolation {
        message: String,
        trace: Vec<String>,
    },
    #[error(transparent)]
    Solver(#[from] SolverError),
}

#[derive(Clone, Debug, PartialEq, Eq, Error)]
pub enum CorpusError {
    #[error("argument out of range: {0}")]
    Argument(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("graph6 byte {offset}: {message}")]
    Graph6 { offset: usize, message: String },
}
