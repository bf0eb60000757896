//! Strong edge coloring of claw-free graphs with maximum degree 3.
//!
//! Every such graph other than the triangular prism has a strong edge
//! coloring with 7 colors; [`strong_color`] finds one in linear time. The
//! crate also provides recognition of the structural cases the coloring
//! recurses on, an exact solver for small graphs and a corpus of generators
//! and parsers.

pub mod coloring;
pub mod corpus;
pub mod engine;
pub mod error;
pub mod exact;
pub mod graph;
pub mod partial;
pub mod recognition;
pub mod survey;

pub use coloring::{
    conflict_graph, sees, verify_strong, Color, ColorSet, PartialColoring, Violation, PALETTE,
};
pub use engine::{
    color_component, small_case_solve, strong_color, strong_color_with, ColoringResult,
    EngineConfig, StrongColoring, TraceRecord,
};
pub use error::{CorpusError, EngineError, GraphError, PartialError, RecognitionError, SolverError};
pub use exact::{exact_chi_s, exact_chi_s_upto, strong_color_k, ChiOutcome, Outcome, SolverConfig};
pub use graph::{EdgeId, Graph, Subgraph, VertexId};
pub use recognition::{classify, CaseTag};
pub use survey::survey_extremal;
