//! Finite relational structures and their graph-theoretic vocabulary:
//! adjacency, paths, distance, degree, connectivity, R-graphs, disjoint
//! unions and the Q-diagonal tagging.

mod graph;
mod rgraph;
mod signature;
mod structure;
mod text;

use thiserror::Error;

pub use graph::{
    bfs_distances, component_count, component_labels, distance, girth, has_simple_cycle_of_size, is_acyclic,
    is_connected, is_r_connected, Adjacency, Distance, Graph,
};
pub use rgraph::{graph_from_r_graph, r_graph_from_graph, validate_r_graph};
pub use signature::{Signature, Symbol};
pub use structure::{disjoint_union, DisjointUnion, Structure, Tuple};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StructureError {
    #[error("invalid symbol name `{0}`")]
    InvalidSymbolName(String),
    #[error("symbol `{0}` has arity 0")]
    ZeroArity(String),
    #[error("duplicate symbol `{0}`")]
    DuplicateSymbol(String),
    #[error("bad signature token `{0}` (expected NAME/ARITY)")]
    BadSignatureToken(String),
    #[error("unknown relation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("tuple for `{symbol}` has {found} entries, expected {expected}")]
    ArityMismatch { symbol: String, expected: usize, found: usize },
    #[error("element {element} is outside the universe of size {size}")]
    ElementOutOfRange { element: usize, size: usize },
    #[error("loop at vertex {0}")]
    LoopEdge(usize),
    #[error("duplicate edge {{{0},{1}}}")]
    DuplicateEdge(usize, usize),
    #[error("parts have different signatures")]
    SignatureMismatch,
    #[error("relation `{0}` must be empty")]
    QNotEmpty(String),
    #[error("`{symbol}` has arity {arity}; an R-graph needs arity >= 2")]
    RArityTooSmall { symbol: String, arity: usize },
    #[error("structure is not an {0}-graph")]
    NotAnRGraph(String),
    #[error("{0}")]
    InvalidParameter(String),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
}
