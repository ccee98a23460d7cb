//! Explicit witness graphs: binary trees, the four-armed trees built from
//! them, rigid forests with distinct-length tails, a connected variant, and
//! finite balls of the degree-4/5 trees. Also the semantic checkers for the
//! graph conditions these witnesses are meant to satisfy.
//!
//! All constructions label vertices deterministically.

mod checks;
mod trees;

use thiserror::Error;

pub use checks::{
    check_graph_conditions, check_forest_fragment, check_connected_fragment, degree4_far_apart, degrees_45, enough_degree4,
    no_short_cycles, GraphConditions,
};
pub use trees::{
    binary_tree, connected_model, path_graph, rigid_forest, four_arm_tree, truncated_tree_45, BINARY_TREE_CAP,
    CONNECTED_MODEL_CAP, RIGID_FOREST_CAP, TRUNCATED_DEPTH_CAP, FOUR_ARM_CAP,
};

use crate::structures::Graph;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConstructionError {
    #[error("{what} {value} exceeds the cap {cap}")]
    CapExceeded { what: &'static str, value: usize, cap: usize },
    #[error("invalid parameter: {0}")]
    InvalidParameter(String),
}

/// A tree with a distinguished root and its leaves in construction order.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledTree {
    pub graph: Graph,
    pub root: usize,
    pub leaves: Vec<usize>,
}
