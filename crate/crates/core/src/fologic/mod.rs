//! First-order syntax and finite model checking, plus the sentence
//! generators and rewrites used to build theories over tagged structures.

mod eval;
pub mod formula;
mod parser;
mod pool;
mod theory;
mod transform;

use thiserror::Error;

pub use eval::{evaluate, evaluate_with_p, Assignment, Evaluator};
pub use formula::Formula;
pub use parser::{parse, parse_theory};
pub use pool::{bound_var, sentence_pool, relativized_theory, PoolConfig};
pub use theory::{tag_sentences, graph_condition_sentences, Property, TaggedSentence};
pub use transform::{
    diagonal_atom, double_prime_transform, prime_transform, relativize_not_q, relativize_q, relativize_with,
};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum LogicError {
    #[error("syntax error at byte {pos}: {message}")]
    Syntax { pos: usize, message: String },
    #[error("line {line}: {source}")]
    Line { line: usize, source: Box<LogicError> },
    #[error("unknown relation symbol `{0}`")]
    UnknownSymbol(String),
    #[error("`{symbol}` expects {expected} arguments, got {found}")]
    Arity { symbol: String, expected: usize, found: usize },
    #[error("free variable `{0}` has no value")]
    UnboundVariable(String),
    #[error("variable `{var}` = {value} is outside the universe of size {size}")]
    ValueOutOfRange { var: String, value: usize, size: usize },
    #[error("formula contains P; use evaluate_with_p")]
    PAtomPresent,
    #[error("symbol `{0}` already occurs in the formula")]
    SymbolOccurs(String),
    #[error("{0}")]
    InvalidParameter(String),
}
