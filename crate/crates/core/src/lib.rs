//! Finite model theory workbench.

pub mod autgroup;
pub mod cli;
pub mod constructions;
mod error;
pub mod fologic;
pub mod randomlab;
pub mod structures;

pub use error::{Error, Result};
