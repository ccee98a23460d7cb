use thiserror::Error;

use crate::autgroup::AutError;
use crate::constructions::ConstructionError;
use crate::fologic::LogicError;
use crate::randomlab::RandomLabError;
use crate::structures::StructureError;

/// Any error the library can report.
#[derive(Debug, Error)]
pub enum Error {
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Logic(#[from] LogicError),
    #[error(transparent)]
    Aut(#[from] AutError),
    #[error(transparent)]
    Construction(#[from] ConstructionError),
    #[error(transparent)]
    RandomLab(#[from] RandomLabError),
    #[error("{path}: {source}")]
    Io { path: String, source: std::io::Error },
}

pub type Result<T> = std::result::Result<T, Error>;
