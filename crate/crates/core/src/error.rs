use thiserror::Error;

use crate::exactmath::ArithError;
use crate::exprparse::{ParseError, StructureError};
use crate::geometry::GeometryError;
use crate::pipeline::PipelineError;

/// Any failure of the library, grouped by origin.
#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum Error {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Structure(#[from] StructureError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
    #[error(transparent)]
    Pipeline(#[from] PipelineError),
    #[error(transparent)]
    Arith(#[from] ArithError),
}
