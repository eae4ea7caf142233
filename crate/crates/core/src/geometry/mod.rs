//! Tensor calculus on a two-dimensional chart.

mod connection;
mod curvature;
mod derivative;
pub(crate) mod tensor;
mod volume;

use thiserror::Error;

pub use connection::{normalize_connection, shift_connection, ChartConnection};
pub use curvature::{
    cotton_york, cotton_york_tensor, curvature, ricci, rho_tensor, rho_tensor_unchecked,
};
pub use derivative::{covariant_derivative, directional, divergence};
pub use tensor::{Slot, TensorField};
pub use volume::{epsilon, lower, pairing, raise};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GeometryError {
    #[error("expected a tensor with index pattern {expected}, found {found}")]
    ValenceMismatch { expected: String, found: String },
    #[error("expected {expected} components, found {found}")]
    ComponentCount { expected: usize, found: usize },
    #[error("rho tensor is not symmetric; is the connection normalized?")]
    AsymmetricRho,
    #[error("connection has torsion in its upper index {upper}")]
    Torsion { upper: usize },
}
