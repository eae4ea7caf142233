//! Exact symbolic engine for local obstructions to a projective surface
//! admitting a connection with skew-symmetric Ricci tensor.
//!
//! The pipeline takes polynomial (or rational) connection coefficients on a
//! two-dimensional chart, passes to the representative with parallel volume
//! form, computes the projective Cotton–York invariant and its descendants,
//! and assembles the obstruction polynomials and resultant determinants.
//! All arithmetic is over ℚ.

mod error;
pub mod exactmath;
pub mod exprparse;
pub mod geometry;
pub mod obstruction;
pub mod pipeline;

pub use error::Error;
