//! Exact arithmetic: rationals, bivariate polynomials and rational functions
//! over ℚ, univariate polynomials, determinants and resultants.

mod field;
mod gcd;
mod matrix;
mod mpoly;
mod ratfunc;
mod resultant;
mod unipoly;

pub use field::{parse_rational, rat, Field, Ring};
pub use gcd::{mpoly_gcd, mpoly_lcm};
pub use matrix::{bareiss_det, det_exact};
pub use mpoly::{MPoly, Monomial, Var, Variables};
pub use num_rational::BigRational;
pub use ratfunc::RatFunc;
pub use resultant::{sylvester_matrix, sylvester_resultant};
pub use unipoly::UniPoly;


use thiserror::Error;

/// A point of the chart, `(x, y)`.
pub type Point = (BigRational, BigRational);

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ArithError {
    #[error("division by the zero rational function")]
    DivisionByZero,
    #[error("denominator {denominator} vanishes at {point}")]
    PoleAtPoint { denominator: String, point: String },
    #[error("unknown variable `{0}`")]
    UnknownVariable(String),
    #[error("invalid variable name `{0}`")]
    InvalidVariableName(String),
    #[error("resultant of the zero polynomial")]
    ZeroPolynomial,
    #[error("matrix is not square ({rows} rows, a row of length {cols})")]
    NotSquare { rows: usize, cols: usize },
}
