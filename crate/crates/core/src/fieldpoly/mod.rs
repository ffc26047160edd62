//! Exact coefficient fields, sparse multivariate polynomials, dense
//! matrices over fields and polynomial rings, and the text format.

mod field;
mod matrix;
mod monomial;
mod parse;
mod poly;
mod univariate;

use thiserror::Error;

pub use field::{Coeff, FieldSpec};
pub use matrix::{char_poly, FieldMatrix, PolyMatrix};
pub use monomial::{Monomial, MonomialOrder};
pub use parse::{format_ideal_file, parse_ideal_file, parse_poly};
pub use poly::{Polynomial, Ring};
pub use univariate::{squarefree_part, Squarefree, UniPoly};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum PolyError {
    #[error("syntax error at line {line}, column {column}: {message}")]
    Syntax { line: usize, column: usize, message: String },
    #[error("unknown identifier {0}")]
    UnknownIdentifier(String),
    #[error("coefficient not invertible: {0}")]
    NotInvertible(String),
    #[error("invalid field: {0}")]
    InvalidField(String),
    #[error("ring mismatch: {0}")]
    RingMismatch(String),
    #[error("matrix is not square ({rows}x{cols})")]
    NotSquare { rows: usize, cols: usize },
    #[error("polynomial is not univariate: {0}")]
    NotUnivariate(String),
    #[error("zero polynomial")]
    ZeroPolynomial,
}
