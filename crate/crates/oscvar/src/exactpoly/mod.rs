//! Exact sparse multivariate polynomials over the rationals and the
//! fraction-free linear algebra built on them.

mod echelon;
pub mod linalg;
mod monomial;
mod poly;
mod space;

pub use echelon::{kernel_of_map, EchelonBasis};
pub use monomial::{Monomial, MAX_EXPONENT, MAX_VARS};
pub use poly::{q, qf, render_monomial, Poly, Q};
pub use space::{VarSpace, ZLayout};

/// Errors raised by polynomial operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum PolyError {
    /// Operands live in different variable spaces.
    #[error("variable space mismatch: {0} vs {1}")]
    SpaceMismatch(String, String),
    /// A variable is not part of the space.
    #[error("unknown variable {0}")]
    UnknownVariable(String),
    /// A space could not be constructed.
    #[error("invalid variable space: {0}")]
    InvalidSpace(String),
    /// Polynomial text could not be parsed.
    #[error("parse error: {0}")]
    Parse(String),
}
