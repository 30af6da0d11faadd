//! The oscillator representation of sl(n) on the polynomial ring in
//! `x_1..x_n, y_1..y_n`, the twisted Laplacian, the harmonic projection `T`,
//! the bigrading, degree functions, weights and the irreducibility criterion.

mod checks;
mod config;
mod degree;
mod generator;
mod rep;
mod weight;

pub use checks::{
    monomials_up_to, verify_bracket_fidelity, verify_harmonicity, verify_highest_weight,
    BracketReport, HarmonicityReport, HighestWeightReport,
};
pub use config::{Block, Config};
pub use degree::{
    block_sums, compositions, dfun, dfun_monomial, dprime, enumerate_tn_level, graded_key,
    is_homogeneous, n_matrix_monomials, pivot_free, GradedKey,
};
pub use generator::{generator_id, generators, GlElement, Generator};
pub use rep::{
    apply_generator, apply_unit, generator_operator, gl_operator, laplace, laplace_operator,
    project_t, project_t_poly, unit_operator, WeylOp,
};
pub use weight::{classify_irreducible, highest_weight_formula, is_highest_weight, weight};

/// Errors raised by representation-level operations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum OscError {
    /// The parameter set violates `1 <= n1 <= n2 <= n`.
    #[error("invalid configuration: {0}")]
    InvalidConfig(String),
    /// A generator or matrix index is out of range.
    #[error("index out of range: {0}")]
    IndexOutOfRange(String),
    /// The polynomial does not live in the configuration's xy space.
    #[error("polynomial is not in the xy space of the configuration: {0}")]
    WrongSpace(String),
    /// `T` and the TN levels need `n1 < n2`.
    #[error("the harmonic projection requires n1 < n2")]
    NoProjection,
    /// A degree was requested for the zero polynomial.
    #[error("zero polynomial")]
    ZeroPolynomial,
    /// The polynomial mixes bidegrees.
    #[error("polynomial is not homogeneous in the module's bidegree")]
    MixedGrading,
}
