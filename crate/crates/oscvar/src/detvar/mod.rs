//! Determinantal ideals in matrix-indexed variables, the evaluation maps into
//! the xy-ring, 3-chain combinatorics and the kernel identifications that link
//! products of alternating quadratics to minors.

mod chains;
mod minors;
mod ring;
mod verify;

pub use chains::{enumerate_gset, has_3chain, has_3chain_bruteforce, IndexedMonomial};
pub use minors::{ideal_piece, minor_generators, MinorIdealSpec};
pub use ring::{monomials_of_degree, ZRing};
pub use verify::{
    verify_gset_independence, verify_phi_kernel_three_minors, verify_phi_kernels_two_minors,
    DegreeComparison, IndependenceReport, KernelReport,
};

use crate::exactpoly::PolyError;

/// Errors raised by determinantal computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum DetError {
    /// The polynomial uses variables outside the restricted ring.
    #[error("polynomial uses variables outside the restricted ring")]
    ExtendedVariables,
    /// The polynomial does not live in the ring's space.
    #[error("polynomial is not in the z-ring")]
    WrongSpace,
    /// Index multisets do not match the requested factor counts.
    #[error("size mismatch: {0}")]
    SizeMismatch(String),
    /// The blocks are too small or too large for the ring.
    #[error("invalid ring: {0}")]
    InvalidRing(String),
    /// Polynomial-level failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
}
