//! The filtration `M_0 ⊆ M_1 ⊆ …` of a harmonic module by the degree
//! filtration of the enveloping algebra, computed both by generator closure
//! and from explicit spanning sets, together with P-orders and the operator
//! identities that relate `T` to ordered products of root vectors.

mod identities;
mod porder;
mod pset;
mod regime;
mod tower;

pub use identities::{
    check_pivot_identity, verify_pivot_identities, IdentityCase, IdentityFamily, IdentityOutcome,
    IdentityReport, SignRule,
};
pub use porder::{p_order, verify_order_bound, OrderBoundReport, OrderSpans};
pub use pset::PSet;
pub use regime::{build_m0, irreducibility_warning, ExplicitSpanner, Regime};
pub use tower::{
    check_dprime_increments, check_g_stability, check_nesting, hilbert_sequence, verify_prop23,
    FiltrationTower, LevelComparison, Method, Prop23Report, TowerDump,
};

use crate::exactpoly::PolyError;
use crate::oscrep::OscError;

/// Errors raised by filtration computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum FiltrationError {
    /// The parameter regime is not covered by any spanning-set description.
    #[error("unsupported regime: {0}")]
    Unsupported(String),
    /// An argument violates the stated preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A polynomial is not in the requested filtration level.
    #[error("polynomial is not in M_{0}")]
    NotInLevel(usize),
    /// A requested level exceeds the tower depth.
    #[error("level {0} exceeds tower depth {1}")]
    TooShallow(usize, usize),
    /// Representation-level failure.
    #[error(transparent)]
    Osc(#[from] OscError),
    /// Polynomial-level failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
}
