//! Annihilators of the associated graded module: the degree-`p` pieces
//! `I_(p) ⊂ S(sl(n))`, the alternating minor operators, checks of their
//! membership and of the exact shape of the low-degree pieces, and growth
//! estimates for the Gelfand-Kirillov dimension.

mod action;
mod delta;
mod gkdim;
mod kernel;
mod symbol;
mod verify;

pub use action::{
    act, apply_word, apply_word_sum, check_membership, top_checked_level, MembershipCheck, SymAction,
};
pub use delta::{delta_ops, minors, word_sum_symbol, DeltaFamily, DeltaOp, UnitWord};
pub use gkdim::{expected_gkdim, gkdim_estimate, GkEstimate, MIN_GKDIM_DEPTH};
pub use kernel::{
    compare_spans, compute_ip, compute_ip_with_progress, ideal_degree_piece, l_generator_ids,
    off_l_generator_ids, span_dim, split_degree_one, AnnihilatorPiece, DegreeOneSplit, Scope,
    SpanComparison,
};
pub use symbol::{sym_monomials, SymElement, SymMonomial};
pub use verify::{
    triple_case, verify_main_theorem, verify_pair_minors, verify_triple_minors,
    verify_zero_operator_case, CaseMembership, MainTheoremReport, PairMinorReport, SignCase,
    TheoremBranch, TripleMinorReport, ZeroOperatorCheck,
};

use crate::exactpoly::PolyError;
use crate::filtration::FiltrationError;
use crate::oscrep::OscError;

/// Errors raised by annihilator computations.
#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AnnihilatorError {
    /// The tower is too shallow for the requested residue.
    #[error("residue needs level {needed} but the tower has depth {depth}")]
    TooShallow { needed: usize, depth: usize },
    /// An argument violates the stated preconditions.
    #[error("precondition violated: {0}")]
    Precondition(String),
    /// A symbol is not homogeneous of the expected degree.
    #[error("symbol {0} is not homogeneous of the expected degree")]
    NotHomogeneous(String),
    /// The configuration lies outside the regimes covered by the checks.
    #[error("unsupported regime: {0}")]
    Unsupported(String),
    /// Representation-level failure.
    #[error(transparent)]
    Osc(#[from] OscError),
    /// Filtration-level failure.
    #[error(transparent)]
    Filtration(#[from] FiltrationError),
    /// Polynomial-level failure.
    #[error(transparent)]
    Poly(#[from] PolyError),
}
