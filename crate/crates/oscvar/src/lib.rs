//! Exact computational algebra for the oscillator representation of sl(n).
//!
//! The crate realizes sl(n) by differential operators on the polynomial ring
//! in `x_1..x_n, y_1..y_n`, builds the harmonic modules attached to a signed
//! bidegree, computes their enveloping-algebra filtrations two independent
//! ways, and verifies the associated-variety description of the annihilator
//! with exact rational arithmetic.

pub mod exactpoly;
pub mod oscrep;
pub mod filtration;
pub mod detvar;
pub mod annihilator;
pub mod report;
pub mod suite;
