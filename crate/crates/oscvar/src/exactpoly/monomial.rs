//! Packed exponent vectors.
//!
//! A monomial stores up to [`MAX_VARS`] exponents, one byte each, packed into a
//! `u128` with variable 0 in the most significant byte. The total degree is
//! kept alongside, so the derived ordering is graded lexicographic with
//! variable 0 largest.

use std::fmt;

/// Maximum number of variables a monomial can carry.
pub const MAX_VARS: usize = 16;

/// Largest exponent representable for a single variable.
pub const MAX_EXPONENT: u32 = u8::MAX as u32;

/// A monomial in at most [`MAX_VARS`] variables, ordered grlex.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Monomial {
    degree: u32,
    packed: u128,
}

#[inline]
fn shift(var: usize) -> u32 {
    debug_assert!(var < MAX_VARS, "variable index {var} out of range");
    ((MAX_VARS - 1 - var) * 8) as u32
}

impl Monomial {
    /// The constant monomial 1.
    pub const ONE: Monomial = Monomial { degree: 0, packed: 0 };

    /// The monomial consisting of a single variable.
    pub fn var(var: usize) -> Self {
        Self::ONE.with_exp(var, 1)
    }

    /// Builds a monomial from an exponent slice (index = variable id).
    ///
    /// # Panics
    /// Panics if more than [`MAX_VARS`] exponents are given or one exceeds
    /// [`MAX_EXPONENT`].
    pub fn from_exponents(exps: &[u32]) -> Self {
        assert!(exps.len() <= MAX_VARS, "too many variables");
        exps.iter()
            .enumerate()
            .fold(Self::ONE, |m, (v, &e)| m.with_exp(v, e))
    }

    /// Exponent of variable `var`.
    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        ((self.packed >> shift(var)) & 0xff) as u32
    }

    /// Returns a copy with the exponent of `var` replaced.
    ///
    /// # Panics
    /// Panics if `e` exceeds [`MAX_EXPONENT`].
    #[inline]
    pub fn with_exp(&self, var: usize, e: u32) -> Self {
        assert!(e <= MAX_EXPONENT, "exponent overflow on variable {var}");
        let old = self.exp(var);
        let s = shift(var);
        let packed = (self.packed & !(0xffu128 << s)) | ((e as u128) << s);
        Monomial {
            degree: self.degree - old + e,
            packed,
        }
    }

    /// Total degree.
    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    /// Whether this is the constant monomial.
    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    /// Product of two monomials.
    ///
    /// # Panics
    /// Panics on per-variable exponent overflow.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut out = *self;
        for v in other.support() {
            out = out.with_exp(v, self.exp(v) + other.exp(v));
        }
        out
    }

    /// Multiplies by `var^e`.
    #[inline]
    pub fn mul_var(&self, var: usize, e: u32) -> Monomial {
        self.with_exp(var, self.exp(var) + e)
    }

    /// Divides by `var^e`, returning `None` when the exponent is too small.
    #[inline]
    pub fn div_var(&self, var: usize, e: u32) -> Option<Monomial> {
        let have = self.exp(var);
        (have >= e).then(|| self.with_exp(var, have - e))
    }

    /// Whether `self` divides `other`.
    pub fn divides(&self, other: &Monomial) -> bool {
        self.support().all(|v| self.exp(v) <= other.exp(v))
    }

    /// Variables with a nonzero exponent, in increasing id order.
    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        (0..MAX_VARS).filter(move |&v| self.exp(v) > 0)
    }

    /// The exponent vector truncated to `nvars` entries.
    pub fn exponents(&self, nvars: usize) -> Vec<u32> {
        (0..nvars).map(|v| self.exp(v)).collect()
    }

    /// Sum of the exponents of the listed variables.
    pub fn block_degree(&self, vars: impl IntoIterator<Item = usize>) -> u32 {
        vars.into_iter().map(|v| self.exp(v)).sum()
    }
}

impl fmt::Debug for Monomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<u32> = self.exponents(MAX_VARS);
        let last = exps.iter().rposition(|&e| e > 0).map_or(0, |p| p + 1);
        write!(f, "Monomial{:?}", &exps[..last])
    }
}
