//! Echelon bases of polynomial spans.

use num_bigint::BigInt;

use super::linalg::{integerize, kernel, rationalize, Echelon, SparseVec};
use super::monomial::Monomial;
use super::poly::{Poly, Q};
use super::space::VarSpace;
use super::PolyError;

/// Row-reduced basis of a span of polynomials.
///
/// Besides the reduced rows, the basis keeps the original polynomial that
/// created each row (`sources`); the sources form a basis of the same span
/// and are typically sparser than the reduced rows.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    space: VarSpace,
    engine: Echelon<Monomial>,
    sources: Vec<Poly>,
}

fn to_vec(p: &Poly) -> (SparseVec<Monomial>, BigInt) {
    integerize(p.terms_desc().map(|(m, c)| (*m, c.clone())))
}

impl EchelonBasis {
    /// An empty basis in `space`.
    pub fn new(space: &VarSpace) -> Self {
        EchelonBasis {
            space: space.clone(),
            engine: Echelon::new(),
            sources: Vec::new(),
        }
    }

    /// Builds a basis of the span of `polys`.
    pub fn from_polys<'a>(
        space: &VarSpace,
        polys: impl IntoIterator<Item = &'a Poly>,
    ) -> Result<Self, PolyError> {
        let mut b = Self::new(space);
        for p in polys {
            b.insert(p)?;
        }
        Ok(b)
    }

    /// The ambient space.
    pub fn space(&self) -> &VarSpace {
        &self.space
    }

    /// Dimension of the span.
    pub fn dim(&self) -> usize {
        self.engine.len()
    }

    fn check(&self, p: &Poly) -> Result<(), PolyError> {
        if p.space() == &self.space {
            Ok(())
        } else {
            Err(PolyError::SpaceMismatch(
                format!("{:?}", p.space()),
                format!("{:?}", self.space),
            ))
        }
    }

    /// Adds `p` to the span; returns true iff the dimension grew.
    pub fn insert(&mut self, p: &Poly) -> Result<bool, PolyError> {
        self.check(p)?;
        let grew = self.engine.insert(to_vec(p).0);
        if grew {
            self.sources.push(p.clone());
        }
        Ok(grew)
    }

    /// Normal form of `p` modulo the span of the first `rows` rows.
    pub fn reduce_prefix(&self, p: &Poly, rows: usize) -> Result<Poly, PolyError> {
        self.check(p)?;
        let (w, d) = self.engine.reduce_prefix(to_vec(p).0, rows);
        Ok(Poly::from_terms(&self.space, rationalize(w, &d)))
    }

    /// Normal form of `p` modulo the span; zero iff `p` is in the span.
    pub fn reduce(&self, p: &Poly) -> Result<Poly, PolyError> {
        self.reduce_prefix(p, self.dim())
    }

    /// Whether `p` lies in the span of the first `rows` rows.
    pub fn contains_prefix(&self, p: &Poly, rows: usize) -> Result<bool, PolyError> {
        self.check(p)?;
        Ok(self.engine.reduce_prefix(to_vec(p).0, rows).0.is_empty())
    }

    /// Whether `p` lies in the span.
    pub fn contains(&self, p: &Poly) -> Result<bool, PolyError> {
        self.contains_prefix(p, self.dim())
    }

    /// The polynomials that created each row, in insertion order.
    pub fn sources(&self) -> &[Poly] {
        &self.sources
    }

    /// The unique reduced echelon rows (monic, decreasing pivots).
    pub fn rows(&self) -> Vec<Poly> {
        self.engine
            .canonical()
            .into_iter()
            .map(|r| Poly::from_terms(&self.space, r))
            .collect()
    }

    /// A copy restricted to the first `rows` rows.
    pub fn truncated(&self, rows: usize) -> EchelonBasis {
        let mut b = EchelonBasis::new(&self.space);
        for p in &self.sources[..rows.min(self.sources.len())] {
            b.insert(p).expect("same space");
        }
        b
    }

    /// Whether every source of `self` lies in the span of `other`.
    pub fn is_subspace_of(&self, other: &EchelonBasis) -> Result<bool, PolyError> {
        for p in &self.sources {
            if !other.contains(p)? {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Two-sided span equality.
    pub fn same_span(&self, other: &EchelonBasis) -> Result<bool, PolyError> {
        Ok(self.dim() == other.dim() && self.is_subspace_of(other)? && other.is_subspace_of(self)?)
    }
}

/// Kernel of a linear map given on a list of domain elements.
///
/// Returns the reduced echelon basis of coefficient vectors `c` (sparse,
/// indexed by position in `domain`) with `map(Σ c_i domain_i) = 0`.
pub fn kernel_of_map<F>(domain: &[Poly], mut map: F) -> Vec<Vec<(usize, Q)>>
where
    F: FnMut(&Poly) -> Poly,
{
    let images: Vec<Vec<(Monomial, Q)>> = domain
        .iter()
        .map(|p| map(p).terms().map(|(m, c)| (*m, c.clone())).collect())
        .collect();
    kernel(&images)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn s() -> VarSpace {
        VarSpace::xy(3).unwrap()
    }

    fn p(t: &str) -> Poly {
        Poly::parse(&s(), t).unwrap()
    }

    #[test]
    fn insert_examples() {
        let mut b = EchelonBasis::new(&s());
        assert!(b.insert(&p("x1")).unwrap());
        assert_eq!(b.dim(), 1);
        assert!(!b.insert(&p("2*x1")).unwrap());
        assert_eq!(b.dim(), 1);

        let mut c = EchelonBasis::new(&s());
        assert!(c.insert(&p("x1 + x2")).unwrap());
        assert!(c.insert(&p("x1 - x2")).unwrap());
        assert!(!c.insert(&p("x2")).unwrap());
        assert_eq!(c.dim(), 2);
    }

    #[test]
    fn reduce_and_rows() {
        let b = EchelonBasis::from_polys(&s(), &[p("x1 + x2"), p("x2 + y1")]).unwrap();
        assert!(b.contains(&p("x1 - y1")).unwrap());
        assert_eq!(b.reduce(&p("x1")).unwrap(), p("y1"));
        assert_eq!(b.rows(), vec![p("x1 - y1"), p("x2 + y1")]);
        assert!(!b.contains_prefix(&p("x2 + y1"), 1).unwrap());
    }

    #[test]
    fn kernel_examples() {
        let dom = vec![p("x1"), p("x2")];
        assert!(kernel_of_map(&dom, |f| f.clone()).is_empty());
        let three = vec![p("x1"), p("x2"), p("y1")];
        assert_eq!(kernel_of_map(&three, |f| Poly::zero(f.space())).len(), 3);
    }
}
