//! Sparse polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use super::monomial::Monomial;
use super::space::VarSpace;
use super::PolyError;

/// Exact rational coefficient.
pub type Q = BigRational;

/// Rational from a machine integer.
pub fn q(n: i64) -> Q {
    Q::from_integer(BigInt::from(n))
}

/// Rational `num/den`.
pub fn qf(num: i64, den: i64) -> Q {
    Q::new(BigInt::from(num), BigInt::from(den))
}

/// A sparse polynomial: monomials mapped to nonzero rationals.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    space: VarSpace,
    terms: BTreeMap<Monomial, Q>,
}

impl Poly {
    /// The zero polynomial.
    pub fn zero(space: &VarSpace) -> Self {
        Poly {
            space: space.clone(),
            terms: BTreeMap::new(),
        }
    }

    /// A constant.
    pub fn constant(space: &VarSpace, c: Q) -> Self {
        Self::term(space, c, Monomial::ONE)
    }

    /// The constant 1.
    pub fn one(space: &VarSpace) -> Self {
        Self::constant(space, Q::one())
    }

    /// A single term `c * m`.
    pub fn term(space: &VarSpace, c: Q, m: Monomial) -> Self {
        let mut p = Self::zero(space);
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    /// A monomial with coefficient 1.
    pub fn monomial(space: &VarSpace, m: Monomial) -> Self {
        Self::term(space, Q::one(), m)
    }

    /// A single variable.
    pub fn var(space: &VarSpace, var: usize) -> Result<Self, PolyError> {
        space.check_var(var)?;
        Ok(Self::monomial(space, Monomial::var(var)))
    }

    /// Builds a polynomial from terms, summing repeated monomials.
    pub fn from_terms(space: &VarSpace, terms: impl IntoIterator<Item = (Monomial, Q)>) -> Self {
        let mut p = Self::zero(space);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    /// The ambient space.
    pub fn space(&self) -> &VarSpace {
        &self.space
    }

    /// Whether this is the zero polynomial.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms (alias of [`Poly::is_zero`]).
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Coefficient of `m` (zero if absent).
    pub fn coeff(&self, m: &Monomial) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl DoubleEndedIterator<Item = (&Monomial, &Q)> + ExactSizeIterator {
        self.terms.iter()
    }

    /// Terms in decreasing monomial order (the canonical display order).
    pub fn terms_desc(&self) -> impl Iterator<Item = (&Monomial, &Q)> {
        self.terms.iter().rev()
    }

    /// Monomials in increasing order.
    pub fn monomials(&self) -> impl Iterator<Item = &Monomial> {
        self.terms.keys()
    }

    /// Leading term under the monomial order.
    pub fn leading(&self) -> Option<(&Monomial, &Q)> {
        self.terms.iter().next_back()
    }

    /// Adds `c * m` in place.
    pub fn add_term(&mut self, m: Monomial, c: Q) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(m) {
            std::collections::btree_map::Entry::Vacant(e) => {
                e.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn same_space(&self, other: &Poly) -> Result<(), PolyError> {
        if self.space == other.space {
            Ok(())
        } else {
            Err(PolyError::SpaceMismatch(
                format!("{:?}", self.space),
                format!("{:?}", other.space),
            ))
        }
    }

    /// Exact sum.
    pub fn checked_add(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_space(other)?;
        let (mut big, small) = if self.len() >= other.len() {
            (self.clone(), other)
        } else {
            (other.clone(), self)
        };
        for (m, c) in &small.terms {
            big.add_term(*m, c.clone());
        }
        Ok(big)
    }

    /// Exact difference.
    pub fn checked_sub(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_space(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(*m, -c.clone());
        }
        Ok(out)
    }

    /// Exact product.
    pub fn checked_mul(&self, other: &Poly) -> Result<Poly, PolyError> {
        self.same_space(other)?;
        let mut out = Poly::zero(&self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &Q) -> Poly {
        if c.is_zero() {
            return Poly::zero(&self.space);
        }
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(m, a)| (*m, a * c)).collect(),
        }
    }

    /// Multiplies by a monomial.
    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly {
            space: self.space.clone(),
            terms: self.terms.iter().map(|(a, c)| (a.mul(m), c.clone())).collect(),
        }
    }

    /// Non-negative integer power.
    pub fn pow(&self, e: u32) -> Poly {
        (0..e).fold(Poly::one(&self.space), |acc, _| &acc * self)
    }

    /// Partial derivative with respect to `var`.
    pub fn diff(&self, var: usize) -> Result<Poly, PolyError> {
        self.space.check_var(var)?;
        let mut out = Poly::zero(&self.space);
        for (m, c) in &self.terms {
            let e = m.exp(var);
            if e > 0 {
                out.add_term(m.with_exp(var, e - 1), c * Q::from_integer(BigInt::from(e)));
            }
        }
        Ok(out)
    }

    /// Simultaneous substitution of variables by polynomials in `target`.
    ///
    /// Unassigned variables must also exist in `target` under the same name.
    pub fn substitute(
        &self,
        assignment: &BTreeMap<usize, Poly>,
        target: &VarSpace,
    ) -> Result<Poly, PolyError> {
        for (v, p) in assignment {
            self.space.check_var(*v)?;
            if p.space() != target {
                return Err(PolyError::SpaceMismatch(
                    format!("{:?}", p.space()),
                    format!("{target:?}"),
                ));
            }
        }
        let mut images: Vec<Poly> = Vec::with_capacity(self.space.nvars());
        for v in 0..self.space.nvars() {
            match assignment.get(&v) {
                Some(p) => images.push(p.clone()),
                None => {
                    let id = target.var_by_name(&self.space.var_name(v))?;
                    images.push(Poly::var(target, id)?);
                }
            }
        }
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            let mut t = Poly::constant(target, c.clone());
            for v in m.support() {
                t = &t * &images[v].pow(m.exp(v));
                if t.is_zero() {
                    break;
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }

    /// Applies a linear map on monomials, accumulating images.
    pub fn map_terms<F>(&self, target: &VarSpace, mut f: F) -> Poly
    where
        F: FnMut(&Monomial, &Q, &mut Poly),
    {
        let mut out = Poly::zero(target);
        for (m, c) in &self.terms {
            f(m, c, &mut out);
        }
        out
    }

    /// Least common multiple of all coefficient denominators.
    pub fn denominator_lcm(&self) -> BigInt {
        use num_integer::Integer;
        self.terms
            .values()
            .fold(BigInt::one(), |acc, c| acc.lcm(c.denom()))
    }

    /// Rescales so the leading coefficient is 1 (zero stays zero).
    pub fn monic(&self) -> Poly {
        match self.leading() {
            Some((_, c)) => self.scale(&c.recip()),
            None => self.clone(),
        }
    }

    /// Canonical text rendering, e.g. `-3/2*x1^2*x2*y3 + y1`.
    pub fn render(&self) -> String {
        if self.is_zero() {
            return "0".to_string();
        }
        let mut s = String::new();
        for (idx, (m, c)) in self.terms_desc().enumerate() {
            let neg = c.is_negative();
            if idx == 0 {
                if neg {
                    s.push('-');
                }
            } else {
                s.push_str(if neg { " - " } else { " + " });
            }
            let a = c.abs();
            let mono = render_monomial(&self.space, m);
            if mono.is_empty() {
                s.push_str(&a.to_string());
            } else if a.is_one() {
                s.push_str(&mono);
            } else {
                s.push_str(&a.to_string());
                s.push('*');
                s.push_str(&mono);
            }
        }
        s
    }

    /// Parses the canonical text form (also accepts unsorted terms).
    pub fn parse(space: &VarSpace, text: &str) -> Result<Poly, PolyError> {
        parse_poly(space, text)
    }
}

/// Renders a monomial as `x1^2*y3` (empty string for 1).
pub fn render_monomial(space: &VarSpace, m: &Monomial) -> String {
    m.support()
        .map(|v| {
            let e = m.exp(v);
            if e == 1 {
                space.var_name(v)
            } else {
                format!("{}^{e}", space.var_name(v))
            }
        })
        .collect::<Vec<_>>()
        .join("*")
}

fn parse_poly(space: &VarSpace, text: &str) -> Result<Poly, PolyError> {
    let err = |msg: &str| PolyError::Parse(format!("{msg} in {text:?}"));
    let compact: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    if compact.is_empty() {
        return Err(err("empty input"));
    }
    let mut out = Poly::zero(space);
    let mut terms: Vec<(bool, String)> = Vec::new();
    let mut cur = String::new();
    let mut neg = false;
    for (idx, ch) in compact.chars().enumerate() {
        if (ch == '+' || ch == '-') && !(idx > 0 && compact[..idx].ends_with('^')) {
            if idx > 0 {
                terms.push((neg, std::mem::take(&mut cur)));
            }
            neg = ch == '-';
        } else {
            cur.push(ch);
        }
    }
    terms.push((neg, cur));
    for (neg, body) in terms {
        if body.is_empty() {
            return Err(err("empty term"));
        }
        let mut coeff = Q::one();
        let mut mono = Monomial::ONE;
        for factor in body.split('*') {
            if factor.is_empty() {
                return Err(err("empty factor"));
            }
            if factor.starts_with(|c: char| c.is_ascii_digit()) {
                let value = match factor.split_once('/') {
                    Some((a, b)) => {
                        let a: BigInt = a.parse().map_err(|_| err("bad numerator"))?;
                        let b: BigInt = b.parse().map_err(|_| err("bad denominator"))?;
                        if b.is_zero() {
                            return Err(err("zero denominator"));
                        }
                        Q::new(a, b)
                    }
                    None => Q::from_integer(factor.parse().map_err(|_| err("bad integer"))?),
                };
                coeff *= value;
            } else {
                let (name, e) = match factor.split_once('^') {
                    Some((n, e)) => (n, e.parse::<u32>().map_err(|_| err("bad exponent"))?),
                    None => (factor, 1),
                };
                let v = space.var_by_name(name)?;
                mono = mono.mul_var(v, e);
            }
        }
        if neg {
            coeff = -coeff;
        }
        out.add_term(mono, coeff);
    }
    Ok(out)
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Poly[{}]", self.render())
    }
}

impl Add for &Poly {
    type Output = Poly;
    /// # Panics
    /// Panics when the spaces differ; use [`Poly::checked_add`] to handle that case.
    fn add(self, rhs: &Poly) -> Poly {
        self.checked_add(rhs).expect("polynomial space mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    /// # Panics
    /// Panics when the spaces differ; use [`Poly::checked_sub`] to handle that case.
    fn sub(self, rhs: &Poly) -> Poly {
        self.checked_sub(rhs).expect("polynomial space mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    /// # Panics
    /// Panics when the spaces differ; use [`Poly::checked_mul`] to handle that case.
    fn mul(self, rhs: &Poly) -> Poly {
        self.checked_mul(rhs).expect("polynomial space mismatch")
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        self.scale(&-Q::one())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn xy3() -> VarSpace {
        VarSpace::xy(3).unwrap()
    }

    fn p(s: &str) -> Poly {
        Poly::parse(&xy3(), s).unwrap()
    }

    #[test]
    fn additive_inverse_cancels() {
        assert!((&p("x1") + &p("-x1")).is_zero());
    }

    #[test]
    fn coefficient_doubling() {
        assert_eq!(&p("x1*x2") + &p("x1*x2"), p("2*x1*x2"));
    }

    #[test]
    fn term_cancellation() {
        assert_eq!(&p("y1 + x1*x2*y2") + &p("-y1"), p("x1*x2*y2"));
    }

    #[test]
    fn products() {
        let a = p("x1*x3 - y1*y3");
        assert_eq!(&a * &p("1"), a);
        assert_eq!(
            &a * &a,
            p("x1^2*x3^2 - 2*x1*x3*y1*y3 + y1^2*y3^2")
        );
        assert_eq!(&p("x1") * &p("y1"), p("x1*y1"));
    }

    #[test]
    fn derivatives() {
        let s = xy3();
        assert_eq!(p("x1^2*x2").diff(s.x(1).unwrap()).unwrap(), p("2*x1*x2"));
        assert!(p("x1*x2").diff(s.y(2).unwrap()).unwrap().is_zero());
        assert_eq!(
            p("x1*y1 + y1^2").diff(s.y(1).unwrap()).unwrap(),
            p("x1 + 2*y1")
        );
        assert!(p("x1").diff(17).is_err());
    }

    #[test]
    fn substitution_in_xy() {
        let s = xy3();
        let mut a = BTreeMap::new();
        a.insert(s.x(1).unwrap(), Poly::zero(&s));
        a.insert(s.y(1).unwrap(), Poly::one(&s));
        assert_eq!(p("x1*x3 - y1*y3").substitute(&a, &s).unwrap(), p("-y3"));
    }

    #[test]
    fn substitution_from_z() {
        let z = VarSpace::z(&[4, 5], &[1, 2], &[]).unwrap();
        let xy = VarSpace::xy(5).unwrap();
        let mut a = BTreeMap::new();
        for &(j, i) in z.z_layout().unwrap().vars() {
            let img = Poly::parse(&xy, &format!("x{i}*x{j}")).unwrap();
            a.insert(z.zvar(j, i).unwrap(), img);
        }
        let z41 = Poly::parse(&z, "z4_1").unwrap();
        assert_eq!(
            z41.substitute(&a, &xy).unwrap(),
            Poly::parse(&xy, "x1*x4").unwrap()
        );
        let minor = Poly::parse(&z, "z4_1*z5_2 - z4_2*z5_1").unwrap();
        assert!(minor.substitute(&a, &xy).unwrap().is_zero());
    }

    #[test]
    fn render_is_canonical() {
        let s = xy3();
        let poly = Poly::from_terms(
            &s,
            [
                (Monomial::var(s.y(1).unwrap()), q(1)),
                (
                    Monomial::from_exponents(&[2, 1, 0, 0, 0, 1]),
                    qf(-3, 2),
                ),
            ],
        );
        assert_eq!(poly.render(), "-3/2*x1^2*x2*y3 + y1");
        assert_eq!(Poly::parse(&s, &poly.render()).unwrap(), poly);
        assert_eq!(Poly::zero(&s).render(), "0");
        assert_eq!(p("-7/3").render(), "-7/3");
        assert_eq!(p("x2 - x1").render(), "-x1 + x2");
    }

    #[test]
    fn parse_errors() {
        let s = xy3();
        assert!(Poly::parse(&s, "").is_err());
        assert!(Poly::parse(&s, "x9").is_err());
        assert!(Poly::parse(&s, "1/0").is_err());
        assert!(Poly::parse(&s, "x1**x2").is_err());
    }

    #[test]
    fn space_mismatch_is_reported() {
        let a = Poly::one(&VarSpace::xy(2).unwrap());
        let b = Poly::one(&VarSpace::xy(3).unwrap());
        assert!(matches!(a.checked_add(&b), Err(PolyError::SpaceMismatch(..))));
    }
}
