//! Elements of the symmetric algebra `S(sl(n))`.

use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::Q;
use crate::oscrep::{generator_id, generators, Generator};

use super::AnnihilatorError;

/// A commutative monomial in the generators: generator ids in ascending order.
pub type SymMonomial = Vec<usize>;

/// A polynomial in the `n^2 - 1` commuting generator symbols of `sl(n)`.
///
/// Generator ids follow [`generators`]: root vectors row-major, then the
/// Cartan elements `H_r = E_{r,r} - E_{r+1,r+1}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SymElement {
    n: usize,
    terms: BTreeMap<SymMonomial, Q>,
}

impl SymElement {
    /// The zero element.
    pub fn zero(n: usize) -> Self {
        SymElement {
            n,
            terms: BTreeMap::new(),
        }
    }

    /// The constant `1`.
    pub fn one(n: usize) -> Self {
        Self::monomial(n, Vec::new(), Q::one())
    }

    /// `c` times one monomial; the ids may be given in any order.
    pub fn monomial(n: usize, mut ids: SymMonomial, c: Q) -> Self {
        ids.sort_unstable();
        let mut out = Self::zero(n);
        out.add_term(ids, c);
        out
    }

    /// The degree-one symbol of a generator.
    pub fn generator(n: usize, g: Generator) -> Result<Self, AnnihilatorError> {
        g.validate(n)?;
        Ok(Self::monomial(n, vec![generator_id(n, g)], Q::one()))
    }

    /// The symbol of the gl(n) matrix unit `E_{j,i}` projected to sl(n).
    ///
    /// Off-diagonal units are root vectors. A diagonal unit differs from its
    /// traceless part `E_{j,j} - (1/n) I` by a central scalar, so its symbol
    /// is that traceless part written in the Cartan basis.
    pub fn unit(n: usize, j: usize, i: usize) -> Result<Self, AnnihilatorError> {
        if j != i {
            return Self::generator(n, Generator::Root(j, i));
        }
        Generator::Root(j, if j == 1 { 2 } else { 1 }).validate(n)?;
        let mut out = Self::zero(n);
        for r in 1..n {
            let c = Q::from_integer(BigInt::from(i64::from(r >= j)))
                - Q::new(BigInt::from(r), BigInt::from(n));
            out.add_term(vec![generator_id(n, Generator::Cartan(r))], c);
        }
        Ok(out)
    }

    /// Rank of the Lie algebra's defining representation.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Adds `c` times a sorted monomial.
    fn add_term(&mut self, ids: SymMonomial, c: Q) {
        if c.is_zero() {
            return;
        }
        let slot = self.terms.entry(ids.clone()).or_insert_with(Q::zero);
        *slot += c;
        if slot.is_zero() {
            self.terms.remove(&ids);
        }
    }

    /// Whether this is zero.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Number of terms.
    pub fn len(&self) -> usize {
        self.terms.len()
    }

    /// Whether there are no terms.
    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in increasing monomial order.
    pub fn terms(&self) -> impl Iterator<Item = (&SymMonomial, &Q)> {
        self.terms.iter()
    }

    /// The common degree of all terms, or `None` for zero or mixed degrees.
    pub fn degree(&self) -> Option<usize> {
        let mut it = self.terms.keys().map(Vec::len);
        let d = it.next()?;
        it.all(|e| e == d).then_some(d)
    }

    /// Sum.
    pub fn add(&self, other: &SymElement) -> SymElement {
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        out
    }

    /// Scalar multiple.
    pub fn scale(&self, c: &Q) -> SymElement {
        let mut out = Self::zero(self.n);
        for (m, v) in &self.terms {
            out.add_term(m.clone(), v * c);
        }
        out
    }

    /// Product.
    pub fn mul(&self, other: &SymElement) -> SymElement {
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let mut m = a.clone();
                m.extend_from_slice(b);
                m.sort_unstable();
                out.add_term(m, ca * cb);
            }
        }
        out
    }

    /// `self^e`.
    pub fn pow(&self, e: u32) -> SymElement {
        (0..e).fold(Self::one(self.n), |acc, _| acc.mul(self))
    }

    /// Drops every term containing a generator outside `keep`.
    ///
    /// When the dropped generators span an ideal-generating subspace `V`,
    /// this is the projection `S(g) → S(g) / ⟨V⟩` realized on the polynomial
    /// ring of the kept generators.
    pub fn restrict(&self, keep: impl Fn(usize) -> bool) -> SymElement {
        let mut out = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.iter().all(|&g| keep(g)) {
                out.add_term(m.clone(), c.clone());
            }
        }
        out
    }

    /// Canonical text form, e.g. `E2_1*E3_2 - 1/2*H1`.
    pub fn render(&self) -> String {
        if self.terms.is_empty() {
            return "0".to_string();
        }
        let gens = generators(self.n);
        let mut out = String::new();
        for (idx, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c < &Q::zero();
            let abs = if neg { -c.clone() } else { c.clone() };
            if idx == 0 {
                if neg {
                    out.push('-');
                }
            } else {
                out.push_str(if neg { " - " } else { " + " });
            }
            let mono = render_monomial(&gens, m);
            if mono.is_empty() {
                out.push_str(&abs.to_string());
            } else if abs.is_one() {
                out.push_str(&mono);
            } else {
                out.push_str(&format!("{abs}*{mono}"));
            }
        }
        out
    }
}

fn render_monomial(gens: &[Generator], m: &[usize]) -> String {
    let mut parts: Vec<String> = Vec::new();
    let mut idx = 0;
    while idx < m.len() {
        let g = m[idx];
        let mut e = 1;
        while idx + e < m.len() && m[idx + e] == g {
            e += 1;
        }
        parts.push(if e == 1 {
            gens[g].to_string()
        } else {
            format!("{}^{e}", gens[g])
        });
        idx += e;
    }
    parts.join("*")
}

impl fmt::Display for SymElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.render())
    }
}

/// All monomials of degree `p` in the given generator ids (taken in
/// ascending order), in lexicographic order.
pub fn sym_monomials(ids: &[usize], p: usize) -> Vec<SymMonomial> {
    fn rec(ids: &[usize], start: usize, left: usize, cur: &mut Vec<usize>, out: &mut Vec<SymMonomial>) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for pos in start..ids.len() {
            cur.push(ids[pos]);
            rec(ids, pos, left - 1, cur, out);
            cur.pop();
        }
    }
    let mut sorted = ids.to_vec();
    sorted.sort_unstable();
    sorted.dedup();
    let mut out = Vec::new();
    rec(&sorted, 0, p, &mut Vec::new(), &mut out);
    out
}
