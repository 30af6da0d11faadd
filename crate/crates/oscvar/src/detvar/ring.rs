//! The z-rings and their evaluation homomorphisms into the xy-ring.

use std::collections::HashMap;

use crate::exactpoly::{q, Monomial, Poly, VarSpace};
use crate::oscrep::{compositions, Config};

use super::DetError;

/// A polynomial ring in variables `z_{j,i}` indexed by rows `j` and columns `i`.
///
/// The restricted ring has rows `J3` and columns `J1`. The extended ring adds
/// row `n+1` and column `0`, without `z_{n+1,0}`; its variables `z_{n+1,i}`
/// and `z_{j,0}` play the roles of `x_i` and `y_j`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ZRing {
    n: usize,
    j1: Vec<usize>,
    j3: Vec<usize>,
    extended: bool,
    space: VarSpace,
}

impl ZRing {
    fn build(cfg: &Config, extended: bool) -> Result<Self, DetError> {
        let j1: Vec<usize> = cfg.j1().collect();
        let j3: Vec<usize> = cfg.j3().collect();
        if j3.is_empty() {
            return Err(DetError::InvalidRing(format!("{}: J3 is empty", cfg.label())));
        }
        let n = cfg.n;
        let (mut rows, mut cols, excluded) = (j3.clone(), j1.clone(), Vec::new());
        let mut excluded = excluded;
        if extended {
            rows.push(n + 1);
            cols.insert(0, 0);
            excluded.push((n + 1, 0));
        }
        let space = VarSpace::z(&rows, &cols, &excluded)?;
        Ok(ZRing {
            n,
            j1,
            j3,
            extended,
            space,
        })
    }

    /// The ring in `z_{j,i}`, `j ∈ J3`, `i ∈ J1`.
    pub fn restricted(cfg: &Config) -> Result<Self, DetError> {
        Self::build(cfg, false)
    }

    /// The ring in `z_{j,i}`, `j ∈ J3 ∪ {n+1}`, `i ∈ {0} ∪ J1`, `(j,i) != (n+1,0)`.
    pub fn extended(cfg: &Config) -> Result<Self, DetError> {
        Self::build(cfg, true)
    }

    /// The variable space.
    pub fn space(&self) -> &VarSpace {
        &self.space
    }

    /// Whether row `n+1` and column `0` are present.
    pub fn is_extended(&self) -> bool {
        self.extended
    }

    /// `n`.
    pub fn n(&self) -> usize {
        self.n
    }

    /// Column indices `J1`.
    pub fn j1(&self) -> &[usize] {
        &self.j1
    }

    /// Row indices `J3`.
    pub fn j3(&self) -> &[usize] {
        &self.j3
    }

    /// All row indices of the ring.
    pub fn rows(&self) -> &[usize] {
        self.space.z_layout().expect("z space").rows()
    }

    /// All column indices of the ring.
    pub fn cols(&self) -> &[usize] {
        self.space.z_layout().expect("z space").cols()
    }

    /// `(row, col)` of a variable id.
    pub fn pair(&self, var: usize) -> (usize, usize) {
        self.space.z_layout().expect("z space").vars()[var]
    }

    /// The target xy space.
    pub fn target(&self) -> VarSpace {
        VarSpace::xy(self.n).expect("n validated by the configuration")
    }

    /// Polynomial `z_{row,col}`.
    pub fn z(&self, row: usize, col: usize) -> Result<Poly, DetError> {
        Ok(Poly::var(&self.space, self.space.zvar(row, col)?)?)
    }

    fn check(&self, p: &Poly) -> Result<(), DetError> {
        if p.space() == &self.space {
            Ok(())
        } else {
            Err(DetError::WrongSpace)
        }
    }

    fn evaluate(&self, p: &Poly, image: impl Fn(usize, usize) -> Poly) -> Poly {
        let nv = self.space.nvars();
        let images: Vec<Poly> = (0..nv)
            .map(|v| {
                let (j, i) = self.pair(v);
                image(j, i)
            })
            .collect();
        let target = self.target();
        let mut cache: HashMap<(usize, u32), Poly> = HashMap::new();
        let mut out = Poly::zero(&target);
        for (m, c) in p.terms() {
            let mut term = Poly::constant(&target, c.clone());
            for v in m.support() {
                let e = m.exp(v);
                let pw = cache.entry((v, e)).or_insert_with(|| images[v].pow(e)).clone();
                term = &term * &pw;
            }
            out = &out + &term;
        }
        out
    }

    fn restricted_only(&self, p: &Poly) -> Result<(), DetError> {
        self.check(p)?;
        let bad = p
            .monomials()
            .any(|m| m.support().any(|v| !self.j3.contains(&self.pair(v).0) || !self.j1.contains(&self.pair(v).1)));
        if bad {
            Err(DetError::ExtendedVariables)
        } else {
            Ok(())
        }
    }

    fn xy_product(&self, a: usize, b: usize, use_x: bool) -> Poly {
        let t = self.target();
        let var = |i: usize| if use_x { i - 1 } else { self.n + i - 1 };
        Poly::monomial(&t, Monomial::var(var(a)).mul_var(var(b), 1))
    }

    /// `φ_x(z_{j,i}) = x_i x_j`, defined on the restricted ring.
    pub fn phi_x(&self, p: &Poly) -> Result<Poly, DetError> {
        self.restricted_only(p)?;
        Ok(self.evaluate(p, |j, i| self.xy_product(i, j, true)))
    }

    /// `φ_y(z_{j,i}) = y_i y_j`, defined on the restricted ring.
    pub fn phi_y(&self, p: &Poly) -> Result<Poly, DetError> {
        self.restricted_only(p)?;
        Ok(self.evaluate(p, |j, i| self.xy_product(i, j, false)))
    }

    /// `φ(z_{j,i}) = x_i x_j - y_i y_j`, `φ(z_{n+1,i}) = x_i`, `φ(z_{j,0}) = y_j`.
    pub fn phi(&self, p: &Poly) -> Result<Poly, DetError> {
        self.check(p)?;
        let t = self.target();
        let n = self.n;
        Ok(self.evaluate(p, |j, i| {
            if j == n + 1 {
                Poly::monomial(&t, Monomial::var(i - 1))
            } else if i == 0 {
                Poly::monomial(&t, Monomial::var(n + j - 1))
            } else {
                &self.xy_product(i, j, true) - &self.xy_product(i, j, false)
            }
        }))
    }

    /// All monomials of degree `d` in the ring, as polynomials.
    pub fn monomials(&self, d: u32) -> Vec<Poly> {
        monomials_of_degree(&self.space, d)
    }
}

/// All monomials of total degree `d` in `space`, in decreasing order.
pub fn monomials_of_degree(space: &VarSpace, d: u32) -> Vec<Poly> {
    let mut out: Vec<Monomial> = compositions(d, space.nvars())
        .into_iter()
        .map(|e| Monomial::from_exponents(&e))
        .collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out.into_iter()
        .map(|m| Poly::term(space, q(1), m))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ring(j1: usize, j3: usize) -> ZRing {
        ZRing::restricted(&Config::new(j1 + j3, j1, j1, 0, 0).unwrap()).unwrap()
    }

    #[test]
    fn phi_x_and_phi_y_examples() {
        let r = ring(2, 2);
        let t = r.target();
        let z41 = r.z(3, 1).unwrap();
        assert_eq!(r.phi_x(&z41).unwrap(), Poly::parse(&t, "x1*x3").unwrap());
        let minor = &(&r.z(3, 1).unwrap() * &r.z(4, 2).unwrap()) - &(&r.z(3, 2).unwrap() * &r.z(4, 1).unwrap());
        assert!(r.phi_x(&minor).unwrap().is_zero());
        assert!(r.phi_y(&minor).unwrap().is_zero());
        assert_eq!(r.phi_y(&z41.pow(2)).unwrap(), Poly::parse(&t, "y1^2*y3^2").unwrap());
    }

    #[test]
    fn phi_on_extended_ring() {
        let c = Config::new(5, 2, 3, 0, 0).unwrap();
        let r = ZRing::extended(&c).unwrap();
        let t = r.target();
        assert_eq!(r.phi(&r.z(6, 1).unwrap()).unwrap(), Poly::parse(&t, "x1").unwrap());
        assert_eq!(r.phi(&r.z(4, 0).unwrap()).unwrap(), Poly::parse(&t, "y4").unwrap());
        assert_eq!(r.phi(&r.z(4, 1).unwrap()).unwrap(), Poly::parse(&t, "x1*x4 - y1*y4").unwrap());
        assert!(r.z(6, 0).is_err());
        assert!(matches!(r.phi_x(&r.z(6, 1).unwrap()), Err(DetError::ExtendedVariables)));
    }

    #[test]
    fn degree_pieces() {
        let r = ring(2, 2);
        assert_eq!(r.monomials(2).len(), 10);
        assert_eq!(r.monomials(0).len(), 1);
    }
}
