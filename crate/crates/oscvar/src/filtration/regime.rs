//! Parameter regimes, the generating space `M_0`, and the explicit spanning
//! sets of each filtration level.

use serde::Serialize;

use crate::exactpoly::{q, EchelonBasis, Monomial, Poly};
use crate::oscrep::{
    classify_irreducible, enumerate_tn_level, n_matrix_monomials, project_t, Config,
};

use super::pset::PSet;
use super::FiltrationError;

/// Which explicit description of the filtration applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Regime {
    /// `n1 < n2` and `l1 <= 0` or `l2 <= 0`: levels spanned by `T`-images of
    /// degree-bounded monomials times products of the alternating quadratics.
    Harmonic,
    /// `n1 < n2 = n` and `l1, l2 > 0`: levels bounded by the `J1` x-degree.
    PositiveTop,
    /// `n1 = n2 < n` and `l1 + l2 <= 0`: explicit monomial products.
    Flat,
}

impl Regime {
    /// Detects the regime of `cfg`, rejecting parameter sets with no
    /// spanning-set description.
    pub fn detect(cfg: &Config) -> Result<Regime, FiltrationError> {
        let (l1, l2) = (cfg.l1, cfg.l2);
        if cfg.n1 < cfg.n2 {
            if l1 <= 0 || l2 <= 0 {
                Ok(Regime::Harmonic)
            } else if cfg.n2 == cfg.n {
                Ok(Regime::PositiveTop)
            } else {
                Err(FiltrationError::Unsupported(format!(
                    "{}: l1, l2 > 0 requires n2 = n",
                    cfg.label()
                )))
            }
        } else if cfg.n2 == cfg.n {
            Err(FiltrationError::Unsupported(format!(
                "{}: n1 = n2 = n has no third block",
                cfg.label()
            )))
        } else if l1 + l2 > 0 {
            Err(FiltrationError::Unsupported(format!(
                "{}: n1 = n2 requires l1 + l2 <= 0",
                cfg.label()
            )))
        } else if l2 > 0 && cfg.n1 < 2 {
            Err(FiltrationError::Unsupported(format!(
                "{}: l2 > 0 with n1 = n2 needs |J1| >= 2",
                cfg.label()
            )))
        } else if l1 > 0 && cfg.n - cfg.n2 < 2 {
            Err(FiltrationError::Unsupported(format!(
                "{}: l1 > 0 with n1 = n2 needs |J3| >= 2",
                cfg.label()
            )))
        } else {
            Ok(Regime::Flat)
        }
    }
}

/// A warning when `cfg` fails the irreducibility criterion.
pub fn irreducibility_warning(cfg: &Config) -> Option<String> {
    (!classify_irreducible(cfg)).then(|| {
        format!(
            "{} does not satisfy the irreducibility criterion; the filtration is computed anyway",
            cfg.label()
        )
    })
}

fn t_images(cfg: &Config, monos: &[Monomial]) -> Result<Vec<Poly>, FiltrationError> {
    monos
        .iter()
        .map(|m| project_t(cfg, m).map_err(FiltrationError::from))
        .collect()
}

/// `Π_{p<q} (x_p y_q - x_q y_p)^{k_{p,q}}` over all exponent vectors with
/// `Σ k = total`, for the index pairs of `block`.
fn skew_products(cfg: &Config, block: &[usize], total: u32) -> Vec<Poly> {
    let space = cfg.space();
    let mut factors = Vec::new();
    for (a, &p) in block.iter().enumerate() {
        for &qq in &block[a + 1..] {
            let xy = Monomial::var(cfg.xv(p)).mul_var(cfg.yv(qq), 1);
            let yx = Monomial::var(cfg.xv(qq)).mul_var(cfg.yv(p), 1);
            factors.push(Poly::from_terms(&space, [(xy, q(1)), (yx, q(-1))]));
        }
    }
    crate::oscrep::compositions(total, factors.len())
        .into_iter()
        .map(|exps| {
            factors
                .iter()
                .zip(&exps)
                .fold(Poly::one(&space), |acc, (f, &e)| &acc * &f.pow(e))
        })
        .collect()
}

/// Spanning set of `M_0` in the flat regime.
fn flat_generators(cfg: &Config) -> Vec<Poly> {
    let space = cfg.space();
    let (l1, l2) = (cfg.l1, cfg.l2);
    let monos = |alpha: [i64; 3], beta: [i64; 3]| -> Vec<Poly> {
        n_matrix_monomials(cfg, alpha, beta)
            .into_iter()
            .map(|m| Poly::monomial(&space, m))
            .collect()
    };
    if l1 <= 0 && l2 <= 0 {
        monos([-l1, 0, 0], [0, 0, -l2])
    } else if l2 > 0 {
        let j1: Vec<usize> = cfg.j1().collect();
        let skew = skew_products(cfg, &j1, l2 as u32);
        let base = monos([-l1 - l2, 0, 0], [0, 0, 0]);
        skew.iter().flat_map(|s| base.iter().map(move |b| s * b)).collect()
    } else {
        let j3: Vec<usize> = cfg.j3().collect();
        let skew = skew_products(cfg, &j3, l1 as u32);
        let base = monos([0, 0, 0], [0, 0, -l2 - l1]);
        skew.iter().flat_map(|s| base.iter().map(move |b| s * b)).collect()
    }
}

/// Spanning set of `M_0` for a supported configuration.
fn m0_generators(cfg: &Config, regime: Regime) -> Result<Vec<Poly>, FiltrationError> {
    let (l1, l2) = (cfg.l1, cfg.l2);
    let gens = match regime {
        Regime::Harmonic => {
            let (alpha, beta) = if l1 <= 0 && l2 <= 0 {
                ([-l1, 0, 0], [0, 0, -l2])
            } else if l1 <= 0 {
                ([-l1, 0, 0], [0, l2, 0])
            } else {
                ([0, l1, 0], [0, 0, -l2])
            };
            t_images(cfg, &n_matrix_monomials(cfg, alpha, beta))?
        }
        Regime::PositiveTop => {
            let mut monos = Vec::new();
            for k21 in 0..=l2 {
                monos.extend(n_matrix_monomials(cfg, [0, l1, 0], [k21, l2 - k21, 0]));
            }
            t_images(cfg, &monos)?
        }
        Regime::Flat => flat_generators(cfg),
    };
    if gens.is_empty() {
        return Err(FiltrationError::Unsupported(format!(
            "{}: the generating space is empty",
            cfg.label()
        )));
    }
    Ok(gens)
}

/// Echelon basis of the generating space `M_0`.
pub fn build_m0(cfg: &Config) -> Result<EchelonBasis, FiltrationError> {
    let regime = Regime::detect(cfg)?;
    let gens = m0_generators(cfg, regime)?;
    Ok(EchelonBasis::from_polys(&cfg.space(), &gens)?)
}

/// Generates the explicit spanning sets of the filtration levels, caching
/// `T`-images and quadratic products between levels.
#[derive(Clone, Debug)]
pub struct ExplicitSpanner {
    cfg: Config,
    regime: Regime,
    pset: PSet,
    tn: Vec<Vec<Poly>>,
    products: Vec<Vec<Poly>>,
    m0: Vec<Poly>,
}

impl ExplicitSpanner {
    /// A spanner for a supported configuration.
    pub fn new(cfg: &Config) -> Result<Self, FiltrationError> {
        let regime = Regime::detect(cfg)?;
        let m0 = m0_generators(cfg, regime)?;
        Ok(ExplicitSpanner {
            cfg: *cfg,
            regime,
            pset: PSet::new(cfg),
            tn: Vec::new(),
            products: Vec::new(),
            m0,
        })
    }

    /// The regime being spanned.
    pub fn regime(&self) -> Regime {
        self.regime
    }

    /// The generating set of `M_0` for this regime.
    pub fn m0(&self) -> &[Poly] {
        &self.m0
    }

    /// `T`-images of the monomials of degree exactly `j` (harmonic regime).
    pub fn tn(&mut self, j: usize) -> Result<&[Poly], FiltrationError> {
        while self.tn.len() <= j {
            let level = self.tn.len() as i64;
            let monos = enumerate_tn_level(&self.cfg, level)?;
            self.tn.push(t_images(&self.cfg, &monos)?);
        }
        Ok(&self.tn[j])
    }

    /// Products of `size` alternating quadratics.
    pub fn products(&mut self, size: usize) -> &[Poly] {
        while self.products.len() <= size {
            let s = self.products.len();
            self.products.push(self.pset.products(s));
        }
        &self.products[size]
    }

    fn times_products(&mut self, base: Vec<Poly>, size: usize) -> Vec<Poly> {
        let prods = self.products(size).to_vec();
        let mut out = Vec::with_capacity(base.len() * prods.len());
        for b in &base {
            for p in &prods {
                out.push(b * p);
            }
        }
        out
    }

    /// Spanning elements that level `k` adds to level `k-1`; together with
    /// the additions of all lower levels they span level `k`.
    pub fn level_additions(&mut self, k: usize) -> Result<Vec<Poly>, FiltrationError> {
        match self.regime {
            Regime::Harmonic => {
                let mut out = self.tn(k)?.to_vec();
                for i in 1..=k {
                    let base = self.tn(k - i)?.to_vec();
                    out.extend(self.times_products(base, i));
                }
                Ok(out)
            }
            Regime::PositiveTop => {
                let (l1, l2) = (self.cfg.l1, self.cfg.l2);
                let t = k as i64;
                let mut monos = Vec::new();
                for k21 in 0..=l2 {
                    monos.extend(n_matrix_monomials(&self.cfg, [t, l1 + t, 0], [k21, l2 - k21, 0]));
                }
                t_images(&self.cfg, &monos)
            }
            Regime::Flat => {
                let base = self.m0.clone();
                Ok(self.times_products(base, k))
            }
        }
    }

    /// The complete explicit spanning set of level `k`, generated without
    /// reference to lower levels.
    pub fn full_level(&mut self, k: usize) -> Result<Vec<Poly>, FiltrationError> {
        match self.regime {
            Regime::Harmonic => {
                let mut out = Vec::new();
                for j in 0..=k {
                    out.extend(self.tn(j)?.iter().cloned());
                }
                for i in 1..=k {
                    let base = self.tn(k - i)?.to_vec();
                    out.extend(self.times_products(base, i));
                }
                Ok(out)
            }
            Regime::PositiveTop => {
                let mut out = Vec::new();
                for t in 0..=k {
                    out.extend(self.level_additions(t)?);
                }
                Ok(out)
            }
            Regime::Flat => {
                let mut out = Vec::new();
                for i in 0..=k {
                    let base = self.m0.clone();
                    out.extend(self.times_products(base, i));
                }
                Ok(out)
            }
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Config {
        Config::new(n, n1, n2, l1, l2).unwrap()
    }

    fn p(c: &Config, s: &str) -> Poly {
        Poly::parse(&c.space(), s).unwrap()
    }

    #[test]
    fn regimes() {
        assert_eq!(Regime::detect(&cfg(3, 1, 2, -1, -1)).unwrap(), Regime::Harmonic);
        assert_eq!(Regime::detect(&cfg(3, 2, 3, 2, 1)).unwrap(), Regime::PositiveTop);
        assert_eq!(Regime::detect(&cfg(4, 2, 2, -1, -1)).unwrap(), Regime::Flat);
        assert!(Regime::detect(&cfg(4, 1, 2, 1, 1)).is_err());
        assert!(Regime::detect(&cfg(4, 2, 2, 1, 1)).is_err());
        assert!(Regime::detect(&cfg(3, 3, 3, -1, 0)).is_err());
    }

    #[test]
    fn m0_examples() {
        let c = cfg(3, 1, 2, -1, -1);
        let b = build_m0(&c).unwrap();
        assert_eq!(b.dim(), 1);
        assert!(b.contains(&p(&c, "x1*y3")).unwrap());

        let c = cfg(3, 2, 3, 1, 1);
        let b = build_m0(&c).unwrap();
        assert_eq!(b.dim(), 2);
        for s in ["x3*y1", "x3*y2"] {
            let m = *p(&c, s).monomials().next().unwrap();
            assert!(b.contains(&project_t(&c, &m).unwrap()).unwrap());
        }

        let c = cfg(4, 2, 2, -1, -1);
        let b = build_m0(&c).unwrap();
        assert_eq!(b.dim(), 4);
        for s in ["x1*y3", "x1*y4", "x2*y3", "x2*y4"] {
            assert!(b.contains(&p(&c, s)).unwrap());
        }
    }

    #[test]
    fn flat_skew_generators() {
        let c = cfg(4, 2, 2, -2, 1);
        let b = build_m0(&c).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&p(&c, "x1^2*y2 - x1*x2*y1")).unwrap());
        let c = cfg(4, 2, 2, 1, -2);
        let b = build_m0(&c).unwrap();
        assert_eq!(b.dim(), 2);
        assert!(b.contains(&p(&c, "x3*y3*y4 - x4*y3^2")).unwrap());
    }

    #[test]
    fn harmonic_m0_is_lowest_tn_level() {
        for c in [cfg(3, 1, 2, -1, -1), cfg(4, 1, 3, -1, 1), cfg(4, 1, 3, 1, -1), cfg(5, 2, 3, 0, 0)] {
            let m0 = build_m0(&c).unwrap();
            let mut sp = ExplicitSpanner::new(&c).unwrap();
            let tn0 = EchelonBasis::from_polys(&c.space(), sp.tn(0).unwrap()).unwrap();
            assert!(m0.same_span(&tn0).unwrap(), "{}", c.label());
        }
    }

    #[test]
    fn level_one_spanning_set() {
        let c = cfg(3, 1, 2, -1, -1);
        let mut sp = ExplicitSpanner::new(&c).unwrap();
        let v1 = EchelonBasis::from_polys(&c.space(), &sp.full_level(1).unwrap()).unwrap();
        assert_eq!(v1.dim(), 4);
        assert!(v1.contains(&p(&c, "x1^2*x3*y3 - x1*y1*y3^2")).unwrap());
    }
}
