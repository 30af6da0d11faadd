//! Filtration towers: nested echelon bases of the levels `M_0 ⊆ … ⊆ M_kmax`.

use serde::Serialize;

use crate::exactpoly::{EchelonBasis, Poly};
use crate::oscrep::{dprime, generator_operator, generators, Config, Generator, WeylOp};

use super::regime::{build_m0, irreducibility_warning, ExplicitSpanner, Regime};
use super::FiltrationError;

/// How the levels of a tower were produced.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Method {
    /// Closure of `M_0` under all generators, one level at a time.
    BruteForce,
    /// `T`-images of degree-bounded monomials times alternating quadratics.
    ExplicitV,
    /// `T`-images bounded by the `J1` x-degree (the `l1, l2 > 0`, `n2 = n` case).
    ExplicitVPrime,
    /// `M_0` times products of alternating quadratics (the `n1 = n2` case).
    N1EqualsN2Span,
}

impl Method {
    /// The explicit method matching a regime.
    pub fn explicit_for(regime: Regime) -> Method {
        match regime {
            Regime::Harmonic => Method::ExplicitV,
            Regime::PositiveTop => Method::ExplicitVPrime,
            Regime::Flat => Method::N1EqualsN2Span,
        }
    }
}

enum Driver {
    Brute(Vec<WeylOp>),
    Explicit(Box<ExplicitSpanner>),
}

/// The levels `M_0 ⊆ M_1 ⊆ … ⊆ M_depth` of a filtration.
///
/// All levels share one echelon basis; level `k` is spanned by its first
/// `dims[k]` rows, so reduction modulo `M_k` is reduction modulo a prefix.
pub struct FiltrationTower {
    cfg: Config,
    method: Method,
    basis: EchelonBasis,
    dims: Vec<usize>,
    warnings: Vec<String>,
    driver: Driver,
}

impl std::fmt::Debug for FiltrationTower {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.debug_struct("FiltrationTower")
            .field("cfg", &self.cfg)
            .field("method", &self.method)
            .field("dims", &self.dims)
            .finish()
    }
}

impl FiltrationTower {
    /// Builds the tower up to level `kmax` with the requested method.
    pub fn build(cfg: &Config, method: Method, kmax: usize) -> Result<Self, FiltrationError> {
        Self::build_with_progress(cfg, method, kmax, &mut |_, _| {})
    }

    /// As [`FiltrationTower::build`], calling `progress(k, dim M_k)` after each level.
    pub fn build_with_progress(
        cfg: &Config,
        method: Method,
        kmax: usize,
        progress: &mut dyn FnMut(usize, usize),
    ) -> Result<Self, FiltrationError> {
        let regime = Regime::detect(cfg)?;
        let space = cfg.space();
        let (driver, basis) = match method {
            Method::BruteForce => {
                let ops = generators(cfg.n)
                    .into_iter()
                    .map(|g| generator_operator(cfg, g))
                    .collect::<Result<Vec<_>, _>>()?;
                (Driver::Brute(ops), build_m0(cfg)?)
            }
            explicit => {
                if explicit != Method::explicit_for(regime) {
                    return Err(FiltrationError::Unsupported(format!(
                        "{}: method {explicit:?} does not apply to regime {regime:?}",
                        cfg.label()
                    )));
                }
                let mut sp = ExplicitSpanner::new(cfg)?;
                let level0 = sp.level_additions(0)?;
                let b = EchelonBasis::from_polys(&space, &level0)?;
                (Driver::Explicit(Box::new(sp)), b)
            }
        };
        let mut tower = FiltrationTower {
            cfg: *cfg,
            method,
            dims: vec![basis.dim()],
            basis,
            warnings: irreducibility_warning(cfg).into_iter().collect(),
            driver,
        };
        progress(0, tower.dims[0]);
        while tower.depth() < kmax {
            tower.extend()?;
            let k = tower.depth();
            progress(k, tower.dims[k]);
        }
        Ok(tower)
    }

    /// Brute-force tower.
    pub fn bruteforce(cfg: &Config, kmax: usize) -> Result<Self, FiltrationError> {
        Self::build(cfg, Method::BruteForce, kmax)
    }

    /// Tower from the explicit spanning sets of the configuration's regime.
    pub fn explicit(cfg: &Config, kmax: usize) -> Result<Self, FiltrationError> {
        Self::build(cfg, Method::explicit_for(Regime::detect(cfg)?), kmax)
    }

    /// Adds one level.
    pub fn extend(&mut self) -> Result<(), FiltrationError> {
        let k = self.depth();
        match &mut self.driver {
            Driver::Brute(ops) => {
                let lo = if k == 0 { 0 } else { self.dims[k - 1] };
                let fresh: Vec<Poly> = self.basis.sources()[lo..self.dims[k]].to_vec();
                for s in &fresh {
                    for op in ops.iter() {
                        let img = op.apply(s);
                        if !img.is_zero() {
                            self.basis.insert(&img)?;
                        }
                    }
                }
            }
            Driver::Explicit(sp) => {
                for f in sp.level_additions(k + 1)? {
                    self.basis.insert(&f)?;
                }
            }
        }
        self.dims.push(self.basis.dim());
        Ok(())
    }

    /// The configuration.
    pub fn config(&self) -> &Config {
        &self.cfg
    }

    /// The construction method.
    pub fn method(&self) -> Method {
        self.method
    }

    /// Index of the top level.
    pub fn depth(&self) -> usize {
        self.dims.len() - 1
    }

    /// `dim M_k` for `k = 0..=depth`.
    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Warnings collected during construction.
    pub fn warnings(&self) -> &[String] {
        &self.warnings
    }

    /// The shared basis of all levels.
    pub fn basis(&self) -> &EchelonBasis {
        &self.basis
    }

    fn check_level(&self, k: usize) -> Result<usize, FiltrationError> {
        self.dims
            .get(k)
            .copied()
            .ok_or(FiltrationError::TooShallow(k, self.depth()))
    }

    /// `dim M_k`.
    pub fn dim(&self, k: usize) -> Result<usize, FiltrationError> {
        self.check_level(k)
    }

    /// A basis of `M_k` (the sources of its rows).
    pub fn level_sources(&self, k: usize) -> Result<&[Poly], FiltrationError> {
        Ok(&self.basis.sources()[..self.check_level(k)?])
    }

    /// Basis elements of `M_k` that are not in `M_{k-1}`.
    pub fn new_sources(&self, k: usize) -> Result<&[Poly], FiltrationError> {
        let hi = self.check_level(k)?;
        let lo = if k == 0 { 0 } else { self.dims[k - 1] };
        Ok(&self.basis.sources()[lo..hi])
    }

    /// A standalone echelon basis of `M_k`.
    pub fn level(&self, k: usize) -> Result<EchelonBasis, FiltrationError> {
        Ok(self.basis.truncated(self.check_level(k)?))
    }

    /// Whether `f ∈ M_k`.
    pub fn contains(&self, k: usize, f: &Poly) -> Result<bool, FiltrationError> {
        let rows = self.check_level(k)?;
        Ok(self.basis.contains_prefix(f, rows)?)
    }

    /// Normal form of `f` modulo `M_k`.
    pub fn reduce(&self, k: usize, f: &Poly) -> Result<Poly, FiltrationError> {
        let rows = self.check_level(k)?;
        Ok(self.basis.reduce_prefix(f, rows)?)
    }

    /// Serializable summary, optionally with the rendered new basis elements
    /// of each level.
    pub fn dump(&self, with_rows: bool) -> TowerDump {
        let levels = with_rows.then(|| {
            (0..=self.depth())
                .map(|k| {
                    self.new_sources(k)
                        .expect("level in range")
                        .iter()
                        .map(Poly::render)
                        .collect()
                })
                .collect()
        });
        TowerDump {
            config: self.cfg,
            method: self.method,
            dims: self.dims.clone(),
            hilbert: hilbert_sequence(self),
            levels,
        }
    }
}

/// JSON form of a tower.
#[derive(Clone, Debug, Serialize)]
pub struct TowerDump {
    pub config: Config,
    pub method: Method,
    pub dims: Vec<usize>,
    pub hilbert: Vec<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub levels: Option<Vec<Vec<String>>>,
}

/// `[dim M_0, dim M_1 - dim M_0, …]`, the graded dimensions of `gr M`.
pub fn hilbert_sequence(tower: &FiltrationTower) -> Vec<usize> {
    let d = tower.dims();
    (0..d.len())
        .map(|k| if k == 0 { d[0] } else { d[k] - d[k - 1] })
        .collect()
}

/// Comparison of one level of the two towers.
#[derive(Clone, Debug, Serialize)]
pub struct LevelComparison {
    pub k: usize,
    pub dim_bruteforce: usize,
    pub dim_explicit: usize,
    /// The explicit level, built from scratch, contains the previous one.
    pub nested: bool,
    pub equal: bool,
}

/// Outcome of comparing generator closure against the explicit spans.
#[derive(Clone, Debug, Serialize)]
pub struct Prop23Report {
    pub config: Config,
    pub method: Method,
    pub levels: Vec<LevelComparison>,
    pub pass: bool,
}

/// Builds `M_k` by generator closure and, independently for each `k`, the
/// explicit spanning set of level `k`, and checks two-sided span equality.
pub fn verify_prop23(cfg: &Config, kmax: usize) -> Result<Prop23Report, FiltrationError> {
    let regime = Regime::detect(cfg)?;
    let brute = FiltrationTower::bruteforce(cfg, kmax)?;
    let mut sp = ExplicitSpanner::new(cfg)?;
    let space = cfg.space();
    let mut levels = Vec::with_capacity(kmax + 1);
    let mut prev: Option<EchelonBasis> = None;
    for k in 0..=kmax {
        let explicit = EchelonBasis::from_polys(&space, &sp.full_level(k)?)?;
        let nested = match &prev {
            Some(p) => p.is_subspace_of(&explicit)?,
            None => true,
        };
        let rows = brute.dims[k];
        let mut equal = explicit.dim() == rows;
        if equal {
            for f in &brute.basis.sources()[..rows] {
                if !explicit.contains(f)? {
                    equal = false;
                    break;
                }
            }
        }
        if equal {
            for f in explicit.sources() {
                if !brute.basis.contains_prefix(f, rows)? {
                    equal = false;
                    break;
                }
            }
        }
        levels.push(LevelComparison {
            k,
            dim_bruteforce: rows,
            dim_explicit: explicit.dim(),
            nested,
            equal,
        });
        prev = Some(explicit);
    }
    let pass = levels.iter().all(|l| l.equal && l.nested);
    Ok(Prop23Report {
        config: *cfg,
        method: Method::explicit_for(regime),
        levels,
        pass,
    })
}

/// Whether every level's basis lies in the next level, checked against an
/// independently truncated copy of each level.
pub fn check_nesting(tower: &FiltrationTower) -> Result<bool, FiltrationError> {
    for k in 0..tower.depth() {
        let lower = tower.level(k)?;
        let upper = tower.level(k + 1)?;
        if !lower.is_subspace_of(&upper)? {
            return Ok(false);
        }
    }
    Ok(true)
}

/// Whether `π̃(g)(M_k) ⊆ M_{k+1}` for every generator and every level below
/// the top.
pub fn check_g_stability(tower: &FiltrationTower) -> Result<bool, FiltrationError> {
    let cfg = tower.config();
    let ops = generators(cfg.n)
        .into_iter()
        .map(|g| generator_operator(cfg, g))
        .collect::<Result<Vec<_>, _>>()?;
    for k in 0..tower.depth() {
        for f in tower.level_sources(k)? {
            for op in &ops {
                if !tower.contains(k + 1, &op.apply(f))? {
                    return Ok(false);
                }
            }
        }
    }
    Ok(true)
}

/// Whether `𝔡′(E_{i,j} f) <= 𝔡′(f) + [ (i,j) ∈ L ]` for every root vector and
/// every basis element of every level.
pub fn check_dprime_increments(tower: &FiltrationTower) -> Result<bool, FiltrationError> {
    let cfg = tower.config();
    let roots: Vec<(Generator, WeylOp)> = generators(cfg.n)
        .into_iter()
        .filter(|g| matches!(g, Generator::Root(..)))
        .map(|g| generator_operator(cfg, g).map(|op| (g, op)))
        .collect::<Result<_, _>>()?;
    for f in tower.level_sources(tower.depth())? {
        let base = dprime(cfg, f)?;
        for (g, op) in &roots {
            let img = op.apply(f);
            if img.is_zero() {
                continue;
            }
            let Generator::Root(i, j) = *g else { unreachable!() };
            let allowed = base + i64::from(cfg.in_l(i, j));
            if dprime(cfg, &img)? > allowed {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscrep::apply_generator;

    fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Config {
        Config::new(n, n1, n2, l1, l2).unwrap()
    }

    #[test]
    fn first_levels_312() {
        let c = cfg(3, 1, 2, -1, -1);
        let t = FiltrationTower::bruteforce(&c, 2).unwrap();
        assert_eq!(&t.dims()[..2], &[1, 4]);
        assert_eq!(&hilbert_sequence(&t)[..2], &[1, 3]);
        let e = FiltrationTower::explicit(&c, 2).unwrap();
        assert_eq!(e.dims(), t.dims());
        assert_eq!(e.method(), Method::ExplicitV);
    }

    #[test]
    fn cartan_never_grows_level_zero() {
        let c = cfg(3, 1, 2, -1, -1);
        let t = FiltrationTower::bruteforce(&c, 0).unwrap();
        for r in 1..c.n {
            for f in t.level_sources(0).unwrap() {
                let img = apply_generator(&c, Generator::Cartan(r), f).unwrap();
                assert!(t.contains(0, &img).unwrap());
            }
        }
    }

    #[test]
    fn prop23_small_cases() {
        for (c, k) in [(cfg(3, 1, 2, -1, -1), 3), (cfg(3, 1, 2, -1, 0), 3), (cfg(3, 2, 3, 2, 1), 3)] {
            let r = verify_prop23(&c, k).unwrap();
            assert!(r.pass, "{r:?}");
        }
    }

    #[test]
    fn flat_tower_matches_closure() {
        let c = cfg(4, 2, 2, -1, -1);
        let r = verify_prop23(&c, 2).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.method, Method::N1EqualsN2Span);
    }

    #[test]
    fn stability_and_nesting() {
        let c = cfg(3, 1, 2, -1, -1);
        let e = FiltrationTower::explicit(&c, 3).unwrap();
        assert!(check_nesting(&e).unwrap());
        assert!(check_g_stability(&e).unwrap());
        let top = cfg(3, 2, 3, 2, 1);
        let e = FiltrationTower::explicit(&top, 3).unwrap();
        assert!(check_g_stability(&e).unwrap());
        assert!(check_dprime_increments(&e).unwrap());
    }

    #[test]
    fn depth_errors_and_dump() {
        let c = cfg(3, 1, 2, -1, -1);
        let t = FiltrationTower::bruteforce(&c, 1).unwrap();
        assert!(matches!(t.dim(2), Err(FiltrationError::TooShallow(2, 1))));
        let d = t.dump(true);
        assert_eq!(d.levels.as_ref().unwrap()[0], vec!["x1*y3".to_string()]);
        assert!(FiltrationTower::build(&c, Method::ExplicitVPrime, 1).is_err());
    }
}
