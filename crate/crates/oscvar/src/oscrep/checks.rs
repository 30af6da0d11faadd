//! Exhaustive checks of the representation: bracket fidelity, harmonicity of
//! the projection `T`, and the highest-weight vector.

use serde::Serialize;

use crate::exactpoly::{Monomial, Poly};

use super::config::Config;
use super::degree::{compositions, enumerate_tn_level};
use super::generator::{generators, Generator};
use super::rep::{generator_operator, gl_operator, laplace, project_t};
use super::weight::{highest_weight_formula, is_highest_weight, weight};
use super::OscError;

/// All monomials of total degree at most `max_degree` in the xy-ring of `cfg`.
pub fn monomials_up_to(cfg: &Config, max_degree: u32) -> Vec<Poly> {
    let space = cfg.space();
    (0..=max_degree)
        .flat_map(|d| compositions(d, space.nvars()))
        .map(|e| Poly::monomial(&space, Monomial::from_exponents(&e)))
        .collect()
}

/// Outcome of the commutator check.
#[derive(Clone, Debug, Serialize)]
pub struct BracketReport {
    pub config: Config,
    pub max_degree: u32,
    pub pairs: usize,
    pub monomials: usize,
    /// First failures, rendered (at most five).
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Checks `[π(g), π(h)] f = π([g, h]) f` for every unordered pair of
/// generators and every monomial of total degree at most `max_degree`, with
/// `[g, h]` computed as a matrix commutator.
pub fn verify_bracket_fidelity(cfg: &Config, max_degree: u32) -> Result<BracketReport, OscError> {
    let gens = generators(cfg.n);
    let ops = gens
        .iter()
        .map(|&g| generator_operator(cfg, g))
        .collect::<Result<Vec<_>, _>>()?;
    let monos = monomials_up_to(cfg, max_degree);
    let images: Vec<Vec<Poly>> = ops.iter().map(|op| monos.iter().map(|f| op.apply(f)).collect()).collect();
    let mut pairs = 0;
    let mut failures = Vec::new();
    for a in 0..gens.len() {
        for b in a + 1..gens.len() {
            pairs += 1;
            let bracket = gl_operator(cfg, &gens[a].as_gl().bracket(&gens[b].as_gl()))?;
            for (idx, f) in monos.iter().enumerate() {
                let lhs = &ops[a].apply(&images[b][idx]) - &ops[b].apply(&images[a][idx]);
                if lhs != bracket.apply(f) && failures.len() < 5 {
                    failures.push(format!("[{}, {}] on {}", gens[a], gens[b], f.render()));
                }
            }
        }
    }
    Ok(BracketReport {
        config: *cfg,
        max_degree,
        pairs,
        monomials: monos.len(),
        pass: failures.is_empty(),
        failures,
    })
}

/// Outcome of the harmonicity check.
#[derive(Clone, Debug, Serialize)]
pub struct HarmonicityReport {
    pub config: Config,
    pub max_level: usize,
    /// Number of pivot-free monomials checked at each level.
    pub per_level: Vec<usize>,
    pub failures: Vec<String>,
    pub pass: bool,
}

/// Checks `Δ̃(T(m)) = 0` for every pivot-free monomial of the module's
/// bidegree whose degree `𝔡` is at most `max_level`.
pub fn verify_harmonicity(cfg: &Config, max_level: usize) -> Result<HarmonicityReport, OscError> {
    let space = cfg.space();
    let mut per_level = Vec::new();
    let mut failures = Vec::new();
    for k in 0..=max_level {
        let monos = enumerate_tn_level(cfg, k as i64)?;
        per_level.push(monos.len());
        for m in &monos {
            if !laplace(cfg, &project_t(cfg, m)?)?.is_zero() && failures.len() < 5 {
                failures.push(Poly::monomial(&space, *m).render());
            }
        }
    }
    Ok(HarmonicityReport {
        config: *cfg,
        max_level,
        per_level,
        pass: failures.is_empty(),
        failures,
    })
}

/// Outcome of the highest-weight check.
#[derive(Clone, Debug, Serialize)]
pub struct HighestWeightReport {
    pub config: Config,
    pub vector: String,
    pub m1: i64,
    pub m2: i64,
    /// Simple raising operators that do not annihilate the vector.
    pub raising_failures: Vec<String>,
    pub weight: Option<Vec<i64>>,
    pub expected_weight: Vec<i64>,
    pub pass: bool,
}

/// Checks that `x_{n1}^{m1} y_{n2+1}^{m2}` is killed by every `E_{r,r+1}`
/// and that its Cartan eigenvalues match the highest-weight formula.
pub fn verify_highest_weight(cfg: &Config, m1: u32, m2: u32) -> Result<HighestWeightReport, OscError> {
    if cfg.n1 == 0 || cfg.n2 >= cfg.n {
        return Err(OscError::InvalidConfig(format!(
            "{}: the highest-weight vector needs nonempty J1 and J3",
            cfg.label()
        )));
    }
    let space = cfg.space();
    let m = Monomial::ONE
        .with_exp(cfg.xv(cfg.n1), m1)
        .with_exp(cfg.yv(cfg.n2 + 1), m2);
    let f = Poly::monomial(&space, m);
    let mut raising_failures = Vec::new();
    for r in 1..cfg.n {
        let g = Generator::Root(r, r + 1);
        if !generator_operator(cfg, g)?.apply(&f).is_zero() {
            raising_failures.push(g.to_string());
        }
    }
    let w = weight(cfg, &f)?;
    let expected_weight = highest_weight_formula(cfg, i64::from(m1), i64::from(m2));
    let pass = raising_failures.is_empty()
        && is_highest_weight(cfg, &f)?
        && w.as_ref() == Some(&expected_weight);
    Ok(HighestWeightReport {
        config: *cfg,
        vector: f.render(),
        m1: i64::from(m1),
        m2: i64::from(m2),
        raising_failures,
        weight: w,
        expected_weight,
        pass,
    })
}
