//! P-orders: the least number of alternating-quadratic factors needed to
//! express an element of `M_k`.

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::exactpoly::{q, EchelonBasis, Poly};
use crate::oscrep::{dfun, Config};

use super::regime::{ExplicitSpanner, Regime};
use super::FiltrationError;

/// Nested spans `TN_{k-1} ⊆ TN_k ⊆ TN_k + TN(k-1)P ⊆ … ⊆ V_k` stored as
/// prefixes of a single echelon basis.
#[derive(Clone, Debug)]
pub struct OrderSpans {
    cfg: Config,
    k: usize,
    basis: EchelonBasis,
    below: usize,
    prefixes: Vec<usize>,
}

impl OrderSpans {
    /// Builds the spans for level `k` of a configuration with `n1 < n2`.
    pub fn new(cfg: &Config, k: usize) -> Result<Self, FiltrationError> {
        if Regime::detect(cfg)? != Regime::Harmonic {
            return Err(FiltrationError::Unsupported(format!(
                "{}: P-orders need the harmonic regime",
                cfg.label()
            )));
        }
        let mut sp = ExplicitSpanner::new(cfg)?;
        let mut basis = EchelonBasis::new(&cfg.space());
        for j in 0..k {
            for f in sp.tn(j)? {
                basis.insert(f)?;
            }
        }
        let below = basis.dim();
        for f in sp.tn(k)? {
            basis.insert(f)?;
        }
        let mut prefixes = vec![basis.dim()];
        for s in 1..=k {
            let base = sp.tn(k - s)?.to_vec();
            let prods = sp.products(s).to_vec();
            for b in &base {
                for p in &prods {
                    basis.insert(&(b * p))?;
                }
            }
            prefixes.push(basis.dim());
        }
        Ok(OrderSpans {
            cfg: *cfg,
            k,
            basis,
            below,
            prefixes,
        })
    }

    /// The level.
    pub fn k(&self) -> usize {
        self.k
    }

    /// A basis of `V_k`.
    pub fn level_basis(&self) -> &[Poly] {
        self.basis.sources()
    }

    /// Dimension of the span allowed `s` quadratic factors.
    pub fn prefix_dim(&self, s: usize) -> usize {
        self.prefixes[s.min(self.k)]
    }

    /// Dimension of `TN_{k-1}`.
    pub fn below_dim(&self) -> usize {
        self.below
    }

    /// Whether `f ∈ TN_{k-1}`.
    pub fn in_lower_tn(&self, f: &Poly) -> Result<bool, FiltrationError> {
        Ok(self.basis.contains_prefix(f, self.below)?)
    }

    /// The P-order of `f ∈ V_k`.
    pub fn order(&self, f: &Poly) -> Result<usize, FiltrationError> {
        if !self.basis.contains(f)? {
            return Err(FiltrationError::NotInLevel(self.k));
        }
        for (s, &rows) in self.prefixes.iter().enumerate() {
            if self.basis.contains_prefix(f, rows)? {
                return Ok(s);
            }
        }
        unreachable!("the last prefix is the whole level")
    }

    /// The configuration.
    pub fn config(&self) -> &Config {
        &self.cfg
    }
}

/// The least `s` with `f ∈ Span{TN_k, TN(k-r) P^r | r <= s}`.
pub fn p_order(cfg: &Config, k: usize, f: &Poly) -> Result<usize, FiltrationError> {
    OrderSpans::new(cfg, k)?.order(f)
}

/// Outcome of sampling the degree bound `𝔡(f) <= k + ord_k(f)`.
#[derive(Clone, Debug, Serialize)]
pub struct OrderBoundReport {
    pub config: Config,
    pub k: usize,
    pub seed: u64,
    pub samples: usize,
    /// Samples violating `𝔡(f) <= k + ord_k(f)`.
    pub bound_violations: usize,
    /// Samples where equality and `f ∉ TN_{k-1}` disagree.
    pub equality_mismatches: usize,
    /// Number of samples attaining equality.
    pub equalities: usize,
    /// Rendered counterexamples (at most three).
    pub examples: Vec<String>,
}

impl OrderBoundReport {
    /// Whether both the inequality and the equality criterion held.
    pub fn pass(&self) -> bool {
        self.bound_violations == 0 && self.equality_mismatches == 0
    }
}

/// Samples random rational combinations of basis elements of nested
/// sub-spans of `V_k` and checks `𝔡(f) <= k + ord_k(f)`, with equality
/// exactly when `f ∉ TN_{k-1}`.
pub fn verify_order_bound(
    cfg: &Config,
    k: usize,
    samples: usize,
    seed: u64,
) -> Result<OrderBoundReport, FiltrationError> {
    let spans = OrderSpans::new(cfg, k)?;
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let basis = spans.level_basis();
    let mut cuts: Vec<usize> = vec![spans.below_dim()];
    cuts.extend((0..=k).map(|s| spans.prefix_dim(s)));
    cuts.retain(|&c| c > 0);
    let mut report = OrderBoundReport {
        config: *cfg,
        k,
        seed,
        samples: 0,
        bound_violations: 0,
        equality_mismatches: 0,
        equalities: 0,
        examples: Vec::new(),
    };
    let space = cfg.space();
    while report.samples < samples {
        let limit = *cuts.choose(&mut rng).expect("nonempty level");
        let terms = rng.gen_range(1..=limit.min(4));
        let mut f = Poly::zero(&space);
        for _ in 0..terms {
            let idx = rng.gen_range(0..limit);
            let c = loop {
                let c = rng.gen_range(-3i64..=3);
                if c != 0 {
                    break c;
                }
            };
            f = &f + &basis[idx].scale(&q(c));
        }
        if f.is_zero() {
            continue;
        }
        report.samples += 1;
        let degree = dfun(cfg, &f)?;
        let bound = k as i64 + spans.order(&f)? as i64;
        let lower = spans.in_lower_tn(&f)?;
        let mut bad = false;
        if degree > bound {
            report.bound_violations += 1;
            bad = true;
        }
        if degree == bound {
            report.equalities += 1;
        }
        if (degree == bound) == lower {
            report.equality_mismatches += 1;
            bad = true;
        }
        if bad && report.examples.len() < 3 {
            report.examples.push(format!("d={degree}, bound={bound}: {}", f.render()));
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg312() -> Config {
        Config::new(3, 1, 2, -1, -1).unwrap()
    }

    #[test]
    fn order_examples() {
        let c = cfg312();
        let s = c.space();
        let f = Poly::parse(&s, "x1*y3").unwrap();
        assert_eq!(p_order(&c, 1, &f).unwrap(), 0);
        let g = &f * &Poly::parse(&s, "x1*x3 - y1*y3").unwrap();
        assert_eq!(p_order(&c, 1, &g).unwrap(), 1);
        let outside = Poly::parse(&s, "x1^5*y3").unwrap();
        assert!(matches!(p_order(&c, 1, &outside), Err(FiltrationError::NotInLevel(1))));
    }

    #[test]
    fn order_bound_sample() {
        let r = verify_order_bound(&cfg312(), 2, 40, 7).unwrap();
        assert_eq!(r.samples, 40);
        assert_eq!(r.bound_violations, 0, "{r:?}");
    }
}
