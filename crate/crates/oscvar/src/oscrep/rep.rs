//! The oscillator operators: generator action, the twisted Laplacian and the
//! harmonic projection `T`.

use std::collections::HashMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use crate::exactpoly::{Monomial, Poly, Q};

use super::config::Config;
use super::generator::{GlElement, Generator};
use super::OscError;

/// One normally ordered term `coef * (Π mul) * (Π ∂_diff)`.
#[derive(Clone, Debug, PartialEq, Eq)]
struct WeylTerm {
    coef: i64,
    mul: Vec<usize>,
    diff: Vec<usize>,
}

/// A differential operator with polynomial coefficients, kept as a sum of
/// normally ordered terms (derivatives act first).
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct WeylOp {
    terms: Vec<WeylTerm>,
}

impl WeylOp {
    fn push(&mut self, coef: i64, mul: &[usize], diff: &[usize]) {
        if coef != 0 {
            self.terms.push(WeylTerm {
                coef,
                mul: mul.to_vec(),
                diff: diff.to_vec(),
            });
        }
    }

    fn extend_scaled(&mut self, other: &WeylOp, c: i64) {
        for t in &other.terms {
            self.push(t.coef * c, &t.mul, &t.diff);
        }
    }

    /// Applies the operator to a single monomial, accumulating `c * op(m)`.
    fn apply_monomial(&self, m: &Monomial, c: &Q, acc: &mut HashMap<Monomial, Q>) {
        for t in &self.terms {
            let mut mono = *m;
            let mut factor: i64 = t.coef;
            let mut alive = true;
            for &v in &t.diff {
                let e = mono.exp(v);
                if e == 0 {
                    alive = false;
                    break;
                }
                factor *= e as i64;
                mono = mono.with_exp(v, e - 1);
            }
            if !alive {
                continue;
            }
            for &v in &t.mul {
                mono = mono.mul_var(v, 1);
            }
            let add = c * Q::from_integer(BigInt::from(factor));
            let slot = acc.entry(mono).or_insert_with(Q::zero);
            *slot += add;
        }
    }

    /// Applies the operator to a polynomial.
    pub fn apply(&self, f: &Poly) -> Poly {
        let mut acc: HashMap<Monomial, Q> = HashMap::with_capacity(f.len() * self.terms.len());
        for (m, c) in f.terms() {
            self.apply_monomial(m, c, &mut acc);
        }
        Poly::from_terms(f.space(), acc)
    }

    /// Whether the operator has no terms.
    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// `E^x_{i,j}` from the x-part of the representation.
fn ex_part(cfg: &Config, i: usize, j: usize) -> WeylOp {
    let (x, n1) = (|k| cfg.xv(k), cfg.n1);
    let mut op = WeylOp::default();
    match (i <= n1, j <= n1) {
        (true, true) => {
            op.push(-1, &[x(j)], &[x(i)]);
            if i == j {
                op.push(-1, &[], &[]);
            }
        }
        (true, false) => op.push(1, &[], &[x(i), x(j)]),
        (false, true) => op.push(-1, &[x(i), x(j)], &[]),
        (false, false) => op.push(1, &[x(i)], &[x(j)]),
    }
    op
}

/// `E^y_{a,b}` from the y-part of the representation.
fn ey_part(cfg: &Config, a: usize, b: usize) -> WeylOp {
    let (y, n2) = (|k| cfg.yv(k), cfg.n2);
    let mut op = WeylOp::default();
    match (a <= n2, b <= n2) {
        (true, true) => op.push(1, &[y(a)], &[y(b)]),
        (true, false) => op.push(-1, &[y(a), y(b)], &[]),
        (false, true) => op.push(1, &[], &[y(a), y(b)]),
        (false, false) => {
            op.push(-1, &[y(b)], &[y(a)]);
            if a == b {
                op.push(-1, &[], &[]);
            }
        }
    }
    op
}

/// The operator of the gl(n) matrix unit `E_{i,j}`: `E^x_{i,j} - E^y_{j,i}`.
pub fn unit_operator(cfg: &Config, i: usize, j: usize) -> Result<WeylOp, OscError> {
    let n = cfg.n;
    if !(1..=n).contains(&i) || !(1..=n).contains(&j) {
        return Err(OscError::IndexOutOfRange(format!("E{i}_{j} for n={n}")));
    }
    let mut op = ex_part(cfg, i, j);
    op.extend_scaled(&ey_part(cfg, j, i), -1);
    Ok(op)
}

/// The operator of an integer combination of matrix units.
pub fn gl_operator(cfg: &Config, g: &GlElement) -> Result<WeylOp, OscError> {
    let mut op = WeylOp::default();
    for (i, j, c) in g.entries() {
        op.extend_scaled(&unit_operator(cfg, i, j)?, c);
    }
    Ok(op)
}

/// The operator of an sl(n) generator.
pub fn generator_operator(cfg: &Config, g: Generator) -> Result<WeylOp, OscError> {
    g.validate(cfg.n)?;
    gl_operator(cfg, &g.as_gl())
}

/// `π̃(g)(f)`.
pub fn apply_generator(cfg: &Config, g: Generator, f: &Poly) -> Result<Poly, OscError> {
    check_space(cfg, f)?;
    Ok(generator_operator(cfg, g)?.apply(f))
}

/// `π̃(E_{i,j})(f)` for a gl(n) matrix unit, diagonal units included.
pub fn apply_unit(cfg: &Config, i: usize, j: usize, f: &Poly) -> Result<Poly, OscError> {
    check_space(cfg, f)?;
    Ok(unit_operator(cfg, i, j)?.apply(f))
}

pub(crate) fn check_space(cfg: &Config, f: &Poly) -> Result<(), OscError> {
    if f.space().xy_n() == Some(cfg.n) {
        Ok(())
    } else {
        Err(OscError::WrongSpace(format!("{:?}", f.space())))
    }
}

/// The twisted Laplacian
/// `Σ_{i∈J1} x_i ∂_{y_i} - Σ_{r∈J2} ∂_{x_r} ∂_{y_r} + Σ_{s∈J3} y_s ∂_{x_s}`.
pub fn laplace_operator(cfg: &Config) -> WeylOp {
    let mut op = WeylOp::default();
    for i in cfg.j1() {
        op.push(1, &[cfg.xv(i)], &[cfg.yv(i)]);
    }
    for r in cfg.j2() {
        op.push(-1, &[], &[cfg.xv(r), cfg.yv(r)]);
    }
    for s in cfg.j3() {
        op.push(1, &[cfg.yv(s)], &[cfg.xv(s)]);
    }
    op
}

/// `Δ̃(f)`.
pub fn laplace(cfg: &Config, f: &Poly) -> Result<Poly, OscError> {
    check_space(cfg, f)?;
    Ok(laplace_operator(cfg).apply(f))
}

/// The harmonic projection `T` of a monomial.
///
/// With `c = n1+1`, `T(m) = Σ_i (x_c y_c)^i D^i(m) / Π_{r=1..i} (α_c+r)(β_c+r)`
/// where `D = Δ̃ + ∂_{x_c} ∂_{y_c}`. The series terminates because `D` lowers
/// the x-degree on `J2 ∪ J3` plus the y-degree on `J1 ∪ J2`.
pub fn project_t(cfg: &Config, m: &Monomial) -> Result<Poly, OscError> {
    let c = cfg.pivot().ok_or(OscError::NoProjection)?;
    let space = cfg.space();
    let mut d = laplace_operator(cfg);
    d.push(1, &[], &[cfg.xv(c), cfg.yv(c)]);
    let (xc, yc) = (cfg.xv(c), cfg.yv(c));
    let (a, b) = (m.exp(xc) as i64, m.exp(yc) as i64);
    let mut out = Poly::monomial(&space, *m);
    let mut cur = out.clone();
    let mut denom = BigInt::one();
    let mut i: i64 = 0;
    loop {
        cur = d.apply(&cur);
        if cur.is_zero() {
            break;
        }
        i += 1;
        denom *= BigInt::from((a + i) * (b + i));
        let shift = Monomial::ONE.with_exp(xc, i as u32).with_exp(yc, i as u32);
        let term = cur
            .mul_monomial(&shift)
            .scale(&Q::new(BigInt::one(), denom.clone()));
        out = &out + &term;
    }
    Ok(out)
}

/// `T` extended linearly to polynomials.
pub fn project_t_poly(cfg: &Config, f: &Poly) -> Result<Poly, OscError> {
    check_space(cfg, f)?;
    let mut out = Poly::zero(f.space());
    for (m, c) in f.terms() {
        out = &out + &project_t(cfg, m)?.scale(c);
    }
    Ok(out)
}
