//! Bigrading, the filtration degree functions and the N-matrix monomial sets.

use crate::exactpoly::{Monomial, Poly};

use super::config::Config;
use super::OscError;

/// The signed bidegree `⟨l1, l2⟩` of a monomial.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct GradedKey {
    pub l1: i64,
    pub l2: i64,
}

/// Block sums of the exponents: `[α over J1, J2, J3]` and `[β over J1, J2, J3]`.
pub fn block_sums(cfg: &Config, m: &Monomial) -> ([i64; 3], [i64; 3]) {
    let sum = |vars: &mut dyn Iterator<Item = usize>| vars.map(|v| m.exp(v) as i64).sum::<i64>();
    let a = [
        sum(&mut cfg.j1().map(|i| cfg.xv(i))),
        sum(&mut cfg.j2().map(|i| cfg.xv(i))),
        sum(&mut cfg.j3().map(|i| cfg.xv(i))),
    ];
    let b = [
        sum(&mut cfg.j1().map(|i| cfg.yv(i))),
        sum(&mut cfg.j2().map(|i| cfg.yv(i))),
        sum(&mut cfg.j3().map(|i| cfg.yv(i))),
    ];
    (a, b)
}

/// Bidegree of a monomial.
pub fn graded_key(cfg: &Config, m: &Monomial) -> GradedKey {
    let (a, b) = block_sums(cfg, m);
    GradedKey {
        l1: a[1] + a[2] - a[0],
        l2: b[0] + b[1] - b[2],
    }
}

/// Whether every monomial of `f` has the bidegree of `cfg`.
pub fn is_homogeneous(cfg: &Config, f: &Poly) -> bool {
    let want = GradedKey { l1: cfg.l1, l2: cfg.l2 };
    f.monomials().all(|m| graded_key(cfg, m) == want)
}

/// Degree of one monomial (may be negative outside the module's bidegree).
pub fn dfun_monomial(cfg: &Config, m: &Monomial) -> i64 {
    let (a, b) = block_sums(cfg, m);
    2 * a[2] + a[1] + 2 * b[0] + b[1] - cfg.positive_part()
}

/// The filtration degree: the maximum of
/// `2Σ_{J3}α + Σ_{J2}α + 2Σ_{J1}β + Σ_{J2}β - max(l1,0) - max(l2,0)`
/// over the monomials of `f`.
pub fn dfun(cfg: &Config, f: &Poly) -> Result<i64, OscError> {
    if f.is_zero() {
        return Err(OscError::ZeroPolynomial);
    }
    if !is_homogeneous(cfg, f) {
        return Err(OscError::MixedGrading);
    }
    Ok(f.monomials().map(|m| dfun_monomial(cfg, m)).max().expect("nonzero"))
}

/// The secondary degree: maximum of `Σ_{J1} α` over the monomials of `f`.
pub fn dprime(cfg: &Config, f: &Poly) -> Result<i64, OscError> {
    f.monomials()
        .map(|m| block_sums(cfg, m).0[0])
        .max()
        .ok_or(OscError::ZeroPolynomial)
}

/// Whether `α_c β_c = 0` for the pivot index `c = n1+1`.
pub fn pivot_free(cfg: &Config, m: &Monomial) -> bool {
    match cfg.pivot() {
        Some(c) => m.exp(cfg.xv(c)) == 0 || m.exp(cfg.yv(c)) == 0,
        None => true,
    }
}

/// All weak compositions of `total` into `parts` parts, lexicographically decreasing.
pub fn compositions(total: u32, parts: usize) -> Vec<Vec<u32>> {
    fn rec(total: u32, parts: usize, prefix: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if parts == 1 {
            prefix.push(total);
            out.push(prefix.clone());
            prefix.pop();
            return;
        }
        for first in (0..=total).rev() {
            prefix.push(first);
            rec(total - first, parts - 1, prefix, out);
            prefix.pop();
        }
    }
    let mut out = Vec::new();
    if parts == 0 {
        if total == 0 {
            out.push(Vec::new());
        }
        return out;
    }
    rec(total, parts, &mut Vec::new(), &mut out);
    out
}

/// Monomials with prescribed block sums of `α` over `(J1,J2,J3)` and of `β`
/// over `(J1,J2,J3)`, restricted to `α_c β_c = 0`, in decreasing order.
///
/// Negative or infeasible sums (nonzero sum on an empty block) give nothing.
pub fn n_matrix_monomials(cfg: &Config, alpha: [i64; 3], beta: [i64; 3]) -> Vec<Monomial> {
    let blocks: [Vec<usize>; 3] = [
        cfg.j1().collect(),
        cfg.j2().collect(),
        cfg.j3().collect(),
    ];
    let mut slots: Vec<(Vec<usize>, i64)> = Vec::new();
    for (b, &s) in alpha.iter().enumerate() {
        slots.push((blocks[b].iter().map(|&i| cfg.xv(i)).collect(), s));
    }
    for (b, &s) in beta.iter().enumerate() {
        slots.push((blocks[b].iter().map(|&i| cfg.yv(i)).collect(), s));
    }
    if slots.iter().any(|(vars, s)| *s < 0 || (vars.is_empty() && *s != 0)) {
        return Vec::new();
    }
    let mut acc = vec![Monomial::ONE];
    for (vars, s) in &slots {
        let comps = compositions(*s as u32, vars.len());
        let mut next = Vec::with_capacity(acc.len() * comps.len());
        for m in &acc {
            for comp in &comps {
                let mut mm = *m;
                for (v, e) in vars.iter().zip(comp) {
                    if *e > 0 {
                        mm = mm.mul_var(*v, *e);
                    }
                }
                next.push(mm);
            }
        }
        acc = next;
    }
    let mut out: Vec<Monomial> = acc.into_iter().filter(|m| pivot_free(cfg, m)).collect();
    out.sort_unstable_by(|a, b| b.cmp(a));
    out
}

/// All monomials of the module's bidegree with degree exactly `k` and
/// `α_c β_c = 0`, in decreasing order.
pub fn enumerate_tn_level(cfg: &Config, k: i64) -> Result<Vec<Monomial>, OscError> {
    if cfg.pivot().is_none() {
        return Err(OscError::NoProjection);
    }
    let budget = k + cfg.positive_part();
    let mut out = Vec::new();
    if budget < 0 {
        return Ok(out);
    }
    for a3 in 0..=budget / 2 {
        for b1 in 0..=(budget - 2 * a3) / 2 {
            let rest = budget - 2 * a3 - 2 * b1;
            for a2 in 0..=rest {
                let b2 = rest - a2;
                let a1 = a2 + a3 - cfg.l1;
                let b3 = b1 + b2 - cfg.l2;
                out.extend(n_matrix_monomials(cfg, [a1, a2, a3], [b1, b2, b3]));
            }
        }
    }
    out.sort_unstable_by(|a, b| b.cmp(a));
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg312() -> Config {
        Config::new(3, 1, 2, -1, -1).unwrap()
    }

    fn p(c: &Config, s: &str) -> Poly {
        Poly::parse(&c.space(), s).unwrap()
    }

    fn mono(c: &Config, s: &str) -> Monomial {
        *p(c, s).monomials().next().unwrap()
    }

    #[test]
    fn degree_examples() {
        let c = cfg312();
        assert_eq!(dfun(&c, &p(&c, "x1*y3")).unwrap(), 0);
        assert_eq!(dfun(&c, &p(&c, "x1^2*x2*y3")).unwrap(), 1);
        let f = &p(&c, "x1*y3") * &p(&c, "x1*x3 - y1*y3");
        assert_eq!(dfun(&c, &f).unwrap(), 2);
        assert!(matches!(dfun(&c, &p(&c, "x1*y3 + x1")), Err(OscError::MixedGrading)));
        assert!(matches!(dfun(&c, &p(&c, "0")), Err(OscError::ZeroPolynomial)));
    }

    #[test]
    fn dprime_examples() {
        let c = Config::new(3, 2, 3, 1, 1).unwrap();
        assert_eq!(dprime(&c, &p(&c, "x3*y1")).unwrap(), 0);
        assert_eq!(dprime(&c, &p(&c, "x1*x2*y1")).unwrap(), 2);
        assert_eq!(dprime(&c, &p(&c, "y1*y2")).unwrap(), 0);
    }

    #[test]
    fn tn_levels() {
        let c = cfg312();
        assert_eq!(enumerate_tn_level(&c, 0).unwrap(), vec![mono(&c, "x1*y3")]);
        let lvl1 = enumerate_tn_level(&c, 1).unwrap();
        assert_eq!(lvl1, vec![mono(&c, "x1^2*x2*y3"), mono(&c, "x1*y2*y3^2")]);
        assert!(enumerate_tn_level(&c, -1).unwrap().is_empty());
    }

    #[test]
    fn grading_of_monomials() {
        let c = cfg312();
        let k = graded_key(&c, &mono(&c, "x1*y3"));
        assert_eq!(k, GradedKey { l1: -1, l2: -1 });
    }

    #[test]
    fn compositions_count() {
        assert_eq!(compositions(3, 2).len(), 4);
        assert_eq!(compositions(2, 3).len(), 6);
        assert_eq!(compositions(0, 0).len(), 1);
        assert!(compositions(1, 0).is_empty());
    }
}
