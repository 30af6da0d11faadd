//! Identities expressing `T`-images of monomials with pivot factors as
//! ordered products of root vectors applied to pivot-free polynomials.
//!
//! With `c = n1+1`, `i1 ∈ J1` and `i3 ∈ J3`, the four families are
//!
//! * x-chains: `s k!/(k-m)! T(v Π x_{i1} Π_{m} x_{i3} x_c^{k-m}) = Π_m E_{i3,c} Π_k E_{c,i1} (v)`
//! * y-chains: `s k!/(k-m)! T(v Π_m y_{i1} Π y_{i3} y_c^{k-m}) = Π_m E_{c,i1} Π_k E_{i3,c} (v)`
//! * x-pivot powers: `s k!/m! T(v Π_{k-m} x_{i3} x_c^m) = Π_{k-m} E_{i3,c} (v x_c^k)`
//! * y-pivot powers: `s k!/m! T(v Π_{k-m} y_{i1} y_c^m) = Π_{k-m} E_{c,i1} (v y_c^k)`
//!
//! where the sign `s` depends on the [`SignRule`].

use num_bigint::BigInt;
use serde::Serialize;

use crate::exactpoly::{Monomial, Poly, Q};
use crate::oscrep::{project_t_poly, unit_operator, Config};

use super::FiltrationError;

/// The four identity families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum IdentityFamily {
    XChain,
    YChain,
    XPivotPower,
    YPivotPower,
}

impl IdentityFamily {
    /// All families.
    pub const ALL: [IdentityFamily; 4] = [
        IdentityFamily::XChain,
        IdentityFamily::YChain,
        IdentityFamily::XPivotPower,
        IdentityFamily::YPivotPower,
    ];
}

/// Which sign convention multiplies the `T` side.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum SignRule {
    /// `(-1)^k` for both chain families and `+1` for both pivot-power families.
    AsPrinted,
    /// `(-1)^k` for x-chains, `(-1)^m` for y-chains, `+1` for x-pivot powers
    /// and `(-1)^{k-m}` for y-pivot powers.
    Corrected,
}

/// One instance of an identity.
///
/// `m` is the number of second-kind factors: `k13` for x-chains, `k21` for
/// y-chains and the pivot exponent for pivot powers.
#[derive(Clone, Debug)]
pub struct IdentityCase {
    pub family: IdentityFamily,
    pub k: usize,
    pub m: usize,
    pub i1s: Vec<usize>,
    pub i3s: Vec<usize>,
    pub v0: Poly,
}

/// Both sides of an evaluated identity.
#[derive(Clone, Debug)]
pub struct IdentityOutcome {
    pub t_side: Poly,
    pub operator_side: Poly,
}

impl IdentityOutcome {
    /// Whether the sides agree exactly.
    pub fn holds(&self) -> bool {
        self.t_side == self.operator_side
    }
}

fn sign(rule: SignRule, family: IdentityFamily, k: usize, m: usize) -> i64 {
    let parity = |e: usize| if e % 2 == 0 { 1 } else { -1 };
    match (rule, family) {
        (_, IdentityFamily::XChain) => parity(k),
        (SignRule::AsPrinted, IdentityFamily::YChain) => parity(k),
        (SignRule::Corrected, IdentityFamily::YChain) => parity(m),
        (_, IdentityFamily::XPivotPower) => 1,
        (SignRule::AsPrinted, IdentityFamily::YPivotPower) => 1,
        (SignRule::Corrected, IdentityFamily::YPivotPower) => parity(k - m),
    }
}

fn falling(k: usize, m: usize) -> BigInt {
    (m + 1..=k).fold(BigInt::from(1), |acc, r| acc * r)
}

/// Whether `v` lies in `F[X_{J1}, X_{J2∖c}, Y_{J3}]` or `F[X_{J1}, Y_{J2∖c}, Y_{J3}]`.
fn in_pivot_free_subring(cfg: &Config, c: usize, v: &Poly) -> bool {
    let j2: Vec<usize> = cfg.j2().filter(|&r| r != c).collect();
    let allowed = |use_x: bool| -> Vec<usize> {
        let mut vars: Vec<usize> = cfg.j1().map(|i| cfg.xv(i)).collect();
        vars.extend(cfg.j3().map(|i| cfg.yv(i)));
        vars.extend(j2.iter().map(|&r| if use_x { cfg.xv(r) } else { cfg.yv(r) }));
        vars
    };
    let inside = |vars: &[usize]| v.monomials().all(|m| m.support().all(|x| vars.contains(&x)));
    inside(&allowed(true)) || inside(&allowed(false))
}

fn validate(cfg: &Config, case: &IdentityCase) -> Result<usize, FiltrationError> {
    let c = cfg
        .pivot()
        .ok_or_else(|| FiltrationError::Precondition("the identities need n1 < n2".into()))?;
    let (k, m) = (case.k, case.m);
    if m > k {
        return Err(FiltrationError::Precondition(format!("m = {m} exceeds k = {k}")));
    }
    let (n1s, n3s) = match case.family {
        IdentityFamily::XChain => (k, m),
        IdentityFamily::YChain => (m, k),
        IdentityFamily::XPivotPower => (0, k - m),
        IdentityFamily::YPivotPower => (k - m, 0),
    };
    if case.i1s.len() != n1s || case.i3s.len() != n3s {
        return Err(FiltrationError::Precondition(format!(
            "{:?} with k={k}, m={m} needs {n1s} J1 and {n3s} J3 indices",
            case.family
        )));
    }
    if case.i1s.iter().any(|&i| !cfg.j1().contains(&i)) || case.i3s.iter().any(|&i| !cfg.j3().contains(&i)) {
        return Err(FiltrationError::Precondition("index outside its block".into()));
    }
    if case.v0.space() != &cfg.space() || !in_pivot_free_subring(cfg, c, &case.v0) {
        return Err(FiltrationError::Precondition(format!(
            "{} is not in a pivot-free subring",
            case.v0.render()
        )));
    }
    Ok(c)
}

/// Evaluates both sides of an identity.
pub fn check_pivot_identity(
    cfg: &Config,
    case: &IdentityCase,
    rule: SignRule,
) -> Result<IdentityOutcome, FiltrationError> {
    let c = validate(cfg, case)?;
    let (k, m) = (case.k, case.m);
    let xs = |idx: &[usize]| idx.iter().fold(Monomial::ONE, |acc, &i| acc.mul_var(cfg.xv(i), 1));
    let ys = |idx: &[usize]| idx.iter().fold(Monomial::ONE, |acc, &i| acc.mul_var(cfg.yv(i), 1));
    let pow = |var: usize, e: usize| Monomial::ONE.with_exp(var, e as u32);
    let (xc, yc) = (cfg.xv(c), cfg.yv(c));

    let (factor, scalar, start, ops): (Monomial, BigInt, Poly, Vec<(usize, usize)>) = match case.family {
        IdentityFamily::XChain => {
            let f = xs(&case.i1s).mul(&xs(&case.i3s)).mul(&pow(xc, k - m));
            let mut ops: Vec<(usize, usize)> = case.i1s.iter().rev().map(|&i| (c, i)).collect();
            ops.extend(case.i3s.iter().map(|&i| (i, c)));
            (f, falling(k, k - m), case.v0.clone(), ops)
        }
        IdentityFamily::YChain => {
            let f = ys(&case.i1s).mul(&ys(&case.i3s)).mul(&pow(yc, k - m));
            let mut ops: Vec<(usize, usize)> = case.i3s.iter().rev().map(|&i| (i, c)).collect();
            ops.extend(case.i1s.iter().rev().map(|&i| (c, i)));
            (f, falling(k, k - m), case.v0.clone(), ops)
        }
        IdentityFamily::XPivotPower => {
            let f = xs(&case.i3s).mul(&pow(xc, m));
            let ops = case.i3s.iter().map(|&i| (i, c)).collect();
            (f, falling(k, m), case.v0.mul_monomial(&pow(xc, k)), ops)
        }
        IdentityFamily::YPivotPower => {
            let f = ys(&case.i1s).mul(&pow(yc, m));
            let ops = case.i1s.iter().rev().map(|&i| (c, i)).collect();
            (f, falling(k, m), case.v0.mul_monomial(&pow(yc, k)), ops)
        }
    };
    let scalar = Q::from_integer(scalar * sign(rule, case.family, k, m));
    let t_side = project_t_poly(cfg, &case.v0.mul_monomial(&factor))?.scale(&scalar);
    let mut operator_side = start;
    for (i, j) in ops {
        operator_side = unit_operator(cfg, i, j)?.apply(&operator_side);
    }
    Ok(IdentityOutcome {
        t_side,
        operator_side,
    })
}

/// Counts for one family.
#[derive(Clone, Debug, Serialize)]
pub struct FamilyCount {
    pub family: IdentityFamily,
    pub cases: usize,
    pub corrected_holds: usize,
    pub as_printed_holds: usize,
}

/// Outcome of the exhaustive identity check.
#[derive(Clone, Debug, Serialize)]
pub struct IdentityReport {
    pub config: Config,
    pub kmax: usize,
    pub v0_degree: u32,
    pub families: Vec<FamilyCount>,
    /// Rendered failures under the corrected signs (at most five).
    pub failures: Vec<String>,
}

impl IdentityReport {
    /// Whether every case holds with the corrected signs.
    pub fn pass(&self) -> bool {
        self.families.iter().all(|f| f.corrected_holds == f.cases)
    }
}

fn sequences(block: &[usize], len: usize) -> Vec<Vec<usize>> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|s| {
                block.iter().map(move |&i| {
                    let mut t = s.clone();
                    t.push(i);
                    t
                })
            })
            .collect();
    }
    out
}

fn pivot_free_monomials(cfg: &Config, c: usize, max_degree: u32) -> Vec<Poly> {
    let space = cfg.space();
    let mut out: Vec<Monomial> = Vec::new();
    for use_x in [true, false] {
        let mut vars: Vec<usize> = cfg.j1().map(|i| cfg.xv(i)).collect();
        vars.extend(cfg.j3().map(|i| cfg.yv(i)));
        vars.extend(cfg.j2().filter(|&r| r != c).map(|r| if use_x { cfg.xv(r) } else { cfg.yv(r) }));
        for d in 0..=max_degree {
            for exps in crate::oscrep::compositions(d, vars.len()) {
                let m = vars
                    .iter()
                    .zip(&exps)
                    .fold(Monomial::ONE, |acc, (&v, &e)| if e > 0 { acc.mul_var(v, e) } else { acc });
                out.push(m);
            }
        }
    }
    out.sort_unstable();
    out.dedup();
    out.into_iter().map(|m| Poly::monomial(&space, m)).collect()
}

/// Checks every family for all `1 <= k <= kmax`, all admissible `m`, all
/// index sequences, and every pivot-free monomial `v` of degree at most
/// `v0_degree`, under both sign rules.
pub fn verify_pivot_identities(
    cfg: &Config,
    kmax: usize,
    v0_degree: u32,
) -> Result<IdentityReport, FiltrationError> {
    let c = cfg
        .pivot()
        .ok_or_else(|| FiltrationError::Precondition("the identities need n1 < n2".into()))?;
    let j1: Vec<usize> = cfg.j1().collect();
    let j3: Vec<usize> = cfg.j3().collect();
    let v0s = pivot_free_monomials(cfg, c, v0_degree);
    let mut families = Vec::new();
    let mut failures = Vec::new();
    for family in IdentityFamily::ALL {
        let mut count = FamilyCount {
            family,
            cases: 0,
            corrected_holds: 0,
            as_printed_holds: 0,
        };
        for k in 1..=kmax {
            for m in 0..=k {
                let (n1s, n3s) = match family {
                    IdentityFamily::XChain => (k, m),
                    IdentityFamily::YChain => (m, k),
                    IdentityFamily::XPivotPower => (0, k - m),
                    IdentityFamily::YPivotPower => (k - m, 0),
                };
                let seq1 = sequences(&j1, n1s);
                let seq3 = sequences(&j3, n3s);
                for i1s in &seq1 {
                    for i3s in &seq3 {
                        for v0 in &v0s {
                            let case = IdentityCase {
                                family,
                                k,
                                m,
                                i1s: i1s.clone(),
                                i3s: i3s.clone(),
                                v0: v0.clone(),
                            };
                            let out = check_pivot_identity(cfg, &case, SignRule::Corrected)?;
                            count.cases += 1;
                            if out.holds() {
                                count.corrected_holds += 1;
                            } else if failures.len() < 5 {
                                failures.push(format!(
                                    "{family:?} k={k} m={m} i1={i1s:?} i3={i3s:?} v={}",
                                    v0.render()
                                ));
                            }
                            let same = sign(SignRule::AsPrinted, family, k, m)
                                == sign(SignRule::Corrected, family, k, m);
                            let printed_holds = if same {
                                out.holds()
                            } else {
                                -&out.t_side == out.operator_side
                            };
                            if printed_holds {
                                count.as_printed_holds += 1;
                            }
                        }
                    }
                }
            }
        }
        families.push(count);
    }
    Ok(IdentityReport {
        config: *cfg,
        kmax,
        v0_degree,
        families,
        failures,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg413() -> Config {
        Config::new(4, 1, 3, -1, -1).unwrap()
    }

    #[test]
    fn base_case_by_hand() {
        let c = Config::new(3, 1, 2, -1, -1).unwrap();
        let v0 = Poly::parse(&c.space(), "y3").unwrap();
        let case = IdentityCase {
            family: IdentityFamily::XChain,
            k: 1,
            m: 0,
            i1s: vec![1],
            i3s: vec![],
            v0,
        };
        let out = check_pivot_identity(&c, &case, SignRule::Corrected).unwrap();
        assert_eq!(out.operator_side, Poly::parse(&c.space(), "-x1*x2*y3").unwrap());
        assert!(out.holds());
    }

    #[test]
    fn printed_signs_fail_for_y_families() {
        let c = cfg413();
        let v0 = Poly::parse(&c.space(), "x1").unwrap();
        let chain = IdentityCase {
            family: IdentityFamily::YChain,
            k: 1,
            m: 0,
            i1s: vec![],
            i3s: vec![4],
            v0: v0.clone(),
        };
        assert!(check_pivot_identity(&c, &chain, SignRule::Corrected).unwrap().holds());
        assert!(!check_pivot_identity(&c, &chain, SignRule::AsPrinted).unwrap().holds());
        let power = IdentityCase {
            family: IdentityFamily::YPivotPower,
            k: 1,
            m: 0,
            i1s: vec![1],
            i3s: vec![],
            v0,
        };
        assert!(check_pivot_identity(&c, &power, SignRule::Corrected).unwrap().holds());
        assert!(!check_pivot_identity(&c, &power, SignRule::AsPrinted).unwrap().holds());
    }

    #[test]
    fn pivot_power_with_full_pivot_exponent() {
        let c = cfg413();
        let v1 = Poly::parse(&c.space(), "x1*y4").unwrap();
        let case = IdentityCase {
            family: IdentityFamily::YPivotPower,
            k: 2,
            m: 2,
            i1s: vec![],
            i3s: vec![],
            v0: v1.clone(),
        };
        let out = check_pivot_identity(&c, &case, SignRule::Corrected).unwrap();
        assert!(out.holds());
        assert_eq!(out.operator_side, v1.mul_monomial(&Monomial::ONE.with_exp(c.yv(2), 2)));
    }

    #[test]
    fn preconditions() {
        let c = cfg413();
        let bad = IdentityCase {
            family: IdentityFamily::XChain,
            k: 1,
            m: 0,
            i1s: vec![1],
            i3s: vec![],
            v0: Poly::parse(&c.space(), "x3*y3").unwrap(),
        };
        assert!(check_pivot_identity(&c, &bad, SignRule::Corrected).is_err());
        let wrong_len = IdentityCase { i1s: vec![], ..bad };
        assert!(check_pivot_identity(&c, &wrong_len, SignRule::Corrected).is_err());
    }

    #[test]
    fn exhaustive_small() {
        let r = verify_pivot_identities(&cfg413(), 2, 1).unwrap();
        assert!(r.pass(), "{r:?}");
    }
}
