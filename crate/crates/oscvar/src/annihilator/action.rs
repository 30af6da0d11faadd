//! Action of symmetric-algebra elements on a filtration, modulo lower levels.

use serde::Serialize;

use crate::exactpoly::Poly;
use crate::filtration::FiltrationTower;
use crate::oscrep::{generator_operator, generators, unit_operator, Config, WeylOp};

use super::delta::UnitWord;
use super::symbol::SymElement;
use super::AnnihilatorError;

/// Cached generator operators of a configuration.
///
/// A symbol monomial `g_{a1} g_{a2} … g_{ap}` with ids `a1 ≤ … ≤ ap` acts
/// through the ordered product with descending ids, `g_{ap} ⋯ g_{a1}`, so
/// the smallest id is applied first.
pub struct SymAction {
    cfg: Config,
    ops: Vec<WeylOp>,
}

impl SymAction {
    /// Operators for all generators of `cfg`.
    pub fn new(cfg: &Config) -> Result<Self, AnnihilatorError> {
        let ops = generators(cfg.n)
            .into_iter()
            .map(|g| generator_operator(cfg, g))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(SymAction { cfg: *cfg, ops })
    }

    /// The configuration.
    pub fn config(&self) -> &Config {
        &self.cfg
    }

    /// The operator of one generator id.
    pub fn op(&self, id: usize) -> &WeylOp {
        &self.ops[id]
    }

    /// Applies the generators `sequence[0]`, then `sequence[1]`, and so on.
    pub fn apply_sequence(&self, sequence: &[usize], f: &Poly) -> Poly {
        sequence.iter().fold(f.clone(), |acc, &id| self.ops[id].apply(&acc))
    }

    /// Applies a symbol with the fixed descending factor order.
    pub fn apply(&self, e: &SymElement, f: &Poly) -> Poly {
        let mut out = Poly::zero(f.space());
        for (m, c) in e.terms() {
            out = &out + &self.apply_sequence(m, f).scale(c);
        }
        out
    }
}

/// Applies the ordered unit product `E_{w0} E_{w1} ⋯` (rightmost first).
pub fn apply_word(cfg: &Config, word: &UnitWord, f: &Poly) -> Result<Poly, AnnihilatorError> {
    let mut cur = f.clone();
    for &(j, i) in word.iter().rev() {
        cur = unit_operator(cfg, j, i)?.apply(&cur);
    }
    Ok(cur)
}

/// Applies a signed sum of ordered unit products.
pub fn apply_word_sum(cfg: &Config, words: &[(i64, UnitWord)], f: &Poly) -> Result<Poly, AnnihilatorError> {
    let mut out = Poly::zero(f.space());
    for (c, w) in words {
        let img = apply_word(cfg, w, f)?;
        out = &out + &img.scale(&crate::exactpoly::Q::from_integer((*c).into()));
    }
    Ok(out)
}

/// Highest level `k` whose target `M_{k+p-1}` lies in a tower of depth `kmax`.
pub fn top_checked_level(kmax: usize, p: usize) -> Option<usize> {
    (kmax + 1).checked_sub(p)
}

/// Residues of `e` on the basis elements new at level `k`, modulo `M_{k+p-1}`
/// where `p` is the degree of `e`.
pub fn act(
    action: &SymAction,
    e: &SymElement,
    tower: &FiltrationTower,
    k: usize,
) -> Result<Vec<Poly>, AnnihilatorError> {
    let p = e.degree().unwrap_or(0).max(1);
    let target = k + p - 1;
    if target > tower.depth() {
        return Err(AnnihilatorError::TooShallow { needed: target, depth: tower.depth() });
    }
    tower
        .new_sources(k)?
        .iter()
        .map(|v| Ok(tower.reduce(target, &action.apply(e, v))?))
        .collect()
}

/// Outcome of checking `η(M_k) ⊆ M_{k+p-1}` on every checked level.
#[derive(Clone, Debug, Serialize)]
pub struct MembershipCheck {
    pub operator: String,
    pub degree: usize,
    /// Levels `0..=top_level` were checked.
    pub top_level: Option<usize>,
    pub rows_checked: usize,
    /// True when the symbol itself is zero, so the check holds trivially.
    pub vacuous: bool,
    /// First level with a nonzero residue.
    pub failing_level: Option<usize>,
    pub holds: bool,
}

/// Checks that a homogeneous symbol of degree `p` maps every level `M_k` of
/// the tower into `M_{k+p-1}`, for all `k` with `k + p - 1 ≤ depth`.
pub fn check_membership(
    action: &SymAction,
    tower: &FiltrationTower,
    name: &str,
    e: &SymElement,
    p: usize,
) -> Result<MembershipCheck, AnnihilatorError> {
    if !e.is_zero() && e.degree() != Some(p) {
        return Err(AnnihilatorError::NotHomogeneous(name.to_string()));
    }
    let top = top_checked_level(tower.depth(), p);
    let mut rows = 0;
    let mut failing = None;
    if let Some(top) = top {
        'levels: for k in 0..=top {
            for v in tower.new_sources(k)? {
                rows += 1;
                if e.is_zero() {
                    continue;
                }
                let img = action.apply(e, v);
                if !tower.contains(k + p - 1, &img)? {
                    failing = Some(k);
                    break 'levels;
                }
            }
        }
    }
    Ok(MembershipCheck {
        operator: name.to_string(),
        degree: p,
        top_level: top,
        rows_checked: rows,
        vacuous: e.is_zero(),
        failing_level: failing,
        holds: failing.is_none() && (e.is_zero() || rows > 0),
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::Q;
    use crate::filtration::Method;
    use crate::oscrep::{generator_id, Generator};
    use num_traits::One;

    fn tower312(kmax: usize) -> FiltrationTower {
        let c = Config::new(3, 1, 2, -1, -1).unwrap();
        FiltrationTower::build(&c, Method::BruteForce, kmax).unwrap()
    }

    #[test]
    fn residues_on_the_bottom_level() {
        let t = tower312(1);
        let c = *t.config();
        let a = SymAction::new(&c).unwrap();
        let e12 = SymElement::generator(3, Generator::Root(1, 2)).unwrap();
        assert!(act(&a, &e12, &t, 0).unwrap().iter().all(Poly::is_zero));
        for r in 1..3 {
            let h = SymElement::generator(3, Generator::Cartan(r)).unwrap();
            for k in 0..=1 {
                assert!(act(&a, &h, &t, k).unwrap().iter().all(Poly::is_zero));
            }
        }
        let e21 = SymElement::generator(3, Generator::Root(2, 1)).unwrap();
        let res = act(&a, &e21, &t, 0).unwrap();
        let want = Poly::parse(&c.space(), "-x1^2*x2*y3").unwrap();
        assert_eq!(res, vec![t.reduce(0, &want).unwrap()]);
        assert!(!res[0].is_zero());
    }

    #[test]
    fn too_shallow_is_an_error() {
        let t = tower312(1);
        let a = SymAction::new(t.config()).unwrap();
        let id = generator_id(3, Generator::Root(2, 1));
        let sq = SymElement::monomial(3, vec![id, id], Q::one());
        assert!(act(&a, &sq, &t, 0).is_ok());
        assert!(matches!(act(&a, &sq, &t, 1), Err(AnnihilatorError::TooShallow { .. })));
    }

    #[test]
    fn words_and_symbols_agree_on_units() {
        let c = Config::new(4, 1, 3, -1, 1).unwrap();
        let a = SymAction::new(&c).unwrap();
        let f = Poly::parse(&c.space(), "x1*y2*y3 + x4*y1^2").unwrap();
        let e = SymElement::unit(4, 3, 2).unwrap();
        assert_eq!(a.apply(&e, &f), apply_word(&c, &vec![(3, 2)], &f).unwrap());
    }

    #[test]
    fn membership_of_off_l_roots() {
        let t = tower312(3);
        let a = SymAction::new(t.config()).unwrap();
        let e12 = SymElement::generator(3, Generator::Root(1, 2)).unwrap();
        let chk = check_membership(&a, &t, "E1_2", &e12, 1).unwrap();
        assert!(chk.holds);
        assert_eq!(chk.top_level, Some(3));
        assert_eq!(chk.rows_checked, t.dims()[3]);
        let e31 = SymElement::generator(3, Generator::Root(3, 1)).unwrap();
        let chk = check_membership(&a, &t, "E3_1", &e31, 1).unwrap();
        assert_eq!(chk.failing_level, Some(0));
    }

    #[test]
    fn factor_order_does_not_change_residues() {
        use rand::seq::SliceRandom;
        use rand::{Rng, SeedableRng};
        let c = Config::new(4, 1, 3, -1, 1).unwrap();
        let t = FiltrationTower::build(&c, Method::BruteForce, 3).unwrap();
        let a = SymAction::new(&c).unwrap();
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(7);
        for p in 2..=3 {
            for _ in 0..20 {
                let mut ids: Vec<usize> = (0..p).map(|_| rng.gen_range(0..15)).collect();
                ids.sort_unstable();
                let mut shuffled = ids.clone();
                shuffled.shuffle(&mut rng);
                for k in 0..=top_checked_level(3, p).unwrap() {
                    for v in t.new_sources(k).unwrap() {
                        let first = t.reduce(k + p - 1, &a.apply_sequence(&ids, v)).unwrap();
                        let second = t.reduce(k + p - 1, &a.apply_sequence(&shuffled, v)).unwrap();
                        assert_eq!(first, second, "{ids:?} vs {shuffled:?} at level {k}");
                    }
                }
            }
        }
    }
}
