//! Checks of the low-degree annihilator pieces against the minor families.

use serde::Serialize;

use crate::exactpoly::{Monomial, Poly, VarSpace, Q};
use crate::filtration::{FiltrationTower, Regime};
use crate::oscrep::{Block, Config};

use super::action::{apply_word_sum, check_membership, MembershipCheck, SymAction};
use super::delta::{delta_ops, DeltaFamily, DeltaOp};
use super::kernel::{
    compare_spans, compute_ip, ideal_degree_piece, l_generator_ids, off_l_generator_ids,
    split_degree_one, DegreeOneSplit, Scope, SpanComparison,
};
use super::symbol::SymElement;
use super::AnnihilatorError;

/// Sign pattern of the bidegree in the degree-two analysis.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum SignCase {
    /// `l1 ≤ 0` and `l2 ≤ 0`: both pair families.
    BothNonPositive,
    /// `l1 ≤ 0 < l2`: the `L2` pairs, and powers of the `L1` pairs.
    SecondPositive,
    /// `l2 ≤ 0 < l1`: the `L1` pairs, and powers of the `L2` pairs.
    FirstPositive,
}

impl SignCase {
    /// The sign case of `cfg`, if one of `l1, l2` is non-positive.
    pub fn of(cfg: &Config) -> Option<SignCase> {
        match (cfg.l1 <= 0, cfg.l2 <= 0) {
            (true, true) => Some(SignCase::BothNonPositive),
            (true, false) => Some(SignCase::SecondPositive),
            (false, true) => Some(SignCase::FirstPositive),
            (false, false) => None,
        }
    }

    /// Pair families predicted in degree two.
    pub fn families(&self) -> Vec<DeltaFamily> {
        match self {
            SignCase::BothNonPositive => vec![DeltaFamily::L1Pairs, DeltaFamily::L2Pairs],
            SignCase::SecondPositive => vec![DeltaFamily::L2Pairs],
            SignCase::FirstPositive => vec![DeltaFamily::L1Pairs],
        }
    }
}

fn family_symbols(cfg: &Config, families: &[DeltaFamily]) -> Result<Vec<SymElement>, AnnihilatorError> {
    let mut out = Vec::new();
    for f in families {
        for d in delta_ops(cfg, *f) {
            out.push(d.symbol_mod_off_l(cfg)?);
        }
    }
    Ok(out)
}

/// Pair minors with rows strictly increasing and columns weakly increasing,
/// so that coinciding columns (which give the zero operator) are included.
fn pair_minors_with_repeats(rows: &[usize], cols: &[usize]) -> Vec<DeltaOp> {
    let mut out = Vec::new();
    for (a, &j) in rows.iter().enumerate() {
        for &j2 in &rows[a + 1..] {
            for (b, &i) in cols.iter().enumerate() {
                for &i2 in &cols[b..] {
                    out.push(DeltaOp::Minor2 { rows: [j, j2], cols: [i, i2] });
                }
            }
        }
    }
    out
}

/// Degree-two report.
#[derive(Clone, Debug, Serialize)]
pub struct PairMinorReport {
    pub config: Config,
    pub kmax: usize,
    pub sign_case: SignCase,
    pub families: Vec<DeltaFamily>,
    /// Each predicted minor maps `M_k` into `M_{k+1}`.
    pub membership: Vec<MembershipCheck>,
    /// `I_(2)` modulo the ideal of the off-`L` coordinates versus the span of
    /// the predicted minors.
    pub quotient: SpanComparison,
    /// `I_(2)` in all coordinates versus the predicted minors plus the
    /// degree-two part of the ideal of the off-`L` coordinates.
    pub full: SpanComparison,
    pub stabilized: bool,
    /// Powers `Δ^{l+1}` of the other pair family in degree `2l + 2`.
    pub powers: Vec<MembershipCheck>,
    pub kernel_basis: Vec<String>,
    pub pass: bool,
}

/// Checks the degree-two piece: membership of the predicted pair minors,
/// two-sided equality of `I_(2)` with their span modulo the off-`L`
/// coordinates, and the power memberships of the other family.
///
/// The tower must have depth at least `max(kmax, 2l + 1)` where `l` is the
/// positive entry of the bidegree, if any.
pub fn verify_pair_minors(tower: &FiltrationTower, kmax: usize) -> Result<PairMinorReport, AnnihilatorError> {
    let cfg = *tower.config();
    if Regime::detect(&cfg)? != Regime::Harmonic {
        return Err(AnnihilatorError::Unsupported(format!(
            "{}: the degree-two analysis needs n1 < n2 with l1 <= 0 or l2 <= 0",
            cfg.label()
        )));
    }
    let sign_case = SignCase::of(&cfg).expect("harmonic regime has a non-positive entry");
    let families = sign_case.families();
    let action = SymAction::new(&cfg)?;
    let mut membership = Vec::new();
    for f in &families {
        for d in delta_ops(&cfg, *f) {
            membership.push(check_membership(&action, tower, &d.to_string(), &d.symbol(cfg.n)?, 2)?);
        }
    }
    let predicted = family_symbols(&cfg, &families)?;
    let quotient_piece = compute_ip(tower, 2, kmax, Scope::LOnly)?;
    let quotient = compare_spans(2, &quotient_piece.basis, &predicted);
    let full_piece = compute_ip(tower, 2, kmax, Scope::All)?;
    let all_ids: Vec<usize> = (0..cfg.n * cfg.n - 1).collect();
    let singles: Vec<SymElement> = off_l_generator_ids(&cfg)
        .into_iter()
        .map(|g| SymElement::monomial(cfg.n, vec![g], Q::from_integer(1.into())))
        .collect();
    let mut full_predicted = ideal_degree_piece(cfg.n, &singles, &all_ids, 2);
    full_predicted.extend(predicted.iter().cloned());
    let full = compare_spans(2, &full_piece.basis, &full_predicted);

    let (power_rows, power_cols, exponent) = match sign_case {
        SignCase::BothNonPositive => (Vec::new(), Vec::new(), 0),
        SignCase::SecondPositive => (cfg.j2().collect(), cfg.j1().collect(), cfg.l2 as u32 + 1),
        SignCase::FirstPositive => (cfg.j3().collect(), cfg.j2().collect(), cfg.l1 as u32 + 1),
    };
    let mut powers = Vec::new();
    for d in pair_minors_with_repeats(&power_rows, &power_cols) {
        let sym = d.symbol(cfg.n)?.pow(exponent);
        let name = format!("({d})^{exponent}");
        powers.push(check_membership(&action, tower, &name, &sym, 2 * exponent as usize)?);
    }
    let pass = membership.iter().all(|m| m.holds)
        && quotient.equal()
        && full.equal()
        && quotient_piece.stabilized
        && full_piece.stabilized
        && powers.iter().all(|m| m.holds);
    Ok(PairMinorReport {
        config: cfg,
        kmax,
        sign_case,
        families,
        membership,
        quotient,
        full,
        stabilized: quotient_piece.stabilized && full_piece.stabilized,
        powers,
        kernel_basis: quotient_piece.basis.iter().map(SymElement::render).collect(),
        pass,
    })
}

/// The six index patterns of a triple minor with increasing rows in
/// `J2 ∪ J3` and increasing columns in `J1 ∪ J2`.
///
/// Patterns (5) and (6) overlap; a triple matching both is reported as (6).
pub fn triple_case(cfg: &Config, d: &DeltaOp) -> u8 {
    let (j, i) = (d.rows(), d.cols());
    let mid = |x: usize| cfg.block(x) == Block::J2;
    let outer = |x: usize| cfg.block(x) == Block::J3;
    let inner = |x: usize| cfg.block(x) == Block::J1;
    if !(mid(j[0]) && mid(i[2])) {
        1
    } else if outer(j[1]) && inner(i[1]) {
        2
    } else if mid(j[1]) && outer(j[2]) && inner(i[1]) {
        3
    } else if outer(j[1]) && mid(i[1]) && inner(i[0]) {
        4
    } else if i.iter().all(|&x| mid(x)) || j.iter().all(|&x| mid(x)) {
        6
    } else {
        5
    }
}

/// The operator identity `Δ = 0` on the polynomial ring for pattern (1).
#[derive(Clone, Debug, Serialize)]
pub struct ZeroOperatorCheck {
    pub config: Config,
    pub max_degree: u32,
    /// Pattern (1) triples with increasing columns and weakly increasing rows.
    pub triples: usize,
    /// Those among them with strictly increasing rows.
    pub strict_triples: usize,
    pub monomials: usize,
    pub failures: Vec<String>,
    pub holds: bool,
}

fn all_monomials(space: &VarSpace, max_degree: u32) -> Vec<Poly> {
    fn rec(nv: usize, start: usize, left: u32, cur: Monomial, out: &mut Vec<Monomial>) {
        out.push(cur);
        if left == 0 {
            return;
        }
        for v in start..nv {
            rec(nv, v, left - 1, cur.mul_var(v, 1), out);
        }
    }
    let mut monos = Vec::new();
    rec(space.nvars(), 0, max_degree, Monomial::ONE, &mut monos);
    monos.into_iter().map(|m| Poly::monomial(space, m)).collect()
}

/// Applies every pattern-(1) triple minor, as the literal ordered product of
/// matrix units, to every monomial of total degree at most `max_degree` and
/// checks that the result is zero.
pub fn verify_zero_operator_case(cfg: &Config, max_degree: u32) -> Result<ZeroOperatorCheck, AnnihilatorError> {
    let rows: Vec<usize> = cfg.j2().chain(cfg.j3()).collect();
    let cols: Vec<usize> = cfg.j1().chain(cfg.j2()).collect();
    let mut triples = Vec::new();
    for a in 0..rows.len() {
        for b in a..rows.len() {
            for c in b..rows.len() {
                for x in 0..cols.len() {
                    for y in x + 1..cols.len() {
                        for z in y + 1..cols.len() {
                            let d = DeltaOp::Minor3 {
                                rows: [rows[a], rows[b], rows[c]],
                                cols: [cols[x], cols[y], cols[z]],
                            };
                            if triple_case(cfg, &d) == 1 {
                                triples.push((d, a < b && b < c));
                            }
                        }
                    }
                }
            }
        }
    }
    let monomials = all_monomials(&cfg.space(), max_degree);
    let mut failures = Vec::new();
    for (d, _) in &triples {
        let words = d.words();
        for m in &monomials {
            if !apply_word_sum(cfg, &words, m)?.is_zero() {
                failures.push(format!("{d} on {}", m.render()));
                break;
            }
        }
    }
    Ok(ZeroOperatorCheck {
        config: *cfg,
        max_degree,
        strict_triples: triples.iter().filter(|(_, s)| *s).count(),
        triples: triples.len(),
        monomials: monomials.len(),
        holds: failures.is_empty(),
        failures,
    })
}

/// Membership of one representative triple minor.
#[derive(Clone, Debug, Serialize)]
pub struct CaseMembership {
    pub case: u8,
    pub check: MembershipCheck,
}

/// Degree-three report.
#[derive(Clone, Debug, Serialize)]
pub struct TripleMinorReport {
    pub config: Config,
    pub kmax: usize,
    /// The first triple of each pattern (2)–(6) present in the configuration.
    pub cases: Vec<CaseMembership>,
    /// Patterns (2)–(6) with no triple in this configuration.
    pub absent_cases: Vec<u8>,
    /// `I_(3)` modulo the off-`L` coordinates versus the projected triple
    /// minors plus the degree-three multiples of the pair minors.
    pub exactness: SpanComparison,
    pub stabilized: bool,
    pub kernel_dim: usize,
    pub pass: bool,
}

/// Checks the degree-three piece: residue membership of a representative
/// of each pattern (2)–(6) and two-sided equality of `I_(3)` modulo the
/// off-`L` coordinates with the span predicted by the triple minors.
pub fn verify_triple_minors(tower: &FiltrationTower, kmax: usize) -> Result<TripleMinorReport, AnnihilatorError> {
    let cfg = *tower.config();
    if Regime::detect(&cfg)? != Regime::Harmonic || !(cfg.l1 <= 0 || cfg.l2 < 0) {
        return Err(AnnihilatorError::Unsupported(format!(
            "{}: the degree-three analysis needs n1 < n2 with l1 <= 0 or l2 < 0",
            cfg.label()
        )));
    }
    let action = SymAction::new(&cfg)?;
    let triples = delta_ops(&cfg, DeltaFamily::Triples);
    let mut cases = Vec::new();
    let mut absent = Vec::new();
    for case in 2..=6u8 {
        match triples.iter().find(|d| triple_case(&cfg, d) == case) {
            Some(d) => cases.push(CaseMembership {
                case,
                check: check_membership(&action, tower, &d.to_string(), &d.symbol(cfg.n)?, 3)?,
            }),
            None => absent.push(case),
        }
    }
    let piece = compute_ip(tower, 3, kmax, Scope::LOnly)?;
    let l_ids = l_generator_ids(&cfg);
    let mut predicted = family_symbols(&cfg, &[DeltaFamily::Triples])?;
    let pairs = family_symbols(&cfg, &[DeltaFamily::L1Pairs, DeltaFamily::L2Pairs])?;
    predicted.extend(ideal_degree_piece(cfg.n, &pairs, &l_ids, 3));
    let exactness = compare_spans(3, &piece.basis, &predicted);
    let pass = cases.iter().all(|c| c.check.holds) && exactness.equal() && piece.stabilized;
    Ok(TripleMinorReport {
        config: cfg,
        kmax,
        cases,
        absent_cases: absent,
        exactness,
        stabilized: piece.stabilized,
        kernel_dim: piece.dim(),
        pass,
    })
}

/// Which description of the associated variety applies.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub enum TheoremBranch {
    /// `n1 < n2` with `l1 ≤ 0` or `l2 ≤ 0`: triple minors of
    /// `(J2∪J3) × (J1∪J2)`, pair minors of `J2 × J1` and `J3 × J2`, and the
    /// coordinates of `J2 × J2`.
    Mixed,
    /// `n1 = n2`: triple minors of `J3 × J1`.
    EqualBlocks,
    /// `n1 < n2 = n` with `l1, l2 > 0`: pair minors of `J2 × J1`.
    PositiveTop,
}

impl TheoremBranch {
    /// The branch of `cfg`.
    pub fn of(cfg: &Config) -> Result<TheoremBranch, AnnihilatorError> {
        match Regime::detect(cfg)? {
            Regime::Harmonic => Ok(TheoremBranch::Mixed),
            Regime::Flat => Ok(TheoremBranch::EqualBlocks),
            Regime::PositiveTop => Ok(TheoremBranch::PositiveTop),
        }
    }

    /// Generator families of the determinantal ideal.
    pub fn families(&self) -> Vec<DeltaFamily> {
        match self {
            TheoremBranch::Mixed => vec![
                DeltaFamily::Triples,
                DeltaFamily::L1Pairs,
                DeltaFamily::L2Pairs,
                DeltaFamily::MiddleUnits,
            ],
            TheoremBranch::EqualBlocks => vec![DeltaFamily::OuterTriples],
            TheoremBranch::PositiveTop => vec![DeltaFamily::L1Pairs],
        }
    }
}

/// Report on the identification of the annihilator with the determinantal
/// ideal of the theorem, at the checked degrees.
#[derive(Clone, Debug, Serialize)]
pub struct MainTheoremReport {
    pub config: Config,
    pub kmax: usize,
    pub branch: TheoremBranch,
    /// The degree-one kernel against the Cartan plus the off-`L` roots.
    pub degree_one: DegreeOneSplit,
    /// Every substituted generator maps `M_k` into `M_{k+t-1}`.
    pub generators: Vec<MembershipCheck>,
    /// `I_(p)` modulo the off-`L` coordinates versus the degree-`p` part of
    /// the ideal generated by the projected generators, `p = 2, 3`.
    pub pieces: Vec<SpanComparison>,
    pub stabilized: bool,
    pub pass: bool,
}

/// Verifies the annihilator description of `cfg` on a tower of depth `kmax ≥ 3`.
pub fn verify_main_theorem(cfg: &Config, kmax: usize) -> Result<MainTheoremReport, AnnihilatorError> {
    if kmax < 3 {
        return Err(AnnihilatorError::Precondition(format!("kmax must be at least 3, got {kmax}")));
    }
    let branch = TheoremBranch::of(cfg)?;
    let tower = FiltrationTower::explicit(cfg, kmax)?;
    main_theorem_on(&tower, kmax, branch)
}

fn main_theorem_on(tower: &FiltrationTower, kmax: usize, branch: TheoremBranch) -> Result<MainTheoremReport, AnnihilatorError> {
    let cfg = *tower.config();
    let action = SymAction::new(&cfg)?;
    let one = compute_ip(tower, 1, kmax, Scope::All)?;
    let degree_one = split_degree_one(&cfg, &one)?;
    let mut generators = Vec::new();
    let mut projected = Vec::new();
    for f in branch.families() {
        for d in delta_ops(&cfg, f) {
            generators.push(check_membership(&action, tower, &d.to_string(), &d.symbol(cfg.n)?, d.size())?);
            projected.push(d.symbol_mod_off_l(&cfg)?);
        }
    }
    let l_ids = l_generator_ids(&cfg);
    let mut pieces = Vec::new();
    let mut stabilized = one.stabilized;
    for p in 2..=3 {
        let piece = compute_ip(tower, p, kmax, Scope::LOnly)?;
        stabilized &= piece.stabilized;
        let predicted = ideal_degree_piece(cfg.n, &projected, &l_ids, p);
        pieces.push(compare_spans(p, &piece.basis, &predicted));
    }
    let pass = degree_one.matches_off_l
        && generators.iter().all(|g| g.holds)
        && pieces.iter().all(SpanComparison::equal)
        && stabilized;
    Ok(MainTheoremReport {
        config: cfg,
        kmax,
        branch,
        degree_one,
        generators,
        pieces,
        stabilized,
        pass,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Config {
        Config::new(n, n1, n2, l1, l2).unwrap()
    }

    #[test]
    fn case_patterns() {
        let c = cfg(6, 2, 4, -1, -1);
        let m = |r: [usize; 3], s: [usize; 3]| DeltaOp::Minor3 { rows: r, cols: s };
        assert_eq!(triple_case(&c, &m([5, 6, 6], [1, 2, 3])), 1);
        assert_eq!(triple_case(&c, &m([3, 5, 6], [1, 2, 4])), 2);
        assert_eq!(triple_case(&c, &m([3, 4, 5], [1, 2, 3])), 3);
        assert_eq!(triple_case(&c, &m([3, 5, 6], [1, 3, 4])), 4);
        assert_eq!(triple_case(&c, &m([3, 4, 5], [1, 3, 4])), 5);
        let wide = cfg(5, 1, 4, -1, -1);
        assert_eq!(triple_case(&wide, &m([2, 3, 4], [1, 2, 3])), 6);
    }

    #[test]
    fn pair_minors_on_small_mixed_config() {
        let c = cfg(4, 1, 3, -1, 1);
        let t = FiltrationTower::explicit(&c, 3).unwrap();
        let r = verify_pair_minors(&t, 3).unwrap();
        assert_eq!(r.sign_case, SignCase::SecondPositive);
        assert_eq!(r.powers.len(), 1);
        assert!(r.powers[0].vacuous && r.powers[0].holds);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn zero_operator_on_repeated_rows() {
        let r = verify_zero_operator_case(&cfg(5, 1, 3, -1, -1), 2).unwrap();
        assert!(r.triples > 0);
        assert!(r.holds);
    }

    #[test]
    fn theorem_on_positive_top() {
        let r = verify_main_theorem(&cfg(3, 2, 3, 2, 1), 4).unwrap();
        assert_eq!(r.branch, TheoremBranch::PositiveTop);
        assert!(r.pass, "{r:?}");
    }

    #[test]
    fn positive_top_with_wide_middle_block_misses_middle_roots() {
        // T-images built from the pivot are not stable under the J2 x J2 units
        let c = cfg(4, 2, 4, 1, 1);
        let t = FiltrationTower::explicit(&c, 1).unwrap();
        let a = SymAction::new(&c).unwrap();
        let e34 = SymElement::unit(4, 3, 4).unwrap();
        let chk = check_membership(&a, &t, "E3_4", &e34, 1).unwrap();
        assert_eq!(chk.failing_level, Some(0));
    }
}
