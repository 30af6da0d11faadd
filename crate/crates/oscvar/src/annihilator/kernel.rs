//! The degree-`p` annihilator pieces `I_(p)` as kernels of stacked residue
//! systems, and span comparisons in the symmetric algebra.

use std::collections::HashMap;

use serde::Serialize;

use crate::exactpoly::linalg::{integerize, kernel, Echelon};
use crate::exactpoly::{Monomial, Poly, Q};
use crate::filtration::FiltrationTower;
use crate::oscrep::{generator_id, generators, Config, Generator};

use super::action::{top_checked_level, SymAction};
use super::symbol::{sym_monomials, SymElement, SymMonomial};
use super::AnnihilatorError;

/// Which symbols span the unknowns of the kernel system.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Scope {
    /// Every monomial in all `n^2 - 1` generators.
    All,
    /// Monomials in the root vectors of `L` only. Since the Cartan elements
    /// and the root vectors outside `L` lie in `I_(1)`, the kernel in this
    /// scope is `I_(p)` modulo the ideal they generate.
    LOnly,
}

/// Generator ids of the root vectors `E_{j,i}` with `(j,i) ∈ L`.
pub fn l_generator_ids(cfg: &Config) -> Vec<usize> {
    generators(cfg.n)
        .into_iter()
        .filter(|g| matches!(*g, Generator::Root(j, i) if cfg.in_l(j, i)))
        .map(|g| generator_id(cfg.n, g))
        .collect()
}

/// Generator ids of the Cartan elements and the root vectors outside `L`.
pub fn off_l_generator_ids(cfg: &Config) -> Vec<usize> {
    let l = l_generator_ids(cfg);
    (0..cfg.n * cfg.n - 1).filter(|g| !l.contains(g)).collect()
}

fn scope_ids(cfg: &Config, scope: Scope) -> Vec<usize> {
    match scope {
        Scope::All => (0..cfg.n * cfg.n - 1).collect(),
        Scope::LOnly => l_generator_ids(cfg),
    }
}

/// A computed annihilator piece.
#[derive(Clone, Debug)]
pub struct AnnihilatorPiece {
    pub p: usize,
    pub scope: Scope,
    /// Kernel basis in reduced echelon form over the scope monomials.
    pub basis: Vec<SymElement>,
    /// Levels `k` with `k + p - 1 ≤ kmax_checked` were imposed.
    pub kmax_checked: usize,
    /// Whether the kernel with `kmax_checked - 1` is the same.
    pub stabilized: bool,
    /// Kernel dimension with `kmax_checked - 1`.
    pub previous_dim: usize,
    /// Number of scope monomials of degree `p`.
    pub domain_dim: usize,
    /// Number of level basis elements imposed.
    pub rows_checked: usize,
}

impl AnnihilatorPiece {
    /// Dimension of the kernel.
    pub fn dim(&self) -> usize {
        self.basis.len()
    }
}

/// Residue images of all scope monomials on one level basis element, in the
/// order of [`sym_monomials`].
fn residues_for_row(
    action: &SymAction,
    tower: &FiltrationTower,
    ids: &[usize],
    p: usize,
    target: usize,
    v: &Poly,
) -> Result<Vec<Poly>, AnnihilatorError> {
    fn rec(
        action: &SymAction,
        ids: &[usize],
        start: usize,
        left: usize,
        cur: &Poly,
        out: &mut Vec<Poly>,
    ) {
        if left == 0 {
            out.push(cur.clone());
            return;
        }
        for pos in start..ids.len() {
            let next = if cur.is_zero() {
                cur.clone()
            } else {
                action.op(ids[pos]).apply(cur)
            };
            rec(action, ids, pos, left - 1, &next, out);
        }
    }
    let mut images = Vec::new();
    rec(action, ids, 0, p, v, &mut images);
    images
        .iter()
        .map(|img| {
            if img.is_zero() {
                Ok(img.clone())
            } else {
                Ok(tower.reduce(target, img)?)
            }
        })
        .collect()
}

fn kernel_basis(
    n: usize,
    domain: &[SymMonomial],
    images: &[Vec<((usize, Monomial), Q)>],
) -> Vec<SymElement> {
    kernel(images)
        .into_iter()
        .map(|vec| {
            vec.into_iter().fold(SymElement::zero(n), |acc, (idx, c)| {
                acc.add(&SymElement::monomial(n, domain[idx].clone(), c))
            })
        })
        .collect()
}

/// The exact kernel `{η ∈ S^p : η(M_k) ⊆ M_{k+p-1}}` imposed on all levels
/// with `k + p - 1 ≤ kmax`, together with the same kernel for `kmax - 1`.
pub fn compute_ip(
    tower: &FiltrationTower,
    p: usize,
    kmax: usize,
    scope: Scope,
) -> Result<AnnihilatorPiece, AnnihilatorError> {
    compute_ip_with_progress(tower, p, kmax, scope, &mut |_, _| {})
}

/// As [`compute_ip`], calling `progress(k, rows)` after each level.
pub fn compute_ip_with_progress(
    tower: &FiltrationTower,
    p: usize,
    kmax: usize,
    scope: Scope,
    progress: &mut dyn FnMut(usize, usize),
) -> Result<AnnihilatorPiece, AnnihilatorError> {
    if p == 0 || kmax < p || kmax > tower.depth() {
        return Err(AnnihilatorError::Precondition(format!(
            "need 1 <= p <= kmax <= depth, got p={p}, kmax={kmax}, depth={}",
            tower.depth()
        )));
    }
    let cfg = *tower.config();
    let action = SymAction::new(&cfg)?;
    let ids = scope_ids(&cfg, scope);
    let domain = sym_monomials(&ids, p);
    let top = top_checked_level(kmax, p).expect("kmax >= p");
    let mut images: Vec<Vec<((usize, Monomial), Q)>> = vec![Vec::new(); domain.len()];
    let mut row = 0usize;
    let mut rows_before_top = 0usize;
    for k in 0..=top {
        if k == top {
            rows_before_top = row;
        }
        for v in tower.new_sources(k)? {
            let residues = residues_for_row(&action, tower, &ids, p, k + p - 1, v)?;
            for (slot, res) in images.iter_mut().zip(residues) {
                slot.extend(res.terms().map(|(m, c)| ((row, *m), c.clone())));
            }
            row += 1;
        }
        progress(k, row);
    }
    let basis = kernel_basis(cfg.n, &domain, &images);
    let previous: Vec<Vec<((usize, Monomial), Q)>> = images
        .iter()
        .map(|img| img.iter().filter(|((r, _), _)| *r < rows_before_top).cloned().collect())
        .collect();
    let previous_dim = kernel(&previous).len();
    Ok(AnnihilatorPiece {
        p,
        scope,
        stabilized: previous_dim == basis.len(),
        previous_dim,
        basis,
        kmax_checked: kmax,
        domain_dim: domain.len(),
        rows_checked: row,
    })
}

/// Two-sided containment of the spans of two families of symbols.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SpanComparison {
    pub degree: usize,
    pub computed_dim: usize,
    pub predicted_dim: usize,
    pub computed_in_predicted: bool,
    pub predicted_in_computed: bool,
}

impl SpanComparison {
    /// Whether the spans coincide.
    pub fn equal(&self) -> bool {
        self.computed_in_predicted && self.predicted_in_computed
    }
}

fn echelon_of(elems: &[SymElement]) -> Echelon<SymMonomial> {
    let mut e = Echelon::new();
    for s in elems {
        e.insert(integerize(s.terms().map(|(m, c)| (m.clone(), c.clone()))).0);
    }
    e
}

fn contained(elems: &[SymElement], span: &Echelon<SymMonomial>) -> bool {
    elems.iter().all(|s| {
        span.reduce(integerize(s.terms().map(|(m, c)| (m.clone(), c.clone()))).0)
            .0
            .is_empty()
    })
}

/// Dimension of the span of a family of symbols.
pub fn span_dim(elems: &[SymElement]) -> usize {
    echelon_of(elems).len()
}

/// Compares the span of `computed` with the span of `predicted`.
pub fn compare_spans(degree: usize, computed: &[SymElement], predicted: &[SymElement]) -> SpanComparison {
    let c = echelon_of(computed);
    let p = echelon_of(predicted);
    SpanComparison {
        degree,
        computed_dim: c.len(),
        predicted_dim: p.len(),
        computed_in_predicted: contained(computed, &p),
        predicted_in_computed: contained(predicted, &c),
    }
}

/// Spanning set of the degree-`p` part of the ideal generated by
/// homogeneous `gens`, using multipliers that are monomials in `ids`.
pub fn ideal_degree_piece(n: usize, gens: &[SymElement], ids: &[usize], p: usize) -> Vec<SymElement> {
    let mut cache: HashMap<usize, Vec<SymMonomial>> = HashMap::new();
    let mut out = Vec::new();
    for g in gens {
        let Some(d) = g.degree() else { continue };
        if d > p {
            continue;
        }
        let mults = cache.entry(p - d).or_insert_with(|| sym_monomials(ids, p - d));
        for m in mults.iter() {
            out.push(g.mul(&SymElement::monomial(n, m.clone(), Q::from_integer(1.into()))));
        }
    }
    out
}

/// The degree-one kernel split into its Cartan and root-vector parts.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeOneSplit {
    pub kernel_dim: usize,
    pub cartan_dim: usize,
    /// Root vectors `E_{j,i}` in the kernel.
    pub root_vectors: Vec<String>,
    /// Root vectors outside `L`.
    pub off_l_roots: Vec<String>,
    /// Whether the kernel equals the Cartan plus the off-`L` root vectors.
    pub matches_off_l: bool,
    pub stabilized: bool,
}

/// Compares a degree-one piece computed in [`Scope::All`] with the span of
/// the Cartan subalgebra and the root vectors outside `L`.
pub fn split_degree_one(cfg: &Config, piece: &AnnihilatorPiece) -> Result<DegreeOneSplit, AnnihilatorError> {
    if piece.p != 1 || piece.scope != Scope::All {
        return Err(AnnihilatorError::Precondition("degree-one piece in full scope required".into()));
    }
    let gens = generators(cfg.n);
    let single = |id: usize| SymElement::monomial(cfg.n, vec![id], Q::from_integer(1.into()));
    let cartan: Vec<SymElement> = (1..cfg.n)
        .map(|r| single(generator_id(cfg.n, Generator::Cartan(r))))
        .collect();
    let off_l: Vec<usize> = off_l_generator_ids(cfg)
        .into_iter()
        .filter(|&g| matches!(gens[g], Generator::Root(..)))
        .collect();
    let predicted: Vec<SymElement> = cartan.iter().cloned().chain(off_l.iter().map(|&g| single(g))).collect();
    let cmp = compare_spans(1, &piece.basis, &predicted);
    let span = echelon_of(&piece.basis);
    let in_kernel = |e: &SymElement| contained(std::slice::from_ref(e), &span);
    let cartan_dim = cartan.iter().filter(|e| in_kernel(e)).count();
    let root_vectors = gens
        .iter()
        .enumerate()
        .filter(|(id, g)| matches!(g, Generator::Root(..)) && in_kernel(&single(*id)))
        .map(|(_, g)| g.to_string())
        .collect();
    Ok(DegreeOneSplit {
        kernel_dim: piece.dim(),
        cartan_dim,
        root_vectors,
        off_l_roots: off_l.iter().map(|&g| gens[g].to_string()).collect(),
        matches_off_l: cmp.equal(),
        stabilized: piece.stabilized,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::filtration::Method;

    #[test]
    fn degree_one_kernel_of_small_config() {
        let c = Config::new(3, 1, 2, -1, -1).unwrap();
        let t = FiltrationTower::build(&c, Method::BruteForce, 3).unwrap();
        let piece = compute_ip(&t, 1, 3, Scope::All).unwrap();
        assert_eq!(piece.dim(), 5);
        assert!(piece.stabilized);
        let split = split_degree_one(&c, &piece).unwrap();
        assert_eq!(split.cartan_dim, 2);
        assert_eq!(split.root_vectors, vec!["E1_2", "E1_3", "E2_3"]);
        assert!(split.matches_off_l);
    }

    #[test]
    fn l_ids_of_small_config() {
        let c = Config::new(3, 1, 2, -1, -1).unwrap();
        let names: Vec<String> = l_generator_ids(&c)
            .into_iter()
            .map(|g| generators(3)[g].to_string())
            .collect();
        assert_eq!(names, vec!["E2_1", "E3_1", "E3_2"]);
        assert_eq!(off_l_generator_ids(&c).len(), 5);
    }

    #[test]
    fn span_comparison_is_two_sided() {
        let n = 3;
        let a = SymElement::generator(n, Generator::Root(2, 1)).unwrap();
        let b = SymElement::generator(n, Generator::Root(3, 1)).unwrap();
        let cmp = compare_spans(1, &[a.clone()], &[a.clone(), b.clone()]);
        assert!(cmp.computed_in_predicted && !cmp.predicted_in_computed);
        assert!(compare_spans(1, &[a.add(&b), b.clone()], &[a, b]).equal());
    }

    #[test]
    fn ideal_piece_counts() {
        let n = 3;
        let a = SymElement::generator(n, Generator::Root(2, 1)).unwrap();
        let piece = ideal_degree_piece(n, &[a], &[0, 1, 2], 3);
        assert_eq!(piece.len(), 6);
        assert!(piece.iter().all(|e| e.degree() == Some(3)));
    }

    #[test]
    fn kernel_elements_map_levels_into_shifted_levels() {
        use crate::annihilator::{check_membership, SymAction};
        let c = Config::new(4, 1, 3, -1, 1).unwrap();
        let t = FiltrationTower::build(&c, Method::BruteForce, 3).unwrap();
        let a = SymAction::new(&c).unwrap();
        for p in 1..=2 {
            let piece = compute_ip(&t, p, 3, Scope::All).unwrap();
            assert!(piece.dim() > 0);
            for e in &piece.basis {
                assert!(check_membership(&a, &t, &e.render(), e, p).unwrap().holds);
            }
        }
    }
}
