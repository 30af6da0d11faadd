//! The alternating minor operators `Δ` built from gl(n) matrix units.

use std::fmt;

use serde::Serialize;

use crate::exactpoly::Q;
use crate::oscrep::Config;

use super::symbol::SymElement;
use super::AnnihilatorError;

/// An ordered product of gl(n) matrix units `E_{j,i}`, written left to right
/// and acting right to left.
pub type UnitWord = Vec<(usize, usize)>;

/// A minor of the matrix `(E_{j,i})` with rows `j` and columns `i`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DeltaOp {
    /// `E_{j1,i1} E_{j2,i2} - E_{j1,i2} E_{j2,i1}`.
    Minor2 {
        rows: [usize; 2],
        cols: [usize; 2],
    },
    /// `Σ_σ sgn(σ) E_{j1,iσ(1)} E_{j2,iσ(2)} E_{j3,iσ(3)}`, six signed terms.
    Minor3 {
        rows: [usize; 3],
        cols: [usize; 3],
    },
    /// The single unit `E_{j,i}`.
    Minor1 { row: usize, col: usize },
}

/// Permutations of `0..t` with their signs, identity first.
fn signed_permutations(t: usize) -> Vec<(i64, Vec<usize>)> {
    match t {
        1 => vec![(1, vec![0])],
        2 => vec![(1, vec![0, 1]), (-1, vec![1, 0])],
        3 => vec![
            (1, vec![0, 1, 2]),
            (1, vec![1, 2, 0]),
            (1, vec![2, 0, 1]),
            (-1, vec![1, 0, 2]),
            (-1, vec![2, 1, 0]),
            (-1, vec![0, 2, 1]),
        ],
        _ => unreachable!("minors of size 1..=3 only"),
    }
}

impl DeltaOp {
    /// Row indices `j`.
    pub fn rows(&self) -> Vec<usize> {
        match self {
            DeltaOp::Minor1 { row, .. } => vec![*row],
            DeltaOp::Minor2 { rows, .. } => rows.to_vec(),
            DeltaOp::Minor3 { rows, .. } => rows.to_vec(),
        }
    }

    /// Column indices `i`.
    pub fn cols(&self) -> Vec<usize> {
        match self {
            DeltaOp::Minor1 { col, .. } => vec![*col],
            DeltaOp::Minor2 { cols, .. } => cols.to_vec(),
            DeltaOp::Minor3 { cols, .. } => cols.to_vec(),
        }
    }

    /// Size of the minor.
    pub fn size(&self) -> usize {
        self.rows().len()
    }

    /// The signed ordered words of the defining expansion.
    pub fn words(&self) -> Vec<(i64, UnitWord)> {
        let (rows, cols) = (self.rows(), self.cols());
        signed_permutations(rows.len())
            .into_iter()
            .map(|(sign, perm)| {
                let word = rows.iter().zip(&perm).map(|(&j, &s)| (j, cols[s])).collect();
                (sign, word)
            })
            .collect()
    }

    /// The symbol in `S(sl(n))`, diagonal units replaced by their traceless parts.
    pub fn symbol(&self, n: usize) -> Result<SymElement, AnnihilatorError> {
        word_sum_symbol(n, &self.words())
    }

    /// The symbol modulo the ideal generated by the Cartan subalgebra and
    /// the root vectors outside `L`: only products of `L` coordinates survive.
    pub fn symbol_mod_off_l(&self, cfg: &Config) -> Result<SymElement, AnnihilatorError> {
        let kept: Vec<(i64, UnitWord)> = self
            .words()
            .into_iter()
            .filter(|(_, w)| w.iter().all(|&(j, i)| cfg.in_l(j, i)))
            .collect();
        word_sum_symbol(cfg.n, &kept)
    }
}

impl fmt::Display for DeltaOp {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: Vec<usize>| v.iter().map(ToString::to_string).collect::<Vec<_>>().join(",");
        match self {
            DeltaOp::Minor1 { row, col } => write!(f, "E{row}_{col}"),
            _ => write!(f, "Delta^{{{}}}_{{{}}}", join(self.rows()), join(self.cols())),
        }
    }
}

/// Symbol of a signed sum of unit words.
pub fn word_sum_symbol(n: usize, words: &[(i64, UnitWord)]) -> Result<SymElement, AnnihilatorError> {
    let mut out = SymElement::zero(n);
    for (c, w) in words {
        let mut term = SymElement::one(n);
        for &(j, i) in w {
            term = term.mul(&SymElement::unit(n, j, i)?);
        }
        out = out.add(&term.scale(&Q::from_integer((*c).into())));
    }
    Ok(out)
}

/// Families of minors indexed by blocks of the configuration.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum DeltaFamily {
    /// 2-minors with rows in `J2` and columns in `J1` (pairs in `L1`).
    L1Pairs,
    /// 2-minors with rows in `J3` and columns in `J2` (pairs in `L2`).
    L2Pairs,
    /// 3-minors with rows in `J2 ∪ J3` and columns in `J1 ∪ J2`.
    Triples,
    /// 3-minors with rows in `J3` and columns in `J1`.
    OuterTriples,
    /// Units with row and column in `J2`.
    MiddleUnits,
}

impl DeltaFamily {
    /// Row and column index sets and the minor size.
    pub fn shape(&self, cfg: &Config) -> (Vec<usize>, Vec<usize>, usize) {
        let j1: Vec<usize> = cfg.j1().collect();
        let j2: Vec<usize> = cfg.j2().collect();
        let j3: Vec<usize> = cfg.j3().collect();
        let cat = |a: &[usize], b: &[usize]| a.iter().chain(b).copied().collect::<Vec<_>>();
        match self {
            DeltaFamily::L1Pairs => (j2, j1, 2),
            DeltaFamily::L2Pairs => (j3, j2, 2),
            DeltaFamily::Triples => (cat(&j2, &j3), cat(&j1, &j2), 3),
            DeltaFamily::OuterTriples => (j3, j1, 3),
            DeltaFamily::MiddleUnits => (j2.clone(), j2, 1),
        }
    }
}

fn increasing_tuples(set: &[usize], t: usize) -> Vec<Vec<usize>> {
    fn rec(set: &[usize], start: usize, t: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == t {
            out.push(cur.clone());
            return;
        }
        for pos in start..set.len() {
            cur.push(set[pos]);
            rec(set, pos + 1, t, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(set, 0, t, &mut Vec::new(), &mut out);
    out
}

/// All `t`-minors with strictly increasing rows from `rows` and columns
/// from `cols`, rows-major in lexicographic order.
pub fn minors(rows: &[usize], cols: &[usize], t: usize) -> Vec<DeltaOp> {
    let mut out = Vec::new();
    for r in increasing_tuples(rows, t) {
        for c in increasing_tuples(cols, t) {
            out.push(match t {
                1 => DeltaOp::Minor1 { row: r[0], col: c[0] },
                2 => DeltaOp::Minor2 {
                    rows: [r[0], r[1]],
                    cols: [c[0], c[1]],
                },
                3 => DeltaOp::Minor3 {
                    rows: [r[0], r[1], r[2]],
                    cols: [c[0], c[1], c[2]],
                },
                _ => unreachable!("minors of size 1..=3 only"),
            });
        }
    }
    out
}

/// All operators of a family for `cfg`.
pub fn delta_ops(cfg: &Config, family: DeltaFamily) -> Vec<DeltaOp> {
    let (rows, cols, t) = family.shape(cfg);
    minors(&rows, &cols, t)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscrep::{generator_id, Generator};

    fn cfg(n: usize, n1: usize, n2: usize) -> Config {
        Config::new(n, n1, n2, -1, -1).unwrap()
    }

    #[test]
    fn family_counts() {
        let c = cfg(6, 2, 4);
        assert_eq!(
            delta_ops(&c, DeltaFamily::L1Pairs),
            vec![DeltaOp::Minor2 { rows: [3, 4], cols: [1, 2] }]
        );
        assert_eq!(delta_ops(&c, DeltaFamily::L2Pairs).len(), 1);
        assert_eq!(delta_ops(&c, DeltaFamily::Triples).len(), 16);
        assert_eq!(delta_ops(&c, DeltaFamily::MiddleUnits).len(), 4);
        assert!(delta_ops(&cfg(3, 1, 2), DeltaFamily::L1Pairs).is_empty());
        assert_eq!(delta_ops(&cfg(5, 2, 3), DeltaFamily::Triples).len(), 1);
    }

    #[test]
    fn expansion_has_six_terms() {
        let d = DeltaOp::Minor3 { rows: [4, 5, 6], cols: [1, 2, 3] };
        let words = d.words();
        assert_eq!(words.len(), 6);
        assert_eq!(words[0], (1, vec![(4, 1), (5, 2), (6, 3)]));
        assert_eq!(words[1], (1, vec![(4, 2), (5, 3), (6, 1)]));
        assert_eq!(words[5], (-1, vec![(4, 1), (5, 3), (6, 2)]));
        assert_eq!(d.symbol(6).unwrap().len(), 6);
        assert_eq!(d.to_string(), "Delta^{4,5,6}_{1,2,3}");
    }

    #[test]
    fn degenerate_minor_has_zero_symbol() {
        let d = DeltaOp::Minor2 { rows: [2, 3], cols: [1, 1] };
        assert!(d.symbol(4).unwrap().is_zero());
    }

    #[test]
    fn projection_drops_non_l_entries() {
        // rows {3,4,5} x cols {1,2,3} for (5,2,3): the (3,3) entry is diagonal
        let c = cfg(5, 2, 3);
        let d = DeltaOp::Minor3 { rows: [3, 4, 5], cols: [1, 2, 3] };
        let full = d.symbol(5).unwrap();
        let proj = d.symbol_mod_off_l(&c).unwrap();
        assert_eq!(proj.len(), 4);
        let l_ids: Vec<usize> = (1..=5)
            .flat_map(|j| (1..=5).map(move |i| (j, i)))
            .filter(|&(j, i)| c.in_l(j, i))
            .map(|(j, i)| generator_id(5, Generator::Root(j, i)))
            .collect();
        assert_eq!(full.restrict(|g| l_ids.contains(&g)), proj);
    }
}
