//! Minors of the generic matrix `(z_{j,i})` and graded pieces of the ideals
//! they generate.

use serde::Serialize;

use crate::exactpoly::{EchelonBasis, Poly, VarSpace};

use super::ring::monomials_of_degree;
use super::DetError;

/// The ideal generated by the `t × t` minors with rows in `rows` and
/// columns in `cols`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MinorIdealSpec {
    pub t: usize,
    pub rows: Vec<usize>,
    pub cols: Vec<usize>,
}

fn subsets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    fn rec(items: &[usize], size: usize, start: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == size {
            out.push(cur.clone());
            return;
        }
        for idx in start..items.len() {
            cur.push(items[idx]);
            rec(items, size, idx + 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(items, size, 0, &mut Vec::new(), &mut out);
    out
}

fn permutations(t: usize) -> Vec<(Vec<usize>, i64)> {
    let mut out = Vec::new();
    let mut perm: Vec<usize> = (0..t).collect();
    fn rec(k: usize, perm: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if k == perm.len() {
            out.push((perm.clone(), sign));
            return;
        }
        for i in k..perm.len() {
            perm.swap(k, i);
            rec(k + 1, perm, if i == k { sign } else { -sign }, out);
            perm.swap(k, i);
        }
    }
    rec(0, &mut perm, 1, &mut out);
    out
}

/// All nonzero `t × t` minors of `(z_{j,i})`, `j ∈ rows`, `i ∈ cols`, with
/// missing variables read as 0, in lexicographic order of (row subset,
/// column subset). Empty when `t` exceeds either index set.
pub fn minor_generators(space: &VarSpace, spec: &MinorIdealSpec) -> Result<Vec<Poly>, DetError> {
    let layout = space
        .z_layout()
        .ok_or_else(|| DetError::InvalidRing("minors need a z space".into()))?;
    let mut rows = spec.rows.clone();
    let mut cols = spec.cols.clone();
    rows.sort_unstable();
    rows.dedup();
    cols.sort_unstable();
    cols.dedup();
    if spec.t == 0 || spec.t > rows.len() || spec.t > cols.len() {
        return Ok(Vec::new());
    }
    let entry = |j: usize, i: usize| -> Option<usize> { layout.var_of(j, i) };
    let perms = permutations(spec.t);
    let mut out = Vec::new();
    for rs in subsets(&rows, spec.t) {
        for cs in subsets(&cols, spec.t) {
            let mut det = Poly::zero(space);
            'perm: for (perm, sign) in &perms {
                let mut term = Poly::constant(space, crate::exactpoly::q(*sign));
                for (a, &b) in perm.iter().enumerate() {
                    match entry(rs[a], cs[b]) {
                        Some(v) => term = &term * &Poly::var(space, v)?,
                        None => continue 'perm,
                    }
                }
                det = &det + &term;
            }
            if !det.is_zero() {
                out.push(det);
            }
        }
    }
    Ok(out)
}

/// The degree-`d` piece of the ideal generated by homogeneous `generators`:
/// the span of all products of a generator with a monomial of complementary
/// degree.
pub fn ideal_piece(space: &VarSpace, generators: &[Poly], d: u32) -> Result<EchelonBasis, DetError> {
    let mut basis = EchelonBasis::new(space);
    for g in generators {
        let gd = g.leading().map(|(m, _)| m.degree()).unwrap_or(0);
        if gd > d {
            continue;
        }
        for m in monomials_of_degree(space, d - gd) {
            basis.insert(&(g * &m))?;
        }
    }
    Ok(basis)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::detvar::ZRing;
    use crate::oscrep::Config;

    #[test]
    fn minor_counts() {
        let r = ZRing::restricted(&Config::new(4, 2, 2, 0, 0).unwrap()).unwrap();
        let spec = MinorIdealSpec { t: 2, rows: vec![3, 4], cols: vec![1, 2] };
        let g = minor_generators(r.space(), &spec).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].render(), "z3_1*z4_2 - z3_2*z4_1");

        let big = ZRing::restricted(&Config::new(8, 4, 4, 0, 0).unwrap()).unwrap();
        let spec = MinorIdealSpec { t: 3, rows: vec![5, 6, 7, 8], cols: vec![1, 2, 3, 4] };
        assert_eq!(minor_generators(big.space(), &spec).unwrap().len(), 16);

        let spec = MinorIdealSpec { t: 3, rows: vec![3, 4], cols: vec![1, 2] };
        assert!(minor_generators(r.space(), &spec).unwrap().is_empty());
    }

    #[test]
    fn minors_with_missing_entry() {
        let c = Config::new(4, 2, 2, 0, 0).unwrap();
        let r = ZRing::extended(&c).unwrap();
        let spec = MinorIdealSpec { t: 3, rows: r.rows().to_vec(), cols: r.cols().to_vec() };
        let g = minor_generators(r.space(), &spec).unwrap();
        assert_eq!(g.len(), 1);
        assert_eq!(g[0].len(), 4);
    }

    #[test]
    fn ideal_piece_dimensions() {
        let r = ZRing::restricted(&Config::new(4, 2, 2, 0, 0).unwrap()).unwrap();
        let spec = MinorIdealSpec { t: 2, rows: vec![3, 4], cols: vec![1, 2] };
        let g = minor_generators(r.space(), &spec).unwrap();
        assert_eq!(ideal_piece(r.space(), &g, 2).unwrap().dim(), 1);
        assert_eq!(ideal_piece(r.space(), &g, 3).unwrap().dim(), 4);
        assert_eq!(ideal_piece(r.space(), &g, 1).unwrap().dim(), 0);
    }
}
