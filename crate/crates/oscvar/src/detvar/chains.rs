//! 3-chains in multisets of index pairs and the 3-chain-free monomial families.

use std::collections::BTreeSet;

use serde::Serialize;

use crate::exactpoly::Poly;

use super::ring::ZRing;
use super::DetError;

/// Whether some three pairs `(j, i)` are strictly increasing in both
/// coordinates, found as a longest chain by patience sorting.
pub fn has_3chain(pairs: &[(usize, usize)]) -> bool {
    let mut sorted = pairs.to_vec();
    // Equal rows sorted by decreasing column can never extend each other.
    sorted.sort_unstable_by(|a, b| a.0.cmp(&b.0).then(b.1.cmp(&a.1)));
    let mut tails: Vec<usize> = Vec::new();
    for &(_, i) in &sorted {
        let pos = tails.partition_point(|&t| t < i);
        if pos == tails.len() {
            tails.push(i);
            if tails.len() >= 3 {
                return true;
            }
        } else {
            tails[pos] = i;
        }
    }
    false
}

/// Cubic scan over all triples; the oracle for [`has_3chain`].
pub fn has_3chain_bruteforce(pairs: &[(usize, usize)]) -> bool {
    let m = pairs.len();
    for a in 0..m {
        for b in 0..m {
            for c in 0..m {
                let (p, q, r) = (pairs[a], pairs[b], pairs[c]);
                if p.0 < q.0 && q.0 < r.0 && p.1 < q.1 && q.1 < r.1 {
                    return true;
                }
            }
        }
    }
    false
}

/// A monomial `Π x_s Π y_s Π z_{j,i}` of the extended ring with sorted factors.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub struct IndexedMonomial {
    /// Indices of the x-factors (`z_{n+1,s}`), nondecreasing.
    pub xs: Vec<usize>,
    /// Indices of the y-factors (`z_{s,0}`), nondecreasing.
    pub ys: Vec<usize>,
    /// `(j, i)` of the z-factors, lexicographically nondecreasing.
    pub zs: Vec<(usize, usize)>,
}

impl IndexedMonomial {
    /// Column multiset: x-factor indices and z-factor columns, sorted.
    pub fn column_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.xs.iter().copied().chain(self.zs.iter().map(|p| p.1)).collect();
        v.sort_unstable();
        v
    }

    /// Row multiset: y-factor indices and z-factor rows, sorted.
    pub fn row_indices(&self) -> Vec<usize> {
        let mut v: Vec<usize> = self.ys.iter().copied().chain(self.zs.iter().map(|p| p.0)).collect();
        v.sort_unstable();
        v
    }

    /// All pairs, with x-factors as `(n+1, s)` and y-factors as `(s, 0)`.
    pub fn pairs(&self, n: usize) -> Vec<(usize, usize)> {
        let mut v: Vec<(usize, usize)> = self.xs.iter().map(|&s| (n + 1, s)).collect();
        v.extend(self.zs.iter().copied());
        v.extend(self.ys.iter().map(|&s| (s, 0)));
        v
    }

    /// The monomial as a polynomial of the extended ring.
    pub fn to_poly(&self, ring: &ZRing) -> Result<Poly, DetError> {
        let n = ring.n();
        let mut out = Poly::one(ring.space());
        for (j, i) in self.pairs(n) {
            out = &out * &ring.z(j, i)?;
        }
        Ok(out)
    }
}

/// Distinct sub-multisets of a sorted multiset with the given size, each
/// returned with its complement.
fn split_multiset(items: &[usize], size: usize) -> Vec<(Vec<usize>, Vec<usize>)> {
    let mut distinct: Vec<(usize, usize)> = Vec::new();
    for &x in items {
        match distinct.last_mut() {
            Some((v, c)) if *v == x => *c += 1,
            _ => distinct.push((x, 1)),
        }
    }
    let mut out = Vec::new();
    fn rec(
        d: &[(usize, usize)],
        idx: usize,
        left: usize,
        take: &mut Vec<usize>,
        rest: &mut Vec<usize>,
        out: &mut Vec<(Vec<usize>, Vec<usize>)>,
    ) {
        if idx == d.len() {
            if left == 0 {
                out.push((take.clone(), rest.clone()));
            }
            return;
        }
        let (v, c) = d[idx];
        for t in 0..=c.min(left) {
            let (tl, rl) = (take.len(), rest.len());
            take.extend(std::iter::repeat(v).take(t));
            rest.extend(std::iter::repeat(v).take(c - t));
            rec(d, idx + 1, left - t, take, rest, out);
            take.truncate(tl);
            rest.truncate(rl);
        }
    }
    rec(&distinct, 0, size, &mut Vec::new(), &mut Vec::new(), &mut out);
    out
}

/// All distinct pairings of a row multiset with a column multiset of equal
/// size, as sorted pair lists.
fn pairings(rows: &[usize], cols: &[usize]) -> BTreeSet<Vec<(usize, usize)>> {
    let mut out = BTreeSet::new();
    let mut used = vec![false; cols.len()];
    let mut cur: Vec<(usize, usize)> = Vec::new();
    fn rec(
        rows: &[usize],
        cols: &[usize],
        used: &mut [bool],
        cur: &mut Vec<(usize, usize)>,
        out: &mut BTreeSet<Vec<(usize, usize)>>,
    ) {
        let k = cur.len();
        if k == rows.len() {
            let mut s = cur.clone();
            s.sort_unstable();
            out.insert(s);
            return;
        }
        let mut last: Option<usize> = None;
        for idx in 0..cols.len() {
            if used[idx] || last == Some(cols[idx]) {
                continue;
            }
            last = Some(cols[idx]);
            used[idx] = true;
            cur.push((rows[k], cols[idx]));
            rec(rows, cols, used, cur, out);
            cur.pop();
            used[idx] = false;
        }
    }
    rec(rows, cols, &mut used, &mut cur, &mut out);
    out
}

/// The monomials with `k1` x-factors, `k2` y-factors and `k3` z-factors whose
/// column multiset is `cols` and row multiset is `rows`, and whose pairs
/// contain no 3-chain; sorted and duplicate-free.
pub fn enumerate_gset(
    ring: &ZRing,
    k1: usize,
    k2: usize,
    k3: usize,
    cols: &[usize],
    rows: &[usize],
) -> Result<Vec<IndexedMonomial>, DetError> {
    if cols.len() != k1 + k3 || rows.len() != k2 + k3 {
        return Err(DetError::SizeMismatch(format!(
            "need |I1| = {} and |I3| = {}, got {} and {}",
            k1 + k3,
            k2 + k3,
            cols.len(),
            rows.len()
        )));
    }
    if cols.iter().any(|i| !ring.j1().contains(i)) || rows.iter().any(|j| !ring.j3().contains(j)) {
        return Err(DetError::SizeMismatch("index outside J1 or J3".into()));
    }
    let mut cols = cols.to_vec();
    let mut rows = rows.to_vec();
    cols.sort_unstable();
    rows.sort_unstable();
    let n = ring.n();
    let mut out = BTreeSet::new();
    for (xs, zcols) in split_multiset(&cols, k1) {
        for (ys, zrows) in split_multiset(&rows, k2) {
            for zs in pairings(&zrows, &zcols) {
                let g = IndexedMonomial {
                    xs: xs.clone(),
                    ys: ys.clone(),
                    zs,
                };
                if !has_3chain(&g.pairs(n)) {
                    out.insert(g);
                }
            }
        }
    }
    Ok(out.into_iter().collect())
}
