//! Fraction-free sparse row reduction over arbitrary ordered column keys.
//!
//! Vectors are stored as integer entries sorted by strictly decreasing key.
//! Rows are kept primitive with a positive leading entry; rows inserted later
//! never contain the pivot of an earlier row, so every prefix of the row list
//! is itself a basis in semi-echelon form. Normal forms are computed by a
//! single descending scan and are unique: their support avoids every pivot.

use std::collections::HashMap;
use std::hash::Hash;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::Q;

/// Sparse integer vector with strictly decreasing keys and nonzero entries.
pub type SparseVec<K> = Vec<(K, BigInt)>;

/// Converts a rational vector to `(integer vector, scale)` with
/// `rational = integer / scale`. Input keys may be in any order; duplicate
/// keys are summed.
pub fn integerize<K: Ord + Clone>(entries: impl IntoIterator<Item = (K, Q)>) -> (SparseVec<K>, BigInt) {
    let mut v: Vec<(K, Q)> = entries.into_iter().filter(|(_, c)| !c.is_zero()).collect();
    v.sort_by(|a, b| b.0.cmp(&a.0));
    let mut merged: Vec<(K, Q)> = Vec::with_capacity(v.len());
    for (k, c) in v {
        match merged.last_mut() {
            Some((lk, lc)) if *lk == k => *lc += c,
            _ => merged.push((k, c)),
        }
    }
    merged.retain(|(_, c)| !c.is_zero());
    let scale = merged
        .iter()
        .fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
    let ints = merged
        .into_iter()
        .map(|(k, c)| {
            let n = c.numer() * (&scale / c.denom());
            (k, n)
        })
        .collect();
    (ints, scale)
}

/// Converts an integer vector with scale back to rationals.
pub fn rationalize<K>(v: SparseVec<K>, scale: &BigInt) -> Vec<(K, Q)> {
    v.into_iter()
        .map(|(k, c)| (k, Q::new(c, scale.clone())))
        .collect()
}

fn content<K>(v: &SparseVec<K>) -> BigInt {
    v.iter().fold(BigInt::zero(), |g, (_, c)| g.gcd(c))
}

/// Semi-echelon basis of sparse integer rows.
#[derive(Clone, Debug)]
pub struct Echelon<K> {
    rows: Vec<SparseVec<K>>,
    pivots: HashMap<K, usize>,
}

impl<K: Ord + Hash + Clone> Default for Echelon<K> {
    fn default() -> Self {
        Self::new()
    }
}

impl<K: Ord + Hash + Clone> Echelon<K> {
    /// An empty basis.
    pub fn new() -> Self {
        Echelon {
            rows: Vec::new(),
            pivots: HashMap::new(),
        }
    }

    /// Number of rows (the dimension of the span).
    pub fn len(&self) -> usize {
        self.rows.len()
    }

    /// Whether the span is zero.
    pub fn is_empty(&self) -> bool {
        self.rows.is_empty()
    }

    /// Rows in insertion order.
    pub fn rows(&self) -> &[SparseVec<K>] {
        &self.rows
    }

    /// Row index whose pivot is `key`, if any.
    pub fn pivot_row(&self, key: &K) -> Option<usize> {
        self.pivots.get(key).copied()
    }

    /// Normal form of `v` modulo the span of the first `limit` rows.
    ///
    /// Returns `(w, d)` with the true normal form equal to `w / d`; `w` is
    /// zero iff `v` lies in that span.
    pub fn reduce_prefix(&self, v: SparseVec<K>, limit: usize) -> (SparseVec<K>, BigInt) {
        let mut v = v;
        let mut scale = BigInt::one();
        let mut pos = 0;
        while pos < v.len() {
            let hit = match self.pivots.get(&v[pos].0) {
                Some(&r) if r < limit => Some(r),
                _ => None,
            };
            let Some(r) = hit else {
                pos += 1;
                continue;
            };
            let row = &self.rows[r];
            let a = &row[0].1;
            let b = &v[pos].1;
            let g = a.gcd(b);
            let a1 = a / &g;
            let b1 = b / &g;
            let unit = a1.is_one();
            let mut out: SparseVec<K> = Vec::with_capacity(v.len() + row.len());
            for (k, c) in v.drain(..pos) {
                out.push((k, if unit { c } else { c * &a1 }));
            }
            let mut rest = v.into_iter().skip(1).peekable();
            let mut tail = row[1..].iter().peekable();
            loop {
                match (rest.peek(), tail.peek()) {
                    (None, None) => break,
                    (Some(_), None) => {
                        let (k, c) = rest.next().unwrap();
                        out.push((k, if unit { c } else { c * &a1 }));
                    }
                    (None, Some(_)) => {
                        let (k, c) = tail.next().unwrap();
                        out.push((k.clone(), -(c * &b1)));
                    }
                    (Some((kv, _)), Some((kr, _))) => match kv.cmp(kr) {
                        std::cmp::Ordering::Greater => {
                            let (k, c) = rest.next().unwrap();
                            out.push((k, if unit { c } else { c * &a1 }));
                        }
                        std::cmp::Ordering::Less => {
                            let (k, c) = tail.next().unwrap();
                            out.push((k.clone(), -(c * &b1)));
                        }
                        std::cmp::Ordering::Equal => {
                            let (k, c) = rest.next().unwrap();
                            let (_, d) = tail.next().unwrap();
                            let c = if unit { c } else { c * &a1 } - d * &b1;
                            if !c.is_zero() {
                                out.push((k, c));
                            }
                        }
                    },
                }
            }
            v = out;
            if !unit {
                scale *= a1;
            }
        }
        let g = content(&v).gcd(&scale);
        if !g.is_one() && !g.is_zero() {
            for (_, c) in v.iter_mut() {
                *c = &*c / &g;
            }
            scale /= &g;
        }
        if v.is_empty() {
            scale = BigInt::one();
        }
        (v, scale)
    }

    /// Normal form modulo the full span.
    pub fn reduce(&self, v: SparseVec<K>) -> (SparseVec<K>, BigInt) {
        self.reduce_prefix(v, self.rows.len())
    }

    /// Inserts `v`; returns true iff the span grew.
    pub fn insert(&mut self, v: SparseVec<K>) -> bool {
        let (mut w, _) = self.reduce(v);
        if w.is_empty() {
            return false;
        }
        let g = content(&w);
        let flip = w[0].1.is_negative();
        for (_, c) in w.iter_mut() {
            *c = &*c / &g;
            if flip {
                *c = -&*c;
            }
        }
        self.pivots.insert(w[0].0.clone(), self.rows.len());
        self.rows.push(w);
        true
    }

    /// The unique reduced echelon form: rows sorted by decreasing pivot,
    /// each with leading coefficient 1 and no other pivot in its support.
    pub fn canonical(&self) -> Vec<Vec<(K, Q)>> {
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_by(|&a, &b| self.rows[a][0].0.cmp(&self.rows[b][0].0));
        let mut done: Echelon<K> = Echelon::new();
        let mut out: Vec<Vec<(K, Q)>> = Vec::with_capacity(order.len());
        for idx in order {
            let (w, _) = done.reduce(self.rows[idx].clone());
            let lead = w[0].1.clone();
            let w_int: SparseVec<K> = w.clone();
            done.pivots.insert(w_int[0].0.clone(), done.rows.len());
            done.rows.push(w_int);
            out.push(w.into_iter().map(|(k, c)| (k, Q::new(c, lead.clone()))).collect());
        }
        out.reverse();
        out
    }
}

/// Augmented column key for kernel tracking: image columns sort above
/// combination columns, so a vector whose leading key is a combination
/// column has a zero image part.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
enum Aug<K> {
    Combo(usize),
    Image(K),
}

/// Basis of `{c : Σ c_i images[i] = 0}` in reduced echelon form over the
/// coefficient indices.
pub fn kernel<K: Ord + Hash + Clone>(images: &[Vec<(K, Q)>]) -> Vec<Vec<(usize, Q)>> {
    let mut ech: Echelon<Aug<K>> = Echelon::new();
    let mut relations: Echelon<usize> = Echelon::new();
    for (i, img) in images.iter().enumerate() {
        let (ints, scale) = integerize(img.iter().cloned());
        let mut v: SparseVec<Aug<K>> = ints.into_iter().map(|(k, c)| (Aug::Image(k), c)).collect();
        v.push((Aug::Combo(i), scale));
        let (w, _) = ech.reduce(v);
        match w.first() {
            Some((Aug::Combo(_), _)) => {
                let rel: SparseVec<usize> = w
                    .into_iter()
                    .map(|(k, c)| match k {
                        Aug::Combo(j) => (j, c),
                        Aug::Image(_) => unreachable!("image entries sort first"),
                    })
                    .collect();
                relations.insert(rel);
            }
            Some((Aug::Image(_), _)) => {
                ech.insert(w);
            }
            None => unreachable!("combination column is never cancelled"),
        }
    }
    relations.canonical()
}

/// Rank of a family of rational vectors.
pub fn rank<K: Ord + Hash + Clone>(vectors: &[Vec<(K, Q)>]) -> usize {
    let mut ech = Echelon::new();
    for v in vectors {
        ech.insert(integerize(v.iter().cloned()).0);
    }
    ech.len()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exactpoly::poly::{q, qf};

    fn vecq(entries: &[(u32, i64)]) -> Vec<(u32, Q)> {
        entries.iter().map(|&(k, c)| (k, q(c))).collect()
    }

    #[test]
    fn rank_of_dependent_system() {
        let vs = vec![vecq(&[(2, 1), (1, 1)]), vecq(&[(2, 1), (1, -1)]), vecq(&[(1, 1)])];
        assert_eq!(rank(&vs), 2);
    }

    #[test]
    fn reduce_gives_normal_form() {
        let mut e: Echelon<u32> = Echelon::new();
        assert!(e.insert(integerize(vecq(&[(3, 2), (1, 4)])).0));
        assert!(e.insert(integerize(vecq(&[(2, 3), (1, 1)])).0));
        let (w, d) = e.reduce(integerize(vecq(&[(3, 1), (2, 1), (0, 5)])).0);
        let nf = rationalize(w, &d);
        // v - 1/2 row0 - 1/3 row1 = (-2 - 1/3) e1 + 5 e0
        assert_eq!(nf, vec![(1, qf(-7, 3)), (0, q(5))]);
    }

    #[test]
    fn canonical_is_order_independent() {
        let a = vecq(&[(3, 2), (2, 1), (0, 1)]);
        let b = vecq(&[(2, 1), (1, 5)]);
        let c = vecq(&[(3, 1), (1, -1)]);
        let mut e1: Echelon<u32> = Echelon::new();
        let mut e2: Echelon<u32> = Echelon::new();
        for v in [&a, &b, &c] {
            e1.insert(integerize(v.clone()).0);
        }
        for v in [&c, &a, &b] {
            e2.insert(integerize(v.clone()).0);
        }
        assert_eq!(e1.canonical(), e2.canonical());
    }

    #[test]
    fn kernel_of_simple_maps() {
        let id = vec![vecq(&[(1, 1)]), vecq(&[(0, 1)])];
        assert!(kernel(&id).is_empty());
        let zero: Vec<Vec<(u32, Q)>> = vec![vec![], vec![], vec![]];
        assert_eq!(kernel(&zero).len(), 3);
        let dep = vec![
            vec![(0u32, qf(1, 2))],
            vec![(0u32, q(3))],
        ];
        let k = kernel(&dep);
        assert_eq!(k, vec![vec![(1, q(1)), (0, q(-6))]]);
    }
}
