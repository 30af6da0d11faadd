//! Parameter sets and the index blocks they induce.

use std::ops::RangeInclusive;

use serde::{Deserialize, Serialize};

use crate::exactpoly::VarSpace;

use super::OscError;

/// Which of the three index blocks an index belongs to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Block {
    /// `1..=n1`.
    J1,
    /// `n1+1..=n2`.
    J2,
    /// `n2+1..=n`.
    J3,
}

/// A parameter set `(n, n1, n2, l1, l2)`.
///
/// The index set `1..=n` splits into `J1 = 1..=n1`, `J2 = n1+1..=n2` and
/// `J3 = n2+1..=n`; `(l1, l2)` is the signed bidegree of the module.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Config {
    pub n: usize,
    pub n1: usize,
    pub n2: usize,
    pub l1: i64,
    pub l2: i64,
}

impl Config {
    /// Validates `2 <= n <= 8` and `1 <= n1 <= n2 <= n`.
    pub fn new(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Result<Self, OscError> {
        if !(2..=8).contains(&n) {
            return Err(OscError::InvalidConfig(format!("n must lie in 2..=8, got {n}")));
        }
        if !(1 <= n1 && n1 <= n2 && n2 <= n) {
            return Err(OscError::InvalidConfig(format!(
                "need 1 <= n1 <= n2 <= n, got n={n}, n1={n1}, n2={n2}"
            )));
        }
        Ok(Config { n, n1, n2, l1, l2 })
    }

    /// Same blocks with a different bidegree.
    pub fn with_degree(&self, l1: i64, l2: i64) -> Self {
        Config { l1, l2, ..*self }
    }

    /// Indices of the first block.
    pub fn j1(&self) -> RangeInclusive<usize> {
        1..=self.n1
    }

    /// Indices of the middle block (possibly empty).
    pub fn j2(&self) -> RangeInclusive<usize> {
        self.n1 + 1..=self.n2
    }

    /// Indices of the last block (possibly empty).
    pub fn j3(&self) -> RangeInclusive<usize> {
        self.n2 + 1..=self.n
    }

    /// Block containing index `i` (1-based).
    pub fn block(&self, i: usize) -> Block {
        if i <= self.n1 {
            Block::J1
        } else if i <= self.n2 {
            Block::J2
        } else {
            Block::J3
        }
    }

    /// The distinguished middle index `n1+1`, present iff `n1 < n2`.
    pub fn pivot(&self) -> Option<usize> {
        (self.n1 < self.n2).then_some(self.n1 + 1)
    }

    /// Whether `(j, i)` lies in `L = L1 ∪ L2 ∪ L3`, i.e. `j` is in a strictly
    /// later block than `i`.
    pub fn in_l(&self, j: usize, i: usize) -> bool {
        self.block(j) > self.block(i)
    }

    /// The xy polynomial space.
    pub fn space(&self) -> VarSpace {
        VarSpace::xy(self.n).expect("validated n")
    }

    /// Variable id of `x_i`.
    pub fn xv(&self, i: usize) -> usize {
        i - 1
    }

    /// Variable id of `y_i`.
    pub fn yv(&self, i: usize) -> usize {
        self.n + i - 1
    }

    /// `max(l1, 0) + max(l2, 0)`, the offset in the degree function.
    pub fn positive_part(&self) -> i64 {
        self.l1.max(0) + self.l2.max(0)
    }

    /// Short label `(n,n1,n2,l1,l2)`.
    pub fn label(&self) -> String {
        format!("({},{},{},{},{})", self.n, self.n1, self.n2, self.l1, self.l2)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn blocks_partition_indices() {
        let c = Config::new(6, 2, 4, -1, -1).unwrap();
        assert_eq!(c.j1().collect::<Vec<_>>(), vec![1, 2]);
        assert_eq!(c.j2().collect::<Vec<_>>(), vec![3, 4]);
        assert_eq!(c.j3().collect::<Vec<_>>(), vec![5, 6]);
        assert_eq!(c.block(4), Block::J2);
        assert_eq!(c.pivot(), Some(3));
        assert!(c.in_l(5, 1) && c.in_l(3, 2) && !c.in_l(2, 3) && !c.in_l(3, 4));
    }

    #[test]
    fn empty_blocks() {
        let c = Config::new(4, 2, 2, -1, -1).unwrap();
        assert!(c.j2().next().is_none());
        assert_eq!(c.pivot(), None);
        let d = Config::new(3, 2, 3, 2, 1).unwrap();
        assert!(d.j3().next().is_none());
    }

    #[test]
    fn rejects_bad_configs() {
        assert!(Config::new(1, 1, 1, 0, 0).is_err());
        assert!(Config::new(3, 0, 2, 0, 0).is_err());
        assert!(Config::new(3, 2, 1, 0, 0).is_err());
        assert!(Config::new(3, 1, 4, 0, 0).is_err());
    }
}
