//! The quadratics `x_{i1} x_{i3} - y_{i1} y_{i3}` for `i1 ∈ J1`, `i3 ∈ J3`.

use crate::exactpoly::{q, Monomial, Poly};
use crate::oscrep::Config;

/// The alternating quadratics of a configuration.
#[derive(Clone, Debug)]
pub struct PSet {
    cfg: Config,
    pairs: Vec<(usize, usize)>,
    elements: Vec<Poly>,
}

impl PSet {
    /// All `x_{i1} x_{i3} - y_{i1} y_{i3}`, ordered by `(i1, i3)`.
    pub fn new(cfg: &Config) -> Self {
        let space = cfg.space();
        let mut pairs = Vec::new();
        let mut elements = Vec::new();
        for i1 in cfg.j1() {
            for i3 in cfg.j3() {
                let xx = Monomial::var(cfg.xv(i1)).mul_var(cfg.xv(i3), 1);
                let yy = Monomial::var(cfg.yv(i1)).mul_var(cfg.yv(i3), 1);
                pairs.push((i1, i3));
                elements.push(Poly::from_terms(&space, [(xx, q(1)), (yy, q(-1))]));
            }
        }
        PSet {
            cfg: *cfg,
            pairs,
            elements,
        }
    }

    /// The configuration.
    pub fn config(&self) -> &Config {
        &self.cfg
    }

    /// The quadratics.
    pub fn elements(&self) -> &[Poly] {
        &self.elements
    }

    /// The index pair `(i1, i3)` of each quadratic.
    pub fn pairs(&self) -> &[(usize, usize)] {
        &self.pairs
    }

    /// Number of quadratics, `|J1| * |J3|`.
    pub fn len(&self) -> usize {
        self.elements.len()
    }

    /// Whether `J1` or `J3` is empty.
    pub fn is_empty(&self) -> bool {
        self.elements.is_empty()
    }

    /// Products of all multisets of `size` quadratics, in lexicographic order
    /// of the index multiset. Size 0 gives the constant 1.
    pub fn products(&self, size: usize) -> Vec<Poly> {
        let mut out = Vec::new();
        let mut stack: Vec<(usize, usize, Poly)> = vec![(0, 0, Poly::one(&self.cfg.space()))];
        while let Some((start, used, acc)) = stack.pop() {
            if used == size {
                out.push(acc);
                continue;
            }
            for idx in (start..self.elements.len()).rev() {
                stack.push((idx, used + 1, &acc * &self.elements[idx]));
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oscrep::{apply_generator, Generator};

    #[test]
    fn elements_are_negated_root_images_of_one() {
        let c = Config::new(5, 2, 3, -1, -1).unwrap();
        let p = PSet::new(&c);
        assert_eq!(p.len(), 4);
        let one = Poly::one(&c.space());
        for (e, &(i1, i3)) in p.elements().iter().zip(p.pairs()) {
            let img = apply_generator(&c, Generator::Root(i3, i1), &one).unwrap();
            assert_eq!(e, &-&img);
        }
    }

    #[test]
    fn product_counts() {
        let c = Config::new(5, 2, 3, -1, -1).unwrap();
        let p = PSet::new(&c);
        assert_eq!(p.products(0).len(), 1);
        assert_eq!(p.products(1).len(), 4);
        assert_eq!(p.products(2).len(), 10);
        let empty = PSet::new(&Config::new(3, 2, 3, 2, 1).unwrap());
        assert!(empty.is_empty());
        assert!(empty.products(1).is_empty());
        assert_eq!(empty.products(0).len(), 1);
    }
}
