//! Weights, the highest-weight formula and the irreducibility classifier.

use num_traits::ToPrimitive;

use crate::exactpoly::{Poly, Q};

use super::config::Config;
use super::generator::Generator;
use super::rep::apply_generator;
use super::OscError;

/// Cartan eigenvalues `(h_1, …, h_{n-1})` of `f`, or `None` when `f` is not a
/// simultaneous eigenvector.
pub fn weight(cfg: &Config, f: &Poly) -> Result<Option<Vec<i64>>, OscError> {
    let (lead, lc) = f.leading().ok_or(OscError::ZeroPolynomial)?;
    let mut out = Vec::with_capacity(cfg.n - 1);
    for r in 1..cfg.n {
        let img = apply_generator(cfg, Generator::Cartan(r), f)?;
        let lambda: Q = img.coeff(lead) / lc;
        if img != f.scale(&lambda) || !lambda.is_integer() {
            return Ok(None);
        }
        out.push(lambda.to_integer().to_i64().expect("small eigenvalue"));
    }
    Ok(Some(out))
}

/// Cartan eigenvalues of the weight
/// `m1 λ_{n1-1} - (m1+1) λ_{n1} - (m2+1) λ_{n2} + m2 (1 - δ_{n2,n-1}) λ_{n2+1}`
/// with `λ_0 = λ_n = 0`, as a vector indexed by the fundamental weights.
pub fn highest_weight_formula(cfg: &Config, m1: i64, m2: i64) -> Vec<i64> {
    let n = cfg.n;
    let mut w = vec![0i64; n + 1];
    let mut add = |r: usize, c: i64| {
        if (1..n).contains(&r) {
            w[r] += c;
        }
    };
    if cfg.n1 >= 1 {
        add(cfg.n1 - 1, m1);
    }
    add(cfg.n1, -(m1 + 1));
    add(cfg.n2, -(m2 + 1));
    let delta = i64::from(cfg.n2 == n - 1);
    add(cfg.n2 + 1, m2 * (1 - delta));
    w[1..n].to_vec()
}

/// Whether all simple raising operators `E_{r,r+1}` annihilate `f`.
pub fn is_highest_weight(cfg: &Config, f: &Poly) -> Result<bool, OscError> {
    for r in 1..cfg.n {
        if !apply_generator(cfg, Generator::Root(r, r + 1), f)?.is_zero() {
            return Ok(false);
        }
    }
    Ok(!f.is_zero())
}

/// The irreducibility criterion for the harmonic module of `cfg`, read as a
/// literal disjunction of its sub-cases.
pub fn classify_irreducible(cfg: &Config) -> bool {
    let (n, n1, n2) = (cfg.n as i64, cfg.n1 as i64, cfg.n2 as i64);
    let (l1, l2) = (cfg.l1, cfg.l2);
    if n1 + 1 < n2 {
        l1 + l2 <= n1 - n2 + 1
            || (n2 == n && l1 >= 0 && l2 == 0)
            || (n2 == n && l2 >= 0 && l1 >= n1 - n + 2)
    } else if n1 + 1 == n2 {
        l1 + l2 <= 0 || (n2 == n && 0 <= l2 && l2 <= l1)
    } else {
        l1 + l2 <= 0
            && ((l2 <= 0 && n1 < n - 1 && n >= 3)
                || (l1 <= 0 && 1 < n1 && n1 < n && n >= 3)
                || (l1 <= 0 && l2 <= 0 && n1 == 1 && n == 2))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Config {
        Config::new(n, n1, n2, l1, l2).unwrap()
    }

    #[test]
    fn classifier_examples() {
        assert!(classify_irreducible(&cfg(3, 1, 2, -1, -1)));
        assert!(!classify_irreducible(&cfg(4, 1, 2, 1, 1)));
        assert!(classify_irreducible(&cfg(3, 1, 3, 2, 1)));
        assert!(classify_irreducible(&cfg(4, 2, 2, -1, -1)));
        assert!(classify_irreducible(&cfg(2, 1, 1, -1, -1)));
        assert!(!classify_irreducible(&cfg(4, 1, 3, -1, 1)));
    }

    #[test]
    fn highest_weight_vector_x1y4() {
        let c = cfg(5, 1, 3, 0, 0);
        let f = Poly::parse(&c.space(), "x1*y4").unwrap();
        assert!(is_highest_weight(&c, &f).unwrap());
        assert_eq!(weight(&c, &f).unwrap().unwrap(), highest_weight_formula(&c, 1, 1));
        assert_eq!(highest_weight_formula(&c, 1, 1), vec![-2, 0, -2, 1]);
    }

    #[test]
    fn weights_of_simple_polynomials() {
        let c = cfg(3, 1, 2, 0, 0);
        let one = Poly::parse(&c.space(), "1").unwrap();
        assert_eq!(weight(&c, &one).unwrap().unwrap(), vec![-1, -1]);
        // x1 and y1 share a weight in every configuration; x1 and x2 do not
        let same = Poly::parse(&c.space(), "x1 + y1").unwrap();
        assert_eq!(weight(&c, &same).unwrap().unwrap(), vec![-2, -1]);
        let mixed = Poly::parse(&c.space(), "x1 + x2").unwrap();
        assert_eq!(weight(&c, &mixed).unwrap(), None);
        assert!(weight(&c, &Poly::zero(&c.space())).is_err());
    }
}
