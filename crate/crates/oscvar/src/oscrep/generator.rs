//! The standard basis of sl(n) and gl(n) matrix arithmetic.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

use super::OscError;

/// A basis element of sl(n).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Generator {
    /// The matrix unit `E_{i,j}` with `i != j`.
    Root(usize, usize),
    /// `E_{r,r} - E_{r+1,r+1}`.
    Cartan(usize),
}

impl Generator {
    /// Checks index ranges against `n`.
    pub fn validate(&self, n: usize) -> Result<(), OscError> {
        let ok = match *self {
            Generator::Root(i, j) => i != j && (1..=n).contains(&i) && (1..=n).contains(&j),
            Generator::Cartan(r) => (1..n).contains(&r),
        };
        if ok {
            Ok(())
        } else {
            Err(OscError::IndexOutOfRange(format!("{self} for n={n}")))
        }
    }

    /// The generator as a combination of gl(n) matrix units.
    pub fn as_gl(&self) -> GlElement {
        let mut g = GlElement::default();
        match *self {
            Generator::Root(i, j) => g.add(i, j, 1),
            Generator::Cartan(r) => {
                g.add(r, r, 1);
                g.add(r + 1, r + 1, -1);
            }
        }
        g
    }
}

impl fmt::Display for Generator {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Generator::Root(i, j) => write!(f, "E{i}_{j}"),
            Generator::Cartan(r) => write!(f, "H{r}"),
        }
    }
}

/// All `n^2 - 1` generators: roots row-major, then Cartan elements.
///
/// The position in this list is the generator id used by symmetric-algebra
/// elements.
pub fn generators(n: usize) -> Vec<Generator> {
    let mut out = Vec::with_capacity(n * n - 1);
    for i in 1..=n {
        for j in 1..=n {
            if i != j {
                out.push(Generator::Root(i, j));
            }
        }
    }
    out.extend((1..n).map(Generator::Cartan));
    out
}

/// Id of a generator in [`generators`].
pub fn generator_id(n: usize, g: Generator) -> usize {
    match g {
        Generator::Root(i, j) => (i - 1) * (n - 1) + if j < i { j - 1 } else { j - 2 },
        Generator::Cartan(r) => n * (n - 1) + r - 1,
    }
}

/// An integer combination of gl(n) matrix units `E_{i,j}`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GlElement {
    entries: BTreeMap<(usize, usize), i64>,
}

impl GlElement {
    /// Adds `c * E_{i,j}`.
    pub fn add(&mut self, i: usize, j: usize, c: i64) {
        let e = self.entries.entry((i, j)).or_insert(0);
        *e += c;
        if *e == 0 {
            self.entries.remove(&(i, j));
        }
    }

    /// Nonzero entries.
    pub fn entries(&self) -> impl Iterator<Item = (usize, usize, i64)> + '_ {
        self.entries.iter().map(|(&(i, j), &c)| (i, j, c))
    }

    /// Whether this is the zero matrix.
    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    /// Matrix commutator `[self, other] = self*other - other*self`.
    pub fn bracket(&self, other: &GlElement) -> GlElement {
        let mut out = GlElement::default();
        for (i, j, a) in self.entries() {
            for (k, l, b) in other.entries() {
                if j == k {
                    out.add(i, l, a * b);
                }
                if l == i {
                    out.add(k, j, -a * b);
                }
            }
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn enumeration_and_ids_agree() {
        for n in 2..=6 {
            let gens = generators(n);
            assert_eq!(gens.len(), n * n - 1);
            for (id, g) in gens.iter().enumerate() {
                assert_eq!(generator_id(n, *g), id);
                g.validate(n).unwrap();
            }
        }
    }

    #[test]
    fn bracket_of_units() {
        let e12 = Generator::Root(1, 2).as_gl();
        let e21 = Generator::Root(2, 1).as_gl();
        assert_eq!(e12.bracket(&e21), Generator::Cartan(1).as_gl());
        assert!(e12.bracket(&e12).is_zero());
    }

    #[test]
    fn validation() {
        assert!(Generator::Root(1, 1).validate(3).is_err());
        assert!(Generator::Cartan(3).validate(3).is_err());
        assert!(Generator::Root(1, 4).validate(3).is_err());
    }
}
