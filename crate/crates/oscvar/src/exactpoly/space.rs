//! Variable spaces: the xy-ring in 2n variables and matrix-indexed z-rings.

use std::fmt;
use std::sync::Arc;

use super::monomial::MAX_VARS;
use super::PolyError;

/// Layout of a z-ring: variables `z_{j,i}` for `(j, i)` in `rows × cols`,
/// minus an excluded set, enumerated row-major.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ZLayout {
    rows: Vec<usize>,
    cols: Vec<usize>,
    excluded: Vec<(usize, usize)>,
    vars: Vec<(usize, usize)>,
}

impl ZLayout {
    /// Row indices in increasing order.
    pub fn rows(&self) -> &[usize] {
        &self.rows
    }

    /// Column indices in increasing order.
    pub fn cols(&self) -> &[usize] {
        &self.cols
    }

    /// Excluded `(row, col)` pairs.
    pub fn excluded(&self) -> &[(usize, usize)] {
        &self.excluded
    }

    /// All variables as `(row, col)` pairs, in variable-id order.
    pub fn vars(&self) -> &[(usize, usize)] {
        &self.vars
    }

    /// Variable id of `z_{row,col}`, if it exists.
    pub fn var_of(&self, row: usize, col: usize) -> Option<usize> {
        self.vars.iter().position(|&p| p == (row, col))
    }
}

/// The ambient variable set of a polynomial.
#[derive(Clone, PartialEq, Eq, Hash)]
pub enum VarSpace {
    /// `x_1..x_n, y_1..y_n` with ids `0..n` for x and `n..2n` for y.
    XY { n: usize },
    /// A z-ring.
    Z(Arc<ZLayout>),
}

impl VarSpace {
    /// The xy-ring in `2n` variables.
    pub fn xy(n: usize) -> Result<Self, PolyError> {
        if n < 2 || 2 * n > MAX_VARS {
            return Err(PolyError::InvalidSpace(format!(
                "xy space needs 2 <= n <= {}, got {n}",
                MAX_VARS / 2
            )));
        }
        Ok(VarSpace::XY { n })
    }

    /// A z-ring over `rows × cols` minus `excluded`.
    pub fn z(
        rows: &[usize],
        cols: &[usize],
        excluded: &[(usize, usize)],
    ) -> Result<Self, PolyError> {
        let mut rows = rows.to_vec();
        let mut cols = cols.to_vec();
        rows.sort_unstable();
        rows.dedup();
        cols.sort_unstable();
        cols.dedup();
        let vars: Vec<(usize, usize)> = rows
            .iter()
            .flat_map(|&j| cols.iter().map(move |&i| (j, i)))
            .filter(|p| !excluded.contains(p))
            .collect();
        if vars.len() > MAX_VARS {
            return Err(PolyError::InvalidSpace(format!(
                "z space has {} variables, limit is {MAX_VARS}",
                vars.len()
            )));
        }
        Ok(VarSpace::Z(Arc::new(ZLayout {
            rows,
            cols,
            excluded: excluded.to_vec(),
            vars,
        })))
    }

    /// Number of variables.
    pub fn nvars(&self) -> usize {
        match self {
            VarSpace::XY { n } => 2 * n,
            VarSpace::Z(l) => l.vars.len(),
        }
    }

    /// `n` for an xy space.
    pub fn xy_n(&self) -> Option<usize> {
        match self {
            VarSpace::XY { n } => Some(*n),
            VarSpace::Z(_) => None,
        }
    }

    /// The z layout, if this is a z space.
    pub fn z_layout(&self) -> Option<&ZLayout> {
        match self {
            VarSpace::Z(l) => Some(l),
            VarSpace::XY { .. } => None,
        }
    }

    /// Variable id of `x_i` (1-based `i`).
    pub fn x(&self, i: usize) -> Result<usize, PolyError> {
        match self {
            VarSpace::XY { n } if (1..=*n).contains(&i) => Ok(i - 1),
            _ => Err(PolyError::UnknownVariable(format!("x{i}"))),
        }
    }

    /// Variable id of `y_i` (1-based `i`).
    pub fn y(&self, i: usize) -> Result<usize, PolyError> {
        match self {
            VarSpace::XY { n } if (1..=*n).contains(&i) => Ok(n + i - 1),
            _ => Err(PolyError::UnknownVariable(format!("y{i}"))),
        }
    }

    /// Variable id of `z_{row,col}`.
    pub fn zvar(&self, row: usize, col: usize) -> Result<usize, PolyError> {
        self.z_layout()
            .and_then(|l| l.var_of(row, col))
            .ok_or_else(|| PolyError::UnknownVariable(format!("z{row}_{col}")))
    }

    /// Printable name of a variable id.
    pub fn var_name(&self, var: usize) -> String {
        match self {
            VarSpace::XY { n } => {
                if var < *n {
                    format!("x{}", var + 1)
                } else {
                    format!("y{}", var - n + 1)
                }
            }
            VarSpace::Z(l) => {
                let (j, i) = l.vars[var];
                format!("z{j}_{i}")
            }
        }
    }

    /// Looks up a variable by its printable name.
    pub fn var_by_name(&self, name: &str) -> Result<usize, PolyError> {
        let unknown = || PolyError::UnknownVariable(name.to_string());
        match self {
            VarSpace::XY { .. } => {
                let (head, idx) = name.split_at(1.min(name.len()));
                let i: usize = idx.parse().map_err(|_| unknown())?;
                match head {
                    "x" => self.x(i),
                    "y" => self.y(i),
                    _ => Err(unknown()),
                }
            }
            VarSpace::Z(_) => {
                let rest = name.strip_prefix('z').ok_or_else(unknown)?;
                let (j, i) = rest.split_once('_').ok_or_else(unknown)?;
                let j: usize = j.parse().map_err(|_| unknown())?;
                let i: usize = i.parse().map_err(|_| unknown())?;
                self.zvar(j, i)
            }
        }
    }

    /// Checks that `var` is a valid id in this space.
    pub fn check_var(&self, var: usize) -> Result<(), PolyError> {
        if var < self.nvars() {
            Ok(())
        } else {
            Err(PolyError::UnknownVariable(format!("#{var}")))
        }
    }
}

impl fmt::Debug for VarSpace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            VarSpace::XY { n } => write!(f, "XY(n={n})"),
            VarSpace::Z(l) => write!(f, "Z(rows={:?}, cols={:?})", l.rows, l.cols),
        }
    }
}
