//! Growth-rate estimates for the Gelfand-Kirillov dimension.

use serde::Serialize;

use crate::filtration::FiltrationTower;
use crate::oscrep::Config;

use super::AnnihilatorError;

/// Minimum tower depth accepted by [`gkdim_estimate`].
pub const MIN_GKDIM_DEPTH: usize = 6;

/// Estimated growth degree of `k ↦ dim M_k`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GkEstimate {
    pub dims: Vec<usize>,
    /// Least `d` whose `(d+1)`-st difference ends in zeros, if any.
    pub degree: Option<usize>,
    /// Number of trailing zeros of that difference.
    pub trailing_zeros: usize,
    /// At least two trailing zeros were observed.
    pub confident: bool,
    /// The closed-form value for the configuration.
    pub expected: usize,
}

impl GkEstimate {
    /// Whether the estimate is confident and equals the closed form.
    pub fn matches(&self) -> bool {
        self.confident && self.degree == Some(self.expected)
    }
}

/// The closed-form dimension of the associated variety.
pub fn expected_gkdim(cfg: &Config) -> usize {
    let (n, n1, n2) = (cfg.n, cfg.n1, cfg.n2);
    if (n1 == 1 && n2 == 1) || (n1 == n2 && n2 + 1 == n) || (n1 != n2 && n2 == n) {
        n - 1
    } else if n1 == n2 {
        2 * n - 4
    } else {
        2 * n - 3
    }
}

fn difference(seq: &[i128]) -> Vec<i128> {
    seq.windows(2).map(|w| w[1] - w[0]).collect()
}

/// Estimates the growth degree of the dimensions of `M_0 ⊆ … ⊆ M_depth`:
/// the least `d` such that the `(d+1)`-st finite difference of the
/// dimension sequence ends in zeros.
pub fn gkdim_estimate(tower: &FiltrationTower) -> Result<GkEstimate, AnnihilatorError> {
    if tower.depth() < MIN_GKDIM_DEPTH {
        return Err(AnnihilatorError::Precondition(format!(
            "growth estimate needs depth at least {MIN_GKDIM_DEPTH}, got {}",
            tower.depth()
        )));
    }
    let dims = tower.dims().to_vec();
    let mut diff: Vec<i128> = dims.iter().map(|&d| d as i128).collect();
    let mut found = None;
    for d in 0..dims.len() {
        diff = difference(&diff);
        let zeros = diff.iter().rev().take_while(|&&v| v == 0).count();
        if zeros > 0 {
            found = Some((d, zeros));
            break;
        }
    }
    Ok(GkEstimate {
        degree: found.map(|(d, _)| d),
        trailing_zeros: found.map_or(0, |(_, z)| z),
        confident: found.is_some_and(|(_, z)| z >= 2),
        expected: expected_gkdim(tower.config()),
        dims,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Config {
        Config::new(n, n1, n2, l1, l2).unwrap()
    }

    #[test]
    fn closed_form_cases() {
        assert_eq!(expected_gkdim(&cfg(3, 1, 2, -1, -1)), 3);
        assert_eq!(expected_gkdim(&cfg(5, 2, 2, -1, -1)), 6);
        assert_eq!(expected_gkdim(&cfg(4, 1, 1, -1, -1)), 3);
        assert_eq!(expected_gkdim(&cfg(4, 3, 3, -1, -1)), 3);
        assert_eq!(expected_gkdim(&cfg(3, 1, 3, 2, 1)), 2);
    }

    #[test]
    fn cubic_growth_on_the_smallest_mixed_config() {
        let t = FiltrationTower::explicit(&cfg(3, 1, 2, -1, -1), 6).unwrap();
        let e = gkdim_estimate(&t).unwrap();
        assert_eq!(e.dims, vec![1, 4, 10, 20, 35, 56, 84]);
        assert_eq!(e.degree, Some(3));
        assert_eq!(e.trailing_zeros, 3);
        assert!(e.matches());
    }

    #[test]
    fn shallow_towers_are_rejected() {
        let t = FiltrationTower::explicit(&cfg(3, 1, 2, -1, -1), 5).unwrap();
        assert!(gkdim_estimate(&t).is_err());
    }
}
