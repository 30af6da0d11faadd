//! Degree-by-degree comparisons of evaluation-map kernels with minor ideals,
//! and the linear independence of the 3-chain-free families.

use serde::Serialize;

use crate::exactpoly::{kernel_of_map, linalg::rank, EchelonBasis, Poly};
use crate::oscrep::Config;

use super::chains::enumerate_gset;
use super::minors::{ideal_piece, minor_generators, MinorIdealSpec};
use super::ring::ZRing;
use super::DetError;

/// One degree of a kernel comparison.
#[derive(Clone, Debug, Serialize)]
pub struct DegreeComparison {
    pub degree: u32,
    pub domain_dim: usize,
    /// Kernel dimension of each compared map.
    pub kernel_dims: Vec<usize>,
    pub ideal_dim: usize,
    /// Two-sided span equality of every kernel with the ideal piece.
    pub equal: bool,
}

/// Outcome of a kernel-versus-ideal comparison.
#[derive(Clone, Debug, Serialize)]
pub struct KernelReport {
    pub config: Config,
    pub maps: Vec<String>,
    pub minor_size: usize,
    pub degrees: Vec<DegreeComparison>,
    pub pass: bool,
}

fn kernel_span<F>(ring: &ZRing, domain: &[Poly], map: F) -> Result<EchelonBasis, DetError>
where
    F: Fn(&Poly) -> Result<Poly, DetError>,
{
    let images: Vec<Poly> = domain.iter().map(&map).collect::<Result<_, _>>()?;
    let mut idx = 0;
    let rels = kernel_of_map(domain, |_| {
        let img = images[idx].clone();
        idx += 1;
        img
    });
    let mut basis = EchelonBasis::new(ring.space());
    for rel in rels {
        let f = rel
            .into_iter()
            .fold(Poly::zero(ring.space()), |acc, (i, c)| &acc + &domain[i].scale(&c));
        basis.insert(&f)?;
    }
    Ok(basis)
}

type ZMap = fn(&ZRing, &Poly) -> Result<Poly, DetError>;

fn compare(
    cfg: &Config,
    ring: &ZRing,
    maps: &[(&str, ZMap)],
    spec: MinorIdealSpec,
    max_degree: u32,
) -> Result<KernelReport, DetError> {
    let gens = minor_generators(ring.space(), &spec)?;
    let mut degrees = Vec::new();
    for d in 0..=max_degree {
        let domain = ring.monomials(d);
        let ideal = ideal_piece(ring.space(), &gens, d)?;
        let mut kernel_dims = Vec::new();
        let mut equal = true;
        for (_, map) in maps {
            let ker = kernel_span(ring, &domain, |p| map(ring, p))?;
            kernel_dims.push(ker.dim());
            equal &= ker.same_span(&ideal)?;
        }
        degrees.push(DegreeComparison {
            degree: d,
            domain_dim: domain.len(),
            kernel_dims,
            ideal_dim: ideal.dim(),
            equal,
        });
    }
    let pass = degrees.iter().all(|d| d.equal);
    Ok(KernelReport {
        config: *cfg,
        maps: maps.iter().map(|(name, _)| name.to_string()).collect(),
        minor_size: spec.t,
        degrees,
        pass,
    })
}

/// Checks `ker φ_x = ker φ_y = ⟨2-minors⟩` in every degree up to `max_degree`
/// on the ring in `z_{j,i}`, `j ∈ J3`, `i ∈ J1`.
pub fn verify_phi_kernels_two_minors(cfg: &Config, max_degree: u32) -> Result<KernelReport, DetError> {
    let ring = ZRing::restricted(cfg)?;
    let spec = MinorIdealSpec {
        t: 2,
        rows: ring.j3().to_vec(),
        cols: ring.j1().to_vec(),
    };
    compare(
        cfg,
        &ring,
        &[("phi_x", ZRing::phi_x as ZMap), ("phi_y", ZRing::phi_y as ZMap)],
        spec,
        max_degree,
    )
}

/// Checks `ker φ = ⟨3-minors⟩` in every degree up to `max_degree` on the
/// extended ring.
pub fn verify_phi_kernel_three_minors(cfg: &Config, max_degree: u32) -> Result<KernelReport, DetError> {
    let ring = ZRing::extended(cfg)?;
    let spec = MinorIdealSpec {
        t: 3,
        rows: ring.rows().to_vec(),
        cols: ring.cols().to_vec(),
    };
    compare(cfg, &ring, &[("phi", ZRing::phi as ZMap)], spec, max_degree)
}

/// Outcome of the independence check over all small families.
#[derive(Clone, Debug, Serialize)]
pub struct IndependenceReport {
    pub config: Config,
    pub max_total: usize,
    pub tuples_checked: usize,
    pub nonempty_sets: usize,
    pub largest_set: usize,
    pub failures: Vec<String>,
    pub pass: bool,
}

fn multisets(items: &[usize], size: usize) -> Vec<Vec<usize>> {
    if size == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for (idx, &x) in items.iter().enumerate() {
        for mut rest in multisets(&items[idx..], size - 1) {
            rest.insert(0, x);
            out.push(rest);
        }
    }
    out
}

/// For all `(k1, k2, k3)` with `k1 + k2 + k3 <= max_total` and all index
/// multisets, checks that the `φ`-images of the 3-chain-free family are
/// linearly independent.
pub fn verify_gset_independence(cfg: &Config, max_total: usize) -> Result<IndependenceReport, DetError> {
    let ring = ZRing::extended(cfg)?;
    let mut report = IndependenceReport {
        config: *cfg,
        max_total,
        tuples_checked: 0,
        nonempty_sets: 0,
        largest_set: 0,
        failures: Vec::new(),
        pass: true,
    };
    for total in 0..=max_total {
        for k1 in 0..=total {
            for k2 in 0..=total - k1 {
                let k3 = total - k1 - k2;
                for cols in multisets(ring.j1(), k1 + k3) {
                    for rows in multisets(ring.j3(), k2 + k3) {
                        let g = enumerate_gset(&ring, k1, k2, k3, &cols, &rows)?;
                        report.tuples_checked += 1;
                        if g.is_empty() {
                            continue;
                        }
                        report.nonempty_sets += 1;
                        report.largest_set = report.largest_set.max(g.len());
                        let images = g
                            .iter()
                            .map(|m| {
                                let img = ring.phi(&m.to_poly(&ring)?)?;
                                Ok(img.terms().map(|(mm, c)| (*mm, c.clone())).collect())
                            })
                            .collect::<Result<Vec<Vec<_>>, DetError>>()?;
                        if rank(&images) != g.len() {
                            report.pass = false;
                            if report.failures.len() < 5 {
                                report.failures.push(format!(
                                    "k=({k1},{k2},{k3}) I1={cols:?} I3={rows:?}"
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn cfg(j1: usize, j3: usize) -> Config {
        Config::new(j1 + j3, j1, j1, 0, 0).unwrap()
    }

    #[test]
    fn two_minor_kernels() {
        let r = verify_phi_kernels_two_minors(&cfg(2, 2), 3).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.degrees[2].kernel_dims, vec![1, 1]);
        assert_eq!(r.degrees[1].kernel_dims, vec![0, 0]);
        let r = verify_phi_kernels_two_minors(&cfg(1, 3), 3).unwrap();
        assert!(r.degrees.iter().all(|d| d.kernel_dims == vec![0, 0]));
    }

    #[test]
    fn three_minor_kernel() {
        let r = verify_phi_kernel_three_minors(&cfg(2, 2), 3).unwrap();
        assert!(r.pass, "{r:?}");
        assert_eq!(r.degrees[2].kernel_dims, vec![0]);
        assert!(r.degrees[3].kernel_dims[0] > 0);
    }

    #[test]
    fn independence_small() {
        let r = verify_gset_independence(&cfg(2, 2), 3).unwrap();
        assert!(r.pass, "{r:?}");
        assert!(r.largest_set >= 2);
    }
}
