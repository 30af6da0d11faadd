//! Randomized invariants across the polynomial, representation, filtration
//! and determinantal layers.

use num_traits::{One, Zero};
use proptest::prelude::*;

use oscvar::detvar::{has_3chain, has_3chain_bruteforce, ZRing};
use oscvar::exactpoly::{qf, EchelonBasis, Monomial, Poly, VarSpace, Q};
use oscvar::filtration::verify_order_bound;
use oscvar::oscrep::{
    apply_generator, apply_unit, dfun_monomial, generators, gl_operator, graded_key, laplace,
    pivot_free, project_t, project_t_poly, Block, Config, Generator,
};

const XY_VARS: usize = 4;

fn xy_space() -> VarSpace {
    VarSpace::xy(XY_VARS / 2).unwrap()
}

fn poly_from(space: &VarSpace, terms: &[(Vec<u32>, i64, i64)]) -> Poly {
    Poly::from_terms(
        space,
        terms
            .iter()
            .map(|(e, num, den)| (Monomial::from_exponents(e), qf(*num, *den))),
    )
}

fn term_strategy(nvars: usize, max_exp: u32) -> impl Strategy<Value = (Vec<u32>, i64, i64)> {
    (prop::collection::vec(0..=max_exp, nvars), -5i64..=5, 1i64..=3)
}

fn terms_strategy(nvars: usize, max_exp: u32) -> impl Strategy<Value = Vec<(Vec<u32>, i64, i64)>> {
    prop::collection::vec(term_strategy(nvars, max_exp), 0..5)
}

/// Rank of a family of polynomials by plain dense Gaussian elimination.
fn dense_rank(polys: &[Poly]) -> usize {
    let mut cols: Vec<Monomial> = polys.iter().flat_map(|p| p.monomials().copied()).collect();
    cols.sort();
    cols.dedup();
    let mut rows: Vec<Vec<Q>> = polys
        .iter()
        .map(|p| cols.iter().map(|m| p.coeff(m)).collect())
        .collect();
    let mut rank = 0;
    for c in 0..cols.len() {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let lead = rows[rank][c].clone();
        for r in 0..rows.len() {
            if r != rank && !rows[r][c].is_zero() {
                let factor = rows[r][c].clone() / lead.clone();
                for cc in c..cols.len() {
                    let delta = rows[rank][cc].clone() * factor.clone();
                    rows[r][cc] -= delta;
                }
            }
        }
        rank += 1;
    }
    rank
}

fn configs() -> Vec<Config> {
    [
        (3, 1, 2, 0, 0),
        (3, 1, 2, -1, 1),
        (4, 1, 3, -1, -1),
        (4, 2, 3, 1, -1),
        (5, 2, 4, 0, 1),
        (4, 2, 2, -1, -1),
    ]
    .into_iter()
    .map(|(n, n1, n2, l1, l2)| Config::new(n, n1, n2, l1, l2).unwrap())
    .collect()
}

fn pivot_configs() -> Vec<Config> {
    configs().into_iter().filter(|c| c.pivot().is_some()).collect()
}

/// A monomial of `cfg`'s space from raw exponents capped at `cap` in total.
fn monomial_of(cfg: &Config, raw: &[u32], cap: u32) -> Monomial {
    let mut m = Monomial::ONE;
    let mut total = 0;
    for (v, &e) in raw.iter().enumerate().take(2 * cfg.n) {
        let e = e.min(cap - total);
        m = m.with_exp(v, e);
        total += e;
    }
    m
}

fn kill_pivot(cfg: &Config, m: Monomial) -> Monomial {
    match cfg.pivot() {
        Some(c) if !pivot_free(cfg, &m) => m.with_exp(cfg.yv(c), 0),
        _ => m,
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn ring_laws(a in terms_strategy(XY_VARS, 3), b in terms_strategy(XY_VARS, 3), c in terms_strategy(XY_VARS, 2)) {
        let s = xy_space();
        let (p, q, r) = (poly_from(&s, &a), poly_from(&s, &b), poly_from(&s, &c));
        prop_assert_eq!(&p + &q, &q + &p);
        prop_assert_eq!(&p * &q, &q * &p);
        prop_assert_eq!(&(&p * &q) * &r, &p * &(&q * &r));
        prop_assert_eq!(&p * &(&q + &r), &(&p * &q) + &(&p * &r));
        prop_assert!((&p - &p).is_zero());
    }

    #[test]
    fn partial_derivatives_commute(a in terms_strategy(XY_VARS, 4)) {
        let p = poly_from(&xy_space(), &a);
        for u in 0..XY_VARS {
            for v in 0..XY_VARS {
                let uv = p.diff(u).unwrap().diff(v).unwrap();
                let vu = p.diff(v).unwrap().diff(u).unwrap();
                prop_assert_eq!(uv, vu);
            }
        }
    }

    #[test]
    fn echelon_rows_ignore_insertion_order(
        family in prop::collection::vec(terms_strategy(XY_VARS, 2), 1..7),
        order in any::<u64>(),
    ) {
        let s = xy_space();
        let polys: Vec<Poly> = family.iter().map(|t| poly_from(&s, t)).collect();
        let mut shuffled = polys.clone();
        let len = shuffled.len();
        for i in (1..len).rev() {
            shuffled.swap(i, (order as usize).wrapping_mul(i + 7) % (i + 1));
        }
        let a = EchelonBasis::from_polys(&s, polys.iter()).unwrap();
        let b = EchelonBasis::from_polys(&s, shuffled.iter()).unwrap();
        prop_assert_eq!(a.rows(), b.rows());
    }

    #[test]
    fn span_membership_matches_dense_rank(
        family in prop::collection::vec(terms_strategy(XY_VARS, 1), 0..6),
        mix in prop::collection::vec(-2i64..=2, 6),
        noise in terms_strategy(XY_VARS, 1),
        use_noise in any::<bool>(),
    ) {
        let s = xy_space();
        let polys: Vec<Poly> = family.iter().map(|t| poly_from(&s, t)).collect();
        let mut target = Poly::zero(&s);
        for (p, c) in polys.iter().zip(&mix) {
            target = &target + &p.scale(&qf(*c, 1));
        }
        if use_noise {
            target = &target + &poly_from(&s, &noise);
        }
        let basis = EchelonBasis::from_polys(&s, polys.iter()).unwrap();
        let mut extended = polys.clone();
        extended.push(target.clone());
        let expected = dense_rank(&extended) == dense_rank(&polys);
        prop_assert_eq!(basis.reduce(&target).unwrap().is_zero(), expected);
        prop_assert_eq!(basis.dim(), dense_rank(&polys));
    }

    #[test]
    fn bracket_fidelity(cfg_idx in 0usize..6, gi in 0usize..64, hi in 0usize..64, raw in prop::collection::vec(0u32..3, 10)) {
        let cfg = configs()[cfg_idx];
        let gens = generators(cfg.n);
        let (g, h) = (gens[gi % gens.len()], gens[hi % gens.len()]);
        let f = Poly::monomial(&cfg.space(), monomial_of(&cfg, &raw, 5));
        let gh = apply_generator(&cfg, g, &apply_generator(&cfg, h, &f).unwrap()).unwrap();
        let hg = apply_generator(&cfg, h, &apply_generator(&cfg, g, &f).unwrap()).unwrap();
        let bracket = gl_operator(&cfg, &g.as_gl().bracket(&h.as_gl())).unwrap().apply(&f);
        prop_assert_eq!(&gh - &hg, bracket);
    }

    #[test]
    fn generators_preserve_the_grading(cfg_idx in 0usize..6, gi in 0usize..64, raw in prop::collection::vec(0u32..3, 10)) {
        let cfg = configs()[cfg_idx];
        let gens = generators(cfg.n);
        let m = monomial_of(&cfg, &raw, 6);
        let key = graded_key(&cfg, &m);
        let image = apply_generator(&cfg, gens[gi % gens.len()], &Poly::monomial(&cfg.space(), m)).unwrap();
        for t in image.monomials() {
            prop_assert_eq!(graded_key(&cfg, t), key);
        }
    }

    #[test]
    fn degree_increments_are_bounded(cfg_idx in 0usize..6, gi in 0usize..64, raw in prop::collection::vec(0u32..3, 10)) {
        let base = configs()[cfg_idx];
        let m = monomial_of(&base, &raw, 5);
        let key = graded_key(&base, &m);
        let cfg = base.with_degree(key.l1, key.l2);
        let gens = generators(cfg.n);
        let g = gens[gi % gens.len()];
        let bound = match g {
            Generator::Root(i, j) if cfg.block(i) == Block::J3 && cfg.block(j) == Block::J1 => 2,
            Generator::Root(i, j) if cfg.in_l(i, j) => 1,
            _ => 0,
        };
        let image = apply_generator(&cfg, g, &Poly::monomial(&cfg.space(), m)).unwrap();
        let before = dfun_monomial(&cfg, &m);
        for t in image.monomials() {
            prop_assert!(dfun_monomial(&cfg, t) <= before + bound, "{g} on {m:?}");
        }
    }

    #[test]
    fn projection_is_harmonic_and_keeps_the_degree(cfg_idx in 0usize..5, raw in prop::collection::vec(0u32..3, 10)) {
        let pcfgs = pivot_configs();
        let base = pcfgs[cfg_idx % pcfgs.len()];
        let m = kill_pivot(&base, monomial_of(&base, &raw, 6));
        let key = graded_key(&base, &m);
        let cfg = base.with_degree(key.l1, key.l2);
        let t = project_t(&cfg, &m).unwrap();
        prop_assert!(laplace(&cfg, &t).unwrap().is_zero());
        let top = t.monomials().map(|x| dfun_monomial(&cfg, x)).max().unwrap();
        prop_assert_eq!(top, dfun_monomial(&cfg, &m));
    }

    #[test]
    fn projection_commutes_with_pivot_free_units(
        cfg_idx in 0usize..5,
        i in 1usize..6,
        j in 1usize..6,
        raw in prop::collection::vec(0u32..3, 10),
    ) {
        let pcfgs = pivot_configs();
        let cfg = pcfgs[cfg_idx % pcfgs.len()];
        let c = cfg.pivot().unwrap();
        let (i, j) = ((i - 1) % cfg.n + 1, (j - 1) % cfg.n + 1);
        prop_assume!(i != c && j != c);
        let m = kill_pivot(&cfg, monomial_of(&cfg, &raw, 5));
        let f = Poly::monomial(&cfg.space(), m);
        let lhs = project_t_poly(&cfg, &apply_unit(&cfg, i, j, &f).unwrap()).unwrap();
        let rhs = apply_unit(&cfg, i, j, &project_t(&cfg, &m).unwrap()).unwrap();
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn phi_maps_are_ring_homomorphisms(a in terms_strategy(4, 2), b in terms_strategy(4, 2), ea in terms_strategy(9, 1), eb in terms_strategy(9, 1)) {
        let cfg = Config::new(4, 2, 2, -1, -1).unwrap();
        let restricted = ZRing::restricted(&cfg).unwrap();
        let (p, q) = (poly_from(restricted.space(), &a), poly_from(restricted.space(), &b));
        let pq = &p * &q;
        prop_assert_eq!(restricted.phi(&pq).unwrap(), &restricted.phi(&p).unwrap() * &restricted.phi(&q).unwrap());
        prop_assert_eq!(restricted.phi_x(&pq).unwrap(), &restricted.phi_x(&p).unwrap() * &restricted.phi_x(&q).unwrap());
        prop_assert_eq!(restricted.phi_y(&pq).unwrap(), &restricted.phi_y(&p).unwrap() * &restricted.phi_y(&q).unwrap());
        let extended = ZRing::extended(&cfg).unwrap();
        prop_assert_eq!(extended.space().nvars(), 8);
        let trim = |t: &[(Vec<u32>, i64, i64)]| -> Vec<(Vec<u32>, i64, i64)> {
            t.iter().map(|(e, n, d)| (e[..8].to_vec(), *n, *d)).collect()
        };
        let (p, q) = (poly_from(extended.space(), &trim(&ea)), poly_from(extended.space(), &trim(&eb)));
        prop_assert_eq!(extended.phi(&(&p * &q)).unwrap(), &extended.phi(&p).unwrap() * &extended.phi(&q).unwrap());
        let one = Poly::one(extended.space());
        prop_assert!(extended.phi(&one).unwrap().coeff(&Monomial::ONE).is_one());
    }

    #[test]
    fn chain_detection_matches_brute_force(pairs in prop::collection::vec((1usize..5, 1usize..5), 0..=10)) {
        prop_assert_eq!(has_3chain(&pairs), has_3chain_bruteforce(&pairs));
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(8))]

    #[test]
    fn degree_bound_on_sampled_level_elements(cfg_idx in 0usize..3, k in 1usize..3, seed in any::<u64>()) {
        let (n, n1, n2, l1, l2) = [(3, 1, 2, 0, 0), (4, 1, 3, -1, -1), (4, 2, 3, 1, -1)][cfg_idx];
        let cfg = Config::new(n, n1, n2, l1, l2).unwrap();
        let report = verify_order_bound(&cfg, k, 100, seed).unwrap();
        prop_assert!(report.pass(), "{report:?}");
    }
}
