//! The acceptance matrix: thirteen criteria, each run on pinned
//! configurations with exact comparisons.

use std::time::{Duration, Instant};

use serde::Serialize;
use serde_json::{json, Value};

use crate::annihilator::{
    compute_ip, gkdim_estimate, split_degree_one, verify_main_theorem, verify_pair_minors,
    verify_triple_minors, verify_zero_operator_case, Scope,
};
use crate::detvar::{verify_gset_independence, verify_phi_kernel_three_minors, verify_phi_kernels_two_minors};
use crate::filtration::{verify_pivot_identities, verify_prop23, FiltrationTower};
use crate::oscrep::{verify_bracket_fidelity, verify_harmonicity, verify_highest_weight, Config};
use crate::report::{CheckError, CheckRecord, Report, Verdict};

/// One acceptance criterion.
pub struct Criterion {
    pub id: u8,
    pub name: &'static str,
    pub anchor: &'static str,
    run: fn() -> Result<Verdict, CheckError>,
}

impl Criterion {
    /// Runs the criterion and records its verdict.
    pub fn record(&self) -> CheckRecord {
        CheckRecord::run(self.name, self.anchor, self.run)
    }
}

fn cfg(n: usize, n1: usize, n2: usize, l1: i64, l2: i64) -> Result<Config, CheckError> {
    Config::new(n, n1, n2, l1, l2).map_err(|e| CheckError::Failed(e.to_string()))
}

/// Collects per-configuration results into one verdict.
struct Cases {
    cases: Vec<Value>,
    pass: bool,
}

impl Cases {
    fn new() -> Self {
        Cases { cases: Vec::new(), pass: true }
    }

    fn add(&mut self, pass: bool, payload: Value) {
        self.pass &= pass;
        self.cases.push(payload);
    }

    fn verdict(self) -> Verdict {
        Verdict::new(self.pass, json!({ "cases": self.cases }))
    }
}

fn brackets() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for (n, n1, n2) in [(3, 1, 2), (4, 1, 3), (4, 2, 2), (5, 2, 3)] {
        let r = verify_bracket_fidelity(&cfg(n, n1, n2, 0, 0)?, 4)?;
        out.add(r.pass, json!({"config": [n, n1, n2], "pairs": r.pairs, "monomials": r.monomials, "failures": r.failures}));
    }
    Ok(out.verdict())
}

fn harmonicity() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for c in [cfg(3, 1, 2, -1, -1)?, cfg(4, 1, 3, -1, -1)?, cfg(4, 1, 3, -1, 1)?] {
        let r = verify_harmonicity(&c, 6)?;
        out.add(r.pass, json!({"config": c.label(), "per_level": r.per_level, "failures": r.failures}));
    }
    Ok(out.verdict())
}

fn pivot_identities() -> Result<Verdict, CheckError> {
    let r = verify_pivot_identities(&cfg(4, 1, 3, -1, -1)?, 3, 2)?;
    Ok(Verdict::new(r.pass(), &r))
}

fn towers_agree() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for (c, kmax) in [
        (cfg(3, 1, 2, -1, -1)?, 5),
        (cfg(3, 1, 2, -1, 0)?, 5),
        (cfg(4, 1, 3, -1, -1)?, 4),
        (cfg(4, 1, 3, -1, 1)?, 4),
        (cfg(3, 2, 3, 2, 1)?, 4),
        (cfg(4, 3, 4, 1, 1)?, 4),
    ] {
        let r = verify_prop23(&c, kmax)?;
        let dims: Vec<usize> = r.levels.iter().map(|l| l.dim_explicit).collect();
        out.add(r.pass, json!({"config": c.label(), "kmax": kmax, "dims": dims, "method": r.method}));
    }
    Ok(out.verdict())
}

fn two_minor_kernels() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for a in 1..=3 {
        for b in 1..=3 {
            let c = cfg(a + 1 + b, a, a + 1, -1, -1)?;
            let r = verify_phi_kernels_two_minors(&c, 4)?;
            let dims: Vec<usize> = r.degrees.iter().map(|d| d.ideal_dim).collect();
            out.add(r.pass, json!({"j1": a, "j3": b, "ideal_dims": dims}));
        }
    }
    Ok(out.verdict())
}

fn gset_independence() -> Result<Verdict, CheckError> {
    let r = verify_gset_independence(&cfg(7, 3, 4, -1, -1)?, 4)?;
    Ok(Verdict::new(r.pass, &r))
}

fn three_minor_kernels() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for a in 1..=3 {
        for b in 1..=3 {
            let c = cfg(a + 1 + b, a, a + 1, -1, -1)?;
            let r = verify_phi_kernel_three_minors(&c, 3)?;
            let dims: Vec<usize> = r.degrees.iter().map(|d| d.ideal_dim).collect();
            out.add(r.pass, json!({"j1_extended": a + 1, "j3_extended": b + 1, "ideal_dims": dims}));
        }
    }
    Ok(out.verdict())
}

fn degree_one() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for c in [cfg(3, 1, 2, -1, -1)?, cfg(4, 1, 3, -1, 1)?, cfg(3, 2, 3, 2, 1)?, cfg(6, 2, 4, -1, -1)?] {
        let tower = FiltrationTower::explicit(&c, 4)?;
        let piece = compute_ip(&tower, 1, 4, Scope::All)?;
        let split = split_degree_one(&c, &piece)?;
        out.add(split.matches_off_l && split.stabilized, json!({"config": c.label(), "split": split}));
    }
    Ok(out.verdict())
}

fn pair_minors() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    let mut non_vacuous_power = false;
    for (c, depth) in [
        (cfg(6, 2, 4, -1, -1)?, 3),
        (cfg(5, 1, 3, -1, 1)?, 3),
        (cfg(5, 1, 3, 1, -1)?, 3),
        (cfg(4, 1, 3, -1, 1)?, 3),
        (cfg(5, 2, 4, -1, 1)?, 3),
    ] {
        let tower = FiltrationTower::explicit(&c, depth)?;
        let r = verify_pair_minors(&tower, 3)?;
        non_vacuous_power |= r.powers.iter().any(|p| !p.vacuous && p.holds && p.rows_checked > 0);
        out.add(r.pass, serde_json::to_value(&r).expect("reports serialize"));
    }
    out.pass &= non_vacuous_power;
    Ok(out.verdict())
}

fn triple_minors() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    let mut strict = 0;
    for c in [cfg(6, 2, 4, -1, -1)?, cfg(7, 2, 4, -1, -1)?] {
        let r = verify_zero_operator_case(&c, 4)?;
        strict += r.strict_triples;
        out.add(r.holds && r.triples > 0, serde_json::to_value(&r).expect("reports serialize"));
    }
    let mut covered = Vec::new();
    for c in [cfg(6, 2, 4, -1, -1)?, cfg(5, 1, 4, -1, -1)?] {
        let tower = FiltrationTower::explicit(&c, 3)?;
        let r = verify_triple_minors(&tower, 3)?;
        let held = r.cases.iter().all(|m| m.check.holds);
        covered.extend(r.cases.iter().map(|m| m.case));
        out.add(held, json!({"config": c.label(), "cases": r.cases, "absent_cases": r.absent_cases}));
    }
    covered.sort_unstable();
    covered.dedup();
    let tower = FiltrationTower::explicit(&cfg(5, 2, 3, -1, -1)?, 3)?;
    let r = verify_triple_minors(&tower, 3)?;
    out.add(r.exactness.equal() && r.stabilized, json!({"config": r.config.label(), "exactness": r.exactness}));
    out.pass &= strict > 0 && covered == vec![2, 3, 4, 5, 6];
    Ok(out.verdict())
}

fn main_theorem() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for (c, kmax) in [
        (cfg(4, 2, 2, -1, -1)?, 4),
        (cfg(5, 2, 2, -1, -2)?, 4),
        (cfg(6, 2, 4, -1, -1)?, 3),
        (cfg(3, 2, 3, 2, 1)?, 4),
        (cfg(4, 3, 4, 1, 1)?, 4),
    ] {
        let r = verify_main_theorem(&c, kmax)?;
        out.add(r.pass, json!({
            "config": c.label(),
            "kmax": kmax,
            "branch": r.branch,
            "degree_one_matches": r.degree_one.matches_off_l,
            "generators": r.generators.len(),
            "pieces": r.pieces,
            "stabilized": r.stabilized,
        }));
    }
    Ok(out.verdict())
}

fn growth() -> Result<Verdict, CheckError> {
    let mut out = Cases::new();
    for c in [cfg(3, 1, 2, -1, -1)?, cfg(4, 2, 2, -1, -1)?, cfg(3, 1, 3, 2, 1)?] {
        let e = gkdim_estimate(&FiltrationTower::explicit(&c, 8)?)?;
        out.add(e.matches(), json!({"config": c.label(), "estimate": e}));
    }
    Ok(out.verdict())
}

fn highest_weight() -> Result<Verdict, CheckError> {
    let r = verify_highest_weight(&cfg(5, 1, 3, -1, -1)?, 1, 1)?;
    Ok(Verdict::new(r.pass, &r))
}

/// The criteria in declaration order.
pub fn criteria() -> Vec<Criterion> {
    vec![
        Criterion { id: 1, name: "bracket fidelity", anchor: "commutator", run: brackets },
        Criterion { id: 2, name: "harmonicity of T", anchor: "laplace-T=0", run: harmonicity },
        Criterion { id: 3, name: "pivot identities", anchor: "dual-side-identities", run: pivot_identities },
        Criterion { id: 4, name: "closure tower equals explicit tower", anchor: "M_k=V_k", run: towers_agree },
        Criterion { id: 5, name: "kernels of phi_x and phi_y", anchor: "ker-phi-x=R2", run: two_minor_kernels },
        Criterion { id: 6, name: "chain-free family independence", anchor: "G-set-rank", run: gset_independence },
        Criterion { id: 7, name: "kernel of phi", anchor: "ker-phi=R3", run: three_minor_kernels },
        Criterion { id: 8, name: "degree-one annihilator", anchor: "I1=cartan+offL", run: degree_one },
        Criterion { id: 9, name: "degree-two annihilator", anchor: "I2=pair-minors", run: pair_minors },
        Criterion { id: 10, name: "degree-three annihilator", anchor: "I3=triple-minors", run: triple_minors },
        Criterion { id: 11, name: "associated variety", anchor: "main-theorem", run: main_theorem },
        Criterion { id: 12, name: "growth degree", anchor: "gk-dimension", run: growth },
        Criterion { id: 13, name: "highest-weight vector", anchor: "highest-weight", run: highest_weight },
    ]
}

/// Runs every criterion in order. Once `budget` has elapsed the remaining
/// criteria are recorded as skipped. `progress` receives each finished
/// record.
pub fn run_suite(
    spec: impl Serialize,
    budget: Option<Duration>,
    mut progress: impl FnMut(u8, &CheckRecord),
) -> Report {
    let start = Instant::now();
    let mut report = Report::new("suite", spec);
    for c in criteria() {
        let rec = match budget {
            Some(b) if start.elapsed() >= b => CheckRecord::skipped(c.name, c.anchor, "time budget exhausted"),
            _ => c.record(),
        };
        progress(c.id, &rec);
        report.push(rec);
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn criteria_are_numbered_in_order() {
        let ids: Vec<u8> = criteria().iter().map(|c| c.id).collect();
        assert_eq!(ids, (1..=13).collect::<Vec<_>>());
    }

    #[test]
    fn zero_budget_skips_everything() {
        let r = run_suite((), Some(Duration::ZERO), |_, _| {});
        assert_eq!(r.checks.len(), 13);
        assert!(r.passed());
        assert!(r.checks.iter().all(|c| c.status == crate::report::Status::Skipped));
    }

    #[test]
    fn highest_weight_criterion_passes() {
        let rec = criteria()[12].record();
        assert_eq!(rec.status, crate::report::Status::Pass);
    }
}
