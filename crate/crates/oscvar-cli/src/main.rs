//! Batch front end: runs one verification command on one configuration and
//! prints a report.

use std::process::ExitCode;
use std::time::Duration;

use clap::{Parser, Subcommand, ValueEnum};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;
use serde_json::json;

use oscvar::annihilator::{
    compute_ip_with_progress, gkdim_estimate, split_degree_one, verify_main_theorem,
    verify_pair_minors, verify_triple_minors, Scope,
};
use oscvar::detvar::{
    has_3chain, has_3chain_bruteforce, verify_gset_independence, verify_phi_kernel_three_minors,
    verify_phi_kernels_two_minors,
};
use oscvar::filtration::{
    build_m0, check_dprime_increments, check_g_stability, check_nesting, hilbert_sequence,
    irreducibility_warning, verify_order_bound, verify_pivot_identities, verify_prop23,
    FiltrationTower, Regime,
};
use oscvar::oscrep::{classify_irreducible, enumerate_tn_level, laplace, project_t, Config};
use oscvar::report::{CheckError, CheckRecord, Report, Verdict};
use oscvar::suite::run_suite;

const EXIT_FAIL: u8 = 1;
const EXIT_USAGE: u8 = 2;

#[derive(Parser, Debug)]
#[command(name = "oscvar", version, about = "Exact verification of oscillator-module filtrations and annihilators")]
struct Cli {
    #[command(subcommand)]
    command: Command,
    #[command(flatten)]
    opts: Opts,
}

#[derive(Subcommand, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
enum Command {
    /// Basis of the generating space M_0.
    Basis,
    /// Harmonic projections of the pivot-free monomials up to level kmax.
    Project,
    /// Dimensions of the filtration levels.
    Filtration,
    /// Closure tower against explicit spans, nesting, stability and identities.
    VerifyFiltration,
    /// Kernels of the evaluation maps against minor ideals.
    KernelPhi,
    /// Fast 3-chain detection against brute force on seeded random inputs.
    Chain3,
    /// Independence of the chain-free families.
    Independence,
    /// Annihilator pieces of degree one to three.
    Annihilator,
    /// The associated-variety description at the checked degrees.
    VerifyMainTheorem,
    /// Growth degree of the filtration.
    Gkdim,
    /// Irreducibility and regime of the configuration.
    Classify,
    /// The full acceptance matrix.
    Suite,
}

impl Command {
    fn name(self) -> String {
        serde_json::to_value(self)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }

    fn tabular(self) -> bool {
        matches!(self, Command::Filtration | Command::Gkdim)
    }
}

#[derive(ValueEnum, Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
enum OutFormat {
    Json,
    Csv,
    Text,
}

#[derive(clap::Args, Debug, Clone, Serialize)]
struct Opts {
    /// Matrix size of sl(n).
    #[arg(long, global = true)]
    n: Option<usize>,
    /// Last index of the first block.
    #[arg(long, global = true)]
    n1: Option<usize>,
    /// Last index of the second block.
    #[arg(long, global = true)]
    n2: Option<usize>,
    /// First component of the bidegree.
    #[arg(long, global = true, allow_hyphen_values = true)]
    l1: Option<i64>,
    /// Second component of the bidegree.
    #[arg(long, global = true, allow_hyphen_values = true)]
    l2: Option<i64>,
    /// Deepest filtration level to build.
    #[arg(long, global = true, default_value_t = 4)]
    kmax: usize,
    /// Highest polynomial degree for degree-bounded checks.
    #[arg(long, global = true, default_value_t = 4)]
    max_degree: u32,
    /// Seed for sampled checks.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = OutFormat::Json)]
    out: OutFormat,
    /// Skip remaining suite criteria once this many seconds have elapsed.
    #[arg(long, global = true)]
    budget_seconds: Option<u64>,
    /// Include elapsed times in the report.
    #[arg(long, global = true)]
    #[serde(skip)]
    timings: bool,
}

impl Opts {
    fn config(&self) -> Result<Config, String> {
        let (Some(n), Some(n1), Some(n2), Some(l1), Some(l2)) = (self.n, self.n1, self.n2, self.l1, self.l2) else {
            return Err("this command needs --n, --n1, --n2, --l1 and --l2".to_string());
        };
        Config::new(n, n1, n2, l1, l2).map_err(|e| e.to_string())
    }
}

#[derive(Serialize)]
struct RunSpec<'a> {
    command: String,
    #[serde(flatten)]
    opts: &'a Opts,
}

fn usage_error(msg: &str) -> ExitCode {
    eprintln!("error: {msg}");
    ExitCode::from(EXIT_USAGE)
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(c) => c,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            return ExitCode::from(code);
        }
    };
    let cmd = cli.command;
    if cli.opts.out == OutFormat::Csv && !cmd.tabular() {
        return usage_error(&format!("csv output is only available for filtration and gkdim, not {}", cmd.name()));
    }
    let spec = RunSpec { command: cmd.name(), opts: &cli.opts };
    let (report, table) = if cmd == Command::Suite {
        let budget = cli.opts.budget_seconds.map(Duration::from_secs);
        let report = run_suite(&spec, budget, |id, rec| {
            eprintln!("criterion {id}: {} {}", rec.name, rec.status);
        });
        (report, None)
    } else {
        let cfg = match cli.opts.config() {
            Ok(c) => c,
            Err(msg) => return usage_error(&msg),
        };
        let mut report = Report::new(&cmd.name(), &spec);
        let table = run_command(cmd, &cfg, &cli.opts, &mut report);
        (report, table)
    };
    let text = match cli.opts.out {
        OutFormat::Json => report.to_json(cli.opts.timings),
        OutFormat::Text => report.to_text(cli.opts.timings),
        OutFormat::Csv => match table.map(|dims| dims_csv(&dims)) {
            Some(Ok(csv)) => csv,
            Some(Err(e)) => {
                eprintln!("error: {e}");
                return ExitCode::from(EXIT_FAIL);
            }
            None => {
                eprint!("{}", report.to_text(cli.opts.timings));
                return ExitCode::from(EXIT_FAIL);
            }
        },
    };
    print!("{text}");
    if report.passed() {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(EXIT_FAIL)
    }
}

/// The filtration table `k, dim M_k, dim M_k - dim M_{k-1}`.
fn dims_csv(dims: &[usize]) -> Result<String, Box<dyn std::error::Error>> {
    let mut w = csv::Writer::from_writer(Vec::new());
    w.write_record(["k", "dim_Mk", "delta"])?;
    let mut prev = 0;
    for (k, &d) in dims.iter().enumerate() {
        w.write_record([k.to_string(), d.to_string(), (d - prev).to_string()])?;
        prev = d;
    }
    Ok(String::from_utf8(w.into_inner()?)?)
}

fn tower(cfg: &Config, depth: usize) -> Result<FiltrationTower, CheckError> {
    Ok(FiltrationTower::explicit(cfg, depth)?)
}

/// Runs one command, pushing its records; returns the dimension table for
/// tabular commands.
fn run_command(cmd: Command, cfg: &Config, opts: &Opts, report: &mut Report) -> Option<Vec<usize>> {
    let mut table = None;
    match cmd {
        Command::Basis => report.push(CheckRecord::run("generating space", "M_0", || {
            let basis = build_m0(cfg)?;
            let rows: Vec<String> = basis.sources().iter().map(|p| p.render()).collect();
            Ok(Verdict::new(true, json!({"dim": basis.dim(), "basis": rows})))
        })),
        Command::Project => report.push(CheckRecord::run("harmonic projections", "laplace-T=0", || {
            let space = cfg.space();
            let mut levels = Vec::new();
            let mut pass = true;
            for k in 0..=opts.kmax {
                let mut rows = Vec::new();
                for m in enumerate_tn_level(cfg, k as i64)? {
                    let t = project_t(cfg, &m)?;
                    pass &= laplace(cfg, &t)?.is_zero();
                    rows.push(json!({"monomial": oscvar::exactpoly::Poly::monomial(&space, m).render(), "projection": t.render()}));
                }
                levels.push(json!({"level": k, "projections": rows}));
            }
            Ok(Verdict::new(pass, json!({"levels": levels})))
        })),
        Command::Filtration => {
            let mut dims = None;
            report.push(CheckRecord::run("filtration dimensions", "M_k=U_k(g)M_0", || {
                let t = tower(cfg, opts.kmax)?;
                dims = Some(t.dims().to_vec());
                Ok(Verdict::new(true, json!({
                    "method": t.method(),
                    "dims": t.dims(),
                    "hilbert": hilbert_sequence(&t),
                    "warnings": t.warnings(),
                })))
            }));
            table = dims;
        }
        Command::VerifyFiltration => verify_filtration(cfg, opts, report),
        Command::KernelPhi => {
            report.push(CheckRecord::run("kernels of phi_x, phi_y", "ker-phi-x=R2", || {
                let r = verify_phi_kernels_two_minors(cfg, opts.max_degree)?;
                Ok(Verdict::new(r.pass, &r))
            }));
            report.push(CheckRecord::run("kernel of phi", "ker-phi=R3", || {
                let r = verify_phi_kernel_three_minors(cfg, opts.max_degree.min(3))?;
                Ok(Verdict::new(r.pass, &r))
            }));
        }
        Command::Chain3 => report.push(CheckRecord::run("3-chain detection", "3-chain", || {
            Ok(chain_samples(opts.n.unwrap_or(4).max(2), opts.max_degree as usize, opts.seed))
        })),
        Command::Independence => report.push(CheckRecord::run("chain-free independence", "G-set-rank", || {
            let r = verify_gset_independence(cfg, opts.max_degree as usize)?;
            Ok(Verdict::new(r.pass, &r))
        })),
        Command::Annihilator => annihilator(cfg, opts, report),
        Command::VerifyMainTheorem => report.push(CheckRecord::run("associated variety", "main-theorem", || {
            let r = verify_main_theorem(cfg, opts.kmax)?;
            Ok(Verdict::new(r.pass, &r))
        })),
        Command::Gkdim => {
            let mut dims = None;
            report.push(CheckRecord::run("growth degree", "gk-dimension", || {
                let e = gkdim_estimate(&tower(cfg, opts.kmax)?)?;
                dims = Some(e.dims.clone());
                Ok(Verdict::new(e.matches(), &e))
            }));
            table = dims;
        }
        Command::Classify => report.push(CheckRecord::run("classification", "irreducibility", || {
            let regime = Regime::detect(cfg).ok();
            Ok(Verdict::new(true, json!({
                "irreducible": classify_irreducible(cfg),
                "regime": regime,
                "warning": irreducibility_warning(cfg),
            })))
        })),
        Command::Suite => unreachable!("the suite is dispatched separately"),
    }
    table
}

fn verify_filtration(cfg: &Config, opts: &Opts, report: &mut Report) {
    report.push(CheckRecord::run("closure tower equals explicit tower", "M_k=V_k", || {
        let r = verify_prop23(cfg, opts.kmax)?;
        Ok(Verdict::new(r.pass, &r))
    }));
    let built = tower(cfg, opts.kmax);
    report.push(CheckRecord::run("levels are nested", "M_k-nested", || {
        let t = built.as_ref().map_err(Clone::clone)?;
        Ok(Verdict::new(check_nesting(t)?, json!({"dims": t.dims()})))
    }));
    report.push(CheckRecord::run("generators raise levels by one", "g.M_k<=M_k+1", || {
        Ok(Verdict::new(check_g_stability(built.as_ref().map_err(Clone::clone)?)?, json!({})))
    }));
    let positive_top = Regime::detect(cfg).ok() == Some(Regime::PositiveTop);
    if positive_top {
        report.push(CheckRecord::run("adjusted degree increments", "d'-increments", || {
            Ok(Verdict::new(check_dprime_increments(built.as_ref().map_err(Clone::clone)?)?, json!({})))
        }));
        report.push(CheckRecord::skipped("pivot identities", "dual-side-identities", "the identities concern the mixed-sign spans"));
        report.push(CheckRecord::skipped("order bound", "p-order", "the order is defined on the mixed-sign spans"));
    } else {
        report.push(CheckRecord::skipped("adjusted degree increments", "d'-increments", "only defined for l1, l2 > 0 with n2 = n"));
        report.push(CheckRecord::run("pivot identities", "dual-side-identities", || {
            let r = verify_pivot_identities(cfg, opts.kmax.min(3), 2)?;
            Ok(Verdict::new(r.pass(), &r))
        }));
        report.push(CheckRecord::run("order bound", "p-order", || {
            let r = verify_order_bound(cfg, opts.kmax.min(3), 50, opts.seed)?;
            Ok(Verdict::new(r.pass(), &r))
        }));
    }
}

fn annihilator(cfg: &Config, opts: &Opts, report: &mut Report) {
    let built = tower(cfg, opts.kmax);
    report.push(CheckRecord::run("degree-one annihilator", "I1=cartan+offL", || {
        let t = built.as_ref().map_err(Clone::clone)?;
        let piece = compute_ip_with_progress(t, 1, opts.kmax, Scope::All, &mut |k, rows| {
            eprintln!("degree 1: level {k}, {rows} rows")
        })?;
        let split = split_degree_one(cfg, &piece)?;
        Ok(Verdict::new(split.matches_off_l && split.stabilized, &split))
    }));
    report.push(CheckRecord::run("degree-two annihilator", "I2=pair-minors", || {
        let r = verify_pair_minors(built.as_ref().map_err(Clone::clone)?, opts.kmax)?;
        Ok(Verdict::new(r.pass, &r))
    }));
    report.push(CheckRecord::run("degree-three annihilator", "I3=triple-minors", || {
        let r = verify_triple_minors(built.as_ref().map_err(Clone::clone)?, opts.kmax)?;
        Ok(Verdict::new(r.pass, &r))
    }));
}

/// Compares fast and brute-force 3-chain detection on seeded random
/// multisets of index pairs in `1..=n`.
fn chain_samples(n: usize, max_len: usize, seed: u64) -> Verdict {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let samples = 200;
    let mut with_chain = 0;
    let mut mismatches = Vec::new();
    for _ in 0..samples {
        let len = rng.gen_range(0..=max_len.max(3));
        let pairs: Vec<(usize, usize)> = (0..len).map(|_| (rng.gen_range(1..=n), rng.gen_range(1..=n))).collect();
        let fast = has_3chain(&pairs);
        with_chain += usize::from(fast);
        if fast != has_3chain_bruteforce(&pairs) && mismatches.len() < 5 {
            mismatches.push(format!("{pairs:?}"));
        }
    }
    Verdict::new(
        mismatches.is_empty(),
        json!({"samples": samples, "with_chain": with_chain, "mismatches": mismatches}),
    )
}
