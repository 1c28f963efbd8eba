use std::io::Write;
use std::path::{Path, PathBuf};

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand, ValueEnum};
use specht_core::partition::{hook_data, p_core_weight};
use specht_core::reps::{
    generic_jordan_type, signed_perm_rep, specht_rep, Backend, Limits, SamplingConfig,
};
use specht_core::{specht_dimension, Partition};
use specht_verify::{replay, run, CaseResult, Check, Config, Report};

#[derive(Parser)]
#[command(
    name = "specht",
    version,
    about = "Generic Jordan types of Specht and signed permutation modules on elementary abelian subgroups"
)]
struct Cli {
    #[command(subcommand)]
    command: Commands,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
enum ModuleArg {
    Specht,
    Signed,
}

#[derive(Args, Clone, Debug)]
struct SamplingArgs {
    /// Number of random points.
    #[arg(long)]
    samples: Option<usize>,
    /// Extension degree of the sampling field.
    #[arg(long)]
    ext: Option<usize>,
    #[arg(long)]
    seed: Option<u64>,
    /// ambient, straight, wedge or auto.
    #[arg(long)]
    backend: Option<Backend>,
    #[arg(long)]
    max_tabloids: Option<u128>,
    #[arg(long)]
    max_specht_dim: Option<u128>,
}

impl SamplingArgs {
    fn apply(&self, sampling: &mut SamplingConfig, limits: &mut Limits, backend: &mut Backend) {
        if let Some(x) = self.samples {
            sampling.samples = x;
        }
        if let Some(x) = self.ext {
            sampling.ext = x;
        }
        if let Some(x) = self.seed {
            sampling.seed = x;
        }
        if let Some(x) = self.backend {
            *backend = x;
        }
        if let Some(x) = self.max_tabloids {
            limits.max_tabloids = x;
        }
        if let Some(x) = self.max_specht_dim {
            limits.max_specht_dim = x;
        }
    }
}

#[derive(Subcommand)]
enum Commands {
    /// p-core and p-weight of a partition.
    Core {
        mu: Partition,
        #[arg(short)]
        p: usize,
    },
    /// Dimension of a Specht module.
    Dim { mu: Partition },
    /// Sampled generic Jordan type of one module.
    Jordan {
        #[arg(long, value_enum, default_value = "specht")]
        module: ModuleArg,
        #[arg(long)]
        mu: Option<Partition>,
        #[arg(long)]
        alpha: Option<Partition>,
        #[arg(long)]
        beta: Option<Partition>,
        #[arg(short)]
        p: u32,
        #[arg(short)]
        s: usize,
        #[command(flatten)]
        sampling: SamplingArgs,
        /// Print the full report as JSON.
        #[arg(long)]
        json: bool,
    },
    /// Run verification campaigns.
    Verify {
        /// A check name, or `all`.
        check: String,
        #[arg(long)]
        config: Option<PathBuf>,
        /// Write the JSON report here (`-` for stdout).
        #[arg(long)]
        json: Option<PathBuf>,
        /// Record per-case wall time in the report.
        #[arg(long)]
        timings: bool,
        /// Comma-separated primes for every campaign.
        #[arg(long, value_delimiter = ',')]
        primes: Option<Vec<usize>>,
        #[arg(long)]
        n_min: Option<usize>,
        #[arg(long)]
        n_max: Option<usize>,
        /// Add this many spurious blocks to every prediction.
        #[arg(long)]
        perturb: Option<usize>,
        #[command(flatten)]
        sampling: SamplingArgs,
    },
    /// Rerun a recorded report or a single recorded case.
    Replay { witness: PathBuf },
}

fn main() {
    let cli = Cli::parse();
    let code = match dispatch(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            2
        }
    };
    std::process::exit(code);
}

fn dispatch(command: Commands) -> Result<i32> {
    match command {
        Commands::Core { mu, p } => {
            if p < 2 {
                bail!("p must be a prime");
            }
            let cw = p_core_weight(&mu, p);
            println!("core: ({})", cw.core);
            println!("weight: {}", cw.weight);
            if let Ok(h) = hook_data(&mu, p) {
                println!(
                    "hook: a={} b={} d={} r={} u={} a0={} v={} b0={}",
                    h.a, h.b, h.d, h.r, h.u, h.a0, h.v, h.b0
                );
            }
            Ok(0)
        }
        Commands::Dim { mu } => {
            println!("{}", specht_dimension(&mu));
            Ok(0)
        }
        Commands::Jordan {
            module,
            mu,
            alpha,
            beta,
            p,
            s,
            sampling,
            json,
        } => {
            let mut cfg = SamplingConfig::default();
            let mut limits = Limits::default();
            let mut backend = Backend::Auto;
            sampling.apply(&mut cfg, &mut limits, &mut backend);
            let rep = match module {
                ModuleArg::Specht => {
                    let mu = mu.context("--mu is required for a Specht module")?;
                    specht_rep(&mu, p, s, backend, &limits)?
                }
                ModuleArg::Signed => {
                    let alpha = alpha.unwrap_or_default();
                    let beta = beta.unwrap_or_default();
                    signed_perm_rep(&alpha, &beta, p, s, &limits)?
                }
            };
            let report = generic_jordan_type(&rep, &cfg)?;
            if json {
                println!("{}", serde_json::to_string_pretty(&report)?);
            } else {
                println!("module: {} (dim {})", rep.label(), rep.dim());
                println!("jordan: {}", report.jordan);
                println!("stable: {}", report.stable);
                println!(
                    "attained by a single sample: {}",
                    report.attained_by_single_sample
                );
            }
            Ok(0)
        }
        Commands::Verify {
            check,
            config,
            json,
            timings,
            primes,
            n_min,
            n_max,
            perturb,
            sampling,
        } => {
            let checks: Vec<Check> = if check == "all" {
                Check::ALL.to_vec()
            } else {
                vec![check.parse().map_err(anyhow::Error::msg)?]
            };
            let mut cfg = match &config {
                Some(path) => {
                    let mut cfg = Config::load(path)?;
                    cfg.campaign.retain(|c| checks.contains(&c.check));
                    cfg
                }
                None => Config::default_campaigns(&checks),
            };
            let Config {
                sampling: s,
                limits,
                backend,
                ..
            } = &mut cfg;
            sampling.apply(s, limits, backend);
            for c in &mut cfg.campaign {
                if let Some(ps) = &primes {
                    c.primes = ps.clone();
                }
                if let Some(x) = n_min {
                    c.n_min = x;
                }
                if let Some(x) = n_max {
                    c.n_max = x;
                }
                if let Some(x) = perturb {
                    c.perturb = x;
                }
                if sampling.backend.is_some() {
                    c.backend = None;
                }
            }
            cfg.validate()?;
            let report = run(&cfg, timings);
            let to_stdout = json.as_deref() == Some(Path::new("-"));
            if !to_stdout {
                print_cases(&report.cases);
                let s = &report.summary;
                println!(
                    "{} cases: {} pass, {} fail, {} skipped, {} invalid",
                    s.total, s.pass, s.fail, s.skipped_scale, s.invalid
                );
            }
            if to_stdout {
                std::io::stdout().write_all(report.to_json().as_bytes())?;
            } else if let Some(path) = json {
                std::fs::write(&path, report.to_json())
                    .with_context(|| format!("writing {}", path.display()))?;
            }
            Ok(report.exit_code())
        }
        Commands::Replay { witness } => {
            let text = std::fs::read_to_string(&witness)
                .with_context(|| format!("reading {}", witness.display()))?;
            let report: Report = match serde_json::from_str(&text) {
                Ok(r) => r,
                Err(_) => {
                    let case: CaseResult = serde_json::from_str(&text)
                        .context("expected a report or a single case result")?;
                    Report {
                        schema: specht_verify::SCHEMA.to_string(),
                        config: Config::default(),
                        summary: specht_verify::Summary::of(std::slice::from_ref(&case)),
                        cases: vec![case],
                    }
                }
            };
            let mismatches = replay(&report);
            for m in &mismatches {
                println!(
                    "case {}: {} recorded {} but reran as {}",
                    m.index, m.description, m.recorded, m.rerun
                );
            }
            println!(
                "{} of {} cases reproduced",
                report.cases.len() - mismatches.len(),
                report.cases.len()
            );
            Ok(if mismatches.is_empty() { 0 } else { 1 })
        }
    }
}

fn print_cases(cases: &[CaseResult]) {
    for c in cases {
        let detail = match (&c.predicted.stable, &c.computed.stable) {
            (Some(want), Some(got)) => format!("predicted {want}, computed {got}"),
            _ => c.computed.note.clone().unwrap_or_default(),
        };
        println!("{:<13} {}  {}", c.verdict, c.spec.describe(), detail);
    }
}
