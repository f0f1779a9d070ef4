//! Command-line front end: experiment orchestration, seeded reproducibility,
//! and report emission.
//!
//! Exit codes: 0 when every check passes (or is not applicable), 1 when a
//! check fails or a harness errors out, 2 on usage or configuration errors.

mod config;

use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::Context;
use clap::{Args, Parser, Subcommand, ValueEnum};

use config::{ProblemSpec, RunConfigFile};
use pareto_lab::bounds::{
    bound_comparison_csv, bound_comparison_table, CortesBoundParams,
};
use pareto_lab::testbeds::{FiniteProblemConfig, LassoProblem, QuarterCircleConfig, TermGroupsProblem};
use pareto_lab::verify::{
    default_hoeffding_specs, demonstrate_impossibility, lasso_pareto_study, verify_lemma1,
    verify_pareto_backward, verify_pareto_forward, verify_pareto_single, verify_scalarization,
    CheckOutcome, FrequencyReport, LassoStudyConfig, VerificationConfig, HARNESS_REGISTRY,
};

#[derive(Parser)]
#[command(
    name = "pareto-lab",
    version,
    about = "Multi-objective learning laboratory: seeded Monte Carlo verification of dominance, scalarization, and generalization-bound machinery"
)]
struct Cli {
    /// JSON run configuration (schema 1); command-line flags override it
    #[arg(long, global = true, value_name = "PATH")]
    config: Option<PathBuf>,

    /// Master seed; every stream of randomness derives from it
    #[arg(long, global = true, env = "PARETO_LAB_SEED")]
    seed: Option<u64>,

    /// Output directory for report files
    #[arg(long, global = true, value_name = "DIR")]
    out: Option<PathBuf>,

    /// Report file format
    #[arg(long, global = true, value_enum)]
    format: Option<ReportFormat>,

    /// Worker threads for trial execution (default: machine parallelism)
    #[arg(long, global = true, value_name = "N")]
    threads: Option<usize>,

    /// Number of Monte Carlo trials
    #[arg(long, global = true, value_name = "N")]
    trials: Option<usize>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ReportFormat {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Command {
    /// Run a verification harness against a finite problem
    Verify(VerifyArgs),
    /// Run a demonstration
    #[command(subcommand)]
    Demo(DemoCommand),
    /// Run a parameter study emitting a CSV table
    #[command(subcommand)]
    Study(StudyCommand),
    /// List registered harnesses and the claim each one verifies
    List,
}

#[derive(Args)]
struct VerifyArgs {
    /// One of: lemma1, scalarization, pareto-single, pareto-forward, pareto-backward
    harness: String,

    /// Dataset size per trial
    #[arg(long)]
    n: Option<usize>,

    /// Confidence parameter
    #[arg(long)]
    delta: Option<f64>,

    /// Scalarization sweep size (scalarization harness only)
    #[arg(long, value_name = "N")]
    sweep_size: Option<usize>,
}

#[derive(Subcommand)]
enum DemoCommand {
    /// Empirical-front counterexample on the pure-noise segmentation problem
    Impossibility {
        /// Samples per trial
        #[arg(long, default_value_t = 200)]
        n: usize,
        /// Maximum number of segments in the hypothesis class
        #[arg(long = "K", default_value_t = 20)]
        max_segments: usize,
        /// Jump-count threshold the empirical front must exceed
        #[arg(long = "C", default_value_t = 10)]
        threshold: usize,
    },
}

#[derive(Subcommand)]
enum StudyCommand {
    /// Regularization-path study: fit vs. sparsity front on a generated problem
    Lasso {
        #[arg(long, default_value_t = 100)]
        n: usize,
        #[arg(long, default_value_t = 10)]
        d: usize,
        #[arg(long, default_value_t = 5)]
        nonzeros: usize,
        /// Noise standard deviation; 0 gives the realizable case
        #[arg(long, default_value_t = 0.0)]
        noise: f64,
        #[arg(long, default_value_t = 50)]
        grid_size: usize,
        #[arg(long, default_value_t = 1e-3)]
        grid_decay: f64,
    },
    /// Cover-based vs. cover-free uniform bound across objective counts
    Cortes {
        /// Comma-separated objective counts
        #[arg(long = "N-list", default_value = "2,4,8,16")]
        n_list: String,
        #[arg(long, default_value_t = 0.01)]
        epsilon: f64,
        #[arg(long, default_value_t = 10_000)]
        n: usize,
        #[arg(long, default_value_t = 0.05)]
        delta: f64,
        #[arg(long, default_value_t = 1.0)]
        beta: f64,
        #[arg(long, default_value_t = 1.0)]
        diameter: f64,
        #[arg(long, default_value_t = 1.0)]
        loss_bound: f64,
        #[arg(long, default_value_t = 0.05)]
        rademacher: f64,
    },
    /// Tilted group-risk sweep over the tilt parameter
    Term {
        #[arg(long, default_value_t = 3)]
        models: usize,
        #[arg(long, default_value_t = 8)]
        groups: usize,
        #[arg(long, default_value_t = 50)]
        group_size: usize,
        #[arg(long, default_value_t = -10.0)]
        t_min: f64,
        #[arg(long, default_value_t = 10.0)]
        t_max: f64,
        #[arg(long, default_value_t = 21)]
        t_steps: usize,
    },
}

const DEFAULT_SEED: u64 = 42;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(err) => {
            eprintln!("error: {err:#}");
            // Configuration and schema problems are usage errors.
            if err.is::<ConfigError>() {
                ExitCode::from(2)
            } else {
                ExitCode::from(1)
            }
        }
    }
}

/// Marker for errors that must exit with status 2.
#[derive(Debug)]
struct ConfigError(String);

impl std::fmt::Display for ConfigError {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl std::error::Error for ConfigError {}

fn config_error(message: impl Into<String>) -> anyhow::Error {
    anyhow::Error::new(ConfigError(message.into()))
}

fn run(cli: Cli) -> anyhow::Result<ExitCode> {
    if let Some(threads) = cli.threads {
        if threads == 0 {
            return Err(config_error("threads: must be >= 1"));
        }
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build_global()
            .context("building thread pool")?;
    }

    let file = match &cli.config {
        Some(path) => {
            let loaded = RunConfigFile::load(path).map_err(|e| config_error(format!("{e:#}")))?;
            Some((loaded, path.parent().unwrap_or(Path::new(".")).to_path_buf()))
        }
        None => None,
    };
    let file_config = file.as_ref().map(|(c, _)| c);
    let config_dir = file
        .as_ref()
        .map(|(_, d)| d.clone())
        .unwrap_or_else(|| PathBuf::from("."));

    let seed = cli
        .seed
        .or(file_config.and_then(|c| c.seed))
        .unwrap_or(DEFAULT_SEED);
    let out_dir = cli
        .out
        .clone()
        .or(file_config.and_then(|c| c.out.clone()))
        .unwrap_or_else(|| PathBuf::from("reports"));
    let format = cli.format.unwrap_or_else(|| {
        match file_config.and_then(|c| c.format.as_deref()) {
            Some("csv") => ReportFormat::Csv,
            _ => ReportFormat::Json,
        }
    });

    match &cli.command {
        Command::List => {
            for harness in HARNESS_REGISTRY {
                println!("{:<16} {}", harness.id, harness.claim);
            }
            Ok(ExitCode::SUCCESS)
        }
        Command::Verify(args) => run_verify(
            args,
            &cli,
            file_config,
            &config_dir,
            seed,
            &out_dir,
            format,
        ),
        Command::Demo(DemoCommand::Impossibility {
            n,
            max_segments,
            threshold,
        }) => {
            let trials = cli
                .trials
                .or(file_config.and_then(|c| c.trials))
                .unwrap_or(100);
            let report = demonstrate_impossibility(*n, *max_segments, *threshold, trials, seed)
                .map_err(map_core_error)?;
            emit_frequency_report(&report, &out_dir, format)?;
            println!("{}", report.summary_line());
            Ok(exit_for(report.passed()))
        }
        Command::Study(study) => run_study(study, seed, &out_dir, format),
    }
}

fn map_core_error(err: pareto_lab::Error) -> anyhow::Error {
    match err {
        pareto_lab::Error::Config(message) => config_error(format!("config: {message}")),
        pareto_lab::Error::Parameter { name, reason } => {
            config_error(format!("{name}: {reason}"))
        }
        other => anyhow::Error::new(other),
    }
}

fn exit_for(passed: bool) -> ExitCode {
    if passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    }
}

fn run_verify(
    args: &VerifyArgs,
    cli: &Cli,
    file_config: Option<&RunConfigFile>,
    config_dir: &Path,
    seed: u64,
    out_dir: &Path,
    format: ReportFormat,
) -> anyhow::Result<ExitCode> {
    let harness = args.harness.as_str();
    let known = [
        "lemma1",
        "scalarization",
        "pareto-single",
        "pareto-forward",
        "pareto-backward",
    ];
    if !known.contains(&harness) {
        return Err(config_error(format!(
            "harness: unknown id {harness:?}; expected one of {known:?} (see `pareto-lab list`)"
        )));
    }

    let n = args
        .n
        .or(file_config.and_then(|c| c.n))
        .unwrap_or(500);
    let delta = args
        .delta
        .or(file_config.and_then(|c| c.delta))
        .unwrap_or(0.1);
    let trials = cli
        .trials
        .or(file_config.and_then(|c| c.trials))
        .unwrap_or(1000);

    let problem_spec = file_config
        .and_then(|c| c.problem.clone())
        .unwrap_or_else(|| default_problem_spec(harness));
    let problem = problem_spec
        .build(seed, config_dir)
        .map_err(|e| config_error(format!("{e:#}")))?;
    let specs = default_hoeffding_specs(&problem);
    let mut cfg = VerificationConfig::new(n, delta, trials, seed).map_err(map_core_error)?;
    if let Some(file) = file_config {
        cfg.subset_sizes = file.subset_sizes.clone();
        if let Some(tol) = file.violation_tolerance {
            cfg.violation_tolerance = tol;
        }
        if let Some(tol) = file.tie_tolerance {
            cfg.tie_tolerance = tol;
        }
        cfg.validate()
            .map_err(|e| config_error(format!("config: {e}")))?;
    }

    let report = match harness {
        "lemma1" => verify_lemma1(&problem, &specs, &cfg),
        "scalarization" => {
            let mut sweep = file_config
                .and_then(|c| c.sweep.clone())
                .unwrap_or_default();
            if let Some(count) = args.sweep_size {
                sweep.count = count;
            }
            verify_scalarization(&problem, &specs, &cfg, &sweep)
        }
        "pareto-single" => verify_pareto_single(&problem, &specs, &cfg),
        "pareto-forward" => verify_pareto_forward(&problem, &specs, &cfg),
        "pareto-backward" => {
            let ray = file_config.and_then(|c| c.ray).unwrap_or_default();
            verify_pareto_backward(&problem, &specs, &cfg, &ray)
        }
        _ => unreachable!("validated above"),
    }
    .map_err(map_core_error)?;

    emit_frequency_report(&report, out_dir, format)?;
    println!("{}", report.summary_line());
    Ok(exit_for(report.passed()))
}

/// The backward harness needs a ray-complete true front; the dense
/// quarter-circle construction provides one. Everything else defaults to the
/// standard random finite problem.
fn default_problem_spec(harness: &str) -> ProblemSpec {
    if harness == "pareto-backward" {
        ProblemSpec::QuarterCircle {
            config: QuarterCircleConfig::default(),
            problem_seed: None,
        }
    } else {
        ProblemSpec::FiniteRandom {
            config: FiniteProblemConfig::default(),
            problem_seed: None,
        }
    }
}

fn run_study(
    study: &StudyCommand,
    seed: u64,
    out_dir: &Path,
    format: ReportFormat,
) -> anyhow::Result<ExitCode> {
    match study {
        StudyCommand::Lasso {
            n,
            d,
            nonzeros,
            noise,
            grid_size,
            grid_decay,
        } => {
            let (problem, truth) =
                LassoProblem::random_linear(*n, *d, *nonzeros, *noise, seed)
                    .map_err(map_core_error)?;
            let config = LassoStudyConfig {
                grid_size: *grid_size,
                grid_decay: *grid_decay,
                ..Default::default()
            };
            let report = lasso_pareto_study(&problem, &truth, &config).map_err(map_core_error)?;
            let stem = format!("lasso-{seed}");
            match format {
                ReportFormat::Json => {
                    write_report(out_dir, &format!("{stem}.json"), &report.to_json()?)?
                }
                ReportFormat::Csv => write_report(out_dir, &format!("{stem}.csv"), &report.csv())?,
            }
            println!("{}", report.summary_line());
            Ok(exit_for(matches!(
                report.outcome,
                CheckOutcome::Pass | CheckOutcome::NotApplicable
            )))
        }
        StudyCommand::Cortes {
            n_list,
            epsilon,
            n,
            delta,
            beta,
            diameter,
            loss_bound,
            rademacher,
        } => {
            let counts: Vec<usize> = n_list
                .split(',')
                .map(|part| {
                    part.trim()
                        .parse::<usize>()
                        .map_err(|_| config_error(format!("N-list: bad entry {part:?}")))
                })
                .collect::<anyhow::Result<_>>()?;
            if counts.is_empty() {
                return Err(config_error("N-list: must name at least one objective count"));
            }
            let base = CortesBoundParams {
                beta: *beta,
                diameter: *diameter,
                loss_bound: *loss_bound,
                n: *n,
                num_objectives: counts[0],
                epsilon: *epsilon,
                rademacher: *rademacher,
                delta: *delta,
            };
            let rows = bound_comparison_table(&base, &counts).map_err(map_core_error)?;
            let csv = bound_comparison_csv(&rows);
            let stem = format!("cortes-{seed}");
            match format {
                ReportFormat::Csv => write_report(out_dir, &format!("{stem}.csv"), &csv)?,
                ReportFormat::Json => write_report(
                    out_dir,
                    &format!("{stem}.json"),
                    &serde_json::to_string_pretty(&rows)?,
                )?,
            }
            print!("{csv}");
            let dominated = rows.iter().all(|r| r.improved_rhs < r.cortes_rhs);
            println!(
                "{} cortes: cover-free bound below cover-based bound at every N",
                if dominated { "PASS" } else { "FAIL" }
            );
            Ok(exit_for(dominated))
        }
        StudyCommand::Term {
            models,
            groups,
            group_size,
            t_min,
            t_max,
            t_steps,
        } => {
            if *t_steps < 2 || !t_min.is_finite() || !t_max.is_finite() || t_min >= t_max {
                return Err(config_error("t grid: need t_min < t_max and t_steps >= 2"));
            }
            let problem = TermGroupsProblem::random(*models, *groups, *group_size, seed)
                .map_err(map_core_error)?;
            let mut csv = String::from("model,t,tilted_risk,min_risk,mean_risk,max_risk\n");
            let mut ok = true;
            for model in 0..problem.num_models() {
                let risks = problem.group_risks(model).map_err(map_core_error)?;
                let lo = risks.iter().cloned().fold(f64::INFINITY, f64::min);
                let hi = risks.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
                let mean = risks.iter().sum::<f64>() / risks.len() as f64;
                let mut previous = f64::NEG_INFINITY;
                for step in 0..*t_steps {
                    let t = t_min + (t_max - t_min) * step as f64 / (*t_steps - 1) as f64;
                    let value = problem.tilted_risk(model, t).map_err(map_core_error)?;
                    ok &= value >= lo - 1e-9 && value <= hi + 1e-9 && value >= previous - 1e-9;
                    previous = value;
                    csv.push_str(&format!("{model},{t},{value},{lo},{mean},{hi}\n"));
                }
            }
            write_report(out_dir, &format!("term-{seed}.csv"), &csv)?;
            println!(
                "{} term: tilted risk within [min,max] and non-decreasing in t",
                if ok { "PASS" } else { "FAIL" }
            );
            Ok(exit_for(ok))
        }
    }
}

fn emit_frequency_report(
    report: &FrequencyReport,
    out_dir: &Path,
    format: ReportFormat,
) -> anyhow::Result<()> {
    let stem = format!("{}-{}", report.harness, report.master_seed);
    match format {
        ReportFormat::Json => {
            write_report(out_dir, &format!("{stem}.json"), &report.to_json()?)
        }
        ReportFormat::Csv => write_report(out_dir, &format!("{stem}.csv"), &report.summary_csv()),
    }
}

fn write_report(out_dir: &Path, name: &str, contents: &str) -> anyhow::Result<()> {
    std::fs::create_dir_all(out_dir)
        .with_context(|| format!("creating output dir {}", out_dir.display()))?;
    let path = out_dir.join(name);
    std::fs::write(&path, contents)
        .with_context(|| format!("writing report {}", path.display()))?;
    println!("wrote {}", path.display());
    Ok(())
}
