//! Run configuration: a versioned JSON file merged with command-line
//! overrides (a flag always wins over the file).

use std::path::{Path, PathBuf};

use anyhow::{bail, Context};
use serde::{Deserialize, Serialize};

use pareto_lab::testbeds::{FiniteProblem, FiniteProblemConfig, QuarterCircleConfig};
use pareto_lab::verify::{RayCheckConfig, SweepSpec, HARNESS_REGISTRY};

pub const CONFIG_SCHEMA: u32 = 1;

/// Inline problem description or a reference to a problem file.
#[derive(Debug, Clone, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum ProblemSpec {
    FiniteRandom {
        #[serde(flatten)]
        config: FiniteProblemConfig,
        #[serde(default)]
        problem_seed: Option<u64>,
    },
    QuarterCircle {
        #[serde(flatten)]
        config: QuarterCircleConfig,
        #[serde(default)]
        problem_seed: Option<u64>,
    },
    File {
        path: PathBuf,
    },
}

impl ProblemSpec {
    /// Materialize the problem; generator seeds default to a stream derived
    /// from the master seed so that one flag pins the whole run.
    pub fn build(&self, master_seed: u64, config_dir: &Path) -> anyhow::Result<FiniteProblem> {
        const PROBLEM_STREAM: u64 = (1 << 40) + 1;
        let fallback = pareto_lab::rng::derive_seed(master_seed, PROBLEM_STREAM);
        Ok(match self {
            ProblemSpec::FiniteRandom {
                config,
                problem_seed,
            } => FiniteProblem::random(config, problem_seed.unwrap_or(fallback))
                .context("problem.finite_random")?,
            ProblemSpec::QuarterCircle {
                config,
                problem_seed,
            } => FiniteProblem::quarter_circle(config, problem_seed.unwrap_or(fallback))
                .context("problem.quarter_circle")?,
            ProblemSpec::File { path } => {
                let resolved = if path.is_relative() {
                    config_dir.join(path)
                } else {
                    path.clone()
                };
                FiniteProblem::load_json(&resolved)
                    .with_context(|| format!("problem.path: {}", resolved.display()))?
            }
        })
    }
}

/// The on-disk run configuration.
#[derive(Debug, Clone, Default, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct RunConfigFile {
    pub schema: u32,
    #[serde(default)]
    pub experiment: Option<String>,
    #[serde(default)]
    pub harness: Option<String>,
    #[serde(default)]
    pub problem: Option<ProblemSpec>,
    #[serde(default)]
    pub n: Option<usize>,
    #[serde(default)]
    pub delta: Option<f64>,
    #[serde(default)]
    pub trials: Option<usize>,
    #[serde(default)]
    pub seed: Option<u64>,
    #[serde(default)]
    pub subset_sizes: Option<Vec<usize>>,
    #[serde(default)]
    pub violation_tolerance: Option<f64>,
    #[serde(default)]
    pub tie_tolerance: Option<f64>,
    #[serde(default)]
    pub sweep: Option<SweepSpec>,
    #[serde(default)]
    pub ray: Option<RayCheckConfig>,
    #[serde(default)]
    pub out: Option<PathBuf>,
    #[serde(default)]
    pub format: Option<String>,
}

impl RunConfigFile {
    pub fn load(path: &Path) -> anyhow::Result<Self> {
        let bytes = std::fs::read(path)
            .with_context(|| format!("reading config {}", path.display()))?;
        let config: RunConfigFile = serde_json::from_slice(&bytes)
            .with_context(|| format!("parsing config {}", path.display()))?;
        config.validate()?;
        Ok(config)
    }

    pub fn validate(&self) -> anyhow::Result<()> {
        if self.schema != CONFIG_SCHEMA {
            bail!("schema: expected {CONFIG_SCHEMA}, got {}", self.schema);
        }
        if let Some(harness) = &self.harness {
            if !HARNESS_REGISTRY.iter().any(|h| h.id == harness) {
                bail!("harness: unknown id {harness:?}");
            }
        }
        if let Some(delta) = self.delta {
            if !(delta > 0.0 && delta < 1.0) {
                bail!("delta: must lie in (0,1), got {delta}");
            }
        }
        if let Some(trials) = self.trials {
            if trials == 0 {
                bail!("trials: must be >= 1");
            }
        }
        if let Some(n) = self.n {
            if n == 0 {
                bail!("n: must be >= 1");
            }
        }
        if let Some(format) = &self.format {
            if format != "json" && format != "csv" {
                bail!("format: must be json or csv, got {format:?}");
            }
        }
        if let Some(sweep) = &self.sweep {
            if sweep.count == 0 {
                bail!("sweep.count: must be >= 1");
            }
            if sweep.kinds.is_empty() {
                bail!("sweep.kinds: must be non-empty");
            }
        }
        if let Some(ray) = &self.ray {
            if ray.resolution == 0 {
                bail!("ray.resolution: must be >= 1");
            }
            if !ray.tolerance.is_finite() || ray.tolerance <= 0.0 {
                bail!("ray.tolerance: must be > 0");
            }
        }
        Ok(())
    }
}
