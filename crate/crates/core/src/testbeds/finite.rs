//! Finite synthetic problems: a hypothesis class, an outcome distribution,
//! and a per-outcome loss tensor. True objectives are exact expectations;
//! empirical objectives are subset means over a sampled dataset.

use std::path::Path;

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::{Error, Result};

/// A finite multi-objective learning problem.
///
/// `losses[h][z][i]` is the loss of hypothesis `h` on outcome `z` for
/// objective `i`, stored flattened in h-major order. Objectives flagged in
/// `trivial` are data-independent: their loss is constant across outcomes,
/// so the empirical value equals the true value for any dataset.
#[derive(Debug, Clone)]
pub struct FiniteProblem {
    losses: Vec<f64>,
    probs: Vec<f64>,
    trivial: Vec<bool>,
    loss_bound: f64,
    num_hypotheses: usize,
    num_outcomes: usize,
    num_objectives: usize,
}

/// Shape/seed parameters for the random generator.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct FiniteProblemConfig {
    pub num_hypotheses: usize,
    pub num_outcomes: usize,
    pub num_objectives: usize,
    #[serde(default)]
    pub trivial: Option<Vec<bool>>,
    #[serde(default = "default_loss_bound")]
    pub loss_bound: f64,
}

fn default_loss_bound() -> f64 {
    1.0
}

impl Default for FiniteProblemConfig {
    fn default() -> Self {
        FiniteProblemConfig {
            num_hypotheses: 100,
            num_outcomes: 64,
            num_objectives: 2,
            trivial: None,
            loss_bound: 1.0,
        }
    }
}

/// Parameters for the ray-complete quarter-circle construction.
///
/// The true front consists of `angular_points` hypotheses whose objective
/// vectors sit on the radius-1 quarter circle at half-step angles; each
/// `shell_radii` entry adds a dominated copy of the front scaled outward.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct QuarterCircleConfig {
    pub angular_points: usize,
    pub shell_radii: Vec<f64>,
    pub num_outcomes: usize,
    /// Per-outcome loss spread as a fraction of the room to the [0, M] walls.
    pub spread: f64,
    pub loss_bound: f64,
}

impl Default for QuarterCircleConfig {
    fn default() -> Self {
        QuarterCircleConfig {
            angular_points: 90,
            shell_radii: vec![1.01, 1.3],
            num_outcomes: 64,
            spread: 0.5,
            loss_bound: 2.0,
        }
    }
}

/// A sampled dataset of outcome indices with its seed recorded.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Dataset {
    pub seed: u64,
    pub indices: Vec<usize>,
}

impl Dataset {
    pub fn len(&self) -> usize {
        self.indices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.indices.is_empty()
    }
}

const PROB_SUM_TOL: f64 = 1e-12;

impl FiniteProblem {
    /// Build from a nested tensor `losses[h][z][i]`.
    pub fn new(
        losses: Vec<Vec<Vec<f64>>>,
        probs: Vec<f64>,
        trivial: Vec<bool>,
        loss_bound: f64,
    ) -> Result<Self> {
        if losses.is_empty() {
            return Err(Error::Empty("hypothesis class"));
        }
        let num_hypotheses = losses.len();
        let num_outcomes = probs.len();
        if num_outcomes == 0 {
            return Err(Error::Empty("outcome distribution"));
        }
        let num_objectives = losses[0].first().map(|v| v.len()).unwrap_or(0);
        if num_objectives == 0 {
            return Err(Error::Empty("objectives"));
        }
        if trivial.len() != num_objectives {
            return Err(Error::Dimension {
                expected: num_objectives,
                actual: trivial.len(),
            });
        }
        if loss_bound <= 0.0 || !loss_bound.is_finite() {
            return Err(Error::Positivity {
                name: "loss_bound",
                value: loss_bound,
            });
        }
        let sum: f64 = probs.iter().sum();
        if (sum - 1.0).abs() > PROB_SUM_TOL || probs.iter().any(|p| *p < 0.0) {
            return Err(Error::parameter(
                "probs",
                format!("must be a distribution summing to 1, got sum {sum}"),
            ));
        }

        let mut flat = Vec::with_capacity(num_hypotheses * num_outcomes * num_objectives);
        for (h, per_outcome) in losses.iter().enumerate() {
            if per_outcome.len() != num_outcomes {
                return Err(Error::Dimension {
                    expected: num_outcomes,
                    actual: per_outcome.len(),
                });
            }
            for per_obj in per_outcome {
                if per_obj.len() != num_objectives {
                    return Err(Error::Dimension {
                        expected: num_objectives,
                        actual: per_obj.len(),
                    });
                }
                for (i, &v) in per_obj.iter().enumerate() {
                    if !v.is_finite() || v < 0.0 || v > loss_bound {
                        return Err(Error::parameter(
                            "losses",
                            format!("loss {v} for (h={h}, objective={i}) outside [0, {loss_bound}]"),
                        ));
                    }
                    flat.push(v);
                }
            }
        }
        let problem = FiniteProblem {
            losses: flat,
            probs,
            trivial,
            loss_bound,
            num_hypotheses,
            num_outcomes,
            num_objectives,
        };
        problem.check_trivial_columns()?;
        Ok(problem)
    }

    /// Trivial objectives must not depend on the outcome.
    fn check_trivial_columns(&self) -> Result<()> {
        for i in 0..self.num_objectives {
            if !self.trivial[i] {
                continue;
            }
            for h in 0..self.num_hypotheses {
                let first = self.loss(h, 0, i);
                for z in 1..self.num_outcomes {
                    if self.loss(h, z, i) != first {
                        return Err(Error::Inconsistent(format!(
                            "objective {i} is flagged trivial but varies with the outcome for hypothesis {h}"
                        )));
                    }
                }
            }
        }
        Ok(())
    }

    /// Losses i.i.d. uniform on [0, loss_bound]; trivial objectives get a
    /// per-hypothesis constant; outcome probabilities are a flat Dirichlet draw.
    pub fn random(config: &FiniteProblemConfig, seed: u64) -> Result<Self> {
        let trivial = config
            .trivial
            .clone()
            .unwrap_or_else(|| vec![false; config.num_objectives]);
        if trivial.len() != config.num_objectives {
            return Err(Error::Dimension {
                expected: config.num_objectives,
                actual: trivial.len(),
            });
        }
        let mut rng = stream_rng(seed, 0);
        let m = config.loss_bound;
        let mut losses = Vec::with_capacity(config.num_hypotheses);
        for _ in 0..config.num_hypotheses {
            let constants: Vec<f64> = (0..config.num_objectives)
                .map(|_| rng.random::<f64>() * m)
                .collect();
            let mut per_outcome = Vec::with_capacity(config.num_outcomes);
            for _ in 0..config.num_outcomes {
                per_outcome.push(
                    (0..config.num_objectives)
                        .map(|i| {
                            if trivial[i] {
                                constants[i]
                            } else {
                                rng.random::<f64>() * m
                            }
                        })
                        .collect(),
                );
            }
            losses.push(per_outcome);
        }
        let mut probs: Vec<f64> = (0..config.num_outcomes)
            .map(|_| -(rng.random::<f64>().max(f64::MIN_POSITIVE)).ln())
            .collect();
        let sum: f64 = probs.iter().sum();
        for p in &mut probs {
            *p /= sum;
        }
        let adjust = 1.0 - probs.iter().sum::<f64>();
        probs[0] += adjust;
        FiniteProblem::new(losses, probs, trivial, m)
    }

    /// A two-objective problem whose true Pareto front densely fills the
    /// radius-1 quarter circle, hence is ray complete at any tolerance wider
    /// than half the angular step. Hypotheses are laid out front-first:
    /// indices `0..angular_points` are the true Pareto set.
    pub fn quarter_circle(config: &QuarterCircleConfig, seed: u64) -> Result<Self> {
        if config.angular_points == 0 {
            return Err(Error::parameter("angular_points", "must be >= 1"));
        }
        if !(config.spread >= 0.0 && config.spread <= 1.0) {
            return Err(Error::parameter("spread", "must lie in [0,1]"));
        }
        let max_radius = config
            .shell_radii
            .iter()
            .fold(1.0f64, |m, &r| m.max(r));
        if config.loss_bound <= max_radius {
            return Err(Error::parameter(
                "loss_bound",
                "must exceed the largest shell radius",
            ));
        }
        if config.shell_radii.iter().any(|&r| r <= 1.0) {
            return Err(Error::parameter(
                "shell_radii",
                "shells must be strictly outside the unit front",
            ));
        }
        let mut rng = stream_rng(seed, 1);
        let mut radii = vec![1.0];
        radii.extend_from_slice(&config.shell_radii);

        let m = config.loss_bound;
        let nz = config.num_outcomes;
        let mut losses = Vec::new();
        for &radius in &radii {
            for j in 0..config.angular_points {
                let theta =
                    (j as f64 + 0.5) / config.angular_points as f64 * std::f64::consts::FRAC_PI_2;
                let targets = [radius * theta.cos(), radius * theta.sin()];
                let mut per_outcome = vec![vec![0.0; 2]; nz];
                for (i, &mu) in targets.iter().enumerate() {
                    // Centered noise scaled to keep values inside [0, M]
                    // while preserving the exact mean.
                    let raw: Vec<f64> = (0..nz).map(|_| rng.random::<f64>() * 2.0 - 1.0).collect();
                    let mean = raw.iter().sum::<f64>() / nz as f64;
                    let centered: Vec<f64> = raw.iter().map(|u| u - mean).collect();
                    let max_abs = centered.iter().fold(0.0f64, |a, c| a.max(c.abs()));
                    let alpha = if max_abs > 0.0 {
                        config.spread * mu.min(m - mu) / max_abs
                    } else {
                        0.0
                    };
                    for (z, c) in centered.iter().enumerate() {
                        per_outcome[z][i] = (mu + alpha * c).clamp(0.0, m);
                    }
                }
                losses.push(per_outcome);
            }
        }
        let probs = vec![1.0 / nz as f64; nz];
        FiniteProblem::new(losses, probs, vec![false, false], m)
    }

    #[inline]
    pub fn loss(&self, h: usize, z: usize, i: usize) -> f64 {
        self.losses[(h * self.num_outcomes + z) * self.num_objectives + i]
    }

    pub fn num_hypotheses(&self) -> usize {
        self.num_hypotheses
    }

    pub fn num_outcomes(&self) -> usize {
        self.num_outcomes
    }

    pub fn num_objectives(&self) -> usize {
        self.num_objectives
    }

    pub fn loss_bound(&self) -> f64 {
        self.loss_bound
    }

    pub fn trivial_mask(&self) -> &[bool] {
        &self.trivial
    }

    pub fn outcome_probs(&self) -> &[f64] {
        &self.probs
    }

    /// Exact expectations: `row[h][i] = sum_z p(z) loss(h,z,i)`.
    pub fn true_objectives(&self) -> Vec<Vec<f64>> {
        (0..self.num_hypotheses)
            .map(|h| {
                (0..self.num_objectives)
                    .map(|i| {
                        if self.trivial[i] {
                            self.loss(h, 0, i)
                        } else {
                            (0..self.num_outcomes)
                                .map(|z| self.probs[z] * self.loss(h, z, i))
                                .sum()
                        }
                    })
                    .collect()
            })
            .collect()
    }

    /// Draw `n` outcome indices i.i.d. from the outcome distribution.
    pub fn sample_dataset(&self, n: usize, seed: u64) -> Result<Dataset> {
        if n == 0 {
            return Err(Error::parameter("n", "must be >= 1"));
        }
        let mut cumulative = Vec::with_capacity(self.num_outcomes);
        let mut acc = 0.0;
        for &p in &self.probs {
            acc += p;
            cumulative.push(acc);
        }
        let mut rng = stream_rng(seed, 2);
        let indices = (0..n)
            .map(|_| {
                let u: f64 = rng.random::<f64>() * acc;
                cumulative.partition_point(|&c| c < u).min(self.num_outcomes - 1)
            })
            .collect();
        Ok(Dataset { seed, indices })
    }

    /// Empirical objectives over the whole dataset.
    pub fn empirical_objectives(&self, dataset: &Dataset) -> Result<Vec<Vec<f64>>> {
        self.empirical_objectives_with_subsets(dataset, None)
    }

    /// Empirical objectives where objective `i` is estimated from the sample
    /// positions in `subsets[i]` (positions index into the dataset). `None`
    /// means every objective uses the full dataset. Trivial objectives return
    /// the exact table value regardless.
    pub fn empirical_objectives_with_subsets(
        &self,
        dataset: &Dataset,
        subsets: Option<&[Vec<usize>]>,
    ) -> Result<Vec<Vec<f64>>> {
        if dataset.is_empty() {
            return Err(Error::Empty("dataset"));
        }
        if let Some(subsets) = subsets {
            if subsets.len() != self.num_objectives {
                return Err(Error::Dimension {
                    expected: self.num_objectives,
                    actual: subsets.len(),
                });
            }
        }
        // Outcome counts per objective; means then cost O(|H| * |Z|) instead
        // of O(|H| * n).
        let mut counts = vec![vec![0u64; self.num_outcomes]; self.num_objectives];
        let mut totals = vec![0u64; self.num_objectives];
        for i in 0..self.num_objectives {
            let positions: Box<dyn Iterator<Item = usize>> = match subsets {
                Some(s) => Box::new(s[i].iter().copied()),
                None => Box::new(0..dataset.len()),
            };
            for pos in positions {
                let z = *dataset.indices.get(pos).ok_or_else(|| {
                    Error::Config(format!(
                        "subset for objective {i} references sample {pos} beyond dataset size {}",
                        dataset.len()
                    ))
                })?;
                if z >= self.num_outcomes {
                    return Err(Error::Config(format!(
                        "dataset contains outcome index {z} beyond the outcome space"
                    )));
                }
                counts[i][z] += 1;
                totals[i] += 1;
            }
            if totals[i] == 0 && !self.trivial[i] {
                return Err(Error::Config(format!(
                    "empty subset for non-trivial objective {i}"
                )));
            }
        }

        Ok((0..self.num_hypotheses)
            .map(|h| {
                (0..self.num_objectives)
                    .map(|i| {
                        if self.trivial[i] {
                            self.loss(h, 0, i)
                        } else {
                            let sum: f64 = (0..self.num_outcomes)
                                .filter(|&z| counts[i][z] > 0)
                                .map(|z| counts[i][z] as f64 * self.loss(h, z, i))
                                .sum();
                            sum / totals[i] as f64
                        }
                    })
                    .collect()
            })
            .collect())
    }

    /// Per-objective sample counts implied by a dataset and optional subsets.
    pub fn effective_sample_counts(
        &self,
        dataset: &Dataset,
        subsets: Option<&[Vec<usize>]>,
    ) -> Vec<usize> {
        (0..self.num_objectives)
            .map(|i| match subsets {
                Some(s) => s[i].len(),
                None => dataset.len(),
            })
            .collect()
    }

    /// Serialize to a JSON file. With `inline` the tensor is embedded as
    /// nested arrays; otherwise it is written next to the JSON as raw
    /// little-endian f64 values with the shape recorded in the header.
    pub fn save_json(&self, path: &Path, inline: bool) -> Result<()> {
        let header = if inline {
            FiniteProblemFile {
                schema: 1,
                loss_bound: self.loss_bound,
                trivial: self.trivial.clone(),
                probs: self.probs.clone(),
                losses: Some(self.nested_losses()),
                losses_file: None,
            }
        } else {
            let bin_name = format!(
                "{}.f64le",
                path.file_stem().and_then(|s| s.to_str()).unwrap_or("losses")
            );
            let bin_path = path.with_file_name(&bin_name);
            let mut bytes = Vec::with_capacity(self.losses.len() * 8);
            for v in &self.losses {
                bytes.extend_from_slice(&v.to_le_bytes());
            }
            std::fs::write(&bin_path, bytes)?;
            FiniteProblemFile {
                schema: 1,
                loss_bound: self.loss_bound,
                trivial: self.trivial.clone(),
                probs: self.probs.clone(),
                losses: None,
                losses_file: Some(LossesFileRef {
                    path: bin_name,
                    shape: [self.num_hypotheses, self.num_outcomes, self.num_objectives],
                }),
            }
        };
        std::fs::write(path, serde_json::to_vec_pretty(&header)?)?;
        Ok(())
    }

    pub fn load_json(path: &Path) -> Result<Self> {
        let header: FiniteProblemFile = serde_json::from_slice(&std::fs::read(path)?)?;
        if header.schema != 1 {
            return Err(Error::Config(format!(
                "unsupported problem schema {}",
                header.schema
            )));
        }
        match (header.losses, header.losses_file) {
            (Some(nested), _) => {
                FiniteProblem::new(nested, header.probs, header.trivial, header.loss_bound)
            }
            (None, Some(file_ref)) => {
                let bin_path = path
                    .parent()
                    .unwrap_or_else(|| Path::new("."))
                    .join(&file_ref.path);
                let bytes = std::fs::read(&bin_path)?;
                let [h, z, i] = file_ref.shape;
                let expected = h * z * i * 8;
                if bytes.len() != expected {
                    return Err(Error::Config(format!(
                        "losses file {} has {} bytes, expected {expected} for shape {:?}",
                        bin_path.display(),
                        bytes.len(),
                        file_ref.shape
                    )));
                }
                let mut values = Vec::with_capacity(h * z * i);
                for chunk in bytes.chunks_exact(8) {
                    values.push(f64::from_le_bytes(chunk.try_into().unwrap()));
                }
                let nested: Vec<Vec<Vec<f64>>> = (0..h)
                    .map(|hh| {
                        (0..z)
                            .map(|zz| {
                                (0..i).map(|ii| values[(hh * z + zz) * i + ii]).collect()
                            })
                            .collect()
                    })
                    .collect();
                FiniteProblem::new(nested, header.probs, header.trivial, header.loss_bound)
            }
            (None, None) => Err(Error::Config(
                "problem file carries neither inline losses nor a tensor reference".into(),
            )),
        }
    }

    fn nested_losses(&self) -> Vec<Vec<Vec<f64>>> {
        (0..self.num_hypotheses)
            .map(|h| {
                (0..self.num_outcomes)
                    .map(|z| (0..self.num_objectives).map(|i| self.loss(h, z, i)).collect())
                    .collect()
            })
            .collect()
    }
}

#[derive(Serialize, Deserialize)]
struct FiniteProblemFile {
    schema: u32,
    loss_bound: f64,
    trivial: Vec<bool>,
    probs: Vec<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    losses: Option<Vec<Vec<Vec<f64>>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    losses_file: Option<LossesFileRef>,
}

#[derive(Serialize, Deserialize)]
struct LossesFileRef {
    path: String,
    shape: [usize; 3],
}
