//! L1-regularized least squares as a two-objective problem: empirical
//! squared loss against the coefficient L1 norm. The regularizer is
//! data-independent, so it generalizes exactly; the squared loss of any
//! coefficient vector has an analytic fixed-design expectation when the
//! generating linear model is known.

use rand::Rng;
use rand_distr::{Distribution, StandardNormal};
use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::{Error, Result};

/// A fixed design matrix and target vector.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LassoProblem {
    design: Vec<Vec<f64>>,
    targets: Vec<f64>,
}

/// The linear model a problem was generated from.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LassoGroundTruth {
    pub beta_star: Vec<f64>,
    pub noise_sigma: f64,
}

/// Solver output: the coefficient vector plus per-sweep objective values
/// (non-increasing; coordinate descent on a convex objective descends).
#[derive(Debug, Clone)]
pub struct CdSolution {
    pub beta: Vec<f64>,
    pub sweeps: usize,
    pub objective_trace: Vec<f64>,
}

/// One record of the regularization path.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct LassoPathPoint {
    pub lambda: f64,
    pub beta: Vec<f64>,
    pub empirical_loss: f64,
    pub l1_norm: f64,
}

impl LassoProblem {
    pub fn new(design: Vec<Vec<f64>>, targets: Vec<f64>) -> Result<Self> {
        if design.is_empty() {
            return Err(Error::Empty("design matrix"));
        }
        let d = design[0].len();
        if d == 0 {
            return Err(Error::Empty("design matrix columns"));
        }
        if design.len() != targets.len() {
            return Err(Error::Dimension {
                expected: design.len(),
                actual: targets.len(),
            });
        }
        for row in &design {
            if row.len() != d {
                return Err(Error::Dimension {
                    expected: d,
                    actual: row.len(),
                });
            }
            if row.iter().any(|v| !v.is_finite()) {
                return Err(Error::parameter("design", "entries must be finite"));
            }
        }
        if targets.iter().any(|v| !v.is_finite()) {
            return Err(Error::parameter("targets", "entries must be finite"));
        }
        Ok(LassoProblem { design, targets })
    }

    /// Gaussian design with a sparse ground-truth coefficient vector;
    /// `noise_sigma = 0` gives the realizable (noiseless) case.
    pub fn random_linear(
        n: usize,
        d: usize,
        nonzeros: usize,
        noise_sigma: f64,
        seed: u64,
    ) -> Result<(Self, LassoGroundTruth)> {
        if n == 0 || d == 0 {
            return Err(Error::parameter("n/d", "must be >= 1"));
        }
        if nonzeros > d {
            return Err(Error::parameter("nonzeros", "cannot exceed d"));
        }
        if noise_sigma < 0.0 {
            return Err(Error::Positivity {
                name: "noise_sigma",
                value: noise_sigma,
            });
        }
        let mut rng = stream_rng(seed, 4);
        let normal = StandardNormal;
        let design: Vec<Vec<f64>> = (0..n)
            .map(|_| (0..d).map(|_| normal.sample(&mut rng)).collect())
            .collect();
        let mut beta_star = vec![0.0; d];
        for slot in beta_star.iter_mut().take(nonzeros) {
            let magnitude = 0.5 + 1.5 * rng.random::<f64>();
            *slot = if rng.random::<bool>() { magnitude } else { -magnitude };
        }
        let targets: Vec<f64> = design
            .iter()
            .map(|row| {
                let clean: f64 = row.iter().zip(&beta_star).map(|(x, b)| x * b).sum();
                let noise: f64 = normal.sample(&mut rng);
                clean + noise_sigma * noise
            })
            .collect();
        Ok((
            LassoProblem::new(design, targets)?,
            LassoGroundTruth {
                beta_star,
                noise_sigma,
            },
        ))
    }

    pub fn n(&self) -> usize {
        self.design.len()
    }

    pub fn d(&self) -> usize {
        self.design[0].len()
    }

    pub fn design(&self) -> &[Vec<f64>] {
        &self.design
    }

    pub fn targets(&self) -> &[f64] {
        &self.targets
    }

    /// Smallest penalty at which 0 is optimal: `(2/n) max_j |X^T y|_j`.
    pub fn lambda_max(&self) -> f64 {
        let n = self.n() as f64;
        (0..self.d())
            .map(|j| {
                self.design
                    .iter()
                    .zip(&self.targets)
                    .map(|(row, y)| row[j] * y)
                    .sum::<f64>()
                    .abs()
            })
            .fold(0.0, f64::max)
            * 2.0
            / n
    }

    /// Mean squared residual `(1/n) ||y - X beta||^2`.
    pub fn empirical_loss(&self, beta: &[f64]) -> f64 {
        let n = self.n() as f64;
        self.design
            .iter()
            .zip(&self.targets)
            .map(|(row, y)| {
                let r = y - row.iter().zip(beta).map(|(x, b)| x * b).sum::<f64>();
                r * r
            })
            .sum::<f64>()
            / n
    }

    /// The regularized objective `(1/n) ||y - X beta||^2 + lambda ||beta||_1`.
    pub fn objective(&self, beta: &[f64], lambda: f64) -> f64 {
        self.empirical_loss(beta) + lambda * beta.iter().map(|b| b.abs()).sum::<f64>()
    }

    /// Fixed-design expected squared loss of `beta` when targets come from
    /// `truth`: `(1/n) ||X (beta - beta_star)||^2 + sigma^2`.
    pub fn true_loss(&self, truth: &LassoGroundTruth, beta: &[f64]) -> f64 {
        let n = self.n() as f64;
        let ss: f64 = self
            .design
            .iter()
            .map(|row| {
                let diff: f64 = row
                    .iter()
                    .zip(beta.iter().zip(&truth.beta_star))
                    .map(|(x, (b, bs))| x * (b - bs))
                    .sum();
                diff * diff
            })
            .sum();
        ss / n + truth.noise_sigma * truth.noise_sigma
    }

    /// Cyclic coordinate descent with soft thresholding from a zero start.
    pub fn coordinate_descent(
        &self,
        lambda: f64,
        tol: f64,
        max_sweeps: usize,
    ) -> Result<CdSolution> {
        self.coordinate_descent_from(vec![0.0; self.d()], lambda, tol, max_sweeps)
    }

    /// Warm-started coordinate descent. Stops when the largest coordinate
    /// change in a sweep drops below `tol`.
    pub fn coordinate_descent_from(
        &self,
        mut beta: Vec<f64>,
        lambda: f64,
        tol: f64,
        max_sweeps: usize,
    ) -> Result<CdSolution> {
        if lambda < 0.0 || !lambda.is_finite() {
            return Err(Error::parameter("lambda", "must be finite and >= 0"));
        }
        if !tol.is_finite() || tol <= 0.0 {
            return Err(Error::parameter("tol", "must be > 0"));
        }
        if beta.len() != self.d() {
            return Err(Error::Dimension {
                expected: self.d(),
                actual: beta.len(),
            });
        }
        let n = self.n();
        let d = self.d();
        let col_sq: Vec<f64> = (0..d)
            .map(|j| self.design.iter().map(|row| row[j] * row[j]).sum())
            .collect();
        // Residual r = y - X beta, maintained across coordinate updates.
        let mut residual: Vec<f64> = self
            .targets
            .iter()
            .zip(&self.design)
            .map(|(y, row)| y - row.iter().zip(&beta).map(|(x, b)| x * b).sum::<f64>())
            .collect();
        let threshold = 0.5 * lambda * n as f64;

        let mut objective_trace = Vec::new();
        for sweep in 1..=max_sweeps {
            let mut max_change = 0.0f64;
            for j in 0..d {
                if col_sq[j] == 0.0 {
                    continue;
                }
                let old = beta[j];
                // Partial correlation of column j with the residual that
                // excludes its own contribution.
                let rho: f64 = self
                    .design
                    .iter()
                    .zip(&residual)
                    .map(|(row, r)| row[j] * (r + row[j] * old))
                    .sum();
                let new = soft_threshold(rho, threshold) / col_sq[j];
                if new != old {
                    let delta = old - new;
                    for (r, row) in residual.iter_mut().zip(&self.design) {
                        *r += row[j] * delta;
                    }
                    beta[j] = new;
                    max_change = max_change.max(delta.abs());
                }
            }
            objective_trace.push(self.objective(&beta, lambda));
            if max_change < tol {
                return Ok(CdSolution {
                    beta,
                    sweeps: sweep,
                    objective_trace,
                });
            }
        }
        Err(Error::NonConvergence {
            iters: max_sweeps,
            last_iterate: beta,
        })
    }

    /// Logarithmically spaced penalty grid from `lambda_max` down to
    /// `lambda_max * decay`, inclusive.
    pub fn default_lambda_grid(&self, count: usize, decay: f64) -> Result<Vec<f64>> {
        if count < 2 {
            return Err(Error::parameter("count", "grid needs at least 2 points"));
        }
        if !(decay > 0.0 && decay < 1.0) {
            return Err(Error::parameter("decay", "must lie in (0,1)"));
        }
        let top = self.lambda_max();
        if top == 0.0 {
            return Err(Error::Inconsistent(
                "lambda_max is zero (targets orthogonal to design)".into(),
            ));
        }
        let log_top = top.ln();
        let log_bottom = (top * decay).ln();
        Ok((0..count)
            .map(|k| {
                let f = k as f64 / (count - 1) as f64;
                (log_top + f * (log_bottom - log_top)).exp()
            })
            .collect())
    }
}

fn soft_threshold(z: f64, gamma: f64) -> f64 {
    if z > gamma {
        z - gamma
    } else if z < -gamma {
        z + gamma
    } else {
        0.0
    }
}

/// Solve along a strictly decreasing penalty grid with warm starts, recording
/// both objectives at each point. The L1 coordinate is exact by construction.
pub fn lasso_path(
    problem: &LassoProblem,
    lambda_grid: &[f64],
    tol: f64,
    max_sweeps: usize,
) -> Result<Vec<LassoPathPoint>> {
    if lambda_grid.is_empty() {
        return Err(Error::Empty("lambda grid"));
    }
    if lambda_grid.windows(2).any(|w| w[0] <= w[1]) {
        return Err(Error::parameter(
            "lambda_grid",
            "must be strictly decreasing",
        ));
    }
    let mut beta = vec![0.0; problem.d()];
    let mut points = Vec::with_capacity(lambda_grid.len());
    for &lambda in lambda_grid {
        let solution = problem.coordinate_descent_from(beta, lambda, tol, max_sweeps)?;
        beta = solution.beta.clone();
        points.push(LassoPathPoint {
            lambda,
            l1_norm: beta.iter().map(|b| b.abs()).sum(),
            empirical_loss: problem.empirical_loss(&beta),
            beta: solution.beta,
        });
    }
    Ok(points)
}
