//! Monte Carlo harnesses over finite problems. Each trial draws a fresh
//! dataset, recomputes the empirical objectives, and checks one theorem's
//! inequality exactly; the aggregate frequency is compared against the
//! claimed failure probability plus two binomial standard deviations.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bounds::{multi_objective_terms, GeneralizationTermSpec, TermKind};
use crate::moo::{pareto_filter, ObjectiveVector, ParetoSet};
use crate::rng::derive_seed;
use crate::testbeds::FiniteProblem;
use crate::verify::report::{
    binomial_ceiling, CheckOutcome, FrequencyDirection, FrequencyReport, TrialReport,
    ViolationWitness,
};
use crate::verify::sweep::{generate_sweep, SweepSpec};
use crate::{Error, Result};

/// Stream index reserved for sweep generation (trial indices use 0..trials).
const SWEEP_STREAM: u64 = 1 << 40;

/// Shared harness parameters.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct VerificationConfig {
    /// Dataset size per trial.
    pub n: usize,
    pub delta: f64,
    pub trials: usize,
    pub master_seed: u64,
    /// Per-objective sample counts: objective `i` is estimated from the
    /// first `subset_sizes[i]` samples of each trial's dataset. `None` means
    /// every objective uses the full dataset.
    #[serde(default)]
    pub subset_sizes: Option<Vec<usize>>,
    /// Slack beyond which an inequality counts as violated.
    #[serde(default = "default_violation_tolerance")]
    pub violation_tolerance: f64,
    /// Widening of argmin tie sets in the excess checks.
    #[serde(default)]
    pub tie_tolerance: f64,
}

fn default_violation_tolerance() -> f64 {
    1e-12
}

impl VerificationConfig {
    pub fn new(n: usize, delta: f64, trials: usize, master_seed: u64) -> Result<Self> {
        let cfg = VerificationConfig {
            n,
            delta,
            trials,
            master_seed,
            subset_sizes: None,
            violation_tolerance: default_violation_tolerance(),
            tie_tolerance: 0.0,
        };
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 {
            return Err(Error::parameter("n", "must be >= 1"));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::parameter("delta", "must lie in (0,1)"));
        }
        if self.trials == 0 {
            return Err(Error::parameter("trials", "must be >= 1"));
        }
        if let Some(sizes) = &self.subset_sizes {
            if sizes.iter().any(|&s| s == 0 || s > self.n) {
                return Err(Error::parameter(
                    "subset_sizes",
                    "each per-objective count must lie in 1..=n",
                ));
            }
        }
        if self.violation_tolerance < 0.0 || self.tie_tolerance < 0.0 {
            return Err(Error::parameter("tolerances", "must be >= 0"));
        }
        Ok(())
    }
}

/// Parameters of the ray-completeness precondition check.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RayCheckConfig {
    pub resolution: usize,
    pub tolerance: f64,
    pub allow_axis_points: bool,
}

impl Default for RayCheckConfig {
    fn default() -> Self {
        RayCheckConfig {
            resolution: 90,
            tolerance: 0.02,
            allow_axis_points: true,
        }
    }
}

/// Hoeffding terms for non-trivial objectives, zero terms for trivial ones.
pub fn default_hoeffding_specs(problem: &FiniteProblem) -> Vec<GeneralizationTermSpec> {
    problem
        .trivial_mask()
        .iter()
        .enumerate()
        .map(|(i, &trivial)| {
            if trivial {
                GeneralizationTermSpec::trivial(i)
            } else {
                GeneralizationTermSpec {
                    kind: TermKind::HoeffdingFinite {
                        class_size: problem.num_hypotheses(),
                        loss_bound: problem.loss_bound(),
                    },
                    objective_index: i,
                }
            }
        })
        .collect()
}

/// Precomputed quantities shared by every trial of a harness run.
struct HarnessContext<'a> {
    problem: &'a FiniteProblem,
    cfg: &'a VerificationConfig,
    truth: Vec<Vec<f64>>,
    true_pareto: ParetoSet,
    terms: Vec<f64>,
    /// Prefix subsets when per-objective sample counts are configured.
    subsets: Option<Vec<Vec<usize>>>,
}

impl HarnessContext<'_> {
    fn empirical(&self, dataset: &crate::testbeds::Dataset) -> Result<Vec<Vec<f64>>> {
        self.problem
            .empirical_objectives_with_subsets(dataset, self.subsets.as_deref())
    }
}

fn build_context<'a>(
    problem: &'a FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &'a VerificationConfig,
) -> Result<HarnessContext<'a>> {
    cfg.validate()?;
    let num_objectives = problem.num_objectives();
    if specs.is_empty() {
        return Err(Error::Config("no generalization term specs supplied".into()));
    }
    if specs.len() != num_objectives {
        return Err(Error::Config(format!(
            "expected {num_objectives} term specs, got {}",
            specs.len()
        )));
    }
    for (i, spec) in specs.iter().enumerate() {
        if spec.objective_index != i {
            return Err(Error::Config(format!(
                "term spec at position {i} targets objective {}",
                spec.objective_index
            )));
        }
    }
    let per_objective_n = match &cfg.subset_sizes {
        Some(sizes) => {
            if sizes.len() != num_objectives {
                return Err(Error::Config(format!(
                    "expected {num_objectives} subset sizes, got {}",
                    sizes.len()
                )));
            }
            sizes.clone()
        }
        None => vec![cfg.n; num_objectives],
    };
    let subsets = cfg
        .subset_sizes
        .as_ref()
        .map(|sizes| sizes.iter().map(|&s| (0..s).collect()).collect());
    let terms = multi_objective_terms(specs, &per_objective_n, cfg.delta)?;
    let truth = problem.true_objectives();
    let true_pareto = pareto_filter(&rows_to_vectors(&truth))?;
    Ok(HarnessContext {
        problem,
        cfg,
        truth,
        true_pareto,
        terms,
        subsets,
    })
}

fn rows_to_vectors(rows: &[Vec<f64>]) -> Vec<ObjectiveVector> {
    rows.iter()
        .map(|r| ObjectiveVector::new(r.clone()).expect("finite objective rows"))
        .collect()
}

/// Run trials in parallel; each trial derives its own seed, so the result is
/// independent of thread count and execution order.
fn run_trials(
    cfg: &VerificationConfig,
    body: impl Fn(usize, u64) -> Result<TrialReport> + Sync,
) -> Result<Vec<TrialReport>> {
    (0..cfg.trials)
        .into_par_iter()
        .map(|trial| body(trial, derive_seed(cfg.master_seed, trial as u64)))
        .collect::<Vec<Result<TrialReport>>>()
        .into_iter()
        .collect()
}

fn finish(
    harness: &str,
    ctx: &HarnessContext,
    trial_reports: Vec<TrialReport>,
) -> FrequencyReport {
    FrequencyReport::from_trials(
        harness,
        ctx.cfg.master_seed,
        Some(ctx.cfg.delta),
        Some(ctx.terms.clone()),
        binomial_ceiling(ctx.cfg.delta, ctx.cfg.trials),
        FrequencyDirection::AtMost,
        trial_reports,
    )
    .with_note("n", ctx.cfg.n)
    .with_note("hypotheses", ctx.problem.num_hypotheses())
    .with_note("true_pareto_ids", &ctx.true_pareto.member_ids)
}

/// Per-objective uniform deviation: every hypothesis's empirical objective
/// stays within its generalization term, simultaneously across objectives.
pub fn verify_lemma1(
    problem: &FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &VerificationConfig,
) -> Result<FrequencyReport> {
    let ctx = build_context(problem, specs, cfg)?;
    let tol = cfg.violation_tolerance;
    let trials = run_trials(cfg, |trial, seed| {
        let dataset = problem.sample_dataset(cfg.n, seed)?;
        let empirical = ctx.empirical(&dataset)?;
        let mut worst = f64::NEG_INFINITY;
        let mut at = (0usize, 0usize);
        for (h, (t_row, e_row)) in ctx.truth.iter().zip(&empirical).enumerate() {
            for i in 0..t_row.len() {
                let margin = (t_row[i] - e_row[i]).abs() - ctx.terms[i];
                if margin > worst {
                    worst = margin;
                    at = (h, i);
                }
            }
        }
        let event = worst > tol;
        Ok(TrialReport {
            trial,
            seed,
            event,
            worst_margin: worst,
            empirical_pareto: None,
            witness: event.then_some(ViolationWitness {
                hypothesis: Some(at.0),
                reference_hypothesis: None,
                objective: Some(at.1),
                scalarization: None,
                margin: worst,
            }),
            front_pairs: None,
        })
    })?;
    Ok(finish("lemma1", &ctx, trials))
}

/// Scalarized generalization (deviation within `rhs`) and excess (every
/// empirical minimizer within `2 rhs` of the class optimum), uniformly over
/// a sampled scalarization family: a trial fails if any member fails.
pub fn verify_scalarization(
    problem: &FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &VerificationConfig,
    sweep_spec: &SweepSpec,
) -> Result<FrequencyReport> {
    let ctx = build_context(problem, specs, cfg)?;
    let sweep = generate_sweep(
        sweep_spec,
        problem.num_objectives(),
        derive_seed(cfg.master_seed, SWEEP_STREAM),
    )?;
    let rhs_values: Vec<f64> = sweep
        .iter()
        .map(|u| u.rhs(&ctx.terms))
        .collect::<Result<_>>()?;
    let tol = cfg.violation_tolerance;
    let tie_tol = cfg.tie_tolerance;

    let trials = run_trials(cfg, |trial, seed| {
        let dataset = problem.sample_dataset(cfg.n, seed)?;
        let empirical = ctx.empirical(&dataset)?;
        let mut worst = f64::NEG_INFINITY;
        let mut witness: Option<ViolationWitness> = None;
        let mut true_vals = vec![0.0; ctx.truth.len()];
        let mut emp_vals = vec![0.0; ctx.truth.len()];

        for (u_ix, u) in sweep.iter().enumerate() {
            let rhs = rhs_values[u_ix];
            let mut gen_worst = f64::NEG_INFINITY;
            let mut gen_at = 0usize;
            for (h, (t_row, e_row)) in ctx.truth.iter().zip(&empirical).enumerate() {
                let tv = u.evaluate(t_row)?;
                let ev = u.evaluate(e_row)?;
                true_vals[h] = tv;
                emp_vals[h] = ev;
                let margin = (tv - ev).abs() - rhs;
                if margin > gen_worst {
                    gen_worst = margin;
                    gen_at = h;
                }
            }
            if gen_worst > worst {
                worst = gen_worst;
                witness = Some(ViolationWitness {
                    hypothesis: Some(gen_at),
                    reference_hypothesis: None,
                    objective: None,
                    scalarization: Some(u_ix),
                    margin: gen_worst,
                });
            }

            let min_emp = emp_vals.iter().cloned().fold(f64::INFINITY, f64::min);
            let mut tie_max_true = f64::NEG_INFINITY;
            let mut tie_at = 0usize;
            let mut min_true = f64::INFINITY;
            let mut min_true_at = 0usize;
            for h in 0..emp_vals.len() {
                if emp_vals[h] <= min_emp + tie_tol && true_vals[h] > tie_max_true {
                    tie_max_true = true_vals[h];
                    tie_at = h;
                }
                if true_vals[h] < min_true {
                    min_true = true_vals[h];
                    min_true_at = h;
                }
            }
            let excess_margin = tie_max_true - min_true - 2.0 * rhs;
            if excess_margin > worst {
                worst = excess_margin;
                witness = Some(ViolationWitness {
                    hypothesis: Some(tie_at),
                    reference_hypothesis: Some(min_true_at),
                    objective: None,
                    scalarization: Some(u_ix),
                    margin: excess_margin,
                });
            }
        }
        let event = worst > tol;
        Ok(TrialReport {
            trial,
            seed,
            event,
            worst_margin: worst,
            empirical_pareto: None,
            witness: if event { witness } else { None },
            front_pairs: None,
        })
    })?;
    Ok(finish("scalarization", &ctx, trials).with_note("sweep_size", sweep.len()))
}

/// One-objective-at-a-time excess: each empirically Pareto-optimal hypothesis
/// beats every hypothesis in at least one objective up to twice the term.
/// The check runs against all hypotheses, the strengthened form.
pub fn verify_pareto_single(
    problem: &FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &VerificationConfig,
) -> Result<FrequencyReport> {
    let ctx = build_context(problem, specs, cfg)?;
    let tol = cfg.violation_tolerance;
    let trials = run_trials(cfg, |trial, seed| {
        let dataset = problem.sample_dataset(cfg.n, seed)?;
        let empirical = ctx.empirical(&dataset)?;
        let empirical_set = pareto_filter(&rows_to_vectors(&empirical))?;
        let mut worst = f64::NEG_INFINITY;
        let mut at = (0usize, 0usize);
        for &candidate in &empirical_set.member_ids {
            for h in 0..ctx.truth.len() {
                // Satisfied if SOME objective i has lhs - rhs <= tol.
                let pair_margin = (0..ctx.terms.len())
                    .map(|i| ctx.truth[candidate][i] - ctx.truth[h][i] - 2.0 * ctx.terms[i])
                    .fold(f64::INFINITY, f64::min);
                if pair_margin > worst {
                    worst = pair_margin;
                    at = (candidate, h);
                }
            }
        }
        let event = worst > tol;
        Ok(TrialReport {
            trial,
            seed,
            event,
            worst_margin: worst,
            empirical_pareto: Some(empirical_set.member_ids),
            witness: event.then_some(ViolationWitness {
                hypothesis: Some(at.0),
                reference_hypothesis: Some(at.1),
                objective: None,
                scalarization: None,
                margin: worst,
            }),
            front_pairs: None,
        })
    })?;
    Ok(finish("pareto-single", &ctx, trials))
}

/// Forward matching: every truly Pareto-optimal hypothesis has an empirically
/// Pareto-optimal approximant within twice the terms in every objective.
pub fn verify_pareto_forward(
    problem: &FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &VerificationConfig,
) -> Result<FrequencyReport> {
    let ctx = build_context(problem, specs, cfg)?;
    let tol = cfg.violation_tolerance;
    let trials = run_trials(cfg, |trial, seed| {
        let dataset = problem.sample_dataset(cfg.n, seed)?;
        let empirical = ctx.empirical(&dataset)?;
        let empirical_set = pareto_filter(&rows_to_vectors(&empirical))?;
        let mut worst = f64::NEG_INFINITY;
        let mut at = (0usize, 0usize);
        for &target in &ctx.true_pareto.member_ids {
            // Best witness: the candidate minimizing its worst objective gap.
            let mut best = f64::INFINITY;
            let mut best_candidate = empirical_set.member_ids[0];
            for &candidate in &empirical_set.member_ids {
                let gap = (0..ctx.terms.len())
                    .map(|i| ctx.truth[candidate][i] - ctx.truth[target][i] - 2.0 * ctx.terms[i])
                    .fold(f64::NEG_INFINITY, f64::max);
                if gap < best {
                    best = gap;
                    best_candidate = candidate;
                }
            }
            if best > worst {
                worst = best;
                at = (target, best_candidate);
            }
        }
        let event = worst > tol;
        Ok(TrialReport {
            trial,
            seed,
            event,
            worst_margin: worst,
            empirical_pareto: Some(empirical_set.member_ids),
            witness: event.then_some(ViolationWitness {
                hypothesis: Some(at.1),
                reference_hypothesis: Some(at.0),
                objective: None,
                scalarization: None,
                margin: worst,
            }),
            front_pairs: None,
        })
    })?;
    Ok(finish("pareto-forward", &ctx, trials))
}

/// Backward matching under the ray-complete precondition: every empirically
/// Pareto-optimal hypothesis has a truly Pareto-optimal approximant within
/// twice the terms in every objective. If the true front fails the ray
/// check, the report is NOT-APPLICABLE and carries the coverage fraction.
pub fn verify_pareto_backward(
    problem: &FiniteProblem,
    specs: &[GeneralizationTermSpec],
    cfg: &VerificationConfig,
    ray: &RayCheckConfig,
) -> Result<FrequencyReport> {
    let ctx = build_context(problem, specs, cfg)?;
    let ray_report = crate::moo::ray_completeness_check(
        &ctx.true_pareto.front,
        ray.resolution,
        ray.tolerance,
        ray.allow_axis_points,
    )?;
    if !ray_report.is_complete() {
        let mut report = finish("pareto-backward", &ctx, Vec::new());
        report.outcome = CheckOutcome::NotApplicable;
        return Ok(report
            .with_note("ray_completeness_fraction", ray_report.fraction_covered)
            .with_note("ray_tolerance", ray.tolerance)
            .with_note("ray_resolution", ray.resolution));
    }

    let tol = cfg.violation_tolerance;
    let trials = run_trials(cfg, |trial, seed| {
        let dataset = problem.sample_dataset(cfg.n, seed)?;
        let empirical = ctx.empirical(&dataset)?;
        let empirical_set = pareto_filter(&rows_to_vectors(&empirical))?;
        let mut worst = f64::NEG_INFINITY;
        let mut at = (0usize, 0usize);
        for &candidate in &empirical_set.member_ids {
            let mut best = f64::INFINITY;
            let mut best_target = ctx.true_pareto.member_ids[0];
            for &target in &ctx.true_pareto.member_ids {
                let gap = (0..ctx.terms.len())
                    .map(|i| ctx.truth[candidate][i] - ctx.truth[target][i] - 2.0 * ctx.terms[i])
                    .fold(f64::NEG_INFINITY, f64::max);
                if gap < best {
                    best = gap;
                    best_target = target;
                }
            }
            if best > worst {
                worst = best;
                at = (candidate, best_target);
            }
        }
        let event = worst > tol;
        Ok(TrialReport {
            trial,
            seed,
            event,
            worst_margin: worst,
            empirical_pareto: Some(empirical_set.member_ids),
            witness: event.then_some(ViolationWitness {
                hypothesis: Some(at.0),
                reference_hypothesis: Some(at.1),
                objective: None,
                scalarization: None,
                margin: worst,
            }),
            front_pairs: None,
        })
    })?;
    Ok(finish("pareto-backward", &ctx, trials)
        .with_note("ray_completeness_fraction", ray_report.fraction_covered)
        .with_note("ray_tolerance", ray.tolerance)
        .with_note("ray_resolution", ray.resolution))
}
