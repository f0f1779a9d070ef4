//! The empirical-front counterexample demonstration.
//!
//! On the pure-noise segmentation problem the true Pareto set is the two
//! constant classifiers (zero jumps, risk exactly 1/2), yet with enough
//! samples the empirical front almost always contains hypotheses whose jump
//! count exceeds any fixed threshold, because extra jumps keep strictly
//! reducing training error. A trial succeeds when the empirical front
//! contains a hypothesis with more than `threshold` jumps; the demonstrated
//! claim is success probability at least one half.

use rayon::prelude::*;

use crate::rng::derive_seed;
use crate::testbeds::{
    empirical_pareto_pairs, sample_segmentation_data, segmentation_empirical_front,
    SegmentationProblem,
};
use crate::verify::report::{FrequencyDirection, FrequencyReport, TrialReport};
use crate::{Error, Result};

/// Success floor demonstrated by the construction.
pub const SUCCESS_FLOOR: f64 = 0.5;

pub fn demonstrate_impossibility(
    n: usize,
    max_segments: usize,
    threshold: usize,
    trials: usize,
    master_seed: u64,
) -> Result<FrequencyReport> {
    if n == 0 || trials == 0 {
        return Err(Error::parameter("n/trials", "must be >= 1"));
    }
    let problem = SegmentationProblem::new(max_segments)?;
    if max_segments < threshold + 2 {
        return Err(Error::Config(format!(
            "max_segments {max_segments} leaves no room for a hypothesis beyond threshold {threshold}; need at least {}",
            threshold + 2
        )));
    }

    let trial_reports: Vec<TrialReport> = (0..trials)
        .into_par_iter()
        .map(|trial| {
            let seed = derive_seed(master_seed, trial as u64);
            let samples = sample_segmentation_data(n, seed);
            let front = segmentation_empirical_front(&samples, problem.max_segments)
                .expect("non-empty samples");
            let pairs = empirical_pareto_pairs(&front);
            // A strict error improvement at budget k certifies an optimal
            // hypothesis with exactly k jumps on the empirical front.
            let max_jumps = pairs.last().map(|&(k, _)| k).unwrap_or(0);
            let event = max_jumps > threshold;
            TrialReport {
                trial,
                seed,
                event,
                worst_margin: max_jumps as f64 - threshold as f64,
                empirical_pareto: None,
                witness: None,
                front_pairs: Some(pairs),
            }
        })
        .collect();

    Ok(FrequencyReport::from_trials(
        "impossibility",
        master_seed,
        None,
        None,
        SUCCESS_FLOOR,
        FrequencyDirection::AtLeast,
        trial_reports,
    )
    .with_note("n", n)
    .with_note("max_segments", max_segments)
    .with_note("threshold", threshold)
    .with_note("true_front", vec![(0usize, SegmentationProblem::TRUE_RISK)])
    .with_note("true_pareto_hypotheses", "the two constant classifiers"))
}
