//! Piecewise-constant binary classifiers on [0,1] under a pure-noise data
//! model: x uniform, label a fair coin. Every hypothesis has true 0/1 risk
//! exactly 1/2, while the training data can always be fit better with more
//! jumps. This is the construction behind the empirical-front
//! counterexample.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::{Error, Result};

/// The data model plus class-size cap `K` (maximum number of segments).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct SegmentationProblem {
    pub max_segments: usize,
}

impl SegmentationProblem {
    pub fn new(max_segments: usize) -> Result<Self> {
        if max_segments == 0 {
            return Err(Error::parameter("max_segments", "must be >= 1"));
        }
        Ok(SegmentationProblem { max_segments })
    }

    /// True 0/1 risk of every hypothesis in the class: labels are a fair
    /// coin independent of x, so no classifier beats 1/2.
    pub const TRUE_RISK: f64 = 0.5;
}

/// A piecewise-constant classifier in minimal representation: adjacent
/// segments carry different labels, so the jump count is exactly
/// `segment_labels.len() - 1`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SegHypothesis {
    jump_positions: Vec<f64>,
    segment_labels: Vec<bool>,
}

impl SegHypothesis {
    /// Build from raw segments, merging adjacent equal labels.
    pub fn new(jump_positions: Vec<f64>, segment_labels: Vec<bool>) -> Result<Self> {
        if segment_labels.is_empty() {
            return Err(Error::Empty("segment labels"));
        }
        if jump_positions.len() + 1 != segment_labels.len() {
            return Err(Error::Dimension {
                expected: segment_labels.len() - 1,
                actual: jump_positions.len(),
            });
        }
        if jump_positions
            .windows(2)
            .any(|w| w[0] >= w[1])
            || jump_positions.iter().any(|&p| !(0.0 < p && p < 1.0))
        {
            return Err(Error::parameter(
                "jump_positions",
                "must be strictly increasing inside (0,1)",
            ));
        }
        let mut merged_jumps = Vec::new();
        let mut merged_labels = vec![segment_labels[0]];
        for (i, &label) in segment_labels.iter().enumerate().skip(1) {
            if label != *merged_labels.last().unwrap() {
                merged_jumps.push(jump_positions[i - 1]);
                merged_labels.push(label);
            }
        }
        Ok(SegHypothesis {
            jump_positions: merged_jumps,
            segment_labels: merged_labels,
        })
    }

    pub fn jump_count(&self) -> usize {
        self.jump_positions.len()
    }

    pub fn jump_positions(&self) -> &[f64] {
        &self.jump_positions
    }

    pub fn segment_labels(&self) -> &[bool] {
        &self.segment_labels
    }

    pub fn predict(&self, x: f64) -> bool {
        let seg = self.jump_positions.partition_point(|&p| p <= x);
        self.segment_labels[seg]
    }

    pub fn empirical_errors(&self, samples: &[(f64, bool)]) -> usize {
        samples
            .iter()
            .filter(|(x, y)| self.predict(*x) != *y)
            .count()
    }
}

/// Draw `n` samples from the pure-noise model, returned sorted by x.
/// Ties in x (a measure-zero event) keep their draw order.
pub fn sample_segmentation_data(n: usize, seed: u64) -> Vec<(f64, bool)> {
    let mut rng = stream_rng(seed, 3);
    let mut samples: Vec<(f64, bool)> = (0..n)
        .map(|_| (rng.random::<f64>(), rng.random::<bool>()))
        .collect();
    samples.sort_by(|a, b| a.0.partial_cmp(&b.0).unwrap());
    samples
}

/// Maximal runs of equal labels: (label, count), plus prefix error tables.
struct Runs {
    labels: Vec<bool>,
    /// prefix_true[r] = number of true labels in runs[0..r]
    prefix_true: Vec<usize>,
    /// prefix_len[r] = number of samples in runs[0..r]
    prefix_len: Vec<usize>,
    /// Sample index one past the end of each run.
    end_sample: Vec<usize>,
}

impl Runs {
    fn build(samples: &[(f64, bool)]) -> Self {
        let mut labels = Vec::new();
        let mut counts: Vec<usize> = Vec::new();
        let mut end_sample: Vec<usize> = Vec::new();
        for (idx, &(_, y)) in samples.iter().enumerate() {
            if labels.last() == Some(&y) {
                *counts.last_mut().unwrap() += 1;
                *end_sample.last_mut().unwrap() = idx + 1;
            } else {
                labels.push(y);
                counts.push(1);
                end_sample.push(idx + 1);
            }
        }
        let mut prefix_true = vec![0usize];
        let mut prefix_len = vec![0usize];
        for (label, count) in labels.iter().zip(&counts) {
            prefix_true.push(prefix_true.last().unwrap() + if *label { *count } else { 0 });
            prefix_len.push(prefix_len.last().unwrap() + count);
        }
        Runs {
            labels,
            prefix_true,
            prefix_len,
            end_sample,
        }
    }

    fn len(&self) -> usize {
        self.labels.len()
    }

    /// Best constant-label error over runs [l, r) (half-open, run indices).
    fn segment_cost(&self, l: usize, r: usize) -> usize {
        let trues = self.prefix_true[r] - self.prefix_true[l];
        let total = self.prefix_len[r] - self.prefix_len[l];
        trues.min(total - trues)
    }

    /// Label achieving the segment cost; ties predict false.
    fn segment_label(&self, l: usize, r: usize) -> bool {
        let trues = self.prefix_true[r] - self.prefix_true[l];
        let total = self.prefix_len[r] - self.prefix_len[l];
        trues > total - trues
    }
}

/// Error-minimizing segmentation DP.
///
/// `table[j][r]` = minimum empirical errors over the first `r` runs using at
/// most `j` jumps. Restricting jump positions to run boundaries is lossless:
/// within a run the per-step error change of moving a boundary is constant,
/// so some optimum has all boundaries at run ends.
struct ErmTable {
    table: Vec<Vec<usize>>,
}

#[allow(clippy::needless_range_loop)]
fn erm_table(runs: &Runs, max_jumps: usize) -> ErmTable {
    let m = runs.len();
    let mut table = Vec::with_capacity(max_jumps + 1);
    let mut base = Vec::with_capacity(m + 1);
    base.push(0usize);
    for r in 1..=m {
        base.push(runs.segment_cost(0, r));
    }
    table.push(base);
    for j in 1..=max_jumps {
        let prev = &table[j - 1];
        let mut row = vec![0usize; m + 1];
        for r in 1..=m {
            let mut best = prev[r];
            // New last segment starts at run l (needs l >= 1 to spend a jump).
            for l in 1..r {
                let candidate = prev[l] + runs.segment_cost(l, r);
                if candidate < best {
                    best = candidate;
                }
            }
            row[r] = best;
        }
        table.push(row);
    }
    ErmTable { table }
}

/// Backtrack one optimal hypothesis with at most `max_jumps` jumps.
fn backtrack(
    runs: &Runs,
    table: &ErmTable,
    samples: &[(f64, bool)],
    max_jumps: usize,
) -> SegHypothesis {
    let m = runs.len();
    let mut boundaries: Vec<usize> = Vec::new(); // run indices where segments start
    let mut r = m;
    let mut j = max_jumps.min(table.table.len() - 1);
    while r > 0 {
        if j == 0 {
            boundaries.push(0);
            break;
        }
        let target = table.table[j][r];
        if table.table[j - 1][r] == target {
            j -= 1;
            continue;
        }
        let mut found = 0;
        for l in 1..r {
            if table.table[j - 1][l] + runs.segment_cost(l, r) == target {
                found = l;
                break;
            }
        }
        boundaries.push(found);
        r = found;
        j -= 1;
    }
    boundaries.reverse();

    let mut labels = Vec::with_capacity(boundaries.len());
    let mut jump_positions = Vec::with_capacity(boundaries.len().saturating_sub(1));
    for (k, &start) in boundaries.iter().enumerate() {
        let end = boundaries.get(k + 1).copied().unwrap_or(m);
        labels.push(runs.segment_label(start, end));
        if k > 0 {
            // Midpoint between the last sample of the previous segment and
            // the first sample of this one.
            let sample_ix = runs.end_sample[start - 1];
            let left = samples[sample_ix - 1].0;
            let right = samples[sample_ix].0;
            jump_positions.push(midpoint_in_unit(left, right));
        }
    }
    SegHypothesis::new(jump_positions, labels).expect("DP produces a valid hypothesis")
}

fn midpoint_in_unit(left: f64, right: f64) -> f64 {
    let mid = 0.5 * (left + right);
    // Keep jump positions strictly inside (0,1) even for boundary samples.
    mid.clamp(f64::MIN_POSITIVE, 1.0 - f64::EPSILON)
}

/// Global empirical-error minimizer among hypotheses with at most
/// `max_jumps` jumps. Samples must be sorted by x.
pub fn segmentation_erm(
    samples: &[(f64, bool)],
    max_jumps: usize,
) -> Result<(SegHypothesis, usize)> {
    if samples.is_empty() {
        return Err(Error::Empty("samples"));
    }
    debug_assert!(samples.windows(2).all(|w| w[0].0 <= w[1].0));
    let runs = Runs::build(samples);
    let table = erm_table(&runs, max_jumps.min(runs.len().saturating_sub(1)));
    let errors = *table.table.last().unwrap().last().unwrap();
    let hypothesis = backtrack(&runs, &table, samples, max_jumps);
    debug_assert!(hypothesis.jump_count() <= max_jumps);
    debug_assert_eq!(hypothesis.empirical_errors(samples), errors);
    Ok((hypothesis, errors))
}

/// Minimum empirical errors for every jump budget `k = 0 .. max_segments-1`.
/// The returned errors are non-increasing in k.
pub fn segmentation_empirical_front(
    samples: &[(f64, bool)],
    max_segments: usize,
) -> Result<Vec<(usize, usize)>> {
    if samples.is_empty() {
        return Err(Error::Empty("samples"));
    }
    if max_segments == 0 {
        return Err(Error::parameter("max_segments", "must be >= 1"));
    }
    let runs = Runs::build(samples);
    let cap = (max_segments - 1).min(runs.len().saturating_sub(1));
    let table = erm_table(&runs, cap);
    Ok((0..max_segments)
        .map(|k| {
            let j = k.min(cap);
            (k, *table.table[j].last().unwrap())
        })
        .collect())
}

/// The empirically Pareto-optimal (jump count, error) pairs of a front:
/// the zero-jump point plus every budget whose error strictly improves on
/// the previous one.
pub fn empirical_pareto_pairs(front: &[(usize, usize)]) -> Vec<(usize, usize)> {
    let mut out = Vec::new();
    for (ix, &(k, e)) in front.iter().enumerate() {
        if ix == 0 || e < front[ix - 1].1 {
            out.push((k, e));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn labeled(labels: &[u8]) -> Vec<(f64, bool)> {
        labels
            .iter()
            .enumerate()
            .map(|(i, &y)| ((i as f64 + 1.0) / (labels.len() as f64 + 1.0), y == 1))
            .collect()
    }

    /// Exhaustive minimum over all jump placements with at most `k` jumps.
    fn exhaustive_min_errors(samples: &[(f64, bool)], k: usize) -> usize {
        let n = samples.len();
        let mut best = usize::MAX;
        // Choose jump gaps as bitmask over the n-1 gaps with <= k bits.
        for mask in 0u32..(1 << (n - 1)) {
            if mask.count_ones() as usize > k {
                continue;
            }
            let mut errors = 0;
            let mut start = 0;
            for gap in 0..n {
                let is_end = gap == n - 1 || (mask >> gap) & 1 == 1;
                if is_end {
                    let seg = &samples[start..=gap];
                    let ones = seg.iter().filter(|(_, y)| *y).count();
                    errors += ones.min(seg.len() - ones);
                    start = gap + 1;
                }
            }
            best = best.min(errors);
        }
        best
    }

    #[test]
    fn alternating_labels_examples() {
        let samples = labeled(&[0, 1, 0, 1]);
        assert_eq!(segmentation_erm(&samples, 0).unwrap().1, 2);
        assert_eq!(segmentation_erm(&samples, 1).unwrap().1, 1);
        assert_eq!(segmentation_erm(&samples, 3).unwrap().1, 0);
    }

    #[test]
    fn single_jump_matches_exhaustive_search() {
        let samples = labeled(&[0, 1, 0, 1]);
        assert_eq!(
            segmentation_erm(&samples, 1).unwrap().1,
            exhaustive_min_errors(&samples, 1)
        );
    }

    #[test]
    fn dp_matches_exhaustive_on_random_instances() {
        for seed in 0..40u64 {
            let mut rng = stream_rng(seed, 0);
            let n = 4 + (rng.random::<u32>() as usize) % 9; // 4..=12
            let samples = sample_segmentation_data(n, seed);
            for k in 0..=4usize {
                let (h, dp) = segmentation_erm(&samples, k).unwrap();
                assert_eq!(dp, exhaustive_min_errors(&samples, k), "seed {seed} k {k}");
                assert!(h.jump_count() <= k);
                assert_eq!(h.empirical_errors(&samples), dp);
            }
        }
    }

    #[test]
    fn front_is_monotone_and_ends_at_zero_for_alternating_labels() {
        let samples = labeled(&[0, 1, 0, 1, 0, 1]);
        let front = segmentation_empirical_front(&samples, 6).unwrap();
        assert_eq!(front.len(), 6);
        for w in front.windows(2) {
            assert!(w[1].1 <= w[0].1);
        }
        assert_eq!(front.last().unwrap(), &(5, 0));
    }

    #[test]
    fn constant_labels_collapse_to_single_front_point() {
        let samples = labeled(&[1, 1, 1, 1]);
        let front = segmentation_empirical_front(&samples, 4).unwrap();
        assert_eq!(front[0], (0, 0));
        assert_eq!(empirical_pareto_pairs(&front), vec![(0, 0)]);
    }

    #[test]
    fn pareto_pairs_keep_only_strict_improvements() {
        let front = vec![(0, 5), (1, 3), (2, 3), (3, 1), (4, 1)];
        assert_eq!(empirical_pareto_pairs(&front), vec![(0, 5), (1, 3), (3, 1)]);
    }

    #[test]
    fn hypothesis_merges_equal_adjacent_labels() {
        let h = SegHypothesis::new(vec![0.2, 0.5, 0.7], vec![true, true, false, false]).unwrap();
        assert_eq!(h.jump_count(), 1);
        assert_eq!(h.segment_labels(), &[true, false]);
        assert_eq!(h.jump_positions(), &[0.5]);
        assert!(h.predict(0.3));
        assert!(!h.predict(0.6));
    }

    #[test]
    fn hypothesis_validation() {
        assert!(SegHypothesis::new(vec![], vec![]).is_err());
        assert!(SegHypothesis::new(vec![0.5], vec![true]).is_err());
        assert!(SegHypothesis::new(vec![0.7, 0.3], vec![true, false, true]).is_err());
        assert!(SegHypothesis::new(vec![0.0], vec![true, false]).is_err());
    }

    #[test]
    fn erm_jump_positions_are_sample_midpoints() {
        let samples = vec![(0.1, false), (0.3, true), (0.8, true)];
        let (h, errors) = segmentation_erm(&samples, 2).unwrap();
        assert_eq!(errors, 0);
        assert_eq!(h.jump_count(), 1);
        assert!((h.jump_positions()[0] - 0.2).abs() < 1e-12);
    }

    #[test]
    fn sampling_is_sorted_and_deterministic() {
        let a = sample_segmentation_data(100, 5);
        let b = sample_segmentation_data(100, 5);
        assert_eq!(a, b);
        assert!(a.windows(2).all(|w| w[0].0 <= w[1].0));
    }

    use crate::rng::stream_rng;
}
