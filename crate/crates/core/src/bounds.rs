//! Generalization-term calculus.
//!
//! Per-objective terms bound the uniform deviation |true - empirical| for one
//! objective at confidence 1 - delta'. The multi-objective budget splits a
//! global delta across the non-trivial objectives by a union bound; trivially
//! generalizing objectives (data-independent, term identically zero) consume
//! no budget because their bound holds surely.
//!
//! The module also provides empirical Rademacher estimation over a finite
//! class and the two cover-based uniform bounds compared in the weighted-sum
//! scalarization study: a cover-size-dependent right-hand side and the
//! cover-free one whose confidence term grows only logarithmically in the
//! number of objectives.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::{Error, Result};

/// How a per-objective generalization term is computed.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum TermKind {
    /// Finite-class Hoeffding bound for losses in [0, M]:
    /// `M * sqrt(ln(2 |H| / delta') / (2 n))`.
    HoeffdingFinite { class_size: usize, loss_bound: f64 },
    /// Data-independent objective: the term is 0 for every n and delta.
    TrivialZero,
    /// Tabulated term values by sample count, interpolated linearly in n and
    /// clamped outside the table range. Entries must be sorted by n.
    UserTable { values_by_n: Vec<(usize, f64)> },
}

/// A generalization term attached to one objective.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct GeneralizationTermSpec {
    pub kind: TermKind,
    pub objective_index: usize,
}

impl GeneralizationTermSpec {
    pub fn hoeffding(objective_index: usize, class_size: usize, loss_bound: f64) -> Result<Self> {
        if class_size == 0 {
            return Err(Error::parameter("class_size", "must be >= 1"));
        }
        if loss_bound <= 0.0 || !loss_bound.is_finite() {
            return Err(Error::Positivity {
                name: "loss_bound",
                value: loss_bound,
            });
        }
        Ok(GeneralizationTermSpec {
            kind: TermKind::HoeffdingFinite {
                class_size,
                loss_bound,
            },
            objective_index,
        })
    }

    pub fn trivial(objective_index: usize) -> Self {
        GeneralizationTermSpec {
            kind: TermKind::TrivialZero,
            objective_index,
        }
    }

    pub fn table(objective_index: usize, values_by_n: Vec<(usize, f64)>) -> Result<Self> {
        if values_by_n.is_empty() {
            return Err(Error::Empty("user table"));
        }
        if values_by_n.windows(2).any(|w| w[0].0 >= w[1].0) {
            return Err(Error::parameter(
                "values_by_n",
                "sample counts must be strictly increasing",
            ));
        }
        if values_by_n.iter().any(|(_, v)| *v < 0.0 || !v.is_finite()) {
            return Err(Error::parameter("values_by_n", "term values must be finite and >= 0"));
        }
        Ok(GeneralizationTermSpec {
            kind: TermKind::UserTable { values_by_n },
            objective_index,
        })
    }

    pub fn is_trivial(&self) -> bool {
        matches!(self.kind, TermKind::TrivialZero)
    }
}

/// Evaluate a term at sample count `n` and confidence share `delta_prime`.
pub fn evaluate_term(spec: &GeneralizationTermSpec, n: usize, delta_prime: f64) -> Result<f64> {
    if n == 0 {
        return Err(Error::parameter("n", "must be >= 1"));
    }
    if !(delta_prime > 0.0 && delta_prime < 1.0) {
        return Err(Error::parameter(
            "delta_prime",
            format!("must lie in (0,1), got {delta_prime}"),
        ));
    }
    Ok(match &spec.kind {
        TermKind::TrivialZero => 0.0,
        TermKind::HoeffdingFinite {
            class_size,
            loss_bound,
        } => {
            loss_bound
                * ((2.0 * *class_size as f64 / delta_prime).ln() / (2.0 * n as f64)).sqrt()
        }
        TermKind::UserTable { values_by_n } => {
            let first = values_by_n[0];
            let last = values_by_n[values_by_n.len() - 1];
            if n <= first.0 {
                first.1
            } else if n >= last.0 {
                last.1
            } else {
                let hi = values_by_n.partition_point(|(m, _)| *m < n);
                let (n1, v1) = values_by_n[hi - 1];
                let (n2, v2) = values_by_n[hi];
                if n2 == n {
                    v2
                } else {
                    let frac = (n - n1) as f64 / (n2 - n1) as f64;
                    v1 + frac * (v2 - v1)
                }
            }
        }
    })
}

/// The confidence budget after splitting `delta` across non-trivial objectives.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ConfidenceBudget {
    pub delta: f64,
    pub nontrivial_count: usize,
    pub delta_prime: f64,
}

/// Union-bound split: `delta_prime = delta / max(nontrivial, 1)`.
pub fn split_confidence(delta: f64, specs: &[GeneralizationTermSpec]) -> Result<ConfidenceBudget> {
    if !(delta > 0.0 && delta < 1.0) {
        return Err(Error::parameter(
            "delta",
            format!("must lie in (0,1), got {delta}"),
        ));
    }
    let nontrivial_count = specs.iter().filter(|s| !s.is_trivial()).count();
    Ok(ConfidenceBudget {
        delta,
        nontrivial_count,
        delta_prime: delta / nontrivial_count.max(1) as f64,
    })
}

/// Per-objective term values under the shared budget. The Pareto excess
/// right-hand side is twice this vector.
pub fn multi_objective_terms(
    specs: &[GeneralizationTermSpec],
    per_objective_n: &[usize],
    delta: f64,
) -> Result<Vec<f64>> {
    if specs.len() != per_objective_n.len() {
        return Err(Error::Dimension {
            expected: specs.len(),
            actual: per_objective_n.len(),
        });
    }
    let budget = split_confidence(delta, specs)?;
    specs
        .iter()
        .zip(per_objective_n)
        .map(|(spec, &n)| evaluate_term(spec, n, budget.delta_prime))
        .collect()
}

/// How to average over sign vectors in [`empirical_rademacher`].
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(tag = "mode", rename_all = "snake_case")]
pub enum RademacherMode {
    /// Enumerate all 2^n sign vectors. Limited to n <= 20.
    Exact,
    /// Average over seeded random sign draws; deterministic given the seed,
    /// independent of draw order (each draw derives its own stream).
    MonteCarlo { draws: usize, seed: u64 },
}

/// An estimate with its Monte Carlo standard error (zero for exact mode).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RademacherEstimate {
    pub value: f64,
    pub std_error: f64,
}

const EXACT_LIMIT: usize = 20;

/// Empirical Rademacher complexity of a finite class given its per-sample
/// loss matrix (`losses[h][i]` is the loss of hypothesis `h` on sample `i`):
/// `E_sigma sup_h (1/n) sum_i sigma_i losses[h][i]`.
pub fn empirical_rademacher(losses: &[Vec<f64>], mode: RademacherMode) -> Result<RademacherEstimate> {
    if losses.is_empty() {
        return Err(Error::Empty("loss matrix"));
    }
    let n = losses[0].len();
    if n == 0 {
        return Err(Error::Empty("loss matrix columns"));
    }
    if losses.iter().any(|row| row.len() != n) {
        return Err(Error::Dimension {
            expected: n,
            actual: losses.iter().map(|r| r.len()).find(|l| *l != n).unwrap(),
        });
    }
    match mode {
        RademacherMode::Exact => {
            if n > EXACT_LIMIT {
                return Err(Error::TooLarge { limit: EXACT_LIMIT, n });
            }
            let count = 1u64 << n;
            let mut total = 0.0;
            for bits in 0..count {
                total += sup_correlation(losses, n, |i| {
                    if bits >> i & 1 == 1 {
                        1.0
                    } else {
                        -1.0
                    }
                });
            }
            Ok(RademacherEstimate {
                value: total / count as f64,
                std_error: 0.0,
            })
        }
        RademacherMode::MonteCarlo { draws, seed } => {
            if draws == 0 {
                return Err(Error::parameter("draws", "must be >= 1"));
            }
            let mut sum = 0.0;
            let mut sum_sq = 0.0;
            for draw in 0..draws {
                let mut rng = stream_rng(seed, draw as u64);
                let signs: Vec<f64> = (0..n)
                    .map(|_| if rng.random::<bool>() { 1.0 } else { -1.0 })
                    .collect();
                let sup = sup_correlation(losses, n, |i| signs[i]);
                sum += sup;
                sum_sq += sup * sup;
            }
            let mean = sum / draws as f64;
            let variance = (sum_sq / draws as f64 - mean * mean).max(0.0);
            let std_error = if draws > 1 {
                (variance / (draws - 1) as f64).sqrt()
            } else {
                f64::INFINITY
            };
            Ok(RademacherEstimate {
                value: mean,
                std_error,
            })
        }
    }
}

fn sup_correlation(losses: &[Vec<f64>], n: usize, sign: impl Fn(usize) -> f64) -> f64 {
    losses
        .iter()
        .map(|row| row.iter().enumerate().map(|(i, l)| sign(i) * l).sum::<f64>() / n as f64)
        .fold(f64::NEG_INFINITY, f64::max)
}

/// Inputs shared by the two uniform bounds over weighted-sum scalarizations.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CortesBoundParams {
    /// Bound on `sum_i w_i M_i` over the weight set.
    pub beta: f64,
    /// Diameter bound on the joint data/prediction space.
    pub diameter: f64,
    /// Upper bound on the losses.
    pub loss_bound: f64,
    /// Sample count.
    pub n: usize,
    /// Number of objectives.
    pub num_objectives: usize,
    /// Cover radius for the weight set.
    pub epsilon: f64,
    /// Empirical Rademacher complexity estimate.
    pub rademacher: f64,
    /// Confidence parameter.
    pub delta: f64,
}

impl CortesBoundParams {
    fn validate(&self) -> Result<()> {
        if !self.epsilon.is_finite() || self.epsilon <= 0.0 {
            return Err(Error::parameter("epsilon", "must be > 0"));
        }
        if self.epsilon > 1.0 {
            return Err(Error::parameter("epsilon", "must lie in (0,1]"));
        }
        if !(self.delta > 0.0 && self.delta < 1.0) {
            return Err(Error::parameter("delta", "must lie in (0,1)"));
        }
        if self.n == 0 || self.num_objectives == 0 {
            return Err(Error::parameter("n/num_objectives", "must be >= 1"));
        }
        for (name, v) in [
            ("beta", self.beta),
            ("diameter", self.diameter),
            ("loss_bound", self.loss_bound),
        ] {
            if v <= 0.0 || !v.is_finite() {
                return Err(Error::Positivity { name, value: v });
            }
        }
        if self.rademacher < 0.0 || !self.rademacher.is_finite() {
            return Err(Error::parameter("rademacher", "must be finite and >= 0"));
        }
        Ok(())
    }

    /// Cover size for the simplex weight set, `ceil((1/eps)^(N-1))`. An
    /// order-of-magnitude comparator, not a sharp covering number.
    pub fn cover_size(&self) -> f64 {
        (1.0 / self.epsilon)
            .powi(self.num_objectives as i32 - 1)
            .ceil()
    }
}

/// Confidence term of the cover-based bound:
/// `3 beta D sqrt(ln(2 |W_eps| / delta) / (2 n))`.
pub fn cortes_confidence_term(p: &CortesBoundParams) -> Result<f64> {
    p.validate()?;
    Ok(3.0
        * p.beta
        * p.diameter
        * ((2.0 * p.cover_size() / p.delta).ln() / (2.0 * p.n as f64)).sqrt())
}

/// Gap term of the cover-based uniform bound:
/// `2 beta R + M eps + 3 beta D sqrt(ln(2 |W_eps| / delta) / (2 n))`.
pub fn cortes_rhs(p: &CortesBoundParams) -> Result<f64> {
    Ok(2.0 * p.beta * p.rademacher + p.loss_bound * p.epsilon + cortes_confidence_term(p)?)
}

/// Confidence term of the cover-free bound:
/// `3 beta D sqrt(ln(2 N / delta) / (2 n))`.
pub fn improved_confidence_term(p: &CortesBoundParams) -> Result<f64> {
    p.validate()?;
    Ok(3.0
        * p.beta
        * p.diameter
        * ((2.0 * p.num_objectives as f64 / p.delta).ln() / (2.0 * p.n as f64)).sqrt())
}

/// Gap term of the cover-free uniform bound:
/// `2 beta R + 3 beta D sqrt(ln(2 N / delta) / (2 n))`.
pub fn improved_rhs(p: &CortesBoundParams) -> Result<f64> {
    Ok(2.0 * p.beta * p.rademacher + improved_confidence_term(p)?)
}

/// One row of the bound-comparison table.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct BoundComparisonRow {
    pub num_objectives: usize,
    pub n: usize,
    pub epsilon: f64,
    pub cortes_rhs: f64,
    pub improved_rhs: f64,
    /// `cortes_rhs / improved_rhs`: how much tighter the cover-free bound is.
    pub ratio: f64,
}

/// Evaluate both bounds across objective counts at otherwise fixed parameters.
pub fn bound_comparison_table(
    base: &CortesBoundParams,
    objective_counts: &[usize],
) -> Result<Vec<BoundComparisonRow>> {
    objective_counts
        .iter()
        .map(|&num_objectives| {
            let p = CortesBoundParams {
                num_objectives,
                ..*base
            };
            let cortes = cortes_rhs(&p)?;
            let improved = improved_rhs(&p)?;
            Ok(BoundComparisonRow {
                num_objectives,
                n: p.n,
                epsilon: p.epsilon,
                cortes_rhs: cortes,
                improved_rhs: improved,
                ratio: cortes / improved,
            })
        })
        .collect()
}

/// Render the comparison table as CSV.
pub fn bound_comparison_csv(rows: &[BoundComparisonRow]) -> String {
    let mut out = String::from("N,n,epsilon,cortes_rhs,improved_rhs,ratio\n");
    for r in rows {
        out.push_str(&format!(
            "{},{},{},{},{},{}\n",
            r.num_objectives, r.n, r.epsilon, r.cortes_rhs, r.improved_rhs, r.ratio
        ));
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    #[test]
    fn hoeffding_term_closed_form() {
        let spec = GeneralizationTermSpec::hoeffding(0, 2, 1.0).unwrap();
        let v = evaluate_term(&spec, 2000, 0.05).unwrap();
        assert_abs_diff_eq!(v, (80.0f64.ln() / 4000.0).sqrt(), epsilon = 1e-15);
        assert_abs_diff_eq!(v, 0.0331, epsilon = 5e-4);
    }

    #[test]
    fn trivial_term_is_zero() {
        let spec = GeneralizationTermSpec::trivial(0);
        for n in [1, 10, 1_000_000] {
            assert_eq!(evaluate_term(&spec, n, 0.5).unwrap(), 0.0);
        }
    }

    #[test]
    fn hoeffding_term_has_inverse_sqrt_scaling() {
        let spec = GeneralizationTermSpec::hoeffding(0, 100, 1.0).unwrap();
        let at_n = evaluate_term(&spec, 500, 0.05).unwrap();
        let at_4n = evaluate_term(&spec, 2000, 0.05).unwrap();
        assert_abs_diff_eq!(at_4n, at_n / 2.0, epsilon = 1e-15);
    }

    #[test]
    fn term_delta_range_is_checked() {
        let spec = GeneralizationTermSpec::hoeffding(0, 2, 1.0).unwrap();
        assert!(evaluate_term(&spec, 10, 0.0).is_err());
        assert!(evaluate_term(&spec, 10, 1.0).is_err());
        assert!(evaluate_term(&spec, 0, 0.5).is_err());
    }

    #[test]
    fn user_table_lookup_and_interpolation() {
        let spec = GeneralizationTermSpec::table(0, vec![(10, 1.0), (20, 0.5), (40, 0.25)]).unwrap();
        assert_eq!(evaluate_term(&spec, 20, 0.1).unwrap(), 0.5);
        assert_abs_diff_eq!(evaluate_term(&spec, 15, 0.1).unwrap(), 0.75, epsilon = 1e-15);
        assert_eq!(evaluate_term(&spec, 5, 0.1).unwrap(), 1.0);
        assert_eq!(evaluate_term(&spec, 100, 0.1).unwrap(), 0.25);
        assert!(GeneralizationTermSpec::table(0, vec![(10, 1.0), (10, 0.5)]).is_err());
    }

    #[test]
    fn confidence_split_examples() {
        let h = |i| GeneralizationTermSpec::hoeffding(i, 10, 1.0).unwrap();
        let b = split_confidence(0.05, &[h(0), h(1), GeneralizationTermSpec::trivial(2)]).unwrap();
        assert_eq!(b.nontrivial_count, 2);
        assert_abs_diff_eq!(b.delta_prime, 0.025, epsilon = 1e-15);

        let b = split_confidence(
            0.05,
            &[GeneralizationTermSpec::trivial(0), GeneralizationTermSpec::trivial(1)],
        )
        .unwrap();
        assert_eq!(b.nontrivial_count, 0);
        assert_abs_diff_eq!(b.delta_prime, 0.05, epsilon = 1e-15);

        let five: Vec<_> = (0..5).map(h).collect();
        let b = split_confidence(0.1, &five).unwrap();
        assert_abs_diff_eq!(b.delta_prime, 0.02, epsilon = 1e-15);
    }

    #[test]
    fn multi_objective_terms_compose() {
        let specs = vec![
            GeneralizationTermSpec::hoeffding(0, 100, 1.0).unwrap(),
            GeneralizationTermSpec::trivial(1),
            GeneralizationTermSpec::hoeffding(2, 100, 2.0).unwrap(),
        ];
        let ns = [500, 500, 250];
        let terms = multi_objective_terms(&specs, &ns, 0.1).unwrap();
        let budget = split_confidence(0.1, &specs).unwrap();
        for (i, spec) in specs.iter().enumerate() {
            assert_eq!(terms[i], evaluate_term(spec, ns[i], budget.delta_prime).unwrap());
        }
        assert_eq!(terms[1], 0.0);

        let all_trivial: Vec<_> = (0..3).map(GeneralizationTermSpec::trivial).collect();
        assert_eq!(
            multi_objective_terms(&all_trivial, &[10, 10, 10], 0.1).unwrap(),
            vec![0.0; 3]
        );

        let twin = vec![
            GeneralizationTermSpec::hoeffding(0, 50, 1.0).unwrap(),
            GeneralizationTermSpec::hoeffding(1, 50, 1.0).unwrap(),
        ];
        let t = multi_objective_terms(&twin, &[300, 300], 0.1).unwrap();
        assert_eq!(t[0], t[1]);
    }

    #[test]
    fn rademacher_singleton_class_is_zero() {
        let est = empirical_rademacher(&[vec![0.3, 0.7, 0.1]], RademacherMode::Exact).unwrap();
        assert_abs_diff_eq!(est.value, 0.0, epsilon = 1e-15);
    }

    #[test]
    fn rademacher_two_hypothesis_hand_enumeration() {
        let losses = vec![vec![0.0, 0.0], vec![1.0, 1.0]];
        let est = empirical_rademacher(&losses, RademacherMode::Exact).unwrap();
        assert_abs_diff_eq!(est.value, 0.25, epsilon = 1e-15);
        assert_eq!(est.std_error, 0.0);
    }

    #[test]
    fn rademacher_exact_size_limit() {
        let losses = vec![vec![0.0; 21]];
        assert!(matches!(
            empirical_rademacher(&losses, RademacherMode::Exact),
            Err(Error::TooLarge { limit: 20, n: 21 })
        ));
    }

    #[test]
    fn rademacher_monte_carlo_tracks_exact() {
        let mut rng = stream_rng(11, 0);
        let losses: Vec<Vec<f64>> = (0..6)
            .map(|_| (0..10).map(|_| rng.random::<f64>()).collect())
            .collect();
        let exact = empirical_rademacher(&losses, RademacherMode::Exact).unwrap();
        let mc = empirical_rademacher(
            &losses,
            RademacherMode::MonteCarlo {
                draws: 20_000,
                seed: 5,
            },
        )
        .unwrap();
        assert!((mc.value - exact.value).abs() <= 3.0 * mc.std_error);
    }

    #[test]
    fn cortes_cover_size_order() {
        let p = CortesBoundParams {
            beta: 1.0,
            diameter: 1.0,
            loss_bound: 1.0,
            n: 1000,
            num_objectives: 2,
            epsilon: 0.01,
            rademacher: 0.0,
            delta: 0.05,
        };
        assert_abs_diff_eq!(p.cover_size(), 100.0, epsilon = 1e-9);
        let p8 = CortesBoundParams {
            num_objectives: 8,
            ..p
        };
        assert_abs_diff_eq!(p8.cover_size(), 1e14, epsilon = 1e2);
    }

    #[test]
    fn cover_bound_diverges_as_epsilon_vanishes_but_improved_does_not() {
        let base = CortesBoundParams {
            beta: 1.0,
            diameter: 1.0,
            loss_bound: 1.0,
            n: 1000,
            num_objectives: 2,
            epsilon: 0.01,
            rademacher: 0.0,
            delta: 0.05,
        };
        let mut last = 0.0;
        for eps in [1e-2, 1e-4, 1e-8, 1e-12] {
            let p = CortesBoundParams { epsilon: eps, ..base };
            let c = cortes_rhs(&p).unwrap();
            assert!(c > last);
            last = c;
            assert_eq!(improved_rhs(&p).unwrap(), improved_rhs(&base).unwrap());
        }
        assert!(cortes_rhs(&CortesBoundParams { epsilon: 0.0, ..base }).is_err());
    }

    #[test]
    fn improved_confidence_grows_logarithmically() {
        let base = CortesBoundParams {
            beta: 1.0,
            diameter: 1.0,
            loss_bound: 1.0,
            n: 1000,
            num_objectives: 2,
            epsilon: 0.01,
            rademacher: 0.0,
            delta: 0.05,
        };
        let at = |num| {
            improved_confidence_term(&CortesBoundParams {
                num_objectives: num,
                ..base
            })
            .unwrap()
        };
        let expected = ((2.0 * 8.0 / 0.05f64).ln() / (2.0 * 2.0 / 0.05f64).ln()).sqrt();
        assert_abs_diff_eq!(at(8) / at(2), expected, epsilon = 1e-12);
        assert!(at(8) / at(2) < 1.3);
    }

    /// Documented parameter grid for the bound-domination property.
    #[test]
    fn improved_bound_dominates_on_grid() {
        for &num_objectives in &[2usize, 3, 4, 8, 16] {
            for &epsilon in &[0.001, 0.01, 0.05, 0.1] {
                for &delta in &[0.01, 0.05, 0.1] {
                    for &n in &[100usize, 1000, 10_000] {
                        for &beta in &[0.5, 1.0, 2.0] {
                            let p = CortesBoundParams {
                                beta,
                                diameter: 1.0,
                                loss_bound: 1.0,
                                n,
                                num_objectives,
                                epsilon,
                                rademacher: 0.05,
                                delta,
                            };
                            assert!(improved_rhs(&p).unwrap() <= cortes_rhs(&p).unwrap());
                        }
                    }
                }
            }
        }
    }

    #[test]
    fn specs_and_params_serialize_as_json_blocks() {
        let specs = vec![
            GeneralizationTermSpec::hoeffding(0, 100, 1.0).unwrap(),
            GeneralizationTermSpec::trivial(1),
            GeneralizationTermSpec::table(2, vec![(10, 0.5), (100, 0.1)]).unwrap(),
        ];
        let json = serde_json::to_string(&specs).unwrap();
        assert!(json.contains(r#""kind":"hoeffding_finite""#));
        assert!(json.contains(r#""kind":"trivial_zero""#));
        let back: Vec<GeneralizationTermSpec> = serde_json::from_str(&json).unwrap();
        assert_eq!(specs, back);

        let params = CortesBoundParams {
            beta: 1.0,
            diameter: 1.0,
            loss_bound: 1.0,
            n: 100,
            num_objectives: 2,
            epsilon: 0.1,
            rademacher: 0.0,
            delta: 0.05,
        };
        let back: CortesBoundParams =
            serde_json::from_str(&serde_json::to_string(&params).unwrap()).unwrap();
        assert_eq!(params, back);
    }

    #[test]
    fn comparison_table_and_csv() {
        let base = CortesBoundParams {
            beta: 1.0,
            diameter: 1.0,
            loss_bound: 1.0,
            n: 10_000,
            num_objectives: 2,
            epsilon: 0.01,
            rademacher: 0.05,
            delta: 0.05,
        };
        let rows = bound_comparison_table(&base, &[2, 4, 8, 16]).unwrap();
        assert_eq!(rows.len(), 4);
        for r in &rows {
            assert!(r.ratio > 1.0);
        }
        let csv = bound_comparison_csv(&rows);
        assert!(csv.starts_with("N,n,epsilon,cortes_rhs,improved_rhs,ratio\n"));
        assert_eq!(csv.lines().count(), 5);
    }
}
