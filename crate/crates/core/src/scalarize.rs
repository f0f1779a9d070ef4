//! The scalarization family: weighted p-norms, Chebyshev, linear, and tilted
//! scalarizations, with the Lipschitz/norm metadata needed to turn
//! per-objective generalization terms into a scalarized right-hand side.
//!
//! Every implemented scalarization is 1-Lipschitz with respect to a monotonic
//! norm: the weighted kinds against their own weighted norm, the tilted kind
//! against the max-norm. [`Scalarization::rhs`] evaluates that norm on a
//! vector of non-negative generalization terms; excess bounds use twice the
//! returned value.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::moo::{EvaluatedHypothesis, ObjectiveVector};
use crate::{Error, Result};

/// Non-negative objective weights; at least one must be positive.
///
/// With `simplex` set, the weights must sum to one within 1e-12. The JSON
/// form is a bare array; the simplex flag is re-detected on deserialization
/// from the sum.
#[derive(Debug, Clone, PartialEq)]
pub struct WeightVector {
    weights: Vec<f64>,
    simplex: bool,
}

impl Serialize for WeightVector {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        self.weights.serialize(serializer)
    }
}

impl<'de> Deserialize<'de> for WeightVector {
    fn deserialize<D: serde::Deserializer<'de>>(
        deserializer: D,
    ) -> std::result::Result<Self, D::Error> {
        let weights = Vec::<f64>::deserialize(deserializer)?;
        let simplex = (weights.iter().sum::<f64>() - 1.0).abs() <= 1e-12;
        WeightVector::build(weights, simplex).map_err(serde::de::Error::custom)
    }
}

impl WeightVector {
    pub fn new(weights: Vec<f64>) -> Result<Self> {
        Self::build(weights, false)
    }

    /// A weight vector asserted to lie on the probability simplex.
    pub fn simplex(weights: Vec<f64>) -> Result<Self> {
        Self::build(weights, true)
    }

    fn build(weights: Vec<f64>, simplex: bool) -> Result<Self> {
        if weights.is_empty() {
            return Err(Error::Empty("weights"));
        }
        if weights.iter().any(|w| !w.is_finite() || *w < 0.0) {
            return Err(Error::parameter("weights", "must be finite and >= 0"));
        }
        if !weights.iter().any(|w| *w > 0.0) {
            return Err(Error::parameter("weights", "at least one must be > 0"));
        }
        if simplex {
            let sum: f64 = weights.iter().sum();
            if (sum - 1.0).abs() > 1e-12 {
                return Err(Error::parameter(
                    "weights",
                    format!("simplex weights must sum to 1, got {sum}"),
                ));
            }
        }
        Ok(WeightVector { weights, simplex })
    }

    pub fn len(&self) -> usize {
        self.weights.len()
    }

    pub fn is_empty(&self) -> bool {
        self.weights.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.weights
    }

    pub fn is_simplex(&self) -> bool {
        self.simplex
    }
}

/// Draw uniformly from the probability simplex (flat Dirichlet) with `n` parts.
pub fn sample_simplex<R: Rng + ?Sized>(rng: &mut R, n: usize) -> WeightVector {
    assert!(n >= 1);
    let mut raw: Vec<f64> = (0..n)
        .map(|_| -(rng.random::<f64>().max(f64::MIN_POSITIVE)).ln())
        .collect();
    let sum: f64 = raw.iter().sum();
    for w in &mut raw {
        *w /= sum;
    }
    // Renormalize exactly enough for the simplex invariant.
    let s: f64 = raw.iter().sum();
    if let Some(first) = raw.first_mut() {
        *first += 1.0 - s;
    }
    WeightVector::simplex(raw).expect("normalized positive weights")
}

/// One member of the scalarization family.
///
/// Serialized form is tagged by kind, e.g. `{"kind":"chebyshev","weights":[...]}`
/// or `{"kind":"tilted","t":1.5}`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Scalarization {
    /// Weighted p-norm for p strictly between 1 and infinity.
    WeightedPNorm { p: f64, weights: WeightVector },
    /// Weighted max-norm.
    Chebyshev { weights: WeightVector },
    /// Weighted sum (convex combination when the weights are a simplex).
    Linear { weights: WeightVector },
    /// Exponentially tilted mean (1/t) log((1/N) sum exp(t x_i)); t = 0 is
    /// the arithmetic mean, the limit value.
    Tilted { t: f64 },
}

impl Scalarization {
    pub fn weighted_p_norm(p: f64, weights: WeightVector) -> Result<Self> {
        let s = Scalarization::WeightedPNorm { p, weights };
        s.validate()?;
        Ok(s)
    }

    pub fn chebyshev(weights: WeightVector) -> Self {
        Scalarization::Chebyshev { weights }
    }

    pub fn linear(weights: WeightVector) -> Self {
        Scalarization::Linear { weights }
    }

    pub fn tilted(t: f64) -> Result<Self> {
        if !t.is_finite() {
            return Err(Error::parameter("t", "tilt must be finite"));
        }
        Ok(Scalarization::Tilted { t })
    }

    /// Validate invariants that serde deserialization cannot enforce.
    pub fn validate(&self) -> Result<()> {
        match self {
            Scalarization::WeightedPNorm { p, .. } => {
                if !p.is_finite() || *p <= 1.0 {
                    return Err(Error::parameter(
                        "p",
                        "weighted p-norm needs 1 < p < inf; use linear or chebyshev for the endpoints",
                    ));
                }
            }
            Scalarization::Tilted { t } if !t.is_finite() => {
                return Err(Error::parameter("t", "tilt must be finite"));
            }
            _ => {}
        }
        Ok(())
    }

    /// Dimension the scalarization expects, if it has one (tilted accepts any).
    pub fn dimension(&self) -> Option<usize> {
        match self {
            Scalarization::WeightedPNorm { weights, .. }
            | Scalarization::Chebyshev { weights }
            | Scalarization::Linear { weights } => Some(weights.len()),
            Scalarization::Tilted { .. } => None,
        }
    }

    /// Lipschitz constant with respect to [`Scalarization::norm`].
    pub fn lipschitz_constant(&self) -> f64 {
        1.0
    }

    fn check_input(&self, x: &[f64]) -> Result<()> {
        self.validate()?;
        if x.is_empty() {
            return Err(Error::Empty("scalarization input"));
        }
        if let Some(dim) = self.dimension() {
            if x.len() != dim {
                return Err(Error::Dimension {
                    expected: dim,
                    actual: x.len(),
                });
            }
        }
        Ok(())
    }

    /// Evaluate the scalarization at an objective vector.
    pub fn evaluate(&self, x: &[f64]) -> Result<f64> {
        self.check_input(x)?;
        Ok(match self {
            Scalarization::WeightedPNorm { p, weights } => x
                .iter()
                .zip(weights.values())
                .map(|(xi, wi)| (wi * xi).abs().powf(*p))
                .sum::<f64>()
                .powf(1.0 / p),
            Scalarization::Chebyshev { weights } => x
                .iter()
                .zip(weights.values())
                .map(|(xi, wi)| (wi * xi).abs())
                .fold(0.0, f64::max),
            Scalarization::Linear { weights } => {
                x.iter().zip(weights.values()).map(|(xi, wi)| wi * xi).sum()
            }
            Scalarization::Tilted { t } => tilted_value(*t, x),
        })
    }

    /// The monotonic norm the scalarization is 1-Lipschitz against.
    pub fn norm(&self, v: &[f64]) -> Result<f64> {
        self.check_input(v)?;
        Ok(match self {
            Scalarization::Tilted { .. } => v.iter().fold(0.0, |m, x| m.max(x.abs())),
            _ => self.evaluate(v)?,
        })
    }

    /// The generalization right-hand side `L * ||terms||` for non-negative
    /// per-objective terms. The excess right-hand side is twice this value.
    pub fn rhs(&self, terms: &[f64]) -> Result<f64> {
        if terms.iter().any(|t| *t < 0.0 || !t.is_finite()) {
            return Err(Error::parameter("terms", "must be finite and >= 0"));
        }
        Ok(self.lipschitz_constant() * self.norm(terms)?)
    }
}

/// Max-shifted log-sum-exp evaluation of the tilted mean.
fn tilted_value(t: f64, x: &[f64]) -> f64 {
    let n = x.len() as f64;
    if t == 0.0 {
        return x.iter().sum::<f64>() / n;
    }
    let m = x
        .iter()
        .map(|&xi| t * xi)
        .fold(f64::NEG_INFINITY, f64::max);
    let sum: f64 = x.iter().map(|&xi| (t * xi - m).exp()).sum();
    (m + sum.ln() - n.ln()) / t
}

/// Hierarchical tilted risk: an outer tilt over per-group tilted risks.
///
/// `taus[k]` is the inner tilt for `group_losses[k]`.
pub fn term_hierarchical(t: f64, taus: &[f64], group_losses: &[Vec<f64>]) -> Result<f64> {
    if group_losses.is_empty() {
        return Err(Error::Empty("group losses"));
    }
    if taus.len() != group_losses.len() {
        return Err(Error::Dimension {
            expected: group_losses.len(),
            actual: taus.len(),
        });
    }
    let mut inner = Vec::with_capacity(group_losses.len());
    for (tau, losses) in taus.iter().zip(group_losses) {
        if losses.is_empty() {
            return Err(Error::Empty("group"));
        }
        inner.push(Scalarization::tilted(*tau)?.evaluate(losses)?);
    }
    Scalarization::tilted(t)?.evaluate(&inner)
}

/// Indices of all hypotheses achieving the minimum scalarized value.
///
/// The tie set is exact by default; [`argmin_scalarized_with_tolerance`]
/// widens it to values within `tie_tol` of the minimum.
pub fn argmin_scalarized(
    s: &Scalarization,
    hypotheses: &[EvaluatedHypothesis],
    use_empirical: bool,
) -> Result<Vec<usize>> {
    argmin_scalarized_with_tolerance(s, hypotheses, use_empirical, 0.0)
}

pub fn argmin_scalarized_with_tolerance(
    s: &Scalarization,
    hypotheses: &[EvaluatedHypothesis],
    use_empirical: bool,
    tie_tol: f64,
) -> Result<Vec<usize>> {
    if hypotheses.is_empty() {
        return Err(Error::Empty("hypotheses"));
    }
    if tie_tol < 0.0 || !tie_tol.is_finite() {
        return Err(Error::parameter("tie_tol", "must be finite and >= 0"));
    }
    let mut values = Vec::with_capacity(hypotheses.len());
    for h in hypotheses {
        let vector = select_values(h, use_empirical)?;
        values.push(s.evaluate(vector.values())?);
    }
    let min = values.iter().cloned().fold(f64::INFINITY, f64::min);
    Ok(values
        .iter()
        .enumerate()
        .filter(|(_, v)| **v <= min + tie_tol)
        .map(|(i, _)| hypotheses[i].hypothesis_id)
        .collect())
}

fn select_values(h: &EvaluatedHypothesis, use_empirical: bool) -> Result<&ObjectiveVector> {
    if use_empirical {
        h.empirical_values
            .as_ref()
            .ok_or(Error::MissingValues("empirical", h.hypothesis_id))
    } else {
        h.true_values
            .as_ref()
            .ok_or(Error::MissingValues("true", h.hypothesis_id))
    }
}

/// Reciprocal weights `w_i = 1 / v_i`, so the Chebyshev scalarization with
/// these weights evaluates to exactly 1 at `v`. Every component of `v` must
/// be strictly positive.
pub fn chebyshev_weights_for(v: &ObjectiveVector) -> Result<WeightVector> {
    for &vi in v.values() {
        if vi <= 0.0 {
            return Err(Error::Positivity {
                name: "objective value",
                value: vi,
            });
        }
    }
    WeightVector::new(v.values().iter().map(|vi| 1.0 / vi).collect())
}

/// Shift constants that place a reference hypothesis at `C * c` exactly.
///
/// `C = 2 + max_j (ref_j - min_j) / c_j` and `K_i = C * c_i - ref_i`. After
/// shifting, the whole class sits at or above `2 c_i` in coordinate `i`.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ShiftConstruction {
    pub scale: f64,
    pub shift_constants: Vec<f64>,
}

impl ShiftConstruction {
    /// Shifted coordinates of the reference hypothesis, `C * c_i`.
    pub fn shifted_reference(&self, terms: &[f64]) -> Vec<f64> {
        terms.iter().map(|c| self.scale * c).collect()
    }
}

pub fn shift_construction(
    empirical_ref: &ObjectiveVector,
    terms: &[f64],
    class_minima: &[f64],
) -> Result<ShiftConstruction> {
    let n = empirical_ref.len();
    if terms.len() != n {
        return Err(Error::Dimension {
            expected: n,
            actual: terms.len(),
        });
    }
    if class_minima.len() != n {
        return Err(Error::Dimension {
            expected: n,
            actual: class_minima.len(),
        });
    }
    for &c in terms {
        if c <= 0.0 || !c.is_finite() {
            return Err(Error::Positivity {
                name: "generalization term",
                value: c,
            });
        }
    }
    for (i, (&m, &r)) in class_minima.iter().zip(empirical_ref.values()).enumerate() {
        if m > r {
            return Err(Error::Inconsistent(format!(
                "class minimum {m} exceeds reference value {r} in coordinate {i}"
            )));
        }
    }
    let scale = 2.0
        + empirical_ref
            .values()
            .iter()
            .zip(class_minima)
            .zip(terms)
            .map(|((r, m), c)| (r - m) / c)
            .fold(0.0, f64::max);
    let shift_constants = terms
        .iter()
        .zip(empirical_ref.values())
        .map(|(c, r)| scale * c - r)
        .collect();
    Ok(ShiftConstruction {
        scale,
        shift_constants,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_abs_diff_eq;

    fn ov(values: &[f64]) -> ObjectiveVector {
        ObjectiveVector::new(values.to_vec()).unwrap()
    }

    fn w(values: &[f64]) -> WeightVector {
        WeightVector::new(values.to_vec()).unwrap()
    }

    #[test]
    fn weight_vector_invariants() {
        assert!(WeightVector::new(vec![]).is_err());
        assert!(WeightVector::new(vec![0.0, 0.0]).is_err());
        assert!(WeightVector::new(vec![-0.1, 1.0]).is_err());
        assert!(WeightVector::simplex(vec![0.4, 0.4]).is_err());
        assert!(WeightVector::simplex(vec![0.4, 0.6]).is_ok());
    }

    #[test]
    fn p_norm_evaluates_euclidean() {
        let s = Scalarization::weighted_p_norm(2.0, w(&[1.0, 1.0])).unwrap();
        assert_abs_diff_eq!(s.evaluate(&[3.0, 4.0]).unwrap(), 5.0, epsilon = 1e-12);
    }

    #[test]
    fn p_norm_rejects_bad_p() {
        assert!(Scalarization::weighted_p_norm(1.0, w(&[1.0])).is_err());
        assert!(Scalarization::weighted_p_norm(0.5, w(&[1.0])).is_err());
        assert!(Scalarization::weighted_p_norm(f64::INFINITY, w(&[1.0])).is_err());
        // Deserialized values are validated at evaluation time.
        let bad: Scalarization =
            serde_json::from_str(r#"{"kind":"weighted_p_norm","p":0.5,"weights":[1.0]}"#).unwrap();
        assert!(bad.evaluate(&[1.0]).is_err());
    }

    #[test]
    fn chebyshev_is_weighted_max() {
        let s = Scalarization::chebyshev(w(&[1.0, 1.0]));
        assert_abs_diff_eq!(s.evaluate(&[2.0, 3.0]).unwrap(), 3.0, epsilon = 1e-15);
    }

    #[test]
    fn tilted_matches_hand_evaluation() {
        // (1/1) ln((e^0 + e^{ln 2}) / 2) = ln(3/2)
        let s = Scalarization::tilted(1.0).unwrap();
        let v = s.evaluate(&[0.0, std::f64::consts::LN_2]).unwrap();
        assert_abs_diff_eq!(v, 1.5f64.ln(), epsilon = 1e-12);
    }

    #[test]
    fn tilted_zero_is_the_mean() {
        let s = Scalarization::tilted(0.0).unwrap();
        assert_abs_diff_eq!(s.evaluate(&[1.0, 2.0, 6.0]).unwrap(), 3.0, epsilon = 1e-15);
    }

    #[test]
    fn tilted_is_overflow_safe() {
        let s = Scalarization::tilted(1000.0).unwrap();
        let v = s.evaluate(&[2.0, 5.0]).unwrap();
        assert!(v.is_finite());
        assert!((v - 5.0).abs() < 1e-3);
        let s = Scalarization::tilted(-1000.0).unwrap();
        let v = s.evaluate(&[2.0, 5.0]).unwrap();
        assert!((v - 2.0).abs() < 1e-3);
    }

    #[test]
    fn dimension_mismatch_is_an_error() {
        let s = Scalarization::linear(w(&[1.0, 1.0]));
        assert!(matches!(
            s.evaluate(&[1.0]),
            Err(Error::Dimension { .. })
        ));
    }

    #[test]
    fn argmin_examples() {
        let hs: Vec<_> = [[1.0, 3.0], [2.0, 2.0], [3.0, 1.0]]
            .iter()
            .enumerate()
            .map(|(i, v)| EvaluatedHypothesis::new(i, Some(ov(v)), None).unwrap())
            .collect();
        let linear = Scalarization::linear(w(&[1.0, 0.0]));
        assert_eq!(argmin_scalarized(&linear, &hs, false).unwrap(), vec![0]);
        let cheb = Scalarization::chebyshev(w(&[1.0, 1.0 / 3.0]));
        assert_eq!(argmin_scalarized(&cheb, &hs, false).unwrap(), vec![0]);
        assert_eq!(
            argmin_scalarized(&cheb, &hs[..1], false).unwrap(),
            vec![0]
        );
    }

    #[test]
    fn argmin_returns_full_tie_set() {
        let hs: Vec<_> = [[1.0, 2.0], [2.0, 1.0], [3.0, 3.0]]
            .iter()
            .enumerate()
            .map(|(i, v)| EvaluatedHypothesis::new(i, Some(ov(v)), None).unwrap())
            .collect();
        let cheb = Scalarization::chebyshev(w(&[1.0, 1.0]));
        assert_eq!(argmin_scalarized(&cheb, &hs, false).unwrap(), vec![0, 1]);
    }

    #[test]
    fn argmin_missing_values_is_a_data_error() {
        let hs = vec![EvaluatedHypothesis::new(0, Some(ov(&[1.0])), None).unwrap()];
        let s = Scalarization::linear(w(&[1.0]));
        assert!(matches!(
            argmin_scalarized(&s, &hs, true),
            Err(Error::MissingValues("empirical", 0))
        ));
    }

    #[test]
    fn chebyshev_weights_examples() {
        let wv = chebyshev_weights_for(&ov(&[0.5, 0.25])).unwrap();
        assert_eq!(wv.values(), &[2.0, 4.0]);
        // The constructed scalarization evaluates to exactly 1 at its source.
        let s = Scalarization::chebyshev(wv);
        assert_eq!(s.evaluate(&[0.5, 0.25]).unwrap(), 1.0);
        let wv = chebyshev_weights_for(&ov(&[1.0, 1.0, 1.0])).unwrap();
        assert_eq!(wv.values(), &[1.0, 1.0, 1.0]);
        assert!(chebyshev_weights_for(&ov(&[1.0, 0.0])).is_err());
        assert!(chebyshev_weights_for(&ov(&[1.0, -0.5])).is_err());
    }

    #[test]
    fn rhs_examples() {
        let cheb = Scalarization::chebyshev(w(&[1.0, 1.0]));
        assert_abs_diff_eq!(cheb.rhs(&[0.1, 0.2]).unwrap(), 0.2, epsilon = 1e-15);
        let lin = Scalarization::linear(w(&[0.5, 0.5]));
        assert_abs_diff_eq!(lin.rhs(&[0.1, 0.2]).unwrap(), 0.15, epsilon = 1e-15);
        for t in [-3.0, 0.0, 2.5] {
            let tilted = Scalarization::tilted(t).unwrap();
            assert_abs_diff_eq!(tilted.rhs(&[0.1, 0.2]).unwrap(), 0.2, epsilon = 1e-15);
        }
        assert!(cheb.rhs(&[-0.1, 0.2]).is_err());
    }

    #[test]
    fn hierarchical_term_examples() {
        // Constant losses are a fixed point for any tilts.
        let v = term_hierarchical(2.0, &[0.5, -1.0], &[vec![0.7; 3], vec![0.7; 5]]).unwrap();
        assert_abs_diff_eq!(v, 0.7, epsilon = 1e-12);

        // Singleton groups reduce to the flat tilted example.
        let v = term_hierarchical(1.0, &[1.0, 1.0], &[vec![0.0], vec![std::f64::consts::LN_2]])
            .unwrap();
        assert_abs_diff_eq!(v, 1.5f64.ln(), epsilon = 1e-12);

        // Large tilts converge to the max over all inner losses.
        let v = term_hierarchical(
            1e6,
            &[1e6, 1e6],
            &[vec![0.1, 0.9, 0.3], vec![0.2, 0.6]],
        )
        .unwrap();
        assert!((v - 0.9).abs() < 1e-4);

        assert!(term_hierarchical(1.0, &[1.0], &[vec![]]).is_err());
        assert!(term_hierarchical(1.0, &[], &[]).is_err());
    }

    #[test]
    fn shift_construction_worked_example() {
        let sc = shift_construction(&ov(&[0.4, 0.6]), &[0.1, 0.2], &[0.1, 0.2]).unwrap();
        assert_abs_diff_eq!(sc.scale, 5.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.shift_constants[0], 0.1, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.shift_constants[1], 0.4, epsilon = 1e-12);
        let shifted = sc.shifted_reference(&[0.1, 0.2]);
        assert_abs_diff_eq!(shifted[0], 0.5, epsilon = 1e-12);
        assert_abs_diff_eq!(shifted[1], 1.0, epsilon = 1e-12);
        assert!(shifted[0] >= 0.2 && shifted[1] >= 0.4);
    }

    #[test]
    fn shift_construction_reference_at_minimum() {
        let sc = shift_construction(&ov(&[0.3, 0.7]), &[1.0, 1.0], &[0.3, 0.7]).unwrap();
        assert_abs_diff_eq!(sc.scale, 2.0, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.shift_constants[0], 2.0 - 0.3, epsilon = 1e-12);
        assert_abs_diff_eq!(sc.shift_constants[1], 2.0 - 0.7, epsilon = 1e-12);
    }

    /// After shifting, every hypothesis in the class sits at or above twice
    /// the term in each coordinate, not just the reference.
    #[test]
    fn shift_construction_floors_the_whole_class() {
        let mut rng = crate::rng::stream_rng(31, 0);
        for _ in 0..20 {
            let class: Vec<Vec<f64>> = (0..12)
                .map(|_| (0..3).map(|_| rand::Rng::random::<f64>(&mut rng)).collect())
                .collect();
            let terms: Vec<f64> = (0..3)
                .map(|_| 0.05 + rand::Rng::random::<f64>(&mut rng) * 0.5)
                .collect();
            let minima: Vec<f64> = (0..3)
                .map(|i| class.iter().map(|row| row[i]).fold(f64::INFINITY, f64::min))
                .collect();
            let reference = class[0].clone();
            let sc = shift_construction(&ov(&reference), &terms, &minima).unwrap();
            for row in &class {
                for i in 0..3 {
                    assert!(
                        row[i] + sc.shift_constants[i] >= 2.0 * terms[i] - 1e-12,
                        "class value below twice the term"
                    );
                }
            }
        }
    }

    #[test]
    fn shift_construction_errors() {
        assert!(shift_construction(&ov(&[0.4]), &[0.0], &[0.1]).is_err());
        assert!(shift_construction(&ov(&[0.4]), &[0.1], &[0.5]).is_err());
        assert!(shift_construction(&ov(&[0.4]), &[0.1, 0.2], &[0.1]).is_err());
    }

    #[test]
    fn scalarization_json_round_trip() {
        let examples = vec![
            Scalarization::chebyshev(w(&[1.0, 2.0])),
            Scalarization::linear(WeightVector::simplex(vec![0.25, 0.75]).unwrap()),
            Scalarization::weighted_p_norm(2.0, w(&[1.0, 1.0])).unwrap(),
            Scalarization::tilted(1.5).unwrap(),
        ];
        for s in examples {
            let json = serde_json::to_string(&s).unwrap();
            let back: Scalarization = serde_json::from_str(&json).unwrap();
            assert_eq!(s, back);
        }
        let json = serde_json::to_string(&Scalarization::tilted(1.5).unwrap()).unwrap();
        assert_eq!(json, r#"{"kind":"tilted","t":1.5}"#);

        // Weights serialize as a bare array.
        let json = serde_json::to_string(&Scalarization::chebyshev(w(&[1.0, 2.0]))).unwrap();
        assert_eq!(json, r#"{"kind":"chebyshev","weights":[1.0,2.0]}"#);
        let parsed: Scalarization =
            serde_json::from_str(r#"{"kind":"linear","weights":[0.25,0.75]}"#).unwrap();
        match &parsed {
            Scalarization::Linear { weights } => assert!(weights.is_simplex()),
            other => panic!("unexpected kind {other:?}"),
        }
        assert!(serde_json::from_str::<Scalarization>(
            r#"{"kind":"chebyshev","weights":[-1.0,2.0]}"#
        )
        .is_err());
    }

    #[test]
    fn simplex_sampling_is_on_the_simplex() {
        let mut rng = crate::rng::stream_rng(9, 0);
        for n in 1..=6 {
            let wv = sample_simplex(&mut rng, n);
            assert!(wv.is_simplex());
            assert!((wv.values().iter().sum::<f64>() - 1.0).abs() <= 1e-12);
            assert!(wv.values().iter().all(|&x| x > 0.0));
        }
    }
}
