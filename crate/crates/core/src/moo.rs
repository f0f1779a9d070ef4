//! Dominance relations and Pareto set extraction over finite collections of
//! objective vectors, plus additive shifts and ray-completeness checking.
//!
//! All objectives are minimized. Dominance comparisons are exact by default;
//! [`pareto_filter_with_tolerance`] treats coordinates within `tol` of each
//! other as equal, which is what solver-tolerance data (e.g. regularization
//! paths) needs.

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// An N-dimensional vector of objective values.
///
/// Entries must be finite. Values are non-negative in the learning setting,
/// but additively shifted variants may carry negative entries, so only
/// finiteness is enforced here.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ObjectiveVector(Vec<f64>);

impl ObjectiveVector {
    pub fn new(values: Vec<f64>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::Empty("objective vector"));
        }
        if values.iter().any(|v| !v.is_finite()) {
            return Err(Error::parameter("values", "entries must be finite"));
        }
        Ok(ObjectiveVector(values))
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn values(&self) -> &[f64] {
        &self.0
    }

    pub fn into_values(self) -> Vec<f64> {
        self.0
    }
}

impl std::ops::Index<usize> for ObjectiveVector {
    type Output = f64;
    fn index(&self, i: usize) -> &f64 {
        &self.0[i]
    }
}

impl TryFrom<Vec<f64>> for ObjectiveVector {
    type Error = Error;
    fn try_from(v: Vec<f64>) -> Result<Self> {
        ObjectiveVector::new(v)
    }
}

/// A hypothesis together with its objective values, true and/or empirical.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct EvaluatedHypothesis {
    pub hypothesis_id: usize,
    pub true_values: Option<ObjectiveVector>,
    pub empirical_values: Option<ObjectiveVector>,
}

impl EvaluatedHypothesis {
    pub fn new(
        hypothesis_id: usize,
        true_values: Option<ObjectiveVector>,
        empirical_values: Option<ObjectiveVector>,
    ) -> Result<Self> {
        match (&true_values, &empirical_values) {
            (None, None) => Err(Error::Empty("evaluated hypothesis needs at least one value kind")),
            (Some(t), Some(e)) if t.len() != e.len() => Err(Error::Dimension {
                expected: t.len(),
                actual: e.len(),
            }),
            _ => Ok(EvaluatedHypothesis {
                hypothesis_id,
                true_values,
                empirical_values,
            }),
        }
    }
}

/// The result of filtering a collection down to its non-dominated members.
///
/// `member_ids` are indices into the source collection, in source order.
/// Duplicates of a non-dominated point are all members: strong dominance
/// requires a strict coordinate, which identical vectors never have.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct ParetoSet {
    pub member_ids: Vec<usize>,
    pub front: Vec<ObjectiveVector>,
}

impl ParetoSet {
    pub fn len(&self) -> usize {
        self.member_ids.len()
    }

    pub fn is_empty(&self) -> bool {
        self.member_ids.is_empty()
    }

    pub fn contains(&self, id: usize) -> bool {
        self.member_ids.binary_search(&id).is_ok()
    }
}

/// A direction in the strictly positive orthant.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct Ray {
    direction: Vec<f64>,
}

impl Ray {
    pub fn new(direction: Vec<f64>) -> Result<Self> {
        if direction.is_empty() {
            return Err(Error::Empty("ray direction"));
        }
        for &d in &direction {
            if d <= 0.0 || !d.is_finite() {
                return Err(Error::Positivity {
                    name: "ray component",
                    value: d,
                });
            }
        }
        Ok(Ray { direction })
    }

    pub fn direction(&self) -> &[f64] {
        &self.direction
    }
}

fn check_dims(a: &[f64], b: &[f64]) -> Result<()> {
    if a.len() != b.len() {
        return Err(Error::Dimension {
            expected: a.len(),
            actual: b.len(),
        });
    }
    Ok(())
}

/// `a` weakly dominates `b`: every coordinate of `a` is at most that of `b`.
pub fn weakly_dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> Result<bool> {
    check_dims(a.values(), b.values())?;
    Ok(weak_dom_tol(a.values(), b.values(), 0.0))
}

/// `a` strongly dominates `b`: weak dominance with at least one strict coordinate.
pub fn strongly_dominates(a: &ObjectiveVector, b: &ObjectiveVector) -> Result<bool> {
    check_dims(a.values(), b.values())?;
    Ok(strong_dom_tol(a.values(), b.values(), 0.0))
}

/// Tolerance variants: coordinates within `tol` count as equal.
pub fn weakly_dominates_with_tolerance(
    a: &ObjectiveVector,
    b: &ObjectiveVector,
    tol: f64,
) -> Result<bool> {
    check_dims(a.values(), b.values())?;
    check_tol(tol)?;
    Ok(weak_dom_tol(a.values(), b.values(), tol))
}

pub fn strongly_dominates_with_tolerance(
    a: &ObjectiveVector,
    b: &ObjectiveVector,
    tol: f64,
) -> Result<bool> {
    check_dims(a.values(), b.values())?;
    check_tol(tol)?;
    Ok(strong_dom_tol(a.values(), b.values(), tol))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol < 0.0 || !tol.is_finite() {
        return Err(Error::parameter("tol", "must be finite and >= 0"));
    }
    Ok(())
}

#[inline]
fn weak_dom_tol(a: &[f64], b: &[f64], tol: f64) -> bool {
    a.iter().zip(b).all(|(&x, &y)| x <= y + tol)
}

#[inline]
fn strong_dom_tol(a: &[f64], b: &[f64], tol: f64) -> bool {
    weak_dom_tol(a, b, tol) && a.iter().zip(b).any(|(&x, &y)| x < y - tol)
}

/// Extract the non-dominated subset of `points` under exact dominance.
///
/// Returns exactly the indices not strongly dominated by any other point,
/// in source order. Errors on an empty input or mixed dimensions.
pub fn pareto_filter(points: &[ObjectiveVector]) -> Result<ParetoSet> {
    pareto_filter_with_tolerance(points, 0.0)
}

/// [`pareto_filter`] with coordinates within `tol` treated as equal.
pub fn pareto_filter_with_tolerance(points: &[ObjectiveVector], tol: f64) -> Result<ParetoSet> {
    if points.is_empty() {
        return Err(Error::Empty("pareto_filter input"));
    }
    check_tol(tol)?;
    let dim = points[0].len();
    for p in points {
        if p.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                actual: p.len(),
            });
        }
    }

    let mut member_ids = if tol == 0.0 {
        filter_by_sum_sweep(points)
    } else {
        filter_all_pairs(points, tol)
    };
    member_ids.sort_unstable();
    let front = member_ids.iter().map(|&i| points[i].clone()).collect();
    Ok(ParetoSet { member_ids, front })
}

/// Exact-dominance fast path.
///
/// Strong dominance implies a strictly smaller coordinate sum, so after
/// sorting by sum a point can only be dominated by already-accepted members:
/// if a rejected earlier point dominated it, the rejecter's own dominator
/// would too, by transitivity. Floating-point summation can collapse a
/// strictly smaller sum onto an equal one (a small coordinate absorbed next
/// to a huge one), so ties in the computed sum are processed as a group with
/// full pairwise checks inside the group.
fn filter_by_sum_sweep(points: &[ObjectiveVector]) -> Vec<usize> {
    let mut order: Vec<usize> = (0..points.len()).collect();
    let sums: Vec<f64> = points
        .iter()
        .map(|p| p.values().iter().sum::<f64>())
        .collect();
    order.sort_by(|&i, &j| sums[i].partial_cmp(&sums[j]).unwrap().then(i.cmp(&j)));

    let mut accepted: Vec<usize> = Vec::new();
    let mut start = 0;
    while start < order.len() {
        let mut end = start + 1;
        while end < order.len() && sums[order[end]] == sums[order[start]] {
            end += 1;
        }
        let group = &order[start..end];
        'next: for &i in group {
            for &m in &accepted {
                if strong_dom_tol(points[m].values(), points[i].values(), 0.0) {
                    continue 'next;
                }
            }
            for &peer in group {
                if peer != i && strong_dom_tol(points[peer].values(), points[i].values(), 0.0) {
                    continue 'next;
                }
            }
            accepted.push(i);
        }
        start = end;
    }
    accepted
}

fn filter_all_pairs(points: &[ObjectiveVector], tol: f64) -> Vec<usize> {
    (0..points.len())
        .filter(|&i| {
            !points.iter().enumerate().any(|(j, other)| {
                j != i && strong_dom_tol(other.values(), points[i].values(), tol)
            })
        })
        .collect()
}

/// Componentwise `v + shifts`.
pub fn additive_shift(v: &ObjectiveVector, shifts: &[f64]) -> Result<ObjectiveVector> {
    check_dims(v.values(), shifts)?;
    if shifts.iter().any(|s| !s.is_finite()) {
        return Err(Error::parameter("shifts", "entries must be finite"));
    }
    ObjectiveVector::new(v.values().iter().zip(shifts).map(|(x, s)| x + s).collect())
}

/// Outcome of probing a finite front against a deterministic grid of rays.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RayCompletenessReport {
    pub total_rays: usize,
    pub covered_rays: usize,
    pub fraction_covered: f64,
    pub uncovered: Vec<Ray>,
}

impl RayCompletenessReport {
    pub fn is_complete(&self) -> bool {
        self.covered_rays == self.total_rays
    }
}

/// Check how much of the positive orthant's ray bundle a finite front covers.
///
/// A deterministic grid of `resolution^(N-1)` rays is laid over the positive
/// part of the unit sphere (grid nodes at half-step offsets, so no ray lies
/// on a coordinate axis). A ray counts as covered when some front point lies
/// within `angular_tolerance` radians of it.
///
/// Front points must have strictly positive entries unless
/// `allow_axis_points` is set, in which case points with zero coordinates
/// (but nonzero norm) cover their adjacent rays through the same angle test.
pub fn ray_completeness_check(
    front: &[ObjectiveVector],
    resolution: usize,
    angular_tolerance: f64,
    allow_axis_points: bool,
) -> Result<RayCompletenessReport> {
    if front.is_empty() {
        return Err(Error::Empty("front"));
    }
    if angular_tolerance <= 0.0 || !angular_tolerance.is_finite() {
        return Err(Error::parameter(
            "angular_tolerance",
            "must be finite and > 0",
        ));
    }
    if resolution == 0 {
        return Err(Error::parameter("resolution", "must be >= 1"));
    }
    let dim = front[0].len();
    if dim < 2 {
        return Err(Error::parameter(
            "front",
            "ray completeness needs at least two objectives",
        ));
    }
    let mut dirs: Vec<Vec<f64>> = Vec::with_capacity(front.len());
    for p in front {
        if p.len() != dim {
            return Err(Error::Dimension {
                expected: dim,
                actual: p.len(),
            });
        }
        let norm = p.values().iter().map(|v| v * v).sum::<f64>().sqrt();
        for &v in p.values() {
            if v < 0.0 {
                return Err(Error::Positivity {
                    name: "front coordinate",
                    value: v,
                });
            }
            if v == 0.0 && !allow_axis_points {
                return Err(Error::Positivity {
                    name: "front coordinate",
                    value: v,
                });
            }
        }
        if norm == 0.0 {
            return Err(Error::Positivity {
                name: "front point norm",
                value: 0.0,
            });
        }
        dirs.push(p.values().iter().map(|v| v / norm).collect());
    }

    let rays = ray_grid(dim, resolution);
    let mut covered = 0usize;
    let mut uncovered = Vec::new();
    for ray in rays.iter() {
        let hit = dirs.iter().any(|d| {
            let dot: f64 = d.iter().zip(ray).map(|(a, b)| a * b).sum();
            dot.clamp(-1.0, 1.0).acos() <= angular_tolerance
        });
        if hit {
            covered += 1;
        } else {
            uncovered.push(Ray {
                direction: ray.clone(),
            });
        }
    }
    Ok(RayCompletenessReport {
        total_rays: rays.len(),
        covered_rays: covered,
        fraction_covered: covered as f64 / rays.len() as f64,
        uncovered,
    })
}

/// Unit directions on a hyperspherical half-step grid: each of the N-1
/// angular coordinates takes values ((k + 1/2) / resolution) * (pi/2).
fn ray_grid(dim: usize, resolution: usize) -> Vec<Vec<f64>> {
    let angles: Vec<f64> = (0..resolution)
        .map(|k| (k as f64 + 0.5) / resolution as f64 * std::f64::consts::FRAC_PI_2)
        .collect();
    let mut rays: Vec<Vec<f64>> = Vec::new();
    let mut index = vec![0usize; dim - 1];
    loop {
        let mut dir = Vec::with_capacity(dim);
        // Hyperspherical coordinates restricted to the positive orthant.
        let mut sin_product = 1.0;
        for &ix in index.iter() {
            let theta = angles[ix];
            dir.push(sin_product * theta.cos());
            sin_product *= theta.sin();
        }
        dir.push(sin_product);
        rays.push(dir);

        // Odometer increment over the (dim-1)-dimensional angle grid.
        let mut pos = 0;
        loop {
            if pos == index.len() {
                return rays;
            }
            index[pos] += 1;
            if index[pos] < resolution {
                break;
            }
            index[pos] = 0;
            pos += 1;
        }
    }
}
