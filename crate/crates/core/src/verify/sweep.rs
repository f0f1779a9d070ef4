//! Seeded generation of scalarization families for the uniformity harness.

use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::scalarize::{sample_simplex, Scalarization};
use crate::{Error, Result};

/// A family of scalarization shapes to cycle through.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum SweepKind {
    Linear,
    Chebyshev,
    PNorm { p: f64 },
    Tilted { t_min: f64, t_max: f64 },
}

/// How many scalarizations to sample and from which kinds.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub count: usize,
    pub kinds: Vec<SweepKind>,
}

impl Default for SweepSpec {
    fn default() -> Self {
        SweepSpec {
            count: 100,
            kinds: vec![
                SweepKind::Chebyshev,
                SweepKind::Linear,
                SweepKind::PNorm { p: 2.0 },
                SweepKind::Tilted {
                    t_min: -5.0,
                    t_max: 5.0,
                },
            ],
        }
    }
}

/// Sample `spec.count` scalarizations, cycling through the kinds with
/// weights drawn uniformly from the probability simplex.
pub fn generate_sweep(
    spec: &SweepSpec,
    num_objectives: usize,
    seed: u64,
) -> Result<Vec<Scalarization>> {
    if spec.count == 0 {
        return Err(Error::parameter("count", "sweep must be non-empty"));
    }
    if spec.kinds.is_empty() {
        return Err(Error::Empty("sweep kinds"));
    }
    if num_objectives == 0 {
        return Err(Error::parameter("num_objectives", "must be >= 1"));
    }
    let mut rng = stream_rng(seed, 0);
    let mut out = Vec::with_capacity(spec.count);
    for ix in 0..spec.count {
        let kind = &spec.kinds[ix % spec.kinds.len()];
        let s = match kind {
            SweepKind::Linear => Scalarization::linear(sample_simplex(&mut rng, num_objectives)),
            SweepKind::Chebyshev => {
                Scalarization::chebyshev(sample_simplex(&mut rng, num_objectives))
            }
            SweepKind::PNorm { p } => {
                Scalarization::weighted_p_norm(*p, sample_simplex(&mut rng, num_objectives))?
            }
            SweepKind::Tilted { t_min, t_max } => {
                if !(t_min.is_finite() && t_max.is_finite() && t_min <= t_max) {
                    return Err(Error::parameter("tilted range", "need finite t_min <= t_max"));
                }
                let t = t_min + (t_max - t_min) * rand::Rng::random::<f64>(&mut rng);
                Scalarization::tilted(t)?
            }
        };
        out.push(s);
    }
    Ok(out)
}
