//! Group-structured risks for tilted aggregation: candidate models evaluated
//! on N groups of equal size, each group contributing its mean loss.

use rand::Rng;
use serde::{Deserialize, Serialize};

use crate::rng::stream_rng;
use crate::scalarize::Scalarization;
use crate::{Error, Result};

/// Per-group mean losses of one model: `risks[i] = mean(group_losses[i])`.
pub fn term_group_risks(group_losses: &[Vec<f64>]) -> Result<Vec<f64>> {
    if group_losses.is_empty() {
        return Err(Error::Empty("groups"));
    }
    group_losses
        .iter()
        .enumerate()
        .map(|(i, group)| {
            if group.is_empty() {
                return Err(Error::Config(format!("group {i} is empty")));
            }
            Ok(group.iter().sum::<f64>() / group.len() as f64)
        })
        .collect()
}

/// Candidate models scored on N groups of identical size.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct TermGroupsProblem {
    /// `losses[model][group][sample]`
    losses: Vec<Vec<Vec<f64>>>,
}

impl TermGroupsProblem {
    pub fn new(losses: Vec<Vec<Vec<f64>>>) -> Result<Self> {
        if losses.is_empty() {
            return Err(Error::Empty("models"));
        }
        let num_groups = losses[0].len();
        if num_groups == 0 {
            return Err(Error::Empty("groups"));
        }
        let group_size = losses[0][0].len();
        if group_size == 0 {
            return Err(Error::Empty("group samples"));
        }
        for model in &losses {
            if model.len() != num_groups {
                return Err(Error::Dimension {
                    expected: num_groups,
                    actual: model.len(),
                });
            }
            for group in model {
                if group.len() != group_size {
                    return Err(Error::Dimension {
                        expected: group_size,
                        actual: group.len(),
                    });
                }
            }
        }
        Ok(TermGroupsProblem { losses })
    }

    /// Uniform random losses in [0,1], seeded.
    pub fn random(models: usize, groups: usize, group_size: usize, seed: u64) -> Result<Self> {
        if models == 0 || groups == 0 || group_size == 0 {
            return Err(Error::parameter("shape", "all dimensions must be >= 1"));
        }
        let mut rng = stream_rng(seed, 5);
        let losses = (0..models)
            .map(|_| {
                (0..groups)
                    .map(|_| (0..group_size).map(|_| rng.random::<f64>()).collect())
                    .collect()
            })
            .collect();
        TermGroupsProblem::new(losses)
    }

    pub fn num_models(&self) -> usize {
        self.losses.len()
    }

    pub fn num_groups(&self) -> usize {
        self.losses[0].len()
    }

    pub fn group_size(&self) -> usize {
        self.losses[0][0].len()
    }

    pub fn group_risks(&self, model: usize) -> Result<Vec<f64>> {
        let losses = self
            .losses
            .get(model)
            .ok_or_else(|| Error::Config(format!("model index {model} out of range")))?;
        term_group_risks(losses)
    }

    /// Tilted aggregate of the model's group risks.
    pub fn tilted_risk(&self, model: usize, t: f64) -> Result<f64> {
        let risks = self.group_risks(model)?;
        Scalarization::tilted(t)?.evaluate(&risks)
    }
}
