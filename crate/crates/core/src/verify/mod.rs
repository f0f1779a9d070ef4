//! Seeded Monte Carlo harnesses that test each probabilistic claim as a
//! frequency over repeated dataset draws, with structured reports.
//!
//! Trials are independent: every trial derives its own seed from the master
//! seed and trial index, so runs are byte-identical regardless of thread
//! count, and any trial can be replayed from its recorded seed.

mod finite;
mod impossibility;
mod lasso_study;
mod report;
mod sweep;

pub use finite::{
    default_hoeffding_specs, verify_lemma1, verify_pareto_backward, verify_pareto_forward,
    verify_pareto_single, verify_scalarization, RayCheckConfig, VerificationConfig,
};
pub use impossibility::{demonstrate_impossibility, SUCCESS_FLOOR};
pub use lasso_study::{lasso_pareto_study, LassoStudyConfig, LassoStudyPoint, LassoStudyReport};
pub use report::{
    binomial_ceiling, CheckOutcome, FrequencyDirection, FrequencyReport, TrialReport,
    ViolationWitness,
};
pub use sweep::{generate_sweep, SweepKind, SweepSpec};

/// A registered harness and the claim it exercises.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarnessInfo {
    pub id: &'static str,
    pub claim: &'static str,
}

/// Compile-time registry of everything the lab can run.
pub const HARNESS_REGISTRY: &[HarnessInfo] = &[
    HarnessInfo {
        id: "lemma1",
        claim: "every objective's empirical estimate stays within its generalization term, uniformly over the class",
    },
    HarnessInfo {
        id: "scalarization",
        claim: "scalarized generalization and excess bounds hold uniformly over an arbitrarily large scalarization family",
    },
    HarnessInfo {
        id: "pareto-single",
        claim: "each empirically Pareto-optimal hypothesis is near-optimal in at least one objective against every hypothesis",
    },
    HarnessInfo {
        id: "pareto-forward",
        claim: "every truly Pareto-optimal hypothesis has an empirically Pareto-optimal approximant within twice the terms in all objectives",
    },
    HarnessInfo {
        id: "pareto-backward",
        claim: "on a ray-complete true front, every empirically Pareto-optimal hypothesis approximates some truly Pareto-optimal one",
    },
    HarnessInfo {
        id: "impossibility",
        claim: "without ray completeness the backward matching can fail arbitrarily badly, with probability at least one half",
    },
    HarnessInfo {
        id: "lasso",
        claim: "the regularization path traces the empirical front of fit vs. sparsity and spans both axes in the realizable case",
    },
    HarnessInfo {
        id: "cortes",
        claim: "the cover-free scalarization bound dominates the cover-based one; its confidence term grows only logarithmically in the objective count",
    },
    HarnessInfo {
        id: "term",
        claim: "tilted group risk interpolates between min, mean, and max monotonically in the tilt",
    },
];

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn registry_contains_the_standard_harnesses() {
        let ids: Vec<&str> = HARNESS_REGISTRY.iter().map(|h| h.id).collect();
        for expected in [
            "lemma1",
            "scalarization",
            "pareto-single",
            "pareto-forward",
            "pareto-backward",
            "impossibility",
            "lasso",
            "cortes",
        ] {
            assert!(ids.contains(&expected), "missing {expected}");
        }
        assert!(!HARNESS_REGISTRY.is_empty());
    }
}
