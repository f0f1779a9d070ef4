//! Concrete multi-objective learning problems with exactly computable true
//! objectives, so harnesses can compare empirical estimates against ground
//! truth rather than against another estimate.

mod finite;
mod lasso;
mod segmentation;
mod term;

pub use finite::{Dataset, FiniteProblem, FiniteProblemConfig, QuarterCircleConfig};
pub use lasso::{
    CdSolution, LassoGroundTruth, LassoPathPoint, LassoProblem, lasso_path,
};
pub use segmentation::{
    SegHypothesis, SegmentationProblem, empirical_pareto_pairs, sample_segmentation_data,
    segmentation_empirical_front, segmentation_erm,
};
pub use term::{TermGroupsProblem, term_group_risks};
