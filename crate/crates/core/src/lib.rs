//! A laboratory for multi-objective learning at desk scale.
//!
//! The crate is organized around finite hypothesis classes whose true
//! objectives are exactly computable, so that every probabilistic claim
//! about empirical estimates can be tested as a frequency over seeded
//! Monte Carlo trials:
//!
//! - [`moo`]: dominance relations, Pareto set extraction, additive shifts,
//!   and ray-completeness checks over finite collections of objective vectors.
//! - [`scalarize`]: the scalarization family (weighted p-norms, Chebyshev,
//!   linear, tilted), argmin machinery, and shift-constant construction.
//! - [`bounds`]: per-objective generalization terms, the confidence-budget
//!   split, empirical Rademacher estimation, and cover-based bound comparison.
//! - [`testbeds`]: concrete problems: finite synthetic classes, piecewise
//!   constant segmentation with DP risk minimization, LASSO paths, group risks.
//! - [`verify`]: the Monte Carlo harnesses and their structured reports.

pub mod bounds;
pub mod error;
pub mod moo;
pub mod rng;
pub mod scalarize;
pub mod testbeds;
pub mod verify;

pub use error::Error;

/// Crate-wide result alias.
pub type Result<T> = std::result::Result<T, Error>;
