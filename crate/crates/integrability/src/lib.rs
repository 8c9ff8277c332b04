//! Numerical toolkit for recovering utility and expenditure functions from
//! candidate demand functions.
//!
//! The central object is the income-compensation ODE
//!
//! ```text
//! c'(t) = f((1-t)p + tq, c(t)) . (q - p),    c(0) = m,
//! ```
//!
//! whose value at `t = 1` is simultaneously the expenditure at prices `q` of
//! the indifference level demanded at `(p, m)`, and (with `q` a fixed
//! reference price) a utility value for the bundle `f(p, m)`. Around that
//! solver the crate provides:
//!
//! * [`demand`] - bundles, price-income pairs, built-in demand families and
//!   Walras'-law / range diagnostics;
//! * [`slutsky`] - finite-difference Jacobians and symmetry /
//!   negative-semi-definiteness certification of the Slutsky matrix;
//! * [`compensation`] - the adaptive ODE solver and path-identity checks;
//! * [`recovery`] - utility recovery, expenditure evaluation, Shephard and
//!   concavity diagnostics, boundary extension;
//! * [`inverse_demand`] - constrained root finding for simplex-normalized
//!   inverse demand prices;
//! * [`function_space`] - the compact-convergence metric, Lipschitz
//!   estimation, perturbation (Gronwall) bounds, convergence experiments;
//! * [`revealed_preference`] - weak/strong axiom cross-validation oracles.

pub mod compensation;
pub mod demand;
pub mod function_space;
pub mod inverse_demand;
pub mod recovery;
pub mod revealed_preference;
pub mod sampling;
pub mod slutsky;

mod ode;

use thiserror::Error;

pub use compensation::PathStatus;

/// Errors shared across the toolkit.
#[derive(Debug, Clone, Error)]
pub enum Error {
    #[error("unknown demand family or unregistered external evaluator `{0}`")]
    UnknownFamily(String),

    #[error("dimension mismatch: expected {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },

    #[error("invalid demand specification: {0}")]
    InvalidSpec(String),

    #[error("invalid input: {0}")]
    InvalidInput(String),

    #[error("sampling region is empty")]
    EmptyRegion,

    #[error("finite-difference step {h} leaves the positive orthant at coordinate {coord}")]
    StepTooLarge { h: f64, coord: usize },

    #[error("income path did not reach t = 1: {0:?}")]
    PathIncomplete(PathStatus),

    #[error("inverse-demand iteration did not converge (best residual {residual:.3e})")]
    NoConvergence { residual: f64 },

    #[error("bundle is not in the verified range of the demand function")]
    NotInRange,

    #[error("box [1/{k}, {k}]^(n+1) does not contain both trajectories")]
    BoxTooSmall { k: u32 },
}

pub type Result<T> = std::result::Result<T, Error>;

pub(crate) fn dot(a: &[f64], b: &[f64]) -> f64 {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x * y).sum()
}

pub(crate) fn norm2(a: &[f64]) -> f64 {
    a.iter().map(|x| x * x).sum::<f64>().sqrt()
}
