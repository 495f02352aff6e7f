//! Numerical simulator for form averaging under torus automorphisms: sparse
//! Fourier (k,k)-forms, pullback with exact mode transport on the dual
//! lattice, normalized Cesàro averages against the predicted constant limit,
//! and integer-arithmetic escape checks for lattice orbits.

pub mod forms;
pub mod torus;

pub use forms::{FourierForm, Mode, ModeEntry};
pub use torus::{
    ConvergenceReport, EscapeReport, PartialRun, TorusAutomorphism, DEFAULT_MODE_BUDGET,
};

#[derive(Debug, thiserror::Error)]
pub enum ErgodicError {
    /// The lattice map is not invertible (constant term not ±1) or the
    /// input polynomial is not monic.
    #[error("not an automorphism: {0}")]
    NotAnAutomorphism(String),
    /// A repeated eigenvalue obstructs diagonalization of the frame.
    #[error("repeated eigenvalue: the analytic action is not diagonalizable over the frame")]
    RepeatedEigenvalues,
    /// The eigenvalue moduli do not have the one-outside / one-inside /
    /// rest-on-circle shape required for the constant-limit prediction.
    #[error("averaging hypothesis not met: spectrum is not one-outside, one-inside, rest on the unit circle")]
    HypothesisNotMet,
    /// The running sum outgrew the configured mode cap; the boxed state
    /// holds the partial average and report.
    #[error("mode budget exceeded after {} steps ({} modes tracked)", .0.steps, .0.average.mode_count())]
    ModeBudgetExceeded(Box<PartialRun>),
    #[error("invalid mode data: {0}")]
    InvalidMode(String),
    #[error("root certification failed: {0}")]
    Certification(String),
}
