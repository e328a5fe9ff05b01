//! Difference sequences, symmetry, the regularity characterisation and the
//! identities that support it.

mod hypercube;
mod identities;
mod report;
mod sequence;
mod sweep;

pub use hypercube::{
    hypercube_inequality_check, InequalityReport, InequalityRow, DIRECTION_NOTE, GUARD_BAND,
};
pub use identities::{identity_suite, IdentityResult, Outcome, Scope};
pub use report::{
    verify_theorem, GraphSummary, Hypothesis, ReportStatus, SequenceReport, TheoremCheck,
    VerificationReport, VerifyOptions, THEOREM_KINDS,
};
pub use sequence::{check_symmetry, diff_sequence, DiffSequence, SymmetryVerdict};
pub use sweep::{counterexample_sweep, write_findings, Finding, SweepConfig, SweepSummary};

use thiserror::Error;

use crate::graph::GraphError;
use crate::solver::SolverError;

#[derive(Debug, Error)]
pub enum AnalysisError {
    #[error(transparent)]
    Graph(#[from] GraphError),
    #[error(transparent)]
    Solver(#[from] SolverError),
    #[error("sweep needs at least one generator")]
    EmptyMix,
    #[error("cannot start worker pool: {0}")]
    Workers(String),
}
