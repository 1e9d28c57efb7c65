//! Hilbert-style proof scripts and their checker.

mod audit;
mod check;
mod derive;
mod script;

use thiserror::Error;

pub use audit::{audit_soundness, AuditReport, Violation};
pub use check::{check_axiom, check_proof, check_rule, CheckReport, Level, LineVerdict, ReasonCode, Rejection};
pub use derive::derived_taut_equiv;
pub use script::{parse_hypotheses, parse_proof, parse_proof_with, Justification, ProofLine, ProofScript};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ProofError {
    #[error("line {line}: {message}")]
    Syntax { line: usize, message: String },
    #[error("line {line}: reference to line {reference}, which does not come earlier")]
    ForwardReference { line: usize, reference: usize },
    #[error("line {line}: unknown hypothesis `{name}`")]
    UnknownHypothesis { line: usize, name: String },
    #[error("line {line}: hypothesis `{name}` declared twice")]
    DuplicateHypothesis { line: usize, name: String },
    #[error("hypothesis `{0}` is bound to different patterns")]
    ConflictingHypothesis(String),
    #[error("line {0} is not an accepted line of the script")]
    NotAccepted(usize),
    #[error("the two patterns are not tautologically equivalent")]
    NotTautEquiv,
}
