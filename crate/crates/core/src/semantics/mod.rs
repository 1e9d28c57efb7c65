//! Evaluation of patterns over finite structures, validity, tautologies and
//! consequence.

mod consequence;
mod definedness;
mod eval;
mod taut;

use thiserror::Error;

pub use consequence::{consequence, ConsequenceKind, Counterexample, Verdict};
pub use definedness::{eval_definedness, DefinednessOp, DefinednessValue};
pub use eval::{
    eval_result, evaluate, evaluate_nu_direct, evaluate_with, falsifying_valuation, is_predicate, models, satisfies,
    valuations, Compiled, EvalOptions, EvalResult, MuStrategy,
};
pub use taut::{is_tautology, Prop, Skeleton, SKELETON_LIMIT};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SemanticsError {
    #[error("universe of size {size} exceeds the enumeration limit of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("constant `{0}` has no denotation in the structure")]
    UnassignedConstant(String),
    #[error("valuation refers to element {0}, outside the universe")]
    ElementOutOfRange(usize),
    #[error("propositional skeleton has {atoms} atoms, more than the limit of {limit}")]
    SkeletonTooLarge { atoms: usize, limit: usize },
    #[error("the structure does not interpret `def` as a definedness symbol")]
    NotADefinednessStructure,
}
