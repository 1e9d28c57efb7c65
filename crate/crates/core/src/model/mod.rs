//! Finite structures, valuations and fixpoints on their powersets.

mod elemset;
mod enumerate;
mod fixpoint;
mod structure;

use thiserror::Error;

pub use elemset::{ElemSet, MAX_UNIVERSE};
pub use enumerate::{enumerate_structures, exhaustive_count, SuiteConfig, EXHAUSTIVE_MAX};
pub use fixpoint::{
    fixpoints, is_monotone, is_monotone_capped, kleene_gfp, kleene_lfp, kt_gfp, kt_gfp_capped, kt_lfp, kt_lfp_capped,
    SetFunction, ENUMERATION_CAP,
};
pub use structure::{validate_structure, AppEntry, ModelDoc, Structure, Valuation, ValuationDoc};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModelError {
    #[error("the universe is empty")]
    EmptyUniverse,
    #[error("element `{0}` is listed twice in the universe")]
    DuplicateElement(String),
    #[error("{0}, which is not in the universe")]
    DanglingElement(String),
    #[error("application cell ({0}, {1}) is listed twice")]
    DuplicateCell(String, String),
    #[error("constant `{0}` has no denotation")]
    MissingConstant(String),
    #[error("definedness law fails: def * {{{0}}} is not the whole universe")]
    DefinednessViolated(String),
    #[error("universe of size {size} exceeds the limit of {cap}")]
    UniverseTooLarge { size: usize, cap: usize },
    #[error("iteration decreased, so the function is not monotone")]
    NonMonotoneDetected,
    #[error("`{0}` is not a variable of the expected kind")]
    BadVariable(String),
    #[error("invalid JSON: {0}")]
    Json(String),
}
