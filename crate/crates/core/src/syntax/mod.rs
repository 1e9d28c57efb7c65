//! Patterns, their concrete syntaxes, and positional analysis.

mod analysis;
mod pattern;
mod signature;
pub(crate) mod sugar;
mod token;

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

pub use analysis::{
    binary_scopes, binder_scope, is_negative_in, is_positive_in, n_left, occurrence_kind, scope_ends, OccurrenceKind,
    PositionError,
};
pub use pattern::{fold_conj, fold_disj, EmptyList, FreeVars, Pattern, DEFINEDNESS};
pub use signature::{is_constant_name, Signature, KEYWORDS};
pub use sugar::{parse_sugar, render_sugar};
pub use token::{is_pattern, lex_core, parse_core, parse_tokens, read_prefix, tokens, Token, TokenString};

pub(crate) use signature::{parse_var_index, strip_comment};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SyntaxError {
    #[error("unknown symbol `{token}` at position {position}")]
    UnknownSymbol { token: String, position: usize },
    #[error("malformed pattern at position {position}: {reason}")]
    Malformed { position: usize, reason: String },
    #[error("missing operand at position {position}")]
    ArityError { position: usize },
    #[error("`{0}` is not a valid constant name")]
    InvalidConstant(String),
    #[error("constant `{0}` declared twice")]
    DuplicateConstant(String),
    #[error("line {0}: {1}")]
    AtLine(usize, Box<SyntaxError>),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Mode {
    Core,
    #[default]
    Sugar,
}

impl FromStr for Mode {
    type Err = String;

    fn from_str(s: &str) -> Result<Mode, String> {
        match s {
            "core" => Ok(Mode::Core),
            "sugar" => Ok(Mode::Sugar),
            other => Err(format!("unknown mode `{other}` (expected `core` or `sugar`)")),
        }
    }
}

impl fmt::Display for Mode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Mode::Core => "core",
            Mode::Sugar => "sugar",
        })
    }
}

pub fn parse(text: &str, sig: &Signature, mode: Mode) -> Result<Pattern, SyntaxError> {
    match mode {
        Mode::Core => parse_core(text, sig),
        Mode::Sugar => parse_sugar(text, sig),
    }
}

pub fn render(p: &Pattern, mode: Mode) -> String {
    match mode {
        Mode::Core => tokens(p).to_string(),
        Mode::Sugar => render_sugar(p),
    }
}
