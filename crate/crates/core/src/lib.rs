//! A workbench for applicative matching logic: patterns and their syntaxes,
//! substitution, finite-structure semantics with fixpoints, consequence
//! checking over model suites, and a Hilbert-style proof checker.

pub mod cli;
pub mod context;
pub mod model;
pub mod proof;
pub mod semantics;
pub mod substitution;
pub mod syntax;

pub use substitution::VarRef;
pub use syntax::{parse, render, Mode, Pattern, Signature, SyntaxError};
