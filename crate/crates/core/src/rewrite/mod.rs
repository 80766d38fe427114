//! Rewriting operator words with the T-matrix relations.

mod rule;
mod script;
pub mod search;
pub mod synth;
mod trace;

pub use rule::{apply_step, inversion_perm, Direction, Rule, Step, DEFAULT_DERIVED_DEPTH};
pub use script::{check_script, fmt_fragment, Item, ItemKind, Script, ScriptFailure, ScriptReport, StepRecord};
pub use search::{
    connect, connect_by_quotient, connect_local, derived_step_verify, normalize_bounded, normalize_with_steps, replay, ConnectOptions, DEFAULT_BUDGET,
};
pub use synth::{parse_waypoints, synthesize, synthesize_skipping, Waypoint};
pub use trace::{canonical_word, canonicalize_steps};

use crate::opalgebra::AlgebraError;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum RewriteError {
    #[error("{rule} does not match at @{position}: expected {pattern}, found {found}")]
    NoMatch { rule: &'static str, position: usize, pattern: String, found: String },
    #[error("position @{position} is out of range for a word of {len} letters")]
    BadPosition { position: usize, len: usize },
    #[error("bad binding: {0}")]
    BadBinding(String),
    #[error("no chain of at most {depth} base steps from {{{before}}} to {{{after}}}")]
    NotDerivable { before: String, after: String, depth: usize },
    #[error("script line {line}: {msg}")]
    ScriptParse { line: usize, msg: String },
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
}
