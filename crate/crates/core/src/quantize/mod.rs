//! From groupoid words to operator words, Dehn twists, and the central lifts
//! of mapping class group relations.

mod functor;
mod relation;
mod twist;

pub use functor::{functor, letter_moves, word_moves};
pub use relation::{lift_exponent, LiftExponent, LiftMethod, RelationInstance, RelationKind};
pub use twist::{chain_twists, conjugated_twist, flip_letter, puncture_twist, two_crossing_twist, TwistWord};

use crate::opalgebra::AlgebraError;
use crate::rewrite::RewriteError;
use crate::surface::{Side, SurfaceError};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum QuantizeError {
    #[error("the puncture at corner {}.{} has {valence} edge ends, at least 2 are needed", corner.0, corner.1)]
    DegeneratePuncture { corner: (u32, u8), valence: usize },
    #[error("no self-folded triangle caps the boundary at corner {}.{}", .0.0, .0.1)]
    NotCapped((u32, u8)),
    #[error("corner {}.{} is not a corner of the triangulation", .0.0, .0.1)]
    BadCorner((u32, u8)),
    #[error("the flip of side {}.{} does not twist an annulus", .0.0, .0.1)]
    NotTwoCrossing(Side),
    #[error("{0}: the move sequence does not come back to the scene")]
    NotClosed(String),
    #[error("lift not established: {0}")]
    NotEstablished(String),
    #[error("relation file line {line}: {msg}")]
    RelationParse { line: usize, msg: String },
    #[error("relation pattern: {0}")]
    BadPattern(String),
    #[error("{0}")]
    Io(String),
    #[error(transparent)]
    Surface(#[from] SurfaceError),
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Rewrite(#[from] RewriteError),
}
