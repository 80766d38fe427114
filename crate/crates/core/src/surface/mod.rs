//! Decorated ideal triangulations and the moves of the Ptolemy groupoid.

mod moves;
mod random;
mod relations;
mod triangulation;

pub use moves::{apply_move, apply_word, inverse_word, isomorphism, GroupoidWord, Move};
pub use random::{random_scenes, random_triangulation};
pub use relations::{relation_suite, RelationFailure, RelationReport};
pub use triangulation::{parse_triangulation, DecoratedTriangulation, Side};

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum SurfaceError {
    #[error("side {side:?} is glued to {target:?}, but that side is glued to {back:?}")]
    NotInvolution { side: Side, target: Side, back: Side },
    #[error("side {0:?} is glued to itself")]
    FixedSide(Side),
    #[error("side {side:?} refers to {target:?}, which is not a side of a labeled triangle")]
    LabelGap { side: Side, target: Side },
    #[error("not a punctured surface: {0}")]
    NonSurface(String),
    #[error("a triangulation needs an even, positive number of triangles, got {0}")]
    OddCount(usize),
    #[error("label {label} outside 1..={count}")]
    BadLabel { label: u32, count: usize },
    #[error("flip omega{i},{j} does not apply here")]
    OmegaNotApplicable { i: u32, j: u32 },
    #[error("not a permutation of the labels: {0:?}")]
    BadPermutation(Vec<u32>),
    #[error("move {index} ({mv}) failed: {source}")]
    MoveFailed { index: usize, mv: String, source: Box<SurfaceError> },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
}

/// The chain scene: six triangles carrying the curves `a, b, c, e, f` of the
/// chain relation, with each of the two holes capped by a self-folded
/// triangle (7 and 8). Genus 1, four punctures.
pub const CHAIN_TORUS: &str = include_str!("../../data/scenes/chain_torus.tri");

pub fn chain_torus() -> DecoratedTriangulation {
    parse_triangulation(CHAIN_TORUS).expect("bundled scene parses")
}
