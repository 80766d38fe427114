//! Operator words in the semi-symmetric T-matrix algebra.

mod dperm;
mod index;
mod literal;
mod scalar;
mod word;

pub use dperm::DecoratedPermutation;
pub use index::{DecoratedIndex, Letter, LetterKind};
pub use literal::{parse_index, parse_letters, parse_perm, parse_word};
pub use scalar::{gcd, ScalarGroup};
pub use word::{fmt_letters, OperatorWord};

pub(crate) use word::act_letter;

#[derive(Debug, Clone, PartialEq, Eq, thiserror::Error)]
pub enum AlgebraError {
    #[error("size mismatch: {0} labels vs {1} labels")]
    SizeMismatch(usize, usize),
    #[error("label {label} outside 1..={size}")]
    BadLabel { label: u32, size: usize },
    #[error("label {0} is hit twice; not a bijection")]
    NotBijective(u32),
    #[error("letter {0} uses the same label twice")]
    RepeatedSlot(Letter),
    #[error("parse error at byte {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}
