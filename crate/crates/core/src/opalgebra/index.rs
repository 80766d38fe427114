use std::fmt;

/// A tensor-slot index carrying a Z/3 decoration.
///
/// Decoration 1 is written `k^` (hat, conjugation by `R_k`), decoration 2 is
/// written `kv` (check, conjugation by `R_k^-1`).
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedIndex {
    pub label: u32,
    pub deco: u8,
}

impl DecoratedIndex {
    pub fn new(label: u32, deco: i64) -> Self {
        DecoratedIndex { label, deco: deco.rem_euclid(3) as u8 }
    }

    pub fn plain(label: u32) -> Self {
        DecoratedIndex { label, deco: 0 }
    }

    pub fn hat(label: u32) -> Self {
        DecoratedIndex { label, deco: 1 }
    }

    pub fn check(label: u32) -> Self {
        DecoratedIndex { label, deco: 2 }
    }

    /// Adds `d` to the decoration, mod 3.
    pub fn shift(self, d: i64) -> Self {
        DecoratedIndex::new(self.label, self.deco as i64 + d)
    }
}

impl fmt::Display for DecoratedIndex {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.deco {
            0 => write!(f, "{}", self.label),
            1 => write!(f, "{}^", self.label),
            _ => write!(f, "{}v", self.label),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum LetterKind {
    T,
    /// The inverse `T^-1`, written `~T`.
    TBar,
}

impl LetterKind {
    pub fn flip(self) -> Self {
        match self {
            LetterKind::T => LetterKind::TBar,
            LetterKind::TBar => LetterKind::T,
        }
    }
}

/// A single `T_ab` or `T^-1_ab` factor.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Letter {
    pub kind: LetterKind,
    pub a: DecoratedIndex,
    pub b: DecoratedIndex,
}

impl Letter {
    pub fn t(a: DecoratedIndex, b: DecoratedIndex) -> Self {
        debug_assert_ne!(a.label, b.label);
        Letter { kind: LetterKind::T, a, b }
    }

    pub fn tbar(a: DecoratedIndex, b: DecoratedIndex) -> Self {
        debug_assert_ne!(a.label, b.label);
        Letter { kind: LetterKind::TBar, a, b }
    }

    pub fn inverse(self) -> Self {
        Letter { kind: self.kind.flip(), ..self }
    }

    /// The other spelling of the same operator: `T_ab = T_{b^ av}`.
    pub fn symmetric(self) -> Self {
        Letter { kind: self.kind, a: self.b.shift(1), b: self.a.shift(-1) }
    }

    /// The spelling whose first slot has the smaller label.
    pub fn canonical(self) -> Self {
        if self.a.label < self.b.label {
            self
        } else {
            self.symmetric()
        }
    }

    pub fn shares_label(&self, other: &Letter) -> bool {
        self.a.label == other.a.label
            || self.a.label == other.b.label
            || self.b.label == other.a.label
            || self.b.label == other.b.label
    }

    pub fn labels(&self) -> [u32; 2] {
        [self.a.label, self.b.label]
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kind == LetterKind::TBar {
            f.write_str("~")?;
        }
        write!(f, "T[{},{}]", self.a, self.b)
    }
}
