use std::fmt;

use super::{AlgebraError, DecoratedPermutation, Letter};

/// `ζ^zeta · letters · tail`, with every permutation pushed to the right.
///
/// Two words are equal as values exactly when they have the same exponent,
/// the same letter sequence and the same tail.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct OperatorWord {
    pub zeta: i64,
    pub letters: Vec<Letter>,
    pub tail: DecoratedPermutation,
}

impl OperatorWord {
    pub fn identity(n: usize) -> Self {
        OperatorWord { zeta: 0, letters: Vec::new(), tail: DecoratedPermutation::identity(n) }
    }

    pub fn scalar(n: usize, k: i64) -> Self {
        OperatorWord { zeta: k, ..Self::identity(n) }
    }

    pub fn from_letters(n: usize, letters: Vec<Letter>) -> Result<Self, AlgebraError> {
        let w = OperatorWord { zeta: 0, letters, tail: DecoratedPermutation::identity(n) };
        w.validate()?;
        Ok(w)
    }

    pub fn from_perm(p: DecoratedPermutation) -> Self {
        OperatorWord { zeta: 0, letters: Vec::new(), tail: p }
    }

    pub fn size(&self) -> usize {
        self.tail.len()
    }

    pub fn is_scalar_perm(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.zeta == 0 && self.letters.is_empty() && self.tail.is_identity()
    }

    pub fn validate(&self) -> Result<(), AlgebraError> {
        let n = self.size();
        for l in &self.letters {
            for x in [l.a, l.b] {
                if x.label == 0 || x.label as usize > n {
                    return Err(AlgebraError::BadLabel { label: x.label, size: n });
                }
            }
            if l.a.label == l.b.label {
                return Err(AlgebraError::RepeatedSlot(*l));
            }
        }
        Ok(())
    }

    pub fn multiply(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.size() != other.size() {
            return Err(AlgebraError::SizeMismatch(self.size(), other.size()));
        }
        let mut letters = self.letters.clone();
        letters.extend(other.letters.iter().map(|l| act_letter(&self.tail, *l)));
        Ok(OperatorWord {
            zeta: self.zeta + other.zeta,
            letters,
            tail: self.tail.compose_unchecked(&other.tail),
        })
    }

    pub fn inverse(&self) -> Self {
        let pinv = self.tail.inverse();
        let letters = self.letters.iter().rev().map(|l| act_letter(&pinv, l.inverse())).collect();
        OperatorWord { zeta: -self.zeta, letters, tail: pinv }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.size());
        for _ in 0..k.unsigned_abs() {
            acc = acc.multiply(&base).expect("same size");
        }
        acc
    }

    /// `Ad(u)(w) = u w u^-1`.
    pub fn conjugate(u: &Self, w: &Self) -> Result<Self, AlgebraError> {
        u.multiply(w)?.multiply(&u.inverse())
    }

    /// `p w p^-1`: every index is moved by `p`.
    pub fn relabel(&self, p: &DecoratedPermutation) -> Result<Self, AlgebraError> {
        if p.len() != self.size() {
            return Err(AlgebraError::SizeMismatch(self.size(), p.len()));
        }
        Ok(OperatorWord {
            zeta: self.zeta,
            letters: self.letters.iter().map(|l| act_letter(p, *l)).collect(),
            tail: p.compose_unchecked(&self.tail).compose_unchecked(&p.inverse()),
        })
    }

    pub fn with_zeta(mut self, k: i64) -> Self {
        self.zeta = k;
        self
    }

    /// Same word over a larger label set.
    pub fn extend(&self, n: usize) -> Self {
        OperatorWord { zeta: self.zeta, letters: self.letters.clone(), tail: self.tail.extend(n) }
    }
}

pub(crate) fn act_letter(p: &DecoratedPermutation, l: Letter) -> Letter {
    Letter { kind: l.kind, a: p.act_unchecked(l.a), b: p.act_unchecked(l.b) }
}

impl fmt::Display for OperatorWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts: Vec<String> = Vec::new();
        if self.zeta != 0 {
            parts.push(format!("z^{}", self.zeta));
        }
        parts.extend(self.letters.iter().map(|l| l.to_string()));
        if !self.tail.is_identity() {
            parts.push(self.tail.to_string());
        }
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

/// Formats a bare letter sequence.
pub fn fmt_letters(letters: &[Letter]) -> String {
    if letters.is_empty() {
        return "1".to_string();
    }
    letters.iter().map(|l| l.to_string()).collect::<Vec<_>>().join(" ")
}

