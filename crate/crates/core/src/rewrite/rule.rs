use std::fmt;

use crate::opalgebra::{act_letter, fmt_letters, DecoratedIndex, DecoratedPermutation, Letter, LetterKind, OperatorWord};

use super::RewriteError;

/// Default number of base steps a derived step may expand to.
pub const DEFAULT_DERIVED_DEPTH: usize = 4;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Rule {
    /// `T_ab T_ac T_bc = T_bc T_ab`, and its inverse form
    /// `~T_bc ~T_ac ~T_ab = ~T_ab ~T_bc`.
    Pentagon,
    /// `T_ab T_{b a^} = ζ P_(a b a^)`.
    Inversion,
    /// `T_ab = T_{b^ av}`.
    Symmetry,
    /// Letters on disjoint labels commute.
    Commute,
    /// `T_ab ~T_ab = 1` and `~T_ab T_ab = 1`.
    Cancel,
    /// Moving a permutation to the tail. Words are always stored with the
    /// permutation already pushed, so this step never changes the word.
    PermPush,
    /// A local equality between two letter fragments, accepted when a chain
    /// of at most `depth` base steps connects them.
    DerivedPentagon { depth: usize },
}

impl Rule {
    pub fn name(&self) -> &'static str {
        match self {
            Rule::Pentagon => "Pentagon",
            Rule::Inversion => "Inversion",
            Rule::Symmetry => "Symmetry",
            Rule::Commute => "Commute",
            Rule::Cancel => "Cancel",
            Rule::PermPush => "PermPush",
            Rule::DerivedPentagon { .. } => "DerivedPentagon",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Direction {
    Forward,
    Backward,
}

impl Direction {
    pub fn flip(self) -> Self {
        match self {
            Direction::Forward => Direction::Backward,
            Direction::Backward => Direction::Forward,
        }
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            Direction::Forward => "fwd",
            Direction::Backward => "bwd",
        }
    }
}

/// One rewrite at a 1-based letter position.
///
/// Steps that insert letters (`Cancel bwd`, and `Inversion` in expanding
/// form) take the inserted fragment as `binding`. A derived step takes the
/// matched fragment as `binding` and its replacement as `replacement`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Step {
    pub rule: Rule,
    pub direction: Direction,
    pub position: usize,
    pub binding: Option<Vec<Letter>>,
    pub replacement: Option<Vec<Letter>>,
}

impl Step {
    pub fn new(rule: Rule, direction: Direction, position: usize) -> Self {
        Step { rule, direction, position, binding: None, replacement: None }
    }

    pub fn fwd(rule: Rule, position: usize) -> Self {
        Self::new(rule, Direction::Forward, position)
    }

    pub fn bwd(rule: Rule, position: usize) -> Self {
        Self::new(rule, Direction::Backward, position)
    }

    pub fn with_binding(mut self, letters: Vec<Letter>) -> Self {
        self.binding = Some(letters);
        self
    }

    pub fn derived(position: usize, before: Vec<Letter>, after: Vec<Letter>, depth: usize) -> Self {
        Step {
            rule: Rule::DerivedPentagon { depth },
            direction: Direction::Forward,
            position,
            binding: Some(before),
            replacement: Some(after),
        }
    }

    /// The step that undoes `self`, given the word `self` was applied to.
    pub fn inverse(&self, before: &OperatorWord) -> Step {
        let i = self.position - 1;
        let removed = |k: usize| before.letters[i..i + k].to_vec();
        match self.rule {
            Rule::Pentagon => Step::new(Rule::Pentagon, self.direction.flip(), self.position),
            Rule::Symmetry | Rule::Commute | Rule::PermPush => self.clone(),
            Rule::Inversion | Rule::Cancel => match &self.binding {
                Some(_) => Step::new(self.rule, self.direction.flip(), self.position),
                None => Step::new(self.rule, self.direction.flip(), self.position).with_binding(removed(2)),
            },
            Rule::DerivedPentagon { depth } => Step::derived(
                self.position,
                self.replacement.clone().unwrap_or_default(),
                self.binding.clone().unwrap_or_default(),
                depth,
            ),
        }
    }
}

impl fmt::Display for Step {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} {} @{}", self.rule.name(), self.direction.as_str(), self.position)?;
        if let Some(b) = &self.binding {
            write!(f, " {{{}}}", fmt_letters(b))?;
        }
        if let Some(r) = &self.replacement {
            write!(f, " -> {{{}}}", fmt_letters(r))?;
        }
        if let Rule::DerivedPentagon { depth } = self.rule {
            if depth != DEFAULT_DERIVED_DEPTH {
                write!(f, " depth={depth}")?;
            }
        }
        Ok(())
    }
}

/// `P_(a b a^)`: sends `a` to `b` and `b` to `a^`.
pub fn inversion_perm(n: usize, a: DecoratedIndex, b: DecoratedIndex) -> DecoratedPermutation {
    DecoratedPermutation::from_cycles(n, &[vec![a, b, a.shift(1)]]).expect("labels checked by caller")
}

fn distinct3(a: DecoratedIndex, b: DecoratedIndex, c: DecoratedIndex) -> bool {
    a.label != b.label && a.label != c.label && b.label != c.label
}

/// Matches `T_ab T_ac T_bc` (or the inverse form) and returns `(a, b, c)`.
pub(crate) fn match_pentagon3(x: &Letter, y: &Letter, z: &Letter) -> Option<(DecoratedIndex, DecoratedIndex, DecoratedIndex)> {
    use LetterKind::*;
    match (x.kind, y.kind, z.kind) {
        (T, T, T) if x.a == y.a && x.b == z.a && y.b == z.b && distinct3(x.a, x.b, y.b) => Some((x.a, x.b, y.b)),
        // ~T_bc ~T_ac ~T_ab
        (TBar, TBar, TBar) if y.a == z.a && x.a == z.b && x.b == y.b && distinct3(z.a, z.b, x.b) => {
            Some((z.a, z.b, x.b))
        }
        _ => None,
    }
}

/// Matches `T_bc T_ab` (or `~T_ab ~T_bc`) and returns `(a, b, c)`.
pub(crate) fn match_pentagon2(x: &Letter, y: &Letter) -> Option<(DecoratedIndex, DecoratedIndex, DecoratedIndex)> {
    use LetterKind::*;
    match (x.kind, y.kind) {
        (T, T) if x.a == y.b && distinct3(y.a, x.a, x.b) => Some((y.a, x.a, x.b)),
        (TBar, TBar) if x.b == y.a && distinct3(x.a, x.b, y.b) => Some((x.a, x.b, y.b)),
        _ => None,
    }
}

/// Matches `T_ab T_{b a^}` and returns `(a, b)`.
pub(crate) fn match_inversion(x: &Letter, y: &Letter) -> Option<(DecoratedIndex, DecoratedIndex)> {
    (x.kind == LetterKind::T && y.kind == LetterKind::T && y.a == x.b && y.b == x.a.shift(1)).then_some((x.a, x.b))
}

/// Matches `~T_{b a^} ~T_ab` and returns `(a, b)`.
pub(crate) fn match_inversion_bar(x: &Letter, y: &Letter) -> Option<(DecoratedIndex, DecoratedIndex)> {
    (x.kind == LetterKind::TBar && y.kind == LetterKind::TBar && x.a == y.b && x.b == y.a.shift(1)).then_some((y.a, y.b))
}

fn no_match(step: &Step, pattern: &str, found: &[Letter]) -> RewriteError {
    RewriteError::NoMatch {
        rule: step.rule.name(),
        position: step.position,
        pattern: pattern.to_string(),
        found: fmt_letters(found),
    }
}

/// Applies a single rewrite step.
pub fn apply_step(w: &OperatorWord, step: &Step) -> Result<OperatorWord, RewriteError> {
    let len = w.letters.len();
    let n = w.size();
    let pos = step.position;
    let inserting = step.binding.is_some() && !matches!(step.rule, Rule::DerivedPentagon { .. });
    let span = match step.rule {
        _ if inserting => 0,
        Rule::Pentagon if step.direction == Direction::Forward => 3,
        Rule::Pentagon | Rule::Inversion | Rule::Cancel | Rule::Commute => 2,
        Rule::Symmetry => 1,
        Rule::PermPush => 0,
        Rule::DerivedPentagon { .. } => step.binding.as_ref().map_or(0, |b| b.len()),
    };
    if pos == 0 || pos - 1 + span > len || (span == 0 && pos > len + 1) {
        return Err(RewriteError::BadPosition { position: pos, len });
    }
    let i = pos - 1;
    let frag = &w.letters[i..i + span];
    let splice = |mid: Vec<Letter>, zeta: i64, p: Option<DecoratedPermutation>| {
        let mut letters = w.letters[..i].to_vec();
        letters.extend(mid);
        let rest = &w.letters[i + span..];
        let tail = match &p {
            Some(p) => {
                letters.extend(rest.iter().map(|l| act_letter(p, *l)));
                p.compose(&w.tail).expect("same size")
            }
            None => {
                letters.extend_from_slice(rest);
                w.tail.clone()
            }
        };
        OperatorWord { zeta: w.zeta + zeta, letters, tail }
    };
    if let Some(bind) = &step.binding {
        let bound = OperatorWord::from_letters(n, bind.clone()).map_err(RewriteError::Algebra)?;
        debug_assert!(bound.letters.len() == bind.len());
    }
    match (step.rule, step.direction) {
        (Rule::Pentagon, Direction::Forward) => {
            let (a, b, c) = match_pentagon3(&frag[0], &frag[1], &frag[2])
                .ok_or_else(|| no_match(step, "T[a,b] T[a,c] T[b,c] | ~T[b,c] ~T[a,c] ~T[a,b]", frag))?;
            let out = if frag[0].kind == LetterKind::T {
                vec![Letter::t(b, c), Letter::t(a, b)]
            } else {
                vec![Letter::tbar(a, b), Letter::tbar(b, c)]
            };
            Ok(splice(out, 0, None))
        }
        (Rule::Pentagon, Direction::Backward) => {
            let (a, b, c) = match_pentagon2(&frag[0], &frag[1])
                .ok_or_else(|| no_match(step, "T[b,c] T[a,b] | ~T[a,b] ~T[b,c]", frag))?;
            let out = if frag[0].kind == LetterKind::T {
                vec![Letter::t(a, b), Letter::t(a, c), Letter::t(b, c)]
            } else {
                vec![Letter::tbar(b, c), Letter::tbar(a, c), Letter::tbar(a, b)]
            };
            Ok(splice(out, 0, None))
        }
        (Rule::Inversion, dir) => match (&step.binding, dir) {
            (None, Direction::Forward) => {
                let (a, b) = match_inversion(&frag[0], &frag[1]).ok_or_else(|| no_match(step, "T[a,b] T[b,a^]", frag))?;
                Ok(splice(vec![], 1, Some(inversion_perm(n, a, b))))
            }
            (None, Direction::Backward) => {
                let (a, b) =
                    match_inversion_bar(&frag[0], &frag[1]).ok_or_else(|| no_match(step, "~T[b,a^] ~T[a,b]", frag))?;
                Ok(splice(vec![], -1, Some(inversion_perm(n, a, b).inverse())))
            }
            (Some(bind), Direction::Forward) => {
                let (a, b) = (bind.len() == 2)
                    .then(|| match_inversion_bar(&bind[0], &bind[1]))
                    .flatten()
                    .ok_or_else(|| RewriteError::BadBinding(format!("expected ~T[b,a^] ~T[a,b], got {}", fmt_letters(bind))))?;
                Ok(splice(bind.clone(), 1, Some(inversion_perm(n, a, b))))
            }
            (Some(bind), Direction::Backward) => {
                let (a, b) = (bind.len() == 2)
                    .then(|| match_inversion(&bind[0], &bind[1]))
                    .flatten()
                    .ok_or_else(|| RewriteError::BadBinding(format!("expected T[a,b] T[b,a^], got {}", fmt_letters(bind))))?;
                Ok(splice(bind.clone(), -1, Some(inversion_perm(n, a, b).inverse())))
            }
        },
        (Rule::Symmetry, _) => Ok(splice(vec![frag[0].symmetric()], 0, None)),
        (Rule::Commute, _) => {
            if frag[0].shares_label(&frag[1]) {
                return Err(no_match(step, "two letters on disjoint labels", frag));
            }
            Ok(splice(vec![frag[1], frag[0]], 0, None))
        }
        (Rule::Cancel, Direction::Forward) => {
            if frag[1] != frag[0].inverse() {
                return Err(no_match(step, "X ~X", frag));
            }
            Ok(splice(vec![], 0, None))
        }
        (Rule::Cancel, Direction::Backward) => {
            let bind = step.binding.as_ref().ok_or_else(|| RewriteError::BadBinding("Cancel bwd needs {X ~X}".into()))?;
            if bind.len() != 2 || bind[1] != bind[0].inverse() {
                return Err(RewriteError::BadBinding(format!("expected X ~X, got {}", fmt_letters(bind))));
            }
            Ok(splice(bind.clone(), 0, None))
        }
        (Rule::PermPush, _) => Ok(w.clone()),
        (Rule::DerivedPentagon { depth }, _) => {
            let before = step.binding.as_ref().ok_or_else(|| RewriteError::BadBinding("derived step needs {before}".into()))?;
            let after =
                step.replacement.as_ref().ok_or_else(|| RewriteError::BadBinding("derived step needs -> {after}".into()))?;
            if frag != before.as_slice() {
                return Err(no_match(step, &fmt_letters(before), frag));
            }
            OperatorWord::from_letters(n, after.clone()).map_err(RewriteError::Algebra)?;
            if super::search::derived_step_verify(n, before, after, depth).is_none() {
                return Err(RewriteError::NotDerivable {
                    before: fmt_letters(before),
                    after: fmt_letters(after),
                    depth,
                });
            }
            Ok(splice(after.clone(), 0, None))
        }
    }
}
