//! Proof scripts: a start word, a list of steps with optional assertions,
//! and an expected end word.
//!
//! ```text
//! # comment
//! labels 3
//! start: T[1,2] T[1,3] T[2,3]
//! Pentagon fwd @1
//! => T[2,3] T[1,2]
//! expect: T[2,3] T[1,2]
//! ```

use std::fmt::Write as _;

use crate::opalgebra::{fmt_letters, parse_letters, parse_word, OperatorWord};

use super::rule::{apply_step, Direction, Rule, Step, DEFAULT_DERIVED_DEPTH};
use super::RewriteError;

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ItemKind {
    Step(Step),
    /// The word reached at this point must equal the given word.
    Assert(OperatorWord),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Item {
    /// 1-based source line, 0 for scripts built in memory.
    pub line: usize,
    pub kind: ItemKind,
    pub note: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Default)]
pub struct Script {
    pub size: usize,
    pub start: Option<OperatorWord>,
    pub expected: Option<OperatorWord>,
    pub items: Vec<Item>,
}

impl Script {
    pub fn new(size: usize) -> Self {
        Script { size, ..Default::default() }
    }

    pub fn push_step(&mut self, step: Step) {
        self.items.push(Item { line: 0, kind: ItemKind::Step(step), note: None });
    }

    pub fn push_assert(&mut self, word: OperatorWord, note: Option<String>) {
        self.items.push(Item { line: 0, kind: ItemKind::Assert(word), note });
    }

    pub fn steps(&self) -> impl Iterator<Item = &Step> {
        self.items.iter().filter_map(|it| match &it.kind {
            ItemKind::Step(s) => Some(s),
            ItemKind::Assert(_) => None,
        })
    }

    pub fn step_count(&self) -> usize {
        self.steps().count()
    }

    pub fn parse(src: &str) -> Result<Script, RewriteError> {
        let mut script = Script::default();
        for (ln, raw) in src.lines().enumerate() {
            let line = ln + 1;
            let (body, note) = match raw.find('#') {
                Some(k) => (&raw[..k], Some(raw[k + 1..].trim().to_string()).filter(|s| !s.is_empty())),
                None => (raw, None),
            };
            let body = body.trim();
            if body.is_empty() {
                continue;
            }
            let perr = |msg: String| RewriteError::ScriptParse { line, msg };
            if let Some(rest) = body.strip_prefix("labels") {
                script.size = rest.trim().parse().map_err(|_| perr(format!("bad label count `{}`", rest.trim())))?;
                continue;
            }
            if script.size == 0 {
                return Err(perr("`labels <n>` must come first".into()));
            }
            let word = |s: &str| parse_word(s, script.size).map_err(|e| perr(e.to_string()));
            if let Some(rest) = body.strip_prefix("start:") {
                script.start = Some(word(rest)?);
            } else if let Some(rest) = body.strip_prefix("expect:") {
                script.expected = Some(word(rest)?);
            } else if let Some(rest) = body.strip_prefix("=>") {
                script.items.push(Item { line, kind: ItemKind::Assert(word(rest)?), note });
            } else {
                let step = parse_step(body, script.size).map_err(perr)?;
                script.items.push(Item { line, kind: ItemKind::Step(step), note });
            }
        }
        if script.size == 0 {
            return Err(RewriteError::ScriptParse { line: 0, msg: "empty script".into() });
        }
        Ok(script)
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        writeln!(out, "labels {}", self.size).unwrap();
        if let Some(s) = &self.start {
            writeln!(out, "start: {s}").unwrap();
        }
        for it in &self.items {
            match &it.kind {
                ItemKind::Step(s) => write!(out, "{s}").unwrap(),
                ItemKind::Assert(w) => write!(out, "=> {w}").unwrap(),
            }
            if let Some(n) = &it.note {
                write!(out, "  # {n}").unwrap();
            }
            out.push('\n');
        }
        if let Some(e) = &self.expected {
            writeln!(out, "expect: {e}").unwrap();
        }
        out
    }
}

fn parse_step(body: &str, n: usize) -> Result<Step, String> {
    let (head, rest) = match body.find('{') {
        Some(k) => (&body[..k], &body[k..]),
        None => (body, ""),
    };
    let mut toks = head.split_whitespace();
    let rule_name = toks.next().ok_or("missing rule")?;
    let dir = match toks.next() {
        Some("fwd") => Direction::Forward,
        Some("bwd") => Direction::Backward,
        other => return Err(format!("expected fwd|bwd, got {other:?}")),
    };
    let pos: usize = toks
        .next()
        .and_then(|t| t.strip_prefix('@'))
        .and_then(|t| t.parse().ok())
        .ok_or("expected @<position>")?;
    let mut depth = DEFAULT_DERIVED_DEPTH;
    for t in toks {
        depth = t.strip_prefix("depth=").and_then(|d| d.parse().ok()).ok_or(format!("unexpected `{t}`"))?;
    }
    let rule = match rule_name {
        "Pentagon" => Rule::Pentagon,
        "Inversion" => Rule::Inversion,
        "Symmetry" => Rule::Symmetry,
        "Commute" => Rule::Commute,
        "Cancel" => Rule::Cancel,
        "PermPush" => Rule::PermPush,
        "DerivedPentagon" | "Derived" => Rule::DerivedPentagon { depth },
        other => return Err(format!("unknown rule `{other}`")),
    };
    let mut step = Step::new(rule, dir, pos);
    let mut rest = rest.trim();
    let mut groups = Vec::new();
    while !rest.is_empty() {
        let inner_end = rest.find('}').ok_or("unclosed `{`")?;
        let inner = rest.strip_prefix('{').ok_or("expected `{`")?;
        groups.push(parse_letters(&inner[..inner_end - 1], n).map_err(|e| e.to_string())?);
        rest = rest[inner_end + 1..].trim();
        if let Some(r) = rest.strip_prefix("->") {
            rest = r.trim();
        } else if let Some(r) = rest.strip_prefix("depth=") {
            let (d, r) = r.split_at(r.find(char::is_whitespace).unwrap_or(r.len()));
            depth = d.parse().map_err(|_| format!("bad depth `{d}`"))?;
            step.rule = Rule::DerivedPentagon { depth };
            rest = r.trim();
        }
    }
    let mut groups = groups.into_iter();
    step.binding = groups.next();
    step.replacement = groups.next();
    if matches!(step.rule, Rule::DerivedPentagon { .. }) && step.replacement.is_none() {
        return Err("derived step needs {before} -> {after}".into());
    }
    Ok(step)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StepRecord {
    /// 1-based step number.
    pub index: usize,
    pub line: usize,
    pub step: String,
    pub zeta: i64,
    pub letters: usize,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptFailure {
    /// Number of the failing step, or of the last step before a failed
    /// assertion.
    pub step_index: usize,
    pub line: usize,
    pub message: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScriptReport {
    pub records: Vec<StepRecord>,
    pub assertions_checked: usize,
    pub failure: Option<ScriptFailure>,
    pub final_word: OperatorWord,
    pub expected_matches: bool,
    pub forward_inversions: usize,
    pub backward_inversions: usize,
}

impl ScriptReport {
    pub fn passed(&self) -> bool {
        self.failure.is_none() && self.expected_matches
    }
}

/// Replays `script` from `start` and compares the result with `expected`.
pub fn check_script(start: &OperatorWord, script: &Script, expected: &OperatorWord) -> ScriptReport {
    let mut cur = start.clone();
    let mut records = Vec::new();
    let mut failure = None;
    let mut assertions_checked = 0;
    let (mut fi, mut bi) = (0, 0);
    for it in &script.items {
        match &it.kind {
            ItemKind::Step(s) => match apply_step(&cur, s) {
                Ok(next) => {
                    if s.rule == Rule::Inversion {
                        if next.zeta > cur.zeta {
                            fi += 1;
                        } else {
                            bi += 1;
                        }
                    }
                    cur = next;
                    records.push(StepRecord {
                        index: records.len() + 1,
                        line: it.line,
                        step: s.to_string(),
                        zeta: cur.zeta,
                        letters: cur.letters.len(),
                    });
                }
                Err(e) => {
                    failure = Some(ScriptFailure { step_index: records.len() + 1, line: it.line, message: e.to_string() });
                    break;
                }
            },
            ItemKind::Assert(w) => {
                assertions_checked += 1;
                if *w != cur {
                    failure = Some(ScriptFailure {
                        step_index: records.len(),
                        line: it.line,
                        message: format!("assertion failed: expected `{w}`, reached `{cur}`"),
                    });
                    break;
                }
            }
        }
    }
    let expected_matches = failure.is_none() && cur == *expected;
    ScriptReport {
        records,
        assertions_checked,
        failure,
        final_word: cur,
        expected_matches,
        forward_inversions: fi,
        backward_inversions: bi,
    }
}

/// Formats a letter fragment the way step bindings are written.
pub fn fmt_fragment(letters: &[crate::opalgebra::Letter]) -> String {
    format!("{{{}}}", fmt_letters(letters))
}
