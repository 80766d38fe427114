//! Building scripts by search between consecutive checkpoint words.
//!
//! Checkpoint files list one word per `wp` line; `def` lines name words
//! that later lines use as `{name}`:
//!
//! ```text
//! labels 6
//! def a = T[1,3^]T[1,2^]
//! wp {a}{a}            # start
//! wp z T[1,3^] ...     # after the inversion
//! ```

use crate::opalgebra::{parse_word, OperatorWord};

use super::script::Script;
use super::search::{connect_local, ConnectOptions};
use super::RewriteError;

/// A word the script must pass through, with an optional note.
#[derive(Clone, Debug)]
pub struct Waypoint {
    pub word: OperatorWord,
    pub note: Option<String>,
    /// Line in the checkpoint file, 0 when built in code.
    pub line: usize,
}

impl Waypoint {
    pub fn new(word: OperatorWord, note: impl Into<String>) -> Self {
        let note = note.into();
        Waypoint { word, note: (!note.is_empty()).then_some(note), line: 0 }
    }
}

fn substitute(src: &str, defs: &[(String, String)], line: usize) -> Result<String, RewriteError> {
    let mut out = String::new();
    let mut rest = src;
    while let Some(open) = rest.find('{') {
        out.push_str(&rest[..open]);
        let close = rest[open..]
            .find('}')
            .ok_or_else(|| RewriteError::ScriptParse { line, msg: "unclosed `{`".into() })?;
        let name = rest[open + 1..open + close].trim();
        let body = defs
            .iter()
            .rev()
            .find(|(k, _)| k == name)
            .ok_or_else(|| RewriteError::ScriptParse { line, msg: format!("unknown name `{name}`") })?;
        out.push('(');
        out.push_str(&body.1);
        out.push(')');
        rest = &rest[open + close + 1..];
    }
    out.push_str(rest);
    Ok(out)
}

/// Reads a checkpoint file.
pub fn parse_waypoints(src: &str) -> Result<Vec<Waypoint>, RewriteError> {
    let mut size = None;
    let mut defs: Vec<(String, String)> = Vec::new();
    let mut out = Vec::new();
    for (i, raw) in src.lines().enumerate() {
        let line = i + 1;
        let (body, note) = match raw.split_once('#') {
            Some((b, c)) => (b.trim(), c.trim()),
            None => (raw.trim(), ""),
        };
        if body.is_empty() {
            continue;
        }
        let err = |msg: String| RewriteError::ScriptParse { line, msg };
        let (key, rest) = body.split_once(char::is_whitespace).unwrap_or((body, ""));
        match key {
            "labels" => size = Some(rest.trim().parse::<usize>().map_err(|_| err("bad label count".into()))?),
            "def" => {
                let (name, w) = rest.split_once('=').ok_or_else(|| err("expected `def name = word`".into()))?;
                let w = substitute(w.trim(), &defs, line)?;
                defs.push((name.trim().to_string(), w));
            }
            "wp" => {
                let n = size.ok_or_else(|| err("`labels` must come first".into()))?;
                let text = substitute(rest.trim(), &defs, line)?;
                let word = parse_word(&text, n).map_err(|e| err(e.to_string()))?;
                out.push(Waypoint { word, note: (!note.is_empty()).then(|| note.to_string()), line });
            }
            _ => return Err(err(format!("unknown key `{key}`"))),
        }
    }
    Ok(out)
}

/// Connects each waypoint to the next. On failure returns the index of the
/// leg (`i` means waypoint `i` to `i + 1`) that could not be closed.
pub fn synthesize(waypoints: &[Waypoint], opts: ConnectOptions) -> Result<Script, usize> {
    let first = waypoints.first().ok_or(0usize)?;
    let mut script = Script::new(first.word.size());
    script.start = Some(first.word.clone());
    for (i, pair) in waypoints.windows(2).enumerate() {
        let steps = connect_local(&pair[0].word, &pair[1].word, opts).ok_or(i)?;
        for s in steps {
            script.push_step(s);
        }
        script.push_assert(pair[1].word.clone(), pair[1].note.clone());
    }
    script.expected = waypoints.last().map(|w| w.word.clone());
    Ok(script)
}

/// Like [`synthesize`], but a waypoint that cannot be reached is skipped and
/// the search goes on to the following one. Returns the script and the
/// indices of skipped waypoints. The first and last waypoints are never
/// skipped; `None` when the last one cannot be reached at all.
pub fn synthesize_skipping(waypoints: &[Waypoint], opts: ConnectOptions) -> Option<(Script, Vec<usize>)> {
    synthesize_with(waypoints, opts, |_, _, _| {})
}

/// [`synthesize_skipping`] calling `progress(from, to, found)` after every
/// connection attempt.
pub fn synthesize_with(
    waypoints: &[Waypoint],
    opts: ConnectOptions,
    mut progress: impl FnMut(usize, usize, bool),
) -> Option<(Script, Vec<usize>)> {
    let first = waypoints.first()?;
    let mut script = Script::new(first.word.size());
    script.start = Some(first.word.clone());
    let mut skipped = Vec::new();
    let mut at = 0;
    while at + 1 < waypoints.len() {
        let mut next = at + 1;
        let steps = loop {
            let found = connect_local(&waypoints[at].word, &waypoints[next].word, opts);
            progress(at, next, found.is_some());
            if let Some(s) = found {
                break s;
            }
            if next + 1 == waypoints.len() {
                return None;
            }
            skipped.push(next);
            next += 1;
        };
        for s in steps {
            script.push_step(s);
        }
        script.push_assert(waypoints[next].word.clone(), waypoints[next].note.clone());
        at = next;
    }
    script.expected = waypoints.last().map(|w| w.word.clone());
    Some((script, skipped))
}
