use std::fmt;
use std::path::{Path, PathBuf};

use crate::opalgebra::{parse_perm, parse_word, OperatorWord};
use crate::rewrite::{check_script, normalize_bounded, Script};

use super::QuantizeError;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RelationKind {
    Lantern,
    Chain,
    /// The relation around puncture `i`.
    Puncture(usize),
    /// Twists along disjoint curves commute.
    Braid0,
    /// Twists along curves meeting once braid.
    Braid1,
}

impl fmt::Display for RelationKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RelationKind::Lantern => write!(f, "lantern"),
            RelationKind::Chain => write!(f, "chain"),
            RelationKind::Puncture(i) => write!(f, "puncture {i}"),
            RelationKind::Braid0 => write!(f, "braid0"),
            RelationKind::Braid1 => write!(f, "braid1"),
        }
    }
}

/// Named twist words and the two products a relation says are equal up to
/// a scalar.
///
/// The words are the raw images `W` of the twists; products are taken in
/// the order listed.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RelationInstance {
    pub kind: RelationKind,
    pub size: usize,
    pub twists: Vec<(String, OperatorWord)>,
    pub lhs: Vec<String>,
    pub rhs: Vec<String>,
    /// Script named by the definition file, relative to that file.
    pub script: Option<PathBuf>,
}

impl RelationInstance {
    pub fn new(
        kind: RelationKind,
        size: usize,
        twists: Vec<(String, OperatorWord)>,
        lhs: &[&str],
        rhs: &[&str],
    ) -> Result<Self, QuantizeError> {
        let r = RelationInstance {
            kind,
            size,
            twists,
            lhs: lhs.iter().map(|s| s.to_string()).collect(),
            rhs: rhs.iter().map(|s| s.to_string()).collect(),
            script: None,
        };
        r.check_pattern()?;
        Ok(r)
    }

    /// Reads a definition file. A `script` entry is taken relative to the
    /// file's directory.
    pub fn load(path: &Path) -> Result<Self, QuantizeError> {
        let src = std::fs::read_to_string(path).map_err(|e| QuantizeError::Io(format!("{}: {e}", path.display())))?;
        let mut r = Self::parse(&src)?;
        if let Some(s) = &r.script {
            r.script = Some(path.parent().unwrap_or(Path::new("")).join(s));
        }
        Ok(r)
    }

    /// The script named by the definition, parsed.
    pub fn read_script(&self) -> Result<Option<Script>, QuantizeError> {
        let Some(path) = &self.script else { return Ok(None) };
        let src = std::fs::read_to_string(path).map_err(|e| QuantizeError::Io(format!("{}: {e}", path.display())))?;
        Ok(Some(Script::parse(&src)?))
    }

    pub fn twist(&self, name: &str) -> Option<&OperatorWord> {
        self.twists.iter().find(|(n, _)| n == name).map(|(_, w)| w)
    }

    fn product(&self, names: &[String]) -> Result<OperatorWord, QuantizeError> {
        let mut out = OperatorWord::identity(self.size);
        for n in names {
            let w = self.twist(n).ok_or_else(|| QuantizeError::BadPattern(format!("no twist named `{n}`")))?;
            out = out.multiply(w)?;
        }
        Ok(out)
    }

    pub fn lhs_word(&self) -> Result<OperatorWord, QuantizeError> {
        self.product(&self.lhs)
    }

    pub fn rhs_word(&self) -> Result<OperatorWord, QuantizeError> {
        self.product(&self.rhs)
    }

    /// The same relation with every twist conjugated by `u`.
    pub fn conjugated(&self, u: &OperatorWord) -> Result<Self, QuantizeError> {
        let mut r = self.clone();
        for (_, w) in &mut r.twists {
            *w = OperatorWord::conjugate(u, w)?;
        }
        Ok(r)
    }

    /// The same relation with every twist relabeled by `p`.
    pub fn relabeled(&self, p: &crate::opalgebra::DecoratedPermutation) -> Result<Self, QuantizeError> {
        let mut r = self.clone();
        for (_, w) in &mut r.twists {
            *w = w.relabel(p)?;
        }
        Ok(r)
    }

    /// Checks that the name lists have the shape of the relation kind.
    pub fn check_pattern(&self) -> Result<(), QuantizeError> {
        let (l, r) = (&self.lhs, &self.rhs);
        let distinct = |v: &[String]| v.iter().enumerate().all(|(i, x)| !v[..i].contains(x));
        let ok = match self.kind {
            RelationKind::Lantern => l.len() == 3 && r.len() == 4 && distinct(l) && distinct(r),
            RelationKind::Puncture(_) => l.len() == 3 && r.len() == 3 && distinct(l) && distinct(r),
            RelationKind::Chain => {
                l.len() == 12
                    && distinct(&l[..3])
                    && (3..12).all(|i| l[i] == l[i % 3])
                    && r.len() == 2
                    && distinct(r)
                    && r.iter().all(|x| !l.contains(x))
            }
            RelationKind::Braid0 => l.len() == 2 && r.len() == 2 && l[0] != l[1] && l[0] == r[1] && l[1] == r[0],
            RelationKind::Braid1 => {
                l.len() == 3 && r.len() == 3 && l[0] != l[1] && l[0] == l[2] && r[0] == l[1] && r[1] == l[0] && r[2] == l[1]
            }
        };
        if !ok {
            return Err(QuantizeError::BadPattern(format!(
                "{} does not fit {}: {} = {}",
                self.kind,
                self.kind,
                l.join(" "),
                r.join(" ")
            )));
        }
        for n in l.iter().chain(r) {
            if self.twist(n).is_none() {
                return Err(QuantizeError::BadPattern(format!("no twist named `{n}`")));
            }
        }
        Ok(())
    }

    /// Reads the definition format:
    ///
    /// ```text
    /// kind lantern
    /// labels 8
    /// twist a3 = T[3,5v]T[3,8^]T[3,7^]T[3,6^]
    /// twist b = relabel P[(1 2)] a3
    /// lhs a12 a23 a13
    /// rhs a2 a1 a0 a3
    /// script lantern.script
    /// ```
    pub fn parse(src: &str) -> Result<Self, QuantizeError> {
        let mut kind = None;
        let mut size = None;
        let mut twists: Vec<(String, OperatorWord)> = Vec::new();
        let (mut lhs, mut rhs, mut script) = (Vec::new(), Vec::new(), None);
        for (ln, raw) in src.lines().enumerate() {
            let line = raw.split('#').next().unwrap().trim();
            if line.is_empty() {
                continue;
            }
            let err = |msg: String| QuantizeError::RelationParse { line: ln + 1, msg };
            let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
            let rest = rest.trim();
            match key {
                "kind" => {
                    let mut it = rest.split_whitespace();
                    kind = Some(match (it.next(), it.next()) {
                        (Some("lantern"), None) => RelationKind::Lantern,
                        (Some("chain"), None) => RelationKind::Chain,
                        (Some("braid0"), None) => RelationKind::Braid0,
                        (Some("braid1"), None) => RelationKind::Braid1,
                        (Some("puncture"), Some(i)) => {
                            RelationKind::Puncture(i.parse().map_err(|_| err(format!("bad puncture index `{i}`")))?)
                        }
                        _ => return Err(err(format!("unknown kind `{rest}`"))),
                    })
                }
                "labels" => size = Some(rest.parse::<usize>().map_err(|_| err(format!("bad label count `{rest}`")))?),
                "twist" => {
                    let n = size.ok_or_else(|| err("`labels` must come before the twists".into()))?;
                    let (name, body) = rest.split_once('=').ok_or_else(|| err("expected `twist name = word`".into()))?;
                    let name = name.trim().to_string();
                    let body = body.trim();
                    let w = if let Some(r) = body.strip_prefix("relabel") {
                        let r = r.trim();
                        let cut = r.rfind(char::is_whitespace).ok_or_else(|| err("expected `relabel P[..] name`".into()))?;
                        let p = parse_perm(r[..cut].trim(), n).map_err(|e| err(e.to_string()))?;
                        let from = r[cut..].trim();
                        let base = twists
                            .iter()
                            .find(|(k, _)| k == from)
                            .ok_or_else(|| err(format!("no twist named `{from}` yet")))?;
                        base.1.relabel(&p).map_err(|e| err(e.to_string()))?
                    } else {
                        parse_word(body, n).map_err(|e| err(e.to_string()))?
                    };
                    if twists.iter().any(|(k, _)| *k == name) {
                        return Err(err(format!("twist `{name}` defined twice")));
                    }
                    twists.push((name, w));
                }
                "lhs" => lhs = rest.split_whitespace().map(String::from).collect(),
                "rhs" => rhs = rest.split_whitespace().map(String::from).collect(),
                "script" => script = Some(PathBuf::from(rest)),
                _ => return Err(err(format!("unknown key `{key}`"))),
            }
        }
        let missing = |what: &str| QuantizeError::RelationParse { line: 0, msg: format!("missing `{what}`") };
        let r = RelationInstance {
            kind: kind.ok_or_else(|| missing("kind"))?,
            size: size.ok_or_else(|| missing("labels"))?,
            twists,
            lhs,
            rhs,
            script,
        };
        r.check_pattern()?;
        Ok(r)
    }
}

#[derive(Clone, Debug)]
pub enum LiftMethod<'a> {
    /// Replay a script from the left-hand product.
    Script(&'a Script),
    /// Reduce `lhs · rhs^-1` with [`normalize_bounded`].
    Search { budget: usize },
}

/// The scalar by which a relation fails to close, in each normalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct LiftExponent {
    /// `k` with `Π W_lhs = ζ^k Π W_rhs` for the raw images.
    pub raw: i64,
    /// The same for the words `F̄ = ζ^-normalization W`.
    pub fbar: i64,
    /// The exponent for the normalized lifts, the inverses of the `F̄`.
    pub dtilde: i64,
    /// `dtilde` as a power of `z = ζ^normalization`, when it is one.
    pub z: Option<i64>,
}

impl LiftExponent {
    pub fn from_raw(raw: i64, lhs_len: usize, rhs_len: usize, normalization: i64) -> Self {
        let fbar = raw - normalization * (lhs_len as i64 - rhs_len as i64);
        let dtilde = -fbar;
        let z = (normalization != 0 && dtilde % normalization == 0).then(|| dtilde / normalization);
        LiftExponent { raw, fbar, dtilde, z }
    }
}

impl fmt::Display for LiftExponent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "raw ζ^{}, F̄ ζ^{}, D̃ ζ^{}", self.raw, self.fbar, self.dtilde)?;
        if let Some(z) = self.z {
            write!(f, " = z^{z}")?;
        }
        Ok(())
    }
}

/// Establishes the lift of `rel`. Never guesses: a script that fails, ends
/// on a different word, or a search that runs out gives `NotEstablished`.
pub fn lift_exponent(
    rel: &RelationInstance,
    method: LiftMethod<'_>,
    normalization: i64,
) -> Result<LiftExponent, QuantizeError> {
    let lhs = rel.lhs_word()?;
    let rhs = rel.rhs_word()?;
    let raw = match method {
        LiftMethod::Script(script) => {
            if script.start.as_ref().is_some_and(|s| *s != lhs) {
                return Err(QuantizeError::NotEstablished("the script starts from a different word".into()));
            }
            let report = check_script(&lhs, script, &rhs);
            if let Some(f) = report.failure {
                return Err(QuantizeError::NotEstablished(format!("step {}: {}", f.step_index, f.message)));
            }
            let end = &report.final_word;
            if end.letters != rhs.letters || end.tail != rhs.tail {
                return Err(QuantizeError::NotEstablished(format!("the script ends at `{end}`, not at `{rhs}`")));
            }
            end.zeta - rhs.zeta
        }
        LiftMethod::Search { budget } => {
            let w = lhs.multiply(&rhs.inverse())?;
            match normalize_bounded(&w, budget) {
                Some((k, p)) if p.is_identity() => k,
                Some((_, p)) => {
                    return Err(QuantizeError::NotEstablished(format!("the quotient reduces to a permutation {p}")))
                }
                None => return Err(QuantizeError::NotEstablished(format!("search budget {budget} exhausted"))),
            }
        }
    };
    Ok(LiftExponent::from_raw(raw, rel.lhs.len(), rel.rhs.len(), normalization))
}
