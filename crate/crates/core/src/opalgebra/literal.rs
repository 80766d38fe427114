//! Word literals.
//!
//! ```text
//! word    := "1" | factor*
//! factor  := "z" ["^" int]
//!          | ["~"] "T[" index "," index "]"
//!          | "R[" label "]" ["^" int]
//!          | "P[" cycle* "]"
//!          | "Ad(" word ")(" word ")"
//!          | "(" word ")" ["^" int]
//! index   := label ("^" | "v")*
//! cycle   := "(" index+ ")"
//! ```
//!
//! Permutations may appear anywhere; they are pushed to the right while
//! parsing.

use super::{AlgebraError, DecoratedIndex, DecoratedPermutation, Letter, LetterKind, OperatorWord};

pub fn parse_word(src: &str, n: usize) -> Result<OperatorWord, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, n };
    let w = p.word()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(w)
}

pub fn parse_letters(src: &str, n: usize) -> Result<Vec<Letter>, AlgebraError> {
    let w = parse_word(src, n)?;
    if w.zeta != 0 || !w.tail.is_identity() {
        return Err(AlgebraError::Parse { pos: 0, msg: format!("expected bare letters, got `{w}`") });
    }
    Ok(w.letters)
}

pub fn parse_index(src: &str, n: usize) -> Result<DecoratedIndex, AlgebraError> {
    let mut p = Parser { src: src.as_bytes(), pos: 0, n };
    let x = p.index()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(x)
}

/// Parses `P[...]` or just the cycle list inside it.
pub fn parse_perm(src: &str, n: usize) -> Result<DecoratedPermutation, AlgebraError> {
    let t = src.trim();
    let inner = t.strip_prefix("P[").and_then(|s| s.strip_suffix(']')).unwrap_or(t);
    let mut p = Parser { src: inner.as_bytes(), pos: 0, n };
    let perm = p.cycles()?;
    p.skip_ws();
    if p.pos != p.src.len() {
        return Err(p.err("unexpected input"));
    }
    Ok(perm)
}

struct Parser<'a> {
    src: &'a [u8],
    pos: usize,
    n: usize,
}

impl Parser<'_> {
    fn err(&self, msg: &str) -> AlgebraError {
        AlgebraError::Parse { pos: self.pos, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Option<u8> {
        self.skip_ws();
        self.src.get(self.pos).copied()
    }

    fn eat(&mut self, s: &str) -> bool {
        self.skip_ws();
        if self.src[self.pos..].starts_with(s.as_bytes()) {
            self.pos += s.len();
            true
        } else {
            false
        }
    }

    fn expect(&mut self, s: &str) -> Result<(), AlgebraError> {
        if self.eat(s) {
            Ok(())
        } else {
            Err(self.err(&format!("expected `{s}`")))
        }
    }

    fn uint(&mut self) -> Result<u64, AlgebraError> {
        self.skip_ws();
        let start = self.pos;
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
            self.pos += 1;
        }
        if start == self.pos {
            return Err(self.err("expected a number"));
        }
        std::str::from_utf8(&self.src[start..self.pos])
            .unwrap()
            .parse()
            .map_err(|_| self.err("number out of range"))
    }

    fn int(&mut self) -> Result<i64, AlgebraError> {
        let neg = self.eat("-");
        let v = self.uint()? as i64;
        Ok(if neg { -v } else { v })
    }

    fn exponent(&mut self) -> Result<i64, AlgebraError> {
        if self.eat("^") {
            self.int()
        } else {
            Ok(1)
        }
    }

    fn label(&mut self) -> Result<u32, AlgebraError> {
        let at = self.pos;
        let v = self.uint()?;
        if v == 0 || v as usize > self.n {
            self.pos = at;
            return Err(AlgebraError::BadLabel { label: v as u32, size: self.n });
        }
        Ok(v as u32)
    }

    fn index(&mut self) -> Result<DecoratedIndex, AlgebraError> {
        let label = self.label()?;
        let mut d = 0i64;
        loop {
            match self.src.get(self.pos) {
                Some(b'^') => d += 1,
                Some(b'v') => d -= 1,
                _ => break,
            }
            self.pos += 1;
        }
        Ok(DecoratedIndex::new(label, d))
    }

    fn cycles(&mut self) -> Result<DecoratedPermutation, AlgebraError> {
        let mut cycles = Vec::new();
        while self.eat("(") {
            let mut cyc = Vec::new();
            while !self.eat(")") {
                cyc.push(self.index()?);
            }
            cycles.push(cyc);
        }
        DecoratedPermutation::from_cycles(self.n, &cycles)
    }

    fn word(&mut self) -> Result<OperatorWord, AlgebraError> {
        let mut acc = OperatorWord::identity(self.n);
        while let Some(f) = self.factor()? {
            acc = acc.multiply(&f)?;
        }
        Ok(acc)
    }

    fn factor(&mut self) -> Result<Option<OperatorWord>, AlgebraError> {
        let n = self.n;
        let Some(c) = self.peek() else { return Ok(None) };
        let w = match c {
            b'1' if !self.src.get(self.pos + 1).is_some_and(|b| b.is_ascii_digit()) => {
                self.pos += 1;
                OperatorWord::identity(n)
            }
            b'z' => {
                self.pos += 1;
                OperatorWord::scalar(n, self.exponent()?)
            }
            b'~' | b'T' => {
                let kind = if self.eat("~") { LetterKind::TBar } else { LetterKind::T };
                self.expect("T[")?;
                let a = self.index()?;
                self.expect(",")?;
                let b = self.index()?;
                self.expect("]")?;
                if a.label == b.label {
                    return Err(self.err("a letter needs two distinct labels"));
                }
                OperatorWord::from_letters(n, vec![Letter { kind, a, b }])?
            }
            b'R' => {
                self.expect("R[")?;
                let k = self.label()?;
                self.expect("]")?;
                let e = self.exponent()?;
                OperatorWord::from_perm(DecoratedPermutation::rotation(n, k, e)?)
            }
            b'P' => {
                self.expect("P[")?;
                let p = self.cycles()?;
                self.expect("]")?;
                OperatorWord::from_perm(p)
            }
            b'A' => {
                self.expect("Ad(")?;
                let u = self.word()?;
                self.expect(")")?;
                self.expect("(")?;
                let w = self.word()?;
                self.expect(")")?;
                OperatorWord::conjugate(&u, &w)?
            }
            b'(' => {
                self.pos += 1;
                let w = self.word()?;
                self.expect(")")?;
                w.pow(self.exponent()?)
            }
            _ => return Ok(None),
        };
        Ok(Some(w))
    }
}
