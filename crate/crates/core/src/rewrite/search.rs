//! Search over words up to Commute and Symmetry.
//!
//! States are canonical words (see [`super::trace`]). An edge is a macro
//! move: a pentagon, inversion or cancellation applied to letters that can be
//! made adjacent by commutations. Every macro expands back into concrete base
//! steps, so anything found here is replayed by the kernel before it is
//! returned.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashMap};

use crate::opalgebra::{act_letter, DecoratedPermutation, Letter, LetterKind, OperatorWord};

use super::rule::{
    apply_step, inversion_perm, match_inversion, match_inversion_bar, match_pentagon2, match_pentagon3, Rule,
    Step,
};
use super::trace::{canonical_word, canonicalize_steps, mask, sort_steps};

/// Default node budget for searches.
pub const DEFAULT_BUDGET: usize = 1_000_000;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
enum MacroKind {
    PentagonContract,
    PentagonExpand,
    InversionContract,
    Cancel,
}

/// A rule applied to letters at canonical positions `pos[..len]`; `sym[i]`
/// says the letter is first rewritten to its other spelling.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
struct Macro {
    kind: MacroKind,
    len: u8,
    pos: [u16; 3],
    sym: [bool; 3],
}

fn forms(l: Letter) -> [(Letter, bool); 2] {
    [(l, false), (l.symmetric(), true)]
}

/// New order making `set` (sorted positions) contiguous, or `None` when the
/// set is not convex in the dependency order. Returns the order and the rank
/// of the first block letter.
fn convex_order(letters: &[Letter], set: &[usize]) -> Option<(Vec<usize>, usize)> {
    let lo = set[0];
    let hi = *set.last().unwrap();
    let mut taint = 0u64;
    let mut after_mask = 0u64;
    let mut after = Vec::new();
    let mut before = Vec::new();
    for m in lo..=hi {
        let mm = mask(&letters[m]);
        if set.contains(&m) {
            if mm & after_mask != 0 {
                return None;
            }
            taint |= mm;
        } else if mm & taint != 0 {
            after.push(m);
            after_mask |= mm;
            taint |= mm;
        } else {
            before.push(m);
        }
    }
    let mut order: Vec<usize> = (0..lo).collect();
    order.extend(before);
    let start = order.len();
    order.extend_from_slice(set);
    order.extend(after);
    order.extend(hi + 1..letters.len());
    Some((order, start))
}

fn enumerate(w: &OperatorWord, allow_expand: bool, out: &mut Vec<Macro>) {
    let c = &w.letters;
    let n = c.len();
    let masks: Vec<u64> = c.iter().map(mask).collect();
    for i in 0..n {
        for j in i + 1..n {
            if masks[i] & masks[j] == 0 {
                continue;
            }
            let pair_convex = convex_order(c, &[i, j]).is_some();
            for (x, sx) in forms(c[i]) {
                for (y, sy) in forms(c[j]) {
                    let mac2 = |kind| Macro { kind, len: 2, pos: [i as u16, j as u16, 0], sym: [sx, sy, false] };
                    if pair_convex {
                        if match_inversion(&x, &y).is_some() || match_inversion_bar(&x, &y).is_some() {
                            out.push(mac2(MacroKind::InversionContract));
                        }
                        if allow_expand && match_pentagon2(&x, &y).is_some() {
                            out.push(mac2(MacroKind::PentagonExpand));
                        }
                        if !sx && !sy && y == x.inverse() {
                            out.push(mac2(MacroKind::Cancel));
                        }
                    }
                    if x.kind != y.kind {
                        continue;
                    }
                    let need = match x.kind {
                        LetterKind::T if x.a == y.a && x.b.label != y.b.label => Letter::t(x.b, y.b),
                        LetterKind::TBar if x.b == y.b && x.a.label != y.a.label => Letter::tbar(y.a, x.a),
                        _ => continue,
                    };
                    let nc = need.canonical();
                    let Some(k) = (j + 1..n).find(|&k| c[k] == nc) else { continue };
                    let sz = need != nc;
                    if match_pentagon3(&x, &y, &need).is_some() && convex_order(c, &[i, j, k]).is_some() {
                        out.push(Macro {
                            kind: MacroKind::PentagonContract,
                            len: 3,
                            pos: [i as u16, j as u16, k as u16],
                            sym: [sx, sy, sz],
                        });
                    }
                }
            }
        }
    }
}

/// Applies a macro to a canonical word. Returns the resulting (not yet
/// canonical) word and, when asked, the concrete steps.
fn apply_macro(w: &OperatorWord, m: &Macro, steps: Option<&mut Vec<Step>>) -> OperatorWord {
    let set: Vec<usize> = m.pos[..m.len as usize].iter().map(|&p| p as usize).collect();
    let (order, start) = convex_order(&w.letters, &set).expect("macro enumerated on a convex set");
    let mut block: Vec<Letter> = Vec::with_capacity(3);
    for (t, &p) in set.iter().enumerate() {
        let l = w.letters[p];
        block.push(if m.sym[t] { l.symmetric() } else { l });
    }
    let n = w.size();
    let (mid, dz, perm): (Vec<Letter>, i64, Option<DecoratedPermutation>) = match m.kind {
        MacroKind::PentagonContract => {
            let (a, b, c) = match_pentagon3(&block[0], &block[1], &block[2]).unwrap();
            if block[0].kind == LetterKind::T {
                (vec![Letter::t(b, c), Letter::t(a, b)], 0, None)
            } else {
                (vec![Letter::tbar(a, b), Letter::tbar(b, c)], 0, None)
            }
        }
        MacroKind::PentagonExpand => {
            let (a, b, c) = match_pentagon2(&block[0], &block[1]).unwrap();
            if block[0].kind == LetterKind::T {
                (vec![Letter::t(a, b), Letter::t(a, c), Letter::t(b, c)], 0, None)
            } else {
                (vec![Letter::tbar(b, c), Letter::tbar(a, c), Letter::tbar(a, b)], 0, None)
            }
        }
        MacroKind::InversionContract => {
            if let Some((a, b)) = match_inversion(&block[0], &block[1]) {
                (vec![], 1, Some(inversion_perm(n, a, b)))
            } else {
                let (a, b) = match_inversion_bar(&block[0], &block[1]).unwrap();
                (vec![], -1, Some(inversion_perm(n, a, b).inverse()))
            }
        }
        MacroKind::Cancel => (vec![], 0, None),
    };
    if let Some(steps) = steps {
        sort_steps(&order, 0, steps);
        for (t, &s) in m.sym[..m.len as usize].iter().enumerate() {
            if s {
                steps.push(Step::fwd(Rule::Symmetry, start + t + 1));
            }
        }
        let rule_step = match m.kind {
            MacroKind::PentagonContract => Step::fwd(Rule::Pentagon, start + 1),
            MacroKind::PentagonExpand => Step::bwd(Rule::Pentagon, start + 1),
            MacroKind::InversionContract if dz > 0 => Step::fwd(Rule::Inversion, start + 1),
            MacroKind::InversionContract => Step::bwd(Rule::Inversion, start + 1),
            MacroKind::Cancel => Step::fwd(Rule::Cancel, start + 1),
        };
        steps.push(rule_step);
    }
    let mut letters: Vec<Letter> = order[..start].iter().map(|&k| w.letters[k]).collect();
    letters.extend(mid);
    let rest = order[start + m.len as usize..].iter().map(|&k| w.letters[k]);
    let tail = match &perm {
        Some(p) => {
            letters.extend(rest.map(|l| act_letter(p, l)));
            p.compose(&w.tail).unwrap()
        }
        None => {
            letters.extend(rest);
            w.tail.clone()
        }
    };
    OperatorWord { zeta: w.zeta + dz, letters, tail }
}

struct Node {
    word: OperatorWord,
    parent: u32,
    mac: Option<Macro>,
}

struct Tree {
    nodes: Vec<Node>,
    index: HashMap<OperatorWord, u32>,
}

fn key(w: &OperatorWord, ignore_scalar: bool) -> OperatorWord {
    if ignore_scalar {
        w.clone().with_zeta(0)
    } else {
        w.clone()
    }
}

impl Tree {
    fn new(root: OperatorWord) -> Self {
        Self::keyed(root, false)
    }

    fn keyed(root: OperatorWord, ignore_scalar: bool) -> Self {
        let mut index = HashMap::new();
        index.insert(key(&root, ignore_scalar), 0);
        Tree { nodes: vec![Node { word: root, parent: u32::MAX, mac: None }], index }
    }

    /// Concrete steps from `origin` (whose canonical form is the root) to the
    /// canonical word at node `id`.
    fn steps_to(&self, origin: &OperatorWord, id: u32) -> Vec<Step> {
        let mut chain = Vec::new();
        let mut cur = id;
        while let Some(m) = self.nodes[cur as usize].mac {
            chain.push((self.nodes[cur as usize].parent, m));
            cur = self.nodes[cur as usize].parent;
        }
        chain.reverse();
        let mut steps = canonicalize_steps(origin);
        for (parent, m) in chain {
            let raw = apply_macro(&self.nodes[parent as usize].word, &m, Some(&mut steps));
            steps.extend(canonicalize_steps(&raw));
        }
        steps
    }
}

/// Replays `steps` from `w`.
pub fn replay(w: &OperatorWord, steps: &[Step]) -> Option<OperatorWord> {
    let mut cur = w.clone();
    for s in steps {
        cur = apply_step(&cur, s).ok()?;
    }
    Some(cur)
}

/// Reverses a step sequence that takes `from` somewhere.
pub fn invert_steps(from: &OperatorWord, steps: &[Step]) -> Option<Vec<Step>> {
    let mut cur = from.clone();
    let mut inv = Vec::with_capacity(steps.len());
    for s in steps {
        inv.push(s.inverse(&cur));
        cur = apply_step(&cur, s).ok()?;
    }
    inv.reverse();
    Some(inv)
}

#[derive(Clone, Copy, Debug)]
pub struct ConnectOptions {
    /// Total number of states both sides may visit.
    pub budget: usize,
    /// Maximum letter count of any intermediate word, above the larger of
    /// the two endpoints.
    pub slack: usize,
    /// Treat words that differ only in the scalar as equal; the goal is then
    /// reached up to a power of zeta.
    pub ignore_scalar: bool,
}

impl Default for ConnectOptions {
    fn default() -> Self {
        ConnectOptions { budget: DEFAULT_BUDGET, slack: 1, ignore_scalar: false }
    }
}

/// Bidirectional breadth-first search for concrete steps turning `start`
/// into `goal`. The result is replayed and checked before it is returned.
pub fn connect(start: &OperatorWord, goal: &OperatorWord, opts: ConnectOptions) -> Option<Vec<Step>> {
    if start.size() != goal.size() {
        return None;
    }
    let ig = opts.ignore_scalar;
    let max_letters = start.letters.len().max(goal.letters.len()) + opts.slack;
    let mut trees = [Tree::keyed(canonical_word(start), ig), Tree::keyed(canonical_word(goal), ig)];
    let mut frontiers: [Vec<u32>; 2] = [vec![0], vec![0]];
    let mut meet = trees[1].index.get(&key(&trees[0].nodes[0].word, ig)).map(|&g| (0u32, g));
    let mut buf = Vec::new();
    while meet.is_none() {
        let side = if frontiers[0].len() <= frontiers[1].len() { 0 } else { 1 };
        if frontiers[side].is_empty() {
            return None;
        }
        let mut next = Vec::new();
        'layer: for &id in &std::mem::take(&mut frontiers[side]) {
            let word = trees[side].nodes[id as usize].word.clone();
            buf.clear();
            enumerate(&word, word.letters.len() < max_letters, &mut buf);
            for m in &buf {
                let child = canonical_word(&apply_macro(&word, m, None));
                let k = key(&child, ig);
                if trees[side].index.contains_key(&k) {
                    continue;
                }
                let cid = trees[side].nodes.len() as u32;
                if let Some(&other) = trees[1 - side].index.get(&k) {
                    meet = Some(if side == 0 { (cid, other) } else { (other, cid) });
                }
                trees[side].index.insert(k, cid);
                trees[side].nodes.push(Node { word: child, parent: id, mac: Some(*m) });
                next.push(cid);
                if meet.is_some() {
                    break 'layer;
                }
                if trees[0].nodes.len() + trees[1].nodes.len() > opts.budget {
                    return None;
                }
            }
        }
        frontiers[side] = next;
    }
    let (a, b) = meet.unwrap();
    let mut steps = trees[0].steps_to(start, a);
    let back = trees[1].steps_to(goal, b);
    // the goal side ran on a scalar-free copy when scalars are ignored
    let goal0 = key(goal, ig);
    steps.extend(invert_steps(&goal0, &back)?);
    let end = replay(&start.clone(), &steps)?;
    (key(&end, ig) == goal0).then_some(steps)
}

/// Steps from `a` to `b` through the quotient: the letters of `b^-1` and
/// their inverses are inserted after `a`, then `a · b^-1` is reduced with
/// [`normalize_with_steps`], leaving `b`.
pub fn connect_by_quotient(a: &OperatorWord, b: &OperatorWord, budget: usize) -> Option<Vec<Step>> {
    if a.size() != b.size() {
        return None;
    }
    let m: Vec<Letter> = b.inverse().letters.iter().map(|&l| act_letter(&a.tail, l)).collect();
    let base = a.letters.len();
    let mut steps: Vec<Step> = m
        .iter()
        .enumerate()
        .map(|(j, &l)| Step::bwd(Rule::Cancel, base + j + 1).with_binding(vec![l, l.inverse()]))
        .collect();
    let mut prefix = a.letters.clone();
    prefix.extend_from_slice(&m);
    let q = OperatorWord::from_letters(a.size(), prefix).ok()?;
    let (_, reduce) = normalize_with_steps(&q, budget)?;
    steps.extend(reduce);
    (replay(a, &steps).as_ref() == Some(b)).then_some(steps)
}

/// Splits off the letters `a` and `b` share: a common prefix, and a common
/// suffix up to the relabeling the differing middle pushes over it. Returns
/// the prefix length and the two middle words.
fn strip_common(a: &OperatorWord, b: &OperatorWord) -> (usize, OperatorWord, OperatorWord) {
    let (la, lb) = (a.letters.len(), b.letters.len());
    let p = a.letters.iter().zip(&b.letters).take_while(|(x, y)| x == y).count();
    let r = b.tail.compose(&a.tail.inverse()).expect("same size");
    let mut s = (la - p).min(lb - p);
    while s > 0 {
        let sa = &a.letters[la - s..];
        let sb = &b.letters[lb - s..];
        if sa.iter().zip(sb).all(|(x, y)| act_letter(&r, *x) == *y) {
            break;
        }
        s -= 1;
    }
    let n = a.size();
    let am = OperatorWord { zeta: 0, letters: a.letters[p..la - s].to_vec(), tail: DecoratedPermutation::identity(n) };
    let bm = OperatorWord { zeta: b.zeta - a.zeta, letters: b.letters[p..lb - s].to_vec(), tail: r };
    (p, am, bm)
}

/// [`connect`] restricted to the part where `a` and `b` differ, falling back
/// to [`connect_by_quotient`] and then to the whole words. The steps are
/// checked on the whole words before they are returned.
pub fn connect_local(a: &OperatorWord, b: &OperatorWord, opts: ConnectOptions) -> Option<Vec<Step>> {
    if a.size() != b.size() {
        return None;
    }
    let (p, am, bm) = strip_common(a, b);
    let shifted = |steps: Vec<Step>| -> Vec<Step> {
        steps
            .into_iter()
            .map(|mut s| {
                s.position += p;
                s
            })
            .collect()
    };
    let check = |steps: Vec<Step>| (replay(a, &steps).as_ref() == Some(b)).then_some(steps);
    let small = ConnectOptions { budget: opts.budget / 4, ..opts };
    connect(&am, &bm, small)
        .and_then(|s| check(shifted(s)))
        .or_else(|| connect_by_quotient(&am, &bm, opts.budget / 4).and_then(|s| check(shifted(s))))
        .or_else(|| connect(a, b, opts))
}

/// Best-first search for a letter-free word equal to `w`.
///
/// Returns the scalar exponent and tail, or `None` when `budget` states are
/// visited first. Words with fewer letters are explored first; ties go to
/// the shorter, then lexicographically smaller, letter sequence.
pub fn normalize_bounded(w: &OperatorWord, budget: usize) -> Option<(i64, DecoratedPermutation)> {
    normalize_with_steps(w, budget).map(|(r, _)| (r.zeta, r.tail))
}

/// Like [`normalize_bounded`], also returning a concrete step sequence.
pub fn normalize_with_steps(w: &OperatorWord, budget: usize) -> Option<(OperatorWord, Vec<Step>)> {
    let max_letters = w.letters.len() + 2;
    let mut tree = Tree::new(canonical_word(w));
    let mut heap = BinaryHeap::new();
    heap.push(Reverse((tree.nodes[0].word.letters.len(), tree.nodes[0].word.letters.clone(), 0u32)));
    let mut buf = Vec::new();
    while let Some(Reverse((_, _, id))) = heap.pop() {
        let word = tree.nodes[id as usize].word.clone();
        if word.letters.is_empty() {
            let steps = tree.steps_to(w, id);
            return (replay(w, &steps).as_ref() == Some(&word)).then_some((word, steps));
        }
        buf.clear();
        enumerate(&word, word.letters.len() < max_letters, &mut buf);
        for m in &buf {
            let child = canonical_word(&apply_macro(&word, m, None));
            if tree.index.contains_key(&child) {
                continue;
            }
            if tree.nodes.len() >= budget {
                return None;
            }
            let cid = tree.nodes.len() as u32;
            tree.index.insert(child.clone(), cid);
            heap.push(Reverse((child.letters.len(), child.letters.clone(), cid)));
            tree.nodes.push(Node { word: child, parent: id, mac: Some(*m) });
        }
    }
    None
}

/// Looks for a chain of at most `depth` base steps from the letter fragment
/// `before` to `after` (both read with trivial scalar and tail).
pub fn derived_step_verify(n: usize, before: &[Letter], after: &[Letter], depth: usize) -> Option<Vec<Step>> {
    let from = OperatorWord::from_letters(n, before.to_vec()).ok()?;
    let to = OperatorWord::from_letters(n, after.to_vec()).ok()?;
    if from == to {
        return Some(Vec::new());
    }
    let fwd_depth = depth.div_ceil(2);
    let bwd_depth = depth / 2;
    let a = bfs_layers(&from, fwd_depth);
    let b = bfs_layers(&to, bwd_depth);
    // shortest total first
    let mut best: Option<(usize, &OperatorWord)> = None;
    for (word, (_, _, da)) in &a {
        if let Some((_, _, db)) = b.get(word) {
            if best.is_none_or(|(d, _)| da + db < d) {
                best = Some((da + db, word));
            }
        }
    }
    let (_, mid) = best?;
    let mut steps = path_in(&a, mid);
    let back = path_in(&b, mid);
    steps.extend(invert_steps(&to, &back)?);
    (replay(&from, &steps).as_ref() == Some(&to)).then_some(steps)
}

type Layers = HashMap<OperatorWord, (Option<OperatorWord>, Option<Step>, usize)>;

fn base_moves(w: &OperatorWord) -> Vec<Step> {
    let len = w.letters.len();
    let mut out = Vec::new();
    for p in 1..=len {
        out.push(Step::fwd(Rule::Symmetry, p));
        if p < len {
            out.push(Step::fwd(Rule::Commute, p));
            out.push(Step::fwd(Rule::Cancel, p));
            out.push(Step::bwd(Rule::Pentagon, p));
            out.push(Step::fwd(Rule::Inversion, p));
            out.push(Step::bwd(Rule::Inversion, p));
        }
        if p + 1 < len {
            out.push(Step::fwd(Rule::Pentagon, p));
        }
    }
    out
}

fn bfs_layers(root: &OperatorWord, depth: usize) -> Layers {
    let mut seen: Layers = HashMap::new();
    seen.insert(root.clone(), (None, None, 0));
    let mut frontier = vec![root.clone()];
    for d in 1..=depth {
        let mut next = Vec::new();
        for w in &frontier {
            for s in base_moves(w) {
                if let Ok(v) = apply_step(w, &s) {
                    if !seen.contains_key(&v) {
                        seen.insert(v.clone(), (Some(w.clone()), Some(s), d));
                        next.push(v);
                    }
                }
            }
        }
        frontier = next;
    }
    seen
}

fn path_in(layers: &Layers, end: &OperatorWord) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut cur = end.clone();
    while let Some((Some(parent), Some(step), _)) = layers.get(&cur) {
        steps.push(step.clone());
        cur = parent.clone();
    }
    steps.reverse();
    steps
}
