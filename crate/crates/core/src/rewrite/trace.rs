//! Words up to Commute and Symmetry.
//!
//! Each letter is spelled with its smaller label first, and the letters are
//! put in the lexicographically least order that keeps every pair of letters
//! sharing a label in place.

use crate::opalgebra::{Letter, OperatorWord};

use super::rule::{Direction, Rule, Step};

pub(crate) fn mask(l: &Letter) -> u64 {
    (1u64 << (l.a.label & 63)) | (1u64 << (l.b.label & 63))
}

/// Order of `letters` (given as canonical spellings) in trace normal form:
/// `out[r]` is the input index placed at rank `r`.
pub(crate) fn normal_order(letters: &[Letter], n: usize) -> Vec<usize> {
    let mut queues: Vec<Vec<usize>> = vec![Vec::new(); n + 1];
    for (k, l) in letters.iter().enumerate() {
        queues[l.a.label as usize].push(k);
        queues[l.b.label as usize].push(k);
    }
    let mut head = vec![0usize; n + 1];
    let front = |head: &[usize], lab: usize| queues[lab].get(head[lab]).copied();
    let mut out = Vec::with_capacity(letters.len());
    for _ in 0..letters.len() {
        let mut best: Option<usize> = None;
        for lab in 1..=n {
            let Some(k) = front(&head, lab) else { continue };
            let l = &letters[k];
            let other = if l.a.label as usize == lab { l.b.label } else { l.a.label } as usize;
            if front(&head, other) != Some(k) {
                continue;
            }
            if best.is_none_or(|b| letters[k] < letters[b]) {
                best = Some(k);
            }
        }
        let k = best.expect("a dependency order always has a minimal element");
        head[letters[k].a.label as usize] += 1;
        head[letters[k].b.label as usize] += 1;
        out.push(k);
    }
    out
}

/// The canonical representative of `w` up to Commute and Symmetry.
pub fn canonical_word(w: &OperatorWord) -> OperatorWord {
    let canon: Vec<Letter> = w.letters.iter().map(|l| l.canonical()).collect();
    let order = normal_order(&canon, w.size());
    OperatorWord { zeta: w.zeta, letters: order.iter().map(|&k| canon[k]).collect(), tail: w.tail.clone() }
}

/// Commute steps that rearrange a word so that the letter now at index
/// `order[r]` ends up at rank `r`. Only pairs out of order are swapped, so
/// every swap exchanges letters that already commute when `order` respects
/// the dependencies.
pub(crate) fn sort_steps(order: &[usize], offset: usize, steps: &mut Vec<Step>) {
    let mut rank = vec![0usize; order.len()];
    for (r, &k) in order.iter().enumerate() {
        rank[k] = r;
    }
    let mut cur: Vec<usize> = (0..order.len()).collect();
    // insertion sort keeps swaps adjacent and the count minimal
    for p in 1..cur.len() {
        let mut q = p;
        while q > 0 && rank[cur[q - 1]] > rank[cur[q]] {
            cur.swap(q - 1, q);
            steps.push(Step::new(Rule::Commute, Direction::Forward, offset + q));
            q -= 1;
        }
    }
}

/// Steps turning `w` into [`canonical_word`]`(w)`.
pub fn canonicalize_steps(w: &OperatorWord) -> Vec<Step> {
    let mut steps = Vec::new();
    let mut canon = Vec::with_capacity(w.letters.len());
    for (i, l) in w.letters.iter().enumerate() {
        let c = l.canonical();
        if c != *l {
            steps.push(Step::new(Rule::Symmetry, Direction::Forward, i + 1));
        }
        canon.push(c);
    }
    let order = normal_order(&canon, w.size());
    sort_steps(&order, 0, &mut steps);
    steps
}
