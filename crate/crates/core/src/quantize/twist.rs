use crate::opalgebra::{DecoratedIndex, Letter, OperatorWord};
use crate::opalgebra::parse_word;
use crate::surface::{apply_word, inverse_word, isomorphism, DecoratedTriangulation, GroupoidWord, Move, Side};

use super::functor::{functor, letter_moves, word_moves};
use super::QuantizeError;

/// A Dehn twist realized on a scene.
///
/// `groupoid_word` is a flip sequence from the scene back to a triangulation
/// identical to it (the Perm fixup, if any, is part of the word), and
/// `operator_word` its image `W`. The normalized lift is
/// `ζ^normalization · W^-1` and `F̄ = ζ^-normalization · W` is its inverse.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TwistWord {
    pub name: String,
    pub groupoid_word: GroupoidWord,
    pub operator_word: OperatorWord,
    pub normalization: i64,
}

impl TwistWord {
    pub const DEFAULT_NORMALIZATION: i64 = -6;

    /// Checks that `word` returns to `tri` up to relabeling and closes it
    /// with a Perm move when the labels come back permuted.
    pub fn from_groupoid(
        name: impl Into<String>,
        tri: &DecoratedTriangulation,
        word: GroupoidWord,
    ) -> Result<Self, QuantizeError> {
        let name = name.into();
        let word = close_up(tri, word).ok_or_else(|| QuantizeError::NotClosed(name.clone()))?;
        let operator_word = functor(tri.triangle_count(), &word)?;
        Ok(TwistWord { name, groupoid_word: word, operator_word, normalization: Self::DEFAULT_NORMALIZATION })
    }

    /// Realizes an operator word (for instance an `Ad(U)(T)` form) as moves
    /// on `tri` and checks it is a loop there.
    pub fn from_operator(
        name: impl Into<String>,
        tri: &DecoratedTriangulation,
        w: &OperatorWord,
    ) -> Result<Self, QuantizeError> {
        let mut t = Self::from_groupoid(name, tri, word_moves(w))?;
        t.operator_word.zeta = w.zeta;
        Ok(t)
    }

    pub fn fbar(&self) -> OperatorWord {
        self.operator_word.clone().with_zeta(self.operator_word.zeta - self.normalization)
    }

    pub fn normalized_lift(&self) -> OperatorWord {
        self.fbar().inverse()
    }
}

/// Applies `word` and, when the end is `tri` with permuted labels, appends
/// the relabeling. `None` when the word does not apply or the end is not
/// isomorphic to `tri`.
fn close_up(tri: &DecoratedTriangulation, mut word: GroupoidWord) -> Option<GroupoidWord> {
    let end = apply_word(tri, &word).ok()?;
    if end == *tri {
        return Some(word);
    }
    let phi = isomorphism(tri, &end)?;
    word.push(Move::Perm(phi));
    (apply_word(tri, &word).ok()? == *tri).then_some(word)
}

/// The flip letter `T_{t^d u^e}` that flips the edge at `edge`, with the
/// decorations turning `edge` into side 0 of `t` and side 1 of its partner.
pub fn flip_letter(tri: &DecoratedTriangulation, edge: Side) -> Letter {
    let (t, k) = edge;
    let (u, m) = tri.partner(edge);
    Letter::t(DecoratedIndex::new(t, k as i64), DecoratedIndex::new(u, m as i64 - 1))
}

/// The twist along the core of an annulus made of the two triangles at
/// `edge`: a single flip of that edge.
pub fn two_crossing_twist(tri: &DecoratedTriangulation, edge: Side) -> Result<GroupoidWord, QuantizeError> {
    let (t, k) = edge;
    if t == 0 || t as usize > tri.triangle_count() || k > 2 {
        return Err(QuantizeError::NotTwoCrossing(edge));
    }
    let (u, _) = tri.partner(edge);
    let shared = (0..3u8).filter(|&s| tri.partner((t, s)).0 == u).count();
    if u == t || shared < 2 {
        return Err(QuantizeError::NotTwoCrossing(edge));
    }
    close_up(tri, letter_moves(&flip_letter(tri, edge))).ok_or(QuantizeError::NotTwoCrossing(edge))
}

/// A self-folded triangle `(c, k)` whose loop side `k` has both ends at the
/// puncture containing `corner`.
fn find_cap(tri: &DecoratedTriangulation, class: &[(u32, u8)]) -> Option<Side> {
    (1..=tri.triangle_count() as u32).flat_map(|c| (0..3u8).map(move |k| (c, k))).find(|&(c, k)| {
        tri.partner((c, (k + 1) % 3)) == (c, (k + 2) % 3) && class.contains(&(c, (k + 1) % 3))
    })
}

/// The twist around a boundary component carrying one puncture.
///
/// The hole is modeled by a self-folded triangle capping it; `corner` is
/// any corner at the puncture on the boundary. The triangle glued to the
/// cap moves around the puncture, flipping the edges `e_1, ..., e_{s-1}`
/// issued from it in counterclockwise order.
pub fn puncture_twist(tri: &DecoratedTriangulation, corner: (u32, u8)) -> Result<GroupoidWord, QuantizeError> {
    let classes = tri.vertex_classes();
    let class = classes.iter().find(|c| c.contains(&corner)).ok_or(QuantizeError::BadCorner(corner))?;
    let (c, kc) = find_cap(tri, class).ok_or(QuantizeError::NotCapped(corner))?;
    // corners outside the cap, minus one, are the edge ends e_1..e_s
    let s = class.len().saturating_sub(3);
    if s < 2 {
        return Err(QuantizeError::DegeneratePuncture { corner, valence: s });
    }
    let mover = tri.partner((c, kc)).0;
    let mut cur = tri.clone();
    let mut word = Vec::new();
    for _ in 0..s - 1 {
        let (_, k0) = cur.partner((c, kc));
        let e1 = (mover, (k0 + 2) % 3);
        let (u, _) = cur.partner(e1);
        if u == mover || u == c {
            return Err(QuantizeError::DegeneratePuncture { corner, valence: s });
        }
        let moves = letter_moves(&flip_letter(&cur, e1));
        cur = apply_word(&cur, &moves)?;
        word.extend(moves);
    }
    close_up(tri, word).ok_or_else(|| QuantizeError::NotClosed(format!("twist at corner {}.{}", corner.0, corner.1)))
}

/// The twist `U · flip · U^-1`: the moves of `u` bring `tri` to a chart in
/// which the curve crosses the annulus at `edge` twice.
pub fn conjugated_twist(
    name: impl Into<String>,
    tri: &DecoratedTriangulation,
    u: &OperatorWord,
    edge: Side,
) -> Result<TwistWord, QuantizeError> {
    let um = word_moves(u);
    let chart = apply_word(tri, &um)?;
    let mut word = um.clone();
    word.extend(two_crossing_twist(&chart, edge)?);
    word.extend(inverse_word(&um));
    TwistWord::from_groupoid(name, tri, word)
}

/// The five twists `a, b, c, e, f` of the chain relation on the chain scene.
///
/// `a, b, c` are flips in the charts reached by their conjugating words,
/// `e` and `f` are the twists around the capped holes.
pub fn chain_twists(tri: &DecoratedTriangulation) -> Result<Vec<TwistWord>, QuantizeError> {
    let n = tri.triangle_count();
    let chart = |name: &str, u: &str, edge: Side| -> Result<TwistWord, QuantizeError> {
        conjugated_twist(name, tri, &parse_word(u, n)?, edge)
    };
    let hole = |name: &str, corner| -> Result<TwistWord, QuantizeError> {
        TwistWord::from_groupoid(name, tri, puncture_twist(tri, corner)?)
    };
    Ok(vec![
        chart("a", "T[2v,3]", (1, 0))?,
        chart("b", "~T[6,4] T[4,1] ~T[6,3]", (3, 0))?,
        chart("c", "T[5v,6]", (4, 0))?,
        hole("e", (2, 1))?,
        hole("f", (5, 1))?,
    ])
}
