use crate::opalgebra::{AlgebraError, DecoratedIndex, DecoratedPermutation, Letter, LetterKind, OperatorWord};
use crate::surface::{GroupoidWord, Move};

/// The operator word of a groupoid word read left to right.
///
/// `Rho(i)` gives `R_i`, `Omega(i, j)` the letter `T_ij`, `OmegaInv(i, j)`
/// exactly `~T_ij` and `Perm(sigma)` the tail `P_sigma`.
pub fn functor(n: usize, w: &[Move]) -> Result<OperatorWord, AlgebraError> {
    let mut out = OperatorWord::identity(n);
    for m in w {
        out = out.multiply(&move_image(n, m)?)?;
    }
    Ok(out)
}

fn move_image(n: usize, m: &Move) -> Result<OperatorWord, AlgebraError> {
    Ok(match m {
        Move::Rho(i) => OperatorWord::from_perm(DecoratedPermutation::rotation(n, *i, 1)?),
        Move::RhoInv(i) => OperatorWord::from_perm(DecoratedPermutation::rotation(n, *i, -1)?),
        Move::Omega(i, j) => OperatorWord::from_letters(n, vec![Letter::t(DecoratedIndex::plain(*i), DecoratedIndex::plain(*j))])?,
        Move::OmegaInv(i, j) => OperatorWord::from_letters(n, vec![Letter::tbar(DecoratedIndex::plain(*i), DecoratedIndex::plain(*j))])?,
        Move::Perm(sigma) => {
            if sigma.len() != n {
                return Err(AlgebraError::SizeMismatch(sigma.len(), n));
            }
            OperatorWord::from_perm(DecoratedPermutation::from_perm(sigma)?)
        }
    })
}

fn rotations(i: u32, d: u8, out: &mut GroupoidWord) {
    match d % 3 {
        1 => out.push(Move::Rho(i)),
        2 => out.push(Move::RhoInv(i)),
        _ => {}
    }
}

/// Moves whose image is the single letter `l`: the flip of `i, j` between
/// rotations fixing the decorations.
pub fn letter_moves(l: &Letter) -> GroupoidWord {
    let (i, j) = (l.a.label, l.b.label);
    let mut out = Vec::new();
    rotations(i, l.a.deco, &mut out);
    rotations(j, l.b.deco, &mut out);
    out.push(match l.kind {
        LetterKind::T => Move::Omega(i, j),
        LetterKind::TBar => Move::OmegaInv(i, j),
    });
    rotations(j, 3 - l.b.deco, &mut out);
    rotations(i, 3 - l.a.deco, &mut out);
    out
}

/// A groupoid word whose image is `w` up to its scalar.
pub fn word_moves(w: &OperatorWord) -> GroupoidWord {
    let mut out: GroupoidWord = w.letters.iter().flat_map(letter_moves).collect();
    if !w.tail.is_identity() {
        let n = w.size();
        let sigma: Vec<u32> = (1..=n as u32).map(|i| w.tail.image(i).label).collect();
        let plain = DecoratedPermutation::from_perm(&sigma).expect("tail is a bijection");
        if sigma.iter().enumerate().any(|(i, &s)| s as usize != i + 1) {
            out.push(Move::Perm(sigma));
        }
        // what is left of the tail once the plain permutation is split off
        let rest = plain.inverse().compose(&w.tail).expect("same size");
        for i in 1..=n as u32 {
            rotations(i, rest.image(i).deco, &mut out);
        }
    }
    out
}
