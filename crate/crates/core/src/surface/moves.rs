use std::fmt;

use super::{DecoratedTriangulation, Side, SurfaceError};

/// A generator of the decorated Ptolemy groupoid.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Move {
    /// Relabeling: the new triangle `j` is the old triangle `sigma[j-1]`.
    Perm(Vec<u32>),
    /// The marked corner of triangle `i` advances counterclockwise.
    Rho(u32),
    RhoInv(u32),
    /// Flip of the diagonal shared by `i` and `j`; needs side 0 of `i` glued
    /// to side 1 of `j`.
    Omega(u32, u32),
    /// Undoes `Omega(i, j)`; needs side 2 of `i` glued to side 0 of `j`.
    OmegaInv(u32, u32),
}

pub type GroupoidWord = Vec<Move>;

impl Move {
    pub fn inverse(&self) -> Move {
        match self {
            Move::Perm(s) => {
                let mut inv = vec![0u32; s.len()];
                for (j, &t) in s.iter().enumerate() {
                    inv[t as usize - 1] = j as u32 + 1;
                }
                Move::Perm(inv)
            }
            Move::Rho(i) => Move::RhoInv(*i),
            Move::RhoInv(i) => Move::Rho(*i),
            Move::Omega(i, j) => Move::OmegaInv(*i, *j),
            Move::OmegaInv(i, j) => Move::Omega(*i, *j),
        }
    }

    /// `Perm` for the transposition of `i` and `j` on `n` labels.
    pub fn transposition(n: usize, i: u32, j: u32) -> Move {
        let mut s: Vec<u32> = (1..=n as u32).collect();
        s.swap(i as usize - 1, j as usize - 1);
        Move::Perm(s)
    }
}

pub fn inverse_word(w: &[Move]) -> GroupoidWord {
    w.iter().rev().map(Move::inverse).collect()
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Perm(s) => {
                let s: Vec<String> = s.iter().map(|x| x.to_string()).collect();
                write!(f, "perm[{}]", s.join(" "))
            }
            Move::Rho(i) => write!(f, "rho{i}"),
            Move::RhoInv(i) => write!(f, "rho{i}^-1"),
            Move::Omega(i, j) => write!(f, "omega{i},{j}"),
            Move::OmegaInv(i, j) => write!(f, "omega{i},{j}^-1"),
        }
    }
}

fn check(tri: &DecoratedTriangulation, i: u32) -> Result<(), SurfaceError> {
    if i == 0 || i as usize > tri.triangle_count() {
        Err(SurfaceError::BadLabel { label: i, count: tri.triangle_count() })
    } else {
        Ok(())
    }
}

fn rotate(tri: &DecoratedTriangulation, i: u32, by: u8) -> DecoratedTriangulation {
    // after rho_i, side k of i is the old side k+1
    tri.move_sides(|(t, k)| if t == i { (t, (k + 3 - by) % 3) } else { (t, k) })
}

/// Slot map of a flip, old side -> new side. Which sides must be glued is
/// checked by the caller.
fn flip_map(i: u32, j: u32, inverse: bool) -> impl Fn(Side) -> Side {
    // old -> new for the forward flip
    let fwd: [(Side, Side); 6] =
        [((i, 0), (i, 2)), ((j, 1), (j, 0)), ((j, 0), (i, 0)), ((i, 1), (i, 1)), ((i, 2), (j, 1)), ((j, 2), (j, 2))];
    move |s: Side| {
        for (a, b) in fwd {
            let (from, to) = if inverse { (b, a) } else { (a, b) };
            if s == from {
                return to;
            }
        }
        s
    }
}

pub fn apply_move(tri: &DecoratedTriangulation, m: &Move) -> Result<DecoratedTriangulation, SurfaceError> {
    match m {
        Move::Rho(i) => {
            check(tri, *i)?;
            Ok(rotate(tri, *i, 1))
        }
        Move::RhoInv(i) => {
            check(tri, *i)?;
            Ok(rotate(tri, *i, 2))
        }
        Move::Omega(i, j) | Move::OmegaInv(i, j) => {
            check(tri, *i)?;
            check(tri, *j)?;
            let inverse = matches!(m, Move::OmegaInv(..));
            let (si, sj) = if inverse { ((*i, 2), (*j, 0)) } else { ((*i, 0), (*j, 1)) };
            if i == j || tri.partner(si) != sj {
                return Err(SurfaceError::OmegaNotApplicable { i: *i, j: *j });
            }
            Ok(tri.move_sides(flip_map(*i, *j, inverse)))
        }
        Move::Perm(sigma) => {
            let n = tri.triangle_count();
            if sigma.len() != n {
                return Err(SurfaceError::BadPermutation(sigma.clone()));
            }
            let mut inv = vec![0u32; n];
            for (j, &t) in sigma.iter().enumerate() {
                if t == 0 || t as usize > n || inv[t as usize - 1] != 0 {
                    return Err(SurfaceError::BadPermutation(sigma.clone()));
                }
                inv[t as usize - 1] = j as u32 + 1;
            }
            Ok(tri.move_sides(|(t, k)| (inv[t as usize - 1], k)))
        }
    }
}

pub fn apply_word(tri: &DecoratedTriangulation, w: &[Move]) -> Result<DecoratedTriangulation, SurfaceError> {
    let mut cur = tri.clone();
    for (index, m) in w.iter().enumerate() {
        cur = apply_move(&cur, m)
            .map_err(|e| SurfaceError::MoveFailed { index, mv: m.to_string(), source: Box::new(e) })?;
    }
    Ok(cur)
}

/// A label bijection `phi` (old label `t` maps to `phi[t-1]`) carrying the
/// gluing and marked corners of `a` onto `b`, if one exists.
pub fn isomorphism(a: &DecoratedTriangulation, b: &DecoratedTriangulation) -> Option<Vec<u32>> {
    let n = a.triangle_count();
    if n != b.triangle_count() {
        return None;
    }
    'cand: for first in 1..=n as u32 {
        let mut phi = vec![0u32; n];
        let mut used = vec![false; n];
        phi[0] = first;
        used[first as usize - 1] = true;
        let mut stack = vec![1u32];
        while let Some(t) = stack.pop() {
            for k in 0..3u8 {
                let (u, m) = a.partner((t, k));
                let (v, m2) = b.partner((phi[t as usize - 1], k));
                if m != m2 {
                    continue 'cand;
                }
                let pu = &mut phi[u as usize - 1];
                if *pu == 0 {
                    if used[v as usize - 1] {
                        continue 'cand;
                    }
                    *pu = v;
                    used[v as usize - 1] = true;
                    stack.push(u);
                } else if *pu != v {
                    continue 'cand;
                }
            }
        }
        return Some(phi);
    }
    None
}
