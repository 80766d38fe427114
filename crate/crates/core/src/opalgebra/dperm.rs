use std::fmt;

use super::{AlgebraError, DecoratedIndex};

/// An element of the wreath product `Z/3 ≀ S_n`.
///
/// Acts on decorated indices by `p(i^d) = perm(i)^(d + deco[perm(i)])`, so
/// `p T_ab p^-1 = T_{p(a) p(b)}`. `R_k` is the identity permutation with
/// decoration 1 at `k`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DecoratedPermutation {
    // perm[i] is the 0-based image of label i+1
    perm: Vec<u32>,
    // decoration added at each 0-based target slot
    deco: Vec<u8>,
}

impl DecoratedPermutation {
    pub fn identity(n: usize) -> Self {
        DecoratedPermutation { perm: (0..n as u32).collect(), deco: vec![0; n] }
    }

    pub fn len(&self) -> usize {
        self.perm.len()
    }

    pub fn is_empty(&self) -> bool {
        self.perm.is_empty()
    }

    pub fn is_identity(&self) -> bool {
        self.deco.iter().all(|&d| d == 0) && self.perm.iter().enumerate().all(|(i, &p)| p as usize == i)
    }

    /// `R_k^power`.
    pub fn rotation(n: usize, k: u32, power: i64) -> Result<Self, AlgebraError> {
        check_label(k, n)?;
        let mut p = Self::identity(n);
        p.deco[k as usize - 1] = power.rem_euclid(3) as u8;
        Ok(p)
    }

    /// `P_sigma` for `sigma` given as 1-based images of `1..=n`.
    pub fn from_perm(sigma: &[u32]) -> Result<Self, AlgebraError> {
        let images: Vec<DecoratedIndex> = sigma.iter().map(|&s| DecoratedIndex::plain(s)).collect();
        Self::from_images(&images)
    }

    /// The map sending plain label `i` to `images[i-1]`.
    pub fn from_images(images: &[DecoratedIndex]) -> Result<Self, AlgebraError> {
        let n = images.len();
        let mut seen = vec![false; n];
        let mut perm = Vec::with_capacity(n);
        let mut deco = vec![0u8; n];
        for img in images {
            check_label(img.label, n)?;
            let t = img.label as usize - 1;
            if seen[t] {
                return Err(AlgebraError::NotBijective(img.label));
            }
            seen[t] = true;
            perm.push(t as u32);
            deco[t] = img.deco;
        }
        Ok(DecoratedPermutation { perm, deco })
    }

    /// Builds a product of decorated cycles.
    ///
    /// A cycle `(x1 x2 ... xm)` sends `x_i` to `x_(i+1)` and `xm` back to `x1`.
    /// When the last entry repeats the label of the first, it is the closing
    /// image of `x_(m-1)` instead, e.g. `(1 2 1^)` is `R_1 P_(12)` and
    /// `(3 3^)` is `R_3`.
    pub fn from_cycles(n: usize, cycles: &[Vec<DecoratedIndex>]) -> Result<Self, AlgebraError> {
        let mut images: Vec<Option<DecoratedIndex>> = vec![None; n];
        for cyc in cycles {
            if cyc.is_empty() {
                continue;
            }
            for x in cyc {
                check_label(x.label, n)?;
            }
            let closed = cyc.len() >= 2 && cyc[cyc.len() - 1].label == cyc[0].label;
            let mut pairs: Vec<(DecoratedIndex, DecoratedIndex)> = cyc.windows(2).map(|w| (w[0], w[1])).collect();
            if !closed {
                pairs.push((cyc[cyc.len() - 1], cyc[0]));
            }
            for (x, y) in pairs {
                let slot = &mut images[x.label as usize - 1];
                if slot.is_some() {
                    return Err(AlgebraError::NotBijective(x.label));
                }
                *slot = Some(y.shift(-(x.deco as i64)));
            }
        }
        let images: Vec<DecoratedIndex> = images
            .into_iter()
            .enumerate()
            .map(|(i, img)| img.unwrap_or(DecoratedIndex::plain(i as u32 + 1)))
            .collect();
        Self::from_images(&images)
    }

    /// Image of the plain label `label`.
    pub fn image(&self, label: u32) -> DecoratedIndex {
        let t = self.perm[label as usize - 1] as usize;
        DecoratedIndex { label: t as u32 + 1, deco: self.deco[t] }
    }

    pub fn act(&self, idx: DecoratedIndex) -> Result<DecoratedIndex, AlgebraError> {
        check_label(idx.label, self.len())?;
        Ok(self.act_unchecked(idx))
    }

    pub(crate) fn act_unchecked(&self, idx: DecoratedIndex) -> DecoratedIndex {
        self.image(idx.label).shift(idx.deco as i64)
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Self) -> Result<Self, AlgebraError> {
        if self.len() != other.len() {
            return Err(AlgebraError::SizeMismatch(self.len(), other.len()));
        }
        Ok(self.compose_unchecked(other))
    }

    pub(crate) fn compose_unchecked(&self, other: &Self) -> Self {
        let n = self.len();
        let mut perm = vec![0u32; n];
        let mut deco = vec![0u8; n];
        for i in 0..n {
            let mid = other.perm[i] as usize;
            let t = self.perm[mid] as usize;
            perm[i] = t as u32;
            deco[t] = (other.deco[mid] + self.deco[t]) % 3;
        }
        DecoratedPermutation { perm, deco }
    }

    pub fn inverse(&self) -> Self {
        let n = self.len();
        let mut perm = vec![0u32; n];
        let mut deco = vec![0u8; n];
        for i in 0..n {
            let t = self.perm[i] as usize;
            perm[t] = i as u32;
            deco[i] = (3 - self.deco[t]) % 3;
        }
        DecoratedPermutation { perm, deco }
    }

    pub fn pow(&self, k: i64) -> Self {
        let base = if k < 0 { self.inverse() } else { self.clone() };
        let mut acc = Self::identity(self.len());
        for _ in 0..k.unsigned_abs() {
            acc = acc.compose_unchecked(&base);
        }
        acc
    }

    /// Same map on a larger label set, fixing the new labels.
    pub fn extend(&self, n: usize) -> Self {
        let mut p = self.clone();
        for i in self.len()..n {
            p.perm.push(i as u32);
            p.deco.push(0);
        }
        p
    }

    /// Decorated cycles in canonical form: each starts at its smallest label,
    /// written plain, and fixed points with zero decoration are omitted.
    pub fn cycles(&self) -> Vec<Vec<DecoratedIndex>> {
        let n = self.len();
        let mut done = vec![false; n];
        let mut out = Vec::new();
        for start in 1..=n as u32 {
            if done[start as usize - 1] {
                continue;
            }
            let mut cyc = vec![DecoratedIndex::plain(start)];
            let mut cur = DecoratedIndex::plain(start);
            done[start as usize - 1] = true;
            loop {
                let next = self.act_unchecked(cur);
                if next.label == start {
                    if next.deco != 0 {
                        cyc.push(next);
                    }
                    break;
                }
                done[next.label as usize - 1] = true;
                cyc.push(next);
                cur = next;
            }
            if cyc.len() > 1 {
                out.push(cyc);
            }
        }
        out
    }
}

fn check_label(label: u32, n: usize) -> Result<(), AlgebraError> {
    if label == 0 || label as usize > n {
        Err(AlgebraError::BadLabel { label, size: n })
    } else {
        Ok(())
    }
}

impl fmt::Display for DecoratedPermutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("P[")?;
        for cyc in self.cycles() {
            f.write_str("(")?;
            for (i, x) in cyc.iter().enumerate() {
                if i > 0 {
                    f.write_str(" ")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str(")")?;
        }
        f.write_str("]")
    }
}
