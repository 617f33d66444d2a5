//! The free group `F_d` on geometric generators `γ_1, …, γ_d`, and the right
//! Artin action of `B_d` on it.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::braid::{BraidWord, DEFAULT_MAX_LETTERS};
use crate::error::{Error, Result};
use crate::text;

/// A freely reduced word in `γ_1, …, γ_d` (`i` is `γ_i`, `-i` is `γ_i⁻¹`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct FreeWord {
    rank: usize,
    letters: Vec<i32>,
}

fn push_reduced(out: &mut Vec<i32>, l: i32) {
    if out.last() == Some(&-l) {
        out.pop();
    } else {
        out.push(l);
    }
}

impl FreeWord {
    /// Validates indices and freely reduces.
    pub fn new(rank: usize, letters: Vec<i32>) -> Result<Self> {
        if let Some(&bad) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize > rank) {
            return Err(Error::GeneratorOutOfRange { index: bad, strands: rank });
        }
        Ok(Self::from_unchecked(rank, letters))
    }

    pub(crate) fn from_unchecked(rank: usize, letters: Vec<i32>) -> Self {
        let mut out = Vec::with_capacity(letters.len());
        for l in letters {
            push_reduced(&mut out, l);
        }
        FreeWord { rank, letters: out }
    }

    pub fn identity(rank: usize) -> Self {
        FreeWord { rank, letters: Vec::new() }
    }

    /// `γ_i` for a 1-based index.
    pub fn generator(rank: usize, i: usize) -> Self {
        assert!((1..=rank).contains(&i), "generator γ_{i} out of range for rank {rank}");
        FreeWord { rank, letters: vec![i as i32] }
    }

    /// `γ_1 γ_2 ⋯ γ_d`, the loop around all punctures.
    pub fn boundary(rank: usize) -> Self {
        FreeWord { rank, letters: (1..=rank as i32).collect() }
    }

    pub fn parse(rank: usize, input: &str) -> Result<Self> {
        Self::new(rank, text::parse_letters(input, 'g')?)
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn letters(&self) -> &[i32] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn free_reduce(&self) -> FreeWord {
        Self::from_unchecked(self.rank, self.letters.clone())
    }

    pub fn mul(&self, other: &FreeWord) -> Result<FreeWord> {
        if self.rank != other.rank {
            return Err(Error::RankMismatch { left: self.rank, right: other.rank });
        }
        let mut out = self.letters.clone();
        for &l in &other.letters {
            push_reduced(&mut out, l);
        }
        Ok(FreeWord { rank: self.rank, letters: out })
    }

    pub fn inverse(&self) -> FreeWord {
        FreeWord { rank: self.rank, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `[a, b] = a b a⁻¹ b⁻¹`.
    pub fn commutator(&self, other: &FreeWord) -> Result<FreeWord> {
        self.mul(other)?.mul(&self.inverse())?.mul(&other.inverse())
    }

    /// Image under the endomorphism sending `γ_i` to `images[i-1]`.
    pub fn substitute(&self, images: &[FreeWord]) -> Result<FreeWord> {
        let rank = images.first().map_or(self.rank, |w| w.rank);
        let mut out: Vec<i32> = Vec::new();
        for &l in &self.letters {
            let img = &images[l.unsigned_abs() as usize - 1];
            if l > 0 {
                for &x in &img.letters {
                    push_reduced(&mut out, x);
                }
            } else {
                for &x in img.letters.iter().rev() {
                    push_reduced(&mut out, -x);
                }
            }
            if out.len() > DEFAULT_MAX_LETTERS {
                return Err(Error::WordTooLong { len: out.len(), limit: DEFAULT_MAX_LETTERS });
            }
        }
        Ok(FreeWord { rank, letters: out })
    }

    /// Exponent sum of each generator.
    pub fn abelianize(&self) -> Vec<i64> {
        let mut v = vec![0i64; self.rank];
        for &l in &self.letters {
            v[l.unsigned_abs() as usize - 1] += l.signum() as i64;
        }
        v
    }

    /// The right action `w * Q`, applied one braid letter at a time:
    /// `σ_i` sends `γ_i ↦ γ_i γ_{i+1} γ_i⁻¹`, `γ_{i+1} ↦ γ_i`;
    /// `σ_i⁻¹` sends `γ_i ↦ γ_{i+1}`, `γ_{i+1} ↦ γ_{i+1}⁻¹ γ_i γ_{i+1}`.
    pub fn artin_act(&self, braid: &BraidWord) -> Result<FreeWord> {
        if self.rank != braid.strands() {
            return Err(Error::RankMismatch { left: self.rank, right: braid.strands() });
        }
        let mut current = self.letters.clone();
        for &b in braid.letters() {
            let i = b.abs();
            let mut next = Vec::with_capacity(current.len() + 8);
            for &l in &current {
                let (g, sign) = (l.abs(), l.signum());
                let image: &[i32] = match (b > 0, g == i, g == i + 1) {
                    (true, true, _) => &[i, i + 1, -i],
                    (true, _, true) => &[i],
                    (false, true, _) => &[i + 1],
                    (false, _, true) => &[-(i + 1), i, i + 1],
                    _ => {
                        push_reduced(&mut next, l);
                        continue;
                    }
                };
                if sign > 0 {
                    for &x in image {
                        push_reduced(&mut next, x);
                    }
                } else {
                    for &x in image.iter().rev() {
                        push_reduced(&mut next, -x);
                    }
                }
            }
            if next.len() > DEFAULT_MAX_LETTERS {
                return Err(Error::WordTooLong { len: next.len(), limit: DEFAULT_MAX_LETTERS });
            }
            current = next;
        }
        Ok(FreeWord { rank: self.rank, letters: current })
    }
}

/// Checks that `γ ↦ γ * Q` is an automorphism on the generator basis: the
/// images multiply consistently with the words they come from, and acting by
/// `Q⁻¹` recovers every generator.
pub fn act_is_automorphism_check(braid: &BraidWord) -> bool {
    let d = braid.strands();
    let images: Vec<FreeWord> = match (1..=d).map(|i| FreeWord::generator(d, i).artin_act(braid)).collect() {
        Ok(v) => v,
        Err(_) => return false,
    };
    let inverse = braid.invert();
    let round_trip = images.iter().enumerate().all(|(i, img)| {
        img.artin_act(&inverse).is_ok_and(|w| w == FreeWord::generator(d, i + 1))
    });
    // multiplicativity on adjacent products and inverses
    let multiplicative = (1..d).all(|i| {
        let a = FreeWord::generator(d, i);
        let b = FreeWord::generator(d, i + 1);
        let Ok(prod) = a.mul(&b.inverse()) else { return false };
        let Ok(lhs) = prod.artin_act(braid) else { return false };
        let Ok(rhs) = images[i - 1].mul(&images[i].inverse()) else { return false };
        lhs == rhs
    });
    round_trip && multiplicative
}

/// Values of a homomorphism out of `F_d`, enough to transport it along the
/// Artin action without expanding free words.
pub trait GroupImage: Clone + PartialEq {
    fn mul(&self, other: &Self) -> Result<Self>;
    fn inv(&self) -> Result<Self>;
}

impl GroupImage for crate::perm::Permutation {
    fn mul(&self, other: &Self) -> Result<Self> {
        Ok(self.then(other))
    }

    fn inv(&self) -> Result<Self> {
        Ok(self.inverse())
    }
}

/// Given `images[i] = h(γ_{i+1})` for a homomorphism `h`, returns the images
/// of `γ_{i+1} * Q`, i.e. the generator values of `h ∘ Q_*`.
///
/// Works letter by letter from the right end of `Q`, so cost is linear in
/// the braid length.
pub fn pull_back_images<T: GroupImage>(images: &[T], braid: &BraidWord) -> Result<Vec<T>> {
    if images.len() != braid.strands() {
        return Err(Error::RankMismatch { left: images.len(), right: braid.strands() });
    }
    let mut current = images.to_vec();
    for &b in braid.letters().iter().rev() {
        let i = b.unsigned_abs() as usize - 1;
        let (x, y) = (current[i].clone(), current[i + 1].clone());
        if b > 0 {
            current[i] = x.mul(&y)?.mul(&x.inv()?)?;
            current[i + 1] = x;
        } else {
            current[i + 1] = y.inv()?.mul(&x)?.mul(&y)?;
            current[i] = y;
        }
    }
    Ok(current)
}

/// Evaluates a free word under generator images, multiplying left to right.
pub fn evaluate_images<T: GroupImage>(images: &[T], identity: T, word: &FreeWord) -> Result<T> {
    if images.len() != word.rank() {
        return Err(Error::RankMismatch { left: images.len(), right: word.rank() });
    }
    let mut acc = identity;
    for &l in word.letters() {
        let g = &images[l.unsigned_abs() as usize - 1];
        acc = if l > 0 { acc.mul(g)? } else { acc.mul(&g.inv()?)? };
    }
    Ok(acc)
}

impl fmt::Display for FreeWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_letters(&self.letters, 'g'))
    }
}
