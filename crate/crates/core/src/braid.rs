//! Braid words in the Artin generators `σ_1, …, σ_{d-1}`.
//!
//! Products read left to right throughout the crate: in `a.compose(&b)` the
//! braid `a` acts first.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::garside::NormalForm;
use crate::perm::Permutation;
use crate::text;

/// Default cap on word length; exceeding it is an error, never a truncation.
pub const DEFAULT_MAX_LETTERS: usize = 1_000_000;

/// An element of `B_d` as a signed generator sequence (`i` is `σ_i`, `-i` is `σ_i⁻¹`).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct BraidWord {
    strands: usize,
    letters: Vec<i32>,
}

impl BraidWord {
    pub fn new(strands: usize, letters: Vec<i32>) -> Result<Self> {
        if strands == 0 {
            return Err(Error::Precondition("a braid needs at least one strand".into()));
        }
        if let Some(&bad) = letters.iter().find(|l| **l == 0 || l.unsigned_abs() as usize >= strands) {
            return Err(Error::GeneratorOutOfRange { index: bad, strands });
        }
        if letters.len() > DEFAULT_MAX_LETTERS {
            return Err(Error::WordTooLong { len: letters.len(), limit: DEFAULT_MAX_LETTERS });
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn identity(strands: usize) -> Self {
        BraidWord { strands, letters: Vec::new() }
    }

    /// `σ_i^{±1}` from a signed 1-based index.
    pub fn generator(strands: usize, letter: i32) -> Result<Self> {
        Self::new(strands, vec![letter])
    }

    /// Parses `"s1 s2^-1"` or a bare signed-integer list.
    pub fn parse(strands: usize, input: &str) -> Result<Self> {
        Self::new(strands, text::parse_letters(input, 's')?)
    }

    /// `Δ² = (σ_1 σ_2 ⋯ σ_{d-1})^d`.
    pub fn full_twist(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let row: Vec<i32> = (1..strands as i32).collect();
        Ok(BraidWord { strands, letters: row.repeat(strands) })
    }

    /// The positive half twist `Δ`.
    pub fn half_twist(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        let mut letters = Vec::new();
        for top in (1..strands as i32).rev() {
            letters.extend(1..=top);
        }
        Ok(BraidWord { strands, letters })
    }

    pub fn strands(&self) -> usize {
        self.strands
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

    pub fn compose(&self, other: &BraidWord) -> Result<BraidWord> {
        self.compose_limited(other, DEFAULT_MAX_LETTERS)
    }

    pub fn compose_limited(&self, other: &BraidWord, limit: usize) -> Result<BraidWord> {
        if self.strands != other.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: other.strands });
        }
        let len = self.letters.len() + other.letters.len();
        if len > limit {
            return Err(Error::WordTooLong { len, limit });
        }
        let mut letters = Vec::with_capacity(len);
        letters.extend_from_slice(&self.letters);
        letters.extend_from_slice(&other.letters);
        Ok(BraidWord { strands: self.strands, letters })
    }

    pub fn invert(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.letters.iter().rev().map(|l| -l).collect() }
    }

    /// `self^k` for `k ≥ 0`; negative `k` inverts first.
    pub fn pow(&self, k: i32) -> Result<BraidWord> {
        let base = if k < 0 { self.invert() } else { self.clone() };
        let len = base.len() * k.unsigned_abs() as usize;
        if len > DEFAULT_MAX_LETTERS {
            return Err(Error::WordTooLong { len, limit: DEFAULT_MAX_LETTERS });
        }
        Ok(BraidWord { strands: self.strands, letters: base.letters.repeat(k.unsigned_abs() as usize) })
    }

    /// `self⁻¹ · inner · self`.
    pub fn conjugate(&self, inner: &BraidWord) -> Result<BraidWord> {
        self.invert().compose(inner)?.compose(self)
    }

    /// Cancels adjacent `σ_i σ_i⁻¹` pairs. Same group element, never longer.
    pub fn free_reduced(&self) -> BraidWord {
        let mut out: Vec<i32> = Vec::with_capacity(self.letters.len());
        for &l in &self.letters {
            if out.last() == Some(&-l) {
                out.pop();
            } else {
                out.push(l);
            }
        }
        BraidWord { strands: self.strands, letters: out }
    }

    pub fn normal_form(&self) -> NormalForm {
        NormalForm::from_letters(self.strands, &self.letters)
    }

    /// The unique representative word of this group element.
    pub fn canonical_form(&self) -> BraidWord {
        BraidWord { strands: self.strands, letters: self.normal_form().to_letters() }
    }

    pub fn group_eq(&self, other: &BraidWord) -> bool {
        self.strands == other.strands && self.normal_form() == other.normal_form()
    }

    pub fn is_trivial(&self) -> bool {
        self.normal_form().is_identity()
    }

    /// Image in `ℤ` under `σ_i ↦ 1`.
    pub fn exponent_sum(&self) -> i64 {
        self.letters.iter().map(|&l| l.signum() as i64).sum()
    }

    /// Image in `S_d` under `σ_i ↦ (i i+1)`, multiplied left to right, so
    /// strand `x` ends at position `p(x)`.
    pub fn permutation_image(&self) -> Permutation {
        let mut strand_at: Vec<usize> = (0..self.strands).collect();
        for &l in &self.letters {
            let i = l.unsigned_abs() as usize - 1;
            strand_at.swap(i, i + 1);
        }
        let mut images = vec![0; self.strands];
        for (position, &strand) in strand_at.iter().enumerate() {
            images[strand] = position;
        }
        Permutation::from_images(images).expect("strand tracking yields a bijection")
    }
}

impl fmt::Display for BraidWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&text::format_letters(&self.letters, 's'))
    }
}
