//! Garside left normal form for braid groups.
//!
//! A braid is written `Δ^k · A_1 ⋯ A_m` with each `A_j` a non-trivial proper
//! permutation braid and every consecutive pair left-weighted. The form is
//! unique per group element, so it doubles as a hashable key.
//!
//! A permutation braid is stored by strand destinations: the strand starting
//! at position `x` ends at position `p(x)`. Products read left to right.

use crate::perm::Permutation;

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct NormalForm {
    strands: usize,
    delta_power: i64,
    factors: Vec<Permutation>,
}

fn delta(d: usize) -> Permutation {
    Permutation::from_images((0..d).rev().collect()).expect("reversal is a bijection")
}

/// `Δ P Δ⁻¹`, which maps `σ_i` to `σ_{d-i}`.
fn flip(p: &Permutation) -> Permutation {
    let d = p.degree();
    Permutation::from_images((0..d).map(|x| d - 1 - p.apply(d - 1 - x)).collect())
        .expect("conjugate of a bijection")
}

/// Does `B` start with `σ_{i+1}` (0-based `i`)?
#[inline]
fn starts_with(b: &Permutation, i: usize) -> bool {
    b.apply(i) > b.apply(i + 1)
}

/// Is `A σ_{i+1}` still a permutation braid?
#[inline]
fn extends_by(a_inv: &Permutation, i: usize) -> bool {
    a_inv.apply(i) < a_inv.apply(i + 1)
}

/// Moves generators from the front of `b` to the back of `a` until the pair is
/// left-weighted. Returns whether anything moved.
fn left_weight(a: &mut Permutation, b: &mut Permutation) -> bool {
    let d = a.degree();
    let mut moved = false;
    let mut a_inv = a.inverse();
    loop {
        let found = (0..d.saturating_sub(1)).find(|&i| starts_with(b, i) && extends_by(&a_inv, i));
        match found {
            Some(i) => {
                let s = Permutation::transposition(d, i, i + 1);
                *a = a.then(&s);
                *b = s.then(b);
                a_inv = a.inverse();
                moved = true;
            }
            None => return moved,
        }
    }
}

/// Lexicographically least positive word (0-based generator indices) for a
/// permutation braid.
fn simple_to_generators(p: &Permutation) -> Vec<usize> {
    let d = p.degree();
    let mut p = p.clone();
    let mut out = Vec::new();
    while let Some(i) = (0..d.saturating_sub(1)).find(|&i| starts_with(&p, i)) {
        out.push(i);
        p = Permutation::transposition(d, i, i + 1).then(&p);
    }
    out
}

impl NormalForm {
    pub fn identity(strands: usize) -> Self {
        NormalForm { strands, delta_power: 0, factors: Vec::new() }
    }

    /// Normal form of a word of signed 1-based generator indices.
    ///
    /// Every `σ_i⁻¹` is rewritten as `Δ⁻¹ · (Δσ_i⁻¹)`, and the `Δ⁻¹`s are
    /// pushed to the front, flipping each simple factor they pass over.
    pub fn from_letters(strands: usize, letters: &[i32]) -> Self {
        if strands < 2 {
            return Self::identity(strands);
        }
        let d = strands;
        let full = delta(d);
        let mut simples = Vec::with_capacity(letters.len());
        let mut negatives_after = 0usize;
        for &l in letters.iter().rev() {
            let i = l.unsigned_abs() as usize - 1;
            let s = Permutation::transposition(d, i, i + 1);
            let simple = if l > 0 { s } else { full.then(&s) };
            simples.push(if negatives_after % 2 == 1 { flip(&simple) } else { simple });
            if l < 0 {
                negatives_after += 1;
            }
        }
        simples.reverse();
        let mut nf = NormalForm { strands: d, delta_power: -(negatives_after as i64), factors: Vec::new() };
        for s in simples {
            nf.push_simple(s);
        }
        nf.tidy();
        nf
    }

    fn push_simple(&mut self, s: Permutation) {
        self.factors.push(s);
        let mut j = self.factors.len() - 1;
        while j > 0 {
            let (left, right) = self.factors.split_at_mut(j);
            if !left_weight(&mut left[j - 1], &mut right[0]) {
                break;
            }
            j -= 1;
        }
    }

    /// Restores left-weightedness everywhere, then absorbs leading `Δ`s and
    /// drops trailing identities.
    fn tidy(&mut self) {
        loop {
            let mut changed = false;
            for j in 1..self.factors.len() {
                let (left, right) = self.factors.split_at_mut(j);
                changed |= left_weight(&mut left[j - 1], &mut right[0]);
            }
            if !changed {
                break;
            }
        }
        let full = delta(self.strands);
        let leading = self.factors.iter().take_while(|p| **p == full).count();
        self.factors.drain(..leading);
        self.delta_power += leading as i64;
        while self.factors.last().is_some_and(|p| p.is_identity()) {
            self.factors.pop();
        }
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    /// Exponent of the leading `Δ` (the infimum).
    pub fn delta_power(&self) -> i64 {
        self.delta_power
    }

    /// Number of non-`Δ` simple factors (canonical length).
    pub fn canonical_length(&self) -> usize {
        self.factors.len()
    }

    pub fn factors(&self) -> &[Permutation] {
        &self.factors
    }

    pub fn is_identity(&self) -> bool {
        self.delta_power == 0 && self.factors.is_empty()
    }

    /// Re-serializes the normal form: `Δ^k` followed by each simple factor's
    /// least positive word. Negative powers use the inverse of the `Δ` word.
    pub fn to_letters(&self) -> Vec<i32> {
        if self.strands < 2 {
            return Vec::new();
        }
        let delta_word: Vec<i32> =
            simple_to_generators(&delta(self.strands)).into_iter().map(|i| i as i32 + 1).collect();
        let mut out = Vec::new();
        if self.delta_power >= 0 {
            for _ in 0..self.delta_power {
                out.extend_from_slice(&delta_word);
            }
        } else {
            let inv: Vec<i32> = delta_word.iter().rev().map(|l| -l).collect();
            for _ in 0..(-self.delta_power) {
                out.extend_from_slice(&inv);
            }
        }
        for p in &self.factors {
            out.extend(simple_to_generators(p).into_iter().map(|i| i as i32 + 1));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn delta_word_length() {
        for d in 2..7 {
            let w = simple_to_generators(&delta(d));
            assert_eq!(w.len(), d * (d - 1) / 2);
        }
    }

    #[test]
    fn full_twist_is_delta_squared() {
        for d in 2..7usize {
            let mut word = Vec::new();
            for _ in 0..d {
                word.extend(1..d as i32);
            }
            let nf = NormalForm::from_letters(d, &word);
            assert_eq!(nf.delta_power(), 2);
            assert_eq!(nf.canonical_length(), 0);
        }
    }

    #[test]
    fn inverse_pairs_cancel() {
        assert!(NormalForm::from_letters(4, &[2, -2]).is_identity());
        assert!(NormalForm::from_letters(4, &[-3, 1, 3, -1]).is_identity());
        assert!(!NormalForm::from_letters(4, &[1, 2, -1]).is_identity());
    }

    #[test]
    fn inverse_of_delta() {
        let nf = NormalForm::from_letters(3, &[-1, -2, -1]);
        assert_eq!(nf.delta_power(), -1);
        assert!(nf.factors().is_empty());
    }

    #[test]
    fn flip_maps_generators() {
        let s1 = Permutation::transposition(4, 0, 1);
        assert_eq!(flip(&s1), Permutation::transposition(4, 2, 3));
    }
}
