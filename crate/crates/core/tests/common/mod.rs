#![allow(dead_code)]

pub mod handle;

use monodromy_core::BraidWord;
use rand::Rng;

pub fn random_letters<R: Rng>(rng: &mut R, strands: usize, len: usize) -> Vec<i32> {
    (0..len)
        .map(|_| {
            let g = rng.gen_range(1..strands as i32);
            if rng.gen_bool(0.5) { g } else { -g }
        })
        .collect()
}

pub fn random_braid<R: Rng>(rng: &mut R, strands: usize, max_len: usize) -> BraidWord {
    let len = rng.gen_range(0..=max_len);
    BraidWord::new(strands, random_letters(rng, strands, len)).unwrap()
}

/// Applies one random braid-relation or free-cancellation rewrite somewhere in
/// the word, if a site exists. The group element is unchanged.
pub fn random_rewrite<R: Rng>(rng: &mut R, strands: usize, w: &mut Vec<i32>) {
    let kind = rng.gen_range(0..4);
    match kind {
        0 => {
            // insert σσ⁻¹
            let g = rng.gen_range(1..strands as i32) * if rng.gen_bool(0.5) { 1 } else { -1 };
            let at = rng.gen_range(0..=w.len());
            w.splice(at..at, [g, -g]);
        }
        1 => {
            // far commutation
            let sites: Vec<usize> = (0..w.len().saturating_sub(1))
                .filter(|&k| (w[k].abs() - w[k + 1].abs()).abs() >= 2)
                .collect();
            if !sites.is_empty() {
                let k = sites[rng.gen_range(0..sites.len())];
                w.swap(k, k + 1);
            }
        }
        2 => {
            // σ_i σ_j σ_i <-> σ_j σ_i σ_j (same signs) for |i-j| = 1
            let sites: Vec<usize> = (0..w.len().saturating_sub(2))
                .filter(|&k| {
                    w[k] == w[k + 2]
                        && (w[k].abs() - w[k + 1].abs()).abs() == 1
                        && w[k].signum() == w[k + 1].signum()
                })
                .collect();
            if !sites.is_empty() {
                let k = sites[rng.gen_range(0..sites.len())];
                let (a, b) = (w[k], w[k + 1]);
                w[k] = b;
                w[k + 1] = a;
                w[k + 2] = b;
            }
        }
        _ => {
            // delete an adjacent inverse pair
            if let Some(k) = (0..w.len().saturating_sub(1)).find(|&k| w[k] == -w[k + 1]) {
                w.drain(k..k + 2);
            }
        }
    }
}

use monodromy_core::{BraidFactorization, Direction, MonodromyRep};

/// A valid factorization with `d ≤ 4`: the smooth-curve factorization
/// scrambled by random Hurwitz moves and one global conjugation.
pub fn random_valid_factorization<R: Rng>(rng: &mut R) -> BraidFactorization {
    let d = rng.gen_range(2..=4);
    let mut f = BraidFactorization::smooth_curve(d).unwrap();
    for _ in 0..rng.gen_range(0..4) {
        let i = rng.gen_range(0..f.len() - 1);
        let dir = if rng.gen_bool(0.5) { Direction::Forward } else { Direction::Backward };
        f = f.hurwitz_move(i, dir).unwrap();
    }
    let q = random_braid(rng, d, 3);
    f.global_conjugate(&q).unwrap()
}

/// A random valid simple-cover representation on `n` sheets with `d` branch
/// points (`d` even, `d ≥ 2n - 2`), built by rejection.
pub fn random_valid_rep<R: Rng>(rng: &mut R, sheets: usize, generators: usize) -> MonodromyRep {
    loop {
        let mut pairs = Vec::with_capacity(generators);
        for _ in 0..generators {
            let a = rng.gen_range(1..=sheets);
            let mut b = rng.gen_range(1..=sheets);
            while b == a {
                b = rng.gen_range(1..=sheets);
            }
            pairs.push((a.min(b), a.max(b)));
        }
        let theta = MonodromyRep::from_pairs(sheets, &pairs).unwrap();
        if theta.validate_rep().pass {
            return theta;
        }
    }
}
