//! Factorizations of the full twist `Δ²` into conjugated powers of `σ_1`,
//! and the moves generating m-equivalence.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::monodromy::MonodromyRep;
use crate::report::{Census, ValidationReport};

/// One factor `Q⁻¹ σ_1^r Q`. The degree records the point type: 1 tangency,
/// ±2 node, 3 cusp (−3 only when reversed cusps are allowed).
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Factor {
    pub conj: BraidWord,
    pub degree: i32,
}

impl Factor {
    pub fn new(conj: BraidWord, degree: i32) -> Self {
        Factor { conj, degree }
    }

    /// `Q⁻¹ σ_1^r Q`.
    pub fn underlying_braid(&self) -> Result<BraidWord> {
        let d = self.conj.strands();
        if d < 2 {
            return Err(Error::TooFewStrands(d));
        }
        let power = BraidWord::generator(d, 1)?.pow(self.degree)?;
        self.conj.conjugate(&power)
    }
}

pub fn degree_allowed(degree: i32, allow_negative_cusps: bool) -> bool {
    matches!(degree, 1 | 2 | -2 | 3) || (allow_negative_cusps && degree == -3)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Direction {
    Forward,
    Backward,
}

/// An ordered list of factors on `d` strands.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct BraidFactorization {
    strands: usize,
    allow_negative_cusps: bool,
    factors: Vec<Factor>,
}

impl BraidFactorization {
    pub fn new(strands: usize, factors: Vec<Factor>) -> Result<Self> {
        Self::with_flags(strands, false, factors)
    }

    pub fn with_flags(strands: usize, allow_negative_cusps: bool, factors: Vec<Factor>) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        for f in &factors {
            if f.conj.strands() != strands {
                return Err(Error::StrandMismatch { left: strands, right: f.conj.strands() });
            }
            if !degree_allowed(f.degree, allow_negative_cusps) {
                return Err(Error::BadDegree(f.degree));
            }
        }
        Ok(BraidFactorization { strands, allow_negative_cusps, factors })
    }

    /// `Δ² = (σ_1 ⋯ σ_{d-1})^d` as `d(d-1)` tangency factors: the
    /// monodromy of a smooth degree-`d` curve under a generic projection.
    pub fn smooth_curve(strands: usize) -> Result<Self> {
        if strands < 2 {
            return Err(Error::TooFewStrands(strands));
        }
        // σ_{k+1} = Q⁻¹ σ_1 Q with Q = Q_k σ_{k+1}⁻¹ σ_k⁻¹
        let mut conjugators = vec![BraidWord::identity(strands)];
        for k in 1..strands as i32 - 1 {
            let step = BraidWord::new(strands, vec![-(k + 1), -k])?;
            let next = conjugators.last().expect("non-empty").compose(&step)?;
            conjugators.push(next);
        }
        let mut factors = Vec::with_capacity(strands * (strands - 1));
        for _ in 0..strands {
            for q in &conjugators {
                factors.push(Factor::new(q.clone(), 1));
            }
        }
        Self::new(strands, factors)
    }

    pub fn strands(&self) -> usize {
        self.strands
    }

    pub fn allow_negative_cusps(&self) -> bool {
        self.allow_negative_cusps
    }

    pub fn factors(&self) -> &[Factor] {
        &self.factors
    }

    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn census(&self) -> Census {
        let mut c = Census::default();
        for f in &self.factors {
            c.record(f.degree);
        }
        c
    }

    pub fn degree_sum(&self) -> i64 {
        self.factors.iter().map(|f| f.degree as i64).sum()
    }

    pub fn underlying_braids(&self) -> Result<Vec<BraidWord>> {
        self.factors.iter().map(Factor::underlying_braid).collect()
    }

    /// Ordered product of the underlying braids.
    pub fn product(&self) -> Result<BraidWord> {
        let mut acc = BraidWord::identity(self.strands);
        for f in &self.factors {
            acc = acc.compose(&f.underlying_braid()?)?;
        }
        Ok(acc)
    }

    /// Product check against `Δ²`, exponent-sum check, degree census.
    pub fn validate(&self) -> ValidationReport {
        let mut report = ValidationReport::new();
        let d = self.strands as i64;
        let target = d * (d - 1);
        let sum = self.degree_sum();
        report.push("exponent_sum", sum == target, format!("sum of degrees {sum}, expected {target}"));
        match (self.product(), BraidWord::full_twist(self.strands)) {
            (Ok(p), Ok(t)) => {
                let ok = p.normal_form() == t.normal_form();
                let detail = if ok { String::new() } else { format!("product has normal form {}", p.canonical_form()) };
                report.push("product_is_full_twist", ok, detail);
            }
            (Err(e), _) | (_, Err(e)) => report.push("product_is_full_twist", false, e.to_string()),
        }
        report.census = Some(self.census());
        report
    }

    pub fn is_valid(&self) -> bool {
        self.validate().pass
    }

    fn check_pair_index(&self, i: usize) -> Result<()> {
        if i + 1 >= self.factors.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.factors.len() });
        }
        Ok(())
    }

    /// Hurwitz move on factors `i, i+1` (0-based). Forward sends
    /// `(f_i, f_{i+1})` to `(f_{i+1}, f_{i+1}⁻¹ f_i f_{i+1})`; backward is its
    /// inverse. Degrees travel with their factors.
    pub fn hurwitz_move(&self, i: usize, direction: Direction) -> Result<Self> {
        self.check_pair_index(i)?;
        let mut factors = self.factors.clone();
        let (a, b) = (&self.factors[i], &self.factors[i + 1]);
        match direction {
            Direction::Forward => {
                let conj = a.conj.compose(&b.underlying_braid()?)?.free_reduced();
                factors[i] = b.clone();
                factors[i + 1] = Factor::new(conj, a.degree);
            }
            Direction::Backward => {
                let conj = b.conj.compose(&a.underlying_braid()?.invert())?.free_reduced();
                factors[i] = Factor::new(conj, b.degree);
                factors[i + 1] = a.clone();
            }
        }
        Ok(BraidFactorization { factors, ..self.clone() })
    }

    /// Replaces every conjugator `Q_j` by `Q_j Q`.
    pub fn global_conjugate(&self, braid: &BraidWord) -> Result<Self> {
        if braid.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: braid.strands() });
        }
        let factors = self
            .factors
            .iter()
            .map(|f| Ok(Factor::new(f.conj.compose(braid)?.free_reduced(), f.degree)))
            .collect::<Result<Vec<_>>>()?;
        Ok(BraidFactorization { factors, ..self.clone() })
    }

    /// Removes the adjacent node pair at `i, i+1`.
    pub fn cancel_pair(&self, i: usize) -> Result<Self> {
        self.check_pair_index(i)?;
        let (a, b) = (&self.factors[i], &self.factors[i + 1]);
        if !((a.degree == 2 && b.degree == -2) || (a.degree == -2 && b.degree == 2)) {
            return Err(Error::Precondition(format!(
                "degrees not ±2: factors {i} and {} have degrees {} and {}",
                i + 1,
                a.degree,
                b.degree
            )));
        }
        if !a.underlying_braid()?.compose(&b.underlying_braid()?)?.is_trivial() {
            return Err(Error::Precondition(format!(
                "not mutual inverses: factors {i} and {} do not cancel",
                i + 1
            )));
        }
        let mut factors = self.factors.clone();
        factors.drain(i..i + 2);
        Ok(BraidFactorization { factors, ..self.clone() })
    }

    /// Inserts `(Q, −2), (Q, 2)` before position `i` (`0 ≤ i ≤ len`). Allowed
    /// only when `θ` is compatible with the factorization and `θ(γ_1 * Q)`,
    /// `θ(γ_2 * Q)` are disjoint transpositions.
    pub fn create_pair(&self, i: usize, conj: &BraidWord, theta: &MonodromyRep) -> Result<Self> {
        if i > self.factors.len() {
            return Err(Error::IndexOutOfRange { index: i, len: self.factors.len() });
        }
        if conj.strands() != self.strands {
            return Err(Error::StrandMismatch { left: self.strands, right: conj.strands() });
        }
        if theta.generator_count() != self.strands {
            return Err(Error::RankMismatch { left: theta.generator_count(), right: self.strands });
        }
        let compat = theta.check_compatibility(self)?;
        if !compat.pass {
            return Err(Error::Precondition("representation is not compatible with the factorization".into()));
        }
        let (a, b) = theta.pair_images(conj)?;
        let disjoint = match (a.as_transposition(), b.as_transposition()) {
            (Some((a0, a1)), Some((b0, b1))) => a0 != b0 && a0 != b1 && a1 != b0 && a1 != b1,
            _ => false,
        };
        if !disjoint {
            return Err(Error::Precondition(format!(
                "pair creation needs disjoint transpositions, got θ(γ1*Q) = {a} and θ(γ2*Q) = {b}"
            )));
        }
        self.insert_pair_unchecked(i, conj)
    }

    pub(crate) fn insert_pair_unchecked(&self, i: usize, conj: &BraidWord) -> Result<Self> {
        let mut factors = self.factors.clone();
        factors.insert(i, Factor::new(conj.clone(), 2));
        factors.insert(i, Factor::new(conj.clone(), -2));
        Ok(BraidFactorization { factors, ..self.clone() })
    }

    /// Same factorization with conjugators replaced by their canonical words.
    pub fn normalized(&self) -> Self {
        let factors = self.factors.iter().map(|f| Factor::new(f.conj.canonical_form(), f.degree)).collect();
        BraidFactorization { factors, ..self.clone() }
    }

    pub fn with_factors(&self, factors: Vec<Factor>) -> Result<Self> {
        Self::with_flags(self.strands, self.allow_negative_cusps, factors)
    }
}
