//! Geometric monodromy representations `θ: F_d → S_n` and their
//! compatibility with braid factorizations.

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::BraidFactorization;
use crate::free_group::{evaluate_images, pull_back_images, FreeWord};
use crate::perm::Permutation;
use crate::report::ValidationReport;

/// Images of the geometric generators, each meant to be a transposition.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MonodromyRep {
    sheets: usize,
    images: Vec<Permutation>,
}

/// How two transpositions sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PairType {
    Equal,
    Disjoint,
    /// Supports share exactly one point; the pair does not commute.
    Linked,
    /// One of the two is not a transposition.
    Degenerate,
}

pub fn pair_type(a: &Permutation, b: &Permutation) -> PairType {
    match (a.as_transposition(), b.as_transposition()) {
        (Some(x), Some(y)) if x == y => PairType::Equal,
        (Some((a0, a1)), Some((b0, b1))) => {
            let shared = [a0, a1].iter().filter(|p| **p == b0 || **p == b1).count();
            if shared == 0 {
                PairType::Disjoint
            } else {
                PairType::Linked
            }
        }
        _ => PairType::Degenerate,
    }
}

impl MonodromyRep {
    /// Builds `θ` on `n` sheets from 1-based pairs `{a, b}`.
    pub fn from_pairs(sheets: usize, pairs: &[(usize, usize)]) -> Result<Self> {
        if sheets == 0 {
            return Err(Error::InvalidRep("covering degree must be at least 1".into()));
        }
        let images = pairs
            .iter()
            .enumerate()
            .map(|(k, &(a, b))| {
                if a == 0 || b == 0 || a > sheets || b > sheets {
                    Err(Error::InvalidRep(format!("image {} = ({a} {b}) is outside 1..={sheets}", k + 1)))
                } else {
                    Ok(Permutation::transposition(sheets, a - 1, b - 1))
                }
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(MonodromyRep { sheets, images })
    }

    pub fn from_images(sheets: usize, images: Vec<Permutation>) -> Result<Self> {
        if images.iter().any(|p| p.degree() != sheets) {
            return Err(Error::InvalidRep(format!("every image must act on {sheets} points")));
        }
        Ok(MonodromyRep { sheets, images })
    }

    /// All `d` generators sent to `(1 2)`: the hyperelliptic double cover.
    pub fn hyperelliptic(generators: usize) -> Self {
        MonodromyRep { sheets: 2, images: vec![Permutation::transposition(2, 0, 1); generators] }
    }

    /// Number of geometric generators `d`.
    pub fn generator_count(&self) -> usize {
        self.images.len()
    }

    /// Covering degree `n`.
    pub fn sheets(&self) -> usize {
        self.sheets
    }

    pub fn images(&self) -> &[Permutation] {
        &self.images
    }

    /// 1-based pairs; a trivial image is written `(1, 1)`.
    pub fn pairs(&self) -> Vec<(usize, usize)> {
        self.images.iter().map(|p| p.as_transposition().map_or((1, 1), |(a, b)| (a + 1, b + 1))).collect()
    }

    pub fn evaluate(&self, word: &FreeWord) -> Result<Permutation> {
        evaluate_images(&self.images, Permutation::identity(self.sheets), word)
    }

    /// `θ(γ_1 γ_2 ⋯ γ_d)`.
    pub fn boundary_image(&self) -> Permutation {
        self.images.iter().fold(Permutation::identity(self.sheets), |acc, p| acc.then(p))
    }

    /// Whether the images generate a transitive subgroup.
    pub fn is_transitive(&self) -> bool {
        let mut parent: Vec<usize> = (0..self.sheets).collect();
        fn find(parent: &mut [usize], x: usize) -> usize {
            let mut r = x;
            while parent[r] != r {
                r = parent[r];
            }
            parent[x] = r;
            r
        }
        for p in &self.images {
            for (x, &y) in p.images().iter().enumerate() {
                let (rx, ry) = (find(&mut parent, x), find(&mut parent, y));
                if rx != ry {
                    parent[rx] = ry;
                }
            }
        }
        let root = find(&mut parent, 0);
        (0..self.sheets).all(|x| find(&mut parent, x) == root)
    }

    /// Transposition images, trivial boundary product, transitivity (which
    /// for transpositions is surjectivity onto `S_n`).
    pub fn validate_rep(&self) -> ValidationReport {
        let mut r = ValidationReport::new();
        let bad: Vec<String> = self
            .images
            .iter()
            .enumerate()
            .filter(|(_, p)| p.as_transposition().is_none())
            .map(|(k, p)| format!("γ{} ↦ {p}", k + 1))
            .collect();
        r.push("transpositions", bad.is_empty(), if bad.is_empty() { String::new() } else { format!("not transpositions: {}", bad.join(", ")) });
        let prod = self.boundary_image();
        r.push(
            "product_identity",
            prod.is_identity(),
            if prod.is_identity() { String::new() } else { format!("θ(γ1⋯γd) = {prod}") },
        );
        let transitive = self.is_transitive();
        r.push(
            "transitive",
            transitive,
            if transitive { String::new() } else { format!("images do not act transitively on {} sheets", self.sheets) },
        );
        r
    }

    /// `θ ∘ Q_*`: the representation with generator images `θ(γ_i * Q)`.
    pub fn transported(&self, braid: &BraidWord) -> Result<MonodromyRep> {
        Ok(MonodromyRep { sheets: self.sheets, images: pull_back_images(&self.images, braid)? })
    }

    /// Companion of [`BraidFactorization::global_conjugate`] by `Q`: if `θ`
    /// is compatible with `F`, then this representation is compatible with
    /// `F` conjugated by `Q`. It equals `θ ∘ (Q⁻¹)_*`.
    pub fn conjugation_companion(&self, braid: &BraidWord) -> Result<MonodromyRep> {
        self.transported(&braid.invert())
    }

    /// `(θ(γ_1 * Q), θ(γ_2 * Q))`.
    pub fn pair_images(&self, braid: &BraidWord) -> Result<(Permutation, Permutation)> {
        if braid.strands() < 2 {
            return Err(Error::TooFewStrands(braid.strands()));
        }
        let pulled = self.transported(braid)?;
        Ok((pulled.images[0].clone(), pulled.images[1].clone()))
    }

    /// `Q` lies in the stabilizer `B_d⁰(θ)`: `θ(γ_i * Q) = θ(γ_i)` for all `i`.
    pub fn is_liftable(&self, braid: &BraidWord) -> Result<bool> {
        Ok(self.transported(braid)?.images == self.images)
    }

    /// Indices of factors whose underlying braid is not liftable.
    pub fn non_liftable_factors(&self, factorization: &BraidFactorization) -> Result<Vec<usize>> {
        self.expect_rank(factorization.strands())?;
        let mut out = Vec::new();
        for (j, f) in factorization.factors().iter().enumerate() {
            if !self.is_liftable(&f.underlying_braid()?)? {
                out.push(j);
            }
        }
        Ok(out)
    }

    pub fn liftability_of_factorization(&self, factorization: &BraidFactorization) -> Result<bool> {
        Ok(self.non_liftable_factors(factorization)?.is_empty())
    }

    fn expect_rank(&self, strands: usize) -> Result<()> {
        if self.generator_count() != strands {
            return Err(Error::RankMismatch { left: self.generator_count(), right: strands });
        }
        Ok(())
    }

    /// The representation checks plus one check per factor:
    /// degree 1 needs equal images, ±2 disjoint, ±3 sharing one point.
    pub fn check_compatibility(&self, factorization: &BraidFactorization) -> Result<ValidationReport> {
        self.expect_rank(factorization.strands())?;
        let mut report = ValidationReport::new();
        report.absorb("rep", self.validate_rep());
        for (j, f) in factorization.factors().iter().enumerate() {
            let (a, b) = self.pair_images(&f.conj)?;
            let kind = pair_type(&a, &b);
            let (ok, want) = match f.degree.abs() {
                1 => (kind == PairType::Equal, "equal"),
                2 => (kind == PairType::Disjoint, "distinct and commuting"),
                3 => (kind == PairType::Linked, "non-commuting"),
                _ => (false, "a supported degree"),
            };
            let detail = format!("degree {}: θ(γ1*Q) = {a}, θ(γ2*Q) = {b}; need {want}", f.degree);
            report.push(format!("factor[{j}]"), ok, detail);
        }
        report.census = Some(factorization.census());
        Ok(report)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::factorization::Factor;

    fn rep(n: usize, pairs: &[(usize, usize)]) -> MonodromyRep {
        MonodromyRep::from_pairs(n, pairs).unwrap()
    }

    #[test]
    fn evaluation() {
        let theta = rep(3, &[(1, 2), (2, 3), (1, 2), (2, 3), (1, 2), (2, 3)]);
        assert_eq!(theta.evaluate(&FreeWord::generator(6, 2)).unwrap(), Permutation::transposition(3, 1, 2));
        assert!(theta.evaluate(&FreeWord::boundary(6)).unwrap().is_identity());
        let h = MonodromyRep::hyperelliptic(4);
        assert!(h.evaluate(&FreeWord::new(4, vec![1, 2]).unwrap()).unwrap().is_identity());
    }

    #[test]
    fn validation_cases() {
        assert!(MonodromyRep::hyperelliptic(4).validate_rep().pass);
        let odd = MonodromyRep::hyperelliptic(3).validate_rep();
        assert!(!odd.check("product_identity").unwrap().pass);
        let narrow = rep(3, &[(1, 2), (1, 2)]).validate_rep();
        assert!(narrow.check("product_identity").unwrap().pass);
        assert!(!narrow.check("transitive").unwrap().pass);
        let degenerate = rep(2, &[(1, 1), (1, 2), (1, 2)]).validate_rep();
        assert!(!degenerate.check("transpositions").unwrap().pass);
        assert!(MonodromyRep::from_pairs(2, &[(1, 3)]).is_err());
    }

    #[test]
    fn liftability() {
        let theta = rep(3, &[(1, 2), (2, 3), (1, 2), (2, 3), (1, 2), (2, 3)]);
        assert!(theta.validate_rep().pass);
        assert!(theta.is_liftable(&BraidWord::identity(6)).unwrap());
        assert!(!theta.is_liftable(&BraidWord::generator(6, 1).unwrap()).unwrap());
        let h = MonodromyRep::hyperelliptic(4);
        assert!(h.is_liftable(&BraidWord::new(4, vec![1, -2, 3, 3, -1]).unwrap()).unwrap());
    }

    #[test]
    fn conic_compatibility() {
        let conic = BraidFactorization::new(2, vec![Factor::new(BraidWord::identity(2), 1); 2]).unwrap();
        let theta = MonodromyRep::hyperelliptic(2);
        assert!(theta.check_compatibility(&conic).unwrap().pass);
        let mutated = conic.with_factors(vec![Factor::new(BraidWord::identity(2), 3), Factor::new(BraidWord::identity(2), 1)]).unwrap();
        let r = theta.check_compatibility(&mutated).unwrap();
        assert!(!r.pass);
        assert!(!r.check("factor[0]").unwrap().pass);
        assert!(r.check("factor[1]").unwrap().pass);
        assert!(theta.liftability_of_factorization(&conic).unwrap());
    }

    #[test]
    fn quartic_compatibility() {
        let quartic = BraidFactorization::smooth_curve(4).unwrap();
        let theta = MonodromyRep::hyperelliptic(4);
        assert!(theta.check_compatibility(&quartic).unwrap().pass);
        assert!(theta.liftability_of_factorization(&quartic).unwrap());
    }

    #[test]
    fn pair_types() {
        let t = |a, b| Permutation::transposition(4, a, b);
        assert_eq!(pair_type(&t(0, 1), &t(0, 1)), PairType::Equal);
        assert_eq!(pair_type(&t(0, 1), &t(2, 3)), PairType::Disjoint);
        assert_eq!(pair_type(&t(0, 1), &t(1, 2)), PairType::Linked);
        assert_eq!(pair_type(&t(0, 1), &Permutation::identity(4)), PairType::Degenerate);
    }
}
