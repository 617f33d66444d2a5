//! Chains of braid factorizations `ρ_2, …, ρ_n` over a symmetric-group
//! representation `θ_1`, checked level by level as far as equality is
//! decidable.

use num_integer::Integer;
use serde::Serialize;

use crate::cover::{build_cover, CoverModel, SymplecticAction};
use crate::error::{Error, Result};
use crate::factorization::BraidFactorization;
use crate::free_group::{pull_back_images, GroupImage};
use crate::lattice;
use crate::monodromy::MonodromyRep;
use crate::report::ValidationReport;

/// Note attached to every chain report.
pub const HONESTY_NOTE: &str =
    "levels 1-2 verified (level 2 homologically); levels >= 3 structurally checked, not verified";

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearSystemData {
    pub half_dimension: usize,
    pub theta1: MonodromyRep,
    pub rhos: Vec<BraidFactorization>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ChainOptions {
    pub chain_check: bool,
}

impl Default for ChainOptions {
    fn default() -> Self {
        ChainOptions { chain_check: true }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ChainVerdict {
    pub report: ValidationReport,
    /// Levels present in the data that were only checked structurally.
    pub unverified_levels: Vec<usize>,
}

impl ChainVerdict {
    pub fn pass(&self) -> bool {
        self.report.pass
    }

    pub fn structural_only(&self) -> bool {
        self.report.pass && !self.unverified_levels.is_empty()
    }
}

impl GroupImage for SymplecticAction {
    fn mul(&self, other: &Self) -> Result<Self> {
        self.compose(other)
    }

    fn inv(&self) -> Result<Self> {
        self.inverse(&lattice::standard_form(self.dim()))
    }
}

fn level_one(data: &LinearSystemData) -> Result<(CoverModel, &BraidFactorization)> {
    let rho2 = data.rhos.first().ok_or_else(|| Error::Precondition("no ρ2 factorization".into()))?;
    let mut problems = Vec::new();
    let rep = data.theta1.validate_rep();
    problems.extend(rep.failures().map(|c| format!("theta1 {}: {}", c.name, c.detail)));
    if !problems.is_empty() {
        return Err(Error::InvalidRep(problems.join("; ")));
    }
    if rho2.strands() != data.theta1.generator_count() {
        return Err(Error::StrandMismatch { left: data.theta1.generator_count(), right: rho2.strands() });
    }
    let bad = data.theta1.non_liftable_factors(rho2)?;
    if !bad.is_empty() {
        let names: Vec<String> = bad.iter().map(|j| format!("factor[{j}]")).collect();
        return Err(Error::NotLiftable(format!("ρ2 {} not liftable through theta1", names.join(", "))));
    }
    let compat = data.theta1.check_compatibility(rho2)?;
    if !compat.pass {
        let names: Vec<String> = compat.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::Precondition(format!("theta1 incompatible with ρ2: {}", names.join("; "))));
    }
    Ok((build_cover(&data.theta1)?, rho2))
}

/// The homological shadow of `θ_2`: transvections of the tangency factors of
/// `ρ_2`, in order. Node and cusp factors lift trivially and carry no image.
pub fn derive_theta2_shadow(data: &LinearSystemData) -> Result<Vec<SymplecticAction>> {
    let (cover, rho2) = level_one(data)?;
    shadow_of(&cover, rho2)
}

fn shadow_of(cover: &CoverModel, rho2: &BraidFactorization) -> Result<Vec<SymplecticAction>> {
    rho2.factors()
        .iter()
        .filter(|f| f.degree == 1)
        .map(|f| match cover.vanishing_class(f)? {
            Some(v) => cover.transvection(&v),
            None => Ok(SymplecticAction::identity(cover.rank())),
        })
        .collect()
}

/// Vanishing direction of a transvection `I + J vᵀ v`, up to sign; zero for
/// the identity.
fn vanishing_vector(t: &SymplecticAction) -> Vec<i64> {
    let n = t.dim();
    for r in 0..n {
        let row: Vec<i64> = (0..n).map(|c| t.matrix[r][c] - i64::from(r == c)).collect();
        let g = row.iter().fold(0i64, |acc, &x| acc.gcd(&x));
        if g != 0 {
            return row.iter().map(|x| x / g).collect();
        }
    }
    vec![0; n]
}

fn check_level_two(report: &mut ValidationReport, shadow: &[SymplecticAction], rho3: &BraidFactorization) {
    let dim = shadow.first().map_or(0, SymplecticAction::dim);
    let form = lattice::standard_form(dim);
    for (j, f) in rho3.factors().iter().enumerate() {
        let name = format!("level2.rho3.factor[{j}]");
        let pulled = match pull_back_images(shadow, &f.conj) {
            Ok(p) => p,
            Err(e) => {
                report.push(name, false, e.to_string());
                continue;
            }
        };
        let (a, b) = (&pulled[0], &pulled[1]);
        let (va, vb) = (vanishing_vector(a), vanishing_vector(b));
        let meet = lattice::pairing(&va, &form, &vb).unwrap_or(i64::MAX);
        let (ok, need) = match f.degree {
            1 => (a == b, "equal transvections"),
            2 | -2 => (meet == 0, "disjoint vanishing classes (intersection 0)"),
            3 | -3 => (meet.abs() == 1, "vanishing classes meeting once (intersection ±1)"),
            _ => (false, "a legal degree"),
        };
        let detail = if ok { String::new() } else { format!("degree {}: intersection {meet}; need {need}", f.degree) };
        report.push(name, ok, detail);
        let lifts = f.underlying_braid().and_then(|u| pull_back_images(shadow, &u)).map(|p| p == shadow);
        let (ok, detail) = match lifts {
            Ok(true) => (true, String::new()),
            Ok(false) => (false, "underlying braid moves the θ2 shadow".to_string()),
            Err(e) => (false, e.to_string()),
        };
        report.push(format!("level2.rho3.liftable[{j}]"), ok, detail);
    }
}

/// Checks a linear-system chain. Level 1 is checked in full, level 2 through
/// the homological shadow of `θ_2`, higher levels only structurally.
pub fn validate_chain(data: &LinearSystemData, options: ChainOptions) -> ChainVerdict {
    let mut report = ValidationReport::new();
    report.notes.push(HONESTY_NOTE.to_string());
    let expected = data.half_dimension.saturating_sub(1);
    report.push(
        "structure.levels",
        data.half_dimension >= 2 && data.rhos.len() == expected,
        if data.rhos.len() == expected {
            String::new()
        } else {
            format!("n = {} needs {expected} factorizations, found {}", data.half_dimension, data.rhos.len())
        },
    );

    // structural shell for every ρ_r
    for (k, rho) in data.rhos.iter().enumerate() {
        let r = k + 2;
        report.absorb(&format!("rho{r}"), rho.validate());
        if options.chain_check {
            let want = if k == 0 {
                data.theta1.generator_count()
            } else {
                data.rhos[k - 1].census().tangency
            };
            let ok = rho.strands() == want;
            let source = if k == 0 { "theta1 branch points".to_string() } else { format!("tangencies of rho{}", r - 1) };
            report.push(
                format!("chain.rho{r}"),
                ok,
                if ok { String::new() } else { format!("braid index {}, expected {want} ({source})", rho.strands()) },
            );
        }
    }

    // level 1
    report.absorb("level1.theta1", data.theta1.validate_rep());
    let mut shadow = None;
    if let Some(rho2) = data.rhos.first() {
        if rho2.strands() == data.theta1.generator_count() {
            match data.theta1.check_compatibility(rho2) {
                Ok(c) => {
                    let failures: Vec<String> = c.failures().map(|x| format!("{}: {}", x.name, x.detail)).collect();
                    report.push("level1.compatibility", c.pass, failures.join("; "));
                }
                Err(e) => report.push("level1.compatibility", false, e.to_string()),
            }
            match data.theta1.non_liftable_factors(rho2) {
                Ok(bad) => report.push(
                    "level1.liftable",
                    bad.is_empty(),
                    if bad.is_empty() { String::new() } else { format!("ρ2 factors not liftable: {bad:?}") },
                ),
                Err(e) => report.push("level1.liftable", false, e.to_string()),
            }
            // level 2
            match derive_theta2_shadow(data) {
                Ok(s) => {
                    let ok = s.iter().all(|m| m.preserves(&lattice::standard_form(m.dim())));
                    report.push("level2.shadow", ok, format!("{} tangency images", s.len()));
                    shadow = Some(s);
                }
                Err(e) => report.push("level2.shadow", false, e.to_string()),
            }
        } else {
            report.push(
                "level1.compatibility",
                false,
                format!("ρ2 has {} strands, theta1 has {} branch points", rho2.strands(), data.theta1.generator_count()),
            );
        }
    }
    if let (Some(shadow), Some(rho3)) = (&shadow, data.rhos.get(1)) {
        if rho3.strands() == shadow.len() && shadow.len() >= 2 {
            check_level_two(&mut report, shadow, rho3);
        } else {
            report.notes.push(format!(
                "level 2 clauses for rho3 skipped: {} strands against {} tangency images",
                rho3.strands(),
                shadow.len()
            ));
        }
    }

    let unverified_levels: Vec<usize> = (3..data.rhos.len() + 1).collect();
    if !unverified_levels.is_empty() {
        report.notes.push(format!("levels {unverified_levels:?} structurally checked, not verified"));
    }
    ChainVerdict { report, unverified_levels }
}
