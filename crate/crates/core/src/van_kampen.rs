//! Van Kampen presentations of complement fundamental groups.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::factorization::BraidFactorization;
use crate::free_group::FreeWord;
use crate::snf;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Mode {
    Affine,
    Projective,
}

impl FromStr for Mode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "affine" => Ok(Mode::Affine),
            "projective" => Ok(Mode::Projective),
            other => Err(Error::Parse { column: 1, message: format!("unknown mode '{other}'") }),
        }
    }
}

/// Generators `g1 … gn` and relators, each stored freely reduced.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroupPresentation {
    pub generator_count: usize,
    pub relations: Vec<FreeWord>,
}

impl GroupPresentation {
    pub fn new(generator_count: usize, relations: Vec<FreeWord>) -> Result<Self> {
        for r in &relations {
            if r.rank() != generator_count {
                return Err(Error::RankMismatch { left: generator_count, right: r.rank() });
            }
        }
        let relations = relations.iter().map(FreeWord::free_reduce).collect();
        Ok(GroupPresentation { generator_count, relations })
    }

    pub fn total_length(&self) -> usize {
        self.relations.iter().map(FreeWord::len).sum()
    }

    /// Exponent-sum matrix, one row per relator.
    pub fn relation_matrix(&self) -> Vec<Vec<i64>> {
        self.relations.iter().map(FreeWord::abelianize).collect()
    }
}

impl fmt::Display for GroupPresentation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let gens: Vec<String> = (1..=self.generator_count).map(|i| format!("g{i}")).collect();
        let rels: Vec<String> = self.relations.iter().map(ToString::to_string).collect();
        write!(f, "< {} | {} >", gens.join(", "), rels.join(", "))
    }
}

/// Relator for the factor `(Q, r)`, as a word `u v⁻¹`.
pub fn factor_relation(strands: usize, conj: &crate::BraidWord, degree: i32) -> Result<FreeWord> {
    let g1 = FreeWord::generator(strands, 1);
    let g2 = FreeWord::generator(strands, 2);
    let u = g1.artin_act(conj)?;
    let v = g2.artin_act(conj)?;
    match degree.abs() {
        1 => u.mul(&v.inverse()),
        2 => u.commutator(&v),
        3 => {
            let uvu = u.mul(&v)?.mul(&u)?;
            let vuv = v.mul(&u)?.mul(&v)?;
            uvu.mul(&vuv.inverse())
        }
        _ => Err(Error::BadDegree(degree)),
    }
}

/// One relator per factor; projective mode appends `g1 g2 … gd`.
pub fn presentation_from_factorization(f: &BraidFactorization, mode: Mode) -> Result<GroupPresentation> {
    let report = f.validate();
    if !report.pass {
        let reasons: Vec<String> = report.failures().map(|c| format!("{}: {}", c.name, c.detail)).collect();
        return Err(Error::InvalidFactorization(reasons.join("; ")));
    }
    let d = f.strands();
    let mut relations = f
        .factors()
        .iter()
        .map(|x| factor_relation(d, &x.conj, x.degree))
        .collect::<Result<Vec<_>>>()?;
    if mode == Mode::Projective {
        relations.push(FreeWord::boundary(d));
    }
    GroupPresentation::new(d, relations)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct TietzeBudget {
    pub max_passes: usize,
    pub growth_factor: usize,
}

impl Default for TietzeBudget {
    fn default() -> Self {
        TietzeBudget { max_passes: 100, growth_factor: 4 }
    }
}

fn tidy_relations(relations: &[FreeWord]) -> Vec<FreeWord> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for r in relations {
        let r = r.free_reduce();
        if r.is_empty() {
            continue;
        }
        if seen.insert(r.letters().to_vec()) {
            out.push(r);
        }
    }
    out
}

/// Looks for a relator in which generator `g` occurs exactly once, and
/// returns the word it equals.
fn solve_for(relations: &[FreeWord], g: i32) -> Option<(usize, FreeWord)> {
    for (idx, r) in relations.iter().enumerate() {
        let hits: Vec<usize> = (0..r.len()).filter(|&k| r.letters()[k].abs() == g).collect();
        if hits.len() != 1 {
            continue;
        }
        let k = hits[0];
        let rank = r.rank();
        let a = FreeWord::from_unchecked(rank, r.letters()[..k].to_vec());
        let b = FreeWord::from_unchecked(rank, r.letters()[k + 1..].to_vec());
        // a x b = 1 gives x = a⁻¹ b⁻¹; a x⁻¹ b = 1 gives x = b a
        let value = if r.letters()[k] > 0 {
            a.inverse().mul(&b.inverse()).ok()?
        } else {
            b.mul(&a).ok()?
        };
        return Some((idx, value));
    }
    None
}

/// Removes trivial and duplicate relators and eliminates generators that a
/// relator expresses in terms of the others. Every step is a Tietze
/// transformation, so the group is unchanged.
pub fn tietze_simplify(p: &GroupPresentation, budget: TietzeBudget) -> GroupPresentation {
    let limit = p.total_length().max(1) * budget.growth_factor.max(1);
    let mut rank = p.generator_count;
    let mut relations = tidy_relations(&p.relations);
    for _ in 0..budget.max_passes {
        let mut progressed = false;
        for g in (1..=rank as i32).rev() {
            let Some((idx, value)) = solve_for(&relations, g) else { continue };
            let candidate = eliminate(&relations, idx, g, &value, rank);
            if candidate.iter().map(FreeWord::len).sum::<usize>() > limit {
                continue;
            }
            relations = tidy_relations(&candidate);
            rank -= 1;
            progressed = true;
            break;
        }
        if !progressed {
            break;
        }
    }
    GroupPresentation { generator_count: rank, relations }
}

fn eliminate(relations: &[FreeWord], idx: usize, g: i32, value: &FreeWord, rank: usize) -> Vec<FreeWord> {
    let new_rank = rank - 1;
    let renumber = |x: i32| -> i32 {
        let s = x.signum();
        let a = x.abs();
        s * if a > g { a - 1 } else { a }
    };
    let value_letters: Vec<i32> = value.letters().iter().map(|&x| renumber(x)).collect();
    let value_inv: Vec<i32> = value_letters.iter().rev().map(|x| -x).collect();
    relations
        .iter()
        .enumerate()
        .filter(|&(k, _)| k != idx)
        .map(|(_, r)| {
            let mut out = Vec::with_capacity(r.len());
            for &x in r.letters() {
                if x == g {
                    out.extend_from_slice(&value_letters);
                } else if x == -g {
                    out.extend_from_slice(&value_inv);
                } else {
                    out.push(renumber(x));
                }
            }
            FreeWord::from_unchecked(new_rank, out).free_reduce()
        })
        .collect()
}

/// `ℤ^free_rank ⊕ ℤ/t_1 ⊕ … ⊕ ℤ/t_k` with `t_1 | t_2 | …`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AbelianInvariants {
    pub free_rank: usize,
    pub torsion: Vec<BigInt>,
}

impl AbelianInvariants {
    pub fn is_trivial(&self) -> bool {
        self.free_rank == 0 && self.torsion.is_empty()
    }

    /// Torsion coefficients as machine integers, when they fit.
    pub fn torsion_u64(&self) -> Option<Vec<u64>> {
        self.torsion.iter().map(ToPrimitive::to_u64).collect()
    }
}

impl Serialize for AbelianInvariants {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let torsion: Vec<serde_json::Value> = self
            .torsion
            .iter()
            .map(|t| match t.to_u64() {
                Some(x) => serde_json::Value::from(x),
                None => serde_json::Value::from(t.to_string()),
            })
            .collect();
        let mut st = serializer.serialize_struct("AbelianInvariants", 2)?;
        st.serialize_field("free_rank", &self.free_rank)?;
        st.serialize_field("torsion", &torsion)?;
        st.end()
    }
}

impl fmt::Display for AbelianInvariants {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        match self.free_rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join(" + "))
        }
    }
}

pub fn abelianization(p: &GroupPresentation) -> AbelianInvariants {
    let factors = snf::invariant_factors_i64(&p.relation_matrix());
    let rank = factors.iter().filter(|x| !x.is_zero()).count();
    AbelianInvariants {
        free_rank: p.generator_count - rank,
        torsion: factors.into_iter().filter(|x| !snf::is_unit(x)).collect(),
    }
}
