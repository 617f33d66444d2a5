//! JSON file formats for factorizations, representations and linear systems.
//!
//! Field order in the record types is the serialization order.

use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{BraidFactorization, Factor};
use crate::induction::LinearSystemData;
use crate::monodromy::MonodromyRep;

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorRecord {
    pub conj: Vec<i32>,
    pub deg: i32,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FactorizationRecord {
    pub d: usize,
    #[serde(default)]
    pub allow_negative_cusps: bool,
    pub factors: Vec<FactorRecord>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ThetaRecord {
    pub d: usize,
    pub n: usize,
    pub images: Vec<[usize; 2]>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LinearSystemRecord {
    pub n: usize,
    pub theta1: ThetaRecord,
    pub rhos: Vec<FactorizationRecord>,
}

impl From<&BraidFactorization> for FactorizationRecord {
    fn from(f: &BraidFactorization) -> Self {
        FactorizationRecord {
            d: f.strands(),
            allow_negative_cusps: f.allow_negative_cusps(),
            factors: f.factors().iter().map(|x| FactorRecord { conj: x.conj.letters().to_vec(), deg: x.degree }).collect(),
        }
    }
}

impl TryFrom<&FactorizationRecord> for BraidFactorization {
    type Error = Error;

    fn try_from(r: &FactorizationRecord) -> Result<Self> {
        let factors = r
            .factors
            .iter()
            .map(|x| Ok(Factor::new(BraidWord::new(r.d, x.conj.clone())?, x.deg)))
            .collect::<Result<Vec<_>>>()?;
        BraidFactorization::with_flags(r.d, r.allow_negative_cusps, factors)
    }
}

impl From<&MonodromyRep> for ThetaRecord {
    fn from(t: &MonodromyRep) -> Self {
        ThetaRecord {
            d: t.generator_count(),
            n: t.sheets(),
            images: t.pairs().into_iter().map(|(a, b)| [a, b]).collect(),
        }
    }
}

impl TryFrom<&ThetaRecord> for MonodromyRep {
    type Error = Error;

    fn try_from(r: &ThetaRecord) -> Result<Self> {
        if r.images.len() != r.d {
            return Err(Error::InvalidRep(format!("d = {} but {} images given", r.d, r.images.len())));
        }
        let pairs: Vec<(usize, usize)> = r.images.iter().map(|p| (p[0], p[1])).collect();
        MonodromyRep::from_pairs(r.n, &pairs)
    }
}

impl From<&LinearSystemData> for LinearSystemRecord {
    fn from(l: &LinearSystemData) -> Self {
        LinearSystemRecord {
            n: l.half_dimension,
            theta1: (&l.theta1).into(),
            rhos: l.rhos.iter().map(Into::into).collect(),
        }
    }
}

impl TryFrom<&LinearSystemRecord> for LinearSystemData {
    type Error = Error;

    fn try_from(r: &LinearSystemRecord) -> Result<Self> {
        Ok(LinearSystemData {
            half_dimension: r.n,
            theta1: (&r.theta1).try_into()?,
            rhos: r.rhos.iter().map(TryInto::try_into).collect::<Result<_>>()?,
        })
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Json(e.to_string()))
}

/// Pretty JSON with a trailing newline.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("plain data serializes");
    s.push('\n');
    s
}

pub fn factorization_from_json(text: &str) -> Result<BraidFactorization> {
    (&parse_json::<FactorizationRecord>(text)?).try_into()
}

pub fn factorization_to_json(f: &BraidFactorization) -> String {
    to_json(&FactorizationRecord::from(f))
}

pub fn theta_from_json(text: &str) -> Result<MonodromyRep> {
    (&parse_json::<ThetaRecord>(text)?).try_into()
}

pub fn theta_to_json(t: &MonodromyRep) -> String {
    to_json(&ThetaRecord::from(t))
}

pub fn linear_system_from_json(text: &str) -> Result<LinearSystemData> {
    (&parse_json::<LinearSystemRecord>(text)?).try_into()
}

pub fn linear_system_to_json(l: &LinearSystemData) -> String {
    to_json(&LinearSystemRecord::from(l))
}
