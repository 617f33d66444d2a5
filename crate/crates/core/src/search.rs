//! Bounded search for m-equivalence between two factorizations.

use std::collections::HashMap;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::braid::BraidWord;
use crate::error::{Error, Result};
use crate::factorization::{BraidFactorization, Direction, Factor};
use crate::garside::NormalForm;
use crate::monodromy::MonodromyRep;

pub const DEFAULT_MAX_NODES: usize = 100_000;
pub const DEFAULT_MAX_DEPTH: usize = 12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Budget {
    pub max_nodes: usize,
    pub max_depth: usize,
}

impl Default for Budget {
    fn default() -> Self {
        Budget { max_nodes: DEFAULT_MAX_NODES, max_depth: DEFAULT_MAX_DEPTH }
    }
}

impl Budget {
    pub fn new(max_nodes: usize, max_depth: usize) -> Result<Self> {
        let budget = Budget { max_nodes, max_depth };
        budget.check()?;
        Ok(budget)
    }

    fn check(&self) -> Result<()> {
        if self.max_nodes == 0 {
            return Err(Error::Budget("max_nodes must be positive".into()));
        }
        Ok(())
    }
}

/// One step of an m-equivalence script. Positions are 0-based.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "move", rename_all = "lowercase")]
pub enum Move {
    Hurwitz { index: usize, direction: Direction },
    /// Global conjugation by the single generator `σ_|letter|^sign`.
    Conjugate { letter: i32 },
    Cancel { index: usize },
    Create { index: usize, conj: Vec<i32> },
}

impl Move {
    fn inverse_invertible(&self) -> Move {
        match self {
            Move::Hurwitz { index, direction } => Move::Hurwitz {
                index: *index,
                direction: match direction {
                    Direction::Forward => Direction::Backward,
                    Direction::Backward => Direction::Forward,
                },
            },
            Move::Conjugate { letter } => Move::Conjugate { letter: -letter },
            _ => unreachable!("backward search only uses invertible moves"),
        }
    }
}

impl fmt::Display for Move {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Move::Hurwitz { index, direction } => {
                let dir = if *direction == Direction::Forward { "forward" } else { "backward" };
                write!(f, "hurwitz {index} {dir}")
            }
            Move::Conjugate { letter } => write!(f, "conjugate {}", crate::text::format_letters(&[*letter], 's')),
            Move::Cancel { index } => write!(f, "cancel {index}"),
            Move::Create { index, conj } => write!(f, "create {index} {}", crate::text::format_letters(conj, 's')),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum SearchOutcome {
    Equivalent(Vec<Move>),
    Unknown { explored: usize },
}

impl SearchOutcome {
    pub fn is_equivalent(&self) -> bool {
        matches!(self, SearchOutcome::Equivalent(_))
    }
}

/// A factorization paired with the representation that travels with it.
#[derive(Clone, Debug)]
pub struct State {
    pub factorization: BraidFactorization,
    pub theta: Option<MonodromyRep>,
}

/// Applies a single move. Conjugation replaces `θ` by its companion so that
/// compatibility is carried along.
pub fn apply_move(state: &State, mv: &Move) -> Result<State> {
    let f = &state.factorization;
    match mv {
        Move::Hurwitz { index, direction } => Ok(State {
            factorization: f.hurwitz_move(*index, *direction)?,
            theta: state.theta.clone(),
        }),
        Move::Conjugate { letter } => {
            let q = BraidWord::generator(f.strands(), *letter)?;
            let theta = match &state.theta {
                Some(t) => Some(t.conjugation_companion(&q)?),
                None => None,
            };
            Ok(State { factorization: f.global_conjugate(&q)?, theta })
        }
        Move::Cancel { index } => Ok(State { factorization: f.cancel_pair(*index)?, theta: state.theta.clone() }),
        Move::Create { index, conj } => {
            let theta = state
                .theta
                .as_ref()
                .ok_or_else(|| Error::Precondition("pair creation needs a monodromy representation".into()))?;
            let q = BraidWord::new(f.strands(), conj.clone())?;
            Ok(State { factorization: f.create_pair(*index, &q, theta)?, theta: state.theta.clone() })
        }
    }
}

/// Replays a script from `f`; returns the final factorization.
pub fn replay(f: &BraidFactorization, theta: Option<&MonodromyRep>, script: &[Move]) -> Result<BraidFactorization> {
    let mut state = State { factorization: f.clone(), theta: theta.cloned() };
    for mv in script {
        state = apply_move(&state, mv)?;
    }
    Ok(state.factorization)
}

pub type FactorKey = Vec<(NormalForm, i32)>;

/// Canonical forms of the underlying braids together with the degrees.
pub fn factor_key(f: &BraidFactorization) -> Result<FactorKey> {
    f.factors().iter().map(|x| Ok((x.underlying_braid()?.normal_form(), x.degree))).collect()
}

type ThetaKey = Option<Vec<Vec<usize>>>;

fn theta_key(theta: &Option<MonodromyRep>) -> ThetaKey {
    theta.as_ref().map(|t| t.images().iter().map(|p| p.images().to_vec()).collect())
}

struct Node {
    state: State,
    key: FactorKey,
    parent: Option<(usize, Move)>,
}

struct Side {
    nodes: Vec<Node>,
    seen: HashMap<(FactorKey, ThetaKey), usize>,
    by_factors: HashMap<FactorKey, usize>,
    frontier: Vec<usize>,
    depth: usize,
    full: bool,
}

impl Side {
    fn new(state: State, key: FactorKey, full: bool) -> Self {
        let mut side = Side {
            nodes: Vec::new(),
            seen: HashMap::new(),
            by_factors: HashMap::new(),
            frontier: Vec::new(),
            depth: 0,
            full,
        };
        side.insert(state, key, None);
        side
    }

    fn insert(&mut self, state: State, key: FactorKey, parent: Option<(usize, Move)>) -> Option<usize> {
        let full_key = (key.clone(), theta_key(&state.theta));
        if self.seen.contains_key(&full_key) {
            return None;
        }
        let id = self.nodes.len();
        self.nodes.push(Node { state, key: key.clone(), parent });
        self.seen.insert(full_key, id);
        self.by_factors.entry(key).or_insert(id);
        self.frontier.push(id);
        Some(id)
    }

    fn path(&self, mut id: usize) -> Vec<Move> {
        let mut moves = Vec::new();
        while let Some((parent, mv)) = &self.nodes[id].parent {
            moves.push(mv.clone());
            id = *parent;
        }
        moves.reverse();
        moves
    }
}

fn candidate_moves(state: &State, full: bool) -> Vec<Move> {
    let f = &state.factorization;
    let d = f.strands() as i32;
    let mut moves = Vec::new();
    for index in 0..f.len().saturating_sub(1) {
        for direction in [Direction::Forward, Direction::Backward] {
            moves.push(Move::Hurwitz { index, direction });
        }
    }
    for letter in 1..d {
        moves.push(Move::Conjugate { letter });
        moves.push(Move::Conjugate { letter: -letter });
    }
    if full {
        for index in 0..f.len().saturating_sub(1) {
            let (a, b) = (&f.factors()[index], &f.factors()[index + 1]);
            if a.degree == -b.degree && a.degree.abs() == 2 {
                moves.push(Move::Cancel { index });
            }
        }
        if state.theta.is_some() {
            let mut conjs = vec![vec![]];
            for letter in 1..d {
                conjs.push(vec![letter]);
                conjs.push(vec![-letter]);
            }
            for index in 0..=f.len() {
                for conj in &conjs {
                    moves.push(Move::Create { index, conj: conj.clone() });
                }
            }
        }
    }
    moves
}

/// Replaces the conjugators touched by `mv` with their canonical words.
fn tidy(state: State, mv: &Move) -> State {
    let touched = match mv {
        Move::Hurwitz { index, direction: Direction::Forward } => index + 1..index + 2,
        Move::Hurwitz { index, direction: Direction::Backward } => *index..index + 1,
        Move::Conjugate { .. } => 0..state.factorization.len(),
        Move::Cancel { .. } | Move::Create { .. } => 0..0,
    };
    if touched.is_empty() {
        return state;
    }
    let mut factors: Vec<Factor> = state.factorization.factors().to_vec();
    for f in &mut factors[touched] {
        f.conj = f.conj.canonical_form();
    }
    let factorization = state.factorization.with_factors(factors).unwrap_or(state.factorization);
    State { factorization, theta: state.theta }
}

fn nf_of(f: &BraidFactorization, i: usize) -> Option<(NormalForm, i32)> {
    let x = &f.factors()[i];
    Some((x.underlying_braid().ok()?.normal_form(), x.degree))
}

/// Key of the state reached by `mv`, reusing the unchanged entries of `key`.
fn successor_key(key: &FactorKey, next: &BraidFactorization, mv: &Move) -> Option<FactorKey> {
    let mut out = key.clone();
    match mv {
        Move::Hurwitz { index, direction } => {
            let i = *index;
            match direction {
                Direction::Forward => {
                    out[i] = key[i + 1].clone();
                    out[i + 1] = nf_of(next, i + 1)?;
                }
                Direction::Backward => {
                    out[i] = nf_of(next, i)?;
                    out[i + 1] = key[i].clone();
                }
            }
        }
        Move::Conjugate { letter } => {
            for (slot, (nf, _)) in out.iter_mut().zip(key) {
                let mut letters = Vec::with_capacity(nf.canonical_length() * 8 + 2);
                letters.push(-letter);
                letters.extend(nf.to_letters());
                letters.push(*letter);
                slot.0 = NormalForm::from_letters(next.strands(), &letters);
            }
        }
        Move::Cancel { index } => {
            out.drain(*index..*index + 2);
        }
        Move::Create { index, .. } => {
            let a = nf_of(next, *index)?;
            let b = nf_of(next, *index + 1)?;
            out.splice(*index..*index, [a, b]);
        }
    }
    Some(out)
}

fn successors(state: &State, key: &FactorKey, full: bool) -> Vec<(Move, State, FactorKey)> {
    candidate_moves(state, full)
        .into_iter()
        .filter_map(|mv| {
            let next = tidy(apply_move(state, &mv).ok()?, &mv);
            let key = successor_key(key, &next.factorization, &mv)?;
            Some((mv, next, key))
        })
        .collect()
}

/// Bounded bidirectional breadth-first search for a move script taking `f` to
/// `g`. A found script replays from `f` to a factorization whose factor key
/// equals that of `g`. Exhausting the budget gives `Unknown`, which says
/// nothing about inequivalence.
pub fn equivalence_search(
    f: &BraidFactorization,
    g: &BraidFactorization,
    theta: Option<&MonodromyRep>,
    budget: Budget,
) -> Result<SearchOutcome> {
    budget.check()?;
    if f.strands() != g.strands() {
        return Err(Error::StrandMismatch { left: f.strands(), right: g.strands() });
    }
    if let Some(t) = theta {
        if t.generator_count() != f.strands() {
            return Err(Error::RankMismatch { left: t.generator_count(), right: f.strands() });
        }
    }
    let fk = factor_key(f)?;
    let gk = factor_key(g)?;
    if fk == gk {
        return Ok(SearchOutcome::Equivalent(Vec::new()));
    }
    let mut fwd = Side::new(State { factorization: f.clone(), theta: theta.cloned() }, fk, true);
    let mut bwd = Side::new(State { factorization: g.clone(), theta: None }, gk, false);

    loop {
        let explored = fwd.nodes.len() + bwd.nodes.len();
        if fwd.depth + bwd.depth >= budget.max_depth || explored >= budget.max_nodes {
            return Ok(SearchOutcome::Unknown { explored });
        }
        let fwd_turn = match (fwd.frontier.is_empty(), bwd.frontier.is_empty()) {
            (true, true) => return Ok(SearchOutcome::Unknown { explored }),
            (false, true) => true,
            (true, false) => false,
            _ => fwd.frontier.len() <= bwd.frontier.len(),
        };
        let (side, other) = if fwd_turn { (&mut fwd, &bwd) } else { (&mut bwd, &fwd) };
        let frontier = std::mem::take(&mut side.frontier);
        let full = side.full;
        let expanded: Vec<Vec<(Move, State, FactorKey)>> =
            frontier.par_iter().map(|&id| successors(&side.nodes[id].state, &side.nodes[id].key, full)).collect();
        side.depth += 1;
        for (&parent, children) in frontier.iter().zip(expanded) {
            for (mv, state, key) in children {
                let Some(id) = side.insert(state, key.clone(), Some((parent, mv))) else {
                    continue;
                };
                if let Some(&meet) = other.by_factors.get(&key) {
                    let (fid, bid) = if fwd_turn { (id, meet) } else { (meet, id) };
                    return Ok(SearchOutcome::Equivalent(join(&fwd, fid, &bwd, bid)));
                }
                let explored = side.nodes.len() + other.nodes.len();
                if explored >= budget.max_nodes {
                    return Ok(SearchOutcome::Unknown { explored });
                }
            }
        }
    }
}

fn join(fwd: &Side, fid: usize, bwd: &Side, bid: usize) -> Vec<Move> {
    let mut script = fwd.path(fid);
    script.extend(bwd.path(bid).iter().rev().map(Move::inverse_invertible));
    script
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn self_is_equivalent_with_empty_script() {
        let f = BraidFactorization::smooth_curve(3).unwrap();
        assert_eq!(equivalence_search(&f, &f, None, Budget::default()).unwrap(), SearchOutcome::Equivalent(vec![]));
    }

    #[test]
    fn conic_conjugate_found_quickly() {
        let f = BraidFactorization::smooth_curve(2).unwrap();
        let g = f.global_conjugate(&BraidWord::generator(2, 1).unwrap()).unwrap();
        let out = equivalence_search(&f, &g, None, Budget::new(1000, 2).unwrap()).unwrap();
        let SearchOutcome::Equivalent(script) = out else { panic!("not found") };
        assert!(script.len() <= 2);
        let end = replay(&f, None, &script).unwrap();
        assert_eq!(factor_key(&end).unwrap(), factor_key(&g).unwrap());
    }

    #[test]
    fn zero_budget_is_malformed() {
        let f = BraidFactorization::smooth_curve(2).unwrap();
        assert!(matches!(equivalence_search(&f, &f, None, Budget { max_nodes: 0, max_depth: 3 }), Err(Error::Budget(_))));
    }

    #[test]
    fn move_script_json_round_trip() {
        let script = vec![
            Move::Hurwitz { index: 1, direction: Direction::Backward },
            Move::Conjugate { letter: -2 },
            Move::Cancel { index: 0 },
            Move::Create { index: 3, conj: vec![1, -2] },
        ];
        let text = serde_json::to_string(&script).unwrap();
        assert!(text.contains(r#""move":"hurwitz""#));
        let back: Vec<Move> = serde_json::from_str(&text).unwrap();
        assert_eq!(back, script);
    }
}
