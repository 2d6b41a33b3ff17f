//! Conflict placement games.
//!
//! A move is available until some move in its conflict set has been played;
//! every move is in its own conflict set. Such a game has the same literal
//! form as the digraph whose vertices are the moves, with an arc `u -> v`
//! whenever `u` is in the conflict set of `v`.

mod adapters;

use std::collections::{BTreeMap, BTreeSet, HashMap};

use serde::{Deserialize, Deserializer, Serialize, Serializer};
use thiserror::Error;

use crate::digraph::{Color, DigraphGame, VertexSet};
use crate::value::{make_game, Game, Player};

pub use adapters::{
    parse_position, to_conflict, DomineeringPosition, Eligible, GraphPosition, GraphVertex, PosetColor,
    PosetElement, PosetPosition, Ruleset, RulesetPosition,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum ConflictError {
    #[error("invalid conflict spec: {0}")]
    InvalidSpec(String),
    #[error("invalid position: {0}")]
    InvalidPosition(String),
}

fn ser_player<S: Serializer>(p: &Player, s: S) -> Result<S::Ok, S::Error> {
    s.serialize_str(match p {
        Player::Left => "L",
        Player::Right => "R",
    })
}

fn de_player<'de, D: Deserializer<'de>>(d: D) -> Result<Player, D::Error> {
    match String::deserialize(d)?.as_str() {
        "L" => Ok(Player::Left),
        "R" => Ok(Player::Right),
        other => Err(serde::de::Error::custom(format!("player must be \"L\" or \"R\", got {other:?}"))),
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct MoveDecl {
    pub id: String,
    #[serde(serialize_with = "ser_player", deserialize_with = "de_player")]
    pub player: Player,
}

/// Moves, their owners, and for each move the set of moves that block it.
///
/// A move with no entry in `conflicts` conflicts only with itself; a
/// missing self-entry is implied.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConflictSpec {
    pub moves: Vec<MoveDecl>,
    #[serde(default)]
    pub conflicts: BTreeMap<String, BTreeSet<String>>,
}

impl ConflictSpec {
    pub fn new() -> ConflictSpec {
        ConflictSpec::default()
    }

    pub fn add_move(&mut self, id: impl Into<String>, player: Player) {
        self.moves.push(MoveDecl { id: id.into(), player });
    }

    /// Records that playing `blocker` makes `blocked` unavailable.
    pub fn add_conflict(&mut self, blocked: &str, blocker: &str) {
        self.conflicts.entry(blocked.to_string()).or_default().insert(blocker.to_string());
    }

    /// Makes `a` and `b` block each other.
    pub fn add_mutual(&mut self, a: &str, b: &str) {
        self.add_conflict(a, b);
        self.add_conflict(b, a);
    }

    pub fn from_json(text: &str) -> Result<ConflictSpec, ConflictError> {
        let spec: ConflictSpec =
            serde_json::from_str(text).map_err(|e| ConflictError::InvalidSpec(e.to_string()))?;
        spec.validate()?;
        Ok(spec)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("conflict spec serializes")
    }

    pub fn validate(&self) -> Result<(), ConflictError> {
        self.indexed().map(|_| ())
    }

    /// Conflict sets by move index, each including the move itself.
    fn indexed(&self) -> Result<Vec<BTreeSet<usize>>, ConflictError> {
        let mut index = HashMap::new();
        for (i, m) in self.moves.iter().enumerate() {
            if index.insert(m.id.as_str(), i).is_some() {
                return Err(ConflictError::InvalidSpec(format!("duplicate move {:?}", m.id)));
            }
        }
        let lookup = |id: &str| {
            index
                .get(id)
                .copied()
                .ok_or_else(|| ConflictError::InvalidSpec(format!("undeclared move {id:?}")))
        };
        let mut sets: Vec<BTreeSet<usize>> = (0..self.moves.len()).map(|i| BTreeSet::from([i])).collect();
        for (blocked, blockers) in &self.conflicts {
            let v = lookup(blocked)?;
            for b in blockers {
                sets[v].insert(lookup(b)?);
            }
        }
        Ok(sets)
    }

    pub fn len(&self) -> usize {
        self.moves.len()
    }

    pub fn is_empty(&self) -> bool {
        self.moves.is_empty()
    }
}

/// The digraph with one vertex per move (in declaration order, labelled by
/// move id), blue for Left's moves, and an arc `u -> v` for every `u` in the
/// conflict set of `v` other than `v` itself.
pub fn compile(spec: &ConflictSpec) -> Result<DigraphGame, ConflictError> {
    let sets = spec.indexed()?;
    let mut g = DigraphGame::new();
    for m in &spec.moves {
        g.add_vertex(m.id.clone(), Color::of(m.player)).expect("ids are unique");
    }
    for (v, set) in sets.iter().enumerate() {
        for &u in set {
            if u != v {
                g.add_arc(u, v).expect("each pair is visited once");
            }
        }
    }
    Ok(g)
}

/// Literal form by direct play: a move is available while none of its
/// conflict set has been played.
pub fn interpret(spec: &ConflictSpec) -> Result<Game, ConflictError> {
    let sets = spec.indexed()?;
    let owners: Vec<Player> = spec.moves.iter().map(|m| m.player).collect();
    let mut memo = HashMap::new();
    let mut played = vec![false; owners.len()];
    Ok(play(&sets, &owners, &mut played, &mut memo))
}

fn play(
    sets: &[BTreeSet<usize>],
    owners: &[Player],
    played: &mut [bool],
    memo: &mut HashMap<VertexSet, Game>,
) -> Game {
    let available: VertexSet = (0..owners.len())
        .filter(|&y| sets[y].iter().all(|&x| !played[x]))
        .collect();
    if let Some(&g) = memo.get(&available) {
        return g;
    }
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for y in available.iter() {
        played[y] = true;
        let option = play(sets, owners, played, memo);
        played[y] = false;
        match owners[y] {
            Player::Left => lefts.push(option),
            Player::Right => rights.push(option),
        }
    }
    let g = make_game(lefts, rights);
    memo.insert(available, g);
    g
}

#[cfg(test)]
mod tests;
