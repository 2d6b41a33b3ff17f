//! Classic rulesets expressed as conflict placement games.
//!
//! Position files (JSON):
//!
//! * poset: `{"elements": [{"id": "a", "color": "green"}, ...], "covers": [["a", "b"], ...]}`
//!   where `["a", "b"]` means `a < b`. Blue elements are Left's, red Right's,
//!   green both players'. Playing `x` removes every `y >= x`.
//! * domineering: `{"rows": ["..", ".#"]}` with `#` for holes. Left places
//!   vertical dominoes, Right horizontal ones.
//! * nodekayles, col: `{"vertices": [{"id": "v1", "eligible": "both"}, ...], "edges": [["v1", "v2"], ...]}`
//!   with `eligible` one of `"L"`, `"R"`, `"both"` (default `"both"`).
//!
//! Move ids are `"<element>:L"` / `"<element>:R"`, and `"r<row>c<col>:V"` /
//! `"r<row>c<col>:H"` for a domino whose top-left cell is at that row and column.

use std::collections::{HashMap, HashSet};
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{ConflictError, ConflictSpec};
use crate::value::Player;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum PosetColor {
    Blue,
    Red,
    Green,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetElement {
    pub id: String,
    pub color: PosetColor,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PosetPosition {
    pub elements: Vec<PosetElement>,
    /// Pairs `[a, b]` with `a < b`; the order is their reflexive transitive closure.
    #[serde(default)]
    pub covers: Vec<[String; 2]>,
}

impl PosetPosition {
    /// A chain of `n` green elements: a Nim heap of size `n`.
    pub fn nim_heap(n: usize) -> PosetPosition {
        PosetPosition {
            elements: (1..=n)
                .map(|i| PosetElement { id: format!("e{i}"), color: PosetColor::Green })
                .collect(),
            covers: (1..n).map(|i| [format!("e{i}"), format!("e{}", i + 1)]).collect(),
        }
    }

    /// `n` pairwise incomparable green elements.
    pub fn antichain(n: usize) -> PosetPosition {
        PosetPosition {
            elements: (1..=n)
                .map(|i| PosetElement { id: format!("e{i}"), color: PosetColor::Green })
                .collect(),
            covers: Vec::new(),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DomineeringPosition {
    pub rows: Vec<String>,
}

impl DomineeringPosition {
    /// An empty board `width` columns wide and `height` rows tall.
    pub fn empty(width: usize, height: usize) -> DomineeringPosition {
        DomineeringPosition { rows: vec![".".repeat(width); height] }
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub enum Eligible {
    #[serde(rename = "L")]
    Left,
    #[serde(rename = "R")]
    Right,
    #[default]
    #[serde(rename = "both")]
    Both,
}

impl Eligible {
    fn players(self) -> &'static [Player] {
        match self {
            Eligible::Left => &[Player::Left],
            Eligible::Right => &[Player::Right],
            Eligible::Both => &[Player::Left, Player::Right],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphVertex {
    pub id: String,
    #[serde(default)]
    pub eligible: Eligible,
}

/// A simple undirected graph with per-vertex eligibility.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphPosition {
    pub vertices: Vec<GraphVertex>,
    #[serde(default)]
    pub edges: Vec<[String; 2]>,
}

impl GraphPosition {
    /// The path `v1 - v2 - ... - vn`, every vertex open to both players.
    pub fn path(n: usize) -> GraphPosition {
        GraphPosition {
            vertices: (1..=n)
                .map(|i| GraphVertex { id: format!("v{i}"), eligible: Eligible::Both })
                .collect(),
            edges: (1..n).map(|i| [format!("v{i}"), format!("v{}", i + 1)]).collect(),
        }
    }

    /// Checks for unknown vertices, loops and repeated edges; returns the
    /// vertex ids and the adjacency lists by index.
    fn adjacency(&self) -> Result<Vec<Vec<usize>>, ConflictError> {
        let invalid = ConflictError::InvalidPosition;
        let mut index = HashMap::new();
        for (i, v) in self.vertices.iter().enumerate() {
            if index.insert(v.id.as_str(), i).is_some() {
                return Err(invalid(format!("duplicate vertex {:?}", v.id)));
            }
        }
        let mut adj = vec![Vec::new(); self.vertices.len()];
        let mut seen = HashSet::new();
        for [a, b] in &self.edges {
            let ia = *index.get(a.as_str()).ok_or_else(|| invalid(format!("unknown vertex {a:?}")))?;
            let ib = *index.get(b.as_str()).ok_or_else(|| invalid(format!("unknown vertex {b:?}")))?;
            if ia == ib {
                return Err(invalid(format!("loop at {a:?}")));
            }
            if !seen.insert((ia.min(ib), ia.max(ib))) {
                return Err(invalid(format!("repeated edge {a:?} - {b:?}")));
            }
            adj[ia].push(ib);
            adj[ib].push(ia);
        }
        Ok(adj)
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Ruleset {
    Poset,
    Domineering,
    NodeKayles,
    Col,
}

impl FromStr for Ruleset {
    type Err = ConflictError;

    fn from_str(s: &str) -> Result<Ruleset, ConflictError> {
        match s {
            "poset" => Ok(Ruleset::Poset),
            "domineering" => Ok(Ruleset::Domineering),
            "nodekayles" => Ok(Ruleset::NodeKayles),
            "col" => Ok(Ruleset::Col),
            other => Err(ConflictError::InvalidPosition(format!("unknown ruleset {other:?}"))),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RulesetPosition {
    Poset(PosetPosition),
    Domineering(DomineeringPosition),
    NodeKayles(GraphPosition),
    Col(GraphPosition),
}

/// Reads a position file for `ruleset`.
pub fn parse_position(ruleset: Ruleset, text: &str) -> Result<RulesetPosition, ConflictError> {
    fn de<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T, ConflictError> {
        serde_json::from_str(text).map_err(|e| ConflictError::InvalidPosition(e.to_string()))
    }
    Ok(match ruleset {
        Ruleset::Poset => RulesetPosition::Poset(de(text)?),
        Ruleset::Domineering => RulesetPosition::Domineering(de(text)?),
        Ruleset::NodeKayles => RulesetPosition::NodeKayles(de(text)?),
        Ruleset::Col => RulesetPosition::Col(de(text)?),
    })
}

fn move_id(element: &str, player: Player) -> String {
    match player {
        Player::Left => format!("{element}:L"),
        Player::Right => format!("{element}:R"),
    }
}

pub fn to_conflict(position: &RulesetPosition) -> Result<ConflictSpec, ConflictError> {
    match position {
        RulesetPosition::Poset(p) => poset(p),
        RulesetPosition::Domineering(d) => domineering(d),
        RulesetPosition::NodeKayles(g) => node_kayles(g),
        RulesetPosition::Col(g) => col(g),
    }
}

/// `below[y]` lists every `x <= y`.
fn down_sets(p: &PosetPosition) -> Result<Vec<Vec<usize>>, ConflictError> {
    let invalid = ConflictError::InvalidPosition;
    let n = p.elements.len();
    let mut index = HashMap::new();
    for (i, e) in p.elements.iter().enumerate() {
        if index.insert(e.id.as_str(), i).is_some() {
            return Err(invalid(format!("duplicate element {:?}", e.id)));
        }
    }
    let mut le = vec![vec![false; n]; n];
    for (i, row) in le.iter_mut().enumerate() {
        row[i] = true;
    }
    for [a, b] in &p.covers {
        let ia = *index.get(a.as_str()).ok_or_else(|| invalid(format!("unknown element {a:?}")))?;
        let ib = *index.get(b.as_str()).ok_or_else(|| invalid(format!("unknown element {b:?}")))?;
        le[ia][ib] = true;
    }
    for k in 0..n {
        for i in 0..n {
            if le[i][k] {
                for j in 0..n {
                    if le[k][j] {
                        le[i][j] = true;
                    }
                }
            }
        }
    }
    for i in 0..n {
        for j in i + 1..n {
            if le[i][j] && le[j][i] {
                return Err(invalid(format!(
                    "order has a cycle through {:?} and {:?}",
                    p.elements[i].id, p.elements[j].id
                )));
            }
        }
    }
    Ok((0..n).map(|y| (0..n).filter(|&x| le[x][y]).collect()).collect())
}

fn poset(p: &PosetPosition) -> Result<ConflictSpec, ConflictError> {
    let below = down_sets(p)?;
    let players = |c: PosetColor| -> &'static [Player] {
        match c {
            PosetColor::Blue => &[Player::Left],
            PosetColor::Red => &[Player::Right],
            PosetColor::Green => &[Player::Left, Player::Right],
        }
    };
    let mut spec = ConflictSpec::new();
    for e in &p.elements {
        for &pl in players(e.color) {
            spec.add_move(move_id(&e.id, pl), pl);
        }
    }
    for (y, e) in p.elements.iter().enumerate() {
        for &py in players(e.color) {
            let blocked = move_id(&e.id, py);
            for &x in &below[y] {
                let ex = &p.elements[x];
                for &px in players(ex.color) {
                    spec.add_conflict(&blocked, &move_id(&ex.id, px));
                }
            }
        }
    }
    Ok(spec)
}

fn domineering(d: &DomineeringPosition) -> Result<ConflictSpec, ConflictError> {
    let grid: Vec<Vec<char>> = d.rows.iter().map(|r| r.chars().collect()).collect();
    let width = grid.first().map_or(0, Vec::len);
    if grid.iter().any(|r| r.len() != width) {
        return Err(ConflictError::InvalidPosition("rows have different lengths".into()));
    }
    if let Some(c) = grid.iter().flatten().find(|&&c| c != '.' && c != '#') {
        return Err(ConflictError::InvalidPosition(format!("unexpected cell {c:?}")));
    }
    let open = |r: usize, c: usize| grid.get(r).and_then(|row| row.get(c)) == Some(&'.');
    // (id, player, cells)
    let mut dominoes: Vec<(String, Player, [(usize, usize); 2])> = Vec::new();
    for r in 0..grid.len() {
        for c in 0..width {
            if open(r, c) && open(r + 1, c) {
                dominoes.push((format!("r{r}c{c}:V"), Player::Left, [(r, c), (r + 1, c)]));
            }
            if open(r, c) && open(r, c + 1) {
                dominoes.push((format!("r{r}c{c}:H"), Player::Right, [(r, c), (r, c + 1)]));
            }
        }
    }
    let mut spec = ConflictSpec::new();
    for (id, pl, _) in &dominoes {
        spec.add_move(id.clone(), *pl);
    }
    for (a, _, ca) in &dominoes {
        for (b, _, cb) in &dominoes {
            if ca.iter().any(|cell| cb.contains(cell)) {
                spec.add_conflict(a, b);
            }
        }
    }
    Ok(spec)
}

fn node_kayles(g: &GraphPosition) -> Result<ConflictSpec, ConflictError> {
    let adj = g.adjacency()?;
    let mut spec = ConflictSpec::new();
    for v in &g.vertices {
        for &pl in v.eligible.players() {
            spec.add_move(move_id(&v.id, pl), pl);
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        for &pv in v.eligible.players() {
            let blocked = move_id(&v.id, pv);
            for u in std::iter::once(i).chain(adj[i].iter().copied()) {
                let vu = &g.vertices[u];
                for &pu in vu.eligible.players() {
                    spec.add_conflict(&blocked, &move_id(&vu.id, pu));
                }
            }
        }
    }
    Ok(spec)
}

fn col(g: &GraphPosition) -> Result<ConflictSpec, ConflictError> {
    let adj = g.adjacency()?;
    let mut spec = ConflictSpec::new();
    for v in &g.vertices {
        for &pl in v.eligible.players() {
            spec.add_move(move_id(&v.id, pl), pl);
        }
    }
    for (i, v) in g.vertices.iter().enumerate() {
        for &pv in v.eligible.players() {
            let blocked = move_id(&v.id, pv);
            for &pu in v.eligible.players() {
                spec.add_conflict(&blocked, &move_id(&v.id, pu));
            }
            for &u in &adj[i] {
                let vu = &g.vertices[u];
                if vu.eligible.players().contains(&pv) {
                    spec.add_conflict(&blocked, &move_id(&vu.id, pv));
                }
            }
        }
    }
    Ok(spec)
}
