//! Digraph placement positions.
//!
//! A position is a simple digraph with every vertex coloured blue (Left's)
//! or red (Right's). A move deletes a vertex of the mover's colour together
//! with its out-neighbours. Positions reached by deleting vertices are
//! [`Residual`]s: the base graph plus the set of vertices still alive.

mod bits;
mod eval;
pub mod io;

use std::collections::HashMap;
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::value::{Game, Player};

pub use bits::VertexSet;
use eval::evaluate;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Color {
    Blue,
    Red,
}

impl Color {
    pub fn swap(self) -> Color {
        match self {
            Color::Blue => Color::Red,
            Color::Red => Color::Blue,
        }
    }

    /// The player who may delete vertices of this colour.
    pub fn owner(self) -> Player {
        match self {
            Color::Blue => Player::Left,
            Color::Red => Player::Right,
        }
    }

    pub fn of(player: Player) -> Color {
        match player {
            Player::Left => Color::Blue,
            Player::Right => Color::Red,
        }
    }
}

#[derive(Debug, Error, PartialEq, Eq)]
pub enum DigraphError {
    #[error("unknown vertex label {0:?}")]
    UnknownLabel(String),
    #[error("duplicate vertex label {0:?}")]
    DuplicateLabel(String),
    #[error("self-loop on {0:?} (a vertex always deletes itself)")]
    SelfLoopRejected(String),
    #[error("duplicate arc {0:?} -> {1:?}")]
    DuplicateArc(String, String),
    #[error("vertex {0:?} was already deleted earlier in the sequence")]
    IllegalSequence(String),
}

/// A two-coloured simple digraph.
#[derive(Clone, PartialEq, Eq)]
pub struct DigraphGame {
    name: Option<String>,
    labels: Vec<String>,
    colors: Vec<Color>,
    out: Vec<VertexSet>,
    index: HashMap<String, usize>,
}

impl DigraphGame {
    pub fn new() -> DigraphGame {
        DigraphGame {
            name: None,
            labels: Vec::new(),
            colors: Vec::new(),
            out: Vec::new(),
            index: HashMap::new(),
        }
    }

    pub fn named(name: impl Into<String>) -> DigraphGame {
        let mut g = DigraphGame::new();
        g.name = Some(name.into());
        g
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn set_name(&mut self, name: Option<String>) {
        self.name = name;
    }

    pub fn add_vertex(&mut self, label: impl Into<String>, color: Color) -> Result<usize, DigraphError> {
        let label = label.into();
        if self.index.contains_key(&label) {
            return Err(DigraphError::DuplicateLabel(label));
        }
        let v = self.labels.len();
        self.index.insert(label.clone(), v);
        self.labels.push(label);
        self.colors.push(color);
        self.out.push(VertexSet::new());
        Ok(v)
    }

    pub fn add_arc(&mut self, from: usize, to: usize) -> Result<(), DigraphError> {
        if from == to {
            return Err(DigraphError::SelfLoopRejected(self.labels[from].clone()));
        }
        if self.out[from].contains(to) {
            return Err(DigraphError::DuplicateArc(
                self.labels[from].clone(),
                self.labels[to].clone(),
            ));
        }
        self.out[from].insert(to);
        Ok(())
    }

    /// Shorthand for the two opposing arcs `from -> to` and `to -> from`.
    pub fn add_edge(&mut self, a: usize, b: usize) -> Result<(), DigraphError> {
        self.add_arc(a, b)?;
        self.add_arc(b, a)
    }

    pub fn add_arc_by_label(&mut self, from: &str, to: &str) -> Result<(), DigraphError> {
        let (a, b) = (self.vertex(from)?, self.vertex(to)?);
        self.add_arc(a, b)
    }

    pub fn add_edge_by_label(&mut self, a: &str, b: &str) -> Result<(), DigraphError> {
        let (a, b) = (self.vertex(a)?, self.vertex(b)?);
        self.add_edge(a, b)
    }

    /// Inserts the arc if it is missing; self-loops are ignored.
    pub(crate) fn ensure_arc(&mut self, from: usize, to: usize) {
        if from != to {
            self.out[from].insert(to);
        }
    }

    pub fn vertex(&self, label: &str) -> Result<usize, DigraphError> {
        self.index
            .get(label)
            .copied()
            .ok_or_else(|| DigraphError::UnknownLabel(label.to_string()))
    }

    pub fn order(&self) -> usize {
        self.labels.len()
    }

    pub fn is_empty(&self) -> bool {
        self.labels.is_empty()
    }

    pub fn label(&self, v: usize) -> &str {
        &self.labels[v]
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn color(&self, v: usize) -> Color {
        self.colors[v]
    }

    pub fn colors(&self) -> &[Color] {
        &self.colors
    }

    pub fn has_arc(&self, from: usize, to: usize) -> bool {
        self.out[from].contains(to)
    }

    /// Open out-neighbourhood `N+(v)`.
    pub fn out_neighbors(&self, v: usize) -> &VertexSet {
        &self.out[v]
    }

    /// Closed out-neighbourhood `N+[v]`.
    pub fn closed_out(&self, v: usize) -> VertexSet {
        let mut s = self.out[v].clone();
        s.insert(v);
        s
    }

    pub fn arc_count(&self) -> usize {
        self.out.iter().map(VertexSet::len).sum()
    }

    pub fn arcs(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.out.iter().enumerate().flat_map(|(u, s)| s.iter().map(move |v| (u, v)))
    }

    pub fn count_color(&self, color: Color) -> usize {
        self.colors.iter().filter(|&&c| c == color).count()
    }

    pub fn all(&self) -> VertexSet {
        VertexSet::full(self.order())
    }

    /// The starting position (nothing deleted).
    pub fn position(&self) -> Residual<'_> {
        Residual { base: self, alive: self.all() }
    }

    /// Canonical value of the whole graph.
    pub fn value(&self) -> Game {
        self.position().value()
    }

    /// Exact game tree of the whole graph.
    pub fn literal(&self) -> Game {
        self.position().to_literal()
    }

    /// The same digraph with every colour swapped; its value is the negative.
    pub fn negate(&self) -> DigraphGame {
        let mut g = self.clone();
        for c in &mut g.colors {
            *c = c.swap();
        }
        g
    }

    /// Induced subgraph on `keep`, vertices in their original order.
    pub fn induced(&self, keep: &VertexSet) -> DigraphGame {
        let verts: Vec<usize> = keep.iter().filter(|&v| v < self.order()).collect();
        let mut g = DigraphGame::new();
        let mut map = HashMap::new();
        for &v in &verts {
            map.insert(v, g.add_vertex(self.labels[v].clone(), self.colors[v]).unwrap());
        }
        for &u in &verts {
            for v in self.out[u].iter() {
                if let Some(&nv) = map.get(&v) {
                    g.out[map[&u]].insert(nv);
                }
            }
        }
        g
    }

    /// Reorders vertices: vertex `v` of `self` becomes vertex `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> DigraphGame {
        assert_eq!(perm.len(), self.order());
        let mut inverse = vec![0; perm.len()];
        for (v, &p) in perm.iter().enumerate() {
            inverse[p] = v;
        }
        let mut g = DigraphGame::new();
        g.name = self.name.clone();
        for &v in &inverse {
            g.add_vertex(self.labels[v].clone(), self.colors[v]).unwrap();
        }
        for (u, v) in self.arcs() {
            g.out[perm[u]].insert(perm[v]);
        }
        g
    }

    /// Appends a copy of `other`, returning the index of its first vertex.
    /// Labels are prefixed with `prefix`, then suffixed on collision.
    pub fn append(&mut self, other: &DigraphGame, prefix: &str) -> usize {
        let offset = self.order();
        for v in 0..other.order() {
            let base = format!("{prefix}{}", other.labels[v]);
            let label = self.fresh_label(&base);
            self.add_vertex(label, other.colors[v]).unwrap();
        }
        for (u, v) in other.arcs() {
            self.out[offset + u].insert(offset + v);
        }
        offset
    }

    fn fresh_label(&self, base: &str) -> String {
        if !self.index.contains_key(base) {
            return base.to_string();
        }
        (2..)
            .map(|k| format!("{base}_{k}"))
            .find(|l| !self.index.contains_key(l))
            .unwrap()
    }

    /// Disjoint union; colliding labels from `other` get a numeric suffix.
    pub fn disjoint_union(&self, other: &DigraphGame) -> DigraphGame {
        let mut g = self.clone();
        g.append(other, "");
        g.name = match (&self.name, &other.name) {
            (Some(a), Some(b)) => Some(format!("{a} + {b}")),
            _ => None,
        };
        g
    }

    /// Same vertices, colours and arcs in the same order (labels and name ignored).
    pub fn same_structure(&self, other: &DigraphGame) -> bool {
        self.colors == other.colors && self.out == other.out
    }

    /// Undirected adjacency (`u -> v` or `v -> u`) for every vertex.
    pub fn underlying_adjacency(&self) -> Vec<VertexSet> {
        let mut adj = self.out.clone();
        for (u, v) in self.arcs() {
            adj[v].insert(u);
        }
        adj
    }
}

impl Default for DigraphGame {
    fn default() -> Self {
        DigraphGame::new()
    }
}

impl fmt::Debug for DigraphGame {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let verts: Vec<String> = self
            .labels
            .iter()
            .zip(&self.colors)
            .map(|(l, c)| format!("{l}:{}", if *c == Color::Blue { 'B' } else { 'R' }))
            .collect();
        let arcs: Vec<String> = self
            .arcs()
            .map(|(u, v)| format!("{}->{}", self.labels[u], self.labels[v]))
            .collect();
        f.debug_struct("DigraphGame")
            .field("name", &self.name)
            .field("vertices", &verts)
            .field("arcs", &arcs)
            .finish()
    }
}

/// `G/[u_1, ..., u_t]`: a base graph with some vertices deleted.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Residual<'a> {
    base: &'a DigraphGame,
    alive: VertexSet,
}

impl<'a> Residual<'a> {
    pub fn new(base: &'a DigraphGame, alive: VertexSet) -> Residual<'a> {
        let alive = alive.intersection(&base.all());
        Residual { base, alive }
    }

    pub fn base(&self) -> &'a DigraphGame {
        self.base
    }

    pub fn alive(&self) -> &VertexSet {
        &self.alive
    }

    pub fn is_empty(&self) -> bool {
        self.alive.is_empty()
    }

    pub fn len(&self) -> usize {
        self.alive.len()
    }

    pub fn alive_labels(&self) -> Vec<&'a str> {
        self.alive.iter().map(|v| self.base.label(v)).collect()
    }

    /// Deletes `v` and its out-neighbours; `v` may be of either colour.
    pub fn delete(&self, v: usize) -> Result<Residual<'a>, DigraphError> {
        if !self.alive.contains(v) {
            return Err(DigraphError::IllegalSequence(self.base.label(v).to_string()));
        }
        Ok(Residual {
            base: self.base,
            alive: self.alive.difference(&self.base.closed_out(v)),
        })
    }

    pub fn delete_label(&self, label: &str) -> Result<Residual<'a>, DigraphError> {
        self.delete(self.base.vertex(label)?)
    }

    /// Labels of the vertices `player` may delete.
    pub fn moves(&self, player: Player) -> Vec<&'a str> {
        let color = Color::of(player);
        self.alive
            .iter()
            .filter(|&v| self.base.color(v) == color)
            .map(|v| self.base.label(v))
            .collect()
    }

    /// Weakly connected components of the alive induced subgraph.
    pub fn components(&self) -> Vec<Residual<'a>> {
        let adj = self.base.underlying_adjacency();
        let mut rest = self.alive.clone();
        let mut comps = Vec::new();
        while let Some(start) = rest.first_index() {
            let mut comp = VertexSet::from_indices([start]);
            let mut frontier = vec![start];
            while let Some(u) = frontier.pop() {
                for v in adj[u].intersection(&rest).iter() {
                    if !comp.contains(v) {
                        comp.insert(v);
                        frontier.push(v);
                    }
                }
            }
            rest = rest.difference(&comp);
            comps.push(Residual { base: self.base, alive: comp });
        }
        comps
    }

    /// Exact literal form of the position (no simplification).
    pub fn to_literal(&self) -> Game {
        evaluate(self.base, &self.alive, false)
    }

    /// Canonical value, computed component by component.
    pub fn value(&self) -> Game {
        evaluate(self.base, &self.alive, true)
    }

    /// The residual as a standalone digraph.
    pub fn to_digraph(&self) -> DigraphGame {
        self.base.induced(&self.alive)
    }
}

/// `G/[u_1, ..., u_t]` for a sequence of vertex labels. Each vertex must still
/// be present when its turn in the sequence comes; colours are not checked.
pub fn residual<'a, S: AsRef<str>>(g: &'a DigraphGame, seq: &[S]) -> Result<Residual<'a>, DigraphError> {
    let mut r = g.position();
    for label in seq {
        r = r.delete_label(label.as_ref())?;
    }
    Ok(r)
}

pub fn negate_digraph(g: &DigraphGame) -> DigraphGame {
    g.negate()
}

pub fn disjoint_union(g: &DigraphGame, h: &DigraphGame) -> DigraphGame {
    g.disjoint_union(h)
}
