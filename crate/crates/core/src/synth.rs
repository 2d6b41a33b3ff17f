//! Building a digraph equal to a given value.
//!
//! Integers are isolated vertices, other numbers are stalks, and everything
//! else goes through the gadget `n<G_1, ..., G_k | H_1, ..., H_t>`, whose
//! value is `{-1, G_1, ..., G_k | 1, H_1, ..., H_t}` once `n` is large enough.
//! When the extra `-1` (or `1`) is not dominated, the target is shifted by an
//! integer first and the integer added back as isolated vertices.

use std::collections::HashMap;
use std::fmt;
use std::ops::Range;

use thiserror::Error;

use crate::digraph::{Color, DigraphGame};
use crate::value::{
    as_number, canonical, compare, integer, least_integer_above, make_game, negate, pretty,
    remove_dominated, simplest_between, translate, Dyadic, Game, Player, Relation,
};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum SynthError {
    #[error("gadget evaluated to {got}, expected {expected}")]
    GadgetMismatch { expected: String, got: String },
    #[error("synthesis failed for {0}")]
    SynthesisFailure(String),
}

/// Parameters of `n<G_1, ..., G_k | H_1, ..., H_t>`.
#[derive(Clone, Debug)]
pub struct GadgetPlan {
    pub n: usize,
    pub lefts: Vec<DigraphGame>,
    pub rights: Vec<DigraphGame>,
}

impl GadgetPlan {
    /// Uses `n = 2m + 2` with `m` one more than the largest sub-digraph order.
    pub fn new(lefts: Vec<DigraphGame>, rights: Vec<DigraphGame>) -> GadgetPlan {
        let m = 1 + lefts.iter().chain(&rights).map(DigraphGame::order).max().unwrap_or(0);
        GadgetPlan { n: 2 * m + 2, lefts, rights }
    }

    pub fn with_n(n: usize, lefts: Vec<DigraphGame>, rights: Vec<DigraphGame>) -> GadgetPlan {
        assert!(n >= 1, "gadget needs at least one x and one y");
        GadgetPlan { n, lefts, rights }
    }

    /// `2n + k + t + sum of sub-digraph orders`.
    pub fn vertex_count(&self) -> usize {
        2 * self.n
            + self.lefts.len()
            + self.rights.len()
            + self.lefts.iter().chain(&self.rights).map(DigraphGame::order).sum::<usize>()
    }
}

/// Where each part of a gadget ended up.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GadgetLayout {
    pub lefts: Vec<Range<usize>>,
    pub rights: Vec<Range<usize>>,
    pub b: Vec<usize>,
    pub r: Vec<usize>,
    pub x: Vec<usize>,
    pub y: Vec<usize>,
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Part {
    /// Vertex of a sub-digraph: side (true = left) and index.
    Sub(bool, usize),
    B(usize),
    R(usize),
    X,
    Y,
}

pub fn gadget(plan: &GadgetPlan) -> DigraphGame {
    gadget_with_layout(plan).0
}

pub fn gadget_with_layout(plan: &GadgetPlan) -> (DigraphGame, GadgetLayout) {
    let mut g = DigraphGame::new();
    let mut parts = Vec::new();
    let mut layout = GadgetLayout {
        lefts: Vec::new(),
        rights: Vec::new(),
        b: Vec::new(),
        r: Vec::new(),
        x: Vec::new(),
        y: Vec::new(),
    };
    for (i, sub) in plan.lefts.iter().enumerate() {
        let start = g.append(sub, &format!("G{}.", i + 1));
        layout.lefts.push(start..g.order());
        parts.extend(std::iter::repeat(Part::Sub(true, i)).take(sub.order()));
    }
    for (j, sub) in plan.rights.iter().enumerate() {
        let start = g.append(sub, &format!("H{}.", j + 1));
        layout.rights.push(start..g.order());
        parts.extend(std::iter::repeat(Part::Sub(false, j)).take(sub.order()));
    }
    fn fresh(g: &mut DigraphGame, label: String, color: Color, part: Part, parts: &mut Vec<Part>) -> usize {
        parts.push(part);
        g.add_vertex(label, color).expect("gadget labels are distinct")
    }
    for i in 0..plan.lefts.len() {
        layout.b.push(fresh(&mut g, format!("b{}", i + 1), Color::Blue, Part::B(i), &mut parts));
    }
    for j in 0..plan.rights.len() {
        layout.r.push(fresh(&mut g, format!("r{}", j + 1), Color::Red, Part::R(j), &mut parts));
    }
    for l in 0..plan.n {
        layout.x.push(fresh(&mut g, format!("x{}", l + 1), Color::Blue, Part::X, &mut parts));
    }
    for l in 0..plan.n {
        layout.y.push(fresh(&mut g, format!("y{}", l + 1), Color::Red, Part::Y, &mut parts));
    }

    for u in 0..g.order() {
        for v in 0..g.order() {
            if u != v && gadget_arc(parts[u], parts[v], g.color(u)) {
                g.ensure_arc(u, v);
            }
        }
    }
    (g, layout)
}

/// Whether the gadget has the arc `u -> v` for vertices in different parts
/// or in the added vertices; arcs inside a sub-digraph are copied as is.
fn gadget_arc(u: Part, v: Part, u_color: Color) -> bool {
    use Part::*;
    match (u, v) {
        (Sub(su, iu), Sub(sv, iv)) => (su, iu) != (sv, iv),
        (B(_) | R(_), B(_) | R(_)) => true,
        (B(_) | R(_), X | Y) | (X | Y, B(_) | R(_)) => true,
        (Sub(..), B(_)) | (Sub(..), R(_)) => true,
        (B(i), Sub(side, j)) => !(side && i == j),
        (R(i), Sub(side, j)) => !(!side && i == j),
        (X | Y, X | Y) => false,
        (X | Y, Sub(..)) => true,
        (Sub(..), X) => u_color == Color::Blue,
        (Sub(..), Y) => u_color == Color::Red,
    }
}

/// The value `{-1, G_1, ... | 1, H_1, ...}` the gadget should have.
pub fn gadget_target(plan: &GadgetPlan) -> Game {
    let lefts: Vec<Game> = std::iter::once(integer(-1)).chain(plan.lefts.iter().map(DigraphGame::value)).collect();
    let rights: Vec<Game> = std::iter::once(integer(1)).chain(plan.rights.iter().map(DigraphGame::value)).collect();
    canonical(make_game(lefts, rights))
}

/// Evaluates the gadget and checks it against [`gadget_target`].
pub fn gadget_value_check(plan: &GadgetPlan) -> Result<Game, SynthError> {
    let expected = gadget_target(plan);
    let got = gadget(plan).value();
    if got != expected {
        return Err(SynthError::GadgetMismatch { expected: pretty(expected), got: pretty(got) });
    }
    Ok(got)
}

/// Sign expansion of `x`: `true` for `+`.
pub fn sign_expansion(x: Dyadic) -> Vec<bool> {
    let (mut lo, mut hi) = (None, None);
    let mut signs = Vec::new();
    let mut current = Dyadic::ZERO;
    while current != x {
        if x > current {
            signs.push(true);
            lo = Some(current);
        } else {
            signs.push(false);
            hi = Some(current);
        }
        current = simplest_between(lo, hi);
    }
    signs
}

/// A chain `v1, ..., vs` following the sign expansion of `x` from the ground
/// up, with an arc from each vertex to every vertex above it.
pub fn stalk(x: Dyadic) -> DigraphGame {
    let signs = sign_expansion(x);
    let mut g = DigraphGame::named(format!("stalk {x}"));
    for (i, &plus) in signs.iter().enumerate() {
        let color = if plus { Color::Blue } else { Color::Red };
        g.add_vertex(format!("v{}", i + 1), color).unwrap();
    }
    for i in 0..signs.len() {
        for j in i + 1..signs.len() {
            g.add_arc(i, j).unwrap();
        }
    }
    g
}

/// `n` levels of a blue/red pair joined both ways, each vertex pointing at
/// every vertex on the higher levels. Its value is `*n`.
pub fn nimber_digraph(n: usize) -> DigraphGame {
    let mut g = DigraphGame::named(format!("*{n}"));
    for l in 0..n {
        g.add_vertex(format!("b{}", l + 1), Color::Blue).unwrap();
        g.add_vertex(format!("r{}", l + 1), Color::Red).unwrap();
        g.add_edge(2 * l, 2 * l + 1).unwrap();
    }
    for u in 0..2 * n {
        for v in (u / 2 + 1) * 2..2 * n {
            g.add_arc(u, v).unwrap();
        }
    }
    g
}

/// `|k|` isolated vertices, blue for positive `k`.
pub fn integer_digraph(k: i64) -> DigraphGame {
    let mut g = DigraphGame::named(k.to_string());
    let color = if k > 0 { Color::Blue } else { Color::Red };
    for i in 0..k.unsigned_abs() {
        g.add_vertex(format!("v{}", i + 1), color).unwrap();
    }
    g
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Rule {
    Integer(i64),
    Stalk(Dyadic),
    Gadget { n: usize },
    /// Shifted down by `shift` and added back as isolated vertices.
    Translate { shift: i64 },
    Negate,
    Cached,
}

impl fmt::Display for Rule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Rule::Integer(k) => write!(f, "integer {k}"),
            Rule::Stalk(x) => write!(f, "stalk {x}"),
            Rule::Gadget { n } => write!(f, "gadget n={n}"),
            Rule::Translate { shift } => write!(f, "translate by {shift}"),
            Rule::Negate => write!(f, "negate"),
            Rule::Cached => write!(f, "cached"),
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceStep {
    pub depth: usize,
    pub target: String,
    pub rule: Rule,
    pub vertices: usize,
}

impl fmt::Display for TraceStep {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "{:indent$}{} <- {} ({} vertices)",
            "",
            self.target,
            self.rule,
            self.vertices,
            indent = 2 * self.depth
        )
    }
}

#[derive(Clone, Debug)]
pub struct SynthesisReport {
    pub graph: DigraphGame,
    /// One step per recursive call, in the order the calls finished.
    pub trace: Vec<TraceStep>,
}

/// Memoizes results across calls, so sibling options and repeated targets
/// are built once.
#[derive(Default)]
pub struct Synthesizer {
    cache: HashMap<Game, DigraphGame>,
    trace: Vec<TraceStep>,
}

impl Synthesizer {
    pub fn new() -> Synthesizer {
        Synthesizer::default()
    }

    pub fn synthesize(&mut self, x: Game) -> Result<DigraphGame, SynthError> {
        self.trace.clear();
        self.build(canonical(x), 0)
    }

    pub fn take_trace(&mut self) -> Vec<TraceStep> {
        std::mem::take(&mut self.trace)
    }

    fn finish(&mut self, x: Game, g: DigraphGame, rule: Rule, depth: usize) -> Result<DigraphGame, SynthError> {
        if g.value() != x {
            return Err(SynthError::SynthesisFailure(format!(
                "{} built by {rule} evaluates to {}",
                pretty(x),
                pretty(g.value())
            )));
        }
        self.trace.push(TraceStep { depth, target: pretty(x), rule, vertices: g.order() });
        self.cache.insert(x, g.clone());
        Ok(g)
    }

    fn build(&mut self, x: Game, depth: usize) -> Result<DigraphGame, SynthError> {
        if let Some(g) = self.cache.get(&x) {
            let g = g.clone();
            self.trace.push(TraceStep { depth, target: pretty(x), rule: Rule::Cached, vertices: g.order() });
            return Ok(g);
        }
        if let Some(q) = as_number(x) {
            return if q.is_integer() {
                self.finish(x, integer_digraph(q.numerator()), Rule::Integer(q.numerator()), depth)
            } else {
                self.finish(x, stalk(q), Rule::Stalk(q), depth)
            };
        }

        let lefts = remove_dominated(&x.left_options(), Player::Left);
        let rights = remove_dominated(&x.right_options(), Player::Right);
        let mut left_graphs = Vec::new();
        for y in lefts {
            left_graphs.push(self.build(y, depth + 1)?);
        }
        let mut right_graphs = Vec::new();
        for z in rights {
            right_graphs.push(self.build(z, depth + 1)?);
        }
        let plan = GadgetPlan::new(left_graphs, right_graphs);
        let value = gadget_value_check(&plan)?;
        if value == x {
            let n = plan.n;
            return self.finish(x, gadget(&plan), Rule::Gadget { n }, depth);
        }

        match compare(x, integer(1)) {
            Relation::Greater => {
                let n_star = least_integer_above(x);
                let shifted = self.build(translate(x, Dyadic::integer(1 - n_star)), depth + 1)?;
                let g = shifted.disjoint_union(&integer_digraph(n_star - 1));
                self.finish(x, g, Rule::Translate { shift: n_star - 1 }, depth)
            }
            _ if compare(x, integer(-1)) == Relation::Less => {
                let g = self.build(negate(x), depth + 1)?.negate();
                self.finish(x, g, Rule::Negate, depth)
            }
            _ => Err(SynthError::SynthesisFailure(format!(
                "gadget for {} gave {} and no shift applies",
                pretty(x),
                pretty(value)
            ))),
        }
    }
}

/// A digraph whose value equals `x`.
pub fn synthesize(x: Game) -> Result<DigraphGame, SynthError> {
    Synthesizer::new().synthesize(x)
}

pub fn synthesize_with_trace(x: Game) -> Result<SynthesisReport, SynthError> {
    let mut s = Synthesizer::new();
    let graph = s.synthesize(x)?;
    Ok(SynthesisReport { graph, trace: s.take_trace() })
}

#[cfg(test)]
mod tests;
