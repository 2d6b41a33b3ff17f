//! Exhaustive enumeration of small digraph placement games.
//!
//! Every labelled two-coloured digraph on `n` vertices is encoded as an
//! `n * n` bit integer: the colours first (vertex 0 most significant, blue
//! is 0), then the arc bits in row-major order over ordered pairs. For a
//! fixed `n`, numeric order of codes is lexicographic order of the
//! (colour string, arc bitstring) pair, which fixes the witness choice.
//!
//! Graphs are evaluated one level at a time. Deleting a closed
//! out-neighbourhood leaves an induced subgraph on fewer vertices, whose
//! value is read from the table of the previous levels.

mod bounds;

use std::collections::HashMap;

use rayon::prelude::*;
use rustc_hash::FxHashMap;
use serde::Serialize;
use thiserror::Error;

use crate::digraph::io::to_json_value;
use crate::digraph::{Color, DigraphGame};
use crate::expr::parse_value;
use crate::fixtures::ATLAS;
use crate::value::{birthday, bracket, canonical, cmp_by_bracket, make_game, pretty, values_born_by_day, Game};

pub use bounds::{
    bound_lemma51, bound_lemma53, bound_thm54, bound_thm57, power_tower, theorem_table, BigBound, BoundRow,
    ReferenceRow, ReferenceTable,
};

/// Largest vertex count `enumerate` accepts.
pub const HARD_CAP: usize = 5;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum CensusError {
    #[error("census is capped at {cap} vertices, asked for {requested}")]
    CapExceeded { requested: usize, cap: usize },
    #[error("census up to {max_n} vertices misses day-{b} values: {}", missing.join(", "))]
    IncompleteCensus { b: u32, max_n: usize, missing: Vec<String> },
    #[error("atlas mismatch: {}", .0.join("; "))]
    AtlasMismatch(Vec<String>),
}

/// Number of labelled two-coloured digraphs on exactly `n` vertices.
pub fn graphs_on(n: usize) -> u64 {
    1u64 << (n * n)
}

/// Bit positions for graphs on `n` vertices.
#[derive(Clone, Copy)]
struct Layout {
    n: usize,
}

impl Layout {
    fn color_bit(self, v: usize) -> usize {
        self.n * self.n - 1 - v
    }

    fn arc_bit(self, from: usize, to: usize) -> usize {
        let idx = from * (self.n - 1) + if to < from { to } else { to - 1 };
        self.n * (self.n - 1) - 1 - idx
    }

    fn is_red(self, code: u32, v: usize) -> bool {
        code >> self.color_bit(v) & 1 == 1
    }

    fn has_arc(self, code: u32, from: usize, to: usize) -> bool {
        code >> self.arc_bit(from, to) & 1 == 1
    }

    /// Code of the subgraph induced by `keep` (a vertex mask), in vertex
    /// order.
    fn induced(self, code: u32, keep: u32) -> (usize, u32) {
        let vs: Vec<usize> = (0..self.n).filter(|&v| keep >> v & 1 == 1).collect();
        let sub = Layout { n: vs.len() };
        let mut out = 0u32;
        for (i, &u) in vs.iter().enumerate() {
            if self.is_red(code, u) {
                out |= 1 << sub.color_bit(i);
            }
            for (j, &w) in vs.iter().enumerate() {
                if i != j && self.has_arc(code, u, w) {
                    out |= 1 << sub.arc_bit(i, j);
                }
            }
        }
        (vs.len(), out)
    }

    fn closed_out(self, code: u32, v: usize) -> u32 {
        (0..self.n).filter(|&w| w == v || self.has_arc(code, v, w)).fold(0, |m, w| m | 1 << w)
    }
}

/// The digraph with code `code` on `n` vertices, labelled `1..=n`.
pub fn decode(n: usize, code: u32) -> DigraphGame {
    let layout = Layout { n };
    let mut g = DigraphGame::new();
    for v in 0..n {
        let color = if layout.is_red(code, v) { Color::Red } else { Color::Blue };
        g.add_vertex((v + 1).to_string(), color).unwrap();
    }
    for u in 0..n {
        for w in (0..n).filter(|&w| w != u) {
            if layout.has_arc(code, u, w) {
                g.add_arc(u, w).unwrap();
            }
        }
    }
    g
}

#[derive(Clone, Debug)]
pub struct CensusRecord {
    pub value: Game,
    /// Bracket encoding of the canonical form.
    pub value_key: String,
    pub min_vertices: usize,
    pub witness: DigraphGame,
    /// Number of labelled coloured digraphs with this value.
    pub occurrences: u64,
}

/// Per value: least (vertex count, code) seen and number of graphs.
type Partial = FxHashMap<Game, ((usize, u32), u64)>;

fn merge(mut a: Partial, b: Partial) -> Partial {
    for (g, (key, count)) in b {
        a.entry(g)
            .and_modify(|(k, c)| {
                *k = (*k).min(key);
                *c += count;
            })
            .or_insert((key, count));
    }
    a
}

#[derive(Clone, Debug)]
pub struct Census {
    pub max_n: usize,
    /// Graphs visited, over all sizes.
    pub graphs: u64,
    /// Sorted by (min vertices, bracket encoding).
    pub records: Vec<CensusRecord>,
    index: HashMap<Game, usize>,
}

impl Census {
    pub fn get(&self, x: Game) -> Option<&CensusRecord> {
        self.index.get(&canonical(x)).map(|&i| &self.records[i])
    }

    pub fn len(&self) -> usize {
        self.records.len()
    }

    pub fn is_empty(&self) -> bool {
        self.records.is_empty()
    }

    /// Distinct values realised on at most `n` vertices.
    pub fn values_within(&self, n: usize) -> usize {
        self.records.iter().filter(|r| r.min_vertices <= n).count()
    }

    pub fn to_json(&self) -> String {
        #[derive(Serialize)]
        struct Row<'a> {
            value: &'a str,
            min_vertices: usize,
            witness: serde_json::Value,
            count: u64,
        }
        let rows: Vec<Row> = self
            .records
            .iter()
            .map(|r| Row {
                value: &r.value_key,
                min_vertices: r.min_vertices,
                witness: to_json_value(&r.witness),
                count: r.occurrences,
            })
            .collect();
        serde_json::to_string_pretty(&rows).expect("census serializes")
    }
}

/// Values of every graph on `n` vertices in `range`, given the tables of
/// all smaller sizes, plus the partial census of the range.
fn evaluate_range(n: usize, start: u32, out: &mut [Game], tables: &[Vec<Game>]) -> Partial {
    let layout = Layout { n };
    let all = (1u32 << n) - 1;
    let mut partial = Partial::default();
    let mut seen: FxHashMap<(Vec<Game>, Vec<Game>), Game> = FxHashMap::default();
    for (offset, slot) in out.iter_mut().enumerate() {
        let code = start + offset as u32;
        let mut lefts = Vec::new();
        let mut rights = Vec::new();
        for v in 0..n {
            let (k, sub) = layout.induced(code, all & !layout.closed_out(code, v));
            let option = tables[k][sub as usize];
            if layout.is_red(code, v) {
                rights.push(option);
            } else {
                lefts.push(option);
            }
        }
        for opts in [&mut lefts, &mut rights] {
            opts.sort_unstable();
            opts.dedup();
        }
        let value = *seen
            .entry((lefts, rights))
            .or_insert_with_key(|(l, r)| canonical(make_game(l.iter().copied(), r.iter().copied())));
        *slot = value;
        partial
            .entry(value)
            .and_modify(|(_, c)| *c += 1)
            .or_insert(((n, code), 1));
    }
    partial
}

const CHUNK: usize = 1 << 12;

/// Census of all two-coloured digraphs on at most `max_n` vertices, using
/// `workers` threads.
pub fn enumerate(max_n: usize, workers: usize) -> Result<Census, CensusError> {
    if max_n > HARD_CAP {
        return Err(CensusError::CapExceeded { requested: max_n, cap: HARD_CAP });
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(workers.max(1))
        .build()
        .expect("thread pool");
    pool.install(|| run(max_n))
}

fn run(max_n: usize) -> Result<Census, CensusError> {
    let mut tables: Vec<Vec<Game>> = vec![vec![Game::ZERO]];
    let mut partial = Partial::default();
    partial.insert(Game::ZERO, ((0, 0), 1));
    let mut graphs = 1u64;
    for n in 1..=max_n {
        let mut table = vec![Game::ZERO; graphs_on(n) as usize];
        let level = table
            .par_chunks_mut(CHUNK)
            .enumerate()
            .map(|(i, chunk)| evaluate_range(n, (i * CHUNK) as u32, chunk, &tables))
            .reduce(Partial::default, merge);
        partial = merge(partial, level);
        graphs += graphs_on(n);
        // The top level is never an option of anything.
        tables.push(if n < max_n { table } else { Vec::new() });
    }

    let mut records: Vec<CensusRecord> = partial
        .into_iter()
        .map(|(value, ((n, code), occurrences))| CensusRecord {
            value,
            value_key: bracket(value),
            min_vertices: n,
            witness: decode(n, code),
            occurrences,
        })
        .collect();
    records.sort_by(|a, b| (a.min_vertices, &a.value_key).cmp(&(b.min_vertices, &b.value_key)));
    let index = records.iter().enumerate().map(|(i, r)| (r.value, i)).collect();
    Ok(Census { max_n, graphs, records, index })
}

/// Least number of vertices of a digraph equal to `x`, if the census has
/// one. `None` means more than `census.max_n`.
pub fn f_of(x: Game, census: &Census) -> Option<usize> {
    census.get(x).map(|r| r.min_vertices)
}

/// Largest `f` over the values born by day `b`.
#[allow(non_snake_case)]
pub fn big_F(b: u32, census: &Census) -> Result<usize, CensusError> {
    let incomplete = |missing| CensusError::IncompleteCensus { b, max_n: census.max_n, missing };
    if b > 2 {
        return Err(incomplete(vec![format!("day {b} is not enumerable")]));
    }
    let mut best = 0;
    let mut missing = Vec::new();
    for x in values_born_by_day(b) {
        match f_of(x, census) {
            Some(n) => best = best.max(n),
            None => missing.push(pretty(x)),
        }
    }
    if missing.is_empty() {
        Ok(best)
    } else {
        Err(incomplete(missing))
    }
}

/// Canonical values of birthday 3 of the form `{A|B}` (each side empty or
/// a single day-2 value) that no census graph reaches, in bracket order.
pub fn missing_day_three(census: &Census) -> Vec<Game> {
    let day2 = values_born_by_day(2);
    let sides: Vec<Vec<Game>> = std::iter::once(vec![]).chain(day2.iter().map(|&g| vec![g])).collect();
    let mut out: Vec<Game> = Vec::new();
    for l in &sides {
        for r in &sides {
            let x = canonical(make_game(l.iter().copied(), r.iter().copied()));
            if birthday(x) == 3 && census.get(x).is_none() && !out.contains(&x) {
                out.push(x);
            }
        }
    }
    out.sort_by(|&a, &b| cmp_by_bracket(a, b));
    out
}

#[derive(Clone, Debug, Serialize)]
pub struct AtlasCheck {
    pub name: &'static str,
    pub target: &'static str,
    pub value: String,
    pub expected_vertices: usize,
    pub vertices: usize,
    pub ok: bool,
}

/// Evaluates every atlas digraph against its target and drawn size.
pub fn check_atlas() -> Vec<AtlasCheck> {
    ATLAS
        .iter()
        .map(|e| {
            let g = e.graph();
            let value = g.value();
            let target = parse_value(e.target).expect("atlas targets parse");
            AtlasCheck {
                name: e.name,
                target: e.target,
                value: pretty(value),
                expected_vertices: e.vertices,
                vertices: g.order(),
                ok: value == target && g.order() == e.vertices,
            }
        })
        .collect()
}

pub fn verify_atlas() -> Result<Vec<AtlasCheck>, CensusError> {
    let report = check_atlas();
    let bad: Vec<String> = report
        .iter()
        .filter(|c| !c.ok)
        .map(|c| format!("{}: got {} on {} vertices", c.name, c.value, c.vertices))
        .collect();
    if bad.is_empty() {
        Ok(report)
    } else {
        Err(CensusError::AtlasMismatch(bad))
    }
}

#[cfg(test)]
mod tests;
