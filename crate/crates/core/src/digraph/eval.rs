use rustc_hash::FxHashMap;

use super::bits::{Mask, VertexSet};
use super::{Color, DigraphGame};
use crate::value::{add, canonical, integer, make_game, Game};

/// Evaluates the residual `alive` of `g`, either as an exact literal form or
/// as a canonical value. Memo tables live for the duration of the call.
pub(super) fn evaluate(g: &DigraphGame, alive: &VertexSet, canonical_value: bool) -> Game {
    if g.order() <= 64 {
        let mut ev = Evaluator::<u64>::new(g);
        let m = <u64 as Mask>::from_set(alive);
        if canonical_value {
            ev.value(&m)
        } else {
            ev.literal(&m)
        }
    } else {
        let mut ev = Evaluator::<VertexSet>::new(g);
        if canonical_value {
            ev.value(alive)
        } else {
            ev.literal(alive)
        }
    }
}

struct Evaluator<M: Mask> {
    blue: M,
    red: M,
    /// `N+[v]` for every vertex.
    closed_out: Vec<M>,
    /// Undirected neighbourhood, for component splitting.
    adjacent: Vec<M>,
    literal_memo: FxHashMap<M, Game>,
    value_memo: FxHashMap<M, Game>,
    /// Values of whole residuals, which may have several components.
    sum_memo: FxHashMap<M, Game>,
    /// Classes of interchangeable vertices (size two or more), with
    /// `prefixes[k]` holding the first `k` members of each class.
    twins: Vec<(M, Vec<M>)>,
}

/// Groups vertices that any permutation within the group maps onto an
/// automorphism: same colour and same neighbourhoods, open for non-adjacent
/// twins and closed for mutually adjacent ones.
fn twin_classes(g: &DigraphGame) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut ins = vec![VertexSet::new(); n];
    for (u, v) in g.arcs() {
        ins[v].insert(u);
    }
    let mut open: FxHashMap<(Color, &VertexSet, &VertexSet), Vec<usize>> = FxHashMap::default();
    for v in 0..n {
        open.entry((g.color(v), g.out_neighbors(v), &ins[v])).or_default().push(v);
    }
    let mut classes: Vec<Vec<usize>> = open.into_values().filter(|c| c.len() > 1).collect();
    let grouped: VertexSet = classes.iter().flatten().copied().collect();
    let mut closed: FxHashMap<(Color, VertexSet, VertexSet), Vec<usize>> = FxHashMap::default();
    for v in (0..n).filter(|&v| !grouped.contains(v)) {
        let mut in_closed = ins[v].clone();
        in_closed.insert(v);
        closed.entry((g.color(v), g.closed_out(v), in_closed)).or_default().push(v);
    }
    classes.extend(closed.into_values().filter(|c| c.len() > 1));
    classes
}

impl<M: Mask> Evaluator<M> {
    fn new(g: &DigraphGame) -> Self {
        let by_color = |c: Color| {
            M::from_set(&VertexSet::from_indices((0..g.order()).filter(|&v| g.color(v) == c)))
        };
        Evaluator {
            blue: by_color(Color::Blue),
            red: by_color(Color::Red),
            closed_out: (0..g.order()).map(|v| M::from_set(&g.closed_out(v))).collect(),
            adjacent: g.underlying_adjacency().iter().map(M::from_set).collect(),
            literal_memo: FxHashMap::default(),
            value_memo: FxHashMap::default(),
            sum_memo: FxHashMap::default(),
            twins: twin_classes(g)
                .into_iter()
                .map(|class| {
                    let prefixes = (0..=class.len())
                        .map(|k| M::from_set(&VertexSet::from_indices(class[..k].iter().copied())))
                        .collect();
                    (M::from_set(&VertexSet::from_indices(class)), prefixes)
                })
                .collect(),
        }
    }

    /// An isomorphic residual in which each twin class keeps its lowest
    /// members.
    fn normalize(&self, alive: &M) -> M {
        let mut out = alive.clone();
        for (class, prefixes) in &self.twins {
            let k = alive.and(class).count();
            if k != 0 && k != prefixes.len() - 1 {
                out = out.and_not(class).or(&prefixes[k]);
            }
        }
        out
    }

    fn literal(&mut self, alive: &M) -> Game {
        if alive.is_empty() {
            return Game::ZERO;
        }
        if let Some(&g) = self.literal_memo.get(alive) {
            return g;
        }
        let lefts: Vec<Game> = alive
            .and(&self.blue)
            .indices()
            .into_iter()
            .map(|v| {
                let next = alive.and_not(&self.closed_out[v]);
                self.literal(&next)
            })
            .collect();
        let rights: Vec<Game> = alive
            .and(&self.red)
            .indices()
            .into_iter()
            .map(|v| {
                let next = alive.and_not(&self.closed_out[v]);
                self.literal(&next)
            })
            .collect();
        let g = make_game(lefts, rights);
        self.literal_memo.insert(alive.clone(), g);
        g
    }

    fn components(&self, alive: &M) -> Vec<M> {
        let mut rest = alive.clone();
        let mut comps = Vec::new();
        while let Some(start) = rest.first() {
            let mut comp = M::from_set(&VertexSet::from_indices([start]));
            let mut frontier = comp.clone();
            while !frontier.is_empty() {
                let mut reach = M::empty();
                for u in frontier.indices() {
                    reach = reach.or(&self.adjacent[u]);
                }
                frontier = reach.and(&rest).and_not(&comp);
                comp = comp.or(&frontier);
            }
            rest = rest.and_not(&comp);
            comps.push(comp);
        }
        comps
    }

    fn value(&mut self, alive: &M) -> Game {
        let alive = &self.normalize(alive);
        if let Some(&g) = self.sum_memo.get(alive) {
            return g;
        }
        // Isolated vertices add up to an integer.
        let mut isolated = 0i64;
        let mut total = Game::ZERO;
        for c in self.components(alive) {
            if c.count() == 1 {
                isolated += if c.and(&self.blue).is_empty() { -1 } else { 1 };
            } else {
                total = add(total, self.component_value(&c));
            }
        }
        let g = add(total, integer(isolated));
        self.sum_memo.insert(alive.clone(), g);
        g
    }

    fn component_value(&mut self, comp: &M) -> Game {
        if comp.count() == 1 {
            return if comp.and(&self.blue).is_empty() { integer(-1) } else { integer(1) };
        }
        let comp = &self.normalize(comp);
        if let Some(&g) = self.value_memo.get(comp) {
            return g;
        }
        let mut lefts = Vec::new();
        for v in comp.and(&self.blue).indices() {
            let next = comp.and_not(&self.closed_out[v]);
            lefts.push(self.value(&next));
        }
        let mut rights = Vec::new();
        for v in comp.and(&self.red).indices() {
            let next = comp.and_not(&self.closed_out[v]);
            rights.push(self.value(&next));
        }
        for opts in [&mut lefts, &mut rights] {
            opts.sort_unstable();
            opts.dedup();
        }
        let g = canonical(make_game(lefts, rights));
        self.value_memo.insert(comp.clone(), g);
        g
    }
}
