//! Short normal-play partizan game values.
//!
//! A [`Game`] is a handle to a hash-consed literal form: two forms with the
//! same option sets always share one handle, so structural identity is plain
//! `==`. All algebra (sum, negation, comparison, canonical form) is memoized
//! in process-wide tables that are safe to use from several threads.

mod display;
mod dyadic;
mod store;

use std::cmp::Ordering;
use std::fmt;

use serde::{Deserialize, Serialize};

pub use display::{bracket, pretty};
pub use dyadic::{simplest_between, Dyadic, DyadicError};

use store::store;

/// Handle to an interned literal form.
///
/// The wrapped integer is process-local and never serialized.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Game(u32);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Player {
    Left,
    Right,
}

impl Player {
    pub fn opponent(self) -> Player {
        match self {
            Player::Left => Player::Right,
            Player::Right => Player::Left,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OutcomeClass {
    LeftWin,
    RightWin,
    NextWin,
    PreviousWin,
}

impl fmt::Display for OutcomeClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            OutcomeClass::LeftWin => "L",
            OutcomeClass::RightWin => "R",
            OutcomeClass::NextWin => "N",
            OutcomeClass::PreviousWin => "P",
        })
    }
}

/// Result of comparing two games in the partial order.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Relation {
    Less,
    Greater,
    Equal,
    Confused,
}

impl fmt::Display for Relation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Relation::Less => "<",
            Relation::Greater => ">",
            Relation::Equal => "=",
            Relation::Confused => "||",
        })
    }
}

impl Game {
    pub const ZERO: Game = Game(0);

    pub fn id(self) -> u32 {
        self.0
    }

    pub fn left_options(self) -> Vec<Game> {
        store().node(self).left.to_vec()
    }

    pub fn right_options(self) -> Vec<Game> {
        store().node(self).right.to_vec()
    }

    pub fn options(self, player: Player) -> Vec<Game> {
        match player {
            Player::Left => self.left_options(),
            Player::Right => self.right_options(),
        }
    }

    pub fn is_zero(self) -> bool {
        self == Game::ZERO
    }
}

impl fmt::Debug for Game {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Game#{}({})", self.0, bracket(*self))
    }
}

/// Number of distinct forms interned so far.
pub fn interned_count() -> usize {
    store().len()
}

/// Drops every memoized result (the intern table itself is kept).
pub fn clear_memo() {
    store().memo.clear();
}

/// Interns `{lefts | rights}`. Option lists are deduplicated by identity.
pub fn make_game<L, R>(lefts: L, rights: R) -> Game
where
    L: IntoIterator<Item = Game>,
    R: IntoIterator<Item = Game>,
{
    store().intern(lefts.into_iter().collect(), rights.into_iter().collect())
}

pub fn zero() -> Game {
    Game::ZERO
}

pub fn star() -> Game {
    make_game([Game::ZERO], [Game::ZERO])
}

pub fn up() -> Game {
    make_game([Game::ZERO], [star()])
}

pub fn down() -> Game {
    make_game([star()], [Game::ZERO])
}

/// The nimber `*n` in canonical form.
pub fn nimber(n: u32) -> Game {
    let mut below = Vec::with_capacity(n as usize);
    let mut g = Game::ZERO;
    for _ in 0..n {
        below.push(g);
        g = make_game(below.iter().copied(), below.iter().copied());
    }
    g
}

pub fn integer(n: i64) -> Game {
    number_game(Dyadic::integer(n))
}

pub fn negate(g: Game) -> Game {
    let s = store();
    if let Some(h) = s.memo.neg.get(&g) {
        return *h;
    }
    let node = s.node(g);
    let lefts: Vec<Game> = node.right.iter().map(|&x| negate(x)).collect();
    let rights: Vec<Game> = node.left.iter().map(|&x| negate(x)).collect();
    let h = make_game(lefts, rights);
    s.memo.neg.insert(g, h);
    s.memo.neg.insert(h, g);
    s.memo.note_insert();
    h
}

/// Literal disjunctive sum `{G^L + H, G + H^L | G^R + H, G + H^R}`.
pub fn sum(g: Game, h: Game) -> Game {
    if h.is_zero() {
        return g;
    }
    if g.is_zero() {
        return h;
    }
    let key = if g <= h { (g, h) } else { (h, g) };
    let s = store();
    if let Some(r) = s.memo.sum.get(&key) {
        return *r;
    }
    let (gn, hn) = (s.node(g), s.node(h));
    let lefts: Vec<Game> = gn
        .left
        .iter()
        .map(|&gl| sum(gl, h))
        .chain(hn.left.iter().map(|&hl| sum(g, hl)))
        .collect();
    let rights: Vec<Game> = gn
        .right
        .iter()
        .map(|&gr| sum(gr, h))
        .chain(hn.right.iter().map(|&hr| sum(g, hr)))
        .collect();
    let r = make_game(lefts, rights);
    s.memo.sum.insert(key, r);
    s.memo.note_insert();
    r
}

/// Canonical form of `g + h`.
///
/// Numbers are added arithmetically and a number summand is pushed through
/// the options of the other summand, which keeps sums with large integers
/// cheap. Agrees with `canonical(sum(g, h))`.
pub fn add(g: Game, h: Game) -> Game {
    let (g, h) = (canonical(g), canonical(h));
    match (as_number(g), as_number(h)) {
        (Some(x), Some(y)) => number_game(x + y),
        (Some(x), None) => translate_optionwise(h, x),
        (None, Some(y)) => translate_optionwise(g, y),
        (None, None) => canonical(sum(g, h)),
    }
}

/// Value-level difference `g - h`, canonical.
pub fn subtract(g: Game, h: Game) -> Game {
    add(g, negate(h))
}

/// `g <= h`: no `g^L` with `h <= g^L` and no `h^R` with `h^R <= g`.
pub fn leq(g: Game, h: Game) -> bool {
    if g == h {
        return true;
    }
    let s = store();
    if let Some(r) = s.memo.leq.get(&(g, h)) {
        return *r;
    }
    let (gn, hn) = (s.node(g), s.node(h));
    let r = !gn.left.iter().any(|&gl| leq(h, gl)) && !hn.right.iter().any(|&hr| leq(hr, g));
    s.memo.leq.insert((g, h), r);
    s.memo.note_insert();
    r
}

pub fn geq(g: Game, h: Game) -> bool {
    leq(h, g)
}

/// Value equality.
pub fn equal(g: Game, h: Game) -> bool {
    leq(g, h) && leq(h, g)
}

pub fn compare(g: Game, h: Game) -> Relation {
    match (leq(g, h), leq(h, g)) {
        (true, true) => Relation::Equal,
        (true, false) => Relation::Less,
        (false, true) => Relation::Greater,
        (false, false) => Relation::Confused,
    }
}

/// Whether the player to move first in `g` wins, by direct search of the
/// literal tree.
pub fn wins_moving_first(g: Game, player: Player) -> bool {
    let s = store();
    let table = match player {
        Player::Left => &s.memo.left_first,
        Player::Right => &s.memo.right_first,
    };
    if let Some(r) = table.get(&g) {
        return *r;
    }
    let r = g
        .options(player)
        .into_iter()
        .any(|next| !wins_moving_first(next, player.opponent()));
    table.insert(g, r);
    s.memo.note_insert();
    r
}

/// Outcome class by play on the literal form (no comparison machinery).
pub fn outcome(g: Game) -> OutcomeClass {
    let s = store();
    if let Some(r) = s.memo.outcome.get(&g) {
        return *r;
    }
    let left = wins_moving_first(g, Player::Left);
    let right = wins_moving_first(g, Player::Right);
    let r = match (left, right) {
        (true, true) => OutcomeClass::NextWin,
        (true, false) => OutcomeClass::LeftWin,
        (false, true) => OutcomeClass::RightWin,
        (false, false) => OutcomeClass::PreviousWin,
    };
    s.memo.outcome.insert(g, r);
    r
}

/// The play-based definition of `g <= h`: Right wins `g - h` moving second.
///
/// Exponentially more expensive than [`leq`]; kept as an independent check.
pub fn leq_by_play(g: Game, h: Game) -> bool {
    matches!(
        outcome(sum(g, negate(h))),
        OutcomeClass::RightWin | OutcomeClass::PreviousWin
    )
}

/// Length of the longest move sequence (players need not alternate).
pub fn birthday(g: Game) -> u32 {
    let s = store();
    if let Some(r) = s.memo.birthday.get(&g) {
        return *r;
    }
    let node = s.node(g);
    let r = node
        .left
        .iter()
        .chain(node.right.iter())
        .map(|&x| birthday(x) + 1)
        .max()
        .unwrap_or(0);
    s.memo.birthday.insert(g, r);
    r
}

/// Removes dominated options; among equal options the smallest id survives.
/// Drops options that another option dominates for `player`; of two equal
/// options the one with the smaller id is kept.
pub fn remove_dominated(options: &[Game], player: Player) -> Vec<Game> {
    // `better(a, b)`: a is at least as good as b for `player`.
    let better = |a: Game, b: Game| match player {
        Player::Left => leq(b, a),
        Player::Right => leq(a, b),
    };
    options
        .iter()
        .copied()
        .filter(|&o| {
            !options.iter().any(|&p| {
                p != o && better(p, o) && (!better(o, p) || p < o)
            })
        })
        .collect()
}

/// Canonical form: options canonicalized, dominated options removed and
/// reversible options bypassed until neither rule applies.
pub fn canonical(g: Game) -> Game {
    let s = store();
    if let Some(r) = s.memo.canonical.get(&g) {
        return *r;
    }
    let node = s.node(g);
    let mut lefts: Vec<Game> = node.left.iter().map(|&x| canonical(x)).collect();
    let mut rights: Vec<Game> = node.right.iter().map(|&x| canonical(x)).collect();
    lefts.sort_unstable();
    lefts.dedup();
    rights.sort_unstable();
    rights.dedup();

    let result = loop {
        lefts = remove_dominated(&lefts, Player::Left);
        rights = remove_dominated(&rights, Player::Right);
        let current = make_game(lefts.iter().copied(), rights.iter().copied());

        let mut changed = false;
        let mut new_lefts = Vec::with_capacity(lefts.len());
        for &gl in &lefts {
            // Left option reverses through some G^LR <= G.
            match s.node(gl).right.iter().copied().find(|&glr| leq(glr, current)) {
                Some(glr) => {
                    new_lefts.extend(s.node(glr).left.iter().copied());
                    changed = true;
                }
                None => new_lefts.push(gl),
            }
        }
        let mut new_rights = Vec::with_capacity(rights.len());
        for &gr in &rights {
            match s.node(gr).left.iter().copied().find(|&grl| leq(current, grl)) {
                Some(grl) => {
                    new_rights.extend(s.node(grl).right.iter().copied());
                    changed = true;
                }
                None => new_rights.push(gr),
            }
        }
        if !changed {
            break current;
        }
        new_lefts.sort_unstable();
        new_lefts.dedup();
        new_rights.sort_unstable();
        new_rights.dedup();
        lefts = new_lefts;
        rights = new_rights;
    };

    s.memo.canonical.insert(g, result);
    s.memo.canonical.insert(result, result);
    s.memo.note_insert();
    result
}

pub fn is_canonical(g: Game) -> bool {
    canonical(g) == g
}

/// The dyadic value of `g` if `g` is a number under the recursive definition
/// (all options numbers, every Left option below every Right option).
pub fn as_number(g: Game) -> Option<Dyadic> {
    let s = store();
    if let Some(r) = s.memo.number.get(&g) {
        return *r;
    }
    let node = s.node(g);
    let r = (|| {
        let mut lo: Option<Dyadic> = None;
        for &gl in node.left.iter() {
            let x = as_number(gl)?;
            lo = Some(lo.map_or(x, |l| l.max(x)));
        }
        let mut hi: Option<Dyadic> = None;
        for &gr in node.right.iter() {
            let x = as_number(gr)?;
            hi = Some(hi.map_or(x, |h| h.min(x)));
        }
        if let (Some(l), Some(h)) = (lo, hi) {
            if l >= h {
                return None;
            }
        }
        Some(simplest_between(lo, hi))
    })();
    s.memo.number.insert(g, r);
    r
}

pub fn is_number(g: Game) -> bool {
    as_number(g).is_some()
}

/// Canonical form of the number `x`.
pub fn number_game(x: Dyadic) -> Game {
    if x.is_integer() {
        let n = x.numerator();
        let mut g = Game::ZERO;
        for _ in 0..n.unsigned_abs() {
            g = if n > 0 { make_game([g], []) } else { make_game([], [g]) };
        }
        return g;
    }
    let step = Dyadic::new(1, x.exponent());
    make_game([number_game(x - step)], [number_game(x + step)])
}

/// `g + x` as a canonical value, via the literal sum.
pub fn translate(g: Game, x: Dyadic) -> Game {
    canonical(sum(g, number_game(x)))
}

/// `g + x` computed by translating every option of `g` by `x`.
///
/// Only valid when `g` is not equal to a number; numbers are added
/// arithmetically instead.
pub fn translate_optionwise(g: Game, x: Dyadic) -> Game {
    let g = canonical(g);
    if let Some(y) = as_number(g) {
        return number_game(y + x);
    }
    if x == Dyadic::ZERO {
        return g;
    }
    let node = store().node(g);
    let lefts: Vec<Game> = node.left.iter().map(|&o| translate_optionwise(o, x)).collect();
    let rights: Vec<Game> = node.right.iter().map(|&o| translate_optionwise(o, x)).collect();
    canonical(make_game(lefts, rights))
}

/// Left stop and right stop of a canonical game.
pub fn stops(g: Game) -> (Dyadic, Dyadic) {
    (stop(g, Player::Left), stop(g, Player::Right))
}

fn stop(g: Game, player: Player) -> Dyadic {
    if let Some(x) = as_number(g) {
        return x;
    }
    let opts = g.options(player).into_iter().map(|o| stop(o, player.opponent()));
    match player {
        Player::Left => opts.max(),
        Player::Right => opts.min(),
    }
    .expect("non-number with an empty option set")
}

/// Smallest integer `n` with `g < n`.
pub fn least_integer_above(g: Game) -> i64 {
    let mut n = -(birthday(g) as i64);
    while compare(g, integer(n)) != Relation::Less {
        n += 1;
    }
    n
}

/// All canonical values born by day `b`, sorted by bracket encoding.
///
/// Enumerates every pair of option subsets of the previous day, so it is
/// only offered for `b <= 2` (1, 4 and 22 values).
pub fn values_born_by_day(b: u32) -> Vec<Game> {
    assert!(b <= 2, "day-{b} enumeration is out of reach");
    let mut day = vec![Game::ZERO];
    for _ in 0..b {
        let mut next: Vec<Game> = Vec::new();
        let k = day.len();
        for lmask in 0u32..(1 << k) {
            for rmask in 0u32..(1 << k) {
                let pick = |mask: u32| (0..k).filter(move |i| mask >> i & 1 == 1).map(|i| day[i]);
                next.push(canonical(make_game(pick(lmask), pick(rmask))));
            }
        }
        next.sort_unstable();
        next.dedup();
        day = next;
    }
    day.sort_by(|&a, &b| cmp_by_bracket(a, b));
    day
}

/// Ordering helper for sorting values deterministically across runs.
pub fn cmp_by_bracket(a: Game, b: Game) -> Ordering {
    bracket(a).cmp(&bracket(b))
}
