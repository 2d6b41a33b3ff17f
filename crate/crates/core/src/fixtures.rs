//! Embedded reference digraphs: the two graphs equal to `2 + down + *`, the
//! worked gadget example equal to `*2`, and minimal witnesses for the 22
//! values born by day 2.

use crate::digraph::io::parse_json;
use crate::digraph::DigraphGame;

fn load(text: &str) -> DigraphGame {
    parse_json(text).expect("embedded fixture parses")
}

/// Ten vertices in three components: a six-vertex `down`, two isolated blue
/// vertices and a `*` pair.
pub fn fig1_left() -> DigraphGame {
    load(include_str!("../data/figures/fig1_left.json"))
}

pub fn fig1_right() -> DigraphGame {
    load(include_str!("../data/figures/fig1_right.json"))
}

/// `1<0, * | 0, *>`, labelled 1 to 10 as drawn.
pub fn fig2() -> DigraphGame {
    load(include_str!("../data/figures/fig2.json"))
}

#[derive(Clone, Copy, Debug)]
pub struct AtlasEntry {
    /// Label as printed next to the drawing.
    pub name: &'static str,
    /// Target value as a value expression.
    pub target: &'static str,
    /// Number of vertices in the drawing.
    pub vertices: usize,
    json: &'static str,
}

impl AtlasEntry {
    pub fn graph(&self) -> DigraphGame {
        load(self.json)
    }
}

macro_rules! entry {
    ($name:expr, $target:expr, $n:expr, $file:expr) => {
        AtlasEntry {
            name: $name,
            target: $target,
            vertices: $n,
            json: include_str!(concat!("../data/atlas/", $file, ".json")),
        }
    };
}

/// In drawing order.
pub const ATLAS: [AtlasEntry; 22] = [
    entry!("-2", "-2", 2, "neg_two"),
    entry!("2", "2", 2, "two"),
    entry!("-1", "-1", 1, "neg_one"),
    entry!("1", "1", 1, "one"),
    entry!("-1+*", "-1 + *", 3, "neg_one_star"),
    entry!("1+*", "1 + *", 3, "one_star"),
    entry!("-1/2", "-1/2", 2, "neg_half"),
    entry!("1/2", "1/2", 2, "half"),
    entry!("{*|-1}", "{*|-1}", 4, "star_neg_one"),
    entry!("{1|*}", "{1|*}", 4, "one_star_switch"),
    entry!("{0|-1}", "{0|-1}", 3, "zero_neg_one"),
    entry!("{1|0}", "{1|0}", 3, "one_zero"),
    entry!("down", "down", 4, "down"),
    entry!("up", "up", 4, "up"),
    entry!("down*", "down + *", 3, "down_star"),
    entry!("up*", "up + *", 3, "up_star"),
    entry!("{0,*|-1}", "{0,*|-1}", 4, "zero_star_neg_one"),
    entry!("{1|0,*}", "{1|0,*}", 4, "one_zero_star"),
    entry!("0", "0", 0, "zero"),
    entry!("*", "*", 2, "star"),
    entry!("*2", "*2", 4, "star_two"),
    entry!("{1|-1}", "{1|-1}", 4, "switch_one"),
];
