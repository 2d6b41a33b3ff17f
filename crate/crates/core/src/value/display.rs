use std::collections::HashMap;
use std::sync::OnceLock;

use super::{add, as_number, canonical, down, integer, nimber, number_game, stops, up, Game};

/// Deterministic bracket encoding of a literal form: `{a,b|c}`, children
/// sorted by their own encodings. `0` is `{|}`.
///
/// Unlike intern ids this is stable across processes.
pub fn bracket(g: Game) -> String {
    let mut lefts: Vec<String> = g.left_options().into_iter().map(bracket).collect();
    let mut rights: Vec<String> = g.right_options().into_iter().map(bracket).collect();
    lefts.sort();
    rights.sort();
    format!("{{{}|{}}}", lefts.join(","), rights.join(","))
}

/// Human-readable form of the value of `g`.
///
/// Numbers print as dyadics; a number plus a small combination of ups and
/// nimbers prints as a sum (`2 + down + *`); anything else falls back to
/// braces with pretty-printed options.
pub fn pretty(g: Game) -> String {
    let g = canonical(g);
    if let Some(x) = as_number(g) {
        return x.to_string();
    }
    let (ls, rs) = stops(g);
    if ls == rs {
        let infinitesimal = add(g, number_game(-ls));
        if let Some(name) = infinitesimal_names().get(&infinitesimal) {
            return if ls.numerator() == 0 {
                name.clone()
            } else {
                format!("{ls} + {name}")
            };
        }
    }
    let mut lefts: Vec<String> = g.left_options().into_iter().map(pretty).collect();
    let mut rights: Vec<String> = g.right_options().into_iter().map(pretty).collect();
    lefts.sort();
    rights.sort();
    format!("{{{}|{}}}", lefts.join(","), rights.join(","))
}

const MAX_UPS: i64 = 4;
const MAX_NIMBER: u32 = 16;

fn infinitesimal_names() -> &'static HashMap<Game, String> {
    static NAMES: OnceLock<HashMap<Game, String>> = OnceLock::new();
    NAMES.get_or_init(|| {
        let mut names = HashMap::new();
        for ups in -MAX_UPS..=MAX_UPS {
            let arrow = if ups >= 0 { up() } else { down() };
            let mut g = integer(0);
            for _ in 0..ups.unsigned_abs() {
                g = add(g, arrow);
            }
            let arrow_name = if ups >= 0 { "up" } else { "down" };
            for n in 0..=MAX_NIMBER {
                if ups == 0 && n == 0 {
                    continue;
                }
                let mut parts: Vec<String> =
                    std::iter::repeat(arrow_name.to_string()).take(ups.unsigned_abs() as usize).collect();
                match n {
                    0 => {}
                    1 => parts.push("*".into()),
                    n => parts.push(format!("*{n}")),
                }
                names.entry(add(g, nimber(n))).or_insert_with(|| parts.join(" + "));
            }
        }
        names
    })
}
