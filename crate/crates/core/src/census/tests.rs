use std::collections::HashMap;
use std::sync::OnceLock;

use super::*;
use crate::digraph::io::from_json_value;
use crate::value::{integer, make_game, nimber, number_game, star, Dyadic};

fn four() -> &'static Census {
    static C: OnceLock<Census> = OnceLock::new();
    C.get_or_init(|| enumerate(4, 4).unwrap())
}

/// Builds every graph on `n` vertices through the public digraph API and
/// evaluates it, keeping per value the smallest size and the number of
/// graphs. Colour and arc choices are drawn from one counter, arcs in
/// row-major order.
fn brute_force(max_n: usize) -> HashMap<Game, (usize, u64)> {
    let mut out: HashMap<Game, (usize, u64)> = HashMap::new();
    for n in 0..=max_n {
        let pairs: Vec<(usize, usize)> =
            (0..n).flat_map(|u| (0..n).filter(move |&w| w != u).map(move |w| (u, w))).collect();
        for colors in 0u32..1 << n {
            for arcs in 0u32..1 << pairs.len() {
                let mut g = DigraphGame::new();
                for v in 0..n {
                    let c = if colors >> v & 1 == 1 { Color::Red } else { Color::Blue };
                    g.add_vertex(format!("v{v}"), c).unwrap();
                }
                for (i, &(u, w)) in pairs.iter().enumerate() {
                    if arcs >> i & 1 == 1 {
                        g.add_arc(u, w).unwrap();
                    }
                }
                let e = out.entry(g.value()).or_insert((n, 0));
                e.0 = e.0.min(n);
                e.1 += 1;
            }
        }
    }
    out
}

#[test]
fn matches_brute_force() {
    let census = enumerate(3, 2).unwrap();
    let oracle = brute_force(3);
    assert_eq!(census.len(), oracle.len());
    for r in &census.records {
        assert_eq!(oracle[&r.value], (r.min_vertices, r.occurrences), "{}", pretty(r.value));
    }
}

#[test]
fn graph_counts() {
    assert_eq!((0..=4).map(graphs_on).collect::<Vec<_>>(), vec![1, 2, 16, 512, 65536]);
    let census = four();
    assert_eq!(census.graphs, 66_067);
    assert_eq!(census.records.iter().map(|r| r.occurrences).sum::<u64>(), census.graphs);
}

#[test]
fn tiny_censuses() {
    let one = enumerate(1, 1).unwrap();
    let values: Vec<Game> = one.records.iter().map(|r| r.value).collect();
    assert_eq!(values.len(), 3);
    for (x, f) in [(Game::ZERO, 0), (integer(1), 1), (integer(-1), 1)] {
        assert_eq!(f_of(x, &one), Some(f));
    }
    let two = enumerate(2, 1).unwrap();
    assert_eq!(f_of(star(), &two), Some(2));
    assert_eq!(f_of(number_game(Dyadic::new(1, 1)), &two), Some(2));
    assert_eq!(f_of(nimber(2), &two), None);
}

#[test]
fn cap() {
    assert_eq!(enumerate(6, 1).unwrap_err(), CensusError::CapExceeded { requested: 6, cap: 5 });
}

#[test]
fn witnesses_are_sound_and_least() {
    let census = four();
    for r in &census.records {
        assert_eq!(r.witness.value(), r.value);
        assert_eq!(r.witness.order(), r.min_vertices);
        assert_eq!(r.value_key, bracket(r.value));
    }
    // * on two vertices needs both arcs; blue comes first.
    let w = &census.get(star()).unwrap().witness;
    assert_eq!(w.colors(), &[Color::Blue, Color::Red]);
    assert_eq!(w.arcs().collect::<Vec<_>>(), vec![(0, 1), (1, 0)]);
    // 1/2 is the least arc set after the colours: only 1 -> 2.
    let w = &census.get(number_game(Dyadic::new(1, 1))).unwrap().witness;
    assert_eq!(w.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
}

#[test]
fn decode_layout() {
    // Two vertices: colour bits then arcs (0,1), (1,0).
    let g = decode(2, 0b01_10);
    assert_eq!(g.colors(), &[Color::Blue, Color::Red]);
    assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
    let layout = Layout { n: 3 };
    let (k, sub) = layout.induced(0b101_000010, 0b101);
    assert_eq!(k, 2);
    assert_eq!(decode(k, sub).colors(), &[Color::Red, Color::Red]);
    assert_eq!(decode(k, sub).arcs().collect::<Vec<_>>(), vec![(1, 0)]);
}

#[test]
fn small_rows_of_the_table() {
    let census = four();
    assert_eq!(big_F(0, census), Ok(0));
    assert_eq!(big_F(1, census), Ok(2));
    assert_eq!(big_F(2, census), Ok(4));
    assert_eq!(f_of(nimber(2), census), Some(4));
    assert_eq!(f_of(make_game([integer(1)], [integer(-1)]), census), Some(4));
    assert!(matches!(big_F(3, census), Err(CensusError::IncompleteCensus { b: 3, .. })));
    let two = enumerate(2, 1).unwrap();
    match big_F(2, &two) {
        Err(CensusError::IncompleteCensus { missing, .. }) => assert!(missing.contains(&"*2".to_string())),
        other => panic!("{other:?}"),
    }
}

#[test]
fn min_vertices_never_grow_with_the_cap() {
    let three = enumerate(3, 1).unwrap();
    for r in &three.records {
        assert!(f_of(r.value, four()).unwrap() <= r.min_vertices);
    }
}

#[test]
fn value_counts_respect_the_counting_bound() {
    let census = four();
    for n in 2..=4 {
        let found = BigBound::from(census.values_within(n) as u64);
        assert!(found <= bound_lemma53(n as u64), "{n}");
    }
    // On one vertex the empty graph is not paid for: 0, 1 and -1 against 2.
    assert_eq!(census.values_within(1), 3);
    assert_eq!(bound_lemma53(1), BigBound::from(2));
}

#[test]
fn day_two_closure() {
    let mut found: Vec<Game> = four().records.iter().map(|r| r.value).filter(|&g| birthday(g) <= 2).collect();
    found.sort_unstable();
    let mut day2 = values_born_by_day(2);
    day2.sort_unstable();
    assert_eq!(found, day2);
}

#[test]
fn day_three_gaps() {
    let missing = missing_day_three(four());
    assert!(!missing.is_empty());
    for &x in &missing {
        assert_eq!(birthday(x), 3);
        assert_eq!(f_of(x, four()), None);
    }
}

#[test]
fn census_json() {
    let census = enumerate(2, 1).unwrap();
    let rows: Vec<serde_json::Value> = serde_json::from_str(&census.to_json()).unwrap();
    assert_eq!(rows.len(), census.len());
    for (row, r) in rows.iter().zip(&census.records) {
        assert_eq!(row["value"], r.value_key.as_str());
        assert_eq!(row["count"], r.occurrences);
        let w = from_json_value(&row["witness"]).unwrap();
        assert_eq!(w.value(), r.value);
        assert_eq!(row["min_vertices"], w.order());
    }
}

#[test]
fn atlas() {
    let report = verify_atlas().unwrap();
    assert_eq!(report.len(), 22);
    let find = |name: &str| report.iter().find(|c| c.name == name).unwrap();
    assert_eq!((find("1/2").value.as_str(), find("1/2").vertices), ("1/2", 2));
    assert_eq!(find("up").vertices, 4);
    assert_eq!(find("{1|-1}").vertices, 4);
    // Sizes in drawing order.
    let sizes: Vec<usize> = report.iter().map(|c| c.vertices).collect();
    assert_eq!(sizes, [2, 2, 1, 1, 3, 3, 2, 2, 4, 4, 3, 3, 4, 4, 3, 3, 4, 4, 0, 2, 4, 4]);
}
