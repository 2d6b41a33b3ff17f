use std::collections::HashMap;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::*;
use crate::value::{add, as_number, canonical, integer, nimber, star, stops};

fn fidelity(spec: &ConflictSpec) {
    let g = compile(spec).unwrap();
    assert_eq!(g.order(), spec.len());
    assert_eq!(interpret(spec).unwrap(), g.literal(), "{spec:?}");
}

fn value_of(p: &RulesetPosition) -> Game {
    compile(&to_conflict(p).unwrap()).unwrap().value()
}

/// Direct play on a Domineering board, independent of the conflict encoding.
fn board_literal(board: &mut Vec<Vec<bool>>, memo: &mut HashMap<Vec<Vec<bool>>, Game>) -> Game {
    if let Some(&g) = memo.get(board) {
        return g;
    }
    let (h, w) = (board.len(), board.first().map_or(0, Vec::len));
    let mut lefts = Vec::new();
    let mut rights = Vec::new();
    for r in 0..h {
        for c in 0..w {
            if !board[r][c] {
                continue;
            }
            if r + 1 < h && board[r + 1][c] {
                board[r][c] = false;
                board[r + 1][c] = false;
                lefts.push(board_literal(board, memo));
                board[r][c] = true;
                board[r + 1][c] = true;
            }
            if c + 1 < w && board[r][c + 1] {
                board[r][c] = false;
                board[r][c + 1] = false;
                rights.push(board_literal(board, memo));
                board[r][c] = true;
                board[r][c + 1] = true;
            }
        }
    }
    let g = make_game(lefts, rights);
    memo.insert(board.clone(), g);
    g
}

/// Direct play on a green chain: taking element `k` leaves a chain of `k - 1`.
fn chain_literal(n: usize) -> Game {
    let opts: Vec<Game> = (0..n).map(chain_literal).collect();
    make_game(opts.clone(), opts)
}

fn random_spec(rng: &mut ChaCha8Rng, max_moves: usize) -> ConflictSpec {
    let n = rng.gen_range(0..=max_moves);
    let mut spec = ConflictSpec::new();
    for i in 0..n {
        let p = if rng.gen_bool(0.5) { Player::Left } else { Player::Right };
        spec.add_move(format!("m{i}"), p);
    }
    for i in 0..n {
        for j in 0..n {
            if i != j && rng.gen_bool(0.3) {
                spec.add_conflict(&format!("m{i}"), &format!("m{j}"));
            }
        }
    }
    spec
}

#[test]
fn trivial_specs() {
    assert_eq!(interpret(&ConflictSpec::new()).unwrap(), Game::ZERO);
    let mut one = ConflictSpec::new();
    one.add_move("a", Player::Left);
    let g = compile(&one).unwrap();
    assert_eq!((g.order(), g.arc_count(), g.color(0)), (1, 0, Color::Blue));
    assert_eq!(g.value(), integer(1));

    let mut pair = ConflictSpec::new();
    pair.add_move("a", Player::Left);
    pair.add_move("b", Player::Right);
    pair.add_mutual("a", "b");
    assert_eq!(interpret(&pair).unwrap(), make_game([Game::ZERO], [Game::ZERO]));
    fidelity(&pair);
}

#[test]
fn compile_drops_self_arcs() {
    let mut spec = ConflictSpec::new();
    spec.add_move("a", Player::Left);
    spec.add_move("b", Player::Right);
    spec.add_conflict("a", "a");
    spec.add_conflict("b", "a");
    let g = compile(&spec).unwrap();
    assert_eq!(g.arcs().collect::<Vec<_>>(), vec![(0, 1)]);
}

#[test]
fn invalid_specs() {
    let mut dup = ConflictSpec::new();
    dup.add_move("a", Player::Left);
    dup.add_move("a", Player::Right);
    assert!(matches!(dup.validate(), Err(ConflictError::InvalidSpec(_))));
    let mut dangling = ConflictSpec::new();
    dangling.add_move("a", Player::Left);
    dangling.add_conflict("a", "zz");
    assert!(matches!(compile(&dangling), Err(ConflictError::InvalidSpec(_))));
    assert!(matches!(
        ConflictSpec::from_json(r#"{"moves":[{"id":"a","player":"X"}]}"#),
        Err(ConflictError::InvalidSpec(_))
    ));
}

#[test]
fn json_round_trip() {
    let text = r#"{"moves":[{"id":"a","player":"L"},{"id":"b","player":"R"}],"conflicts":{"a":["b"]}}"#;
    let spec = ConflictSpec::from_json(text).unwrap();
    assert_eq!(spec.moves[1].player, Player::Right);
    assert_eq!(ConflictSpec::from_json(&spec.to_json()).unwrap(), spec);
}

#[test]
fn nim_heaps() {
    for n in 1..=4 {
        let p = RulesetPosition::Poset(PosetPosition::nim_heap(n));
        let spec = to_conflict(&p).unwrap();
        assert_eq!(spec.len(), 2 * n);
        assert_eq!(interpret(&spec).unwrap(), chain_literal(n));
        assert_eq!(value_of(&p), nimber(n as u32));
        fidelity(&spec);
    }
}

#[test]
fn two_chain_is_star_two() {
    let p = RulesetPosition::Poset(PosetPosition::nim_heap(2));
    assert_eq!(value_of(&p), canonical(chain_literal(2)));
    assert_eq!(value_of(&p), nimber(2));
}

#[test]
fn antichains() {
    for n in 1..=4 {
        let p = RulesetPosition::Poset(PosetPosition::antichain(n));
        let expected = (0..n).fold(Game::ZERO, |acc, _| add(acc, star()));
        assert_eq!(value_of(&p), expected);
    }
}

#[test]
fn coloured_posets() {
    let text = r#"{"elements":[{"id":"a","color":"blue"},{"id":"b","color":"red"},{"id":"c","color":"green"}],
        "covers":[["a","b"],["b","c"]]}"#;
    let p = parse_position(Ruleset::Poset, text).unwrap();
    let spec = to_conflict(&p).unwrap();
    assert_eq!(spec.len(), 4);
    // Playing a clears everything; b clears b and c; c only itself.
    assert_eq!(spec.conflicts["c:L"].len(), 4);
    fidelity(&spec);

    let cyclic = r#"{"elements":[{"id":"a","color":"blue"},{"id":"b","color":"red"}],"covers":[["a","b"],["b","a"]]}"#;
    let p = parse_position(Ruleset::Poset, cyclic).unwrap();
    assert!(matches!(to_conflict(&p), Err(ConflictError::InvalidPosition(_))));
}

#[test]
fn domineering_boards() {
    let one_by_two = RulesetPosition::Domineering(DomineeringPosition::empty(1, 2));
    assert_eq!(value_of(&one_by_two), integer(1));
    let two_by_two = RulesetPosition::Domineering(DomineeringPosition::empty(2, 2));
    let spec = to_conflict(&two_by_two).unwrap();
    assert_eq!(spec.len(), 4);
    assert_eq!(value_of(&two_by_two), make_game([integer(1)], [integer(-1)]));
    for (w, h) in [(1, 2), (2, 2), (2, 3), (3, 2), (3, 3)] {
        let pos = DomineeringPosition::empty(w, h);
        let mut board = vec![vec![true; w]; h];
        let direct = board_literal(&mut board, &mut HashMap::new());
        let spec = to_conflict(&RulesetPosition::Domineering(pos)).unwrap();
        assert_eq!(interpret(&spec).unwrap(), direct, "{w}x{h}");
        fidelity(&spec);
    }
}

#[test]
fn domineering_with_holes() {
    let p = parse_position(Ruleset::Domineering, r##"{"rows":["..","#."]}"##).unwrap();
    let spec = to_conflict(&p).unwrap();
    let ids: Vec<&str> = spec.moves.iter().map(|m| m.id.as_str()).collect();
    assert_eq!(ids, vec!["r0c0:H", "r0c1:V"]);
    let mut board = vec![vec![true, true], vec![false, true]];
    assert_eq!(interpret(&spec).unwrap(), board_literal(&mut board, &mut HashMap::new()));
    let ragged = parse_position(Ruleset::Domineering, r#"{"rows":["..","."]}"#).unwrap();
    assert!(to_conflict(&ragged).is_err());
}

#[test]
fn node_kayles_paths() {
    for n in 2..=4 {
        let spec = to_conflict(&RulesetPosition::NodeKayles(GraphPosition::path(n))).unwrap();
        assert_eq!(spec.len(), 2 * n);
        fidelity(&spec);
    }
    // The middle vertex empties the path; an end leaves a single vertex.
    let p3 = RulesetPosition::NodeKayles(GraphPosition::path(3));
    assert_eq!(value_of(&p3), nimber(2));
    let partisan = r#"{"vertices":[{"id":"a","eligible":"L"},{"id":"b","eligible":"R"}],"edges":[["a","b"]]}"#;
    let p = parse_position(Ruleset::NodeKayles, partisan).unwrap();
    assert_eq!(value_of(&p), make_game([Game::ZERO], [Game::ZERO]));
}

#[test]
fn col_values_are_numbers_or_number_star() {
    for n in [2, 3] {
        let p = RulesetPosition::Col(GraphPosition::path(n));
        let spec = to_conflict(&p).unwrap();
        fidelity(&spec);
        let v = value_of(&p);
        let (l, r) = stops(v);
        assert_eq!(l, r);
        let x = as_number(v).map(|_| v).unwrap_or_else(|| add(v, star()));
        assert!(as_number(x).is_some(), "{v:?}");
    }
}

#[test]
fn bad_graph_positions() {
    let loop_edge = r#"{"vertices":[{"id":"a"}],"edges":[["a","a"]]}"#;
    let p = parse_position(Ruleset::Col, loop_edge).unwrap();
    assert!(matches!(to_conflict(&p), Err(ConflictError::InvalidPosition(_))));
    let repeated = r#"{"vertices":[{"id":"a"},{"id":"b"}],"edges":[["a","b"],["b","a"]]}"#;
    let p = parse_position(Ruleset::NodeKayles, repeated).unwrap();
    assert!(to_conflict(&p).is_err());
    assert!(parse_position(Ruleset::Col, "[").is_err());
}

#[test]
fn random_specs_match_their_digraphs() {
    let mut rng = ChaCha8Rng::seed_from_u64(31);
    for _ in 0..20 {
        fidelity(&random_spec(&mut rng, 6));
    }
}
