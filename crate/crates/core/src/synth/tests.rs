use super::*;
use crate::digraph::VertexSet;
use crate::expr::parse_value;
use crate::fixtures::fig2;
use crate::value::{add, birthday, down, nimber, number_game, star, values_born_by_day};

fn single(color: Color) -> DigraphGame {
    let mut g = DigraphGame::new();
    g.add_vertex("v", color).unwrap();
    g
}

fn fig2_plan() -> GadgetPlan {
    GadgetPlan::with_n(
        1,
        vec![DigraphGame::new(), nimber_digraph(1)],
        vec![DigraphGame::new(), nimber_digraph(1)],
    )
}

/// Canonical values of birthday 3 with at most two options a side.
pub(crate) fn day_three_sample(count: usize) -> Vec<Game> {
    let day2 = values_born_by_day(2);
    let mut out = Vec::new();
    let mut step = 0usize;
    'outer: for i in 0..day2.len() {
        for j in 0..day2.len() {
            step += 1;
            if step % 7 != 0 {
                continue;
            }
            let lefts = vec![day2[i], day2[(i + j) % day2.len()]];
            let rights = vec![day2[j]];
            let g = canonical(make_game(lefts, rights));
            if birthday(g) == 3
                && g.left_options().len() <= 2
                && g.right_options().len() <= 2
                && !out.contains(&g)
            {
                out.push(g);
                if out.len() == count {
                    break 'outer;
                }
            }
        }
    }
    out
}

#[test]
fn fig2_gadget() {
    let plan = fig2_plan();
    let (g, layout) = gadget_with_layout(&plan);
    assert_eq!(g.order(), 10);
    assert_eq!(g.value(), nimber(2));
    assert_eq!(gadget_value_check(&plan), Ok(nimber(2)));
    assert_eq!((layout.x.len(), layout.y.len()), (1, 1));

    // Same digraph as the drawing, up to relabelling.
    let drawn = fig2();
    let names = [
        ("G2.b1", "2"),
        ("G2.r1", "1"),
        ("H2.b1", "8"),
        ("H2.r1", "7"),
        ("b1", "10"),
        ("b2", "3"),
        ("r1", "9"),
        ("r2", "6"),
        ("x1", "5"),
        ("y1", "4"),
    ];
    let perm: Vec<usize> = (0..g.order())
        .map(|v| {
            let (_, d) = names.iter().find(|(l, _)| *l == g.label(v)).unwrap();
            drawn.vertex(d).unwrap()
        })
        .collect();
    assert!(g.permute(&perm).same_structure(&drawn));
}

#[test]
fn down_gadget() {
    let plan = GadgetPlan::with_n(1, vec![nimber_digraph(1)], vec![DigraphGame::new()]);
    let g = gadget(&plan);
    assert_eq!(g.order(), 6);
    assert_eq!(g.value(), down());
}

#[test]
fn gadget_checks() {
    let plan = GadgetPlan::with_n(6, vec![single(Color::Blue)], vec![single(Color::Red)]);
    assert_eq!(gadget_value_check(&plan), Ok(make_game([integer(1)], [integer(-1)])));
    let plan = GadgetPlan::new(vec![], vec![nimber_digraph(1)]);
    assert_eq!(plan.n, 8);
    let v = gadget_value_check(&plan).unwrap();
    assert_eq!(v, canonical(make_game([integer(-1)], [integer(1), star()])));
    // The x vertices plus the blue vertex of the `*` on the right.
    assert_eq!(gadget(&plan).position().moves(Player::Left).len(), plan.n + 1);
}

#[test]
fn gadget_anatomy() {
    let plan = GadgetPlan::new(
        vec![stalk(Dyadic::new(1, 1)), nimber_digraph(2)],
        vec![single(Color::Red), DigraphGame::new()],
    );
    let (g, layout) = gadget_with_layout(&plan);
    assert_eq!(g.order(), plan.vertex_count());
    let ys: VertexSet = layout.y.iter().copied().collect();
    let xs: VertexSet = layout.x.iter().copied().collect();
    for (i, &b) in layout.b.iter().enumerate() {
        let left = g.position().delete(b).unwrap();
        assert_eq!(left.alive(), &layout.lefts[i].clone().collect::<VertexSet>());
    }
    for (j, &r) in layout.r.iter().enumerate() {
        let left = g.position().delete(r).unwrap();
        assert_eq!(left.alive(), &layout.rights[j].clone().collect::<VertexSet>());
    }
    for &x in &layout.x {
        let rest = g.position().delete(x).unwrap();
        let mut expected = xs.union(&ys);
        expected.remove(x);
        assert_eq!(rest.alive(), &expected);
    }
    for range in &layout.lefts {
        let part: VertexSet = range.clone().collect();
        for v in range.clone().filter(|&v| g.color(v) == Color::Blue) {
            let rest = g.position().delete(v).unwrap();
            let expected = part.difference(&g.closed_out(v)).union(&ys);
            assert_eq!(rest.alive(), &expected);
        }
    }
}

#[test]
fn fig2_needs_less_than_the_bound() {
    let plan = fig2_plan();
    assert!(plan.n < GadgetPlan::new(plan.lefts.clone(), plan.rights.clone()).n);
    assert_eq!(gadget_value_check(&plan), Ok(nimber(2)));
}

#[test]
fn stalks() {
    let half = stalk(Dyadic::new(1, 1));
    assert_eq!(half.colors(), &[Color::Blue, Color::Red]);
    assert!(half.has_arc(0, 1) && !half.has_arc(1, 0));
    assert_eq!(half.value(), make_game([Game::ZERO], [integer(1)]));
    let two = stalk(Dyadic::integer(2));
    assert_eq!((two.order(), two.count_color(Color::Blue)), (2, 2));
    assert_eq!(two.value(), integer(2));
    assert!(stalk(Dyadic::ZERO).is_empty());
    assert_eq!(sign_expansion(Dyadic::new(-3, 2)), vec![false, true, false]);
    for exp in 0..=5u32 {
        let bound = 4i64 << exp;
        for num in -bound..=bound {
            let x = Dyadic::new(num, exp);
            assert_eq!(stalk(x).value(), number_game(x), "{x}");
        }
    }
}

#[test]
fn nimber_digraphs() {
    assert!(nimber_digraph(0).is_empty());
    let s = nimber_digraph(1);
    assert_eq!(s.order(), 2);
    assert!(s.has_arc(0, 1) && s.has_arc(1, 0));
    for n in 0..=5 {
        let g = nimber_digraph(n);
        assert_eq!(g.order(), 2 * n);
        assert_eq!(g.value(), nimber(n as u32));
    }
}

#[test]
fn synthesize_small_targets() {
    assert!(synthesize(Game::ZERO).unwrap().is_empty());
    let g = synthesize(integer(-3)).unwrap();
    assert_eq!((g.order(), g.count_color(Color::Red)), (3, 3));
    let target = add(down(), star());
    assert_eq!(synthesize(target).unwrap().value(), target);
    assert_eq!(target, parse_value("{0|0,*}").unwrap());
}

#[test]
fn synthesize_day_two() {
    let mut s = Synthesizer::new();
    for x in values_born_by_day(2) {
        let g = s.synthesize(x).unwrap();
        assert_eq!(g.value(), x, "{}", pretty(x));
    }
}

#[test]
fn synthesize_day_three_sample() {
    let sample = day_three_sample(10);
    assert_eq!(sample.len(), 10);
    let mut s = Synthesizer::new();
    for x in sample {
        let g = s.synthesize(x).unwrap();
        assert_eq!(g.value(), x, "{}", pretty(x));
    }
}

#[test]
fn translation_and_negation_fallbacks() {
    let hot = parse_value("{3|2}").unwrap();
    let report = synthesize_with_trace(hot).unwrap();
    assert_eq!(report.graph.value(), hot);
    assert!(matches!(report.trace.last().unwrap().rule, Rule::Translate { shift: 3 }));
    let cold = negate(hot);
    let report = synthesize_with_trace(cold).unwrap();
    assert_eq!(report.graph.value(), cold);
    assert_eq!(report.trace.last().unwrap().rule, Rule::Negate);
    assert_eq!(report.trace.last().unwrap().depth, 0);
}
