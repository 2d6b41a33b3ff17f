use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use diplace_bench::random_graphs;
use diplace_core::census::{enumerate, verify_atlas};
use diplace_core::expr::parse_value;
use diplace_core::fixtures::{fig1_left, fig2};
use diplace_core::synth::Synthesizer;
use diplace_core::value::{clear_memo, values_born_by_day};

fn evaluation(c: &mut Criterion) {
    let fig1 = fig1_left();
    let fig2 = fig2();
    c.bench_function("eval fig1 left", |b| b.iter(|| black_box(&fig1).value()));
    c.bench_function("eval fig2", |b| b.iter(|| black_box(&fig2).value()));
    let mut group = c.benchmark_group("eval random");
    for n in [8, 12, 16] {
        let graphs = random_graphs(8, n, 0.2, n as u64);
        group.bench_with_input(BenchmarkId::from_parameter(n), &graphs, |b, gs| {
            b.iter(|| gs.iter().map(|g| g.value()).count())
        });
    }
    group.finish();
}

fn atlas(c: &mut Criterion) {
    c.bench_function("atlas verify", |b| b.iter(|| verify_atlas().unwrap().len()));
}

fn synthesis(c: &mut Criterion) {
    let day2 = values_born_by_day(2);
    let mut group = c.benchmark_group("synthesis");
    group.sample_size(10);
    group.bench_function("day two", |b| {
        b.iter(|| {
            let mut s = Synthesizer::new();
            day2.iter().map(|&x| s.synthesize(x).unwrap().order()).sum::<usize>()
        })
    });
    let hot = parse_value("{2|{1|*,0}}").unwrap();
    group.bench_function("{2|{1|*,0}}", |b| {
        b.iter(|| {
            clear_memo();
            Synthesizer::new().synthesize(hot).unwrap().order()
        })
    });
    group.finish();
}

fn census(c: &mut Criterion) {
    let mut group = c.benchmark_group("census");
    group.sample_size(10);
    for n in [3, 4] {
        group.bench_with_input(BenchmarkId::from_parameter(n), &n, |b, &n| b.iter(|| enumerate(n, 1).unwrap().len()));
    }
    group.finish();
}

criterion_group!(benches, evaluation, atlas, synthesis, census);
criterion_main!(benches);
