use std::hint::black_box;

use biorder_bench::{corpus_records, deep_commutators, matrices, words};
use biorder_core::exactalg::{factor_over_q, sturm_count, RootInterval};
use biorder_core::lcs::lcs_action;
use biorder_core::magnus::{compare, lowest_term};
use biorder_core::verdict::analyze;
use criterion::{criterion_group, criterion_main, Criterion};

fn pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("analyze");
    for k in corpus_records() {
        g.bench_function(k.name.clone(), |b| {
            b.iter(|| analyze(black_box(&k), 1).unwrap())
        });
    }
    g.finish();

    let six_two = corpus_records()
        .into_iter()
        .find(|k| k.name == "6_2")
        .unwrap();
    c.bench_function("lcs_action/6_2/level1", |b| {
        b.iter(|| lcs_action(black_box(&six_two.phi), 2).unwrap())
    });
}

fn algebra(c: &mut Criterion) {
    let ms = matrices(1, 32, 8);
    c.bench_function("char_poly/8x8", |b| {
        b.iter(|| {
            for m in &ms {
                black_box(m.char_poly());
            }
        })
    });
    let polys: Vec<_> = ms.iter().map(|m| m.char_poly()).collect();
    c.bench_function("factor_over_q/deg8", |b| {
        b.iter(|| {
            for p in &polys {
                black_box(factor_over_q(p).unwrap());
            }
        })
    });
    let squarefree: Vec<_> = polys.iter().map(|p| factor_over_q(p).unwrap()).collect();
    c.bench_function("sturm_count/factors", |b| {
        b.iter(|| {
            squarefree
                .iter()
                .flat_map(|r| r.factors.iter())
                .map(|f| sturm_count(&f.poly, &RootInterval::All).unwrap())
                .sum::<usize>()
        })
    });
}

fn magnus(c: &mut Criterion) {
    let ws = words(2, 256, 2, 20);
    c.bench_function("compare/len20", |b| {
        b.iter(|| {
            for p in ws.windows(2) {
                black_box(compare(&p[0], &p[1]).unwrap());
            }
        })
    });
    let deep = deep_commutators(3, 64, 4);
    c.bench_function("lowest_term/depth4_commutators", |b| {
        b.iter(|| {
            deep.iter()
                .map(|w| lowest_term(w).unwrap().degree)
                .sum::<usize>()
        })
    });
}

criterion_group!(benches, pipeline, algebra, magnus);
criterion_main!(benches);
