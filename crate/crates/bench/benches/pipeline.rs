use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use hfsplit_core::{
    consecutive_torus_staircase, cyclotomic, d_table, pareto_min, reproduce_paper, split_obstruction,
    surgery_complex, tensor, torus_14_15, unit_staircase, whitehead_sum_22, Convention,
};

fn polynomials(c: &mut Criterion) {
    c.bench_function("cyclotomic(105)", |b| b.iter(|| cyclotomic(black_box(105)).unwrap()));
}

fn staircases(c: &mut Criterion) {
    let (a, w) = (torus_14_15(), whitehead_sum_22());
    c.bench_function("tensor + pareto, n = 15", |b| {
        b.iter(|| pareto_min(&tensor(black_box(&a), black_box(&w)).unwrap()))
    });

    let (s, u) = (consecutive_torus_staircase(99).unwrap(), unit_staircase(148));
    c.bench_function("tensor + pareto, n = 99", |b| {
        b.iter(|| pareto_min(&tensor(black_box(&s), black_box(&u)).unwrap()))
    });
}

fn tables(c: &mut Criterion) {
    let complex = surgery_complex(15).unwrap();
    c.bench_function("d_table, N = 225", |b| {
        b.iter(|| d_table(black_box(&complex.generators), 225, Convention::Table1).unwrap())
    });

    let table = d_table(&complex.generators, 225, Convention::Table1).unwrap();
    c.bench_function("split_obstruction, p = 3, q = 5", |b| {
        b.iter(|| split_obstruction(black_box(&table), 3, 5).unwrap())
    });

    let larger = surgery_complex(35).unwrap();
    c.bench_function("d_table, N = 1225", |b| {
        b.iter(|| d_table(black_box(&larger.generators), 1225, Convention::Table1).unwrap())
    });

    c.bench_function("reproduce, end to end", |b| b.iter(|| reproduce_paper(Convention::Table1).unwrap()));
}

criterion_group!(benches, polynomials, staircases, tables);
criterion_main!(benches);
