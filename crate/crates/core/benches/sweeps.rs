//! Sequential against parallel execution for the main sweep workloads.
//!
//! Without the `parallel` feature both arms run sequentially.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use ringlab::identities::{Mode, SweepContext, Theorem};
use ringlab::inverses::InverseTable;
use ringlab::suite::matrix_sample_check;
use ringlab::{Execution, FiniteRing};

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn inverse_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("inverse_table");
    for ring in ["M2(Z3)", "M2(Z4)"] {
        let r = FiniteRing::parse(ring).unwrap();
        for (name, exec) in MODES {
            group.bench_with_input(BenchmarkId::new(name, ring), &r, |b, r| {
                b.iter(|| InverseTable::build(black_box(r), exec).unwrap())
            });
        }
    }
    group.finish();
}

fn theorem_sweeps(c: &mut Criterion) {
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    let cases = [
        ("M2(Z2)", Theorem::Cline),
        ("T2(Z3)", Theorem::Jacobson),
        ("M2(Z3)", Theorem::Equiv),
    ];
    for (ring, theorem) in cases {
        let r = FiniteRing::parse(ring).unwrap();
        for (name, exec) in MODES {
            let ctx = SweepContext::new(&r, exec).unwrap();
            group.bench_function(BenchmarkId::new(name, format!("{theorem} {ring}")), |b| {
                b.iter(|| theorem.run(black_box(&ctx), Mode::Exhaustive).unwrap())
            });
        }
    }
    group.finish();
}

fn matrices(c: &mut Criterion) {
    let mut group = c.benchmark_group("rational_matrices");
    group.sample_size(10);
    for (name, exec) in MODES {
        group.bench_function(name, |b| {
            b.iter(|| matrix_sample_check(black_box(50), 1, exec))
        });
    }
    group.finish();
}

criterion_group!(benches, inverse_table, theorem_sweeps, matrices);
criterion_main!(benches);
