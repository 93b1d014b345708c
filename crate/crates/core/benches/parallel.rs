use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use symprod::classifier::{table, GridRanges};
use symprod::macdonald::MacdonaldRing;
use symprod::tensor::invariant_dim_with;
use symprod::Execution;

const MODES: [(&str, Execution); 2] = [
    ("sequential", Execution::Sequential),
    ("parallel", Execution::Parallel),
];

fn projector_rank(c: &mut Criterion) {
    let mut group = c.benchmark_group("invariant_dim");
    group.sample_size(10);
    for (g, n, q) in [(1, 4, 4), (2, 3, 3), (3, 2, 2), (2, 4, 4), (3, 4, 4)] {
        for (label, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(label, format!("g{g}n{n}q{q}")),
                &exec,
                |b, &exec| {
                    b.iter(|| invariant_dim_with(black_box(g), black_box(n), q, exec).unwrap())
                },
            );
        }
    }
    group.finish();
}

fn macdonald_span(c: &mut Criterion) {
    let mut group = c.benchmark_group("span_dim");
    group.sample_size(10);
    for (g, n, q) in [(2, 3, 3), (3, 2, 2), (1, 4, 4), (3, 4, 4)] {
        let ring = MacdonaldRing::new(g, n).unwrap();
        for (label, exec) in MODES {
            group.bench_with_input(
                BenchmarkId::new(label, format!("g{g}n{n}q{q}")),
                &exec,
                |b, &exec| b.iter(|| ring.span_dim(black_box(q), exec).unwrap()),
            );
        }
    }
    group.finish();
}

fn report_grid(c: &mut Criterion) {
    let ranges = GridRanges {
        g: 0..=4,
        k: 1..=4,
        n: 2..=5,
        euclidean: 0..=1,
    };
    let mut group = c.benchmark_group("table");
    for (label, exec) in MODES {
        group.bench_function(label, |b| {
            b.iter(|| table(black_box(&ranges), exec).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, projector_rank, macdonald_span, report_grid);
criterion_main!(benches);
