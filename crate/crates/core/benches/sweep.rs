use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use cgrid_ham::grid::ShapeClass;
use cgrid_ham::oracle::{differential_sweep_with, OracleConfig, SweepBounds, SweepOptions};

// `jobs: Some(1)` takes the sequential path even when the `parallel`
// feature is on, so one run compares both.
fn sweeps(c: &mut Criterion) {
    let mut g = c.benchmark_group("differential_sweep");
    g.sample_size(10);
    let cases = [
        ("rect", ShapeClass::Rect, SweepBounds::up_to(5, 5)),
        ("l", ShapeClass::LShape, SweepBounds::up_to(5, 5)),
        ("c", ShapeClass::CShape, SweepBounds::up_to(6, 4).with_min(3, 2)),
    ];
    for (name, class, bounds) in cases {
        for (mode, jobs) in [("sequential", Some(1)), ("parallel", None)] {
            let opts = SweepOptions { oracle: OracleConfig::default(), jobs };
            g.bench_with_input(BenchmarkId::new(mode, name), &bounds, |b, &bounds| {
                b.iter(|| differential_sweep_with(class, bounds, &opts))
            });
        }
    }
    g.finish();
}

criterion_group!(benches, sweeps);
criterion_main!(benches);
