use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

use cgrid_ham::construct::{c_family_instance, construct_path};
use cgrid_ham::grid::{ProblemInstance, Shape, Vertex};

fn c_family(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct_c_family");
    g.sample_size(10);
    for side in [66, 132, 264, 528] {
        let inst = c_family_instance(side).expect("family member");
        g.throughput(Throughput::Elements(inst.shape.size() as u64));
        g.bench_with_input(BenchmarkId::from_parameter(side), &inst, |b, inst| b.iter(|| construct_path(inst).unwrap()));
    }
    g.finish();
}

fn rectangles(c: &mut Criterion) {
    let mut g = c.benchmark_group("construct_rect");
    g.sample_size(10);
    for side in [100, 200, 400] {
        let shape = Shape::rect(side, side).unwrap();
        // Interior endpoints force separations on every level.
        let inst = ProblemInstance::new(shape, Vertex::new(side / 3, side / 2), Vertex::new(side / 2 + 1, side / 3)).unwrap();
        g.throughput(Throughput::Elements(shape.size() as u64));
        g.bench_with_input(BenchmarkId::from_parameter(side), &inst, |b, inst| b.iter(|| construct_path(inst).unwrap()));
    }
    g.finish();
}

criterion_group!(benches, c_family, rectangles);
criterion_main!(benches);
