use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use cuspfam::cuspidal::{leaf_poset, marked_families, rigid_modules, RigidMode};
use cuspfam::exactalg::{rat, CherednikParameter, CoxeterGroup};
use cuspfam::families::{cm_families, lusztig_families, Method};

fn type_b_param(c1: i64) -> CherednikParameter {
    CherednikParameter::B { c1: rat(c1), kappa: rat(1) }
}

fn type_b_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("type_b_families");
    for n in [4usize, 6, 8] {
        let g = CoxeterGroup::B(n);
        let p = type_b_param(1);
        group.bench_with_input(BenchmarkId::new("cm", n), &n, |bench, _| {
            bench.iter(|| cm_families(black_box(&g), black_box(&p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("lusztig", n), &n, |bench, _| {
            bench.iter(|| lusztig_families(black_box(&g), black_box(&p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("marked_cm", n), &n, |bench, _| {
            bench.iter(|| marked_families(black_box(&g), black_box(&p), Method::CalogeroMoser).unwrap())
        });
    }
    group.finish();
}

fn dihedral_families(c: &mut Criterion) {
    let mut group = c.benchmark_group("dihedral_families");
    for m in [6usize, 10, 16] {
        let g = CoxeterGroup::I2(m);
        let p = CherednikParameter::I2 { a: rat(1), b: rat(2) };
        group.bench_with_input(BenchmarkId::new("cm", m), &m, |bench, _| {
            bench.iter(|| cm_families(black_box(&g), black_box(&p)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("lusztig", m), &m, |bench, _| {
            bench.iter(|| lusztig_families(black_box(&g), black_box(&p)).unwrap())
        });
    }
    group.finish();
}

fn rigid_modes(c: &mut Criterion) {
    let mut group = c.benchmark_group("rigid");
    let cases = [
        ("B4", CoxeterGroup::B(4), type_b_param(1)),
        ("I2(8)", CoxeterGroup::I2(8), CherednikParameter::I2 { a: rat(1), b: rat(1) }),
    ];
    for (name, g, p) in &cases {
        for mode in [RigidMode::Closed, RigidMode::Oracle] {
            group.bench_function(BenchmarkId::new(mode.to_string(), name), |bench| {
                bench.iter(|| rigid_modules(black_box(g), black_box(p), mode).unwrap())
            });
        }
    }
    group.finish();
}

fn leaves(c: &mut Criterion) {
    let g = CoxeterGroup::B(8);
    let p = type_b_param(1);
    c.bench_function("leaves_b8", |bench| bench.iter(|| leaf_poset(black_box(&g), black_box(&p)).unwrap()));
}

criterion_group!(benches, type_b_families, dihedral_families, rigid_modes, leaves);
criterion_main!(benches);
