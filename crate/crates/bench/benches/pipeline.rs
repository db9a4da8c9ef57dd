//! Criterion benchmarks for the three pipelines: exact symbolic derivation,
//! discrete surface curvature, and ball heat traces.

use criterion::{criterion_group, criterion_main, BatchSize, Criterion};

use steklov_heat::geometry::icosphere;
use steklov_heat::{heat_invariant, heat_trace, mesh_curvatures};

/// Exact derivation of `a_k`, the dominant cost of the identity gate.
fn bench_heat_invariant(c: &mut Criterion) {
    let mut group = c.benchmark_group("heat_invariant");
    group.sample_size(10);
    for (dim, k) in [(3u32, 2u32), (4, 2), (6, 2)] {
        group.bench_function(format!("dim{dim}_a{k}"), |b| {
            b.iter(|| heat_invariant(std::hint::black_box(dim), std::hint::black_box(k)).unwrap())
        });
    }
    group.finish();
}

/// Cotangent mean curvature and angle defects on subdivided icospheres.
fn bench_mesh_curvatures(c: &mut Criterion) {
    let mut group = c.benchmark_group("mesh_curvatures");
    for subdivisions in [3u32, 4, 5] {
        let mesh = icosphere(1.0, subdivisions).unwrap();
        group.bench_function(format!("icosphere_s{subdivisions}"), |b| {
            b.iter_batched(
                || mesh.clone(),
                |m| mesh_curvatures(&m).unwrap(),
                BatchSize::LargeInput,
            )
        });
    }
    group.finish();
}

/// Truncated Steklov heat trace of the unit ball near `t -> 0`.
fn bench_heat_trace(c: &mut Criterion) {
    let mut group = c.benchmark_group("heat_trace");
    for dim in [3u32, 4, 6] {
        group.bench_function(format!("ball_dim{dim}_t1e-3"), |b| {
            b.iter(|| heat_trace(std::hint::black_box(dim), std::hint::black_box(1e-3)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(
    benches,
    bench_heat_invariant,
    bench_mesh_curvatures,
    bench_heat_trace
);
criterion_main!(benches);
