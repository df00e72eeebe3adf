use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use aograph::coloring::{chromatic_number_exact_oracle, theorem3_coloring, verify_coloring};
use aograph::domination::domination_number_exact_oracle;
use aograph::graph::materialize;
use aograph::{AOParams, SizeGuard};

fn chromatic_oracle(c: &mut Criterion) {
    let guard = SizeGuard::default();
    let mut group = c.benchmark_group("chromatic_oracle");
    for &(k, d, s) in &[(2usize, 3usize, 1usize), (4, 2, 2), (3, 3, 2), (5, 2, 2)] {
        let p = AOParams::new(k, d, s).unwrap();
        let g = materialize(&p, &guard).unwrap();
        let label = format!("k{}d{}s{}", k, d, s);
        group.bench_with_input(BenchmarkId::from_parameter(&label), &g, |b, g| {
            b.iter(|| chromatic_number_exact_oracle(g, 64).unwrap())
        });
    }
    group.finish();
}

fn domination_oracle(c: &mut Criterion) {
    let guard = SizeGuard::default();
    let mut group = c.benchmark_group("domination_oracle");
    for &(k, d, s) in &[(2usize, 2usize, 1usize), (3, 2, 2), (4, 2, 2), (3, 3, 2)] {
        let p = AOParams::new(k, d, s).unwrap();
        let g = materialize(&p, &guard).unwrap();
        let label = format!("k{}d{}s{}", k, d, s);
        group.bench_with_input(BenchmarkId::from_parameter(&label), &g, |b, g| {
            b.iter(|| domination_number_exact_oracle(g, 32).unwrap())
        });
    }
    group.finish();
}

fn coloring_construction(c: &mut Criterion) {
    let guard = SizeGuard::default();
    let p = AOParams::new(6, 2, 3).unwrap();
    c.bench_function("theorem3_color_and_verify_k6d2s3", |b| {
        b.iter(|| {
            let coloring = theorem3_coloring(&p, &guard).unwrap();
            assert!(verify_coloring(&coloring, &guard).unwrap().is_pass());
        })
    });
}

criterion_group!(benches, chromatic_oracle, domination_oracle, coloring_construction);
criterion_main!(benches);
