//! Parallel vs. sequential throughput on the two heaviest bulk scans.
//!
//! Both code paths share the same deterministic scanning helpers, so the
//! only difference measured here is rayon scheduling overhead vs. speedup.
//! The runtime toggle [`tropflag::set_parallel_enabled`] flips between the
//! two without recompiling, which keeps the comparison honest: identical
//! binary, identical inputs, identical witness order.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use tropflag::gammoid::{evaluate_gammoid, GammoidInstance};
use tropflag::matroid::ValuatedMatroid;
use tropflag::{set_parallel_enabled, Rat};

/// A rank-4 valuated matroid on [8] with full support and generic
/// realizable values: the translation of the trivial uniform matroid by
/// x = (1, 2, 4, 8, 16, 32, 64, 128) assigns each basis a distinct value,
/// so the three-term checks cannot short-circuit on ties.
fn generic_uniform_4_8() -> ValuatedMatroid {
    let x: Vec<Rat> = (0..8).map(|i| Rat::from_integer(1 << i)).collect();
    ValuatedMatroid::uniform_trivial(4, 8).translate(&x).unwrap()
}

fn load_gammoid() -> GammoidInstance {
    let path = concat!(env!("CARGO_MANIFEST_DIR"), "/../../fixtures/gammoid_n8.json");
    let text = std::fs::read_to_string(path).expect("fixture readable");
    serde_json::from_str(&text).expect("fixture parses")
}

fn bench_validate_plucker(c: &mut Criterion) {
    let matroid = generic_uniform_4_8();
    let mut group = c.benchmark_group("validate_plucker_u48");
    for &par in &[false, true] {
        let name = if par { "parallel" } else { "sequential" };
        group.bench_with_input(BenchmarkId::from_parameter(name), &par, |b, &par| {
            set_parallel_enabled(par);
            b.iter(|| matroid.validate_plucker().unwrap());
        });
    }
    group.finish();
    set_parallel_enabled(true);
}

fn bench_evaluate_gammoid(c: &mut Criterion) {
    let instance = load_gammoid();
    let mut group = c.benchmark_group("evaluate_gammoid_n8");
    group.sample_size(20);
    for &par in &[false, true] {
        let name = if par { "parallel" } else { "sequential" };
        group.bench_with_input(BenchmarkId::from_parameter(name), &par, |b, &par| {
            set_parallel_enabled(par);
            b.iter(|| evaluate_gammoid(&instance.graph, &instance.sinks).unwrap());
        });
    }
    group.finish();
    set_parallel_enabled(true);
}

criterion_group!(benches, bench_validate_plucker, bench_evaluate_gammoid);
criterion_main!(benches);
