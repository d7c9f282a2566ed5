use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use std::hint::black_box;

use corkcalc_bench::{dense_matrix, symmetric_matrix};
use corkcalc_cli::scenario::{self, PieceFlavor, ScenarioOptions};
use corkcalc_core::exactlin::{form_invariants, smith_normal_form};
use corkcalc_core::handlebody::{self, homology};
use corkcalc_core::knots::torus_2q;
use corkcalc_core::swalgebra::{beta_elliptic, knot_surgery_beta, ParityConvention};

fn bench_exactlin(c: &mut Criterion) {
    let mut group = c.benchmark_group("exactlin");
    for n in [8usize, 16, 32] {
        let m = dense_matrix(n, 7, 5);
        group.bench_with_input(BenchmarkId::new("snf", n), &m, |b, m| {
            b.iter(|| smith_normal_form(black_box(m)))
        });
        let s = symmetric_matrix(n, 11, 5);
        group.bench_with_input(BenchmarkId::new("form_invariants", n), &s, |b, s| {
            b.iter(|| form_invariants(black_box(s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("determinant", n), &m, |b, m| {
            b.iter(|| m.determinant().unwrap())
        });
    }
    group.finish();
}

fn bench_handlebody(c: &mut Criterion) {
    let mut group = c.benchmark_group("handlebody");
    for p in [10i64, 30, 50] {
        let pres = handlebody::cp(p).unwrap();
        group.bench_with_input(BenchmarkId::new("homology_cp", p), &pres, |b, pres| {
            b.iter(|| homology(black_box(pres)))
        });
    }
    group.finish();
}

fn bench_swalgebra(c: &mut Criterion) {
    let mut group = c.benchmark_group("swalgebra");
    group.bench_function("beta_e10_m6", |b| {
        b.iter(|| beta_elliptic(10, 6, ParityConvention::Paper).unwrap())
    });
    let delta = torus_2q(8).unwrap();
    group.bench_function("knot_surgery_e6", |b| {
        b.iter(|| knot_surgery_beta(6, black_box(&delta), ParityConvention::Standard).unwrap())
    });
    group.finish();
}

fn bench_scenarios(c: &mut Criterion) {
    let opts = ScenarioOptions { convention: ParityConvention::Paper };
    let knots = corkcalc_cli::knot_input::parse_knots("torus:1,2,3").unwrap();
    let mut group = c.benchmark_group("scenario");
    group.sample_size(20);
    group.bench_function("disjoint_corks_2_4", |b| {
        b.iter(|| scenario::disjoint(PieceFlavor::Cork, &[2, 4], opts).unwrap())
    });
    group.bench_function("knotting_corks_n2", |b| {
        b.iter(|| scenario::knotting(PieceFlavor::Cork, 2, &knots, opts).unwrap())
    });
    group.bench_function("two_path_2_3_4", |b| {
        b.iter(|| scenario::two_path(&[2, 3, 4], opts).unwrap())
    });
    group.finish();
}

criterion_group!(benches, bench_exactlin, bench_handlebody, bench_swalgebra, bench_scenarios);
criterion_main!(benches);
