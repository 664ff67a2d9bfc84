use bell_euler_bench::alphas;
use bell_euler_core::algebra::{int, XY};
use bell_euler_core::identities::{self, Grid, IdentityId};
use bell_euler_core::sequences as seq;
use bell_euler_core::umbral::{expand_in_appell, AppellContext, YParam};
use bell_euler_core::{BivariatePoly, Rational, TruncatedSeries};
use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};

fn series_ops(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for order in [8, 16, 32] {
        let f = TruncatedSeries::<Rational>::exp_t(order);
        g.bench_with_input(BenchmarkId::new("inv", order), &f, |b, f| b.iter(|| f.inv().unwrap()));
        g.bench_with_input(BenchmarkId::new("log", order), &f, |b, f| b.iter(|| f.log().unwrap()));
        let delta = f.checked_sub(&TruncatedSeries::one(order)).unwrap();
        g.bench_with_input(BenchmarkId::new("compose", order), &delta, |b, d| {
            b.iter(|| f.compose(d).unwrap())
        });
    }
    g.finish();
}

fn sequence_tables(c: &mut Criterion) {
    let mut g = c.benchmark_group("bell_euler_table");
    for n_max in [8, 12, 16] {
        for alpha in alphas() {
            g.bench_with_input(BenchmarkId::new(format!("alpha={alpha}"), n_max), &n_max, |b, &n| {
                b.iter(|| seq::bell_euler_table(black_box(n), &alpha).unwrap())
            });
        }
    }
    g.finish();
}

fn umbral(c: &mut Criterion) {
    let q = BivariatePoly::parse("x^8 - 3/7*x^5 + 2*x - 11", &XY).unwrap();
    let ctx = AppellContext::for_degree(2, YParam::Formal, 8).unwrap();
    c.bench_function("expand_in_appell/deg8", |b| b.iter(|| expand_in_appell(black_box(&q), &ctx).unwrap()));
    c.bench_function("bell_euler_poly/n10", |b| b.iter(|| seq::bell_euler_poly(10, &int(3)).unwrap()));
}

fn verify(c: &mut Criterion) {
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    for id in [IdentityId::T3_3, IdentityId::T4_1, IdentityId::Orthogonality, IdentityId::RoundTrip] {
        let grid = Grid::default_for(id);
        g.bench_function(id.name(), |b| b.iter(|| identities::run(id, &grid)));
    }
    g.finish();
}

criterion_group!(benches, series_ops, sequence_tables, umbral, verify);
criterion_main!(benches);
