use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use simsun_core::bijection::psi_forward;
use simsun_core::rootcheck::certify_rz;
use simsun_core::series::{build, SeriesName};
use simsun_core::simsun::{distribution, for_each_simsun_first, gen_simsun_first};
use simsun_core::{Class, Engine, Family, Stat};

fn triangles(c: &mut Criterion) {
    let mut g = c.benchmark_group("triangle");
    for family in [Family::S, Family::T, Family::Sxq, Family::Sxyq] {
        g.bench_with_input(BenchmarkId::from_parameter(family), &family, |b, &f| {
            b.iter(|| Engine::new().triangle(f, black_box(30)).unwrap())
        });
    }
    g.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut g = c.benchmark_group("enumerate");
    g.sample_size(10);
    for n in [8, 10] {
        g.bench_with_input(BenchmarkId::new("simsun1", n), &n, |b, &n| {
            b.iter(|| {
                let mut count = 0u64;
                for_each_simsun_first(n, |_| count += 1);
                count
            })
        });
        g.bench_with_input(BenchmarkId::new("des-distribution", n), &n, |b, &n| {
            b.iter(|| distribution(Class::Rs, &[Stat::Des], n).unwrap())
        });
        g.bench_with_input(BenchmarkId::new("exc-cyc-distribution", n), &n, |b, &n| {
            b.iter(|| distribution(Class::Ss, &[Stat::Exc, Stat::Cyc], n).unwrap())
        });
    }
    g.finish();
}

fn bijections(c: &mut Criterion) {
    let perms = gen_simsun_first(8);
    c.bench_function("psi/all of RS_8", |b| {
        b.iter(|| {
            for p in &perms {
                black_box(psi_forward(p).unwrap());
            }
        })
    });
}

fn roots(c: &mut Criterion) {
    let mut g = c.benchmark_group("certify_rz");
    let t = Engine::new().triangle(Family::S, 25).unwrap();
    for n in [10, 18, 25] {
        let p = t.row(n).unwrap().clone();
        g.bench_with_input(BenchmarkId::new("S", n), &p, |b, p| {
            b.iter(|| certify_rz(p).unwrap())
        });
    }
    g.finish();
}

fn series(c: &mut Criterion) {
    let mut g = c.benchmark_group("series");
    for name in [SeriesName::Sxz, SeriesName::Sxqz, SeriesName::Springer] {
        g.bench_function(name.name(), |b| {
            b.iter(|| build(name, black_box(16)).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, triangles, enumeration, bijections, roots, series);
criterion_main!(benches);
