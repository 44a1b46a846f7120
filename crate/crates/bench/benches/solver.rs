use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ae_core::classifier::{classify, classify_rank3_linear_avoider_last};
use ae_core::harness::{gen_family, GenSpec};
use ae_core::{outcome, solve, LastPlayer};

fn solver_scaling(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve-nunchaku");
    for len in [3usize, 4, 5, 6] {
        let h = gen_family(&GenSpec::Nunchaku { len }).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(len), &h, |b, h| {
            b.iter(|| outcome(h).unwrap())
        });
    }
    group.finish();

    let mut group = c.benchmark_group("solve-cycle3u");
    for len in [3usize, 4, 5] {
        let h = gen_family(&GenSpec::Cycle3u { len }).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(len), &h, |b, h| {
            b.iter(|| outcome(h).unwrap())
        });
    }
    group.finish();

    let fig7 = gen_family(&GenSpec::Fig7).unwrap();
    c.bench_function("solve-13-vertex-enforcer-last", |b| {
        b.iter(|| solve(&fig7, LastPlayer::EnforcerLast).unwrap())
    });
}

fn classifier_vs_oracle(c: &mut Criterion) {
    let bull = gen_family(&GenSpec::Bull).unwrap();
    let sunlet = gen_family(&GenSpec::Sunlet3).unwrap();
    let board = bull.disjoint_union(&sunlet);
    c.bench_function("classify-rank2-11-vertices", |b| {
        b.iter(|| classify(&board).unwrap())
    });
    c.bench_function("oracle-rank2-11-vertices", |b| {
        b.iter(|| outcome(&board).unwrap())
    });

    let chain = gen_family(&GenSpec::Chain { len: 6 }).unwrap();
    c.bench_function("classify-rank3-chain-13-vertices", |b| {
        b.iter(|| classify_rank3_linear_avoider_last(&chain).unwrap())
    });
    c.bench_function("oracle-rank3-chain-13-vertices", |b| {
        b.iter(|| solve(&chain, LastPlayer::AvoiderLast).unwrap())
    });
}

criterion_group!(benches, solver_scaling, classifier_vs_oracle);
criterion_main!(benches);
