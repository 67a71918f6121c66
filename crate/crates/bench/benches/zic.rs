use criterion::{black_box, criterion_group, criterion_main, Criterion};
use zic_bench::{compositum_corner, exhausting_ulcp, membership_queries, stabilizer};
use zic_core::presentation::{mihailova, samples};
use zic_core::reductions::decide_membership_batch;
use zic_core::schottky::{hyperbolicity_scan, SchottkyPair};
use zic_core::search::{bfs_search, Predicate, DEFAULT_BUDGET};

fn scans(c: &mut Criterion) {
    let pair = SchottkyPair::canonical();
    c.bench_function("hyperbolicity_scan depth 6", |b| {
        b.iter(|| hyperbolicity_scan(&pair, black_box(6)))
    });
}

fn searches(c: &mut Criterion) {
    let stab = stabilizer();
    c.bench_function("stabilizer search depth 3", |b| {
        b.iter(|| {
            bfs_search(
                &stab,
                Predicate::NonidentityFixesV,
                black_box(3),
                DEFAULT_BUDGET,
            )
            .unwrap()
        })
    });
    let ext = exhausting_ulcp();
    c.bench_function("external search exhausted depth 4", |b| {
        b.iter(|| bfs_search(&ext, Predicate::MapsVIntoH, black_box(4), DEFAULT_BUDGET).unwrap())
    });
    let corner = compositum_corner();
    c.bench_function("compositum corner search depth 2", |b| {
        b.iter(|| {
            bfs_search(
                &corner,
                Predicate::NonidentityCornerZero,
                black_box(2),
                DEFAULT_BUDGET,
            )
            .unwrap()
        })
    });
}

fn membership(c: &mut Criterion) {
    let pair = SchottkyPair::canonical();
    let p = samples::sample("z2-star-z").unwrap();
    let x = mihailova(&p, 2).unwrap().generators().to_vec();
    let queries = membership_queries();
    c.bench_function("membership batch z2-star-z", |b| {
        b.iter(|| decide_membership_batch(&x, black_box(&queries), &pair, DEFAULT_BUDGET).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = scans, searches, membership
}
criterion_main!(benches);
