use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use partword::graphs::build;
use partword::graycode::gray3;
use partword::words::Dim;

fn bench_build(c: &mut Criterion) {
    let binary = Dim::new(1).unwrap();
    c.bench_function("build_d1_n30", |b| b.iter(|| build(binary, black_box(30), true).unwrap().edge_count()));
    c.bench_function("report_d1_n20", |b| {
        let g = build(binary, 20, true).unwrap();
        b.iter(|| black_box(&g).structure_report())
    });
}

fn bench_gray3(c: &mut Criterion) {
    let plane = Dim::new(2).unwrap();
    c.bench_function("gray3_d2_n12", |b| b.iter(|| gray3(plane, black_box(12)).unwrap().sequence().len()));
}

criterion_group!(benches, bench_build, bench_gray3);
criterion_main!(benches);
