use clawcolor::strong_color;
use clawcolor_bench::{expanded_prisms, random_graphs};
use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion, Throughput};

fn expanded(c: &mut Criterion) {
    let mut group = c.benchmark_group("expanded_prism");
    group.sample_size(10);
    for (m, g) in expanded_prisms(&[1_000, 4_000, 16_000, 64_000]) {
        group.throughput(Throughput::Elements(g.m() as u64));
        group.bench_with_input(BenchmarkId::from_parameter(m), &g, |b, g| {
            b.iter(|| strong_color(g).unwrap())
        });
    }
    group.finish();
}

fn random(c: &mut Criterion) {
    let graphs = random_graphs(300, 50);
    c.bench_function("random_300_x50", |b| {
        b.iter(|| {
            for g in &graphs {
                strong_color(g).unwrap();
            }
        })
    });
}

criterion_group!(benches, expanded, random);
criterion_main!(benches);
