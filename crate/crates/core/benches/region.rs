use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use ore_desing::odcurve::region_with;
use ore_desing::par::Execution;
use ore_desing::text::parse_operator;
use ore_desing::OreRing;

const L: &str = "-(45 + 25*x - 35*x^2 - x^3 + 2*x^4) \
    + 2*(33 - 9*x - 3*x^2 - x^3)*D \
    + (1 + x)*(23 - 20*x - x^2 + 2*x^3)*D^2";

fn region_scan(c: &mut Criterion) {
    let l = parse_operator(L, OreRing::Differential).unwrap();
    let mut group = c.benchmark_group("region");
    group.sample_size(10);
    for r_max in [8, 12] {
        for (name, exec) in [
            ("sequential", Execution::Sequential),
            ("parallel", Execution::Parallel),
        ] {
            group.bench_with_input(BenchmarkId::new(name, r_max), &r_max, |b, &r_max| {
                b.iter(|| region_with(&l, r_max, 6, exec).unwrap())
            });
        }
    }
    group.finish();
}

criterion_group!(benches, region_scan);
criterion_main!(benches);
