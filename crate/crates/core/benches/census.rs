use criterion::{criterion_group, criterion_main, Criterion};
use graphzeta::census::{run_census, CensusConfig, MethodSpec};
use graphzeta::iso::{generate_g6, Filter};
use graphzeta::Exec;

fn census(c: &mut Criterion) {
    let methods: Vec<MethodSpec> = ["A", "Z", "TTbar", "PhiADJ"]
        .iter()
        .map(|t| t.parse().unwrap())
        .collect();
    let mut group = c.benchmark_group("census-n7");
    group.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let mut cfg = CensusConfig::new(7, methods.clone());
        cfg.exec = exec;
        group.bench_function(name, |b| b.iter(|| run_census(&cfg).unwrap()));
    }
    group.finish();
}

fn generation(c: &mut Criterion) {
    let mut group = c.benchmark_group("generate-n8");
    group.sample_size(10);
    for (name, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        group.bench_function(name, |b| b.iter(|| generate_g6(8, Filter::All, None, exec)));
    }
    group.finish();
}

criterion_group!(benches, census, generation);
criterion_main!(benches);
