use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use netga_core::harness::{sweep, SweepAxis, SweepSpec};
use netga_core::{run, Execution, Function, GaConfig, Topology};

fn small_sweep() -> SweepSpec {
    let mut spec = SweepSpec::new(Function::Rastrigin, 'p', 11).unwrap();
    spec.axis = SweepAxis::ErP((0..=20).map(|i| f64::from(i) / 20.0).collect());
    spec.base.tau = 20;
    spec.snapshots = vec![10, 20];
    spec.repetitions = 2;
    spec
}

fn sweep_execution(c: &mut Criterion) {
    let spec = small_sweep();
    let mut group = c.benchmark_group("sweep");
    group.sample_size(10);
    for execution in [Execution::Sequential, Execution::Parallel] {
        group.bench_with_input(BenchmarkId::from_parameter(format!("{execution:?}")), &execution, |b, &e| {
            b.iter(|| sweep(black_box(&spec), e).unwrap())
        });
    }
    group.finish();
}

fn single_run(c: &mut Criterion) {
    let mut group = c.benchmark_group("run");
    for topology in [Topology::Complete, Topology::ErdosRenyi(0.1), Topology::BarabasiAlbert(5)] {
        let config = GaConfig { topology, seed: 3, ..GaConfig::for_function(Function::Ackley) };
        group.bench_with_input(BenchmarkId::from_parameter(topology), &config, |b, config| {
            b.iter(|| run(black_box(config)).unwrap())
        });
    }
    group.finish();
}

criterion_group!(benches, sweep_execution, single_run);
criterion_main!(benches);
