use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use bimon::bar::check_bar_suite;
use bimon::instances::{FiniteSets, Wedge};
use bimon::laws::check_bimonoidal_laws;
use bimon::rig::FiniteAbelianGroup;
use bimon::{CheckConfig, Exec, SampleSpec};

fn config(exec: Exec) -> CheckConfig {
    CheckConfig::new(SampleSpec::new(3, 2, 200, 42)).with_exec(exec)
}

fn executors(c: &mut Criterion) {
    let wedge = Wedge::new(FiniteAbelianGroup::cyclic(2));
    let mut group = c.benchmark_group("suites");
    group.sample_size(10);
    for (label, exec) in [("sequential", Exec::Sequential), ("parallel", Exec::Parallel)] {
        let cfg = config(exec);
        group.bench_with_input(BenchmarkId::new("bimonoidal/finite-sets", label), &cfg, |b, cfg| {
            b.iter(|| check_bimonoidal_laws(&FiniteSets, cfg))
        });
        group.bench_with_input(BenchmarkId::new("bar/wedge:2", label), &cfg, |b, cfg| {
            b.iter(|| check_bar_suite(&wedge, cfg))
        });
    }
    group.finish();
}

criterion_group!(benches, executors);
criterion_main!(benches);
