use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use lamination_core::fragmentation::Mode;
use lamination_core::harness::run_process;
use lamination_core::limit::{eval_grid, KeyedSource, LimitSpec};
use lamination_core::metrics::{boxdim_estimate, uniform_grid, TreePointCloud};

fn trials(c: &mut Criterion) {
    let mut g = c.benchmark_group("process");
    for n in [1_000u64, 10_000] {
        for mode in [Mode::SelfSimilar, Mode::Homogeneous] {
            g.bench_with_input(BenchmarkId::new(mode.name(), n), &n, |b, &n| {
                b.iter(|| run_process(mode, n, 1, 0).unwrap())
            });
        }
    }
    g.finish();

    let st = run_process(Mode::Homogeneous, 10_000, 1, 0).unwrap();
    c.bench_function("height_function/homogeneous/10000", |b| b.iter(|| st.height_function()));
}

fn limit(c: &mut Criterion) {
    let grid = uniform_grid(4097);
    let src = KeyedSource::new(1, 0);
    let mut g = c.benchmark_group("limit_grid");
    for depth in [8u32, 12] {
        g.bench_with_input(BenchmarkId::from_parameter(depth), &depth, |b, &d| {
            b.iter(|| eval_grid(&LimitSpec::self_similar(d), &src, &grid).unwrap())
        });
    }
    g.finish();

    let z = eval_grid(&LimitSpec::self_similar(10), &src, &grid).unwrap();
    let cloud = TreePointCloud::new(z);
    c.bench_function("boxdim/4097", |b| {
        b.iter(|| boxdim_estimate(&cloud, 2f64.powi(-7), 2f64.powi(-3)).unwrap())
    });
}

criterion_group! {
    name = benches;
    config = Criterion::default().sample_size(10);
    targets = trials, limit
}
criterion_main!(benches);
