//! Compare the data-parallel lane against a single-threaded lane by pinning
//! the rayon pool width. With the `parallel` feature disabled the two lanes
//! coincide; with it enabled (default) the pool-of-one lane measures the
//! sequential fallback cost.

use criterion::{criterion_group, criterion_main, Criterion};

use eightplanes::arrangement::{
    general_position_check, reference_arrangement, ArrangementData,
};
use eightplanes::plethysm::sym2_operators;

fn in_pool<T>(threads: usize, f: impl FnOnce() -> T + Send, _label: &str) -> T
where
    T: Send,
{
    #[cfg(feature = "parallel")]
    {
        rayon::ThreadPoolBuilder::new()
            .num_threads(threads)
            .build()
            .expect("pool")
            .install(f)
    }
    #[cfg(not(feature = "parallel"))]
    {
        let _ = threads;
        f()
    }
}

fn bench_general_position(c: &mut Criterion) {
    let a = reference_arrangement();
    let m = a.matrix().clone();
    let mut g = c.benchmark_group("general_position_check");
    g.bench_function("parallel", |b| {
        b.iter(|| in_pool(0, || general_position_check(std::hint::black_box(&m)), "par"))
    });
    g.bench_function("sequential", |b| {
        b.iter(|| in_pool(1, || general_position_check(std::hint::black_box(&m)), "seq"))
    });
    g.finish();
}

fn bench_pipeline(c: &mut Criterion) {
    let mut g = c.benchmark_group("basis_and_operators");
    g.sample_size(10);
    g.bench_function("parallel", |b| {
        b.iter(|| {
            in_pool(
                0,
                || {
                    let d = ArrangementData::new(reference_arrangement()).unwrap();
                    sym2_operators(&d).unwrap().len()
                },
                "par",
            )
        })
    });
    g.bench_function("sequential", |b| {
        b.iter(|| {
            in_pool(
                1,
                || {
                    let d = ArrangementData::new(reference_arrangement()).unwrap();
                    sym2_operators(&d).unwrap().len()
                },
                "seq",
            )
        })
    });
    g.finish();
}

criterion_group!(benches, bench_general_position, bench_pipeline);
criterion_main!(benches);
