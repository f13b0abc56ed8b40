//! Compares the data-parallel inner loops against sequential execution.
//!
//! With the default `parallel` feature the same workload runs once inside a
//! one-thread rayon pool and once on the default pool; building with
//! `--no-default-features` benches the rayon-free sequential fallback under
//! the same benchmark names, so criterion can compare across runs.

use criterion::{criterion_group, criterion_main, Criterion};

use pptope_core::enumeration::enumerate_ppts;
use pptope_core::polytope::{brute_force_rays, check_validity, make_f, realize_polytope, FScheme};
use pptope_core::rigidity::Normalization;
use pptope_core::PointSet;

fn convex_gon(n: usize) -> PointSet {
    let coords: Vec<(i64, i64)> = (0..n as i64).map(|i| (i, i * i)).collect();
    PointSet::from_ints(&coords).unwrap()
}

fn with_modes<F>(c: &mut Criterion, name: &str, sample_size: usize, f: F)
where
    F: Fn() + Sync,
{
    let mut group = c.benchmark_group(name);
    group.sample_size(sample_size);
    #[cfg(feature = "parallel")]
    {
        let single = rayon::ThreadPoolBuilder::new()
            .num_threads(1)
            .build()
            .expect("pool");
        group.bench_function("one-thread", |b| b.iter(|| single.install(&f)));
        group.bench_function("default-pool", |b| b.iter(&f));
    }
    #[cfg(not(feature = "parallel"))]
    group.bench_function("sequential-fallback", |b| b.iter(&f));
    group.finish();
}

fn bench_validity(c: &mut Criterion) {
    let ps = PointSet::from_ints(&[
        (0, 0),
        (3, -2),
        (7, -1),
        (9, 3),
        (6, 7),
        (1, 6),
        (4, 2),
        (5, 3),
    ])
    .unwrap();
    let f = make_f(&ps, &FScheme::det_product_centroid(&ps)).unwrap();
    with_modes(c, "check_validity_n8", 20, || {
        let report = check_validity(&ps, &f).unwrap();
        assert!(report.valid);
    });
}

fn bench_enumeration(c: &mut Criterion) {
    let ps = convex_gon(7);
    with_modes(c, "enumerate_ppts_convex7", 10, || {
        let fg = enumerate_ppts(&ps).unwrap();
        assert_eq!(fg.len(), 42);
    });
}

fn bench_realize(c: &mut Criterion) {
    let ps = convex_gon(6);
    let f = make_f(&ps, &FScheme::det_product_centroid(&ps)).unwrap();
    let norm = Normalization::default_for(&ps);
    with_modes(c, "realize_polytope_hexagon", 10, || {
        let poly = realize_polytope(&ps, &f, &norm).unwrap();
        assert_eq!(poly.vertices.len(), 14);
    });
}

fn bench_ray_oracle(c: &mut Criterion) {
    let ps = PointSet::from_ints(&[(0, 0), (10, 0), (10, 10), (0, 10), (4, 3)]).unwrap();
    let norm = Normalization::default_for(&ps);
    with_modes(c, "brute_force_rays_n5", 10, || {
        let rays = brute_force_rays(&ps, &norm).unwrap();
        assert_eq!(rays.len(), 20);
    });
}

criterion_group!(
    benches,
    bench_validity,
    bench_enumeration,
    bench_realize,
    bench_ray_oracle
);
criterion_main!(benches);
