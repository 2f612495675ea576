//! Compares the data-parallel and sequential mapping paths on a batch of
//! independent oracle computations: the radical dimension of End(M^λ) for
//! every λ ⊢ 4 at p ∈ {2, 3, 5}.
//!
//! `par_map` dispatches through rayon when the `parallel` feature is on
//! (the default); `seq_map` is the always-sequential fallback.

use criterion::{criterion_group, criterion_main, Criterion};
use young::oracle::{Oracle, OracleConfig};
use young::partition::partitions_of;
use young::{par_map, seq_map, Partition};

fn work_items() -> Vec<(Partition, u32)> {
    let mut items = Vec::new();
    for p in [2u32, 3, 5] {
        for lam in partitions_of(4) {
            items.push((lam, p));
        }
    }
    items
}

fn radical_batch(c: &mut Criterion) {
    let oracle = Oracle::new(OracleConfig::desk_scale());
    let items = work_items();
    let mut group = c.benchmark_group("end_radical_dims_degree_4");
    group.sample_size(20);
    group.bench_function("par_map", |b| {
        b.iter(|| {
            par_map(items.clone(), |(lam, p)| oracle.end_radical_dim(&lam, p).unwrap())
        })
    });
    group.bench_function("seq_map", |b| {
        b.iter(|| {
            seq_map(items.clone(), |(lam, p)| oracle.end_radical_dim(&lam, p).unwrap())
        })
    });
    group.finish();
}

criterion_group!(benches, radical_batch);
criterion_main!(benches);
