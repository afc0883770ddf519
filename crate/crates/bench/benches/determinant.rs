use criterion::{black_box, criterion_group, criterion_main, Criterion};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use gdet::{
    det_oracle, det_via_reduction, factor_profile, run_search, GroupId, GroupRingElement,
    SearchConfig,
};
use gdet::search::SearchMode;

fn random_elements(table: &gdet::GroupTable, n: usize, seed: u64) -> Vec<GroupRingElement> {
    let mut rng = StdRng::seed_from_u64(seed);
    (0..n)
        .map(|_| {
            let c: Vec<i64> = (0..18).map(|_| rng.gen_range(-3..=3)).collect();
            GroupRingElement::from_i64(table, &c).unwrap()
        })
        .collect()
}

fn bench_paths(c: &mut Criterion) {
    let table = GroupId::G18_4.table();
    let elems = random_elements(&table, 64, 1);
    let mut i = 0usize;
    c.bench_function("oracle_18x18", |b| {
        b.iter(|| {
            i = (i + 1) % elems.len();
            black_box(det_oracle(&table, &elems[i]))
        })
    });
    c.bench_function("reduction_9x9", |b| {
        b.iter(|| {
            i = (i + 1) % elems.len();
            black_box(det_via_reduction(&table, &elems[i]))
        })
    });
    c.bench_function("factor_profile", |b| {
        b.iter(|| {
            i = (i + 1) % elems.len();
            black_box(factor_profile(&table, &elems[i]).unwrap())
        })
    });
}

fn bench_search(c: &mut Criterion) {
    let table = GroupId::Z3xD6.table();
    let mut cfg = SearchConfig::new(GroupId::Z3xD6, -2, 2, SearchMode::Random);
    cfg.samples = 1_000;
    cfg.seed = 9;
    c.bench_function("random_sweep_1k", |b| {
        b.iter(|| black_box(run_search(&cfg, &table).unwrap()))
    });
}

criterion_group!(benches, bench_paths, bench_search);
criterion_main!(benches);
