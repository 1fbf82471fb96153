//! Rayon pool of one worker against the default pool on the heaviest scans.
//!
//! Build with `--no-default-features` to measure the plain sequential code path.

use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use rayon::ThreadPool;
use subnormal::catalog;
use subnormal::criteria::{check_starstar, ngxp_witness, theorem_c_search};
use subnormal::{ClassTable, Permutation, SubgroupHandle};

fn pools() -> [(&'static str, ThreadPool); 2] {
    let one = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
    let all = rayon::ThreadPoolBuilder::new().build().unwrap();
    [("one_thread", one), ("default_pool", all)]
}

fn starstar_s8(c: &mut Criterion) {
    let s8 = catalog::lookup("S8").unwrap();
    let a = SubgroupHandle::new(&s8.group, vec![Permutation::parse_cycles("(1,2,3)", 8).unwrap()]).unwrap();
    ClassTable::new(&s8.group).unwrap();
    let mut group = c.benchmark_group("starstar_s8");
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| check_starstar(&s8.group, black_box(&a)).unwrap()))
        });
    }
    group.finish();
}

fn ngxp_a9(c: &mut Criterion) {
    let a9 = catalog::lookup("A9").unwrap();
    let x = SubgroupHandle::new(&a9.group, vec![Permutation::parse_cycles("(3,4,5,6,7,8,9)", 9).unwrap()]).unwrap();
    let mut group = c.benchmark_group("ngxp_a9_p3");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| ngxp_witness(&a9.group, black_box(&x), 3).unwrap()))
        });
    }
    group.finish();
}

fn theorem_c_m12(c: &mut Criterion) {
    let m12 = catalog::lookup("M12").unwrap();
    let s = m12.socle.clone().unwrap();
    let reps = ClassTable::new(&m12.group).unwrap().cyclic_subgroup_representatives(|k| k == 3);
    let a = SubgroupHandle::new(&m12.group, vec![reps[0].1.clone()]).unwrap();
    let mut group = c.benchmark_group("theorem_c_m12_p3");
    group.sample_size(10);
    for (name, pool) in pools() {
        group.bench_function(name, |b| {
            b.iter(|| pool.install(|| theorem_c_search(&m12.group, &s, black_box(&a), 3).unwrap()))
        });
    }
    group.finish();
}

criterion_group!(benches, starstar_s8, ngxp_a9, theorem_c_m12);
criterion_main!(benches);
