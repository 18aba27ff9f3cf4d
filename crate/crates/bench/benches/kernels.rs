use criterion::{criterion_group, criterion_main, Criterion};
use std::hint::black_box;

use tjm_bench::{model, tower};
use tjm_core::characters::{gauss_sum, AddChar, MultChar};
use tjm_core::speh::{intertwining_t, WhittakerSpace};
use tjm_core::{CycNum, Root};

fn cyclotomic(c: &mut Criterion) {
    let a: CycNum = (1..40).map(|k| CycNum::root_of_unity(240, 7 * k) * CycNum::from_int(k)).sum();
    let b: CycNum = (1..40).map(|k| CycNum::root_of_unity(240, 11 * k + 3)).sum();
    c.bench_function("cyc_mul_240", |bn| bn.iter(|| black_box(&a) * black_box(&b)));
    c.bench_function("cyc_inv_240", |bn| bn.iter(|| black_box(&b).inv().unwrap()));
}

fn field(c: &mut Criterion) {
    let t = tower(3, 4, 2);
    let g = t.generator(4);
    let h = t.exp(4, 17);
    c.bench_function("fq81_mul", |bn| bn.iter(|| t.mul(black_box(g), black_box(h))));
    c.bench_function("fq81_frobenius", |bn| bn.iter(|| t.frobenius(black_box(h), 1)));
}

fn gauss(c: &mut Criterion) {
    let t = tower(3, 4, 2);
    let chi = MultChar::new(&t, 4, 3).unwrap();
    let psi = AddChar::standard(4);
    c.bench_function("gauss_sum_q81", |bn| bn.iter(|| gauss_sum(&t, black_box(&chi), &psi)));
}

fn speh(c: &mut Criterion) {
    let mut g = c.benchmark_group("speh");
    g.sample_size(10);
    let small = model(3, 2, 2, 1, Root::one());
    g.bench_function("whittaker_q9_d2", |bn| bn.iter(|| WhittakerSpace::compute(black_box(&small)).unwrap()));
    let m = model(3, 4, 2, 1, Root::new(4, 1));
    let w = WhittakerSpace::compute(&m).unwrap();
    g.bench_function("whittaker_q81_d2", |bn| bn.iter(|| WhittakerSpace::compute(black_box(&m)).unwrap()));
    g.bench_function("intertwining_q81_d2", |bn| bn.iter(|| intertwining_t(black_box(&m), &w)));
    g.finish();
}

criterion_group!(benches, cyclotomic, field, gauss, speh);
criterion_main!(benches);
