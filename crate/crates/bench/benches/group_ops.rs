use criterion::{criterion_group, criterion_main, Criterion};
use nilhecke_bench::{ball, involutions, pairs};
use nilhecke_core::{
    act_tw_closed, act_tw_iterative, demazure_product, enumerate_involutions, Group, PhiCache, Star,
};
use std::hint::black_box;

fn demazure(c: &mut Criterion) {
    let ps = pairs(&ball("affine:A2", 8), 200);
    c.bench_function("demazure affine:A2 |w|<=8 x200", |b| {
        b.iter(|| {
            for (x, y) in &ps {
                black_box(demazure_product(x, y).unwrap());
            }
        })
    });
}

fn enumeration(c: &mut Criterion) {
    let g = Group::preset("affine:A2").unwrap();
    let st = Star::build(&g, &"perm:1-2".parse().unwrap()).unwrap();
    c.bench_function("involutions affine:A2 |x|<=10", |b| {
        b.iter(|| black_box(enumerate_involutions(&g, &st, 10).unwrap()))
    });
    c.bench_function("ball B3 |w|<=9", |b| b.iter(|| black_box(ball("B3", 9))));
}

fn action(c: &mut Criterion) {
    let ws = ball("A3", 6);
    let xs = involutions("A3", "minus-w0", 6);
    let st = xs[0].star().clone();
    c.bench_function("M0 action iterative A3", |b| {
        b.iter(|| {
            for w in &ws {
                for x in &xs {
                    black_box(act_tw_iterative(w, x).unwrap());
                }
            }
        })
    });
    c.bench_function("M0 action closed form A3", |b| {
        b.iter(|| {
            let mut cache = PhiCache::new(&st);
            for w in &ws {
                for x in &xs {
                    black_box(act_tw_closed(w, x, &mut cache).unwrap());
                }
            }
        })
    });
}

criterion_group!(benches, demazure, enumeration, action);
criterion_main!(benches);
