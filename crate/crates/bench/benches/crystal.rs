use criterion::{criterion_group, criterion_main, Criterion};
use spinmp_core::{
    reduce, verify, CartanContext, CrystalGraph, Mark, Node, ReducedCrystal, Signature, SpinRules,
    Symbol, Variant,
};

fn reduced(c: &mut Criterion) {
    let ctx = CartanContext::new(1, &[0, 1]).unwrap();
    c.bench_function("reduced lambda1 degree 16", |b| {
        b.iter(|| ReducedCrystal::generate(&ctx, 16))
    });
    let ctx = CartanContext::new(2, &[1, 2, 1]).unwrap();
    c.bench_function("reduced rank two degree 10", |b| {
        b.iter(|| ReducedCrystal::generate(&ctx, 10))
    });
}

fn crystal(c: &mut Criterion) {
    let ctx = CartanContext::new(1, &[0, 1]).unwrap();
    let rules = SpinRules::new(3, Variant::Paper);
    c.bench_function("crystal lambda1 degree 16", |b| {
        b.iter(|| CrystalGraph::generate(&ctx, rules, 16))
    });
    let ctx = CartanContext::new(2, &[1, 2, 1]).unwrap();
    let rules = SpinRules::new(5, Variant::Paper);
    c.bench_function("crystal rank two degree 8", |b| {
        b.iter(|| CrystalGraph::generate(&ctx, rules, 8))
    });
    let g = CrystalGraph::generate(&ctx, rules, 8);
    let rc = ReducedCrystal::generate(&ctx, 8);
    c.bench_function("verify rank two degree 8", |b| b.iter(|| verify(&g, &rc)));
}

fn signatures(c: &mut Criterion) {
    let marks = [
        Mark::Plus,
        Mark::Minus,
        Mark::PlusMinus,
        Mark::Plus,
        Mark::Minus,
    ];
    let symbols = (1..=30)
        .map(|k| {
            let node = Node::new(k, 1);
            match marks[k % marks.len()] {
                Mark::Plus => Symbol::plus(0, node, vec![node]),
                Mark::Minus => Symbol::minus(0, node, vec![node]),
                Mark::PlusMinus => Symbol::pair(0, node, Node::new(k, 2)),
            }
        })
        .collect();
    let sig = Signature {
        residue: 0,
        symbols,
    };
    c.bench_function("reduce length 30", |b| b.iter(|| reduce(&sig)));
}

criterion_group!(benches, reduced, crystal, signatures);
criterion_main!(benches);
