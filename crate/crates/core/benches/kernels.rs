use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use relsolve::relcore::{IndexSet, Relation};
use relsolve::{oracle, semiring, solver};
use std::hint::black_box;

fn random(n: usize, density: f64, rng: &mut ChaCha8Rng) -> Relation {
    let rows: Vec<Vec<u8>> = (0..n)
        .map(|_| (0..n).map(|_| rng.gen_bool(density) as u8).collect())
        .collect();
    Relation::from_matrix(&rows, None).unwrap()
}

fn compose(c: &mut Criterion) {
    let mut group = c.benchmark_group("compose");
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for n in [64, 256, 1024] {
        let r = random(n, 0.05, &mut rng);
        let s = random(n, 0.05, &mut rng);
        group.bench_with_input(BenchmarkId::new("sequential", n), &n, |b, _| {
            b.iter(|| semiring::compose_sequential(black_box(&r), black_box(&s)).unwrap())
        });
        group.bench_with_input(BenchmarkId::new("default", n), &n, |b, _| {
            b.iter(|| semiring::compose(black_box(&r), black_box(&s)).unwrap())
        });
    }
    group.finish();
}

fn solve(c: &mut Criterion) {
    let mut group = c.benchmark_group("solve");
    let mut rng = ChaCha8Rng::seed_from_u64(11);
    for n in [32, 128] {
        let r = random(n, 0.1, &mut rng);
        let x = random(n, 0.05, &mut rng);
        let s = semiring::compose(&r, &x).unwrap();
        group.bench_with_input(BenchmarkId::new("space_and_count", n), &n, |b, _| {
            b.iter(|| {
                let space = solver::solution_space(&r, &s)
                    .unwrap()
                    .into_space()
                    .unwrap();
                space.count()
            })
        });
    }
    group.finish();
}

fn brute_force(c: &mut Criterion) {
    let ix = IndexSet::numbered(4);
    let r =
        Relation::from_label_pairs(ix.clone(), [("1", "2"), ("2", "3"), ("3", "3"), ("4", "1")])
            .unwrap();
    let s = semiring::compose(&r, &Relation::full(ix)).unwrap();
    c.bench_function("oracle/n4", |b| {
        b.iter(|| oracle::brute_force_solutions(black_box(&r), black_box(&s)).unwrap())
    });
}

criterion_group!(benches, compose, solve, brute_force);
criterion_main!(benches);
