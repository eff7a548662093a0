use criterion::{black_box, criterion_group, criterion_main, BenchmarkId, Criterion};
use kwsg_bench::{fixtures, semigroup};
use kwsg_core::{BetaTable, MaximalKind, Oracle, Window};

fn beta_table(c: &mut Criterion) {
    let mut group = c.benchmark_group("beta_table");
    for (name, sg) in fixtures() {
        group.bench_function(name, |b| {
            b.iter(|| BetaTable::new(black_box(sg.profile())).unwrap())
        });
    }
    group.finish();
}

fn membership(c: &mut Criterion) {
    let mut group = c.benchmark_group("membership_box");
    for (name, sg) in fixtures() {
        let w = Window::cube(sg.n(), 0, 2 * sg.m()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| w.points().filter(|p| sg.is_member(p)).count())
        });
    }
    group.finish();
}

fn enumeration(c: &mut Criterion) {
    let mut group = c.benchmark_group("maximal_window");
    for (name, sg) in fixtures() {
        let w = Window::cube(sg.n(), -2 * sg.m(), 6 * sg.m()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| {
                sg.enumerate_maximal_in_window(MaximalKind::Relative, w)
                    .unwrap()
            })
        });
    }
    group.finish();

    let wide = semigroup(97, &[1, 2, 3, 5, 7, -18], 4);
    c.bench_function("minimal_generating/m97-n4", |b| {
        b.iter(|| {
            wide.enumerate_minimal_generating(MaximalKind::Relative)
                .unwrap()
        })
    });
    c.bench_function("cardinality/m97-n4", |b| {
        b.iter(|| wide.cardinality(MaximalKind::Relative).unwrap())
    });
}

fn oracle(c: &mut Criterion) {
    let mut group = c.benchmark_group("oracle_crosscheck");
    group.sample_size(10);
    for (name, sg) in fixtures() {
        let w = Window::cube(sg.n(), -sg.m(), 3 * sg.m()).unwrap();
        group.bench_with_input(BenchmarkId::from_parameter(name), &w, |b, w| {
            b.iter(|| {
                Oracle::new(&sg)
                    .crosscheck_window(MaximalKind::Absolute, w)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, beta_table, membership, enumeration, oracle);
criterion_main!(benches);
