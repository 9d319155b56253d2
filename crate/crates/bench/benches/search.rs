use std::hint::black_box;

use criterion::{criterion_group, criterion_main, Criterion};
use ramsey_bench::triangle_plus_edge;
use ramsey_core::arrowing::{arrows, Budget};
use ramsey_core::constructions::{build_theorem8, hypergraph_search, Rational, SearchConfig, SizeBudget};
use ramsey_core::graph::{complete_graph, complete_multipartite, petersen};
use ramsey_core::invariants::{a_parameter, chromatic_number};

fn arrowing(c: &mut Criterion) {
    let k3 = complete_graph(3);
    let k6 = complete_graph(6);
    let k3k2 = triangle_plus_edge();
    c.bench_function("arrows K6 K3", |b| {
        b.iter(|| arrows(black_box(&k6), &k3, 2, Budget::default()))
    });
    c.bench_function("arrows K6 K3+K2", |b| {
        b.iter(|| arrows(black_box(&k6), &k3k2, 2, Budget::default()))
    });
    c.bench_function("arrows K5 K3", |b| {
        b.iter(|| arrows(black_box(&complete_graph(5)), &k3, 2, Budget::default()))
    });
}

fn parameters(c: &mut Criterion) {
    let p = petersen();
    let k4_2 = complete_multipartite(4, 2);
    c.bench_function("chromatic number petersen", |b| {
        b.iter(|| chromatic_number(black_box(&p)))
    });
    c.bench_function("a(K_4(2))", |b| b.iter(|| a_parameter(black_box(&k4_2))));
}

fn constructions(c: &mut Criterion) {
    let half = Rational::new(1, 2).unwrap();
    c.bench_function("hypergraph search k=2 N=4", |b| {
        b.iter(|| hypergraph_search(2, 4, &half, SearchConfig::seeded(black_box(1))))
    });
    let k3 = complete_graph(3);
    c.bench_function("separating graph for K3", |b| {
        b.iter(|| {
            build_theorem8(
                &k3,
                6,
                2,
                Some(Rational::one()),
                SizeBudget::default(),
                SearchConfig::seeded(0),
            )
        })
    });
}

criterion_group!(benches, arrowing, parameters, constructions);
criterion_main!(benches);
