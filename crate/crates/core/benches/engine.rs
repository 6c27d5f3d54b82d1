use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use tangles::fourplat::UNKNOT;
use tangles::oracle::{fourplat_diagram, kauffman_bracket_with};
use tangles::solver::{
    family_members_where, solve_processive_with, FamilyParams, ProcessiveSystem, ProductConstraint, SearchBounds,
};
use tangles::{EquivalenceMode, Execution, TwoBridgeLink};

const STRATEGIES: [(&str, Execution); 2] = [("sequential", Execution::Sequential), ("parallel", Execution::Parallel)];

fn hin() -> ProcessiveSystem {
    let b = |p, q| TwoBridgeLink::new(p, q, EquivalenceMode::MirrorAgnostic).unwrap();
    ProcessiveSystem::new(
        vec![
            ProductConstraint::Exact(UNKNOT),
            ProductConstraint::Exact(b(3, 1)),
            ProductConstraint::Exact(b(7, 3)),
            ProductConstraint::CrossingNumber(7),
        ],
        EquivalenceMode::MirrorAgnostic,
    )
    .unwrap()
}

fn processive(c: &mut Criterion) {
    let mut group = c.benchmark_group("processive_exhaustive");
    group.sample_size(10);
    let sys = hin().with_bounds(SearchBounds { uv: 24, r: 12 });
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |bench| bench.iter(|| solve_processive_with(&sys, false, exec).unwrap()));
    }
    group.finish();
}

fn bracket(c: &mut Criterion) {
    let mut group = c.benchmark_group("kauffman_bracket");
    group.sample_size(10);
    for (p, q) in [(29, 12), (89, 34)] {
        let d = fourplat_diagram(p, q);
        for (name, exec) in STRATEGIES {
            group.bench_with_input(BenchmarkId::new(name, format!("b({p},{q})")), &d, |bench, d| {
                bench.iter(|| kauffman_bracket_with(d, exec, 16).unwrap())
            });
        }
    }
    group.finish();
}

fn family(c: &mut Criterion) {
    let mut group = c.benchmark_group("montesinos_family_scan");
    group.sample_size(10);
    let params = FamilyParams::new(3, 1, 3, 1).unwrap();
    for (name, exec) in STRATEGIES {
        group.bench_function(name, |bench| {
            bench.iter(|| {
                family_members_where(params, -100_000..=100_000, EquivalenceMode::MirrorAgnostic, exec, |x| x.p == 3)
                    .unwrap()
            })
        });
    }
    group.finish();
}

criterion_group!(benches, processive, bracket, family);
criterion_main!(benches);
