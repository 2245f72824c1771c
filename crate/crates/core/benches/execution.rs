//! Sequential vs parallel execution of the per-chart and per-point work.

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use rostfix::fixed::{FixedScheme, DEFAULT_SCAN_BUDGET};
use rostfix::rost::{verify_congruence, VerifyOptions};
use rostfix::variety::Ambient;
use rostfix::{AbelianGroup, ActionModel, Execution, Field, GroebnerConfig, Ring, WeightVector};

fn model(name: &str, p: u64, n: usize, order: u64, weights: &[i64], gens: &[&str]) -> ActionModel {
    let ring = Ring::grevlex(Field::prime(p).unwrap(), n + 1);
    let group = AbelianGroup::cyclic(order);
    let w: Vec<Vec<i64>> = weights.iter().map(|&x| vec![x]).collect();
    let weights = WeightVector::from_ints(&group, &w).unwrap();
    let gens = gens.iter().map(|g| ring.parse(g).unwrap()).collect();
    ActionModel::new(
        name,
        &ring,
        Ambient::Projective(n),
        weights,
        gens,
        true,
        GroebnerConfig::default(),
    )
    .unwrap()
}

fn models() -> Vec<ActionModel> {
    vec![
        model("hyperplane", 11, 4, 5, &[0, 1, 2, 3, 4], &["x0"]),
        model("quadric", 7, 3, 3, &[1, 2, 0, 0], &["x0*x1 - x2*x3"]),
        model("fermat", 7, 2, 3, &[0, 0, 1], &["x0^3 + x1^3 + x2^3"]),
        model("space", 11, 3, 5, &[0, 1, 2, 3], &[]),
    ]
}

fn bench(c: &mut Criterion) {
    let mut group = c.benchmark_group("congruence");
    for m in models() {
        let pi = m.group().mu_p_quotients(m.group().order())[0].clone();
        for exec in [Execution::Sequential, Execution::Parallel] {
            let opts = VerifyOptions {
                exec,
                ..VerifyOptions::default()
            };
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), m.name()), &m, |b, m| {
                b.iter(|| verify_congruence(m, &pi, &opts).unwrap())
            });
        }
    }
    group.finish();

    let mut group = c.benchmark_group("enumerate");
    for m in models() {
        for exec in [Execution::Sequential, Execution::Parallel] {
            group.bench_with_input(BenchmarkId::new(format!("{exec:?}"), m.name()), &m, |b, m| {
                b.iter(|| {
                    let scheme = FixedScheme::new(m, None, exec).unwrap();
                    scheme.enumerate(None, DEFAULT_SCAN_BUDGET, exec).unwrap()
                })
            });
        }
    }
    group.finish();
}

criterion_group!(benches, bench);
criterion_main!(benches);
