use std::hint::black_box;

use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};
use fe_umbral::batch::{map_parallel, map_sequential};
use fe_umbral::exact::rational::{int, rat};
use fe_umbral::exact::Poly;
use fe_umbral::families::FamilyKind;
use fe_umbral::identities::{check, Identity, IdentityParams};
use fe_umbral::representation::{represent, FormulaVariant};

fn polys(count: usize, degree: usize) -> Vec<Poly> {
    (0..count)
        .map(|i| {
            let c = (0..=degree).map(|j| rat((i * 7 + j * 3) as i64 % 19 - 9, (j % 5 + 1) as i64)).collect();
            Poly::from_coeffs(c)
        })
        .map(|p: Poly| &p + &Poly::monomial(int(1), degree))
        .collect()
}

fn representation(c: &mut Criterion) {
    let kind = FamilyKind::DegenerateFrobeniusEuler { lambda: rat(1, 2), u: int(-3), r: 2 };
    let mut g = c.benchmark_group("represent");
    g.sample_size(10);
    for degree in [6, 10] {
        let items = polys(32, degree);
        let work = |p: &Poly| represent(p, &kind, FormulaVariant::BinomialSum).unwrap();
        g.bench_with_input(BenchmarkId::new("sequential", degree), &items, |b, items| {
            b.iter(|| map_sequential(black_box(items), work))
        });
        g.bench_with_input(BenchmarkId::new("parallel", degree), &items, |b, items| {
            b.iter(|| map_parallel(black_box(items), work))
        });
    }
    g.finish();
}

fn verification(c: &mut Criterion) {
    let cases: Vec<(Identity, IdentityParams)> = Identity::ALL[1..]
        .iter()
        .flat_map(|&identity| {
            (identity.min_n()..=6).map(move |n| {
                let params = IdentityParams {
                    n,
                    m: Some(3),
                    lambda: Some(rat(1, 2)),
                    u: Some(int(2)),
                    v: Some(int(3)),
                    r: Some(2),
                };
                (identity, params.restrict(identity))
            })
        })
        .collect();
    let work = |(identity, params): &(Identity, IdentityParams)| check(*identity, params).unwrap();
    let mut g = c.benchmark_group("verify");
    g.sample_size(10);
    g.bench_function("sequential", |b| b.iter(|| map_sequential(black_box(&cases), work)));
    g.bench_function("parallel", |b| b.iter(|| map_parallel(black_box(&cases), work)));
    g.finish();
}

criterion_group!(benches, representation, verification);
criterion_main!(benches);
