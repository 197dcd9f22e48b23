use criterion::{criterion_group, criterion_main, BenchmarkId, Criterion};

use gaha::enveloping::{equivariant_homs, OdaSetup};
use gaha::exact_kernel::Rational;
use gaha::hecke_algebra::{verify_relations, HeckeAlgebra};
use gaha::lie_models::LieModel;
use gaha::principal_series::{hermitian_form, PrincipalSeriesFamily};
use gaha::root_data::GroupDescriptor;
use gaha::tensor_model::verify_all;

fn relations(c: &mut Criterion) {
    let mut g = c.benchmark_group("relations");
    for gd in [GroupDescriptor::gl(4), GroupDescriptor::sp(3)] {
        let alg = HeckeAlgebra::from_group(&gd).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(gd), &alg, |b, alg| b.iter(|| verify_relations(alg)));
    }
    g.finish();
}

fn forms(c: &mut Criterion) {
    let mut g = c.benchmark_group("hermitian_form");
    g.sample_size(10);
    for gd in [GroupDescriptor::gl(3), GroupDescriptor::u(3, 2), GroupDescriptor::sp(3)] {
        let alg = HeckeAlgebra::from_group(&gd).unwrap();
        let fam = PrincipalSeriesFamily::new(&alg).unwrap();
        let nu: Vec<Rational> = (0..alg.k()).map(|i| Rational::new((i as i64 + 1).into(), 5.into())).collect();
        g.bench_with_input(BenchmarkId::from_parameter(gd), &nu, |b, nu| b.iter(|| hermitian_form(&fam.at(nu))));
    }
    g.finish();
}

fn tensor(c: &mut Criterion) {
    let mut g = c.benchmark_group("tensor_checks");
    g.sample_size(10);
    for gd in [GroupDescriptor::u(2, 1), GroupDescriptor::o(2, 2), GroupDescriptor::gl(3)] {
        let model = LieModel::build(&gd).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(gd), &model, |b, m| b.iter(|| verify_all(m)));
    }
    g.finish();
}

fn homs(c: &mut Criterion) {
    let mut g = c.benchmark_group("equivariant_homs");
    g.sample_size(10);
    for gd in [GroupDescriptor::sp(1), GroupDescriptor::u(2, 1)] {
        let model = LieModel::build(&gd).unwrap();
        g.bench_with_input(BenchmarkId::from_parameter(gd), &model, |b, m| {
            b.iter(|| equivariant_homs(&OdaSetup::new(m, 3).unwrap()).unwrap())
        });
    }
    g.finish();
}

criterion_group!(benches, relations, forms, tensor, homs);
criterion_main!(benches);
