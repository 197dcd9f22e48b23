use super::*;
use crate::exact_kernel::{int, rat};
use crate::hecke_algebra::random_element;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn h2() -> HeckeAlgebra {
    HeckeAlgebra::type_a(2).unwrap()
}

#[test]
fn a1_form_oracle() {
    let fam = PrincipalSeriesFamily::new(&h2()).unwrap();
    for t in [rat(0, 1), rat(1, 3), rat(1, 1), rat(2, 1)] {
        let ps = fam.at(&[&t / int(2), -(&t / int(2))]);
        let expect = ExactMatrix::from_rows(vec![vec![int(1), t.clone()], vec![t.clone(), int(1)]]);
        assert_eq!(hermitian_form(&ps), HermitianForm::Unique(expect.clone()));
        assert!(is_invariant_form(&ps, &expect));
    }
}

#[test]
fn a1_scan_line_unitary_up_to_one() {
    let fam = PrincipalSeriesFamily::new(&h2()).unwrap();
    let ts: Vec<Rational> = [0, 1, 2, 3, 4].iter().map(|&x| rat(x, 2)).collect();
    let recs = unitarity_scan(&fam, &scan_line(&fam, &ts));
    let unitary: Vec<_> = recs.iter().map(|r| r.unitary.unwrap()).collect();
    assert_eq!(unitary, vec![true, true, true, false, false]);
    assert_eq!(recs[2].radical_dim, Some(1));
    assert_eq!(recs[1].nu, "1/4;-1/4");
}

#[test]
fn gl3_non_hermitian() {
    let fam = PrincipalSeriesFamily::new(&HeckeAlgebra::type_a(3).unwrap()).unwrap();
    let ps = fam.at(&[int(2), int(0), int(-1)]);
    assert_eq!(hermitian_form(&ps), HermitianForm::NonHermitian);
}

#[test]
fn relations_on_matrices() {
    let algs = [
        HeckeAlgebra::type_a(3).unwrap(),
        HeckeAlgebra::type_c(2, rat(1, 2)).unwrap(),
        HeckeAlgebra::type_c(2, int(0)).unwrap(),
        HeckeAlgebra::type_c(3, int(2)).unwrap(),
    ];
    for alg in &algs {
        let fam = PrincipalSeriesFamily::new(alg).unwrap();
        let nu: Vec<Rational> = (0..alg.k()).map(|i| rat(2 * i as i64 + 1, 3)).collect();
        for r in fam.at(&nu).verify() {
            assert!(r.passed(), "{} {:?}", alg.label(), r);
        }
    }
}

#[test]
fn representation_is_multiplicative() {
    let alg = HeckeAlgebra::type_c(2, rat(3, 2)).unwrap();
    let ps = PrincipalSeries::new(&alg, &[rat(1, 2), rat(-2, 3)]).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    for _ in 0..5 {
        let x = random_element(&alg, &mut rng, 3, 2);
        let y = random_element(&alg, &mut rng, 3, 2);
        assert_eq!(ps.act(&alg.mul(&x, &y)), ps.act(&x).mul(&ps.act(&y)));
    }
}

#[test]
fn form_invariant_for_random_elements() {
    let alg = HeckeAlgebra::type_c(2, int(1)).unwrap();
    let ps = PrincipalSeries::new(&alg, &[rat(1, 3), rat(1, 5)]).unwrap();
    let HermitianForm::Unique(f) = hermitian_form(&ps) else { panic!("no form") };
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    for _ in 0..5 {
        let x = random_element(&alg, &mut rng, 3, 2);
        assert_eq!(ps.act(&x).transpose().mul(&f), f.mul(&ps.act(&alg.star(&x))));
    }
}

#[test]
fn positive_at_zero() {
    for c in [int(1), rat(1, 2), int(2)] {
        let ps = PrincipalSeries::new(&HeckeAlgebra::type_c(2, c).unwrap(), &[int(0), int(0)]).unwrap();
        let q = spherical_quotient(&ps).unwrap();
        assert!(q.signature.is_positive_definite());
    }
    let ps = PrincipalSeries::new(&HeckeAlgebra::type_c(2, int(0)).unwrap(), &[int(0), int(0)]).unwrap();
    match hermitian_form(&ps) {
        HermitianForm::Degenerate(b) => assert!(b.len() > 1),
        other => panic!("{other:?}"),
    }
    assert!(is_invariant_form(&ps, &ExactMatrix::identity(8)));
}

#[test]
fn trivial_quotient_at_rho() {
    let alg = HeckeAlgebra::type_c(2, int(1)).unwrap();
    let fam = PrincipalSeriesFamily::new(&alg).unwrap();
    let ps = fam.at(&fam.rho());
    let q = spherical_quotient(&ps).unwrap();
    assert_eq!(q.dim, 1);
    assert!(q.spherical_survives);
}

#[test]
fn a1_eps_on_s() {
    let ps = PrincipalSeries::new(&h2(), &[rat(2, 3), rat(5, 7)]).unwrap();
    let s = ps.algebra().weyl()[1].clone();
    let mut v = vec![int(0), int(0)];
    v[ps.family().index_of(&s)] = int(1);
    let mut expect = vec![int(0), int(0)];
    expect[ps.family().index_of(&s)] = rat(5, 7);
    expect[0] = int(1);
    assert_eq!(ps.eps(0).apply(&v), expect);
}
