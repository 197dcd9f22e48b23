use proptest::prelude::*;

use super::*;
use crate::exact_kernel::{int, ExactMatrix, Rational};
use crate::lie_models::{diagonal, elementary, flip, Character};
use crate::report::all_passed;
use crate::root_data::GroupDescriptor;

fn g(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn space(gd: GroupDescriptor) -> TensorSpace {
    TensorSpace::new(LieModel::build(&gd).unwrap())
}

fn unit(n: usize, i: usize) -> Vector {
    let mut v = vec![GaussRational::default(); n];
    v[i] = g(1);
    v
}

fn comb(terms: &[(i64, &Vector)]) -> Vector {
    let mut out = vec![GaussRational::default(); terms[0].1.len()];
    for (c, v) in terms {
        for (o, x) in out.iter_mut().zip(v.iter()) {
            *o = o.clone() + x.clone() * g(*c);
        }
    }
    out
}

fn groups() -> Vec<GroupDescriptor> {
    crate::lie_models::test_groups()
}

#[test]
fn verify_all_groups() {
    for gd in groups() {
        let m = LieModel::build(&gd).unwrap();
        let res = verify_all(&m);
        let bad: Vec<_> = res.iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{gd}: {bad:?}");
        assert!(all_passed(&res));
    }
}

#[test]
fn gl3_invariants() {
    let ts = space(GroupDescriptor::gl(3));
    assert!(invariants(&ts, 2).unwrap().is_empty());
    assert!(invariants(&ts, 1).unwrap().is_empty());
    let b = invariants(&ts, 3).unwrap();
    assert_eq!(b.len(), 6);
    let sh = ts.shape();
    for (v, w) in b.vectors.iter().zip(&b.labels) {
        let d: Vec<usize> = w.images().iter().map(|&x| x as usize - 1).collect();
        assert_eq!(*v, sh.basis_vector(&d));
    }
}

#[test]
fn u21_invariants() {
    let ts = space(GroupDescriptor::u(2, 1));
    let b = invariants(&ts, 1).unwrap();
    assert_eq!(b.len(), 2);
    let (e2, e3) = (unit(3, 1), unit(3, 2));
    let plus = comb(&[(1, &e2), (1, &e3)]);
    let minus = comb(&[(1, &e2), (-1, &e3)]);
    assert_eq!(b.vectors, vec![plus, minus]);
}

#[test]
fn solved_dimensions_below_and_at_rank() {
    for gd in groups() {
        let ts = space(gd);
        let k = ts.k();
        assert_eq!(solve_invariants(&ts, k).unwrap().len(), ts.weyl_datum().weyl_order(), "{gd}");
        for m in 0..k {
            assert!(solve_invariants(&ts, m).unwrap().is_empty(), "{gd} m={m}");
        }
    }
}

#[test]
fn gl2_petal_chain() {
    let ts = space(GroupDescriptor::gl(2));
    let sh = ts.shape();
    let z = &ts.model().simple_roots()[0].z;
    let e12 = sh.basis_vector(&[0, 1]);
    let e21 = sh.basis_vector(&[1, 0]);
    let e11 = sh.basis_vector(&[0, 0]);
    let e22 = sh.basis_vector(&[1, 1]);
    let s1 = ts.act_lie(z, &e12);
    assert_eq!(s1, comb(&[(1, &e11), (-1, &e22)]));
    let s2 = ts.act_lie(z, &s1);
    assert_eq!(s2, comb(&[(-2, &e12), (-2, &e21)]));
    let s3 = comb(&[(1, &s2), (4, &e12)]);
    assert_eq!(s3, comb(&[(2, &e12), (-2, &e21)]));
    assert!(ops::is_zero(&ts.act_lie(z, &s3)));
}

#[test]
fn u_p1_petal_chain() {
    for p in 2..=4 {
        let ts = space(GroupDescriptor::u(p, 1));
        let n = p + 1;
        let z = &ts.model().simple_roots()[0].z;
        let (e1, ep, eq) = (unit(n, 0), unit(n, p - 1), unit(n, p));
        for eta in [1, -1] {
            let f = comb(&[(1, &ep), (eta, &eq)]);
            let a = ts.act_lie(z, &f);
            assert_eq!(a, comb(&[(2, &e1)]));
            let b = ts.act_lie(z, &a);
            assert_eq!(b, comb(&[(-4, &ep)]));
            let c = comb(&[(1, &b), (4, &f)]);
            assert_eq!(c, comb(&[(4 * eta, &eq)]));
            assert!(ops::is_zero(&ts.act_lie(z, &c)));
        }
    }
}

#[test]
fn gl2_k_alpha_is_minus_flip() {
    let ts = space(GroupDescriptor::gl(2));
    let sh = ts.shape();
    let k = &ts.model().simple_roots()[0].k;
    let v = sh.basis_vector(&[0, 1]);
    let img = ts.act_group(k, &v);
    assert_eq!(img, comb(&[(-1, &sh.basis_vector(&[1, 0]))]));
    assert_eq!(img, ts.pi_transposition(1, 2, &v));
}

#[test]
fn u_p1_k_epsilon_is_minus_xi() {
    for p in 2..=4 {
        let ts = space(GroupDescriptor::u(p, 1));
        let n = p + 1;
        let k = &ts.model().simple_roots()[0].k;
        let (ep, eq) = (unit(n, p - 1), unit(n, p));
        let plus = comb(&[(1, &ep), (1, &eq)]);
        let minus = comb(&[(1, &ep), (-1, &eq)]);
        assert_eq!(ts.act_group(k, &plus), comb(&[(-1, &minus)]));
        assert_eq!(ts.act_group(k, &minus), comb(&[(-1, &plus)]));
        assert_eq!(ts.pi_sbar(1, &plus).unwrap(), comb(&[(-1, &minus)]));
    }
}

#[test]
fn identity_acts_trivially() {
    for gd in [GroupDescriptor::gl(3), GroupDescriptor::sp(2), GroupDescriptor::o(2, 2)] {
        let ts = space(gd);
        let b = invariants(&ts, ts.k()).unwrap();
        let id = WeylElement::identity(ts.weyl_datum().k());
        for v in &b.vectors {
            assert_eq!(ts.geometric(&id, v).unwrap(), *v);
            assert_eq!(ts.pi_weyl(&id, v).unwrap(), *v);
        }
    }
}

/// Character of the geometric action computed in the solved basis, which
/// is unrelated to the explicit one.
fn character_in_solved_basis(ts: &TensorSpace) -> Vec<GaussRational> {
    let solved = solve_invariants(ts, ts.k()).unwrap();
    let cols = ExactMatrix::from_columns(ts.dim(), &solved);
    ts.weyl_datum()
        .weyl_enumerate()
        .iter()
        .map(|w| {
            let mut tr = GaussRational::default();
            for (i, v) in solved.iter().enumerate() {
                let img = ts.geometric(w, v).unwrap();
                let c = cols.solve(&img).expect("image is invariant");
                tr = tr + c[i].clone();
            }
            tr
        })
        .collect()
}

#[test]
fn regular_characters() {
    for (gd, order) in [(GroupDescriptor::gl(2), 2), (GroupDescriptor::sp(2), 8), (GroupDescriptor::u(2, 1), 2)] {
        let ts = space(gd);
        let chi = character_in_solved_basis(&ts);
        assert_eq!(chi.len(), order);
        assert_eq!(chi[0], g(order as i64));
        assert!(chi[1..].iter().all(|x| *x == GaussRational::default()), "{gd}: {chi:?}");
        let b = invariants(&ts, ts.k()).unwrap();
        assert!(regular_rep_check(&ts, &b).passed());
    }
}

#[test]
fn omega_gl2_is_flip() {
    let ts = space(GroupDescriptor::gl(2));
    assert_eq!(ts.omega_matrix(1, 2, Part::Full).unwrap(), flip(2));
    assert_eq!(ts.omega_matrix(2, 1, Part::Full).unwrap(), flip(2));
    assert!(ts.omega(0, 1, Part::Full, &ts.shape().zero()).is_err());
}

#[test]
fn omega_parts_add_up() {
    for gd in [GroupDescriptor::gl(2), GroupDescriptor::u(1, 1), GroupDescriptor::sp(2), GroupDescriptor::o(2, 2)] {
        let ts = TensorSpace::with_slots(LieModel::build(&gd).unwrap(), 2);
        let full = ts.omega_matrix(1, 2, Part::Full).unwrap();
        let k = ts.omega_matrix(1, 2, Part::K).unwrap();
        let p = ts.omega_matrix(1, 2, Part::P).unwrap();
        assert_eq!(k.add(&p), full, "{gd}");
    }
}

#[test]
fn omega_k_for_u11_and_sp2() {
    let half = GaussRational::real(Rational::new(1.into(), 2.into()));
    for gd in [GroupDescriptor::u(1, 1), GroupDescriptor::sp(2)] {
        let m = LieModel::build(&gd).unwrap();
        let n = m.dim_v();
        let ts = TensorSpace::with_slots(m.clone(), 2);
        let xi2 = CMatrix::identity(n).kron(m.xi().unwrap());
        let r = flip(n);
        let mut expect = r.add(&xi2.mul(&r).mul(&xi2)).scale(&half);
        if gd.family == GroupFamily::Sp {
            let pr = crate::lie_models::trivial_projection(&m).scale(&g(n as i64));
            expect = expect.sub(&pr.add(&xi2.mul(&pr).mul(&xi2)).scale(&half));
        }
        assert_eq!(ts.omega_matrix(1, 2, Part::K).unwrap(), expect, "{gd}");
    }
}

#[test]
fn table_two_from_tensor_space() {
    for (p, q) in [(1, 1), (2, 1), (3, 1), (2, 2), (3, 2)] {
        for (mp, mq) in [(0, 0), (0, 1), (1, 0), (2, -1), (-1, 3)] {
            let ts = space(GroupDescriptor::u(p, q)).with_character(Character { m_p: mp, m_q: mq });
            let (r, c) = q_mu_parameters(&ts).unwrap();
            let pq = (p + q) as i64;
            assert_eq!(r, Rational::new((pq - mp - mq).into(), 2.into()), "U({p},{q}) {mp},{mq}");
            assert_eq!(c, Rational::new((p as i64 - q as i64 + mq - mp).into(), 2.into()));
        }
    }
    for n in 1..=3 {
        for m in [-1, 0, 1, 2] {
            let ts = space(GroupDescriptor::sp(n)).with_character(Character { m_p: 0, m_q: m });
            assert_eq!(q_mu_parameters(&ts).unwrap(), (int(n as i64), int(m)), "Sp({n}) m={m}");
        }
    }
    for (p, q) in [(2, 1), (3, 1), (2, 2), (3, 2), (4, 1)] {
        let ts = space(GroupDescriptor::o(p, q));
        let r = Rational::new(((p + q) as i64 - 2).into(), 2.into());
        let c = Rational::new((p as i64 - q as i64).into(), 2.into());
        assert_eq!(q_mu_parameters(&ts).unwrap(), (r, c), "O({p},{q})");
    }
    assert!(q_mu_parameters(&space(GroupDescriptor::gl(2))).is_err());
}

/// Direct evaluation of the form on the `f_j^η` factors.
fn pairing(j: &CMatrix, a: &[GaussRational], b: &[GaussRational]) -> GaussRational {
    let mut s = GaussRational::default();
    for (r, x) in a.iter().enumerate() {
        for (c, y) in b.iter().enumerate() {
            s = s + x.clone() * j.get(r, c).clone() * y.clone();
        }
    }
    s
}

#[test]
fn contraction_oracle() {
    for gd in [GroupDescriptor::sp(2), GroupDescriptor::o(2, 2), GroupDescriptor::o(3, 2)] {
        let ts = space(gd);
        let m = ts.model();
        let j = m.form().unwrap();
        let n = m.dim_v();
        let p = gd.p;
        let f = |jj: usize, eta: i64| comb(&[(1, &unit(n, p - jj)), (eta, &unit(n, p + jj - 1))]);
        for (a, b) in [(1, 2), (2, 1)] {
            for e1 in [1, -1] {
                for e2 in [1, -1] {
                    assert_eq!(pairing(j, &f(a, e1), &f(b, e2)), GaussRational::default(), "{gd}");
                }
            }
        }
        let basis = invariants(&ts, 2).unwrap();
        assert!(contraction_kernel_check(&ts, &basis, 1).unwrap().passed(), "{gd}");
    }
    let ts = space(GroupDescriptor::gl(2));
    let b = invariants(&ts, 2).unwrap();
    assert!(contraction_kernel_check(&ts, &b, 1).is_err());
}

#[test]
fn wrong_slot_count_breaks_the_action() {
    for gd in [GroupDescriptor::sp(1), GroupDescriptor::o(2, 1), GroupDescriptor::sp(2), GroupDescriptor::o(2, 2)] {
        let m = LieModel::build(&gd).unwrap();
        let r = rank_sensitivity_check(&m).unwrap();
        assert!(r.passed(), "{gd}: {r:?}");
    }
    assert!(rank_sensitivity_check(&LieModel::build(&GroupDescriptor::u(2, 1)).unwrap()).is_err());
}

#[test]
fn kact_vacuous_at_rank_one() {
    let ts = space(GroupDescriptor::u(3, 1));
    let b = invariants(&ts, 1).unwrap();
    let r = kact_identity_check(&ts, &b);
    assert!(r.passed());
    assert_eq!(r.parameters, "pairs=0");
}

#[test]
fn relations_in_more_slots() {
    for (gd, k) in [(GroupDescriptor::gl(2), 3), (GroupDescriptor::gl(2), 4), (GroupDescriptor::sp(1), 3), (GroupDescriptor::u(1, 1), 3)] {
        let ts = TensorSpace::with_slots(LieModel::build(&gd).unwrap(), k);
        assert!(ak_relations_check(&ts).passed(), "{gd} k={k}");
        assert!(partial_sum_check(&ts).passed(), "{gd} k={k}");
    }
    let ts = TensorSpace::with_slots(LieModel::build(&GroupDescriptor::o(2, 1)).unwrap(), 2);
    assert!(diagonal_commutation_check(&ts).passed());
    assert!(sbar_anticommutator_check(&ts).passed());
}

#[test]
fn sbar_sign_is_positive() {
    let ts = space(GroupDescriptor::sp(2));
    let sh = ts.shape();
    let e = sh.basis_vector(&[0, 3]);
    let a = ts.pi_sbar(2, &ts.omega(1, 2, Part::Full, &e).unwrap()).unwrap();
    let b = ts.omega(1, 2, Part::Full, &ts.pi_sbar(2, &e).unwrap()).unwrap();
    let c = ts.pi_sbar(2, &ts.omega(1, 2, Part::K, &e).unwrap()).unwrap();
    let lhs = comb(&[(1, &a), (1, &b)]);
    assert!(!ops::is_zero(&c));
    assert_eq!(lhs, comb(&[(2, &c)]));
    assert_ne!(lhs, comb(&[(-2, &c)]));
}

#[test]
fn extra_component_of_oqq_is_sbar() {
    let ts = space(GroupDescriptor::o(2, 2));
    let b = invariants(&ts, 2).unwrap();
    let x = ts.model().extra_component().unwrap().clone();
    assert_eq!(x, diagonal(&[1, 1, 1, -1]));
    let v0 = &b.vectors[0];
    assert_eq!(ts.act_group(&x, v0), ts.pi_sbar(2, v0).unwrap());
}

#[test]
fn simple_tensor_layout() {
    let sh = Shape::new(3, 2);
    let v = sh.simple_tensor(&[unit(3, 1), unit(3, 2)]);
    assert_eq!(v, sh.basis_vector(&[1, 2]));
    assert_eq!(sh.index(&[1, 2]), 5);
    let a = elementary(3, 0, 1);
    assert_eq!(sh.apply_slot(2, &a, &sh.basis_vector(&[2, 1])), sh.basis_vector(&[2, 0]));
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn group_action_preserves_invariants(
        gi in 0usize..5,
        coeffs in prop::collection::vec(-3i64..=3, 8),
        wi in 0usize..8,
    ) {
        let gd = [GroupDescriptor::gl(2), GroupDescriptor::u(2, 1), GroupDescriptor::sp(2), GroupDescriptor::o(2, 2), GroupDescriptor::u(2, 2)][gi];
        let ts = space(gd);
        let b = invariants(&ts, ts.k()).unwrap();
        let mut v = ts.shape().zero();
        for (c, x) in coeffs.iter().zip(&b.vectors) {
            ops::add_into(&mut v, &ops::scale(x, &g(*c)));
        }
        let ws = ts.weyl_datum().weyl_enumerate();
        let w = &ws[wi % ws.len()];
        for img in [ts.geometric(w, &v).unwrap(), ts.pi_weyl(w, &v).unwrap()] {
            prop_assert!(b.coordinates(&img).is_some());
            for x in ts.model().m() {
                prop_assert!(ops::is_zero(&ts.act_lie(x, &img)));
            }
            for h in ts.model().m_finite() {
                prop_assert_eq!(&ts.act_group(h, &img), &img);
            }
        }
    }
}
