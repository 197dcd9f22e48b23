use super::*;
use crate::report::all_passed;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn e(i: usize) -> NuPoly {
    NuPoly::var(i)
}

#[test]
fn rank_one_products_by_hand() {
    let h = HeckeAlgebra::type_a(2).unwrap();
    let s = h.s(0);
    // s ε1 = ε2 s + 1
    assert_eq!(h.mul(&s, &h.eps(0)), h.mul(&h.eps(1), &s) + h.one());
    // s ε1² = ε2² s + ε1 + ε2
    let lhs = h.mul(&s, &h.poly(e(0) * e(0)));
    let rhs = h.mul(&h.poly(e(1) * e(1)), &s) + h.poly(e(0) + e(1));
    assert_eq!(lhs, rhs);
    // (ε1 s)(ε1 s) = ε1ε2 + ε1 s
    let x = h.mul(&h.eps(0), &s);
    assert_eq!(h.mul(&x, &x), h.poly(e(0) * e(1)) + x);

    let c = rat(3, 2);
    let hc = HeckeAlgebra::type_c(1, c.clone()).unwrap();
    let sb = hc.s(0);
    // sbar ε + ε sbar = 2c, and ε² commutes with sbar
    assert_eq!(hc.mul(&sb, &hc.eps(0)) + hc.mul(&hc.eps(0), &sb), hc.scalar(int(2) * c));
    let sq = hc.poly(e(0) * e(0));
    assert_eq!(hc.mul(&sb, &sq), hc.mul(&sq, &sb));
}

#[test]
fn type_c_relations_in_index_form() {
    let c = rat(1, 2);
    let h = HeckeAlgebra::type_c(3, c.clone()).unwrap();
    let (s1, sb) = (h.s(0), h.s(2));
    // s_{12} ε_3 = ε_3 s_{12}
    assert_eq!(h.mul(&s1, &h.eps(2)), h.mul(&h.eps(2), &s1));
    // s_{12} ε_1 - ε_2 s_{12} = 1
    assert_eq!(h.mul(&s1, &h.eps(0)) - h.mul(&h.eps(1), &s1), h.one());
    // sbar ε_1 = ε_1 sbar
    assert_eq!(h.mul(&sb, &h.eps(0)), h.mul(&h.eps(0), &sb));
    // sbar ε_3 + ε_3 sbar = 2c
    assert_eq!(h.mul(&sb, &h.eps(2)) + h.mul(&h.eps(2), &sb), h.scalar(int(2) * c));
}

#[test]
fn drinfeld_lift_of_second_coordinate() {
    let c = rat(5, 3);
    let h = HeckeAlgebra::type_c(2, c.clone()).unwrap();
    let s12 = h.group(&WeylElement::reflection(&[1, -1]));
    let s12p = h.group(&WeylElement::reflection(&[1, 1]));
    let sbar2 = h.group(&WeylElement::reflection(&[0, 2]));
    let expected = h.eps(1)
        - (-s12 + s12p + sbar2.scale(&(int(2) * c))).scale(&rat(1, 2));
    assert_eq!(h.drinfeld_lift(&e(1)), expected);
}

#[test]
fn relations_hold_for_table_algebras() {
    let mut algs = vec![HeckeAlgebra::type_a(2).unwrap(), HeckeAlgebra::type_a(3).unwrap()];
    for c in [int(0), rat(1, 2), int(1), rat(3, 2)] {
        algs.push(HeckeAlgebra::type_c(1, c.clone()).unwrap());
        algs.push(HeckeAlgebra::type_c(2, c).unwrap());
    }
    let d3 = RootDatum::new(Family::D, 3).unwrap();
    algs.push(HeckeAlgebra::new(d3.clone(), ParameterFunction::constant(&d3, int(1))).unwrap());
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    algs.push(HeckeAlgebra::new(b2.clone(), ParameterFunction::short_long(&b2, int(1), int(4))).unwrap());
    for a in &algs {
        let res = verify_relations(a);
        let bad: Vec<_> = res.iter().filter(|r| !r.passed()).collect();
        assert!(bad.is_empty(), "{}: {bad:?}", a.label());
    }
}

#[test]
fn rejects_non_invariant_parameters() {
    let b2 = RootDatum::new(Family::B, 2).unwrap();
    let bad = ParameterFunction::from_fn(&b2, |r| if r == [1, -1] { int(2) } else { int(1) });
    assert!(matches!(HeckeAlgebra::new(b2, bad), Err(Error::NotInvariant(_))));
}

#[test]
fn text_round_trip_and_examples() {
    let h = HeckeAlgebra::type_c(2, rat(1, 2)).unwrap();
    let x = h.parse_element("e1*s1 - 1/2*sbar + 3").unwrap();
    assert_eq!(h.format_element(&x), "3 - 1/2*sbar + e1*s1");
    let y = h.parse_element("s1*e1").unwrap();
    assert_eq!(y, h.parse_element("e2*s1 + 1").unwrap());
    assert_eq!(h.parse_element("(e1+e2)^2").unwrap(), h.poly((e(0) + e(1)) * (e(0) + e(1))));
    assert!(h.parse_element("e3").is_err());
    assert!(h.parse_element("s1 +").is_err());
    assert_eq!(h.format_element(&HeckeElement::zero()), "0");
}

#[test]
fn star_on_random_elements() {
    for a in [HeckeAlgebra::type_a(3).unwrap(), HeckeAlgebra::type_c(2, rat(1, 2)).unwrap()] {
        assert!(all_passed(&verify_star_random(&a, 20, 7)));
    }
}

#[test]
fn d_subalgebra_in_parameter_zero() {
    let h = HeckeAlgebra::type_c(2, int(0)).unwrap();
    let mut rng = ChaCha8Rng::seed_from_u64(3);
    let evens: Vec<WeylElement> = h.weyl().iter().filter(|w| w.num_flips() % 2 == 0).cloned().collect();
    assert_eq!(evens.len(), 4);
    let sb = h.s(1);
    for _ in 0..10 {
        let mut x = random_element(&h, &mut rng, 3, 1);
        let mut y = random_element(&h, &mut rng, 3, 1);
        for z in [&mut x, &mut y] {
            let mut keep = HeckeElement::zero();
            for (w, p) in z.terms() {
                if w.num_flips() % 2 == 0 {
                    keep.add_term(w.clone(), p.clone());
                }
            }
            *z = keep;
        }
        assert!(h.in_d_subalgebra(&h.mul(&x, &y)));
        assert!(h.in_d_subalgebra(&h.product(&[sb.clone(), x.clone(), sb.clone()])));
    }
    assert!(!h.in_d_subalgebra(&sb));
}

fn arb_elem(alg: &'static str) -> impl Strategy<Value = (HeckeAlgebra, HeckeElement, HeckeElement, HeckeElement)> {
    any::<u64>().prop_map(move |seed| {
        let h = match alg {
            "A" => HeckeAlgebra::type_a(3).unwrap(),
            _ => HeckeAlgebra::type_c(2, rat(3, 2)).unwrap(),
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&h, &mut rng, 2, 2);
        let y = random_element(&h, &mut rng, 2, 1);
        let z = random_element(&h, &mut rng, 2, 1);
        (h, x, y, z)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn associativity_type_a((h, x, y, z) in arb_elem("A")) {
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }

    #[test]
    fn associativity_type_c((h, x, y, z) in arb_elem("C")) {
        prop_assert_eq!(h.mul(&h.mul(&x, &y), &z), h.mul(&x, &h.mul(&y, &z)));
    }

    #[test]
    fn print_parse_inverse((h, x, _y, _z) in arb_elem("C")) {
        prop_assert_eq!(h.parse_element(&h.format_element(&x)).unwrap(), x);
    }

    #[test]
    fn star_is_involutive_antiautomorphism((h, x, y, _z) in arb_elem("C")) {
        prop_assert_eq!(h.star(&h.star(&x)), x.clone());
        prop_assert_eq!(h.star(&h.mul(&x, &y)), h.mul(&h.star(&y), &h.star(&x)));
    }

    #[test]
    fn rescaling_is_an_isomorphism(seed in any::<u64>(), lam in 1i64..4) {
        // f ↦ λf takes H(λc) to H(c)
        let c = rat(1, 2);
        let lam = int(lam);
        let big = HeckeAlgebra::type_c(2, &c * &lam).unwrap();
        let d = RootDatum::new(Family::C, 2).unwrap();
        let big = HeckeAlgebra::new(d.clone(), ParameterFunction::short_long(&d, lam.clone(), &c * &lam)).unwrap_or(big);
        let small = HeckeAlgebra::type_c(2, c).unwrap();
        let scale: Vec<NuPoly> = (0..2).map(|i| e(i).scale(&lam)).collect();
        let psi = |x: &HeckeElement| {
            let mut out = HeckeElement::zero();
            for (w, p) in x.terms() {
                out.add_term(w.clone(), p.substitute(&scale));
            }
            out
        };
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let x = random_element(&big, &mut rng, 2, 1);
        let y = random_element(&big, &mut rng, 2, 1);
        prop_assert_eq!(psi(&big.mul(&x, &y)), small.mul(&psi(&x), &psi(&y)));
    }
}
