use num_traits::Zero;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::{HeckeAlgebra, HeckeElement};
use crate::exact_kernel::{int, rat, NuPoly, Rational};
use crate::report::CheckResult;

/// Defining relations, Drinfeld relations and star properties on generators.
///
/// With `A_f = ½ Σ c(β) f(β) s_β` the lifts satisfy `[f̃, g̃] = −[A_f, A_g]`.
pub fn verify_relations(alg: &HeckeAlgebra) -> Vec<CheckResult> {
    let k = alg.k();
    let g = alg.label().to_string();
    let r = |name: &str, params: String| CheckResult::new(name, g.clone(), params);
    let show = |x: &HeckeElement| alg.format_element(x);
    let mut out = Vec::new();
    let ns = alg.simple().len();

    for i in 0..k {
        for j in i + 1..k {
            let d = alg.commutator(&alg.eps(i), &alg.eps(j));
            out.push(r("poly_commute", format!("i={},j={}", i + 1, j + 1)).with(d.is_zero(), || show(&d)));
        }
    }
    for i in 0..ns {
        let s = alg.s(i);
        let sq = alg.mul(&s, &s);
        out.push(r("involution", alg.names[i].clone()).with(sq == alg.one(), || show(&sq)));
        for j in i + 1..ns {
            let st = alg.mul(&s, &alg.s(j));
            let w = alg.simple[i].reflection.compose(&alg.simple[j].reflection);
            let mut m = 1;
            let mut cur = w.clone();
            while !cur.is_identity() {
                cur = cur.compose(&w);
                m += 1;
            }
            let mut p = alg.one();
            for _ in 0..m {
                p = alg.mul(&p, &st);
            }
            out.push(
                r("braid", format!("{},{},m={m}", alg.names[i], alg.names[j])).with(p == alg.one(), || show(&p)),
            );
        }
    }
    for i in 0..ns {
        let sp = &alg.simple[i];
        let s = alg.s(i);
        for j in 0..k {
            let f = NuPoly::var(j);
            let sf = alg.reflection_action(&sp.reflection, &f);
            let lhs = alg.mul(&s, &alg.poly(f.clone())) - alg.mul(&alg.poly(sf.clone()), &s);
            let rhs = alg.scalar(&sp.c * int(sp.root[j]));
            let d = lhs.clone() - rhs;
            out.push(
                r("cross_relation", format!("{},e{}", alg.names[i], j + 1)).with(d.is_zero(), || show(&lhs)),
            );
            let lhs = alg.mul(&s, &alg.drinfeld_lift(&f));
            let rhs = alg.mul(&alg.drinfeld_lift(&sf), &s);
            let d = lhs - rhs;
            out.push(r("drinfeld_conjugation", format!("{},e{}", alg.names[i], j + 1)).with(d.is_zero(), || show(&d)));
        }
    }
    for i in 0..k {
        for j in i + 1..k {
            let (fi, fj) = (NuPoly::var(i), NuPoly::var(j));
            let lhs = alg.commutator(&alg.drinfeld_lift(&fi), &alg.drinfeld_lift(&fj));
            let rhs = alg.commutator(&alg.drinfeld_correction(&fi), &alg.drinfeld_correction(&fj));
            let d = lhs + rhs;
            out.push(
                r("drinfeld_commutator", format!("e{},e{}", i + 1, j + 1)).with(d.is_zero(), || show(&d)),
            );
        }
    }
    let mut gens: Vec<HeckeElement> = (0..ns).map(|i| alg.s(i)).collect();
    gens.extend((0..k).map(|i| alg.eps(i)));
    let mut assoc_fail = None;
    for (a, x) in gens.iter().enumerate() {
        for (b, y) in gens.iter().enumerate() {
            for (c, z) in gens.iter().enumerate() {
                let l = alg.mul(&alg.mul(x, y), z);
                let rr = alg.mul(x, &alg.mul(y, z));
                if l != rr && assoc_fail.is_none() {
                    assoc_fail = Some(format!("({a},{b},{c}): {}", show(&(l - rr))));
                }
            }
            let xy = alg.mul(x, y);
            let lhs = alg.star(&xy);
            let rhs = alg.mul(&alg.star(y), &alg.star(x));
            out.push(r("star_antimultiplicative", format!("{a},{b}")).with(lhs == rhs, || show(&(lhs.clone() - rhs.clone()))));
        }
        let xx = alg.star(&alg.star(x));
        out.push(r("star_involutive", format!("{a}")).with(&xx == x, || show(&xx)));
    }
    out.push(r("associativity", "generator triples".into()).with(assoc_fail.is_none(), || assoc_fail.clone().unwrap()));
    for i in 0..k {
        let lift = alg.drinfeld_lift(&NuPoly::var(i));
        let st = alg.star(&lift);
        out.push(r("star_of_lift", format!("e{}", i + 1)).with(st == -lift.clone(), || show(&st)));
    }
    out
}

/// A pseudo-random element with `terms` group elements and polynomial
/// coefficients of degree at most `degree`.
pub fn random_element(alg: &HeckeAlgebra, rng: &mut impl Rng, terms: usize, degree: u32) -> HeckeElement {
    let mut x = HeckeElement::zero();
    for _ in 0..terms {
        let w = alg.weyl().choose(rng).unwrap().clone();
        let mut p = NuPoly::zero();
        for _ in 0..2 {
            let m: Vec<u32> = (0..alg.k()).map(|_| rng.gen_range(0..=degree)).collect();
            if m.iter().sum::<u32>() > degree {
                continue;
            }
            let c: Rational = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
            p.add_term(m, c);
        }
        x.add_term(w, p);
    }
    x
}

/// `(xy)* = y*x*` and `x** = x` on `count` seeded random pairs.
pub fn verify_star_random(alg: &HeckeAlgebra, count: usize, seed: u64) -> Vec<CheckResult> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut bad_inv = None;
    let mut bad_anti = None;
    for n in 0..count {
        let x = random_element(alg, &mut rng, 2, 1);
        let y = random_element(alg, &mut rng, 2, 1);
        if bad_inv.is_none() && alg.star(&alg.star(&x)) != x {
            bad_inv = Some(format!("#{n}: {}", alg.format_element(&x)));
        }
        if bad_anti.is_none() {
            let lhs = alg.star(&alg.mul(&x, &y));
            let rhs = alg.mul(&alg.star(&y), &alg.star(&x));
            if lhs != rhs {
                bad_anti = Some(format!("#{n}: x={} y={}", alg.format_element(&x), alg.format_element(&y)));
            }
        }
    }
    let g = alg.label().to_string();
    let params = format!("count={count},seed={seed}");
    vec![
        CheckResult::new("star_involutive_random", g.clone(), params.clone()).with(bad_inv.is_none(), || bad_inv.clone().unwrap()),
        CheckResult::new("star_antimultiplicative_random", g, params).with(bad_anti.is_none(), || bad_anti.clone().unwrap()),
    ]
}
