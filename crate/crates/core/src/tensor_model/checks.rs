use super::invariants::{invariants, solve_invariants, InvariantBasis};
use super::ops::{self, Vector};
use super::{Part, TensorSpace};
use crate::error::{Error, Result};
use crate::exact_kernel::{GaussRational, Rational, Ring};
use crate::lie_models::{CMatrix, Kind, LieModel};
use crate::report::CheckResult;
use crate::root_data::{GroupFamily, WeylElement};

fn g(n: i64) -> GaussRational {
    GaussRational::from_int(n)
}

fn half() -> GaussRational {
    GaussRational::real(Rational::new(1.into(), 2.into()))
}

fn result(ts: &TensorSpace, check: &str, params: impl Into<String>) -> CheckResult {
    CheckResult::new(check, ts.model().group().to_string(), params)
}

fn err(ts: &TensorSpace, check: &str, e: &Error) -> CheckResult {
    result(ts, check, "").with(false, || e.to_string())
}

fn label(w: &WeylElement) -> String {
    format!("{:?}", w.images())
}

/// The geometric `W_ℝ`-action on the invariants has the regular character.
pub fn regular_rep_check(ts: &TensorSpace, basis: &InvariantBasis) -> CheckResult {
    let order = ts.weyl_datum().weyl_order();
    let mut traces = Vec::new();
    for w in ts.weyl_datum().weyl_enumerate() {
        let m = match basis.matrix_of(|v| ts.geometric(&w, v)) {
            Ok(m) => m,
            Err(e) => return err(ts, "regular_rep", &e).with(false, || format!("w = {}", label(&w))),
        };
        let t = m.trace();
        let expect = if w.is_identity() { g(order as i64) } else { GaussRational::default() };
        if t != expect {
            return result(ts, "regular_rep", format!("w={}", label(&w)))
                .with(false, || format!("trace {t} at w = {}, expected {expect}", label(&w)));
        }
        traces.push(t.to_string());
    }
    result(ts, "regular_rep", format!("traces={}", traces.join(",")))
        .with(basis.len() == order, || format!("{} invariants for |W| = {order}", basis.len()))
}

/// `τ(Z_α)(τ(Z_α)² + 4)` kills every invariant, for each simple `α`.
pub fn single_petal_check(ts: &TensorSpace, basis: &InvariantBasis) -> CheckResult {
    for rv in ts.model().simple_roots() {
        let z = |v: &[GaussRational]| ts.act_lie(&rv.z, v);
        for (b, w) in basis.vectors.iter().zip(&basis.labels) {
            let z1 = z(b);
            let z3 = z(&z(&z1));
            let out: Vector = z3.iter().zip(&z1).map(|(a, c)| a.clone() + c.clone() * g(4)).collect();
            if !ops::is_zero(&out) {
                return result(ts, "single_petal", format!("alpha={:?}", rv.alpha))
                    .with(false, || format!("Z(Z²+4) does not kill the invariant labelled {}", label(w)));
            }
        }
    }
    result(ts, "single_petal", format!("roots={}", ts.model().simple_roots().len())).with(!basis.is_empty(), || {
        "no invariants".into()
    })
}

/// Geometric and Hecke-side actions of `W_ℝ` on the invariants.
///
/// The two actions agree on the vector labelled by the identity for every
/// simple reflection and commute with each other, so they are the left and
/// right regular actions under the same identification with `ℂ[W_ℝ]`; when
/// `W_ℝ` is abelian they coincide.
pub fn weyl_match_check(ts: &TensorSpace, basis: &InvariantBasis) -> CheckResult {
    let id = WeylElement::identity(ts.weyl_datum().k());
    let Some(i0) = basis.index_of(&id) else {
        return result(ts, "weyl_match", "").with(false, || "no invariant labelled by the identity".into());
    };
    let v0 = &basis.vectors[i0];
    let gens = ts.weyl_datum().simple_reflections();
    let run = || -> Result<Option<String>> {
        for (s, w) in gens.iter().enumerate() {
            if ts.geometric(w, v0)? != ts.pi_simple(s, v0)? {
                return Ok(Some(format!("generator {s} differs on the identity vector")));
            }
        }
        for rv in ts.model().simple_roots() {
            let w = WeylElement::reflection(&rv.alpha);
            if ts.act_group(&rv.k, v0) != ts.pi_weyl(&w, v0)? {
                return Ok(Some(format!("k_α for α = {:?} differs on the identity vector", rv.alpha)));
            }
        }
        for (s, ws) in gens.iter().enumerate() {
            for t in 0..gens.len() {
                for b in &basis.vectors {
                    let lhs = ts.geometric(ws, &ts.pi_simple(t, b)?)?;
                    let rhs = ts.pi_simple(t, &ts.geometric(ws, b)?)?;
                    if lhs != rhs {
                        return Ok(Some(format!("generators {s} (geometric) and {t} (Hecke) do not commute")));
                    }
                }
            }
        }
        let abelian = gens.iter().all(|a| gens.iter().all(|b| a.compose(b) == b.compose(a)));
        if abelian {
            for (s, w) in gens.iter().enumerate() {
                for b in &basis.vectors {
                    if ts.geometric(w, b)? != ts.pi_simple(s, b)? {
                        return Ok(Some(format!("generator {s} differs although W is abelian")));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => result(ts, "weyl_match", format!("generators={}", gens.len())),
        Ok(Some(w)) => result(ts, "weyl_match", "").with(false, || w),
        Err(e) => err(ts, "weyl_match", &e),
    }
}

/// `π_k(Ω^k_{i,j}) = −½ π_k(s_{i,j} + s̄_j s_{i,j} s̄_j)` on the invariants.
pub fn kact_identity_check(ts: &TensorSpace, basis: &InvariantBasis) -> CheckResult {
    let run = || -> Result<Option<String>> {
        for i in 1..=ts.k() {
            for j in i + 1..=ts.k() {
                for b in &basis.vectors {
                    let lhs = ts.omega(i, j, Part::K, b)?;
                    let a = ts.pi_transposition(i, j, b);
                    let c = ts.pi_sbar(j, &ts.pi_transposition(i, j, &ts.pi_sbar(j, b)?))?;
                    let rhs: Vector = a.iter().zip(&c).map(|(x, y)| (x.clone() + y.clone()) * -half()).collect();
                    if lhs != rhs {
                        return Ok(Some(format!("fails at (i,j) = ({i},{j})")));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => result(ts, "kact_identity", format!("pairs={}", ts.k() * ts.k().saturating_sub(1) / 2)),
        Ok(Some(w)) => result(ts, "kact_identity", "").with(false, || w),
        Err(e) => err(ts, "kact_identity", &e),
    }
}

/// `(r_μ, c_μ)` with `Q_μ − r_μ = c_μ ξ` on `V`.
pub fn q_mu_parameters(ts: &TensorSpace) -> Result<(Rational, Rational)> {
    ts.model().q_mu_parameters(ts.mu())
}

/// The contraction `pr_i` of slots `i, i+1` with the form `J` kills the
/// invariants. Only for the non-type-A families `Sp` and `O`.
pub fn contraction_kernel_check(ts: &TensorSpace, basis: &InvariantBasis, i: usize) -> Result<CheckResult> {
    let model = ts.model();
    if model.kind() == Kind::Gl {
        return Err(Error::UnsupportedGroup(format!("{} is of type A", model.group())));
    }
    if i == 0 || i >= ts.k() {
        return Err(Error::Other(format!("contraction index {i} out of range for k = {}", ts.k())));
    }
    let j = model.form().expect("non-type-A models carry a form");
    for (b, w) in basis.vectors.iter().zip(&basis.labels) {
        if !ops::is_zero(&ts.shape().contract(i, j, b)) {
            return Ok(result(ts, "contraction_kernel", format!("i={i}"))
                .with(false, || format!("pr_{i} is nonzero on the invariant labelled {}", label(w))));
        }
    }
    Ok(result(ts, "contraction_kernel", format!("i={i}")))
}

/// `π(s̄_j)π(Ω_{i,j}) + π(Ω_{i,j})π(s̄_j) = 2 π(s̄_j)π(Ω^k_{i,j})` on the
/// whole space, for all slot pairs `1 ≤ i ≠ j ≤ k`.
pub fn sbar_anticommutator_check(ts: &TensorSpace) -> CheckResult {
    let shape = ts.shape();
    let run = || -> Result<Option<String>> {
        for i in 1..=ts.k() {
            for j in 1..=ts.k() {
                if i == j {
                    continue;
                }
                for idx in 0..shape.size() {
                    let e = shape.basis_vector(&shape.digits(idx));
                    let a = ts.pi_sbar(j, &ts.omega(i, j, Part::Full, &e)?)?;
                    let b = ts.omega(i, j, Part::Full, &ts.pi_sbar(j, &e)?)?;
                    let c = ts.pi_sbar(j, &ts.omega(i, j, Part::K, &e)?)?;
                    let lhs: Vector = a.iter().zip(&b).map(|(x, y)| x.clone() + y.clone()).collect();
                    if lhs != ops::scale(&c, &g(2)) {
                        return Ok(Some(format!("fails at (i,j) = ({i},{j})")));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => result(ts, "sbar_anticommutator", format!("k={}", ts.k())),
        Ok(Some(w)) => result(ts, "sbar_anticommutator", "").with(false, || w),
        Err(e) => err(ts, "sbar_anticommutator", &e),
    }
}

/// Relations of the algebra generated by the `π(Ω_{i,j})` and the signed
/// slot permutations, for slot indices `≥ 1`.
pub fn ak_relations_check(ts: &TensorSpace) -> CheckResult {
    let k = ts.k();
    let shape = ts.shape();
    let om = |i: usize, j: usize, v: &[GaussRational]| ts.omega(i, j, Part::Full, v).expect("valid slots");
    let run = || -> Option<String> {
        for idx in 0..shape.size() {
            let e = shape.basis_vector(&shape.digits(idx));
            for i in 1..=k {
                for j in 1..=k {
                    if i == j {
                        continue;
                    }
                    for m in 1..=k {
                        if m == i || m == j {
                            continue;
                        }
                        let lhs = {
                            let x = om(i, j, &e);
                            let mut y = om(i, m, &x);
                            ops::add_into(&mut y, &om(j, m, &x));
                            y
                        };
                        let rhs = {
                            let mut x = om(i, m, &e);
                            ops::add_into(&mut x, &om(j, m, &e));
                            om(i, j, &x)
                        };
                        if lhs != rhs {
                            return Some(format!("[Ω_{i}{j}, Ω_{i}{m} + Ω_{j}{m}] ≠ 0"));
                        }
                        if i < j {
                            let lhs = ts.pi_transposition(i, j, &om(i, m, &e));
                            let rhs = om(j, m, &ts.pi_transposition(i, j, &e));
                            if lhs != rhs {
                                return Some(format!("s_{i}{j} Ω_{i}{m} ≠ Ω_{j}{m} s_{i}{j}"));
                            }
                        }
                        for l in 1..=k {
                            if l == i || l == j || l == m {
                                continue;
                            }
                            if om(i, j, &om(m, l, &e)) != om(m, l, &om(i, j, &e)) {
                                return Some(format!("[Ω_{i}{j}, Ω_{m}{l}] ≠ 0"));
                            }
                            if i < j && ts.pi_transposition(i, j, &om(m, l, &e)) != om(m, l, &ts.pi_transposition(i, j, &e)) {
                                return Some(format!("s_{i}{j} does not commute with Ω_{m}{l}"));
                            }
                        }
                    }
                }
            }
        }
        None
    };
    match run() {
        None => result(ts, "ak_relations", format!("k={k}")),
        Some(w) => result(ts, "ak_relations", format!("k={k}")).with(false, || w),
    }
}

/// Every `π(Ω_{i,j})` and every signed permutation commutes with the
/// diagonal action of `g`.
pub fn diagonal_commutation_check(ts: &TensorSpace) -> CheckResult {
    let k = ts.k();
    let shape = ts.shape();
    for idx in 0..shape.size() {
        let e = shape.basis_vector(&shape.digits(idx));
        for b in ts.model().basis() {
            let x = |v: &[GaussRational]| shape.apply_derivation(&b.matrix, v);
            for i in 1..=k {
                for j in 1..=k {
                    if i == j {
                        continue;
                    }
                    let o = |v: &[GaussRational]| ts.omega(i, j, Part::Full, v).expect("valid slots");
                    if o(&x(&e)) != x(&o(&e)) {
                        return result(ts, "diagonal_commutation", format!("k={k}"))
                            .with(false, || format!("Ω_{i}{j} does not commute with g"));
                    }
                    if i < j && ts.pi_transposition(i, j, &x(&e)) != x(&ts.pi_transposition(i, j, &e)) {
                        return result(ts, "diagonal_commutation", format!("k={k}"))
                            .with(false, || format!("s_{i}{j} does not commute with g"));
                    }
                }
            }
        }
    }
    result(ts, "diagonal_commutation", format!("k={k}"))
}

/// `s_{i,i+1}ε_i − ε_{i+1}s_{i,i+1} = −Ω_{i,i+1}s_{i,i+1}` for the partial
/// sums `ε_l = Σ_{1≤a<l} Ω_{a,l}`.
pub fn partial_sum_check(ts: &TensorSpace) -> CheckResult {
    let k = ts.k();
    let shape = ts.shape();
    let eps = |l: usize, v: &[GaussRational]| {
        let mut out = shape.zero();
        for a in 1..l {
            ops::add_into(&mut out, &ts.omega(a, l, Part::Full, v).expect("valid slots"));
        }
        out
    };
    for idx in 0..shape.size() {
        let e = shape.basis_vector(&shape.digits(idx));
        for i in 1..k {
            let s = |v: &[GaussRational]| ts.pi_transposition(i, i + 1, v);
            let lhs = ops::sub(&s(&eps(i, &e)), &eps(i + 1, &s(&e)));
            let rhs = ops::scale(&ts.omega(i, i + 1, Part::Full, &s(&e)).expect("valid slots"), &g(-1));
            if lhs != rhs {
                return result(ts, "partial_sum", format!("k={k}")).with(false, || format!("fails at i = {i}"));
            }
        }
    }
    result(ts, "partial_sum", format!("k={k}"))
}

/// The standard coordinate inner product on `V` satisfies `(k u, v) =
/// (u, k⁻¹ v)` for the listed elements of `K_ℝ` and `(E u, v) = (u, E v)` for
/// `E ∈ p_ℝ`; on `k_ℝ` the adjoint is `−X`.
pub fn form_positivity_check(model: &LieModel) -> CheckResult {
    let group = model.group().to_string();
    let res = CheckResult::new("form_positivity", group, "");
    let real_parts = |b: &CMatrix| {
        let t = model.tau(b);
        [b.add(&t), b.sub(&t).scale(&GaussRational::i())]
    };
    for b in model.basis() {
        for x in real_parts(&b.matrix) {
            if x.is_zero() {
                continue;
            }
            let adj = x.conj_transpose();
            let ok = if b.in_k { adj == x.neg() } else { adj == x };
            if !ok {
                return res.with(false, || format!("basis element in {} is not {}", if b.in_k { "k" } else { "p" }, if b.in_k {
                    "skew-adjoint"
                } else {
                    "self-adjoint"
                }));
            }
        }
    }
    let mut group_elements: Vec<CMatrix> = model.m_finite().to_vec();
    group_elements.extend(model.simple_roots().iter().map(|rv| rv.k.clone()));
    group_elements.extend(model.extra_component().cloned());
    for k in &group_elements {
        let Ok(inv) = k.inverse() else {
            return res.with(false, || "group element is singular".into());
        };
        if k.conj_transpose() != inv {
            return res.with(false, || "group element is not unitary".into());
        }
    }
    res
}

/// Outside type A the slot operators only give a Hecke action when `k` is
/// the real rank: with `k + 2` slots some invariant has a nonzero
/// contraction, so `π(Ω_{1,2})` differs from `R_{1,2}` there.
pub fn rank_sensitivity_check(model: &LieModel) -> Result<CheckResult> {
    if model.kind() == Kind::Gl {
        return Err(Error::UnsupportedGroup(format!("{} is of type A", model.group())));
    }
    let m = model.rank() + 2;
    let ts = TensorSpace::with_slots(model.clone(), m);
    let inv = solve_invariants(&ts, m)?;
    let j = model.form().expect("form");
    let witness = inv.iter().find(|v| !ops::is_zero(&ts.shape().contract(1, j, v)));
    let res = result(&ts, "rank_sensitivity", format!("slots={m}"));
    Ok(match witness {
        Some(v) => {
            let omega = ts.omega(1, 2, Part::Full, v)?;
            let flip = ts.shape().flip(1, 2, v);
            res.with(omega != flip, || "Ω_12 agrees with R_12 although the contraction is nonzero".into())
        }
        None => res.with(false, || format!("no invariant in {m} slots with nonzero contraction")),
    })
}

/// All tensor checks for one group, in a fixed order.
pub fn verify_all(model: &LieModel) -> Vec<CheckResult> {
    let ts = TensorSpace::new(model.clone());
    let mut out = Vec::new();
    let basis = match invariants(&ts, ts.k()) {
        Ok(b) => b,
        Err(e) => return vec![err(&ts, "invariants", &e)],
    };
    out.push(result(&ts, "invariants", format!("dim={}", basis.len())).with(
        basis.len() == ts.weyl_datum().weyl_order(),
        || format!("expected {}", ts.weyl_datum().weyl_order()),
    ));
    if ts.k() > 1 {
        let below = invariants(&ts, ts.k() - 1);
        out.push(
            result(&ts, "invariants_below_rank", format!("m={}", ts.k() - 1))
                .with(below.as_ref().is_ok_and(|b| b.is_empty()), || "nonzero invariants below the rank".into()),
        );
    }
    out.push(regular_rep_check(&ts, &basis));
    out.push(single_petal_check(&ts, &basis));
    out.push(weyl_match_check(&ts, &basis));
    out.push(form_positivity_check(model));
    if model.group().family != GroupFamily::GL {
        out.push(kact_identity_check(&ts, &basis));
        out.push(sbar_anticommutator_check(&ts));
        let mu = model.mu0();
        let res = result(&ts, "q_mu_parameters", format!("m_p={};m_q={}", mu.m_p, mu.m_q));
        out.push(match q_mu_parameters(&ts) {
            Ok((r, c)) => CheckResult { parameters: format!("{};r={r};c={c}", res.parameters), ..res },
            Err(e) => res.with(false, || e.to_string()),
        });
    }
    if model.kind() != Kind::Gl {
        for i in 1..ts.k() {
            out.push(contraction_kernel_check(&ts, &basis, i).unwrap_or_else(|e| err(&ts, "contraction_kernel", &e)));
        }
    }
    out.push(partial_sum_check(&ts));
    out.push(ak_relations_check(&ts));
    out
}
