use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num_traits::Zero;

use super::pbw::{IwasawaBasis, UEAElement};
use super::xr::{gamma_map, lift_matrices, poly_add_term, APoly, TruncatedXR, XElement};
use crate::error::{Error, Result};
use crate::exact_kernel::{ExactMatrix, Field, GaussRational, Rational, Ring};
use crate::hecke_algebra::HeckeAlgebra;
use crate::lie_models::{CMatrix, LieModel};
use crate::principal_series::PrincipalSeries;
use crate::report::CheckResult;
use crate::root_data::WeylElement;
use crate::tensor_model::{closed_form_basis, Shape, TensorSpace, Vector};

/// Largest linear system `equivariant_homs` is allowed to set up.
pub const DEFAULT_UNKNOWN_CAP: usize = 4000;

/// An element of `(S(p)_{≤d} ⊗ μ₀*⊗V^{⊗k})^K`, that is a `K`-map
/// `V_τ → S(p)_{≤d}` with `V_τ = (μ₀*⊗V^{⊗k})*`. Component `c` is the
/// polynomial paired with the `c`-th coordinate of `μ₀*⊗V^{⊗k}`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EquivariantHom {
    pub degree: usize,
    pub components: BTreeMap<usize, APoly>,
}

/// The data shared by the computations around `Γ`: the tensor space, the
/// truncated `𝒳^ℝ`, the cyclic vector `v = λ⊗λ₁⊗⋯⊗λ_k` of `V_τ^M`, and
/// the basis `f_i` of `a` with `f_i λ_j = δ_{ij}`.
pub struct OdaSetup {
    ts: TensorSpace,
    xr: TruncatedXR,
    p: Vec<CMatrix>,
    p_dual: Vec<CMatrix>,
    m_vectors: Vec<(WeylElement, Vector)>,
    f: Vec<Vec<GaussRational>>,
    iota: Vec<Vec<GaussRational>>,
    shift: Vec<GaussRational>,
    sym_cache: Mutex<HashMap<Vec<usize>, UEAElement>>,
}

impl OdaSetup {
    pub fn new(model: &LieModel, d: usize) -> Result<Self> {
        let ts = TensorSpace::new(model.clone());
        let xr = TruncatedXR::new(IwasawaBasis::new(model)?, d);
        let (p, p_dual): (Vec<CMatrix>, Vec<CMatrix>) =
            model.basis().iter().filter(|b| !b.in_k).map(|b| (b.matrix.clone(), b.dual.clone())).unzip();
        let closed = closed_form_basis(&ts)?;
        let m_vectors: Vec<(WeylElement, Vector)> =
            closed.labels.iter().cloned().zip(closed.vectors.iter().cloned()).collect();
        let mut out = Self {
            ts,
            xr,
            p,
            p_dual,
            m_vectors,
            f: Vec::new(),
            iota: Vec::new(),
            shift: Vec::new(),
            sym_cache: Mutex::default(),
        };
        for (_, v) in &out.m_vectors {
            if !out.is_m_fixed(v) {
                return Err(Error::Other("closed-form covector is not M-fixed".into()));
            }
        }
        out.fix_a_basis()?;
        out.shift = vec![GaussRational::default(); out.iota.len()];
        Ok(out)
    }

    pub fn with_shift(mut self, t: i64) -> Self {
        self.shift = self.basis().rho().into_iter().map(|r| GaussRational::real(r) * GaussRational::from_int(t)).collect();
        self
    }

    pub fn tensor_space(&self) -> &TensorSpace {
        &self.ts
    }

    pub fn xr(&self) -> &TruncatedXR {
        &self.xr
    }

    pub fn basis(&self) -> &IwasawaBasis {
        self.xr.basis()
    }

    pub fn degree_bound(&self) -> usize {
        self.xr.degree_bound()
    }

    fn shape(&self) -> Shape {
        self.ts.shape()
    }

    /// The `M`-fixed covectors of `V_τ`, labelled by `W_ℝ`.
    pub fn m_fixed(&self) -> &[(WeylElement, Vector)] {
        &self.m_vectors
    }

    /// The cyclic vector `v` (label: identity).
    pub fn cyclic(&self) -> &Vector {
        &self.m_vectors.iter().find(|(w, _)| w.is_identity()).expect("identity label").1
    }

    /// `f_i` in the coordinates `H_1, …, H_k`.
    pub fn f(&self, i: usize) -> &[GaussRational] {
        &self.f[i - 1]
    }

    /// `H_j` in the Hecke coordinates `ε_1, …, ε_k`.
    pub fn iota(&self) -> &[Vec<GaussRational>] {
        &self.iota
    }

    /// `φ ↦ φ∘A_i` for a covector `φ` and a matrix acting in slot `i`.
    fn pull_slot(&self, i: usize, a: &CMatrix, phi: &[GaussRational]) -> Vector {
        self.shape().apply_slot(i, &a.transpose(), phi)
    }

    /// `φ ↦ φ∘τ(g)⁻¹`, the contragredient action of `g ∈ K`.
    fn act_covector(&self, g: &CMatrix, phi: &[GaussRational]) -> Result<Vector> {
        let inv = g.inverse()?;
        let m = self.shape().matrix_of(|t| self.ts.act_group(&inv, t));
        Ok(m.transpose().apply(phi))
    }

    fn is_m_fixed(&self, phi: &[GaussRational]) -> bool {
        let model = self.ts.model();
        let lie_ok = model.m().iter().all(|x| {
            let m = self.shape().matrix_of(|t| self.ts.act_lie(x, t));
            m.transpose().apply(phi).iter().all(Zero::is_zero)
        });
        lie_ok && model.m_finite().iter().all(|g| self.act_covector(g, phi).is_ok_and(|w| w == phi))
    }

    fn fix_a_basis(&mut self) -> Result<()> {
        let model = self.ts.model().clone();
        let a = model.a();
        let k = a.len();
        let gram = ExactMatrix::from_fn(k, k, |i, j| model.kappa(&a[i], &a[j]));
        let ginv = gram.inverse()?;
        let duals: Vec<CMatrix> = (0..k)
            .map(|j| (0..k).fold(CMatrix::zeros(a[0].rows(), a[0].cols()), |acc, l| acc.add(&a[l].scale(ginv.get(l, j)))))
            .collect();
        let v = self.cyclic().clone();
        let pivot = v.iter().position(|x| !x.is_zero()).expect("nonzero cyclic vector");
        let mut w = ExactMatrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                let img = self.pull_slot(i + 1, &duals[j], &v);
                let c = img[pivot].clone() * v[pivot].inv().expect("pivot");
                if img != crate::tensor_model::Vector::from_iter(v.iter().map(|x| x.clone() * c.clone())) {
                    return Err(Error::Other(format!("slot {} of the cyclic vector is not an a-weight vector", i + 1)));
                }
                w.set(i, j, c);
            }
        }
        let winv = w.inverse()?;
        self.f = (0..k).map(|i| w.row(i).to_vec()).collect();
        self.iota = (0..k).map(|j| winv.row(j).to_vec()).collect();
        Ok(())
    }

    fn p_coords(&self, y: &CMatrix) -> Vec<GaussRational> {
        let model = self.ts.model();
        self.p_dual.iter().map(|d| model.kappa(y, d)).collect()
    }

    /// Symmetrization `S(p) → 𝒳^ℝ` of a monomial in the `p`-basis.
    fn symmetrized(&self, m: &[usize]) -> Result<UEAElement> {
        if let Some(hit) = self.sym_cache.lock().expect("cache lock").get(m) {
            return Ok(hit.clone());
        }
        let factors: Vec<CMatrix> = m.iter().map(|&i| self.p[i].clone()).collect();
        let u = self.xr.symmetrized(&factors)?;
        self.sym_cache.lock().expect("cache lock").insert(m.to_vec(), u.clone());
        Ok(u)
    }

    /// `Υ(φ)` in `𝒳^ℝ` for a covector `φ`.
    pub fn evaluate(&self, hom: &EquivariantHom, phi: &[GaussRational]) -> Result<UEAElement> {
        let mut out = UEAElement::zero();
        for (&c, poly) in &hom.components {
            if phi[c].is_zero() {
                continue;
            }
            for (m, x) in poly {
                out = out.add(&self.symmetrized(m)?.scale(&(x.clone() * phi[c].clone())));
            }
        }
        Ok(out)
    }

    /// `Γ(Υ)(φ) = γ(Υ(φ))`.
    pub fn gamma(&self, hom: &EquivariantHom, phi: &[GaussRational]) -> Result<XElement> {
        Ok(gamma_map(self.basis(), &self.iota, &self.shift, &self.evaluate(hom, phi)?))
    }

    /// `(f̃_i·Υ)(v) = Σ_{E∈B∩p} E·Υ(λ⊗⋯⊗E*λ_i⊗⋯)` in `𝒳^ℝ`.
    pub fn left_action(&self, hom: &EquivariantHom, i: usize, phi: &[GaussRational]) -> Result<UEAElement> {
        let mut out = UEAElement::zero();
        for (e, dual) in self.p.iter().zip(&self.p_dual) {
            let pulled = self.pull_slot(i, dual, phi);
            if pulled.iter().all(Zero::is_zero) {
                continue;
            }
            let u = self.evaluate(hom, &pulled)?;
            out = out.add(&self.xr.left_mul(e, &u)?);
        }
        Ok(out)
    }
}

fn sorted(mut m: Vec<usize>) -> Vec<usize> {
    m.sort_unstable();
    m
}

fn monomials(n: usize, deg: usize) -> Vec<Vec<usize>> {
    let mut layer: Vec<Vec<usize>> = vec![Vec::new()];
    for _ in 0..deg {
        let mut next = Vec::new();
        for m in &layer {
            for x in m.last().copied().unwrap_or(0)..n {
                let mut mm = m.clone();
                mm.push(x);
                next.push(mm);
            }
        }
        layer = next;
    }
    layer
}

type Key = (Vec<usize>, usize);

/// Basis of `Hom_K(V_τ, S(p)_{≤d})`, degree by degree, with the default cap.
pub fn equivariant_homs(setup: &OdaSetup) -> Result<Vec<EquivariantHom>> {
    equivariant_homs_capped(setup, DEFAULT_UNKNOWN_CAP)
}

pub fn equivariant_homs_capped(setup: &OdaSetup, cap: usize) -> Result<Vec<EquivariantHom>> {
    let mut out = Vec::new();
    for deg in 0..=setup.degree_bound() {
        out.extend(homs_in_degree(setup, deg, cap)?);
    }
    Ok(out)
}

fn homs_in_degree(setup: &OdaSetup, deg: usize, cap: usize) -> Result<Vec<EquivariantHom>> {
    let model = setup.ts.model();
    let shape = setup.shape();
    let np = setup.p.len();
    let monos = monomials(np, deg);
    let ad: Vec<Vec<Vec<GaussRational>>> = model
        .k_basis()
        .iter()
        .map(|x| setup.p.iter().map(|y| setup.p_coords(&x.commutator(y))).collect())
        .collect();
    let tau_lie: Vec<CMatrix> =
        model.k_basis().iter().map(|x| shape.matrix_of(|t| setup.ts.act_lie(x, t))).collect();
    let mut finite: Vec<CMatrix> = model.m_finite().to_vec();
    finite.extend(model.extra_component().cloned());
    let ad_group: Vec<Vec<Vec<GaussRational>>> = finite
        .iter()
        .map(|g| {
            let ginv = g.inverse().expect("group element");
            setup.p.iter().map(|y| setup.p_coords(&g.mul(y).mul(&ginv))).collect()
        })
        .collect();
    let tau_group: Vec<CMatrix> =
        finite.iter().map(|g| shape.matrix_of(|t| setup.ts.act_group(g, t))).collect();

    let group_image = |gi: usize, key: &Key| -> BTreeMap<Key, GaussRational> {
        let mut polys: APoly = APoly::new();
        polys.insert(Vec::new(), GaussRational::from_int(1));
        for &a in &key.0 {
            let mut next = APoly::new();
            for (m, c) in &polys {
                for (b, x) in ad_group[gi][a].iter().enumerate() {
                    if !x.is_zero() {
                        let mut mm = m.clone();
                        mm.push(b);
                        poly_add_term(&mut next, mm, c.clone() * x.clone());
                    }
                }
            }
            polys = next;
        }
        let mut img = BTreeMap::new();
        for r in 0..shape.size() {
            let t = tau_group[gi].get(r, key.1);
            if t.is_zero() {
                continue;
            }
            for (m, c) in &polys {
                add_key(&mut img, (m.clone(), r), c.clone() * t.clone());
            }
        }
        img
    };

    let mut candidates: Vec<Key> = Vec::new();
    let mut nondiagonal = Vec::new();
    for gi in 0..finite.len() {
        let diagonal = monos.iter().all(|m| (0..shape.size()).all(|c| {
            let key = (m.clone(), c);
            let img = group_image(gi, &key);
            img.keys().all(|k| *k == key)
        }));
        if !diagonal {
            nondiagonal.push(gi);
        }
    }
    for m in &monos {
        for c in 0..shape.size() {
            let key = (m.clone(), c);
            let fixed = (0..finite.len()).filter(|gi| !nondiagonal.contains(gi)).all(|gi| {
                let img = group_image(gi, &key);
                img.get(&key).is_some_and(|x| *x == GaussRational::from_int(1))
            });
            if fixed {
                candidates.push(key);
            }
        }
    }
    if candidates.len() > cap {
        return Err(Error::Other(format!(
            "equivariant homs in degree {deg}: {} unknowns exceed the cap {cap}",
            candidates.len()
        )));
    }
    if candidates.is_empty() {
        return Ok(Vec::new());
    }

    let mut columns: Vec<BTreeMap<Key, GaussRational>> = Vec::new();
    for key in &candidates {
        let mut col: BTreeMap<Key, GaussRational> = BTreeMap::new();
        for (xi, adx) in ad.iter().enumerate() {
            let mut img = BTreeMap::new();
            for t in 0..key.0.len() {
                for (b, x) in adx[key.0[t]].iter().enumerate() {
                    if !x.is_zero() {
                        let mut mm = key.0.clone();
                        mm[t] = b;
                        add_key(&mut img, (sorted(mm), key.1), x.clone());
                    }
                }
            }
            for r in 0..shape.size() {
                let t = tau_lie[xi].get(r, key.1);
                if !t.is_zero() {
                    add_key(&mut img, (key.0.clone(), r), t.clone());
                }
            }
            for (k, v) in img {
                col.insert((k.0, k.1 + xi * shape.size()), v);
            }
        }
        for (slot, &gi) in nondiagonal.iter().enumerate() {
            let mut img = group_image(gi, key);
            add_key(&mut img, key.clone(), GaussRational::from_int(-1));
            let offset = (ad.len() + slot) * shape.size();
            for (k, v) in img {
                col.insert((k.0, k.1 + offset), v);
            }
        }
        columns.push(col);
    }
    let rows: Vec<Key> = {
        let mut all: Vec<Key> = columns.iter().flat_map(|c| c.keys().cloned()).collect();
        all.sort();
        all.dedup();
        all
    };
    let kernel: Vec<Vec<GaussRational>> = if rows.is_empty() {
        (0..candidates.len())
            .map(|i| (0..candidates.len()).map(|j| GaussRational::from_int((i == j) as i64)).collect())
            .collect()
    } else {
        let index: HashMap<&Key, usize> = rows.iter().enumerate().map(|(i, k)| (k, i)).collect();
        let mut a = ExactMatrix::zeros(rows.len(), candidates.len());
        for (c, col) in columns.iter().enumerate() {
            for (k, v) in col {
                a.set(index[k], c, v.clone());
            }
        }
        a.nullspace()
    };
    Ok(kernel
        .into_iter()
        .map(|coeffs| {
            let mut components: BTreeMap<usize, APoly> = BTreeMap::new();
            for (x, key) in coeffs.iter().zip(&candidates) {
                if !x.is_zero() {
                    poly_add_term(components.entry(key.1).or_default(), key.0.clone(), x.clone());
                }
            }
            EquivariantHom { degree: deg, components }
        })
        .collect())
}

fn add_key(map: &mut BTreeMap<Key, GaussRational>, k: Key, c: GaussRational) {
    if c.is_zero() {
        return;
    }
    let e = map.entry(k.clone()).or_default();
    *e = e.clone() + c;
    if e.is_zero() {
        map.remove(&k);
    }
}

/// `Γ(Υ)` on the `M`-fixed covectors, labelled by `W_ℝ`.
pub fn oda_gamma(setup: &OdaSetup, hom: &EquivariantHom) -> Result<Vec<(WeylElement, XElement)>> {
    setup.m_fixed().iter().map(|(w, phi)| Ok((w.clone(), setup.gamma(hom, phi)?))).collect()
}

fn check(setup: &OdaSetup, name: &str, params: String) -> CheckResult {
    CheckResult::new(name, setup.ts.model().group().to_string(), params)
}

/// `Γ(Υ)(k_w·φ) = w·Γ(Υ)(φ)` on the `M`-fixed covectors, for the simple
/// reflections.
pub fn gamma_equivariance_check(setup: &OdaSetup, homs: &[EquivariantHom]) -> CheckResult {
    let res = check(setup, "oda_equivariance", format!("d = {}, homs = {}", setup.degree_bound(), homs.len()));
    let datum = setup.ts.weyl_datum().clone();
    for (h, hom) in homs.iter().enumerate() {
        for s in 0..datum.simple_roots().len() {
            let w = datum.reflection(&datum.simple_roots()[s]);
            let run = || -> Result<Option<String>> {
                let k = setup.ts.k_simple(s)?;
                for (label, phi) in setup.m_fixed() {
                    let moved = setup.act_covector(&k, phi)?;
                    let lhs = setup.gamma(hom, &moved)?;
                    let rhs = setup.gamma(hom, phi)?.act_weyl(&w);
                    if lhs != rhs {
                        return Ok(Some(format!(
                            "hom {h} (degree {}), s{s}, at {}: Γ(k_s·φ) = {lhs}, s·Γ(φ) = {rhs}",
                            hom.degree, label
                        )));
                    }
                }
                Ok(None)
            };
            match run() {
                Ok(None) => {}
                Ok(Some(msg)) => return res.with(false, || msg),
                Err(e) => return res.with(false, || e.to_string()),
            }
        }
    }
    res.with(true, String::new)
}

/// Rank of `Υ ↦ Γ(Υ)` on the given homs, compared with their number.
pub fn gamma_injectivity_check(setup: &OdaSetup, homs: &[EquivariantHom]) -> CheckResult {
    let res = check(setup, "oda_injective", format!("d = {}, homs = {}", setup.degree_bound(), homs.len()));
    let mut images: Vec<Vec<(usize, Vec<usize>, GaussRational)>> = Vec::new();
    for hom in homs {
        match oda_gamma(setup, hom) {
            Ok(vals) => images.push(
                vals.into_iter()
                    .enumerate()
                    .flat_map(|(i, (_, x))| x.poly.into_iter().map(move |(m, c)| (i, m, c)))
                    .collect(),
            ),
            Err(e) => return res.with(false, || e.to_string()),
        }
    }
    let mut keys: Vec<(usize, Vec<usize>)> = images.iter().flatten().map(|(i, m, _)| (*i, m.clone())).collect();
    keys.sort();
    keys.dedup();
    let rows: Vec<Vec<GaussRational>> = images
        .iter()
        .map(|img| {
            let mut row = vec![GaussRational::default(); keys.len()];
            for (i, m, c) in img {
                let pos = keys.binary_search(&(*i, m.clone())).expect("key");
                row[pos] = c.clone();
            }
            row
        })
        .collect();
    let rank = if rows.is_empty() || keys.is_empty() { 0 } else { ExactMatrix::from_rows(rows).rank() };
    res.with(rank == homs.len(), || format!("rank {rank} for {} homs", homs.len()))
}

fn show_pair(v: &(Vec<Rational>, Vec<Rational>)) -> String {
    let parts: Vec<String> = v
        .0
        .iter()
        .zip(&v.1)
        .map(|(re, im)| GaussRational { re: re.clone(), im: im.clone() }.to_string())
        .collect();
    format!("[{}]", parts.join(", "))
}

fn apply_pair(m: &ExactMatrix<Rational>, v: &(Vec<Rational>, Vec<Rational>)) -> (Vec<Rational>, Vec<Rational>) {
    (m.apply(&v.0), m.apply(&v.1))
}

/// `Γ_ν(f̃_i·Υ) = f̃_i·Γ_ν(Υ)` in `X(ν)` for every hom and every `i`.
pub fn intertwining_check(setup: &OdaSetup, homs: &[EquivariantHom], nu: &[Rational]) -> CheckResult {
    let res = check(
        setup,
        "intertwining",
        format!("nu = {:?}, d = {}, homs = {}", nu.iter().map(|x| x.to_string()).collect::<Vec<_>>(), setup.degree_bound(), homs.len()),
    );
    let run = || -> Result<Option<String>> {
        let alg = HeckeAlgebra::from_group(setup.ts.model().group())?;
        let ps = PrincipalSeries::new(&alg, nu)?;
        let lifts = lift_matrices(&ps);
        let v = setup.cyclic().clone();
        for (h, hom) in homs.iter().enumerate() {
            let base = setup.gamma(hom, &v)?;
            let base_nu = base.evaluate(&ps);
            for i in 1..=setup.ts.k() {
                let lhs = gamma_map(setup.basis(), setup.iota(), &setup.shift, &setup.left_action(hom, i, &v)?);
                let lhs_nu = lhs.evaluate(&ps);
                let rhs_nu = apply_pair(&lifts[i - 1], &base_nu);
                if lhs_nu != rhs_nu {
                    return Ok(Some(format!(
                        "hom {h} (degree {}), i = {i}: {} vs {}",
                        hom.degree,
                        show_pair(&lhs_nu),
                        show_pair(&rhs_nu)
                    )));
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => res.with(true, String::new),
        Ok(Some(msg)) => res.with(false, || msg),
        Err(e) => res.with(false, || e.to_string()),
    }
}

/// `Z·Υ(φ) = Υ(φ∘τ(−Z))` inside `𝒳^ℝ` for `Z ∈ k`, with `k` acting on
/// `𝒳^ℝ` by left multiplication.
pub fn hom_equivariance_check(setup: &OdaSetup, homs: &[EquivariantHom]) -> CheckResult {
    let res = check(setup, "hom_equivariance", format!("d = {}, homs = {}", setup.degree_bound(), homs.len()));
    let model = setup.ts.model();
    let shape = setup.shape();
    let run = || -> Result<Option<String>> {
        for (h, hom) in homs.iter().enumerate() {
            for z in model.k_basis() {
                let tau = shape.matrix_of(|t| setup.ts.act_lie(&z, t));
                for c in 0..shape.size() {
                    let phi = shape.basis_vector(&shape.digits(c));
                    let lhs = setup.xr.left_mul(&z, &setup.evaluate(hom, &phi)?)?;
                    let moved: Vector = tau.transpose().apply(&phi).into_iter().map(|x| -x).collect();
                    let rhs = setup.evaluate(hom, &moved)?;
                    if lhs != rhs {
                        return Ok(Some(format!("hom {h} at coordinate {c}")));
                    }
                }
            }
        }
        Ok(None)
    };
    match run() {
        Ok(None) => res.with(true, String::new),
        Ok(Some(msg)) => res.with(false, || msg),
        Err(e) => res.with(false, || e.to_string()),
    }
}

/// Three fixed generic points of `a*`.
pub fn default_nus(k: usize) -> Vec<Vec<Rational>> {
    let q = |a: i64, b: i64| Rational::new(a.into(), b.into());
    vec![
        (0..k).map(|i| q(2 * i as i64 + 3, 7)).collect(),
        (0..k).map(|i| q(i as i64 + 1, 3)).collect(),
        (0..k).map(|i| q(5 - 2 * i as i64, 4)).collect(),
    ]
}

/// The checks around `Γ` for one group at truncation `d`, in a fixed order.
pub fn verify_oda(model: &LieModel, d: usize, nus: &[Vec<Rational>]) -> Vec<CheckResult> {
    let group = model.group().to_string();
    let setup = match OdaSetup::new(model, d) {
        Ok(s) => s,
        Err(e) => return vec![CheckResult::new("oda_setup", group, format!("d = {d}")).with(false, || e.to_string())],
    };
    let homs = match equivariant_homs(&setup) {
        Ok(h) => h,
        Err(e) => return vec![check(&setup, "equivariant_homs", format!("d = {d}")).with(false, || e.to_string())],
    };
    let mut out = vec![
        hom_equivariance_check(&setup, &homs),
        gamma_injectivity_check(&setup, &homs),
        gamma_equivariance_check(&setup, &homs),
    ];
    out.extend(nus.iter().map(|nu| intertwining_check(&setup, &homs, nu)));
    let ts = setup.tensor_space();
    out.push(match crate::tensor_model::closed_form_basis(ts) {
        Ok(b) => crate::tensor_model::weyl_match_check(ts, &b),
        Err(e) => check(&setup, "weyl_match", String::new()).with(false, || e.to_string()),
    });
    if ts.k() == 1 {
        let zero = |slots: usize, d: usize| {
            super::ZeroSlotModel::new(TensorSpace::with_slots(model.clone(), slots), d)
        };
        match zero(1, d) {
            Ok(m) => {
                if model.xi().is_some() {
                    out.push(super::sbar_position_zero_check(&m));
                }
                out.push(super::zero_slot_k_commutation_check(&m));
            }
            Err(e) => out.push(check(&setup, "zero_slot", String::new()).with(false, || e.to_string())),
        }
        match zero(2, d.min(2)) {
            Ok(m) => out.push(super::partial_sum_position_zero_check(&m)),
            Err(e) => out.push(check(&setup, "zero_slot", String::new()).with(false, || e.to_string())),
        }
        let mut points = vec![vec![Rational::zero()]];
        points.extend(nus.iter().cloned());
        out.extend(super::verify_transfer(&setup, &homs, &points));
    }
    out
}
