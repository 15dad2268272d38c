//! The left dual ring `*C` of a coring, rational modules and the
//! identities relating `*C` to `C`.

use crate::algmod::{basis_vector, validate_algebra, Algebra, Bimodule};
use crate::check::{all_passed, Check};
use crate::comatrix::{build_comatrix, ComatrixCoring, ComatrixData};
use crate::corings::coring_hom_check;
use crate::galois::{canonical_maps, galois_check, GaloisSetting, GaloisVerdict};
use crate::corings::{validate_comodule, Comodule, Coring};
use crate::exactlin::{matrix_kernel, Mat};
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};

/// `*C = Hom_A(C, A)` (left `A`-linear) with convolution `f*g(c) = g(c₁ f(c₂))`.
#[derive(Debug, Clone)]
pub struct DualRing {
    pub coring: Coring,
    pub ring: Algebra,
    /// Each basis functional as a `dim A x dim C` matrix.
    pub basis: Vec<Mat>,
    system: Mat,
    /// `(f a)(c) = f(c) a` and `(a f)(c) = f(c a)`.
    pub bimodule: Bimodule,
    pub checks: Vec<Check>,
}

impl DualRing {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, f: &Mat) -> Option<Vec<u32>> {
        if self.basis.is_empty() {
            return f.is_zero().then(Vec::new);
        }
        self.system.solve(f.entries()).ok().map(|s| s.particular)
    }

    /// `c ↦ c₁ f(c₂)` on `C`.
    pub fn hit(&self, f: &Mat) -> Mat {
        let p = self.coring.p();
        let rc = &self.coring.carrier.right.as_ref().expect("coring is a bimodule").mat;
        rc.mul(&Mat::identity(p, self.coring.dim()).kron(f)).mul(&self.coring.lift_delta())
    }

    /// `ι(a) = ε(−) a`.
    pub fn unit_map(&self) -> Mat {
        let ra = &self.bimodule.right.as_ref().expect("right A-action").mat;
        let p = self.coring.p();
        let unit = Mat::column_vector(p, self.ring.unit.as_ref().expect("unital"));
        ra.mul(&unit.kron(&Mat::identity(p, self.coring.base.dim)))
    }
}

pub fn dual_ring(c: &Coring) -> Result<DualRing> {
    let p = c.p();
    let (n, a) = (c.dim(), c.base.dim);
    let lc = c.carrier.left.as_ref().ok_or_else(|| Error::ActionMismatch("coring needs a left action".into()))?.mat.clone();
    let rc = c.carrier.right.as_ref().ok_or_else(|| Error::ActionMismatch("coring needs a right action".into()))?.mat.clone();
    let basis = matrix_kernel(p, a, n, |f| f.mul(&lc).sub(&c.base.mult.mul(&Mat::identity(p, a).kron(f))).entries().to_vec());
    let k = basis.len();
    let system = Mat::from_cols(p, a * n, &basis.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let placeholder = Algebra::new("*C", p, k, Mat::zeros(p, k, k * k), None);
    let mut d = DualRing {
        coring: c.clone(),
        ring: placeholder,
        basis,
        system,
        bimodule: Bimodule::new("*C", p, k),
        checks: Vec::new(),
    };
    let coords = |d: &DualRing, f: &Mat, what: &str| {
        d.coordinates(f).ok_or_else(|| Error::Invalid(format!("{what} is not left A-linear")))
    };
    let mut mult = Mat::zeros(p, k, k * k);
    for i in 0..k {
        let hit = d.hit(&d.basis[i]);
        for j in 0..k {
            let v = coords(&d, &d.basis[j].mul(&hit), "f * g")?;
            for (row, x) in v.into_iter().enumerate() {
                mult.set(row, i * k + j, x);
            }
        }
    }
    let unit = coords(&d, &c.eps, "ε")?;
    d.ring = Algebra::new("*C", p, k, mult, Some(unit));
    let mut left = Mat::zeros(p, k, a * k);
    let mut right = Mat::zeros(p, k, k * a);
    for i in 0..k {
        for x in 0..a {
            let av = Mat::column_vector(p, &basis_vector(a, x));
            let fa = c.base.mult.mul(&d.basis[i].kron(&av));
            let af = d.basis[i].mul(&rc).mul(&Mat::identity(p, n).kron(&av));
            for (row, v) in coords(&d, &fa, "f a")?.into_iter().enumerate() {
                right.set(row, i * a + x, v);
            }
            for (row, v) in coords(&d, &af, "a f")?.into_iter().enumerate() {
                left.set(row, x * k + i, v);
            }
        }
    }
    d.bimodule = Bimodule::new("*C", p, k).with_left(&c.base, left).with_right(&c.base, right);
    let mut checks = vec![Check::report("*C is an associative unital algebra", &validate_algebra(&d.ring)?)];
    checks.push(Check::report("*C is an A-bimodule", &crate::algmod::validate_bimodule(&d.bimodule)?));
    // a f = ι(a) * f and f a = f * ι(a)
    let iota = d.unit_map();
    let ra = &d.bimodule.right.as_ref().expect("right").mat;
    let la = &d.bimodule.left.as_ref().expect("left").mat;
    let ik = Mat::identity(p, k);
    checks.push(Check::mat_eq("a f = ι(a) * f", la, &d.ring.mult.mul(&iota.kron(&ik))));
    checks.push(Check::mat_eq("f a = f * ι(a)", ra, &d.ring.mult.mul(&ik.kron(&iota))));
    d.checks = checks;
    Ok(d)
}

/// A right `*C`-module from a right `C`-comodule: `m f = m₀ f(m₁)`.
pub fn comodule_action(n: &Comodule, d: &DualRing) -> Mat {
    let p = d.coring.p();
    let ra = &n.carrier.right.as_ref().expect("right A-module").mat;
    let lifted = n.lifted();
    let blocks: Vec<Mat> =
        d.basis.iter().map(|f| ra.mul(&Mat::identity(p, n.dim()).kron(f)).mul(&lifted)).collect();
    let mut act = Mat::zeros(p, n.dim(), n.dim() * d.dim());
    for (j, b) in blocks.iter().enumerate() {
        for m in 0..n.dim() {
            for row in 0..n.dim() {
                act.set(row, m * d.dim() + j, b.get(row, m));
            }
        }
    }
    act
}

/// `M^rat ⊆ M` with its recovered coaction.
#[derive(Debug, Clone)]
pub struct RationalStructure {
    /// `M` with its right `A`-action through `ι`.
    pub module: Bimodule,
    /// Columns span `M^rat`.
    pub rational_basis: Mat,
    pub comodule: Comodule,
    /// `M ⊗_A C → Hom(*C, M)`, `m ⊗ c ↦ (f ↦ m f(c))`, stacked over the basis of `*C`.
    pub psi: Mat,
    pub checks: Vec<Check>,
}

impl RationalStructure {
    pub fn is_rational(&self) -> bool {
        self.rational_basis.cols() == self.module.dim
    }
}

/// First basis triple `(m, f, g)` with `(m f) g ≠ m (f * g)`.
pub fn module_check(dim: usize, action: &Mat, d: &DualRing) -> Result<()> {
    let p = d.coring.p();
    let k = d.dim();
    for m in 0..dim {
        for f in 0..k {
            let mf = action.apply(&crate::algmod::vkron(&basis_vector(dim, m), &basis_vector(k, f), p));
            for g in 0..k {
                let lhs = action.apply(&crate::algmod::vkron(&mf, &basis_vector(k, g), p));
                let fg = d.ring.mult.col(f * k + g);
                let rhs = action.apply(&crate::algmod::vkron(&basis_vector(dim, m), &fg, p));
                if lhs != rhs {
                    return Err(Error::NotAModule(m, f, g));
                }
            }
        }
    }
    Ok(())
}

pub fn rational_structure(dim: usize, action: &Mat, d: &DualRing) -> Result<RationalStructure> {
    let p = d.coring.p();
    let (k, n) = (d.dim(), d.coring.dim());
    if (action.rows(), action.cols()) != (dim, dim * k) {
        return Err(Error::ShapeMismatch(format!("action must be {dim}x{}", dim * k)));
    }
    module_check(dim, action, d)?;
    let right_a = action.mul(&Mat::identity(p, dim).kron(&d.unit_map()));
    let module = Bimodule::new("M", p, dim).with_right(&d.coring.base, right_a.clone());
    let mc = tensorcalc::chain(&[&module, &d.coring.carrier])?;
    // psi: column x of M ⊗_A C ↦ (m f_j(c))_j, rows indexed (j, m)
    let mut psi_amb = Mat::zeros(p, k * dim, dim * n);
    for (j, f) in d.basis.iter().enumerate() {
        let ev = right_a.mul(&Mat::identity(p, dim).kron(f));
        for col in 0..dim * n {
            for row in 0..dim {
                psi_amb.set(j * dim + row, col, ev.get(row, col));
            }
        }
    }
    let psi = mc.descend(&psi_amb)?;
    let mut omega = Mat::zeros(p, k * dim, dim);
    for m in 0..dim {
        for j in 0..k {
            let v = action.apply(&crate::algmod::vkron(&basis_vector(dim, m), &basis_vector(k, j), p));
            for (row, x) in v.into_iter().enumerate() {
                omega.set(j * dim + row, m, x);
            }
        }
    }
    let q = crate::exactlin::quotient(p, k * dim, &psi);
    let rational_basis = q.proj.mul(&omega).kernel_mat();
    let coaction_full = if rational_basis.cols() == 0 {
        Mat::zeros(p, mc.dim(), 0)
    } else {
        psi.solve_many(&omega.mul(&rational_basis)).expect("rational part is solvable")
    };
    let mut checks = vec![Check::new("recovered coaction is unique", psi.is_injective(), "ψ injective")];
    let sub = crate::galois::submodule(&module, &rational_basis, "M^rat")?;
    let sc = tensorcalc::chain(&[&sub, &d.coring.carrier])?;
    let incl = tensorcalc::tensor_map(&sc, &mc, &[&rational_basis, &Mat::identity(p, n)])?;
    let coaction = if sc.dim() == 0 {
        Mat::zeros(p, 0, sub.dim)
    } else {
        incl.solve_many(&coaction_full)
            .ok_or_else(|| Error::Invalid("coaction does not land in M^rat ⊗ C".into()))?
    };
    let comodule = Comodule::right("M^rat", &d.coring, sub, coaction)?;
    checks.push(Check::report("M^rat is a comodule", &validate_comodule(&comodule, &d.coring)?));
    Ok(RationalStructure { module, rational_basis, comodule, psi, checks })
}

/// `ρ(f) = f₀ ⊗ f₁` on `*C`, from the rational structure of the regular module.
fn regular_coaction(d: &DualRing) -> Result<(RationalStructure, TensorSpace)> {
    let rs = rational_structure(d.dim(), &d.ring.mult, d)?;
    let space = rs.comodule.tensor.clone();
    Ok((rs, space))
}

/// `x ↦ Σ x_ij g_i(c) c_j` as a map `C → C` for `x` in the ambient `*C ⊗ C`.
fn evaluate(d: &DualRing, x: &[u32]) -> Mat {
    let p = d.coring.p();
    let n = d.coring.dim();
    let lc = &d.coring.carrier.left.as_ref().expect("left").mat;
    let mut out = Mat::zeros(p, n, n);
    for (i, g) in d.basis.iter().enumerate() {
        for j in 0..n {
            let coef = x[i * n + j];
            if coef != 0 {
                let ej = Mat::column_vector(p, &basis_vector(n, j));
                out = out.add(&lc.mul(&g.kron(&ej)).scale(coef));
            }
        }
    }
    out
}

/// The identity `c₁ f(c₂) = f₀(c) f₁`, multiplicativity of `ρ` and right
/// local units, on all basis elements.
pub fn verify_dual_identities(d: &DualRing) -> Result<Vec<Check>> {
    let p = d.coring.p();
    let (k, n) = (d.dim(), d.coring.dim());
    let (rs, space) = regular_coaction(d)?;
    let mut checks = rs.checks.clone();
    checks.push(Check::new("*C is rational", rs.is_rational(), format!("dim *C^rat = {}", rs.rational_basis.cols())));
    if !rs.is_rational() {
        return Ok(checks);
    }
    let rho = space.sec().mul(&rs.comodule.coaction);
    let mut question = Vec::new();
    for (i, f) in d.basis.iter().enumerate() {
        let lhs = d.hit(f);
        let rhs = evaluate(d, &rho.col(i));
        if lhs != rhs {
            question.push(i);
        }
    }
    checks.push(Check::new(
        "c₁ f(c₂) = f₀(c) f₁",
        question.is_empty(),
        match question.first() {
            None => format!("all {} basis pairs", k * n),
            Some(i) => format!("fails for functional {i}"),
        },
    ));
    // (f ⊗ c)(g ⊗ d) = f ⊗ g(c) d
    let lc = &d.coring.carrier.left.as_ref().expect("left").mat;
    let product = |x: &[u32], y: &[u32]| -> Vec<u32> {
        let mut amb = vec![0u32; k * n];
        for i in 0..k {
            for j in 0..n {
                let xc = x[i * n + j];
                if xc == 0 {
                    continue;
                }
                for (l, g) in d.basis.iter().enumerate() {
                    for m in 0..n {
                        let yc = y[l * n + m];
                        if yc == 0 {
                            continue;
                        }
                        let gc = Mat::from_fn(p, g.rows(), 1, |r, _| g.get(r, j) as i64);
                        let em = Mat::column_vector(p, &basis_vector(n, m));
                        let v = lc.mul(&gc.kron(&em)).col(0);
                        for (t, vt) in v.into_iter().enumerate() {
                            let idx = i * n + t;
                            amb[idx] = ((amb[idx] as u64 + xc as u64 * yc as u64 % p as u64 * vt as u64) % p as u64) as u32;
                        }
                    }
                }
            }
        }
        space.proj().apply(&amb)
    };
    let mut mult_fail = None;
    'outer: for f in 0..k {
        for g in 0..k {
            let fg = d.ring.mult.col(f * k + g);
            let lhs = rs.comodule.coaction.apply(&fg);
            let rhs = product(&rho.col(f), &rho.col(g));
            if lhs != rhs {
                mult_fail = Some((f, g));
                break 'outer;
            }
        }
    }
    checks.push(Check::new(
        "ρ(f * g) = ρ(f) ρ(g)",
        mult_fail.is_none(),
        match mult_fail {
            None => format!("all {} basis pairs", k * k),
            Some((f, g)) => format!("fails at ({f}, {g})"),
        },
    ));
    let mut missing = None;
    for f in 0..k {
        let fv = basis_vector(k, f);
        let left_mul = d.ring.mult.mul(&Mat::column_vector(p, &fv).kron(&Mat::identity(p, k)));
        if left_mul.solve(&fv).is_err() {
            missing = Some(f);
            break;
        }
    }
    checks.push(Check::new(
        "right local units",
        missing.is_none(),
        match missing {
            None => "every basis functional has e with f * e = f".to_string(),
            Some(f) => format!("functional {f} has no right local unit"),
        },
    ));
    Ok(checks)
}

/// `α : Hom_A(*C, A) ⊗_R R → C` and `β : C → Hom_A(*C, A) ⊗_R R` with `R = *C`.
#[derive(Debug, Clone)]
pub struct DaggerIso {
    pub alpha: Mat,
    pub beta: Mat,
    pub checks: Vec<Check>,
}

pub fn dagger_iso(d: &DualRing) -> Result<DaggerIso> {
    let p = d.coring.p();
    let (k, a, n) = (d.dim(), d.coring.base.dim, d.coring.dim());
    let (rs, space) = regular_coaction(d)?;
    if !rs.is_rational() {
        return Err(Error::Invalid("*C is not rational".into()));
    }
    let rho = space.sec().mul(&rs.comodule.coaction);
    let ra = &d.bimodule.right.as_ref().expect("right").mat;
    // right A-linear φ : *C → A
    let hom = matrix_kernel(p, a, k, |phi| {
        phi.mul(ra).sub(&d.coring.base.mult.mul(&phi.kron(&Mat::identity(p, a)))).entries().to_vec()
    });
    let h = hom.len();
    let system = Mat::from_cols(p, a * k, &hom.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let coords = |m: &Mat| -> Result<Vec<u32>> {
        if h == 0 {
            return Ok(Vec::new());
        }
        system.solve(m.entries()).map(|s| s.particular).map_err(Error::from)
    };
    // (φ r)(f) = φ(r * f)
    let mut act = Mat::zeros(p, h, h * k);
    for (i, phi) in hom.iter().enumerate() {
        for r in 0..k {
            let lm = d.ring.mult.mul(&Mat::column_vector(p, &basis_vector(k, r)).kron(&Mat::identity(p, k)));
            for (row, v) in coords(&phi.mul(&lm))?.into_iter().enumerate() {
                act.set(row, i * k + r, v);
            }
        }
    }
    let hm = Bimodule::new("Hom_A(*C,A)", p, h).with_right(&d.ring, act);
    let rr = Bimodule::regular(&d.ring);
    let hr = tensorcalc::chain(&[&hm, &rr])?;
    let lc = &d.coring.carrier.left.as_ref().expect("left").mat;
    // α(φ ⊗ r) = φ(r₀) r₁
    let mut alpha_amb = Mat::zeros(p, n, h * k);
    for (i, phi) in hom.iter().enumerate() {
        for r in 0..k {
            let x = rho.col(r);
            let mut v = Mat::zeros(p, n, 1);
            for (l, _) in d.basis.iter().enumerate() {
                for j in 0..n {
                    let coef = x[l * n + j];
                    if coef == 0 {
                        continue;
                    }
                    let phil = Mat::column_vector(p, &phi.col(l));
                    let ej = Mat::column_vector(p, &basis_vector(n, j));
                    v = v.add(&lc.mul(&phil.kron(&ej)).scale(coef));
                }
            }
            for row in 0..n {
                alpha_amb.set(row, i * k + r, v.get(row, 0));
            }
        }
    }
    let alpha = hr.descend(&alpha_amb)?;
    // β(c) = ψ_c ⊗ ε with ψ_c(f) = f(c)
    let unit = d.ring.unit.clone().expect("unital");
    let mut beta_amb = Mat::zeros(p, h * k, n);
    for c in 0..n {
        let psi = Mat::from_fn(p, a, k, |row, f| d.basis[f].get(row, c) as i64);
        let pc = coords(&psi)?;
        let v = crate::algmod::vkron(&pc, &unit, p);
        for (row, x) in v.into_iter().enumerate() {
            beta_amb.set(row, c, x);
        }
    }
    let beta = hr.proj().mul(&beta_amb);
    let checks = vec![
        Check::mat_eq("α β = id", &alpha.mul(&beta), &Mat::identity(p, n)),
        Check::mat_eq("β α = id", &beta.mul(&alpha), &Mat::identity(p, hr.dim())),
    ];
    Ok(DaggerIso { alpha, beta, checks })
}

/// `C` as the comatrix coring `C ⊗_{*C} *C` of the pair `(Σ, Σ′) = (*C, C)`.
#[derive(Debug, Clone)]
pub struct DualComatrix {
    pub comatrix: ComatrixCoring,
    /// `c ⊗ f ↦ c₁ f(c₂)` on `C ⊗_{*C} *C`.
    pub collapse: Mat,
    pub setting: GaloisSetting,
    pub checks: Vec<Check>,
}

/// Builds the comatrix coring of `*C` and `C` over `R = *C` and checks that
/// it is `C` again with `*C` a Galois comodule. Needs `*C` rational and `_A C`
/// to have a dual basis.
pub fn dual_comatrix(d: &DualRing) -> Result<DualComatrix> {
    let c = &d.coring;
    let p = c.p();
    let (k, n) = (d.dim(), c.dim());
    let rs = rational_structure(k, &d.ring.mult, d)?;
    if !rs.is_rational() {
        return Err(Error::Invalid(format!("*C is not rational: dim *C^rat = {}", rs.rational_basis.cols())));
    }
    let ra = d.bimodule.right.as_ref().expect("right A-action");
    let sigma = Bimodule::new("*C", p, k).with_left(&d.ring, d.ring.mult.clone()).with_right(&ra.ring, ra.mat.clone());
    let mut hits = Mat::zeros(p, n, n * k);
    for (f, g) in d.basis.iter().enumerate() {
        let h = d.hit(g);
        for col in 0..n {
            for (row, v) in h.col(col).into_iter().enumerate() {
                hits.set(row, col * k + f, v);
            }
        }
    }
    let lc = c.carrier.left.as_ref().expect("left").clone();
    let sigma_prime = Bimodule::new("C", p, n).with_left(&lc.ring, lc.mat.clone()).with_right(&d.ring, hits.clone());
    let a = c.base.dim;
    let mut mu = Mat::zeros(p, a, n * k);
    for (f, g) in d.basis.iter().enumerate() {
        for col in 0..n {
            for (row, v) in g.col(col).into_iter().enumerate() {
                mu.set(row, col * k + f, v);
            }
        }
    }
    // e = Σ φ_i ⊗ c_i with Σ φ_i(c) c_i = c
    let columns: Vec<Vec<u32>> = (0..k * n).map(|x| evaluate(d, &basis_vector(k * n, x)).entries().to_vec()).collect();
    let system = Mat::from_cols(p, n * n, &columns);
    let e = system
        .solve(Mat::identity(p, n).entries())
        .map_err(|_| Error::Invalid("C has no dual basis over A".into()))?
        .particular;
    let e = Mat::column_vector(p, &e);
    let iota_cols: Vec<Vec<u32>> =
        (0..k).map(|r| d.ring.left_mul(&d.ring.basis(r)).kron(&Mat::identity(p, n)).mul(&e).col(0)).collect();
    let data = ComatrixData {
        name: format!("{}-dual", c.name),
        a: c.base.clone(),
        b: d.ring.clone(),
        r: d.ring.clone(),
        sigma,
        sigma_prime,
        mu,
        iota: Mat::from_cols(p, k * n, &iota_cols),
    };
    let cm = build_comatrix(&data)?;
    let collapse = cm.c_space.descend(&hits)?;
    let unit = Mat::column_vector(p, d.ring.unit.as_ref().expect("unital"));
    let expected_inverse = cm.c_space.proj().mul(&Mat::identity(p, n).kron(&unit));
    let coaction = tensorcalc::tensor_map(&rs.comodule.tensor, &tensorcalc::chain(&[&cm.sigma_r, &c.carrier])?, &[
        &rs.rational_basis,
        &Mat::identity(p, n),
    ])?
    .mul(&rs.comodule.coaction)
    .mul(&rs.rational_basis.invert().map_err(|_| Error::Invalid("rational basis is singular".into()))?);
    let setting = GaloisSetting::external(&cm, c.clone(), coaction)?;
    let maps = canonical_maps(&setting, false)?;
    let mut checks = vec![
        Check::report("C ⊗_{*C} *C → C is a coring map", &coring_hom_check(&cm.coring, c, &collapse)?),
        Check::bijective("C ⊗_{*C} *C → C", &collapse),
        Check::mat_eq("inverse is c ↦ c ⊗ ε", &collapse.mul(&expected_inverse), &Mat::identity(p, n)),
    ];
    checks.extend(maps.checks.iter().cloned());
    checks.push(match galois_check(&maps) {
        GaloisVerdict::Galois { .. } => Check::new("*C is Galois over C", true, "can is invertible"),
        GaloisVerdict::NotGalois { witness } => Check::new("*C is Galois over C", false, format!("{witness:?}")),
    });
    Ok(DualComatrix { comatrix: cm, collapse, setting, checks })
}

/// Everything about `*C` for one coring.
#[derive(Debug, Clone)]
pub struct DualReport {
    pub dim: usize,
    pub checks: Vec<Check>,
}

impl DualReport {
    pub fn passed(&self) -> bool {
        all_passed(&self.checks)
    }
}

pub fn dual_report(c: &Coring) -> Result<DualReport> {
    let d = dual_ring(c)?;
    let mut checks = d.checks.clone();
    checks.extend(verify_dual_identities(&d)?);
    match dagger_iso(&d) {
        Ok(iso) => checks.extend(iso.checks),
        Err(e) => checks.push(Check::error("α and β", &e)),
    }
    match dual_comatrix(&d) {
        Ok(dc) => checks.extend(dc.checks),
        Err(e) => checks.push(Check::error("C ⊗_{*C} *C", &e)),
    }
    Ok(DualReport { dim: d.dim(), checks })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algmod::Algebra;
    use crate::corings::enumerate_comodules;

    #[test]
    fn trivial_dual_is_ground() {
        let c = Coring::trivial(&Algebra::ground(2)).unwrap();
        let rep = dual_report(&c).unwrap();
        assert_eq!(rep.dim, 1);
        assert!(rep.passed(), "{:?}", rep.checks);
    }

    #[test]
    fn matrix_coring_dual_is_matrix_algebra() {
        let c = Coring::matrix(2, 2).unwrap();
        let d = dual_ring(&c).unwrap();
        assert_eq!(d.dim(), 4);
        let m = &d.ring.mult;
        assert_ne!(m.col(1), m.col(4), "noncommutative");
        let rep = dual_report(&c).unwrap();
        assert!(rep.passed(), "{:?}", rep.checks);
    }

    #[test]
    fn sweedler_dual_identities() {
        let b = crate::instances::sweedler_f4_f2();
        let c = b.target.unwrap().coring;
        let rep = dual_report(&c).unwrap();
        assert_eq!(rep.dim, 4);
        assert!(rep.passed(), "{:?}", rep.checks);
    }

    #[test]
    fn comodules_round_trip_through_rationality() {
        let b = crate::instances::sweedler_f4_f2();
        let c = b.target.unwrap().coring;
        let d = dual_ring(&c).unwrap();
        for n in enumerate_comodules(&c, 2, crate::corings::DEFAULT_BUDGET).unwrap() {
            let act = comodule_action(&n, &d);
            let rs = rational_structure(n.dim(), &act, &d).unwrap();
            assert!(rs.is_rational());
            assert!(rs.rational_basis.is_identity() || n.dim() == 0);
            assert_eq!(rs.comodule.coaction, n.coaction, "{}", n.name);
        }
    }

    #[test]
    fn broken_action_is_not_a_module() {
        let c = Coring::matrix(2, 2).unwrap();
        let d = dual_ring(&c).unwrap();
        let mut act = Mat::zeros(2, 1, 4);
        act.set(0, 0, 1);
        act.set(0, 1, 1);
        assert!(matches!(rational_structure(1, &act, &d), Err(Error::NotAModule(..))));
    }

    #[test]
    fn dual_comatrix_recovers_the_coring() {
        let sweedler = crate::instances::sweedler_f4_f2().target.unwrap().coring;
        for c in [Coring::matrix(2, 2).unwrap(), Coring::matrix(3, 2).unwrap(), sweedler] {
            let d = dual_ring(&c).unwrap();
            let dc = dual_comatrix(&d).unwrap();
            assert!(all_passed(&dc.checks), "{}: {:?}", c.name, dc.checks);
            assert_eq!(dc.comatrix.coring.dim(), c.dim());
            let maps = canonical_maps(&dc.setting, false).unwrap();
            assert!(matches!(galois_check(&maps), GaloisVerdict::Galois { .. }));
        }
    }

    #[test]
    fn composed_equivalence_is_objectwise_the_identity() {
        use crate::algmod::firmness_right;
        use crate::corings::{cotensor, regular_comodule, Side};
        let sweedler = crate::instances::sweedler_f4_f2().target.unwrap().coring;
        for c in [Coring::matrix(2, 2).unwrap(), sweedler] {
            let p = c.p();
            let d = dual_ring(&c).unwrap();
            let creg = regular_comodule(&c, Side::Left).unwrap();
            for n in enumerate_comodules(&c, 2, crate::corings::DEFAULT_BUDGET).unwrap() {
                if n.dim() == 0 {
                    continue;
                }
                // comodule → firm *C-module: M ⊗_R R → M is bijective
                let act = comodule_action(&n, &d);
                let m = Bimodule::new("M", p, n.dim()).with_right(&d.ring, act.clone());
                let fs = firmness_right(&m).unwrap();
                assert!(fs.verify() && fs.space.dim() == n.dim(), "{}", n.name);
                // and back: the recovered coaction is the original one
                let rs = rational_structure(n.dim(), &act, &d).unwrap();
                assert_eq!(rs.comodule.coaction, n.coaction, "{}", n.name);
                // N □_C C → N, n ⊗ c ↦ n ε(c), is bijective
                let ct = cotensor(&n, &creg, &c).unwrap();
                let ra = &n.carrier.right.as_ref().unwrap().mat;
                let counit = ra.mul(&Mat::identity(p, n.dim()).kron(&c.eps)).mul(ct.space.sec()).mul(&ct.incl);
                assert!(counit.is_bijective(), "{}", n.name);
            }
        }
    }
}

