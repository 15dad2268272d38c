//! Canonical maps, Galois detection, comodule hom spaces and the
//! endomorphism ring of `Σ`.

mod descent;
mod flat;
mod kit;

pub use descent::{descent_report, generator_check, DescentReport, DescentStatements, FamilyEntry, GeneratorReport, UnitEntry};
pub use flat::{
    direct_flatness, flat_report, quotient_module, right_ideals, submodule, test_injections, FaithfulFlatness, FlatReport,
    IdealFamily, Injection,
    DEFAULT_IDEAL_BUDGET,
};
pub use kit::{adjunction_kit, condition_check, induced_comodule, unit_checks, AdjunctionKit, ConditionVector, UnitReport};

use crate::algmod::{self, basis_vector, Algebra, Bimodule};
use crate::check::Check;
use crate::comatrix::{build_comatrix, build_dagger, star_data, ComatrixCoring, DaggerCoring};
use crate::corings::{coring_hom_check, regular_comodule, validate_comodule, Comodule, Coring, Side};
use crate::exactlin::{combine, matrix_kernel, Mat};
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};

/// `Σ` as an `R`-`C` bicomodule together with the comatrix coring on `Σ*`.
#[derive(Debug, Clone)]
pub struct GaloisSetting {
    pub name: String,
    /// Comatrix coring `Σ* ⊗_R Σ`.
    pub star: ComatrixCoring,
    /// Coring on `Σ† ⊗_R Σ` and the isomorphism to `Σ* ⊗_R Σ`.
    pub dagger: DaggerCoring,
    pub coring: Coring,
    /// `Σ` as a right `C`-comodule with its left `R`-action.
    pub rho: Comodule,
    /// `Σ†` as a left `C`-comodule through `can`.
    pub lambda_c: Comodule,
    pub can: Mat,
    pub can_dagger: Mat,
}

impl GaloisSetting {
    /// `C` is the comatrix coring of `cm` with its coaction on `Σ`.
    pub fn from_comatrix(cm: &ComatrixCoring) -> Result<GaloisSetting> {
        let star = build_comatrix(&star_data(cm).2)?;
        GaloisSetting::assemble(&cm.data.name, star, cm.coring.clone(), cm.rho_sigma.coaction.clone())
    }

    /// `C = Σ* ⊗_R Σ` itself.
    pub fn self_comatrix(cm: &ComatrixCoring) -> Result<GaloisSetting> {
        let star = build_comatrix(&star_data(cm).2)?;
        let (c, rho) = (star.coring.clone(), star.rho_sigma.coaction.clone());
        GaloisSetting::assemble(&format!("{}*", cm.data.name), star, c, rho)
    }

    /// An external coring `C` over the same base with a coaction on `Σ`.
    pub fn external(cm: &ComatrixCoring, coring: Coring, coaction: Mat) -> Result<GaloisSetting> {
        if !coring.base.same_ring(&cm.data.a) {
            return Err(Error::BaseMismatch);
        }
        let star = build_comatrix(&star_data(cm).2)?;
        GaloisSetting::assemble(&cm.data.name, star, coring, coaction)
    }

    fn assemble(name: &str, star: ComatrixCoring, coring: Coring, coaction: Mat) -> Result<GaloisSetting> {
        let p = star.p();
        let rho = Comodule::right("Σ", &coring, star.sigma_r.clone(), coaction)?;
        let rep = validate_comodule(&rho, &coring)?;
        if !rep.ok() {
            return Err(Error::Validation(format!("Σ is not an R-C bicomodule: {}", rep.summary())));
        }
        let dagger = build_dagger(&star)?;
        let (k, c) = (star.data.s_prime(), coring.dim());
        let rho_lift = rho.lifted();
        let lc = &coring.carrier.left.as_ref().expect("coring is a bimodule").mat;
        let can_amb = lc.mul(&star.data.mu.kron(&Mat::identity(p, c))).mul(&Mat::identity(p, k).kron(&rho_lift));
        let can = star.c_space.descend(&can_amb)?;
        let t = dagger.inner.data.s_prime();
        let dag_amb =
            lc.mul(&dagger.inner.data.mu.kron(&Mat::identity(p, c))).mul(&Mat::identity(p, t).kron(&rho_lift));
        let can_dagger = dagger.inner.c_space.descend(&dag_amb)?;
        let dag_b = dagger.inner.sigma_prime_r.clone();
        let cd = tensorcalc::chain(&[&coring.carrier, &dag_b])?;
        let can_dag = tensorcalc::tensor_map(&star.lambda_dagger.tensor, &cd, &[&can, &Mat::identity(p, t)])?;
        let lambda_c = Comodule::left("Σ†", &coring, dag_b, can_dag.mul(&star.lambda_dagger.coaction))?;
        Ok(GaloisSetting { name: name.to_string(), star, dagger, coring, rho, lambda_c, can, can_dagger })
    }

    pub fn p(&self) -> u32 {
        self.star.p()
    }

    pub fn r(&self) -> &Algebra {
        &self.star.data.r
    }

    pub fn a(&self) -> &Algebra {
        &self.star.data.a
    }

    /// `Σ` with left `R` and right `A` actions.
    pub fn sigma(&self) -> &Bimodule {
        &self.rho.carrier
    }

    /// `Σ†` with left `A` and right `R` actions.
    pub fn dagger_module(&self) -> &Bimodule {
        &self.lambda_c.carrier
    }

    /// `Σ† ⊗_R Σ`.
    pub fn d_space(&self) -> &TensorSpace {
        &self.dagger.inner.c_space
    }

    /// `μ† : Σ† ⊗ Σ → A` on the ambient tensor.
    pub fn mu_dagger(&self) -> &Mat {
        &self.dagger.inner.data.mu
    }

    fn left_r(&self) -> &Mat {
        &self.sigma().left.as_ref().expect("R acts on Σ").mat
    }

    fn right_a(&self) -> &Mat {
        &self.sigma().right.as_ref().expect("A acts on Σ").mat
    }
}

/// `can`, `can†` and the Galois certificate.
#[derive(Debug, Clone)]
pub struct GaloisMaps {
    pub can: Mat,
    pub can_dagger: Mat,
    pub inverse: Option<Mat>,
    /// `ℸ : Σ* ⊗_R Σ → Hom^C(Σ, C) ⊗_R R ⊗_R Σ`, when requested.
    pub daleth: Option<Mat>,
    pub checks: Vec<Check>,
}

impl GaloisMaps {
    pub fn is_galois(&self) -> bool {
        self.inverse.is_some()
    }
}

pub fn canonical_maps(g: &GaloisSetting, with_kit: bool) -> Result<GaloisMaps> {
    let p = g.p();
    let mut checks = vec![
        Check::report("can is a coring map", &coring_hom_check(&g.star.coring, &g.coring, &g.can)?),
        Check::report("can† is a coring map", &coring_hom_check(&g.dagger.inner.coring, &g.coring, &g.can_dagger)?),
        Check::mat_eq("can = can† ∘ (Σ*⊗d_Σ)", &g.can, &g.can_dagger.mul(&g.dagger.f_inverse)),
        Check::mat_eq("can ∘ f = can†", &g.can.mul(&g.dagger.f), &g.can_dagger),
    ];
    // can† = δ_C ∘ (λ_{Σ†} ⊗ Σ)
    let (c, s) = (g.coring.dim(), g.sigma().dim);
    let cds = tensorcalc::chain(&[&g.coring.carrier, g.dagger_module(), g.sigma()])?;
    let rc = &g.coring.carrier.right.as_ref().expect("coring is a bimodule").mat;
    let delta_c = cds.descend(&rc.mul(&Mat::identity(p, c).kron(g.mu_dagger())))?;
    let lam_s = g.d_space().descend(&cds.proj().mul(&g.lambda_c.lifted().kron(&Mat::identity(p, s))))?;
    checks.push(Check::mat_eq("can† = δ_C ∘ (λ_Σ† ⊗ Σ)", &g.can_dagger, &delta_c.mul(&lam_s)));
    let inverse = g.can.invert().ok();
    let dag_inverse = g.can_dagger.invert().ok();
    checks.push(Check::new(
        "can and can† agree on invertibility",
        inverse.is_some() == dag_inverse.is_some(),
        format!("can invertible: {}, can† invertible: {}", inverse.is_some(), dag_inverse.is_some()),
    ));
    if let Some(inv) = &inverse {
        let ok = inv.mul(&g.can).is_identity() && g.can.mul(inv).is_identity();
        checks.push(Check::new("can⁻¹ composites", ok, "both composites are identities"));
    }
    let mut daleth = None;
    if with_kit {
        let creg = regular_comodule(&g.coring, Side::Right)?;
        let kit = adjunction_kit(g, &creg)?;
        let hs = &kit.hom;
        // φ ↦ (φ ⊗ C) ρ_Σ
        let lc = &g.coring.carrier.left.as_ref().expect("coring is a bimodule").mat;
        let k = g.star.data.s_prime();
        let ev = &g.star.data.mu;
        let a = g.a().dim;
        let mut d0 = Mat::zeros(p, hs.dim(), k);
        for phi in 0..k {
            let phi_mat = Mat::from_fn(p, a, s, |row, u| ev.get(row, phi * s + u) as i64);
            let h = lc.mul(&phi_mat.kron(&Mat::identity(p, c))).mul(&g.rho.lifted());
            let coords = hs.coordinates(&h).ok_or_else(|| Error::Invalid("(φ⊗C)ρ_Σ is not colinear".into()))?;
            for (i, v) in coords.into_iter().enumerate() {
                d0.set(i, phi, v);
            }
        }
        let hrs = tensorcalc::chain(&[&hs.module, &g.star.r_reg, g.sigma()])?;
        let rd = g.r().dim;
        let d = tensorcalc::tensor_map(&g.star.triple, &hrs, &[&d0, &Mat::identity(p, rd), &Mat::identity(p, s)])?
            .mul(&g.star.sigma_prime_d);
        checks.push(Check::bijective("ℸ invertible", &d));
        checks.push(Check::mat_eq("can = π_C ∘ ℸ", &g.can, &kit.pi.mul(&d)));
        daleth = Some(d);
    }
    Ok(GaloisMaps { can: g.can.clone(), can_dagger: g.can_dagger.clone(), inverse, daleth, checks })
}

/// Certificate or refutation of the Galois property.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum GaloisVerdict {
    Galois { inverse: Mat },
    NotGalois { witness: crate::Witness },
}

pub fn galois_check(maps: &GaloisMaps) -> GaloisVerdict {
    match &maps.inverse {
        Some(inverse) => GaloisVerdict::Galois { inverse: inverse.clone() },
        None => GaloisVerdict::NotGalois { witness: maps.can.bijectivity_witness().expect("can is not invertible") },
    }
}

/// A space of linear maps `Σ → N` with coordinates and a right `R`-action
/// `(h r)(u) = h(r u)`.
#[derive(Debug, Clone)]
pub struct HomSpace {
    pub basis: Vec<Mat>,
    system: Mat,
    pub module: Bimodule,
}

impl HomSpace {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn coordinates(&self, h: &Mat) -> Option<Vec<u32>> {
        if self.basis.is_empty() {
            return h.is_zero().then(Vec::new);
        }
        self.system.solve(h.entries()).ok().filter(|s| s.kernel.is_empty()).map(|s| s.particular)
    }

    pub fn map_of(&self, coords: &[u32], rows: usize, cols: usize) -> Mat {
        combine(self.system.p(), rows, cols, coords, &self.basis)
    }
}

fn hom_space(g: &GaloisSetting, name: &str, basis: Vec<Mat>, target_dim: usize) -> HomSpace {
    let p = g.p();
    let s = g.sigma().dim;
    let rd = g.r().dim;
    let system = Mat::from_cols(p, target_dim * s, &basis.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let mut hs = HomSpace { basis, system, module: Bimodule::new(name, p, 0) };
    let m = hs.dim();
    let mut act = Mat::zeros(p, m, m * rd);
    for j in 0..m {
        for r in 0..rd {
            let op = g.sigma().left_op(&basis_vector(rd, r));
            let c = hs.coordinates(&hs.basis[j].mul(&op)).expect("hom space is an R-module");
            for (i, v) in c.into_iter().enumerate() {
                act.set(i, j * rd + r, v);
            }
        }
    }
    hs.module = Bimodule::new(name, p, m).with_right(g.r(), act);
    hs
}

/// Right `A`-linear colinear maps `Σ → N`.
pub fn hom_comodule(g: &GaloisSetting, n: &Comodule) -> HomSpace {
    let p = g.p();
    let (s, a, c, d) = (g.sigma().dim, g.a().dim, g.coring.dim(), n.dim());
    let ra_n = &n.carrier.right.as_ref().expect("right comodule").mat;
    let rho_lift = g.rho.lifted();
    let basis = matrix_kernel(p, d, s, |h| {
        let mut v = h.mul(g.right_a()).sub(&ra_n.mul(&h.kron(&Mat::identity(p, a)))).entries().to_vec();
        let colinear = n.coaction.mul(h).sub(&n.tensor.proj().mul(&h.kron(&Mat::identity(p, c))).mul(&rho_lift));
        v.extend_from_slice(colinear.entries());
        v
    });
    hom_space(g, &format!("Hom^C(Σ,{})", n.name), basis, d)
}

/// Right `A`-linear maps `Σ → M`.
pub fn hom_a(g: &GaloisSetting, m: &Bimodule) -> HomSpace {
    let p = g.p();
    let (s, a, d) = (g.sigma().dim, g.a().dim, m.dim);
    let ra_m = &m.right.as_ref().expect("right A-module").mat;
    let basis =
        matrix_kernel(p, d, s, |h| h.mul(g.right_a()).sub(&ra_m.mul(&h.kron(&Mat::identity(p, a)))).entries().to_vec());
    hom_space(g, &format!("Hom_A(Σ,{})", m.name), basis, d)
}

/// `T = End^C(Σ)` with the map `R → T` and the left-ideal tests.
#[derive(Debug, Clone)]
pub struct EndoRing {
    pub t: Algebra,
    pub hom: HomSpace,
    /// `dim T x dim R`.
    pub embedding: Mat,
    /// `v_R : R → T ⊗_R R`.
    pub v_r: Mat,
    pub tr: TensorSpace,
    pub v_r_invertible: bool,
    /// `R → T` injective and `T R ⊆ R`.
    pub closed: bool,
    /// `(i, j)` with `t_i r_j` outside the image of `R`.
    pub closure_witness: Option<(usize, usize)>,
    pub checks: Vec<Check>,
}

impl EndoRing {
    pub fn is_left_ideal(&self) -> bool {
        self.closed && self.v_r_invertible
    }
}

pub fn endo_ring(g: &GaloisSetting) -> Result<EndoRing> {
    let p = g.p();
    let (s, rd) = (g.sigma().dim, g.r().dim);
    let hom = hom_comodule(g, &g.rho);
    let n = hom.dim();
    let mut mult = Mat::zeros(p, n, n * n);
    for i in 0..n {
        for j in 0..n {
            let c = hom.coordinates(&hom.basis[i].mul(&hom.basis[j])).expect("closed under composition");
            for (k, v) in c.into_iter().enumerate() {
                mult.set(k, i * n + j, v);
            }
        }
    }
    let unit = hom.coordinates(&Mat::identity(p, s)).expect("identity is a comodule map");
    let t = Algebra::new("T", p, n, mult, Some(unit.clone()));
    let mut checks = vec![Check::report("T is a unital algebra", &algmod::validate_algebra(&t)?)];
    let mut embedding = Mat::zeros(p, n, rd);
    for r in 0..rd {
        let c = hom.coordinates(&g.sigma().left_op(&basis_vector(rd, r))).expect("R acts by comodule maps");
        for (k, v) in c.into_iter().enumerate() {
            embedding.set(k, r, v);
        }
    }
    let lhs = embedding.mul(&g.r().mult);
    let rhs = t.mult.mul(&embedding.kron(&embedding));
    checks.push(Check::mat_eq("R → T is multiplicative", &lhs, &rhs));

    let t_b = hom.module.clone().renamed("T");
    let r_reg = Bimodule::regular(g.r());
    let tr = tensorcalc::chain(&[&t_b, &r_reg])?;
    let v_r = tr.proj().mul(&Mat::column_vector(p, &unit).kron(&Mat::identity(p, rd)));
    let v_r_invertible = v_r.is_bijective();

    let mut closure_witness = None;
    let injective = embedding.is_injective();
    'outer: for i in 0..n {
        for j in 0..rd {
            let tr_ij = t.mult.apply(&crate::algmod::vkron(&basis_vector(n, i), &embedding.col(j), p));
            if embedding.solve(&tr_ij).is_err() {
                closure_witness = Some((i, j));
                break 'outer;
            }
        }
    }
    let closed = injective && closure_witness.is_none();
    checks.push(Check::new(
        "v_R invertibility agrees with T R ⊆ R",
        v_r_invertible == closed,
        format!("v_R invertible: {v_r_invertible}, R → T injective: {injective}, closure witness: {closure_witness:?}"),
    ));
    Ok(EndoRing { t, hom, embedding, v_r, tr, v_r_invertible, closed, closure_witness, checks })
}

/// When `R` is a left ideal of `T`: the action `t n = (t r) n^r` on `Σ`
/// and `Σ* ⊗_T Σ ≅ Σ* ⊗_R Σ`.
pub fn left_ideal_checks(g: &GaloisSetting, e: &EndoRing) -> Result<Vec<Check>> {
    if !e.is_left_ideal() {
        return Ok(Vec::new());
    }
    let p = g.p();
    let (s, rd, n) = (g.sigma().dim, g.r().dim, e.t.dim);
    let firm = &g.star.firm_sigma;
    let mut checks = Vec::new();
    let mut action = Mat::zeros(p, s, n * s);
    for i in 0..n {
        let mut tau = Mat::zeros(p, rd, rd);
        for r in 0..rd {
            let tr = e.t.mult.apply(&crate::algmod::vkron(&basis_vector(n, i), &e.embedding.col(r), p));
            let pre = e.embedding.solve(&tr).map_err(Error::from)?.particular;
            for (k, v) in pre.into_iter().enumerate() {
                tau.set(k, r, v);
            }
        }
        let act_i = g.left_r().mul(&tau.kron(&Mat::identity(p, s))).mul(firm.space.sec()).mul(&firm.d);
        for u in 0..s {
            for row in 0..s {
                action.set(row, i * s + u, act_i.get(row, u));
            }
        }
    }
    let natural = Mat::hstack(p, s, &e.hom.basis.iter().collect::<Vec<_>>());
    checks.push(Check::mat_eq("t n = (t r) n^r on Σ", &action, &natural));

    // Σ* as a right T-module: (φ t)(u) = φ(t u)
    let k = g.star.data.s_prime();
    let sstar = crate::comatrix::sigma_star(&g.star.data, g.sigma());
    let mut right_t = Mat::zeros(p, k, k * n);
    for (phi, phi_mat) in sstar.basis.iter().enumerate() {
        for i in 0..n {
            let c = sstar.coordinates(&phi_mat.mul(&e.hom.basis[i]));
            for (row, v) in c.into_iter().enumerate() {
                right_t.set(row, phi * n + i, v);
            }
        }
    }
    let m_t = Bimodule::new("Σ*", p, k).with_right(&e.t, right_t);
    let n_t = Bimodule::new("Σ", p, s).with_left(&e.t, natural);
    let mt_n = tensorcalc::chain(&[&m_t, &n_t])?;
    let canon = g.star.c_space.descend(mt_n.proj())?;
    checks.push(Check::bijective("Σ* ⊗_R Σ → Σ* ⊗_T Σ", &canon));
    Ok(checks)
}

#[cfg(test)]
mod tests;
