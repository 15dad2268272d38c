//! Units and counits of the adjunctions between firm `R`-modules and
//! `C`-comodules, evaluated on concrete objects.

use super::{hom_a, hom_comodule, GaloisSetting, HomSpace};
use crate::algmod::{self, Bimodule};
use crate::check::Check;
use crate::corings::{cotensor, Comodule, Cotensor};
use crate::exactlin::Mat;
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct AdjunctionKit {
    pub comodule: String,
    /// `Hom^C(Σ, N)` with its right `R`-action.
    pub hom: HomSpace,
    /// `Hom^C(Σ, N) ⊗_R Σ → N`.
    pub zeta: Mat,
    /// `Hom^C(Σ, N) ⊗_R R ⊗_R Σ → N`.
    pub pi: Mat,
    /// `N □ Σ†`.
    pub cot: Cotensor,
    /// `(N □ Σ†) ⊗_R Σ`.
    pub cot_sigma: TensorSpace,
    /// `N ⊗_A Σ† ⊗_R Σ`.
    pub nds: TensorSpace,
    /// `eq ⊗ Σ : (N □ Σ†) ⊗_R Σ → N ⊗_A Σ† ⊗_R Σ`.
    pub eq_sigma: Mat,
    /// `N ⊗_A Σ† ⊗_R Σ → N`.
    pub delta: Mat,
    /// `(N □ Σ†) ⊗_R Σ → N`.
    pub chi: Mat,
    /// `(N □ Σ†) ⊗_R Σ → N □ (Σ† ⊗_R Σ)`.
    pub psi: Option<Mat>,
    /// `Hom_A(Σ, N) ⊗_R R → N ⊗_A Σ†`.
    pub alpha: Mat,
    /// Whether `− ⊗_R Σ` keeps `eq` an equalizer.
    pub preserves_equalizer: bool,
    pub checks: Vec<Check>,
}

/// `Σ† ⊗_R Σ` as a left `C`-comodule.
fn d_comodule(g: &GaloisSetting) -> Result<Comodule> {
    let p = g.p();
    let (c, s) = (g.coring.dim(), g.sigma().dim);
    let dc = g.d_space();
    let d_b = dc.as_bimodule().renamed("Σ†⊗Σ");
    let cdb = tensorcalc::chain(&[&g.coring.carrier, &d_b])?;
    let amb = cdb
        .proj()
        .mul(&Mat::identity(p, c).kron(dc.proj()))
        .mul(&g.lambda_c.lifted().kron(&Mat::identity(p, s)));
    let coaction = dc.descend(&amb)?;
    Comodule::left("Σ†⊗Σ", &g.coring, d_b, coaction)
}

pub fn adjunction_kit(g: &GaloisSetting, n: &Comodule) -> Result<AdjunctionKit> {
    let p = g.p();
    let sigma = g.sigma();
    let (s, rd, nd) = (sigma.dim, g.r().dim, n.dim());
    let t = g.dagger_module().dim;
    let k = g.star.data.s_prime();
    let ra_n = n.carrier.right.as_ref().ok_or_else(|| Error::ActionMismatch("N needs a right action".into()))?.mat.clone();
    let left_r = g.left_r().clone();
    let mut checks = Vec::new();

    let hom = hom_comodule(g, n);
    let m = hom.dim();
    let hs = tensorcalc::chain(&[&hom.module, sigma])?;
    let zeta = hs.descend(&Mat::hstack(p, nd, &hom.basis.iter().collect::<Vec<_>>()))?;
    let hrs = tensorcalc::chain(&[&hom.module, &g.star.r_reg, sigma])?;
    let pi_blocks: Vec<Mat> = hom.basis.iter().map(|h| h.mul(&left_r)).collect();
    let pi = hrs.descend(&Mat::hstack(p, nd, &pi_blocks.iter().collect::<Vec<_>>()))?;
    let h_varpi = hrs.descend(&hs.proj().mul(&Mat::identity(p, m).kron(&left_r)))?;
    checks.push(Check::mat_eq("π = ζ ∘ (H ⊗ ϖ)", &pi, &zeta.mul(&h_varpi)));

    let cot = cotensor(n, &g.lambda_c, &g.coring)?;
    let cot_b = cot.as_bimodule(&format!("{}□Σ†", n.name));
    let cot_sigma = tensorcalc::chain(&[&cot_b, sigma])?;
    let nds = tensorcalc::chain(&[&n.carrier, g.dagger_module(), sigma])?;
    let eq_sigma = cot_sigma
        .descend(&nds.proj().mul(&cot.space.sec().mul(&cot.incl).kron(&Mat::identity(p, s))))?;
    let delta = nds.descend(&ra_n.mul(&Mat::identity(p, nd).kron(g.mu_dagger())))?;
    let chi = delta.mul(&eq_sigma);

    let d_com = d_comodule(g)?;
    let dc = g.d_space();
    let cot_d = cotensor(n, &d_com, &g.coring)?;
    let reassoc = nds.descend(&cot_d.space.proj().mul(&Mat::identity(p, nd).kron(dc.proj())))?;
    let target = reassoc.mul(&eq_sigma);
    let psi = if cot_d.dim() == 0 {
        target.is_zero().then(|| Mat::zeros(p, 0, target.cols()))
    } else {
        cot_d.incl.solve_many(&target)
    };
    checks.push(Check::new("Ψ lands in N □ (Σ† ⊗ Σ)", psi.is_some(), "eq ∘ Ψ = eq ⊗ Σ solved"));

    let ncds = tensorcalc::chain(&[&n.carrier, &g.coring.carrier, g.dagger_module(), sigma])?;
    let f1 = nds.descend(&ncds.proj().mul(&Mat::kron_all(p, &[&n.lifted(), &Mat::identity(p, t), &Mat::identity(p, s)])))?;
    let f2 = nds.descend(&ncds.proj().mul(&Mat::kron_all(
        p,
        &[&Mat::identity(p, nd), &g.lambda_c.lifted(), &Mat::identity(p, s)],
    )))?;
    let diff = f1.sub(&f2);
    let preserves_equalizer = eq_sigma.is_injective()
        && diff.mul(&eq_sigma).is_zero()
        && eq_sigma.rank() + diff.rank() == nds.dim();

    // (N ⊗ can†)(eq ⊗ Σ) = ρ_N χ_N
    let n_can = nds.descend(&n.tensor.proj().mul(&Mat::identity(p, nd).kron(&g.can_dagger.mul(dc.proj()))))?;
    checks.push(Check::mat_eq("(N⊗can†)(eq⊗Σ) = ρ_N χ_N", &n_can.mul(&eq_sigma), &n.coaction.mul(&chi)));

    // α(h ⊗ r) = h(e_s) ⊗ φ_s ⊗ r^s and its inverse
    let ha = hom_a(g, &n.carrier);
    let har = tensorcalc::chain(&[&ha.module, &g.star.r_reg])?;
    let ndag = &cot.space;
    let dag_q = &g.star.dagger;
    let split = Mat::kron_all(p, &[&g.star.iota_lift, &Mat::identity(p, rd)])
        .mul(g.star.firm_r.space.sec())
        .mul(g.star.d_r());
    let outer = ndag.proj().mul(&Mat::identity(p, nd).kron(dag_q.proj()));
    let blocks: Vec<Mat> = ha
        .basis
        .iter()
        .map(|h| outer.mul(&Mat::kron_all(p, &[h, &Mat::identity(p, k), &Mat::identity(p, rd)])).mul(&split))
        .collect();
    let alpha = har.descend(&Mat::hstack(p, ndag.dim(), &blocks.iter().collect::<Vec<_>>()))?;
    let ev = &g.star.data.mu;
    let a = g.a().dim;
    let mut inv_amb = Mat::zeros(p, har.dim(), nd * t);
    let dsec = dag_q.sec();
    for mi in 0..nd {
        let em = Mat::column_vector(p, &algmod::basis_vector(nd, mi));
        for phi in 0..k {
            let ev_phi = Mat::from_fn(p, a, s, |row, u| ev.get(row, phi * s + u) as i64);
            let h = ra_n.mul(&em.kron(&ev_phi));
            let coords = ha.coordinates(&h).ok_or_else(|| Error::Invalid("m μ(φ ⊗ −) is not A-linear".into()))?;
            for r in 0..rd {
                let img = har.proj().apply(&algmod::vkron(&coords, &algmod::basis_vector(rd, r), p));
                for tau in 0..t {
                    let coef = dsec.get(phi * rd + r, tau);
                    if coef == 0 {
                        continue;
                    }
                    for (row, &v) in img.iter().enumerate() {
                        let cur = inv_amb.get(row, mi * t + tau);
                        inv_amb.set(row, mi * t + tau, (cur + coef * v) % p);
                    }
                }
            }
        }
    }
    let alpha_inv = ndag.descend(&inv_amb)?;
    checks.push(Check::mat_eq("α⁻¹ α = id", &alpha_inv.mul(&alpha), &Mat::identity(p, har.dim())));
    checks.push(Check::mat_eq("α α⁻¹ = id", &alpha.mul(&alpha_inv), &Mat::identity(p, ndag.dim())));

    Ok(AdjunctionKit {
        comodule: n.name.clone(),
        hom,
        zeta,
        pi,
        cot,
        cot_sigma,
        nds,
        eq_sigma,
        delta,
        chi,
        psi,
        alpha,
        preserves_equalizer,
        checks,
    })
}

/// Truth values of the five equivalent conditions on one comodule.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConditionVector {
    pub comodule: String,
    pub zeta: bool,
    pub pi: bool,
    pub chi: bool,
    /// Only meaningful when `Σ` is Galois.
    pub psi: bool,
    pub equalizer: bool,
    pub galois: bool,
    pub consistent: bool,
}

impl ConditionVector {
    pub fn all_true(&self) -> bool {
        self.zeta && self.pi && self.chi && (!self.galois || (self.psi && self.equalizer))
    }

    pub fn all_false(&self) -> bool {
        !self.zeta && !self.pi && !self.chi && (!self.galois || (!self.psi && !self.equalizer))
    }
}

pub fn condition_check(kit: &AdjunctionKit, galois: bool) -> ConditionVector {
    let zeta = kit.zeta.is_bijective();
    let pi = kit.pi.is_bijective();
    let chi = kit.chi.is_bijective();
    let psi = kit.psi.as_ref().is_some_and(|m| m.is_bijective());
    let equalizer = kit.preserves_equalizer;
    let mut consistent = zeta == pi && pi == chi;
    if galois {
        consistent &= chi == psi && psi == equalizer;
    }
    ConditionVector { comodule: kit.comodule.clone(), zeta, pi, chi, psi, equalizer, galois, consistent }
}

/// The units at a firm right `R`-module `M` and the triangle identities.
#[derive(Debug, Clone)]
pub struct UnitReport {
    pub module: String,
    /// `M → Hom^C(Σ, M ⊗_R Σ) ⊗_R R`.
    pub eta: Mat,
    pub injective: bool,
    pub bijective: bool,
    pub checks: Vec<Check>,
}

/// `M ⊗_R Σ` as a right `C`-comodule.
pub fn induced_comodule(g: &GaloisSetting, m: &Bimodule) -> Result<(TensorSpace, Comodule)> {
    let p = g.p();
    let c = g.coring.dim();
    let ms = tensorcalc::chain(&[m, g.sigma()])?;
    let ms_b = ms.as_bimodule().renamed(&format!("{}⊗Σ", m.name));
    let msc = tensorcalc::chain(&[&ms_b, &g.coring.carrier])?;
    let amb = msc
        .proj()
        .mul(&ms.proj().kron(&Mat::identity(p, c)))
        .mul(&Mat::identity(p, m.dim).kron(&g.rho.lifted()));
    let coaction = ms.descend(&amb)?;
    let com = Comodule::right(&ms_b.name.clone(), &g.coring, ms_b, coaction)?;
    Ok((ms, com))
}

pub fn unit_checks(g: &GaloisSetting, m: &Bimodule) -> Result<UnitReport> {
    let p = g.p();
    let (s, rd, md) = (g.sigma().dim, g.r().dim, m.dim);
    let firm = algmod::firmness_right(m)?;
    let (ms, ms_com) = induced_comodule(g, m)?;
    let kit = adjunction_kit(g, &ms_com)?;
    let hp = &kit.hom;
    let mut nu = Mat::zeros(p, hp.dim(), md);
    for i in 0..md {
        let e = Mat::column_vector(p, &algmod::basis_vector(md, i));
        let h = ms.proj().mul(&e.kron(&Mat::identity(p, s)));
        let c = hp.coordinates(&h).ok_or_else(|| Error::Invalid("u ↦ m ⊗ u is not a comodule map".into()))?;
        for (row, v) in c.into_iter().enumerate() {
            nu.set(row, i, v);
        }
    }
    let hr = tensorcalc::chain(&[&hp.module, &g.star.r_reg])?;
    let eta = tensorcalc::tensor_map(&firm.space, &hr, &[&nu, &Mat::identity(p, rd)])?.mul(&firm.d);
    let hrs = tensorcalc::chain(&[&hp.module, &g.star.r_reg, g.sigma()])?;
    let eta_s = ms.descend(&hrs.proj().mul(&hr.sec().mul(&eta).kron(&Mat::identity(p, s))))?;
    let id = Mat::identity(p, ms.dim());
    let mut checks = vec![Check::mat_eq("π_{M⊗Σ} ∘ (η_M ⊗ Σ) = id", &kit.pi.mul(&eta_s), &id)];

    // m ↦ m^r ⊗ e_s ⊗ φ_s ⊗ r^s
    let mrr = tensorcalc::chain(&[m, &g.star.r_reg, &g.star.r_reg])?;
    let m_dr = firm
        .space
        .descend(&mrr.proj().mul(&Mat::identity(p, md).kron(&g.star.firm_r.space.sec().mul(g.star.d_r()))))?;
    let x6 = &kit.cot.space;
    let amb6 = x6
        .proj()
        .mul(&ms.proj().kron(g.star.dagger.proj()))
        .mul(&Mat::kron_all(p, &[&Mat::identity(p, md), &g.star.iota_lift, &Mat::identity(p, rd)]));
    let eta6 = mrr.descend(&amb6)?.mul(&m_dr).mul(&firm.d);
    let eta6_s = ms.descend(&kit.nds.proj().mul(&x6.sec().mul(&eta6).kron(&Mat::identity(p, s))))?;
    checks.push(Check::mat_eq("δ_{M⊗Σ} ∘ (η_M ⊗ Σ) = id", &kit.delta.mul(&eta6_s), &id));
    let eta5 = if kit.cot.dim() == 0 {
        eta6.is_zero().then(|| Mat::zeros(p, 0, md))
    } else {
        kit.cot.incl.solve_many(&eta6)
    };
    match eta5 {
        Some(eta5) => {
            let eta5_s = ms.descend(&kit.cot_sigma.proj().mul(&eta5.kron(&Mat::identity(p, s))))?;
            checks.push(Check::mat_eq("χ_{M⊗Σ} ∘ (η_M ⊗ Σ) = id", &kit.chi.mul(&eta5_s), &id));
        }
        None => checks.push(Check::new("unit lands in the cotensor", false, "η_M(M) ⊄ (M⊗Σ) □ Σ†")),
    }
    checks.extend(kit.checks.iter().cloned());
    Ok(UnitReport {
        module: m.name.clone(),
        injective: eta.is_injective(),
        bijective: eta.is_bijective(),
        eta,
        checks,
    })
}
