//! The comatrix coring `Σ′ ⊗_R Σ` built from `(A, B, Σ, Σ′, μ, R, ι)`.
//!
//! Every structure map is a literal composite of stored matrices:
//! `Δ = (Σ′ ⊗ ι ⊗ Σ) ∘ (Σ′ ⊗ d_Σ)`, `ρ_Σ = (ι ⊗ Σ) ∘ d_Σ`,
//! `λ_{Σ†} = (Σ′ ⊗ ι ⊗ R) ∘ (Σ′ ⊗ d_R)` with `Σ† = Σ′ ⊗_R R`.

use crate::algmod::{self, basis_vector, validate_algebra, validate_bimodule, Algebra, Bimodule, FirmStructure};
use crate::check::Check;
use crate::corings::{coring_hom_check, validate_comodule, validate_coring, Comodule, Coring};
use crate::exactlin::{matrix_kernel, Mat};
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};
use serde::Serialize;

#[derive(Debug, Clone)]
pub struct ComatrixData {
    pub name: String,
    pub a: Algebra,
    pub b: Algebra,
    pub r: Algebra,
    /// `(B, A)`-bimodule.
    pub sigma: Bimodule,
    /// `(A, B)`-bimodule.
    pub sigma_prime: Bimodule,
    /// `A ← Σ′ ⊗ Σ` on the ambient tensor.
    pub mu: Mat,
    /// `R → Σ ⊗ Σ′` on the ambient tensor.
    pub iota: Mat,
}

impl ComatrixData {
    pub fn p(&self) -> u32 {
        self.a.p
    }

    pub fn s(&self) -> usize {
        self.sigma.dim
    }

    pub fn s_prime(&self) -> usize {
        self.sigma_prime.dim
    }
}

fn invalid(what: &str, rep: &algmod::ValidationReport) -> Error {
    Error::Validation(format!("{what}: {}", rep.summary()))
}

/// Checks algebras, bimodules, ring compatibility and that `μ` is an
/// `A`-bimodule map balanced over `B`.
pub fn validate_data(d: &ComatrixData) -> Result<()> {
    for alg in [&d.a, &d.b, &d.r] {
        let rep = validate_algebra(alg)?;
        if !rep.ok() {
            return Err(invalid(&alg.name, &rep));
        }
    }
    if !d.a.is_unital() || !d.b.is_unital() {
        return Err(Error::Invalid("A and B must be unital".into()));
    }
    let rings_ok = d.sigma.left_ring().is_some_and(|x| x.same_ring(&d.b))
        && d.sigma.right_ring().is_some_and(|x| x.same_ring(&d.a))
        && d.sigma_prime.left_ring().is_some_and(|x| x.same_ring(&d.a))
        && d.sigma_prime.right_ring().is_some_and(|x| x.same_ring(&d.b));
    if !rings_ok {
        return Err(Error::ActionMismatch("Σ must be a (B, A)-bimodule and Σ′ an (A, B)-bimodule".into()));
    }
    for m in [&d.sigma, &d.sigma_prime] {
        let rep = validate_bimodule(m)?;
        if !rep.ok() {
            return Err(invalid(&m.name, &rep));
        }
    }
    let (p, a, s, sp) = (d.p(), d.a.dim, d.s(), d.s_prime());
    if (d.mu.rows(), d.mu.cols()) != (a, sp * s) {
        return Err(Error::ShapeMismatch(format!("mu must be {a}x{}", sp * s)));
    }
    if (d.iota.rows(), d.iota.cols()) != (s * sp, d.r.dim) {
        return Err(Error::ShapeMismatch(format!("iota must be {}x{}", s * sp, d.r.dim)));
    }
    let mut rep = algmod::ValidationReport::default();
    let lsp = &d.sigma_prime.left.as_ref().expect("checked").mat;
    let rs = &d.sigma.right.as_ref().expect("checked").mat;
    rep.compare(
        "mu left A-linear",
        &d.mu.mul(&lsp.kron(&Mat::identity(p, s))),
        &d.a.mult.mul(&Mat::identity(p, a).kron(&d.mu)),
        &[a, sp, s],
    );
    rep.compare(
        "mu right A-linear",
        &d.mu.mul(&Mat::identity(p, sp).kron(rs)),
        &d.a.mult.mul(&d.mu.kron(&Mat::identity(p, a))),
        &[sp, s, a],
    );
    if !rep.ok() {
        return Err(invalid("mu", &rep));
    }
    tensorcalc::chain(&[&d.sigma_prime, &d.sigma])?.descend(&d.mu)?;
    Ok(())
}

/// `S = Σ ⊗_A Σ′` with product `x⊗φ · y⊗ψ = x μ(φ⊗y) ⊗ ψ`.
#[derive(Debug, Clone)]
pub struct SRing {
    pub space: TensorSpace,
    pub ring: Algebra,
    /// `ι` followed by the projection onto `S`.
    pub iota: Mat,
}

pub fn build_s_ring(d: &ComatrixData) -> Result<SRing> {
    let p = d.p();
    let (s, sp) = (d.s(), d.s_prime());
    let space = tensorcalc::chain(&[&d.sigma, &d.sigma_prime])?;
    let rs = &d.sigma.right.as_ref().ok_or_else(|| Error::ActionMismatch("Σ needs a right action".into()))?.mat;
    let amb = rs
        .kron(&Mat::identity(p, sp))
        .mul(&Mat::kron_all(p, &[&Mat::identity(p, s), &d.mu, &Mat::identity(p, sp)]));
    let mult = space.proj().mul(&amb).mul(&space.sec().kron(space.sec()));
    let ring = Algebra::new(&format!("S({})", d.name), p, space.dim(), mult, None);
    let iota = space.proj().mul(&d.iota);
    let lhs = iota.mul(&d.r.mult);
    let rhs = ring.mult.mul(&iota.kron(&iota));
    if let Some(j) = (0..lhs.cols()).find(|&j| lhs.col(j) != rhs.col(j)) {
        return Err(Error::NotRingHom(j / d.r.dim, j % d.r.dim));
    }
    Ok(SRing { space, ring, iota })
}

#[derive(Debug, Clone)]
pub struct ComatrixCoring {
    pub data: ComatrixData,
    pub s: SRing,
    /// `ι` lifted canonically into the ambient `Σ ⊗ Σ′`.
    pub iota_lift: Mat,
    /// Σ as an `(R, A)`-bimodule.
    pub sigma_r: Bimodule,
    /// Σ′ as an `(A, R)`-bimodule.
    pub sigma_prime_r: Bimodule,
    pub r_reg: Bimodule,
    pub firm_r: FirmStructure,
    /// `R ⊗_R Σ → Σ` and its inverse `d_Σ`.
    pub firm_sigma: FirmStructure,
    pub coring: Coring,
    /// `Σ′ ⊗_R Σ`.
    pub c_space: TensorSpace,
    /// `Σ′ ⊗_R R ⊗_R Σ`.
    pub triple: TensorSpace,
    /// `Σ′ ⊗ d_Σ : C → triple`.
    pub sigma_prime_d: Mat,
    /// `Σ′ ⊗ ι ⊗ Σ : triple → C ⊗_A C`.
    pub expand: Mat,
    pub rho_sigma: Comodule,
    /// `Σ† = Σ′ ⊗_R R`.
    pub dagger: TensorSpace,
    pub lambda_dagger: Comodule,
}

impl ComatrixCoring {
    pub fn p(&self) -> u32 {
        self.data.p()
    }

    pub fn d_sigma(&self) -> &Mat {
        &self.firm_sigma.d
    }

    pub fn d_r(&self) -> &Mat {
        &self.firm_r.d
    }

    /// Projection `Σ′ ⊗ Σ → C`.
    pub fn pc(&self) -> &Mat {
        self.c_space.proj()
    }
}

/// Σ with the left `R`-action `r u = e_r μ(φ_r ⊗ u)`.
fn induced_left(d: &ComatrixData, iota_lift: &Mat, r: &Algebra) -> Bimodule {
    let p = d.p();
    let s = d.s();
    let rs = &d.sigma.right.as_ref().expect("validated").mat;
    let act = rs.mul(&Mat::identity(p, s).kron(&d.mu)).mul(&iota_lift.kron(&Mat::identity(p, s)));
    d.sigma.clone().with_left(r, act)
}

/// Σ′ with the right `R`-action `φ r = μ(φ ⊗ e_r) φ_r`.
fn induced_right(d: &ComatrixData, iota_lift: &Mat, r: &Algebra) -> Bimodule {
    let p = d.p();
    let sp = d.s_prime();
    let ls = &d.sigma_prime.left.as_ref().expect("validated").mat;
    let act = ls.mul(&d.mu.kron(&Mat::identity(p, sp))).mul(&Mat::identity(p, sp).kron(iota_lift));
    d.sigma_prime.clone().with_right(r, act)
}

pub fn build_comatrix(d: &ComatrixData) -> Result<ComatrixCoring> {
    validate_data(d)?;
    let p = d.p();
    let (s, sp, rd) = (d.s(), d.s_prime(), d.r.dim);
    let sring = build_s_ring(d)?;
    let iota_lift = sring.space.sec().mul(&sring.iota);
    let sigma_r = induced_left(d, &iota_lift, &d.r).renamed("Σ");
    let sigma_prime_r = induced_right(d, &iota_lift, &d.r).renamed("Σ′");
    let r_reg = Bimodule::regular(&d.r).renamed("R");
    let firm_r = algmod::firmness(&d.r).map_err(|e| rename_firm(e, "R"))?;
    let firm_sigma = algmod::firmness_left(&sigma_r).map_err(|e| rename_firm(e, "Σ over R"))?;

    let c_space = tensorcalc::chain(&[&sigma_prime_r, &sigma_r])?;
    let mut carrier = c_space.as_bimodule().renamed("C");
    carrier.left.as_mut().expect("A acts on Σ′").ring = d.a.clone();
    let eps = c_space.descend(&d.mu)?;
    let triple = tensorcalc::chain(&[&sigma_prime_r, &r_reg, &sigma_r])?;
    let rs_space = &firm_sigma.space;
    let sigma_prime_d =
        c_space.descend(&triple.proj().mul(&Mat::identity(p, sp).kron(&rs_space.sec().mul(&firm_sigma.d))))?;
    let cc = tensorcalc::chain(&[&carrier, &carrier])?;
    let pc = c_space.proj().clone();
    let expand = triple.descend(
        &cc.proj()
            .mul(&pc.kron(&pc))
            .mul(&Mat::kron_all(p, &[&Mat::identity(p, sp), &iota_lift, &Mat::identity(p, s)])),
    )?;
    let delta = expand.mul(&sigma_prime_d);
    let coring = Coring { name: format!("comatrix({})", d.name), base: d.a.clone(), carrier, cc, delta, eps };

    let sc = tensorcalc::chain(&[&sigma_r, &coring.carrier])?;
    let iota_sigma =
        rs_space.descend(&sc.proj().mul(&Mat::identity(p, s).kron(&pc)).mul(&iota_lift.kron(&Mat::identity(p, s))))?;
    let rho_sigma = Comodule::right("Σ", &coring, sigma_r.clone(), iota_sigma.mul(&firm_sigma.d))?;

    let dagger = tensorcalc::chain(&[&sigma_prime_r, &r_reg])?;
    let dagger_b = dagger.as_bimodule().renamed("Σ†");
    let triple2 = tensorcalc::chain(&[&sigma_prime_r, &r_reg, &r_reg])?;
    let sp_dr = dagger.descend(&triple2.proj().mul(&Mat::identity(p, sp).kron(&firm_r.space.sec().mul(&firm_r.d))))?;
    let cd = tensorcalc::chain(&[&coring.carrier, &dagger_b])?;
    let expand_r = triple2.descend(
        &cd.proj()
            .mul(&pc.kron(dagger.proj()))
            .mul(&Mat::kron_all(p, &[&Mat::identity(p, sp), &iota_lift, &Mat::identity(p, rd)])),
    )?;
    let lambda_dagger = Comodule::left("Σ†", &coring, dagger_b, expand_r.mul(&sp_dr))?;

    Ok(ComatrixCoring {
        data: d.clone(),
        s: sring,
        iota_lift,
        sigma_r,
        sigma_prime_r,
        r_reg,
        firm_r,
        firm_sigma,
        coring,
        c_space,
        triple,
        sigma_prime_d,
        expand,
        rho_sigma,
        dagger,
        lambda_dagger,
    })
}

fn rename_firm(e: Error, module: &str) -> Error {
    match e {
        Error::NotFirm { witness, .. } => Error::NotFirm { module: module.to_string(), witness },
        other => other,
    }
}

/// Structural checks of a built comatrix coring.
pub fn verify_comatrix(cm: &ComatrixCoring) -> Result<Vec<Check>> {
    let d = &cm.data;
    let p = cm.p();
    let (s, sp, rd) = (d.s(), d.s_prime(), d.r.dim);
    let mut checks = vec![
        Check::new("R firm", cm.firm_r.verify(), "varpi_R ∘ d_R and d_R ∘ varpi_R are identities"),
        Check::new("Σ firm over R", cm.firm_sigma.verify(), "varpi_Σ ∘ d_Σ and d_Σ ∘ varpi_Σ are identities"),
        Check::report("coring axioms", &validate_coring(&cm.coring)?),
        Check::report("Σ is a bicomodule", &validate_comodule(&cm.rho_sigma, &cm.coring)?),
        Check::report("Σ† is a bicomodule", &validate_comodule(&cm.lambda_dagger, &cm.coring)?),
    ];
    let s_assoc = validate_algebra(&cm.s.ring)?;
    checks.push(Check::report("S associative", &s_assoc));

    // (d_Σ ⊗ Σ′) ∘ ι = (R ⊗ ι) ∘ d_R in R ⊗_R Σ ⊗_A Σ′
    let sigma_prime_a = d.sigma_prime.clone();
    let t = tensorcalc::chain(&[&cm.r_reg, &cm.sigma_r, &sigma_prime_a])?;
    let lhs = cm
        .s
        .space
        .descend(&t.proj().mul(&cm.firm_sigma.space.sec().mul(&cm.firm_sigma.d).kron(&Mat::identity(p, sp))))?
        .mul(&cm.s.iota);
    let rhs = cm
        .firm_r
        .space
        .descend(&t.proj().mul(&Mat::identity(p, rd).kron(&cm.iota_lift)))?
        .mul(&cm.firm_r.d);
    checks.push(Check::mat_eq("(d_Σ⊗Σ′)ι = (R⊗ι)d_R", &lhs, &rhs));

    // μ is B- and S-balanced, and ε is μ over S pulled back along ⊗_R → ⊗_S
    let qb = tensorcalc::chain(&[&d.sigma_prime, &d.sigma])?;
    let sig_s = induced_left_s(cm);
    let sigp_s = induced_right_s(cm);
    let qs = tensorcalc::chain(&[&sigp_s, &sig_s])?;
    checks.push(match qb.descend(&d.mu) {
        Ok(_) => Check::new("μ is B-balanced", true, "descends to Σ′ ⊗_B Σ"),
        Err(e) => Check::error("μ is B-balanced", &e),
    });
    let mu_s = qs.descend(&d.mu)?;
    let r_to_s = cm.c_space.descend(qs.proj())?;
    checks.push(Check::mat_eq("ε = μ over S after ⊗_R → ⊗_S", &cm.coring.eps, &mu_s.mul(&r_to_s)));
    let _ = s;
    Ok(checks)
}

fn induced_left_s(cm: &ComatrixCoring) -> Bimodule {
    let d = &cm.data;
    let p = d.p();
    let rs = &d.sigma.right.as_ref().expect("validated").mat;
    let act = rs.mul(&Mat::identity(p, d.s()).kron(&d.mu)).mul(&cm.s.space.sec().kron(&Mat::identity(p, d.s())));
    d.sigma.clone().with_left(&cm.s.ring, act)
}

fn induced_right_s(cm: &ComatrixCoring) -> Bimodule {
    let d = &cm.data;
    let p = d.p();
    let ls = &d.sigma_prime.left.as_ref().expect("validated").mat;
    let act = ls
        .mul(&d.mu.kron(&Mat::identity(p, d.s_prime())))
        .mul(&Mat::identity(p, d.s_prime()).kron(cm.s.space.sec()));
    d.sigma_prime.clone().with_right(&cm.s.ring, act)
}

/// `Δ′ = (Σ′ ⊗ ι ⊗ Σ) ∘ (d_{Σ′} ⊗ Σ)` and the bicomodule isomorphisms.
#[derive(Debug, Clone)]
pub struct PrimeReport {
    pub delta_prime: Mat,
    pub firm_sigma_prime: FirmStructure,
    pub checks: Vec<Check>,
}

pub fn build_comatrix_prime(cm: &ComatrixCoring) -> Result<PrimeReport> {
    let d = &cm.data;
    let p = cm.p();
    let (s, sp, rd) = (d.s(), d.s_prime(), d.r.dim);
    let firm_sp = algmod::firmness_right(&cm.sigma_prime_r).map_err(|e| rename_firm(e, "Σ′ over R"))?;
    let dsp = &firm_sp.d;
    let dsp_sigma = cm.c_space.descend(&cm.triple.proj().mul(&firm_sp.space.sec().mul(dsp).kron(&Mat::identity(p, s))))?;
    let delta_prime = cm.expand.mul(&dsp_sigma);
    let mut checks = vec![Check::mat_eq("Δ = Δ′", &cm.coring.delta, &delta_prime)];

    // λ_{Σ′} = (Σ′ ⊗ ι) ∘ d_{Σ′} and (C ⊗ d_{Σ′}) λ_{Σ′} = λ_{Σ†} d_{Σ′}
    let csp = tensorcalc::chain(&[&cm.coring.carrier, &cm.sigma_prime_r])?;
    let lam_sp = firm_sp
        .space
        .descend(&csp.proj().mul(&cm.pc().kron(&Mat::identity(p, sp))).mul(&Mat::identity(p, sp).kron(&cm.iota_lift)))?
        .mul(dsp);
    let lam_sp_c = Comodule::left("Σ′", &cm.coring, cm.sigma_prime_r.clone(), lam_sp.clone())?;
    checks.push(Check::report("Σ′ is a bicomodule", &validate_comodule(&lam_sp_c, &cm.coring)?));
    // d_Σ′ in the coordinates of Σ†
    let dsp_dag = cm.dagger.proj().mul(firm_sp.space.sec()).mul(dsp);
    let c_dsp = csp.descend(
        &cm.lambda_dagger.tensor.proj().mul(&Mat::identity(p, cm.coring.dim()).kron(&dsp_dag)),
    )?;
    checks.push(Check::mat_eq(
        "d_Σ′ is colinear",
        &c_dsp.mul(&lam_sp),
        &cm.lambda_dagger.coaction.mul(&dsp_dag),
    ));

    // ρ_{†Σ} = (R ⊗ ι ⊗ Σ)(d_R ⊗ Σ) and (d_Σ ⊗ C) ρ_Σ = ρ_{†Σ} d_Σ
    let rs = &cm.firm_sigma.space;
    let rs_b = rs.as_bimodule();
    let rrs = tensorcalc::chain(&[&cm.r_reg, &cm.r_reg, &cm.sigma_r])?;
    let rsc = tensorcalc::chain(&[&rs_b, &cm.coring.carrier])?;
    let dr_s = rs.descend(&rrs.proj().mul(&cm.firm_r.space.sec().mul(&cm.firm_r.d).kron(&Mat::identity(p, s))))?;
    let r_iota_s = rrs.descend(
        &rsc.proj()
            .mul(&rs.proj().kron(cm.pc()))
            .mul(&Mat::kron_all(p, &[&Mat::identity(p, rd), &cm.iota_lift, &Mat::identity(p, s)])),
    )?;
    let rho_dag_sigma = r_iota_s.mul(&dr_s);
    let ds_c = cm
        .rho_sigma
        .tensor
        .descend(&rsc.proj().mul(&cm.firm_sigma.d.kron(&Mat::identity(p, cm.coring.dim()))))?;
    checks.push(Check::mat_eq(
        "d_Σ is colinear",
        &ds_c.mul(&cm.rho_sigma.coaction),
        &rho_dag_sigma.mul(&cm.firm_sigma.d),
    ));
    Ok(PrimeReport { delta_prime, firm_sigma_prime: firm_sp, checks })
}

/// The coring on `Σ† ⊗_R Σ` and the isomorphism `f(φ⊗r⊗x) = φ⊗rx`.
#[derive(Debug, Clone)]
pub struct DaggerCoring {
    pub inner: ComatrixCoring,
    /// `f : Σ† ⊗_R Σ → Σ′ ⊗_R Σ`.
    pub f: Mat,
    pub f_inverse: Mat,
    pub checks: Vec<Check>,
}

pub fn build_dagger(cm: &ComatrixCoring) -> Result<DaggerCoring> {
    let d = &cm.data;
    let p = cm.p();
    let (s, sp, rd) = (d.s(), d.s_prime(), d.r.dim);
    let k = Algebra::ground(p);
    let dag = &cm.dagger;
    let t = dag.dim();
    let l_sigma = &cm.sigma_r.left.as_ref().expect("induced").mat;
    let sigma_k = d.sigma.clone().with_left(&k, Mat::identity(p, s));
    let dag_k = dag.as_bimodule().renamed("Σ†").with_right(&k, Mat::identity(p, t));
    let mu_dag = d.mu.mul(&Mat::identity(p, sp).kron(l_sigma)).mul(&dag.sec().kron(&Mat::identity(p, s)));
    let iota_dag = Mat::identity(p, s)
        .kron(dag.proj())
        .mul(&cm.iota_lift.kron(&Mat::identity(p, rd)))
        .mul(&cm.firm_r.space.sec().mul(&cm.firm_r.d));
    let data = ComatrixData {
        name: format!("{}†", d.name),
        a: d.a.clone(),
        b: k,
        r: d.r.clone(),
        sigma: sigma_k,
        sigma_prime: dag_k,
        mu: mu_dag,
        iota: iota_dag,
    };
    let inner = build_comatrix(&data)?;
    let mut checks = Vec::new();
    let natural = dag.right.as_ref().expect("R acts on Σ†").mat.clone();
    let induced = inner.sigma_prime_r.right.as_ref().expect("induced").mat.clone();
    checks.push(Check::mat_eq("induced R-action on Σ† is the natural one", &induced, &natural));

    let f = inner
        .c_space
        .descend(&cm.pc().mul(&Mat::identity(p, sp).kron(l_sigma)).mul(&dag.sec().kron(&Mat::identity(p, s))))?;
    let f_inverse = cm.c_space.descend(
        &inner
            .c_space
            .proj()
            .mul(&dag.proj().kron(&Mat::identity(p, s)))
            .mul(&Mat::identity(p, sp).kron(&cm.firm_sigma.space.sec().mul(&cm.firm_sigma.d))),
    )?;
    checks.push(Check::bijective("f invertible", &f));
    checks.push(Check::report("f is a coring map", &coring_hom_check(&inner.coring, &cm.coring, &f)?));
    checks.push(Check::mat_eq("f ∘ (Σ′⊗d_Σ) = id", &f.mul(&f_inverse), &Mat::identity(p, cm.coring.dim())));
    checks.push(Check::mat_eq("(Σ′⊗d_Σ) ∘ f = id", &f_inverse.mul(&f), &Mat::identity(p, inner.coring.dim())));

    // ρ† transports to ρ_Σ
    let sigma_f = tensorcalc::tensor_map(&inner.rho_sigma.tensor, &cm.rho_sigma.tensor, &[&Mat::identity(p, s), &f])?;
    checks.push(Check::mat_eq("(Σ⊗f) ρ† = ρ_Σ", &sigma_f.mul(&inner.rho_sigma.coaction), &cm.rho_sigma.coaction));

    // λ† = (C†⊗ϖ_{Σ†}) λ_gen d_{Σ†} transports to λ_{Σ†}
    let firm_dag = algmod::firmness_right(&inner.sigma_prime_r).map_err(|e| rename_firm(e, "Σ† over R"))?;
    let target = tensorcalc::chain(&[&inner.coring.carrier, &inner.sigma_prime_r])?;
    let c_varpi = tensorcalc::tensor_map(
        &inner.lambda_dagger.tensor,
        &target,
        &[&Mat::identity(p, inner.coring.dim()), &firm_dag.varpi],
    )?;
    let lam = c_varpi.mul(&inner.lambda_dagger.coaction).mul(&firm_dag.d);
    let f_dag = tensorcalc::tensor_map(&target, &cm.lambda_dagger.tensor, &[&f, &Mat::identity(p, t)])?;
    checks.push(Check::mat_eq("(f⊗Σ†) λ† = λ_Σ†", &f_dag.mul(&lam), &cm.lambda_dagger.coaction));
    Ok(DaggerCoring { inner, f, f_inverse, checks })
}

/// `Σ* = Hom_A(Σ, A)` as a matrix space with its actions.
#[derive(Debug, Clone)]
pub struct SigmaStar {
    /// Basis maps, each `dim A x dim Σ`.
    pub basis: Vec<Mat>,
    coords: Mat,
    /// `(A, B)`-bimodule.
    pub over_b: Bimodule,
    /// `(A, R)`-bimodule.
    pub over_r: Bimodule,
    /// `ev : Σ* ⊗ Σ → A` on the ambient tensor.
    pub ev: Mat,
}

impl SigmaStar {
    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    /// Coordinates of a right-`A`-linear map in the basis.
    pub fn coordinates(&self, m: &Mat) -> Vec<u32> {
        let v = Mat::column_vector(m.p(), m.entries());
        self.coords.solve_many(&v).expect("map is right A-linear").col(0)
    }

    pub fn map_of(&self, coords: &[u32]) -> Mat {
        let (r, c) = (self.basis[0].rows(), self.basis[0].cols());
        crate::exactlin::combine(self.coords.p(), r, c, coords, &self.basis)
    }
}

/// Right-`A`-linear maps `Σ → A`, solved from a linear system.
pub fn sigma_star(d: &ComatrixData, sigma_r: &Bimodule) -> SigmaStar {
    let p = d.p();
    let (a, s) = (d.a.dim, d.s());
    let rs = d.sigma.right.as_ref().expect("validated").mat.clone();
    let ia = Mat::identity(p, a);
    let basis = matrix_kernel(p, a, s, |phi| phi.mul(&rs).sub(&d.a.mult.mul(&phi.kron(&ia))).entries().to_vec());
    let k = basis.len();
    let coords = Mat::from_cols(p, a * s, &basis.iter().map(|m| m.entries().to_vec()).collect::<Vec<_>>());
    let solve = |m: &Mat| -> Vec<u32> {
        coords.solve_many(&Mat::column_vector(p, m.entries())).expect("closed under actions").col(0)
    };
    let mut left = Mat::zeros(p, k, a * k);
    for i in 0..a {
        let la = d.a.left_mul(&basis_vector(a, i));
        for (j, phi) in basis.iter().enumerate() {
            let c = solve(&la.mul(phi));
            for (row, &v) in c.iter().enumerate() {
                left.set(row, i * k + j, v);
            }
        }
    }
    let right_over = |ring: &Algebra, module: &Bimodule| {
        let mut m = Mat::zeros(p, k, k * ring.dim);
        for i in 0..ring.dim {
            let op = module.left_op(&basis_vector(ring.dim, i));
            for (j, phi) in basis.iter().enumerate() {
                let c = solve(&phi.mul(&op));
                for (row, &v) in c.iter().enumerate() {
                    m.set(row, j * ring.dim + i, v);
                }
            }
        }
        m
    };
    let over_b = Bimodule::new("Σ*", p, k).with_left(&d.a, left.clone()).with_right(&d.b, right_over(&d.b, &d.sigma));
    let over_r = Bimodule::new("Σ*", p, k).with_left(&d.a, left).with_right(&d.r, right_over(&d.r, sigma_r));
    let mut ev = Mat::zeros(p, a, k * s);
    for (j, phi) in basis.iter().enumerate() {
        for u in 0..s {
            for row in 0..a {
                ev.set(row, j * s + u, phi.get(row, u));
            }
        }
    }
    SigmaStar { basis, coords, over_b, over_r, ev }
}

/// `φ̄ ⊗ Σ : Σ′ ⊗_R Σ → Σ* ⊗_R Σ` with `φ̄(u) = μ(φ ⊗ u)`.
#[derive(Debug, Clone)]
pub struct StarTransport {
    pub star: SigmaStar,
    /// `Σ′ → Σ*` in coordinates.
    pub bar: Mat,
    /// The comatrix coring of `(A, B, Σ, Σ*, ev, R, (Σ⊗bar)ι)`.
    pub star_coring: ComatrixCoring,
    pub map: Mat,
    pub inverse: Option<Mat>,
    pub checks: Vec<Check>,
}

pub fn star_data(cm: &ComatrixCoring) -> (SigmaStar, Mat, ComatrixData) {
    let d = &cm.data;
    let p = d.p();
    let (a, s, sp) = (d.a.dim, d.s(), d.s_prime());
    let star = sigma_star(d, &cm.sigma_r);
    let mut bar = Mat::zeros(p, star.dim(), sp);
    for phi in 0..sp {
        let m = Mat::from_fn(p, a, s, |row, u| d.mu.get(row, phi * s + u) as i64);
        for (k, &v) in star.coordinates(&m).iter().enumerate() {
            bar.set(k, phi, v);
        }
    }
    let data = ComatrixData {
        name: format!("{}*", d.name),
        a: d.a.clone(),
        b: d.b.clone(),
        r: d.r.clone(),
        sigma: d.sigma.clone(),
        sigma_prime: star.over_b.clone(),
        mu: star.ev.clone(),
        iota: Mat::identity(p, s).kron(&bar).mul(&cm.iota_lift),
    };
    (star, bar, data)
}

pub fn transport_to_sigma_star(cm: &ComatrixCoring) -> Result<StarTransport> {
    let d = &cm.data;
    let p = d.p();
    let (s, sp) = (d.s(), d.s_prime());
    let (star, bar, data) = star_data(cm);
    let k = star.dim();
    let sc = build_comatrix(&data)?;
    let map = cm.c_space.descend(&sc.c_space.proj().mul(&bar.kron(&Mat::identity(p, s))))?;
    let mut checks = vec![Check::report("φ̄⊗Σ is a coring map", &coring_hom_check(&cm.coring, &sc.coring, &map)?)];
    let inv = map.invert().ok();
    checks.push(Check::bijective("φ̄⊗Σ invertible", &map));
    // α̃(φ⊗u) = φ(e_r) φ_r ⊗ u^r
    let ls = &d.sigma_prime.left.as_ref().expect("validated").mat;
    let amb = cm
        .pc()
        .mul(&ls.kron(&Mat::identity(p, s)))
        .mul(&Mat::kron_all(p, &[&star.ev, &Mat::identity(p, sp), &Mat::identity(p, s)]))
        .mul(&Mat::kron_all(p, &[&Mat::identity(p, k), &cm.iota_lift, &Mat::identity(p, s)]));
    let alpha = sc.triple.descend(&amb)?.mul(&sc.sigma_prime_d);
    if let Some(inv) = &inv {
        checks.push(Check::mat_eq("inverse of φ̄⊗Σ is α̃", inv, &alpha));
    }
    Ok(StarTransport { star, bar, star_coring: sc, map, inverse: inv, checks })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualBasisPair {
    /// Element of Σ.
    pub element: Vec<u32>,
    /// Element of Σ′.
    pub functional: Vec<u32>,
}

/// Checks a context with unital `B = R`; returns a dual basis for `Σ_A`.
pub fn context_validate(d: &ComatrixData) -> Result<Vec<DualBasisPair>> {
    validate_data(d)?;
    let p = d.p();
    let (s, sp) = (d.s(), d.s_prime());
    let u = d.b.unit.as_ref().ok_or_else(|| Error::Invalid("B must be unital".into()))?;
    let one = d.iota.apply(u);
    let one_col = Mat::column_vector(p, &one);
    let rs = &d.sigma.right.as_ref().expect("validated").mat;
    let ls = &d.sigma_prime.left.as_ref().expect("validated").mat;
    let right = rs.mul(&Mat::identity(p, s).kron(&d.mu)).mul(&one_col.kron(&Mat::identity(p, s)));
    if let Some(j) = (0..s).find(|&j| right.col(j) != basis_vector(s, j)) {
        return Err(Error::DiagramFails { which: "right".into(), index: j });
    }
    let left = ls.mul(&d.mu.kron(&Mat::identity(p, sp))).mul(&Mat::identity(p, sp).kron(&one_col));
    if let Some(j) = (0..sp).find(|&j| left.col(j) != basis_vector(sp, j)) {
        return Err(Error::DiagramFails { which: "left".into(), index: j });
    }
    let space = tensorcalc::chain(&[&d.sigma, &d.sigma_prime])?;
    for bi in 0..d.b.dim {
        let bv = basis_vector(d.b.dim, bi);
        let lhs = space.proj().apply(&d.iota.apply(&bv));
        let via_left = space.proj().apply(&d.sigma.left_op(&bv).kron(&Mat::identity(p, sp)).apply(&one));
        let via_right = space.proj().apply(&Mat::identity(p, s).kron(&d.sigma_prime.right_op(&bv)).apply(&one));
        if lhs != via_left || lhs != via_right {
            return Err(Error::DiagramFails { which: "bimodule".into(), index: bi });
        }
    }
    let mut pairs = Vec::new();
    for x in 0..s {
        let functional: Vec<u32> = (0..sp).map(|phi| one[x * sp + phi]).collect();
        if functional.iter().any(|&v| v != 0) {
            pairs.push(DualBasisPair { element: basis_vector(s, x), functional });
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn ground_data(p: u32) -> ComatrixData {
        let f = Algebra::ground(p);
        let m = Bimodule::regular(&f);
        ComatrixData {
            name: "ground".into(),
            a: f.clone(),
            b: f.clone(),
            r: f.clone(),
            sigma: m.clone(),
            sigma_prime: m,
            mu: Mat::identity(p, 1),
            iota: Mat::identity(p, 1),
        }
    }

    #[test]
    fn bundled_instances_verify() {
        for b in crate::instances::bundled() {
            let cm = b.comatrix().unwrap();
            let checks = verify_comatrix(&cm).unwrap();
            assert!(checks.iter().all(|c| c.passed), "{}: {:?}", b.name, checks);
        }
    }

    #[test]
    fn prime_coring_with_nontrivial_quotients() {
        // R = F2 × F2 makes Σ† a proper quotient of Σ′ ⊗ R
        let cm = crate::instances::projection_f2xf2().comatrix().unwrap();
        assert!(cm.dagger.dim() < cm.dagger.ambient());
        let pr = build_comatrix_prime(&cm).unwrap();
        assert!(pr.checks.iter().all(|c| c.passed), "{:?}", pr.checks);
    }

    #[test]
    fn trivial_data_builds() {
        let cm = build_comatrix(&ground_data(2)).unwrap();
        assert_eq!(cm.coring.dim(), 1);
        assert!(cm.coring.eps.is_identity());
        assert!(verify_comatrix(&cm).unwrap().iter().all(|c| c.passed));
        let pr = build_comatrix_prime(&cm).unwrap();
        assert!(pr.checks.iter().all(|c| c.passed), "{:?}", pr.checks);
        let dg = build_dagger(&cm).unwrap();
        assert!(dg.f.is_identity());
        assert!(dg.checks.iter().all(|c| c.passed), "{:?}", dg.checks);
        let st = transport_to_sigma_star(&cm).unwrap();
        assert!(st.map.is_identity());
        assert!(st.checks.iter().all(|c| c.passed), "{:?}", st.checks);
    }

    #[test]
    fn not_ring_hom_witness() {
        // R with zero product, ι(e) = 1: ι(e·e) = 0 but ι(e)ι(e) = 1
        let mut d = ground_data(2);
        d.r = Algebra::new("z", 2, 1, Mat::zeros(2, 1, 1), None);
        assert_eq!(build_s_ring(&d).unwrap_err(), Error::NotRingHom(0, 0));
    }

    #[test]
    fn context_dual_basis_standard() {
        // Σ = F3², Σ′ = its dual, B = R = M2(F3), canonical pairing
        let p = 3;
        let f = Algebra::ground(p);
        let m2 = Algebra::matrices(p, 2);
        let mut l = Mat::zeros(p, 2, 8);
        let mut r = Mat::zeros(p, 2, 8);
        for i in 0..2 {
            for j in 0..2 {
                l.set(i, (i * 2 + j) * 2 + j, 1);
                r.set(j, i * 4 + (i * 2 + j), 1);
            }
        }
        let sigma = Bimodule::new("col", p, 2).with_left(&m2, l).with_right(&f, Mat::identity(p, 2));
        let sigma_prime = Bimodule::new("row", p, 2).with_left(&f, Mat::identity(p, 2)).with_right(&m2, r);
        let mu = Mat::from_rows(p, 4, &[vec![1, 0, 0, 1]]);
        let mut iota = Mat::zeros(p, 4, 4);
        for i in 0..2 {
            for j in 0..2 {
                iota.set(i * 2 + j, i * 2 + j, 1);
            }
        }
        let d = ComatrixData { name: "std".into(), a: f.clone(), b: m2.clone(), r: m2, sigma, sigma_prime, mu, iota };
        let pairs = context_validate(&d).unwrap();
        assert_eq!(
            pairs,
            vec![
                DualBasisPair { element: vec![1, 0], functional: vec![1, 0] },
                DualBasisPair { element: vec![0, 1], functional: vec![0, 1] },
            ]
        );
        let mut broken = d.clone();
        broken.sigma_prime.left.as_mut().unwrap().mat = Mat::zeros(p, 2, 2);
        assert!(context_validate(&broken).is_err());
    }
}
