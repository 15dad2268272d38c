//! Corings over a unital algebra, comodules, coring morphisms, cotensor
//! products and a brute-force comodule enumerator.

use crate::algmod::{decode, Algebra, Bimodule, ValidationReport};
use crate::exactlin::{combine, solve_matrix_system, Mat};
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};
use serde::Serialize;

/// `(C, Δ, ε)` with `Δ` valued in the quotient `C ⊗_A C`.
#[derive(Debug, Clone)]
pub struct Coring {
    pub name: String,
    pub base: Algebra,
    pub carrier: Bimodule,
    pub cc: TensorSpace,
    pub delta: Mat,
    pub eps: Mat,
}

fn require_actions(m: &Bimodule, a: &Algebra) -> Result<()> {
    let ok = m.left_ring().is_some_and(|r| r.same_ring(a)) && m.right_ring().is_some_and(|r| r.same_ring(a));
    if ok {
        Ok(())
    } else {
        Err(Error::ActionMismatch(format!("{} is not an {}-bimodule", m.name, a.name)))
    }
}

impl Coring {
    pub fn new(name: &str, base: &Algebra, carrier: Bimodule, delta: Mat, eps: Mat) -> Result<Coring> {
        require_actions(&carrier, base)?;
        let cc = tensorcalc::chain(&[&carrier, &carrier])?;
        if (delta.rows(), delta.cols()) != (cc.dim(), carrier.dim) {
            return Err(Error::ShapeMismatch(format!(
                "{name}: delta is {}x{}, expected {}x{}",
                delta.rows(),
                delta.cols(),
                cc.dim(),
                carrier.dim
            )));
        }
        if (eps.rows(), eps.cols()) != (base.dim, carrier.dim) {
            return Err(Error::ShapeMismatch(format!("{name}: epsilon has wrong shape")));
        }
        Ok(Coring { name: name.to_string(), base: base.clone(), carrier, cc, delta, eps })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    pub fn p(&self) -> u32 {
        self.base.p
    }

    /// `C = A` with `Δ(a) = a ⊗ 1` and `ε = id`.
    pub fn trivial(a: &Algebra) -> Result<Coring> {
        let carrier = Bimodule::regular(a);
        let cc = tensorcalc::chain(&[&carrier, &carrier])?;
        let u = a.unit.as_ref().ok_or_else(|| Error::Invalid(format!("{} is not unital", a.name)))?;
        let delta = cc.proj().mul(&Mat::identity(a.p, a.dim).kron(&Mat::column_vector(a.p, u)));
        Coring::new(&format!("trivial({})", a.name), a, carrier, delta, Mat::identity(a.p, a.dim))
    }

    /// Sweedler coring `A ⊗_B A` for `B → A` given by `incl` (`dim A x dim B`).
    pub fn sweedler(a: &Algebra, b: &Algebra, incl: &Mat) -> Result<Coring> {
        let p = a.p;
        let ia = Mat::identity(p, a.dim);
        let u = Mat::column_vector(p, a.unit.as_ref().ok_or_else(|| Error::Invalid("A must be unital".into()))?);
        let a_ab = Bimodule::regular(a).with_right(b, a.mult.mul(&ia.kron(incl)));
        let a_ba = Bimodule::regular(a).with_left(b, a.mult.mul(&incl.kron(&ia)));
        let t = tensorcalc::chain(&[&a_ab, &a_ba])?;
        let carrier = t.as_bimodule().renamed(&format!("{}⊗{}{}", a.name, b.name, a.name));
        let cc = tensorcalc::chain(&[&carrier, &carrier])?;
        let amb = cc.proj().mul(&t.proj().kron(t.proj())).mul(&ia.kron(&u).kron(&u.kron(&ia)));
        let delta = t.descend(&amb)?;
        let eps = t.descend(&a.mult)?;
        Coring::new(&format!("sweedler({}/{})", a.name, b.name), a, carrier, delta, eps)
    }

    /// Matrix coring over `F_p`: basis `e_ij` (index `i * n + j`),
    /// `Δ(e_ij) = Σ_k e_ik ⊗ e_kj`, `ε(e_ij) = δ_ij`.
    pub fn matrix(p: u32, n: usize) -> Result<Coring> {
        let f = Algebra::ground(p);
        let d = n * n;
        let carrier = Bimodule::new(&format!("Mc{n}"), p, d)
            .with_left(&f, Mat::identity(p, d))
            .with_right(&f, Mat::identity(p, d));
        let mut delta = Mat::zeros(p, d * d, d);
        let mut eps = Mat::zeros(p, 1, d);
        for i in 0..n {
            eps.set(0, i * n + i, 1);
            for j in 0..n {
                for k in 0..n {
                    delta.set((i * n + k) * d + k * n + j, i * n + j, 1);
                }
            }
        }
        Coring::new(&format!("matrix{n}(F{p})"), &f, carrier, delta, eps)
    }

    pub fn lift_delta(&self) -> Mat {
        self.cc.sec().mul(&self.delta)
    }
}

fn right_action(m: &Bimodule) -> &Mat {
    &m.right.as_ref().expect("right action").mat
}

fn left_action(m: &Bimodule) -> &Mat {
    &m.left.as_ref().expect("left action").mat
}

pub fn validate_coring(c: &Coring) -> Result<ValidationReport> {
    let (p, a, n) = (c.p(), c.base.dim, c.dim());
    require_actions(&c.carrier, &c.base)?;
    let (ia, i_n) = (Mat::identity(p, a), Mat::identity(p, n));
    let mut rep = ValidationReport::default();
    let lc = left_action(&c.carrier);
    let rc = right_action(&c.carrier);
    let lcc = &c.cc.left.as_ref().expect("residual left").mat;
    let rcc = &c.cc.right.as_ref().expect("residual right").mat;
    rep.compare("delta left A-linear", &c.delta.mul(lc), &lcc.mul(&ia.kron(&c.delta)), &[a, n]);
    rep.compare("delta right A-linear", &c.delta.mul(rc), &rcc.mul(&c.delta.kron(&ia)), &[n, a]);
    rep.compare("epsilon left A-linear", &c.eps.mul(lc), &c.base.mult.mul(&ia.kron(&c.eps)), &[a, n]);
    rep.compare("epsilon right A-linear", &c.eps.mul(rc), &c.base.mult.mul(&c.eps.kron(&ia)), &[n, a]);
    let ccc = tensorcalc::chain(&[&c.carrier, &c.carrier, &c.carrier])?;
    let ld = c.lift_delta();
    let lhs = ccc.proj().mul(&ld.kron(&i_n)).mul(&ld);
    let rhs = ccc.proj().mul(&i_n.kron(&ld)).mul(&ld);
    rep.compare("coassociativity", &lhs, &rhs, &[n]);
    rep.compare("right counit", &rc.mul(&i_n.kron(&c.eps)).mul(&ld), &i_n, &[n]);
    rep.compare("left counit", &lc.mul(&c.eps.kron(&i_n)).mul(&ld), &i_n, &[n]);
    Ok(rep)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Side {
    Right,
    Left,
}

/// A right comodule `ρ: M → M ⊗_A C` or a left comodule `λ: M → C ⊗_A M`.
#[derive(Debug, Clone)]
pub struct Comodule {
    pub name: String,
    pub side: Side,
    pub carrier: Bimodule,
    pub tensor: TensorSpace,
    pub coaction: Mat,
}

impl Comodule {
    pub fn right(name: &str, c: &Coring, carrier: Bimodule, coaction: Mat) -> Result<Comodule> {
        let tensor = tensorcalc::chain(&[&carrier, &c.carrier])?;
        Comodule::assemble(name, Side::Right, carrier, tensor, coaction)
    }

    pub fn left(name: &str, c: &Coring, carrier: Bimodule, coaction: Mat) -> Result<Comodule> {
        let tensor = tensorcalc::chain(&[&c.carrier, &carrier])?;
        Comodule::assemble(name, Side::Left, carrier, tensor, coaction)
    }

    fn assemble(name: &str, side: Side, carrier: Bimodule, tensor: TensorSpace, coaction: Mat) -> Result<Comodule> {
        if (coaction.rows(), coaction.cols()) != (tensor.dim(), carrier.dim) {
            return Err(Error::ShapeMismatch(format!(
                "{name}: coaction is {}x{}, expected {}x{}",
                coaction.rows(),
                coaction.cols(),
                tensor.dim(),
                carrier.dim
            )));
        }
        Ok(Comodule { name: name.to_string(), side, carrier, tensor, coaction })
    }

    pub fn dim(&self) -> usize {
        self.carrier.dim
    }

    /// The coaction lifted to the ambient tensor.
    pub fn lifted(&self) -> Mat {
        self.tensor.sec().mul(&self.coaction)
    }

    /// The right module structure over the base, as a flat entry list.
    fn sort_key(&self) -> (usize, Vec<u32>, Vec<u32>) {
        let act = self.carrier.right.as_ref().map(|a| a.mat.entries().to_vec()).unwrap_or_default();
        (self.dim(), act, self.coaction.entries().to_vec())
    }
}

/// The comodule `C` over itself (right or left).
pub fn regular_comodule(c: &Coring, side: Side) -> Result<Comodule> {
    match side {
        Side::Right => Comodule::right(&c.name, c, c.carrier.clone(), c.delta.clone()),
        Side::Left => Comodule::left(&c.name, c, c.carrier.clone(), c.delta.clone()),
    }
}

pub fn validate_comodule(m: &Comodule, c: &Coring) -> Result<ValidationReport> {
    let (p, a, d) = (c.p(), c.base.dim, m.dim());
    let (ia, id) = (Mat::identity(p, a), Mat::identity(p, d));
    let rho = &m.coaction;
    let lifted = m.lifted();
    let ld = c.lift_delta();
    let ic = Mat::identity(p, c.dim());
    let mut rep = ValidationReport::default();
    match m.side {
        Side::Right => {
            let ra = m.carrier.right.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} lacks a right action", m.name)))?;
            if !ra.ring.same_ring(&c.base) {
                return Err(Error::ActionMismatch(format!("{} is not a right {}-module", m.name, c.base.name)));
            }
            let rmc = &m.tensor.right.as_ref().expect("residual right").mat;
            rep.compare("coaction A-linear", &rho.mul(&ra.mat), &rmc.mul(&rho.kron(&ia)), &[d, a]);
            let mcc = tensorcalc::chain(&[&m.carrier, &c.carrier, &c.carrier])?;
            let lhs = mcc.proj().mul(&lifted.kron(&ic)).mul(&lifted);
            let rhs = mcc.proj().mul(&id.kron(&ld)).mul(&lifted);
            rep.compare("comodule coassociativity", &lhs, &rhs, &[d]);
            rep.compare("comodule counit", &ra.mat.mul(&id.kron(&c.eps)).mul(&lifted), &id, &[d]);
            if let Some(la) = &m.carrier.left {
                let lmc = &m.tensor.left.as_ref().expect("residual left").mat;
                let r = la.ring.dim;
                let lhs = rho.mul(&la.mat);
                let rhs = lmc.mul(&Mat::identity(p, r).kron(rho));
                rep.compare("coaction left linear", &lhs, &rhs, &[r, d]);
            }
        }
        Side::Left => {
            let la = m.carrier.left.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} lacks a left action", m.name)))?;
            if !la.ring.same_ring(&c.base) {
                return Err(Error::ActionMismatch(format!("{} is not a left {}-module", m.name, c.base.name)));
            }
            let lcm = &m.tensor.left.as_ref().expect("residual left").mat;
            rep.compare("coaction A-linear", &rho.mul(&la.mat), &lcm.mul(&ia.kron(rho)), &[a, d]);
            let ccm = tensorcalc::chain(&[&c.carrier, &c.carrier, &m.carrier])?;
            let lhs = ccm.proj().mul(&ic.kron(&lifted)).mul(&lifted);
            let rhs = ccm.proj().mul(&ld.kron(&id)).mul(&lifted);
            rep.compare("comodule coassociativity", &lhs, &rhs, &[d]);
            rep.compare("comodule counit", &la.mat.mul(&c.eps.kron(&id)).mul(&lifted), &id, &[d]);
            if let Some(ra) = &m.carrier.right {
                let rcm = &m.tensor.right.as_ref().expect("residual right").mat;
                let r = ra.ring.dim;
                let lhs = rho.mul(&ra.mat);
                let rhs = rcm.mul(&rho.kron(&Mat::identity(p, r)));
                rep.compare("coaction right linear", &lhs, &rhs, &[d, r]);
            }
        }
    }
    Ok(rep)
}

/// Checks that `f: src → dst` is a morphism of corings.
pub fn coring_hom_check(src: &Coring, dst: &Coring, f: &Mat) -> Result<ValidationReport> {
    if !src.base.same_ring(&dst.base) {
        return Err(Error::BaseMismatch);
    }
    if (f.rows(), f.cols()) != (dst.dim(), src.dim()) {
        return Err(Error::ShapeMismatch("coring map shape".into()));
    }
    let (p, a, n) = (src.p(), src.base.dim, src.dim());
    let ia = Mat::identity(p, a);
    let mut rep = ValidationReport::default();
    rep.compare(
        "left A-linear",
        &f.mul(left_action(&src.carrier)),
        &left_action(&dst.carrier).mul(&ia.kron(f)),
        &[a, n],
    );
    rep.compare(
        "right A-linear",
        &f.mul(right_action(&src.carrier)),
        &right_action(&dst.carrier).mul(&f.kron(&ia)),
        &[n, a],
    );
    rep.compare("counit preserved", &dst.eps.mul(f), &src.eps, &[n]);
    let ff = dst.cc.proj().mul(&f.kron(f)).mul(&src.lift_delta());
    rep.compare("comultiplication preserved", &dst.delta.mul(f), &ff, &[n]);
    Ok(rep)
}

/// Checks that `f: m → n` is an `A`-linear colinear map of right comodules.
pub fn comodule_hom_check(m: &Comodule, n: &Comodule, c: &Coring, f: &Mat) -> ValidationReport {
    let p = c.p();
    let a = c.base.dim;
    let mut rep = ValidationReport::default();
    rep.compare(
        "A-linear",
        &f.mul(right_action(&m.carrier)),
        &right_action(&n.carrier).mul(&f.kron(&Mat::identity(p, a))),
        &[m.dim(), a],
    );
    let lhs = n.coaction.mul(f);
    let rhs = n.tensor.proj().mul(&f.kron(&Mat::identity(p, c.dim()))).mul(&m.lifted());
    rep.compare("colinear", &lhs, &rhs, &[m.dim()]);
    rep
}

/// `M □_C N ⊆ M ⊗_A N` with its inclusion.
#[derive(Debug, Clone)]
pub struct Cotensor {
    pub space: TensorSpace,
    /// `dim(M ⊗_A N) x dim(M □ N)`.
    pub incl: Mat,
}

impl Cotensor {
    pub fn dim(&self) -> usize {
        self.incl.cols()
    }

    /// `M □ N` with the outer actions restricted from `M ⊗_A N`.
    pub fn as_bimodule(&self, name: &str) -> Bimodule {
        let p = self.space.p();
        let d = self.dim();
        let mut out = Bimodule::new(name, p, d);
        if let Some(la) = &self.space.left {
            let img = la.mat.mul(&Mat::identity(p, la.ring.dim).kron(&self.incl));
            let mat = self.incl.solve_many(&img).expect("cotensor is a left submodule");
            out = out.with_left(&la.ring, mat);
        }
        if let Some(ra) = &self.space.right {
            let img = ra.mat.mul(&self.incl.kron(&Mat::identity(p, ra.ring.dim)));
            let mat = self.incl.solve_many(&img).expect("cotensor is a right submodule");
            out = out.with_right(&ra.ring, mat);
        }
        out
    }
}

/// The two maps `ρ_M ⊗ N` and `M ⊗ λ_N` into `M ⊗_A C ⊗_A N`.
pub fn cotensor_pair(m: &Comodule, n: &Comodule, c: &Coring) -> Result<(TensorSpace, TensorSpace, Mat, Mat)> {
    if m.side != Side::Right || n.side != Side::Left {
        return Err(Error::Invalid("cotensor needs a right and a left comodule".into()));
    }
    let p = c.p();
    let mn = tensorcalc::chain(&[&m.carrier, &n.carrier])?;
    let mcn = tensorcalc::chain(&[&m.carrier, &c.carrier, &n.carrier])?;
    let f = mn.descend(&mcn.proj().mul(&m.lifted().kron(&Mat::identity(p, n.dim()))))?;
    let g = mn.descend(&mcn.proj().mul(&Mat::identity(p, m.dim()).kron(&n.lifted())))?;
    Ok((mn, mcn, f, g))
}

pub fn cotensor(m: &Comodule, n: &Comodule, c: &Coring) -> Result<Cotensor> {
    let (space, _, f, g) = cotensor_pair(m, n, c)?;
    let incl = f.sub(&g).kernel_mat();
    Ok(Cotensor { space, incl })
}

pub const DEFAULT_BUDGET: u64 = 1 << 20;

/// All unital associative right `A`-module structures on `F_p^d`.
pub fn right_module_structures(a: &Algebra, d: usize, budget: &mut u64) -> Result<Vec<Mat>> {
    let p = a.p;
    let u = a.unit.as_ref().ok_or_else(|| Error::Invalid(format!("{} is not unital", a.name)))?;
    let id = Mat::identity(p, d);
    let ucol = id.kron(&Mat::column_vector(p, u));
    let unit_map = |x: &Mat| x.mul(&ucol).entries().to_vec();
    let Some((part, kernel)) = solve_matrix_system(p, d, d * a.dim, unit_map, id.entries()) else {
        return Ok(Vec::new());
    };
    let mut out = Vec::new();
    let ia = Mat::identity(p, a.dim);
    for_each_point(p, &part, &kernel, budget, |act| {
        if act.mul(&act.kron(&ia)) == act.mul(&id.kron(&a.mult)) {
            out.push(act.clone());
        }
    })?;
    Ok(out)
}

fn for_each_point(p: u32, part: &Mat, kernel: &[Mat], budget: &mut u64, mut f: impl FnMut(&Mat)) -> Result<()> {
    let count = (p as u128).checked_pow(kernel.len() as u32).unwrap_or(u128::MAX);
    if count > *budget as u128 {
        return Err(Error::SearchBudgetExceeded(*budget));
    }
    *budget -= count as u64;
    let field = crate::exactlin::Field::new(p)?;
    for idx in 0..count {
        let coeffs = field.vector(kernel.len(), idx);
        let x = part.add(&combine(p, part.rows(), part.cols(), &coeffs, kernel));
        f(&x);
    }
    Ok(())
}

/// Every right comodule structure on `F_p^d` for `d ≤ max_dim`, sorted by
/// dimension, then module action entries, then coaction entries.
pub fn enumerate_comodules(c: &Coring, max_dim: usize, budget: u64) -> Result<Vec<Comodule>> {
    enumerate_inner(c, max_dim, budget).map_err(|e| match e {
        Error::SearchBudgetExceeded(_) => Error::SearchBudgetExceeded(budget),
        other => other,
    })
}

fn enumerate_inner(c: &Coring, max_dim: usize, budget: u64) -> Result<Vec<Comodule>> {
    let mut remaining = budget;
    let p = c.p();
    let a = c.base.dim;
    let mut out = Vec::new();
    for d in 0..=max_dim {
        let mut level = Vec::new();
        for act in right_module_structures(&c.base, d, &mut remaining)? {
            let carrier = Bimodule::new(&format!("N{d}"), p, d).with_right(&c.base, act.clone());
            let mc = tensorcalc::chain(&[&carrier, &c.carrier])?;
            let t = mc.dim();
            let rmc = mc.right.as_ref().expect("residual right").mat.clone();
            let id = Mat::identity(p, d);
            let ia = Mat::identity(p, a);
            let counit = act.mul(&id.kron(&c.eps)).mul(mc.sec());
            let constraints = |rho: &Mat| {
                let mut v = rho.mul(&act).sub(&rmc.mul(&rho.kron(&ia))).entries().to_vec();
                v.extend_from_slice(counit.mul(rho).entries());
                v
            };
            let mut target = vec![0; t * d * a];
            target.extend_from_slice(id.entries());
            let Some((part, kernel)) = solve_matrix_system(p, t, d, constraints, &target) else {
                continue;
            };
            let mut candidates = Vec::new();
            for_each_point(p, &part, &kernel, &mut remaining, |rho| candidates.push(rho.clone()))?;
            let mcc = tensorcalc::chain(&[&carrier, &c.carrier, &c.carrier])?;
            let ld = c.lift_delta();
            let ic = Mat::identity(p, c.dim());
            for rho in candidates {
                let lifted = mc.sec().mul(&rho);
                let lhs = mcc.proj().mul(&lifted.kron(&ic)).mul(&lifted);
                let rhs = mcc.proj().mul(&id.kron(&ld)).mul(&lifted);
                if lhs == rhs {
                    let n = level.len();
                    level.push(Comodule::right(&format!("N{d}.{n}"), c, carrier.clone(), rho)?);
                }
            }
        }
        level.sort_by_key(|m: &Comodule| m.sort_key());
        for (k, m) in level.iter_mut().enumerate() {
            m.name = format!("N{d}.{k}");
            m.carrier.name = m.name.clone();
        }
        out.extend(level);
    }
    Ok(out)
}

/// Human-readable location of a failing basis column of a map on `dims`.
pub fn describe(at: usize, dims: &[usize]) -> Vec<usize> {
    decode(at, dims)
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn f4() -> Algebra {
        Algebra::from_tensor("F4", 2, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]], Some(vec![1, 0]))
            .unwrap()
    }

    fn sweedler() -> Coring {
        let a = f4();
        let b = Algebra::ground(2);
        Coring::sweedler(&a, &b, &Mat::from_cols(2, 2, &[vec![1, 0]])).unwrap()
    }

    #[test]
    fn trivial_coring_valid() {
        let c = Coring::trivial(&Algebra::ground(2)).unwrap();
        assert!(validate_coring(&c).unwrap().ok());
        assert!(coring_hom_check(&c, &c, &Mat::identity(2, 1)).unwrap().ok());
    }

    #[test]
    fn sweedler_coring_valid() {
        let c = sweedler();
        assert_eq!(c.dim(), 4);
        assert!(validate_coring(&c).unwrap().ok());
        assert!(coring_hom_check(&c, &c, &Mat::identity(2, 4)).unwrap().ok());
    }

    #[test]
    fn matrix_coring_bad_counit() {
        let mut c = Coring::matrix(2, 2).unwrap();
        assert!(validate_coring(&c).unwrap().ok());
        c.eps = Mat::from_rows(2, 4, &[vec![1, 1, 1, 1]]);
        let rep = validate_coring(&c).unwrap();
        assert!(rep.failures.iter().any(|f| f.axiom.contains("counit")));
    }

    #[test]
    fn comodule_examples() {
        let a = Algebra::ground(2);
        let c = Coring::trivial(&a).unwrap();
        let m = regular_comodule(&c, Side::Right).unwrap();
        assert!(validate_comodule(&m, &c).unwrap().ok());
        let zero = Comodule::right("z", &c, Bimodule::regular(&a).without_left(), Mat::zeros(2, 1, 1)).unwrap();
        let rep = validate_comodule(&zero, &c).unwrap();
        assert!(rep.failures.iter().any(|f| f.axiom == "comodule counit"));
        // Σ = A over the Sweedler coring, ρ(a) = 1 ⊗ a
        let s = sweedler();
        let f = f4();
        let sigma = Bimodule::regular(&f).without_left();
        let t = tensorcalc::chain(&[&sigma, &s.carrier]).unwrap();
        // ρ(e_j) = e_0 ⊗ [1 ⊗ e_j] in the ambient Σ ⊗ C, e_0 = 1
        let mut amb = Mat::zeros(2, t.ambient(), 2);
        for j in 0..2 {
            let class = sweedler_space().pure(&[&[1, 0], &crate::algmod::basis_vector(2, j)]);
            for (k, &v) in class.iter().enumerate() {
                amb.set(k, j, v);
            }
        }
        let rho = t.proj().mul(&amb);
        let sig = Comodule::right("Σ", &s, sigma, rho).unwrap();
        assert!(validate_comodule(&sig, &s).unwrap().ok());
    }

    fn sweedler_space() -> TensorSpace {
        let a = f4();
        let b = Algebra::ground(2);
        let ia = Mat::identity(2, 2);
        let incl = Mat::from_cols(2, 2, &[vec![1, 0]]);
        let a_ab = Bimodule::regular(&a).with_right(&b, a.mult.mul(&ia.kron(&incl)));
        let a_ba = Bimodule::regular(&a).with_left(&b, a.mult.mul(&incl.kron(&ia)));
        tensorcalc::chain(&[&a_ab, &a_ba]).unwrap()
    }

    #[test]
    fn cotensor_examples() {
        let c = sweedler();
        let right = regular_comodule(&c, Side::Right).unwrap();
        let left = regular_comodule(&c, Side::Left).unwrap();
        let ct = cotensor(&right, &left, &c).unwrap();
        assert_eq!(ct.dim(), c.dim());
        let a = Algebra::ground(3);
        let t = Coring::trivial(&a).unwrap();
        let ct = cotensor(&regular_comodule(&t, Side::Right).unwrap(), &regular_comodule(&t, Side::Left).unwrap(), &t)
            .unwrap();
        assert_eq!(ct.dim(), 1);
    }

    #[test]
    fn enumeration_trivial() {
        let c = Coring::trivial(&Algebra::ground(2)).unwrap();
        let all = enumerate_comodules(&c, 2, DEFAULT_BUDGET).unwrap();
        assert_eq!(all.iter().map(|m| m.dim()).collect::<Vec<_>>(), vec![0, 1, 2]);
        for m in &all {
            assert!(validate_comodule(m, &c).unwrap().ok());
        }
        assert_eq!(enumerate_comodules(&c, 0, DEFAULT_BUDGET).unwrap().len(), 1);
    }

    #[test]
    fn enumeration_budget() {
        let c = sweedler();
        assert!(matches!(enumerate_comodules(&c, 3, 4), Err(Error::SearchBudgetExceeded(4))));
    }
}
