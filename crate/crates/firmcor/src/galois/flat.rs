//! Flatness and faithful flatness of a left `R`-module, tested against
//! right ideals of `R`.

use crate::algmod::{Algebra, Bimodule};
use crate::exactlin::{self, span_basis, Mat};
use crate::tensorcalc;
use crate::{Error, Result};
use rand::Rng;
use serde::Serialize;
use std::collections::{BTreeSet, VecDeque};

/// Largest `|R|` for which every principal right ideal is generated.
pub const DEFAULT_IDEAL_BUDGET: u64 = 4096;

/// Right ideals as echelon row bases, sorted by dimension then rows.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IdealFamily {
    pub ideals: Vec<Vec<Vec<u32>>>,
    /// Only ideals generated by at most two basis elements were formed.
    pub approximate: bool,
    /// The search stopped at the budget.
    pub exhausted: bool,
}

/// Smallest right ideal containing `gens`.
fn ideal_closure(r: &Algebra, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = r.p;
    let mut basis = span_basis(p, r.dim, gens);
    loop {
        let mut all = basis.clone();
        for x in &basis {
            for j in 0..r.dim {
                all.push(r.product(x, &r.basis(j)));
            }
        }
        let next = span_basis(p, r.dim, &all);
        if next.len() == basis.len() {
            return basis;
        }
        basis = next;
    }
}

pub fn right_ideals(r: &Algebra, budget: u64) -> IdealFamily {
    let mut found: BTreeSet<(usize, Vec<Vec<u32>>)> = BTreeSet::new();
    let mut insert = |i: Vec<Vec<u32>>| found.insert((i.len(), i));
    insert(Vec::new());
    insert(ideal_closure(r, &(0..r.dim).map(|j| r.basis(j)).collect::<Vec<_>>()));
    let count = r.element_count();
    let mut exhausted = false;
    let approximate = count > budget as u128;
    let principal: Vec<Vec<Vec<u32>>> = if approximate {
        let mut v: Vec<_> = (0..r.dim).map(|j| ideal_closure(r, &[r.basis(j)])).collect();
        for i in 0..r.dim {
            for j in i + 1..r.dim {
                v.push(ideal_closure(r, &[r.basis(i), r.basis(j)]));
            }
        }
        v
    } else {
        (1..count).map(|k| ideal_closure(r, &[r.element(k)])).collect()
    };
    let principal: Vec<_> = principal.into_iter().collect::<BTreeSet<_>>().into_iter().collect();
    // close under sums
    let mut queue: VecDeque<Vec<Vec<u32>>> = VecDeque::new();
    for i in &principal {
        if insert(i.clone()) {
            queue.push_back(i.clone());
        }
    }
    let mut steps = 0u64;
    while let Some(i) = queue.pop_front() {
        for j in &principal {
            steps += 1;
            if steps > budget.saturating_mul(16) {
                exhausted = true;
                queue.clear();
                break;
            }
            let mut gens = i.clone();
            gens.extend(j.iter().cloned());
            let sum = span_basis(r.p, r.dim, &gens);
            if insert(sum.clone()) {
                queue.push_back(sum);
            }
        }
    }
    IdealFamily { ideals: found.into_iter().map(|(_, i)| i).collect(), approximate, exhausted }
}

/// The right submodule of `m` spanned by the columns of `basis`.
pub fn submodule(m: &Bimodule, basis: &Mat, name: &str) -> Result<Bimodule> {
    let p = m.p;
    let ra = m.right.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", m.name)))?;
    let img = ra.mat.mul(&basis.kron(&Mat::identity(p, ra.ring.dim)));
    let act = if basis.cols() == 0 {
        img.is_zero().then(|| Mat::zeros(p, 0, 0))
    } else {
        basis.solve_many(&img)
    };
    let act = act.ok_or_else(|| Error::Invalid(format!("subspace of {} is not a right submodule", m.name)))?;
    Ok(Bimodule::new(name, p, basis.cols()).with_right(&ra.ring, act))
}

/// `m / span(basis)` as a right module with its projection.
pub fn quotient_module(m: &Bimodule, basis: &Mat, name: &str) -> Result<(Bimodule, Mat)> {
    let p = m.p;
    let ra = m.right.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", m.name)))?;
    let q = exactlin::quotient(p, m.dim, basis);
    let rd = ra.ring.dim;
    let act = q.proj.mul(&ra.mat).mul(&q.sec.kron(&Mat::identity(p, rd)));
    if !q.proj.mul(&ra.mat).mul(&basis.kron(&Mat::identity(p, rd))).is_zero() {
        return Err(Error::Invalid(format!("subspace of {} is not a right submodule", m.name)));
    }
    Ok((Bimodule::new(name, p, q.dim()).with_right(&ra.ring, act), q.proj))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", rename_all = "snake_case")]
pub enum FaithfulFlatness {
    Certified,
    /// The ideal breaks flatness, or `(R/I) ⊗_R R ≠ 0` while `(R/I) ⊗_R F = 0`.
    Refuted { ideal: Vec<Vec<u32>>, reason: String },
    Inconclusive { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct FlatReport {
    pub flat: bool,
    pub faithfully_flat: FaithfulFlatness,
    pub checked_ideals: usize,
    pub approximate: bool,
    /// First ideal with `I ⊗_R F → F` not injective.
    pub non_flat_ideal: Option<Vec<Vec<u32>>>,
}

fn ideal_mat(p: u32, dim: usize, ideal: &[Vec<u32>]) -> Mat {
    Mat::from_cols(p, dim, ideal)
}

/// Flatness and faithful flatness of the left `R`-module `f`.
pub fn flat_report(f: &Bimodule, r: &Algebra, budget: u64) -> Result<FlatReport> {
    let p = r.p;
    let la = f.left.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", f.name)))?;
    let r_right = Bimodule::regular(r).without_left();
    let family = right_ideals(r, budget);
    let mut non_flat_ideal = None;
    let mut refuted = None;
    for ideal in &family.ideals {
        let b = ideal_mat(p, r.dim, ideal);
        let i_mod = submodule(&r_right, &b, "I")?;
        let ifs = tensorcalc::chain(&[&i_mod, f])?;
        let mu = ifs.descend(&la.mat.mul(&b.kron(&Mat::identity(p, f.dim))))?;
        if !mu.is_injective() && non_flat_ideal.is_none() {
            non_flat_ideal = Some(ideal.clone());
            refuted.get_or_insert((ideal.clone(), "I ⊗_R F → F is not injective".to_string()));
        }
        let (q, _) = quotient_module(&r_right, &b, "R/I")?;
        let qr = tensorcalc::chain(&[&q, &Bimodule::regular(r)])?.dim();
        let qf = tensorcalc::chain(&[&q, f])?.dim();
        if qr != 0 && qf == 0 {
            refuted.get_or_insert((ideal.clone(), "(R/I) ⊗_R R ≠ 0 but (R/I) ⊗_R F = 0".to_string()));
        }
    }
    let flat = non_flat_ideal.is_none();
    let faithfully_flat = match refuted {
        Some((ideal, reason)) => FaithfulFlatness::Refuted { ideal, reason },
        None if family.approximate || family.exhausted => FaithfulFlatness::Inconclusive {
            reason: format!("only {} right ideals were generated", family.ideals.len()),
        },
        None => FaithfulFlatness::Certified,
    };
    Ok(FlatReport {
        flat,
        faithfully_flat,
        checked_ideals: family.ideals.len(),
        approximate: family.approximate || family.exhausted,
        non_flat_ideal,
    })
}

/// An injective map of right `R`-modules.
#[derive(Debug, Clone)]
pub struct Injection {
    pub name: String,
    pub sub: Bimodule,
    pub ambient: Bimodule,
    pub incl: Mat,
}

fn direct_sum(m: &Bimodule, n: &Bimodule) -> Bimodule {
    let p = m.p;
    let ra = m.right.as_ref().expect("right module");
    let rb = n.right.as_ref().expect("right module");
    let rd = ra.ring.dim;
    let (dm, dn) = (m.dim, n.dim);
    let mut act = Mat::zeros(p, dm + dn, (dm + dn) * rd);
    for x in 0..dm + dn {
        for r in 0..rd {
            for y in 0..dm + dn {
                let v = match (x < dm, y < dm) {
                    (true, true) => ra.mat.get(y, x * rd + r),
                    (false, false) => rb.mat.get(y - dm, (x - dm) * rd + r),
                    _ => 0,
                };
                act.set(y, x * rd + r, v);
            }
        }
    }
    Bimodule::new(&format!("{}⊕{}", m.name, n.name), p, dm + dn).with_right(&ra.ring, act)
}

/// Submodule closure of `gens` inside a right module.
fn submodule_closure(m: &Bimodule, gens: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = m.p;
    let ra = m.right.as_ref().expect("right module");
    let rd = ra.ring.dim;
    let mut basis = span_basis(p, m.dim, gens);
    loop {
        let mut all = basis.clone();
        for x in &basis {
            for j in 0..rd {
                all.push(m.right_op(&crate::algmod::basis_vector(rd, j)).apply(x));
            }
        }
        let next = span_basis(p, m.dim, &all);
        if next.len() == basis.len() {
            return basis;
        }
        basis = next;
    }
}

/// Ideal inclusions `I → R` and random submodule inclusions into `R`,
/// `R ⊕ R` and quotients of `R`.
pub fn test_injections(r: &Algebra, budget: u64, random: usize, rng: &mut impl Rng) -> Result<Vec<Injection>> {
    let p = r.p;
    let r_right = Bimodule::regular(r).without_left().renamed("R");
    let mut out = Vec::new();
    for (k, ideal) in right_ideals(r, budget).ideals.iter().enumerate() {
        let b = ideal_mat(p, r.dim, ideal);
        out.push(Injection { name: format!("I{k} → R"), sub: submodule(&r_right, &b, "I")?, ambient: r_right.clone(), incl: b });
    }
    let rr = direct_sum(&r_right, &r_right);
    for k in 0..random {
        let ambient = match k % 3 {
            0 => r_right.clone(),
            1 => rr.clone(),
            _ => {
                let v: Vec<u32> = (0..r.dim).map(|_| rng.gen_range(0..p)).collect();
                let j = submodule_closure(&r_right, &[v]);
                quotient_module(&r_right, &Mat::from_cols(p, r.dim, &j), "R/J")?.0
            }
        };
        let ngens = rng.gen_range(1..=2);
        let gens: Vec<Vec<u32>> =
            (0..ngens).map(|_| (0..ambient.dim).map(|_| rng.gen_range(0..p)).collect()).collect();
        let b = Mat::from_cols(p, ambient.dim, &submodule_closure(&ambient, &gens));
        let sub = submodule(&ambient, &b, "N'")?;
        out.push(Injection { name: format!("random {k} into {}", ambient.name), sub, ambient, incl: b });
    }
    Ok(out)
}

/// Whether `f' ⊗_R F` stays injective for each injection `f'`.
pub fn direct_flatness(f: &Bimodule, injections: &[Injection]) -> Result<Vec<bool>> {
    let p = f.p;
    injections
        .iter()
        .map(|inj| {
            let sf = tensorcalc::chain(&[&inj.sub, f])?;
            let af = tensorcalc::chain(&[&inj.ambient, f])?;
            Ok(tensorcalc::tensor_map(&sf, &af, &[&inj.incl, &Mat::identity(p, f.dim)])?.is_injective())
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn ideals_of_f2xf2() {
        let mut mult = Mat::zeros(2, 2, 4);
        mult.set(0, 0, 1);
        mult.set(1, 3, 1);
        let r = Algebra::new("F2xF2", 2, 2, mult, Some(vec![1, 1]));
        let fam = right_ideals(&r, DEFAULT_IDEAL_BUDGET);
        assert_eq!(fam.ideals.len(), 4);
        assert!(!fam.approximate);
    }

    #[test]
    fn regular_module_is_faithfully_flat() {
        let r = Algebra::matrices(2, 2);
        let rep = flat_report(&Bimodule::regular(&r), &r, DEFAULT_IDEAL_BUDGET).unwrap();
        assert!(rep.flat);
        assert_eq!(rep.faithfully_flat, FaithfulFlatness::Certified);
    }

    #[test]
    fn zero_module_is_flat_not_faithful() {
        let r = Algebra::ground(3);
        let zero = Bimodule::new("0", 3, 0).with_left(&r, Mat::zeros(3, 0, 0));
        let rep = flat_report(&zero, &r, DEFAULT_IDEAL_BUDGET).unwrap();
        assert!(rep.flat);
        match rep.faithfully_flat {
            FaithfulFlatness::Refuted { ideal, .. } => assert!(ideal.is_empty()),
            other => panic!("{other:?}"),
        }
    }
}
