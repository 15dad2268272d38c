//! Algebras, possibly non-unital rings and bimodules given by structure
//! constants, with validators and firmness certificates.

use crate::exactlin::{Field, Mat, Witness};
use crate::tensorcalc::{self, TensorSpace};
use crate::{Error, Result};
use serde::Serialize;

/// Kronecker product of two vectors (row-major index `i * b.len() + j`).
pub fn vkron(a: &[u32], b: &[u32], p: u32) -> Vec<u32> {
    let mut out = Vec::with_capacity(a.len() * b.len());
    for &x in a {
        for &y in b {
            out.push(x * y % p);
        }
    }
    out
}

pub fn basis_vector(dim: usize, i: usize) -> Vec<u32> {
    let mut v = vec![0; dim];
    v[i] = 1;
    v
}

/// Splits a row-major index over `dims` into its coordinates.
pub fn decode(mut index: usize, dims: &[usize]) -> Vec<usize> {
    let mut out = vec![0; dims.len()];
    for (slot, &d) in out.iter_mut().zip(dims).rev() {
        *slot = index % d;
        index /= d;
    }
    out
}

/// Finite-dimensional associative algebra over `F_p`, unital or not.
///
/// `mult` is `dim x dim^2`; column `i * dim + j` holds `e_i e_j`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Algebra {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    pub mult: Mat,
    pub unit: Option<Vec<u32>>,
}

impl Algebra {
    pub fn new(name: &str, p: u32, dim: usize, mult: Mat, unit: Option<Vec<u32>>) -> Algebra {
        assert_eq!((mult.rows(), mult.cols()), (dim, dim * dim), "mult shape for {name}");
        if let Some(u) = &unit {
            assert_eq!(u.len(), dim, "unit length for {name}");
        }
        Algebra { name: name.to_string(), p, dim, mult, unit }
    }

    /// From `t[i][j][k]` = coefficient of `e_k` in `e_i e_j`.
    pub fn from_tensor(name: &str, p: u32, t: &[Vec<Vec<u32>>], unit: Option<Vec<u32>>) -> Result<Algebra> {
        let dim = t.len();
        let mut mult = Mat::zeros(p, dim, dim * dim);
        for (i, ti) in t.iter().enumerate() {
            if ti.len() != dim {
                return Err(Error::ShapeMismatch(format!("{name}: mult[{i}] has length {}", ti.len())));
            }
            for (j, tij) in ti.iter().enumerate() {
                if tij.len() != dim {
                    return Err(Error::ShapeMismatch(format!("{name}: mult[{i}][{j}] has length {}", tij.len())));
                }
                for (k, &c) in tij.iter().enumerate() {
                    mult.set(k, i * dim + j, c % p);
                }
            }
        }
        if let Some(u) = &unit {
            if u.len() != dim {
                return Err(Error::ShapeMismatch(format!("{name}: unit has length {}", u.len())));
            }
        }
        Ok(Algebra { name: name.to_string(), p, dim, mult, unit: unit.map(|u| u.iter().map(|x| x % p).collect()) })
    }

    pub fn tensor(&self) -> Vec<Vec<Vec<u32>>> {
        (0..self.dim)
            .map(|i| (0..self.dim).map(|j| self.mult.col(i * self.dim + j)).collect())
            .collect()
    }

    /// The ground field `F_p` as a one-dimensional algebra.
    pub fn ground(p: u32) -> Algebra {
        Algebra::new(&format!("F{p}"), p, 1, Mat::identity(p, 1), Some(vec![1]))
    }

    /// Full matrix algebra `M_n(F_p)` on the basis `E_ij`, index `i * n + j`.
    pub fn matrices(p: u32, n: usize) -> Algebra {
        let d = n * n;
        let mut mult = Mat::zeros(p, d, d * d);
        for i in 0..n {
            for j in 0..n {
                for l in 0..n {
                    mult.set(i * n + l, (i * n + j) * d + j * n + l, 1);
                }
            }
        }
        let unit = (0..d).map(|k| u32::from(k / n == k % n)).collect();
        Algebra::new(&format!("M{n}(F{p})"), p, d, mult, Some(unit))
    }

    /// Subalgebra spanned by `basis` (vectors of `self`); `None` if not closed.
    pub fn subalgebra(&self, name: &str, basis: &[Vec<u32>], unit: Option<Vec<u32>>) -> Option<Algebra> {
        let k = basis.len();
        let inc = Mat::from_cols(self.p, self.dim, basis);
        let prods = self.mult.mul(&inc.kron(&inc));
        let coords = inc.solve_many(&prods)?;
        Some(Algebra::new(name, self.p, k, coords, unit))
    }

    pub fn field(&self) -> Field {
        Field::new(self.p).expect("algebra over a prime field")
    }

    pub fn is_unital(&self) -> bool {
        self.unit.is_some()
    }

    pub fn basis(&self, i: usize) -> Vec<u32> {
        basis_vector(self.dim, i)
    }

    pub fn product(&self, x: &[u32], y: &[u32]) -> Vec<u32> {
        self.mult.apply(&vkron(x, y, self.p))
    }

    /// `y ↦ x y`.
    pub fn left_mul(&self, x: &[u32]) -> Mat {
        self.mult.mul(&Mat::column_vector(self.p, x).kron(&Mat::identity(self.p, self.dim)))
    }

    /// `y ↦ y x`.
    pub fn right_mul(&self, x: &[u32]) -> Mat {
        self.mult.mul(&Mat::identity(self.p, self.dim).kron(&Mat::column_vector(self.p, x)))
    }

    /// Structural equality (same field, dimension and products).
    pub fn same_ring(&self, other: &Algebra) -> bool {
        self.p == other.p && self.dim == other.dim && self.mult == other.mult
    }

    /// Canonical basis of `R·R`.
    pub fn product_span(&self) -> Vec<Vec<u32>> {
        self.mult.image_basis()
    }

    pub fn element_count(&self) -> u128 {
        self.field().count(self.dim)
    }

    pub fn element(&self, index: u128) -> Vec<u32> {
        self.field().vector(self.dim, index)
    }
}

/// A ring acting on a module; `mat` is the action on the ambient tensor
/// `R ⊗ M` (left) or `M ⊗ R` (right), row-major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Action {
    pub ring: Algebra,
    pub mat: Mat,
}

/// A vector space with an optional left and an optional right action.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Bimodule {
    pub name: String,
    pub p: u32,
    pub dim: usize,
    pub left: Option<Action>,
    pub right: Option<Action>,
}

impl Bimodule {
    pub fn new(name: &str, p: u32, dim: usize) -> Bimodule {
        Bimodule { name: name.to_string(), p, dim, left: None, right: None }
    }

    pub fn with_left(mut self, ring: &Algebra, mat: Mat) -> Bimodule {
        assert_eq!((mat.rows(), mat.cols()), (self.dim, ring.dim * self.dim), "left action shape on {}", self.name);
        self.left = Some(Action { ring: ring.clone(), mat });
        self
    }

    pub fn with_right(mut self, ring: &Algebra, mat: Mat) -> Bimodule {
        assert_eq!((mat.rows(), mat.cols()), (self.dim, self.dim * ring.dim), "right action shape on {}", self.name);
        self.right = Some(Action { ring: ring.clone(), mat });
        self
    }

    pub fn without_left(mut self) -> Bimodule {
        self.left = None;
        self
    }

    pub fn without_right(mut self) -> Bimodule {
        self.right = None;
        self
    }

    pub fn renamed(mut self, name: &str) -> Bimodule {
        self.name = name.to_string();
        self
    }

    /// `R` as an `(R, R)`-bimodule by multiplication.
    pub fn regular(r: &Algebra) -> Bimodule {
        Bimodule::new(&r.name, r.p, r.dim).with_left(r, r.mult.clone()).with_right(r, r.mult.clone())
    }

    /// From `t[i][j][k]` = coefficient of `m_k` in `r_i · m_j`.
    pub fn left_from_tensor(p: u32, ring: &Algebra, dim: usize, t: &[Vec<Vec<u32>>]) -> Result<Mat> {
        action_from_tensor(p, ring.dim, dim, t, true)
    }

    /// From `t[i][j][k]` = coefficient of `m_k` in `m_i · r_j`.
    pub fn right_from_tensor(p: u32, ring: &Algebra, dim: usize, t: &[Vec<Vec<u32>>]) -> Result<Mat> {
        action_from_tensor(p, ring.dim, dim, t, false)
    }

    pub fn left_ring(&self) -> Option<&Algebra> {
        self.left.as_ref().map(|a| &a.ring)
    }

    pub fn right_ring(&self) -> Option<&Algebra> {
        self.right.as_ref().map(|a| &a.ring)
    }

    /// `m ↦ r m`.
    pub fn left_op(&self, r: &[u32]) -> Mat {
        let a = self.left.as_ref().expect("left action");
        a.mat.mul(&Mat::column_vector(self.p, r).kron(&Mat::identity(self.p, self.dim)))
    }

    /// `m ↦ m r`.
    pub fn right_op(&self, r: &[u32]) -> Mat {
        let a = self.right.as_ref().expect("right action");
        a.mat.mul(&Mat::identity(self.p, self.dim).kron(&Mat::column_vector(self.p, r)))
    }
}

fn action_from_tensor(p: u32, rdim: usize, dim: usize, t: &[Vec<Vec<u32>>], left: bool) -> Result<Mat> {
    let (outer, inner) = if left { (rdim, dim) } else { (dim, rdim) };
    if t.len() != outer || t.iter().any(|ti| ti.len() != inner || ti.iter().any(|v| v.len() != dim)) {
        return Err(Error::ShapeMismatch(format!("action tensor must be {outer}x{inner}x{dim}")));
    }
    let mut m = Mat::zeros(p, dim, rdim * dim);
    for (i, ti) in t.iter().enumerate() {
        for (j, tij) in ti.iter().enumerate() {
            for (k, &c) in tij.iter().enumerate() {
                m.set(k, i * inner + j, c % p);
            }
        }
    }
    Ok(m)
}

/// `t[i][j][k]` from an action matrix; inverse of the `*_from_tensor` helpers.
pub fn action_tensor(mat: &Mat, outer: usize, inner: usize) -> Vec<Vec<Vec<u32>>> {
    (0..outer).map(|i| (0..inner).map(|j| mat.col(i * inner + j)).collect()).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Failure {
    pub axiom: String,
    /// Basis indices where the axiom fails.
    pub at: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Default, Serialize)]
pub struct ValidationReport {
    pub failures: Vec<Failure>,
}

impl ValidationReport {
    pub fn ok(&self) -> bool {
        self.failures.is_empty()
    }

    pub fn push(&mut self, axiom: &str, at: Vec<usize>) {
        self.failures.push(Failure { axiom: axiom.to_string(), at });
    }

    /// Records every column where `lhs` and `rhs` differ.
    pub fn compare(&mut self, axiom: &str, lhs: &Mat, rhs: &Mat, dims: &[usize]) {
        assert_eq!((lhs.rows(), lhs.cols()), (rhs.rows(), rhs.cols()), "{axiom}: shapes");
        for j in 0..lhs.cols() {
            if (0..lhs.rows()).any(|i| lhs.get(i, j) != rhs.get(i, j)) {
                self.push(axiom, decode(j, dims));
            }
        }
    }

    pub fn merge(&mut self, other: ValidationReport) {
        self.failures.extend(other.failures);
    }

    pub fn first(&self) -> Option<&Failure> {
        self.failures.first()
    }

    pub fn summary(&self) -> String {
        match self.failures.first() {
            None => "valid".to_string(),
            Some(f) => format!("{} failure(s); first: {} at {:?}", self.failures.len(), f.axiom, f.at),
        }
    }
}

pub fn validate_algebra(a: &Algebra) -> Result<ValidationReport> {
    let n = a.dim;
    if a.mult.rows() != n || a.mult.cols() != n * n {
        return Err(Error::ShapeMismatch(format!("{}: mult is {}x{}", a.name, a.mult.rows(), a.mult.cols())));
    }
    let id = Mat::identity(a.p, n);
    let mut rep = ValidationReport::default();
    let lhs = a.mult.mul(&a.mult.kron(&id));
    let rhs = a.mult.mul(&id.kron(&a.mult));
    rep.compare("associativity", &lhs, &rhs, &[n, n, n]);
    if let Some(u) = &a.unit {
        if u.len() != n {
            return Err(Error::ShapeMismatch(format!("{}: unit length {}", a.name, u.len())));
        }
        let uc = Mat::column_vector(a.p, u);
        let left = a.mult.mul(&uc.kron(&id));
        let right = a.mult.mul(&id.kron(&uc));
        for i in 0..n {
            if left.col(i) != id.col(i) || right.col(i) != id.col(i) {
                rep.push("UnitAxiomFailed", vec![i]);
            }
        }
    }
    Ok(rep)
}

pub fn validate_bimodule(m: &Bimodule) -> Result<ValidationReport> {
    let n = m.dim;
    let id = Mat::identity(m.p, n);
    let mut rep = ValidationReport::default();
    if let Some(l) = &m.left {
        let r = &l.ring;
        if l.mat.rows() != n || l.mat.cols() != r.dim * n {
            return Err(Error::ShapeMismatch(format!("{}: left action shape", m.name)));
        }
        let ir = Mat::identity(m.p, r.dim);
        let lhs = l.mat.mul(&ir.kron(&l.mat));
        let rhs = l.mat.mul(&r.mult.kron(&id));
        rep.compare("left associativity", &lhs, &rhs, &[r.dim, r.dim, n]);
        if let Some(u) = &r.unit {
            let act = l.mat.mul(&Mat::column_vector(m.p, u).kron(&id));
            for i in 0..n {
                if act.col(i) != id.col(i) {
                    rep.push("left unit", vec![i]);
                }
            }
        }
    }
    if let Some(ra) = &m.right {
        let r = &ra.ring;
        if ra.mat.rows() != n || ra.mat.cols() != n * r.dim {
            return Err(Error::ShapeMismatch(format!("{}: right action shape", m.name)));
        }
        let ir = Mat::identity(m.p, r.dim);
        let lhs = ra.mat.mul(&ra.mat.kron(&ir));
        let rhs = ra.mat.mul(&id.kron(&r.mult));
        rep.compare("right associativity", &lhs, &rhs, &[n, r.dim, r.dim]);
        if let Some(u) = &r.unit {
            let act = ra.mat.mul(&id.kron(&Mat::column_vector(m.p, u)));
            for i in 0..n {
                if act.col(i) != id.col(i) {
                    rep.push("right unit", vec![i]);
                }
            }
        }
    }
    if let (Some(l), Some(ra)) = (&m.left, &m.right) {
        let (dl, dr) = (l.ring.dim, ra.ring.dim);
        let lhs = l.mat.mul(&Mat::identity(m.p, dl).kron(&ra.mat));
        let rhs = ra.mat.mul(&l.mat.kron(&Mat::identity(m.p, dr)));
        rep.compare("commuting", &lhs, &rhs, &[dl, n, dr]);
    }
    Ok(rep)
}

/// Certificate that a module is firm: `varpi` and its inverse `d`.
#[derive(Debug, Clone)]
pub struct FirmStructure {
    pub space: TensorSpace,
    pub varpi: Mat,
    pub d: Mat,
}

impl FirmStructure {
    pub fn verify(&self) -> bool {
        self.varpi.mul(&self.d).is_identity() && self.d.mul(&self.varpi).is_identity()
    }
}

fn certify(name: &str, space: TensorSpace, varpi: Mat) -> Result<FirmStructure> {
    match varpi.invert() {
        Ok(d) => Ok(FirmStructure { space, varpi, d }),
        Err(crate::LinError::NotInvertible(witness)) => Err(Error::NotFirm { module: name.to_string(), witness }),
        Err(e) => Err(e.into()),
    }
}

/// Firmness of `M` as a right module over its right ring: `M ⊗_R R → M`.
pub fn firmness_right(m: &Bimodule) -> Result<FirmStructure> {
    let ra = m.right.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", m.name)))?;
    let rr = Bimodule::regular(&ra.ring);
    let space = tensorcalc::balanced_tensor(m, &ra.ring, &rr)?;
    let varpi = space.descend(&ra.mat)?;
    certify(&m.name, space, varpi)
}

/// Firmness of `M` as a left module over its left ring: `R ⊗_R M → M`.
pub fn firmness_left(m: &Bimodule) -> Result<FirmStructure> {
    let la = m.left.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", m.name)))?;
    let rr = Bimodule::regular(&la.ring);
    let space = tensorcalc::balanced_tensor(&rr, &la.ring, m)?;
    let varpi = space.descend(&la.mat)?;
    certify(&m.name, space, varpi)
}

/// Firmness of a ring over itself.
pub fn firmness(r: &Algebra) -> Result<FirmStructure> {
    firmness_right(&Bimodule::regular(r))
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LocalUnit {
    pub element: Vec<u32>,
    /// Some `u` with `u e = e`.
    pub left: Option<Vec<u32>>,
    /// Some `u` with `e u = e`.
    pub right: Option<Vec<u32>>,
}

pub const ELEMENT_SEARCH_LIMIT: u128 = 1 << 16;

/// Local units for one element, found by solving `u e = e` and `e u = e`.
pub fn local_units_of(r: &Algebra, e: &[u32]) -> LocalUnit {
    if let Some(u) = &r.unit {
        return LocalUnit { element: e.to_vec(), left: Some(u.clone()), right: Some(u.clone()) };
    }
    let left = r.right_mul(e).solve(e).ok().map(|s| s.particular);
    let right = r.left_mul(e).solve(e).ok().map(|s| s.particular);
    LocalUnit { element: e.to_vec(), left, right }
}

/// Local units of every element, in lexicographic order of elements.
pub fn find_local_units(r: &Algebra) -> Result<Vec<LocalUnit>> {
    let count = r.element_count();
    if count > ELEMENT_SEARCH_LIMIT {
        return Err(Error::SearchSpaceTooLarge(count));
    }
    Ok((0..count).map(|i| local_units_of(r, &r.element(i))).collect())
}

/// Whether every element has a left local unit.
pub fn has_left_local_units(r: &Algebra) -> Result<bool> {
    Ok(find_local_units(r)?.iter().all(|u| u.left.is_some()))
}

pub fn witness_vector(w: &Witness) -> &[u32] {
    match w {
        Witness::Kernel(v) | Witness::Cokernel(v) => v,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4() -> Algebra {
        // basis {1, x}, x^2 = x + 1
        Algebra::from_tensor("F4", 2, &[vec![vec![1, 0], vec![0, 1]], vec![vec![0, 1], vec![1, 1]]], Some(vec![1, 0]))
            .unwrap()
    }

    /// span{E11, E12} inside M2(F2), basis order (E11, E12).
    fn corner() -> Algebra {
        let m2 = Algebra::matrices(2, 2);
        m2.subalgebra("E1*", &[vec![1, 0, 0, 0], vec![0, 1, 0, 0]], None).unwrap()
    }

    #[test]
    fn validate_algebra_examples() {
        assert!(validate_algebra(&Algebra::ground(2)).unwrap().ok());
        assert!(validate_algebra(&f4()).unwrap().ok());
        let e = Algebra::new("e", 2, 1, Mat::identity(2, 1), Some(vec![0]));
        let rep = validate_algebra(&e).unwrap();
        assert_eq!(rep.failures, vec![Failure { axiom: "UnitAxiomFailed".into(), at: vec![0] }]);
    }

    #[test]
    fn corner_ring_structure() {
        let r = corner();
        assert!(validate_algebra(&r).unwrap().ok());
        // E11 E12 = E12, E12 E11 = 0
        assert_eq!(r.product(&[1, 0], &[0, 1]), vec![0, 1]);
        assert_eq!(r.product(&[0, 1], &[1, 0]), vec![0, 0]);
    }

    #[test]
    fn firmness_examples() {
        let f2 = Algebra::ground(2);
        let fs = firmness(&f2).unwrap();
        assert!(fs.verify() && fs.d.is_identity());
        let zero = Algebra::new("z", 2, 1, Mat::zeros(2, 1, 1), None);
        match firmness(&zero) {
            Err(Error::NotFirm { .. }) => {}
            other => panic!("{other:?}"),
        }
        assert!(tensorcalc::multiplication_map(&Bimodule::regular(&zero)).unwrap().is_zero());
        let fs = firmness(&corner()).unwrap();
        assert!(fs.verify());
        assert_eq!(fs.space.dim(), 2);
    }

    #[test]
    fn local_unit_examples() {
        let units = find_local_units(&f4()).unwrap();
        assert!(units.iter().all(|u| u.left == Some(vec![1, 0]) && u.right == Some(vec![1, 0])));
        let zero = Algebra::new("z", 3, 1, Mat::zeros(3, 1, 1), None);
        let units = find_local_units(&zero).unwrap();
        assert!(units.iter().filter(|u| u.element != vec![0]).all(|u| u.left.is_none() && u.right.is_none()));
        let units = find_local_units(&corner()).unwrap();
        for u in &units {
            if u.element != vec![0, 0] {
                assert_eq!(u.left, Some(vec![1, 0]));
            }
        }
        let e12 = units.iter().find(|u| u.element == vec![0, 1]).unwrap();
        assert_eq!(e12.right, None);
        let big = Algebra::new("big", 97, 3, Mat::zeros(97, 3, 9), None);
        assert_eq!(find_local_units(&big), Err(Error::SearchSpaceTooLarge(97u128.pow(3))));
    }

    #[test]
    fn bimodule_examples() {
        let a = f4();
        assert!(validate_bimodule(&Bimodule::regular(&a)).unwrap().ok());
        let m2 = Algebra::matrices(2, 2);
        // column space: E_ij e_l = delta_jl e_i
        let mut l = Mat::zeros(2, 2, 8);
        for i in 0..2 {
            for j in 0..2 {
                l.set(i, (i * 2 + j) * 2 + j, 1);
            }
        }
        let f2 = Algebra::ground(2);
        let col = Bimodule::new("col", 2, 2).with_left(&m2, l).with_right(&f2, Mat::identity(2, 2));
        assert!(validate_bimodule(&col).unwrap().ok());
        // break commutation: right action by the swap
        let mut bad = Bimodule::regular(&a);
        let mut rm = bad.right.as_ref().unwrap().mat.clone();
        rm.set(0, 1, 1);
        rm.set(1, 1, 0);
        bad.right.as_mut().unwrap().mat = rm;
        let rep = validate_bimodule(&bad).unwrap();
        assert!(!rep.ok());
        assert!(rep.failures.iter().any(|f| f.axiom == "commuting"));
    }

    #[test]
    fn decode_row_major() {
        assert_eq!(decode(5, &[2, 3]), vec![1, 2]);
        assert_eq!(decode(7, &[2, 2, 2]), vec![1, 1, 1]);
    }
}
