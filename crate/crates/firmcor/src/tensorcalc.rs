//! Balanced tensor products as quotient spaces.
//!
//! A chain `M_1 ⊗_{R_1} M_2 ⊗ ... ⊗_{R_{k-1}} M_k` is the quotient of the
//! ambient `M_1 ⊗ ... ⊗ M_k` (row-major index) by the span of
//! `... ⊗ m r ⊗ n ⊗ ... − ... ⊗ m ⊗ r n ⊗ ...` over all adjacent pairs.
//! The outer actions of `M_1` and `M_k` descend to the quotient.

use crate::algmod::{vkron, Action, Algebra, Bimodule};
use crate::exactlin::{quotient, Mat, Quotient};
use crate::{Error, Result};

#[derive(Debug, Clone)]
pub struct TensorSpace {
    pub name: String,
    pub factors: Vec<Bimodule>,
    pub rings: Vec<Algebra>,
    pub q: Quotient,
    /// Residual left action of the first factor's left ring.
    pub left: Option<Action>,
    /// Residual right action of the last factor's right ring.
    pub right: Option<Action>,
}

impl TensorSpace {
    pub fn dim(&self) -> usize {
        self.q.dim()
    }

    pub fn ambient(&self) -> usize {
        self.q.ambient
    }

    pub fn dims(&self) -> Vec<usize> {
        self.factors.iter().map(|f| f.dim).collect()
    }

    pub fn p(&self) -> u32 {
        self.q.p()
    }

    pub fn proj(&self) -> &Mat {
        &self.q.proj
    }

    pub fn sec(&self) -> &Mat {
        &self.q.sec
    }

    /// Class of `v_1 ⊗ ... ⊗ v_k`.
    pub fn pure(&self, vs: &[&[u32]]) -> Vec<u32> {
        let p = self.p();
        let amb = vs.iter().fold(vec![1u32], |acc, v| vkron(&acc, v, p));
        self.q.proj.apply(&amb)
    }

    /// The quotient as a bimodule with the residual actions.
    pub fn as_bimodule(&self) -> Bimodule {
        Bimodule { name: self.name.clone(), p: self.p(), dim: self.dim(), left: self.left.clone(), right: self.right.clone() }
    }

    /// The map on the quotient induced by `amb` (given on the ambient).
    pub fn descend(&self, amb: &Mat) -> Result<Mat> {
        descend(&self.q, amb, &self.name)
    }
}

/// Factors `amb = result ∘ projection`, or reports a relation not killed.
pub fn descend(q: &Quotient, amb: &Mat, space: &str) -> Result<Mat> {
    if amb.cols() != q.ambient {
        return Err(Error::ShapeMismatch(format!("map on {space} has {} columns, ambient is {}", amb.cols(), q.ambient)));
    }
    if let Some(relation) = q.first_unkilled(amb) {
        return Err(Error::NotBalanced { space: space.to_string(), relation });
    }
    Ok(amb.mul(&q.sec))
}

pub fn balanced_tensor(m: &Bimodule, ring: &Algebra, n: &Bimodule) -> Result<TensorSpace> {
    let mr = m.right_ring().ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", m.name)))?;
    let nl = n.left_ring().ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", n.name)))?;
    if !mr.same_ring(ring) || !nl.same_ring(ring) {
        return Err(Error::ActionMismatch(format!("{} ⊗ {}: actions are not over {}", m.name, n.name, ring.name)));
    }
    chain(&[m, n])
}

/// Tensor product of a chain of bimodules over the rings between them.
pub fn chain(factors: &[&Bimodule]) -> Result<TensorSpace> {
    assert!(!factors.is_empty(), "empty tensor chain");
    let p = factors[0].p;
    let dims: Vec<usize> = factors.iter().map(|f| f.dim).collect();
    let ambient: usize = dims.iter().product();
    let mut rings = Vec::new();
    let mut blocks = Vec::new();
    for k in 0..factors.len() - 1 {
        let (m, n) = (factors[k], factors[k + 1]);
        let (Some(ra), Some(la)) = (&m.right, &n.left) else {
            return Err(Error::ActionMismatch(format!("{} ⊗ {}: missing action", m.name, n.name)));
        };
        if !ra.ring.same_ring(&la.ring) {
            return Err(Error::ActionMismatch(format!(
                "{} ⊗ {}: right ring {} differs from left ring {}",
                m.name, n.name, ra.ring.name, la.ring.name
            )));
        }
        rings.push(ra.ring.clone());
        let before: usize = dims[..k].iter().product();
        let after: usize = dims[k + 2..].iter().product();
        let local = ra.mat.kron(&Mat::identity(p, n.dim)).sub(&Mat::identity(p, m.dim).kron(&la.mat));
        if local.is_zero() {
            continue;
        }
        let block = Mat::identity(p, before).kron(&local).kron(&Mat::identity(p, after));
        blocks.push(block);
    }
    let rel = if blocks.is_empty() {
        Mat::zeros(p, ambient, 0)
    } else {
        let refs: Vec<&Mat> = blocks.iter().collect();
        Mat::hstack(p, ambient, &refs)
    };
    let q = quotient(p, ambient, &rel);
    let name = factors.iter().map(|f| f.name.as_str()).collect::<Vec<_>>().join("⊗");
    let rest_first: usize = dims[1..].iter().product();
    let left = factors[0].left.as_ref().map(|la| {
        let amb = la.mat.kron(&Mat::identity(p, rest_first));
        let mat = q.proj.mul(&amb).mul(&Mat::identity(p, la.ring.dim).kron(&q.sec));
        Action { ring: la.ring.clone(), mat }
    });
    let last = factors.len() - 1;
    let front: usize = dims[..last].iter().product();
    let right = factors[last].right.as_ref().map(|ra| {
        let amb = Mat::identity(p, front).kron(&ra.mat);
        let mat = q.proj.mul(&amb).mul(&q.sec.kron(&Mat::identity(p, ra.ring.dim)));
        Action { ring: ra.ring.clone(), mat }
    });
    Ok(TensorSpace { name, factors: factors.iter().map(|f| (*f).clone()).collect(), rings, q, left, right })
}

/// `f_1 ⊗ ... ⊗ f_k` from `src` to `dst`, each `f_i` given on factors.
pub fn tensor_map(src: &TensorSpace, dst: &TensorSpace, maps: &[&Mat]) -> Result<Mat> {
    let amb = Mat::kron_all(src.p(), maps);
    if amb.rows() != dst.ambient() {
        return Err(Error::ShapeMismatch(format!("{} → {}: factor maps have wrong codomain", src.name, dst.name)));
    }
    src.descend(&dst.q.proj.mul(&amb))
}

/// Multiplication map `M ⊗_R R → M` for the right action of `m`.
pub fn multiplication_map(m: &Bimodule) -> Result<Mat> {
    let ra = m.right.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no right action", m.name)))?;
    let t = balanced_tensor(m, &ra.ring, &Bimodule::regular(&ra.ring))?;
    t.descend(&ra.mat)
}

/// Multiplication map `R ⊗_R M → M` for the left action of `m`.
pub fn left_multiplication_map(m: &Bimodule) -> Result<Mat> {
    let la = m.left.as_ref().ok_or_else(|| Error::ActionMismatch(format!("{} has no left action", m.name)))?;
    let t = balanced_tensor(&Bimodule::regular(&la.ring), &la.ring, m)?;
    t.descend(&la.mat)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn column_space() -> (Algebra, Bimodule, Bimodule) {
        let m2 = Algebra::matrices(2, 2);
        let f2 = Algebra::ground(2);
        let mut l = Mat::zeros(2, 2, 8);
        let mut r = Mat::zeros(2, 2, 8);
        for i in 0..2 {
            for j in 0..2 {
                // E_ij e_j = e_i ; e_i^T E_ij = e_j^T
                l.set(i, (i * 2 + j) * 2 + j, 1);
                r.set(j, i * 4 + (i * 2 + j), 1);
            }
        }
        let col = Bimodule::new("col", 2, 2).with_left(&m2, l).with_right(&f2, Mat::identity(2, 2));
        let row = Bimodule::new("row", 2, 2).with_left(&f2, Mat::identity(2, 2)).with_right(&m2, r);
        (m2, col, row)
    }

    #[test]
    fn unital_absorption() {
        let a = Algebra::matrices(2, 2);
        let (_, col, _) = column_space();
        let t = balanced_tensor(&Bimodule::regular(&a), &a, &col).unwrap();
        assert_eq!(t.dim(), 2);
        let iso = t.descend(&col.left.as_ref().unwrap().mat).unwrap();
        assert!(iso.is_bijective());
    }

    #[test]
    fn row_times_column_over_matrices() {
        let (m2, col, row) = column_space();
        let t = balanced_tensor(&row, &m2, &col).unwrap();
        assert_eq!(t.dim(), 1);
        assert_eq!(t.q.relations.rows(), 3);
    }

    #[test]
    fn zero_ring_has_no_relations() {
        let z = Algebra::new("z", 2, 1, Mat::zeros(2, 1, 1), None);
        let m = Bimodule::new("m", 2, 2).with_right(&z, Mat::zeros(2, 2, 2));
        let n = Bimodule::new("n", 2, 3).with_left(&z, Mat::zeros(2, 3, 3));
        let t = balanced_tensor(&m, &z, &n).unwrap();
        assert_eq!(t.dim(), 6);
    }

    #[test]
    fn not_balanced_witness() {
        let (m2, col, row) = column_space();
        let t = balanced_tensor(&row, &m2, &col).unwrap();
        // e_0 ⊗ e_0 ↦ 1, everything else ↦ 0: not balanced
        let mut f = Mat::zeros(2, 1, 4);
        f.set(0, 0, 1);
        match t.descend(&f) {
            Err(Error::NotBalanced { relation, .. }) => assert_eq!(f.apply(&relation), vec![1]),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn pure_tensors_are_balanced() {
        let (m2, col, row) = column_space();
        let t = balanced_tensor(&row, &m2, &col).unwrap();
        for r in 0..4 {
            let rv = m2.basis(r);
            for i in 0..2 {
                for j in 0..2 {
                    let (x, y) = (crate::algmod::basis_vector(2, i), crate::algmod::basis_vector(2, j));
                    let xr = row.right_op(&rv).apply(&x);
                    let ry = col.left_op(&rv).apply(&y);
                    assert_eq!(t.pure(&[&xr, &y]), t.pure(&[&x, &ry]));
                }
            }
        }
    }

    #[test]
    fn reassociation_is_iso() {
        let (m2, col, row) = column_space();
        let f2 = Algebra::ground(2);
        let flat = chain(&[&col, &row, &col]).unwrap();
        let inner = balanced_tensor(&col, &f2, &row).unwrap();
        let nested = balanced_tensor(&inner.as_bimodule(), &m2, &col).unwrap();
        assert_eq!(flat.dim(), nested.dim());
        let amb = nested.proj().mul(&inner.proj().kron(&Mat::identity(2, 2)));
        assert!(flat.descend(&amb).unwrap().is_bijective());
    }
}
