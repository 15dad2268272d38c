//! Dense linear algebra over prime fields F_p with p <= 97.
//!
//! A [`Mat`] stores a linear map as a `codomain x domain` matrix whose
//! column `j` is the image of the `j`-th domain basis vector. Every
//! reduction is deterministic: pivots are chosen as the first nonzero entry
//! in column order, so equal inputs produce bit-identical outputs.

use serde::Serialize;
use std::fmt;
use thiserror::Error;

pub const MAX_PRIME: u32 = 97;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum LinError {
    #[error("modulus {0} is not a prime in [2, {MAX_PRIME}]")]
    NotPrime(u32),
    #[error("right-hand side is not in the image")]
    NoSolution,
    #[error("map is not invertible ({0})")]
    NotInvertible(Witness),
    #[error("shape mismatch: {0}")]
    Shape(String),
}

/// Evidence that a map is not bijective.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", content = "vector", rename_all = "snake_case")]
pub enum Witness {
    /// Nonzero `x` with `m x = 0`.
    Kernel(Vec<u32>),
    /// Nonzero `y` with `y^T m = 0`.
    Cokernel(Vec<u32>),
}

impl fmt::Display for Witness {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Witness::Kernel(v) => write!(f, "kernel vector {v:?}"),
            Witness::Cokernel(v) => write!(f, "cokernel functional {v:?}"),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub struct Field {
    p: u32,
}

fn is_prime(p: u32) -> bool {
    p >= 2 && (2..p).take_while(|d| d * d <= p).all(|d| !p.is_multiple_of(d))
}

impl Field {
    pub fn new(p: u32) -> Result<Field, LinError> {
        if p > MAX_PRIME || !is_prime(p) {
            return Err(LinError::NotPrime(p));
        }
        Ok(Field { p })
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        (a + b) % self.p
    }

    pub fn sub(self, a: u32, b: u32) -> u32 {
        (a + self.p - b) % self.p
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        (a * b) % self.p
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(self, a: u32) -> u32 {
        inv_mod(a, self.p)
    }

    /// Number of elements of `F_p^dim`, saturating.
    pub fn count(self, dim: usize) -> u128 {
        (self.p as u128).checked_pow(dim as u32).unwrap_or(u128::MAX)
    }

    /// The `index`-th vector of `F_p^dim` in lexicographic order.
    pub fn vector(self, dim: usize, mut index: u128) -> Vec<u32> {
        let mut v = vec![0; dim];
        for slot in v.iter_mut().rev() {
            *slot = (index % self.p as u128) as u32;
            index /= self.p as u128;
        }
        v
    }
}

fn inv_mod(a: u32, p: u32) -> u32 {
    assert!(!a.is_multiple_of(p), "inverse of zero mod {p}");
    let mut r = 1u32;
    let mut b = a % p;
    let mut e = p - 2;
    while e > 0 {
        if e & 1 == 1 {
            r = r * b % p;
        }
        b = b * b % p;
        e >>= 1;
    }
    r
}

pub type LinearMap = Mat;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    p: u32,
    rows: usize,
    cols: usize,
    data: Vec<u32>,
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Mat[F{}; {}x{}]", self.p, self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "\n  {:?}", self.row(i))?;
        }
        Ok(())
    }
}

/// Reduced row echelon form of a matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub rank: usize,
    pub pivots: Vec<usize>,
    /// `rank x cols`, each row has a leading 1 at its pivot and zeros in
    /// the other pivot columns.
    pub rows: Mat,
}

/// Full output of [`Mat::rref_kernel_image`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KernelImage {
    pub rank: usize,
    pub kernel_basis: Vec<Vec<u32>>,
    pub image_basis: Vec<Vec<u32>>,
    pub pivot_columns: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Solution {
    pub particular: Vec<u32>,
    pub kernel: Vec<Vec<u32>>,
}

impl Mat {
    pub fn zeros(p: u32, rows: usize, cols: usize) -> Mat {
        Mat { p, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(p: u32, n: usize) -> Mat {
        let mut m = Mat::zeros(p, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1 % p;
        }
        m
    }

    pub fn from_fn(p: u32, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> i64) -> Mat {
        let mut m = Mat::zeros(p, rows, cols);
        for i in 0..rows {
            for j in 0..cols {
                m.data[i * cols + j] = f(i, j).rem_euclid(p as i64) as u32;
            }
        }
        m
    }

    /// Builds from row vectors; `cols` is needed when `rows` is empty.
    pub fn from_rows(p: u32, cols: usize, rows: &[Vec<u32>]) -> Mat {
        let mut m = Mat::zeros(p, rows.len(), cols);
        for (i, r) in rows.iter().enumerate() {
            assert_eq!(r.len(), cols, "ragged row");
            for (j, &x) in r.iter().enumerate() {
                m.data[i * cols + j] = x % p;
            }
        }
        m
    }

    /// Builds from column vectors; `rows` is needed when `cols` is empty.
    pub fn from_cols(p: u32, rows: usize, cols: &[Vec<u32>]) -> Mat {
        let mut m = Mat::zeros(p, rows, cols.len());
        for (j, c) in cols.iter().enumerate() {
            assert_eq!(c.len(), rows, "ragged column");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * cols.len() + j] = x % p;
            }
        }
        m
    }

    /// From row-major entries.
    pub fn from_entries(p: u32, rows: usize, cols: usize, data: Vec<u32>) -> Mat {
        assert_eq!(data.len(), rows * cols, "entry count");
        Mat { p, rows, cols, data: data.into_iter().map(|x| x % p).collect() }
    }

    pub fn column_vector(p: u32, v: &[u32]) -> Mat {
        Mat::from_cols(p, v.len(), &[v.to_vec()])
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn field(&self) -> Field {
        Field { p: self.p }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> u32 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: u32) {
        self.data[i * self.cols + j] = v % self.p;
    }

    pub fn row(&self, i: usize) -> &[u32] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn col(&self, j: usize) -> Vec<u32> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<u32>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn to_cols(&self) -> Vec<Vec<u32>> {
        (0..self.cols).map(|j| self.col(j)).collect()
    }

    pub fn entries(&self) -> &[u32] {
        &self.data
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_identity(&self) -> bool {
        self.rows == self.cols && *self == Mat::identity(self.p, self.rows)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    fn check_same(&self, other: &Mat) {
        assert_eq!(self.p, other.p, "field mismatch");
    }

    /// Composite `self ∘ other`.
    pub fn mul(&self, other: &Mat) -> Mat {
        self.check_same(other);
        assert_eq!(
            self.cols, other.rows,
            "compose {}x{} after {}x{}",
            self.rows, self.cols, other.rows, other.cols
        );
        let p = self.p as u64;
        let mut out = vec![0u64; self.rows * other.cols];
        for i in 0..self.rows {
            let orow = &mut out[i * other.cols..(i + 1) * other.cols];
            for k in 0..self.cols {
                let a = self.data[i * self.cols + k] as u64;
                if a == 0 {
                    continue;
                }
                let brow = &other.data[k * other.cols..(k + 1) * other.cols];
                for (o, &b) in orow.iter_mut().zip(brow) {
                    *o += a * b as u64;
                }
            }
            for o in orow.iter_mut() {
                *o %= p;
            }
        }
        Mat {
            p: self.p,
            rows: self.rows,
            cols: other.cols,
            data: out.into_iter().map(|x| x as u32).collect(),
        }
    }

    pub fn apply(&self, v: &[u32]) -> Vec<u32> {
        assert_eq!(v.len(), self.cols, "vector length");
        (0..self.rows)
            .map(|i| {
                let s: u64 = self.row(i).iter().zip(v).map(|(&a, &b)| a as u64 * b as u64).sum();
                (s % self.p as u64) as u32
            })
            .collect()
    }

    pub fn add(&self, other: &Mat) -> Mat {
        self.check_same(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "add shape");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| (a + b) % self.p).collect();
        Mat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn sub(&self, other: &Mat) -> Mat {
        self.check_same(other);
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "sub shape");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| (a + self.p - b) % self.p).collect();
        Mat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn scale(&self, c: u32) -> Mat {
        let data = self.data.iter().map(|&a| a * (c % self.p) % self.p).collect();
        Mat { p: self.p, rows: self.rows, cols: self.cols, data }
    }

    pub fn transpose(&self) -> Mat {
        let mut t = Mat::zeros(self.p, self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.data[j * self.rows + i] = self.data[i * self.cols + j];
            }
        }
        t
    }

    /// Kronecker product; matches the row-major tensor index `i * dim2 + j`.
    pub fn kron(&self, other: &Mat) -> Mat {
        self.check_same(other);
        let (r, c) = (self.rows * other.rows, self.cols * other.cols);
        let mut m = Mat::zeros(self.p, r, c);
        for i in 0..self.rows {
            for j in 0..self.cols {
                let a = self.get(i, j);
                if a == 0 {
                    continue;
                }
                for k in 0..other.rows {
                    for l in 0..other.cols {
                        let b = other.get(k, l);
                        if b != 0 {
                            m.data[(i * other.rows + k) * c + j * other.cols + l] = a * b % self.p;
                        }
                    }
                }
            }
        }
        m
    }

    pub fn kron_all(p: u32, factors: &[&Mat]) -> Mat {
        factors.iter().fold(Mat::identity(p, 1), |acc, f| acc.kron(f))
    }

    pub fn hstack(p: u32, rows: usize, blocks: &[&Mat]) -> Mat {
        let cols: usize = blocks.iter().map(|b| b.cols).sum();
        let mut m = Mat::zeros(p, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack rows");
            for i in 0..rows {
                for j in 0..b.cols {
                    m.data[i * cols + off + j] = b.get(i, j);
                }
            }
            off += b.cols;
        }
        m
    }

    pub fn vstack(p: u32, cols: usize, blocks: &[&Mat]) -> Mat {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack cols");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Mat { p, rows, cols, data }
    }

    pub fn select_cols(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.p, self.rows, idx.len(), |i, j| self.get(i, idx[j]) as i64)
    }

    pub fn select_rows(&self, idx: &[usize]) -> Mat {
        Mat::from_fn(self.p, idx.len(), self.cols, |i, j| self.get(idx[i], j) as i64)
    }

    pub fn rref(&self) -> Rref {
        let mut data = self.data.clone();
        let pivots = rref_in_place(self.p, self.rows, self.cols, &mut data);
        let rank = pivots.len();
        data.truncate(rank * self.cols);
        Rref { rank, pivots, rows: Mat { p: self.p, rows: rank, cols: self.cols, data } }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Null-space basis: one vector per free column, with a 1 in that
    /// column and zeros in the other free columns.
    pub fn kernel(&self) -> Vec<Vec<u32>> {
        let r = self.rref();
        kernel_from_rref(&r, self.cols)
    }

    /// Kernel basis as the columns of a `cols x k` matrix.
    pub fn kernel_mat(&self) -> Mat {
        Mat::from_cols(self.p, self.cols, &self.kernel())
    }

    /// Column-space basis in reduced echelon form.
    pub fn image_basis(&self) -> Vec<Vec<u32>> {
        self.transpose().rref().rows.to_rows()
    }

    pub fn rref_kernel_image(&self) -> KernelImage {
        let r = self.rref();
        KernelImage {
            rank: r.rank,
            kernel_basis: kernel_from_rref(&r, self.cols),
            image_basis: self.image_basis(),
            pivot_columns: r.pivots,
        }
    }

    pub fn is_injective(&self) -> bool {
        self.rank() == self.cols
    }

    pub fn is_surjective(&self) -> bool {
        self.rank() == self.rows
    }

    pub fn is_bijective(&self) -> bool {
        self.rows == self.cols && self.is_injective()
    }

    /// One solution of `self x = b` plus the kernel.
    pub fn solve(&self, b: &[u32]) -> Result<Solution, LinError> {
        if b.len() != self.rows {
            return Err(LinError::Shape(format!("rhs has {} entries, expected {}", b.len(), self.rows)));
        }
        let x = self.solve_many(&Mat::column_vector(self.p, b)).ok_or(LinError::NoSolution)?;
        Ok(Solution { particular: x.col(0), kernel: self.kernel() })
    }

    /// Particular solution `X` of `self X = rhs` (free variables zero).
    pub fn solve_many(&self, rhs: &Mat) -> Option<Mat> {
        assert_eq!(rhs.rows, self.rows, "solve_many rows");
        let aug = Mat::hstack(self.p, self.rows, &[self, rhs]);
        let mut data = aug.data.clone();
        let pivots = rref_in_place(self.p, aug.rows, aug.cols, &mut data);
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Mat::zeros(self.p, self.cols, rhs.cols);
        for (r, &c) in pivots.iter().enumerate() {
            for k in 0..rhs.cols {
                x.data[c * rhs.cols + k] = data[r * aug.cols + self.cols + k];
            }
        }
        Some(x)
    }

    /// A nonzero `y` with `y^T self = 0`, if any.
    pub fn cokernel_vector(&self) -> Option<Vec<u32>> {
        self.transpose().kernel().into_iter().next()
    }

    pub fn invert(&self) -> Result<Mat, LinError> {
        let n = self.rows;
        if self.rows < self.cols {
            return Err(LinError::NotInvertible(Witness::Kernel(self.kernel()[0].clone())));
        }
        if self.rows > self.cols {
            let y = self.cokernel_vector().expect("tall matrix has cokernel");
            return Err(LinError::NotInvertible(Witness::Cokernel(y)));
        }
        if n == 0 {
            return Ok(Mat::zeros(self.p, 0, 0));
        }
        let aug = Mat::hstack(self.p, n, &[self, &Mat::identity(self.p, n)]);
        let mut data = aug.data.clone();
        let pivots = rref_in_place(self.p, n, 2 * n, &mut data);
        if pivots.len() < n || pivots[n - 1] >= n {
            let k = self.kernel();
            return Err(LinError::NotInvertible(Witness::Kernel(k[0].clone())));
        }
        Ok(Mat::from_fn(self.p, n, n, |i, j| data[i * 2 * n + n + j] as i64))
    }

    /// Witness that `self` is not bijective, if it is not.
    pub fn bijectivity_witness(&self) -> Option<Witness> {
        match self.invert() {
            Ok(_) => None,
            Err(LinError::NotInvertible(w)) => Some(w),
            Err(_) => unreachable!(),
        }
    }

    /// Indices of columns that are nonzero.
    pub fn nonzero_cols(&self) -> Vec<usize> {
        (0..self.cols).filter(|&j| (0..self.rows).any(|i| self.get(i, j) != 0)).collect()
    }

    /// Canonical basis of the span of the columns, as columns.
    pub fn column_space(&self) -> Mat {
        Mat::from_cols(self.p, self.rows, &self.image_basis())
    }
}

fn kernel_from_rref(r: &Rref, cols: usize) -> Vec<Vec<u32>> {
    let p = r.rows.p;
    let mut is_pivot = vec![false; cols];
    for &c in &r.pivots {
        is_pivot[c] = true;
    }
    let mut basis = Vec::new();
    for f in (0..cols).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; cols];
        v[f] = 1 % p;
        for (row, &pc) in r.pivots.iter().enumerate() {
            v[pc] = (p - r.rows.get(row, f)) % p;
        }
        basis.push(v);
    }
    basis
}

fn rref_in_place(p: u32, rows: usize, cols: usize, data: &mut [u32]) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..cols {
        if r == rows {
            break;
        }
        let Some(piv) = (r..rows).find(|&i| data[i * cols + c] != 0) else {
            continue;
        };
        if piv != r {
            for j in c..cols {
                data.swap(piv * cols + j, r * cols + j);
            }
        }
        let inv = inv_mod(data[r * cols + c], p);
        if inv != 1 {
            for j in c..cols {
                data[r * cols + j] = data[r * cols + j] * inv % p;
            }
        }
        for i in 0..rows {
            if i == r {
                continue;
            }
            let f = data[i * cols + c];
            if f == 0 {
                continue;
            }
            let nf = p - f;
            for j in c..cols {
                let y = data[r * cols + j];
                if y != 0 {
                    data[i * cols + j] = (data[i * cols + j] + nf * y) % p;
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    pivots
}

/// A quotient `V / span(relations)` with a canonical section.
///
/// The section embeds quotient coordinate `k` as the ambient basis vector
/// `free[k]`, where `free` lists the non-pivot columns of the relation RREF.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Quotient {
    pub ambient: usize,
    /// RREF of the relation span, `rank x ambient`.
    pub relations: Mat,
    pub pivots: Vec<usize>,
    pub free: Vec<usize>,
    /// `dim x ambient`.
    pub proj: Mat,
    /// `ambient x dim`.
    pub sec: Mat,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.free.len()
    }

    pub fn p(&self) -> u32 {
        self.proj.p
    }

    /// Trivial quotient (no relations).
    pub fn identity(p: u32, n: usize) -> Quotient {
        quotient_rows(p, n, &Mat::zeros(p, 0, n))
    }

    /// Column indices of relation RREF rows annihilated by `m` fail when
    /// this returns `Some(row)`: the first relation vector not killed by `m`.
    pub fn first_unkilled(&self, m: &Mat) -> Option<Vec<u32>> {
        if self.relations.rows == 0 {
            return None;
        }
        let img = m.mul(&self.relations.transpose());
        img.nonzero_cols().first().map(|&k| self.relations.row(k).to_vec())
    }
}

/// Quotient of `F_p^ambient` by the span of the columns of `relations`.
pub fn quotient(p: u32, ambient: usize, relations: &Mat) -> Quotient {
    assert_eq!(relations.rows, ambient, "relation length");
    quotient_rows(p, ambient, &relations.transpose())
}

/// Quotient by the span of the rows of `rows`.
pub fn quotient_rows(p: u32, ambient: usize, rows: &Mat) -> Quotient {
    assert_eq!(rows.cols, ambient, "relation length");
    let r = rows.rref();
    let mut is_pivot = vec![false; ambient];
    for &c in &r.pivots {
        is_pivot[c] = true;
    }
    let free: Vec<usize> = (0..ambient).filter(|&c| !is_pivot[c]).collect();
    let mut pos = vec![usize::MAX; ambient];
    for (k, &c) in free.iter().enumerate() {
        pos[c] = k;
    }
    let mut proj = Mat::zeros(p, free.len(), ambient);
    for (k, &c) in free.iter().enumerate() {
        proj.data[k * ambient + c] = 1 % p;
    }
    for (row, &pc) in r.pivots.iter().enumerate() {
        for &c in &free {
            let v = r.rows.get(row, c);
            if v != 0 {
                proj.data[pos[c] * ambient + pc] = (p - v) % p;
            }
        }
    }
    let mut sec = Mat::zeros(p, ambient, free.len());
    for (k, &c) in free.iter().enumerate() {
        sec.data[c * free.len() + k] = 1 % p;
    }
    Quotient { ambient, relations: r.rows, pivots: r.pivots, free, proj, sec }
}

/// Solutions `X` (`rows x cols`) of the linear system `f(X) = target`,
/// where `f` is linear and returns a flat vector. Gives a particular solution
/// and a basis of the homogeneous solutions.
pub fn solve_matrix_system(
    p: u32,
    rows: usize,
    cols: usize,
    f: impl Fn(&Mat) -> Vec<u32>,
    target: &[u32],
) -> Option<(Mat, Vec<Mat>)> {
    let n = rows * cols;
    let mut images = Vec::with_capacity(n);
    for k in 0..n {
        let mut e = Mat::zeros(p, rows, cols);
        e.data[k] = 1 % p;
        let img = f(&e);
        assert_eq!(img.len(), target.len(), "constraint length");
        images.push(img);
    }
    let system = Mat::from_cols(p, target.len(), &images);
    let sol = system.solve(target).ok()?;
    let to_mat = |v: Vec<u32>| Mat { p, rows, cols, data: v };
    Some((to_mat(sol.particular), sol.kernel.into_iter().map(to_mat).collect()))
}

/// Basis of the solutions of the homogeneous linear system `f(X) = 0`.
pub fn matrix_kernel(p: u32, rows: usize, cols: usize, f: impl Fn(&Mat) -> Vec<u32>) -> Vec<Mat> {
    let probe = f(&Mat::zeros(p, rows, cols)).len();
    solve_matrix_system(p, rows, cols, f, &vec![0; probe]).expect("homogeneous system").1
}

/// Linear combination `sum c_k m_k`.
pub fn combine(p: u32, rows: usize, cols: usize, coeffs: &[u32], mats: &[Mat]) -> Mat {
    let mut out = Mat::zeros(p, rows, cols);
    for (&c, m) in coeffs.iter().zip(mats) {
        if c != 0 {
            out = out.add(&m.scale(c));
        }
    }
    out
}

/// Canonical echelon basis (as rows) of the span of `vectors`.
pub fn span_basis(p: u32, dim: usize, vectors: &[Vec<u32>]) -> Vec<Vec<u32>> {
    Mat::from_rows(p, dim, vectors).rref().rows.to_rows()
}

/// Whether `v` lies in the span of the echelon rows `basis`.
pub fn in_span(p: u32, basis: &[Vec<u32>], v: &[u32]) -> bool {
    let mut all = basis.to_vec();
    all.push(v.to_vec());
    span_basis(p, v.len(), &all).len() == basis.len()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(p: u32, rows: &[&[u32]]) -> Mat {
        let cols = rows.first().map_or(0, |r| r.len());
        Mat::from_rows(p, cols, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>())
    }

    #[test]
    fn field_rejects_composites_and_large() {
        assert_eq!(Field::new(4), Err(LinError::NotPrime(4)));
        assert_eq!(Field::new(1), Err(LinError::NotPrime(1)));
        assert_eq!(Field::new(101), Err(LinError::NotPrime(101)));
        assert!(Field::new(97).is_ok());
    }

    #[test]
    fn kernel_of_equal_rows_f2() {
        let k = m(2, &[&[1, 1], &[1, 1]]).rref_kernel_image();
        assert_eq!(k.rank, 1);
        assert_eq!(k.kernel_basis, vec![vec![1, 1]]);
    }

    #[test]
    fn identity_f3_has_trivial_kernel() {
        let k = Mat::identity(3, 2).rref_kernel_image();
        assert_eq!(k.rank, 2);
        assert!(k.kernel_basis.is_empty());
    }

    #[test]
    fn kernel_f5_example() {
        let k = m(5, &[&[1, 2], &[2, 4]]).rref_kernel_image();
        assert_eq!(k.rank, 1);
        assert_eq!(k.kernel_basis, vec![vec![3, 1]]);
        assert_eq!(k.pivot_columns, vec![0]);
        assert_eq!(k.image_basis, vec![vec![1, 2]]);
    }

    #[test]
    fn solve_examples() {
        let s = Mat::identity(3, 2).solve(&[2, 1]).unwrap();
        assert_eq!(s.particular, vec![2, 1]);
        assert_eq!(m(2, &[&[1, 1], &[1, 1]]).solve(&[1, 0]), Err(LinError::NoSolution));
        let s = m(2, &[&[1, 1]]).solve(&[1]).unwrap();
        assert_eq!(s.particular, vec![1, 0]);
        assert_eq!(s.kernel, vec![vec![1, 1]]);
    }

    #[test]
    fn quotient_examples() {
        let q = quotient(2, 2, &Mat::from_cols(2, 2, &[vec![1, 1]]));
        assert_eq!(q.dim(), 1);
        let q = Quotient::identity(5, 3);
        assert!(q.proj.is_identity() && q.sec.is_identity());
        let q = quotient(3, 3, &Mat::from_cols(3, 3, &[vec![1, 0, 0], vec![1, 1, 0]]));
        assert_eq!(q.dim(), 1);
        assert!(q.proj.mul(&q.sec).is_identity());
    }

    #[test]
    fn invert_examples() {
        assert!(Mat::identity(7, 3).invert().unwrap().is_identity());
        let swap = m(2, &[&[0, 1], &[1, 0]]);
        assert_eq!(swap.invert().unwrap(), swap);
        let shear = m(2, &[&[1, 1], &[0, 1]]);
        assert_eq!(shear.invert().unwrap(), shear);
        match m(2, &[&[1, 1], &[1, 1]]).invert() {
            Err(LinError::NotInvertible(Witness::Kernel(v))) => assert_eq!(v, vec![1, 1]),
            other => panic!("{other:?}"),
        }
        match m(3, &[&[1], &[2]]).invert() {
            Err(LinError::NotInvertible(Witness::Cokernel(y))) => {
                assert_eq!((y[0] + 2 * y[1]) % 3, 0);
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn kron_index_convention() {
        let a = m(5, &[&[1, 2], &[3, 4]]);
        let b = m(5, &[&[0, 1], &[1, 0]]);
        let k = a.kron(&b);
        // (i*2+k, j*2+l) = a[i][j] b[k][l]
        let at = |i: usize, k: usize| i * 2 + k;
        assert_eq!(k.get(at(1, 0), at(0, 1)), 3);
        assert_eq!(k.get(at(0, 1), at(1, 0)), 2);
    }
}
