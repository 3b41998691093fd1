//! Dense matrices over the rationals and echelon-form subspace arithmetic.
//!
//! All linear maps in the crate are `Mat` values in row-major layout. Subspaces
//! are kept in reduced column-echelon form so that two computations of the same
//! space compare equal entry by entry.

use crate::rat::Rat;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

/// A dense `rows x cols` matrix of exact rationals, row-major.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Mat {
    rows: usize,
    cols: usize,
    entries: Vec<Rat>,
}

impl Mat {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Mat {
            rows,
            cols,
            entries: vec![Rat::zero(); rows * cols],
        }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Mat::zeros(n, n);
        for i in 0..n {
            *m.at_mut(i, i) = Rat::one();
        }
        m
    }

    pub fn from_fn(rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Rat) -> Self {
        let mut entries = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                entries.push(f(i, j));
            }
        }
        Mat {
            rows,
            cols,
            entries,
        }
    }

    pub fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, |row| row.len());
        assert!(rows.iter().all(|row| row.len() == c), "ragged rows");
        Mat {
            rows: r,
            cols: c,
            entries: rows.into_iter().flatten().collect(),
        }
    }

    /// Test helper: build from integer literals.
    pub fn from_i64(rows: &[&[i64]]) -> Self {
        Mat::from_rows(
            rows.iter()
                .map(|row| row.iter().map(|&x| Rat::int(x)).collect())
                .collect(),
        )
    }

    /// A column vector.
    pub fn col_vec(v: &[Rat]) -> Self {
        Mat {
            rows: v.len(),
            cols: 1,
            entries: v.to_vec(),
        }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn at(&self, i: usize, j: usize) -> &Rat {
        &self.entries[i * self.cols + j]
    }

    pub fn at_mut(&mut self, i: usize, j: usize) -> &mut Rat {
        &mut self.entries[i * self.cols + j]
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rat::is_zero)
    }

    pub fn column(&self, j: usize) -> Vec<Rat> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn row(&self, i: usize) -> Vec<Rat> {
        (0..self.cols).map(|j| self.at(i, j).clone()).collect()
    }

    pub fn set_column(&mut self, j: usize, v: &[Rat]) {
        assert_eq!(v.len(), self.rows);
        for i in 0..self.rows {
            *self.at_mut(i, j) = v[i].clone();
        }
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, c: &Rat) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) * c)
    }

    pub fn trace(&self) -> Rat {
        assert!(self.is_square());
        let mut t = Rat::zero();
        for i in 0..self.rows {
            t += self.at(i, i);
        }
        t
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square() && *self == self.transpose()
    }

    pub fn is_skew_symmetric(&self) -> bool {
        self.is_square() && *self == -&self.transpose()
    }

    /// Matrix-vector product.
    pub fn apply(&self, v: &[Rat]) -> Vec<Rat> {
        assert_eq!(v.len(), self.cols);
        (0..self.rows)
            .map(|i| {
                let mut s = Rat::zero();
                for j in 0..self.cols {
                    if !v[j].is_zero() && !self.at(i, j).is_zero() {
                        s += &(self.at(i, j) * &v[j]);
                    }
                }
                s
            })
            .collect()
    }

    pub fn pow(&self, mut e: u32) -> Mat {
        assert!(self.is_square());
        let mut base = self.clone();
        let mut acc = Mat::identity(self.rows);
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }

    /// Horizontal concatenation `[self | other]`.
    pub fn hstack(&self, other: &Mat) -> Mat {
        assert_eq!(self.rows, other.rows);
        Mat::from_fn(self.rows, self.cols + other.cols, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                other.at(i, j - self.cols).clone()
            }
        })
    }

    /// Flatten to a single column (row-major), for treating operators as vectors.
    pub fn vectorize(&self) -> Vec<Rat> {
        self.entries.clone()
    }

    /// Inverse of `vectorize` for square matrices of size `n`.
    pub fn from_vectorized(n: usize, v: &[Rat]) -> Mat {
        assert_eq!(v.len(), n * n);
        Mat {
            rows: n,
            cols: n,
            entries: v.to_vec(),
        }
    }

    /// Commutator `self * other - other * self`.
    pub fn commutator(&self, other: &Mat) -> Mat {
        &(self * other) - &(other * self)
    }

    /// Reduced row echelon form together with the pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            let pivot_row = (r..m.rows).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot_row else { continue };
            if p != r {
                for j in 0..m.cols {
                    let a = m.at(p, j).clone();
                    let b = m.at(r, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(r, j) = a;
                }
            }
            let inv = m.at(r, c).recip();
            for j in c..m.cols {
                let v = m.at(r, j) * &inv;
                *m.at_mut(r, j) = v;
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in c..m.cols {
                        let v = m.at(i, j) - &(m.at(r, j) * &f);
                        *m.at_mut(i, j) = v;
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the null space `{x : self * x = 0}`, as matrix columns.
    ///
    /// The basis comes from the standard free-variable parametrization of the
    /// reduced row echelon form, so it is deterministic.
    pub fn kernel(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut basis = Mat::zeros(self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            *basis.at_mut(fc, k) = Rat::one();
            for (row, &pc) in pivots.iter().enumerate() {
                *basis.at_mut(pc, k) = -r.at(row, fc);
            }
        }
        basis
    }

    /// One solution of `self * x = b`, if any.
    pub fn solve(&self, b: &[Rat]) -> Option<Vec<Rat>> {
        assert_eq!(b.len(), self.rows);
        let aug = self.hstack(&Mat::col_vec(b));
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None; // pivot in the constants column: inconsistent
        }
        let mut x = vec![Rat::zero(); self.cols];
        for (row, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(row, self.cols).clone();
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Mat> {
        assert!(self.is_square());
        let n = self.rows;
        let aug = self.hstack(&Mat::identity(n));
        let (r, pivots) = aug.rref();
        if pivots.len() < n || pivots[n - 1] >= n {
            return None;
        }
        Some(Mat::from_fn(n, n, |i, j| r.at(i, n + j).clone()))
    }

    pub fn det(&self) -> Rat {
        assert!(self.is_square());
        let n = self.rows;
        let mut m = self.clone();
        let mut det = Rat::one();
        for c in 0..n {
            let pivot_row = (c..n).find(|&i| !m.at(i, c).is_zero());
            let Some(p) = pivot_row else {
                return Rat::zero();
            };
            if p != c {
                det = -det;
                for j in 0..n {
                    let a = m.at(p, j).clone();
                    let b = m.at(c, j).clone();
                    *m.at_mut(p, j) = b;
                    *m.at_mut(c, j) = a;
                }
            }
            det = &det * m.at(c, c);
            let inv = m.at(c, c).recip();
            for i in c + 1..n {
                if !m.at(i, c).is_zero() {
                    let f = m.at(i, c) * &inv;
                    for j in c..n {
                        let v = m.at(i, j) - &(m.at(c, j) * &f);
                        *m.at_mut(i, j) = v;
                    }
                }
            }
        }
        det
    }

    /// Column space of the matrix as a canonical subspace.
    pub fn column_space(&self) -> Subspace {
        Subspace::from_columns(self.rows, self.clone())
    }
}

impl fmt::Debug for Mat {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Mat {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            write!(f, "  ")?;
            for j in 0..self.cols {
                write!(f, "{} ", self.at(i, j))?;
            }
            writeln!(f)?;
        }
        write!(f, "]")
    }
}

impl Add for &Mat {
    type Output = Mat;
    fn add(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) + rhs.at(i, j))
    }
}

impl Sub for &Mat {
    type Output = Mat;
    fn sub(self, rhs: &Mat) -> Mat {
        assert_eq!((self.rows, self.cols), (rhs.rows, rhs.cols));
        Mat::from_fn(self.rows, self.cols, |i, j| self.at(i, j) - rhs.at(i, j))
    }
}

impl Neg for &Mat {
    type Output = Mat;
    fn neg(self) -> Mat {
        Mat::from_fn(self.rows, self.cols, |i, j| -self.at(i, j))
    }
}

impl Mul for &Mat {
    type Output = Mat;
    fn mul(self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows);
        let mut out = Mat::zeros(self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    if !rhs.at(k, j).is_zero() {
                        let v = out.at(i, j) + &(a * rhs.at(k, j));
                        *out.at_mut(i, j) = v;
                    }
                }
            }
        }
        out
    }
}

/// A linear subspace of an `ambient`-dimensional coordinate space.
///
/// The basis matrix has the subspace dimension many columns and is stored in
/// reduced column-echelon form, which makes equality of subspaces literal
/// equality of their representations.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace {
    ambient: usize,
    basis: Mat,
}

impl Subspace {
    /// Canonicalize the span of the given columns.
    pub fn from_columns(ambient: usize, columns: Mat) -> Self {
        assert_eq!(columns.rows(), ambient);
        // Reduced column echelon form = transposed RREF of the transpose.
        let (r, pivots) = columns.transpose().rref();
        let k = pivots.len();
        let basis = Mat::from_fn(ambient, k, |i, j| r.at(j, i).clone());
        Subspace { ambient, basis }
    }

    pub fn from_vectors(ambient: usize, vectors: &[Vec<Rat>]) -> Self {
        let mut m = Mat::zeros(ambient, vectors.len());
        for (j, v) in vectors.iter().enumerate() {
            m.set_column(j, v);
        }
        Subspace::from_columns(ambient, m)
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::zeros(ambient, 0),
        }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            basis: Mat::identity(ambient),
        }
    }

    pub fn ambient(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    pub fn is_zero(&self) -> bool {
        self.dim() == 0
    }

    pub fn is_full(&self) -> bool {
        self.dim() == self.ambient
    }

    /// The canonical basis matrix (`ambient x dim`).
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn basis_vectors(&self) -> Vec<Vec<Rat>> {
        (0..self.dim()).map(|j| self.basis.column(j)).collect()
    }

    pub fn contains_vector(&self, v: &[Rat]) -> bool {
        assert_eq!(v.len(), self.ambient);
        self.basis.solve(v).is_some()
    }

    pub fn contains(&self, other: &Subspace) -> bool {
        assert_eq!(self.ambient, other.ambient);
        (0..other.dim()).all(|j| self.contains_vector(&other.basis.column(j)))
    }

    pub fn sum(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        Subspace::from_columns(self.ambient, self.basis.hstack(&other.basis))
    }

    pub fn intersect(&self, other: &Subspace) -> Subspace {
        assert_eq!(self.ambient, other.ambient);
        if self.is_zero() || other.is_zero() {
            return Subspace::zero(self.ambient);
        }
        // Solve A x = B y: kernel of [A | -B] parametrizes the intersection.
        let neg_b = -other.basis();
        let stacked = self.basis.hstack(&neg_b);
        let ker = stacked.kernel();
        let mut gens = Mat::zeros(self.ambient, ker.cols());
        for j in 0..ker.cols() {
            let x: Vec<Rat> = (0..self.dim()).map(|i| ker.at(i, j).clone()).collect();
            gens.set_column(j, &self.basis.apply(&x));
        }
        Subspace::from_columns(self.ambient, gens)
    }

    /// Smallest subspace containing both `self` and the extra vector.
    pub fn with_vector(&self, v: &[Rat]) -> Subspace {
        let mut cols = self.basis.clone();
        let extra = Mat::col_vec(v);
        cols = cols.hstack(&extra);
        Subspace::from_columns(self.ambient, cols)
    }

    /// Deterministic complement: standard basis vectors at non-pivot rows.
    pub fn echelon_complement(&self) -> Subspace {
        let (_, pivots) = self.basis.transpose().rref();
        let mut cols = Vec::new();
        for i in 0..self.ambient {
            if !pivots.contains(&i) {
                let mut e = vec![Rat::zero(); self.ambient];
                e[i] = Rat::one();
                cols.push(e);
            }
        }
        Subspace::from_vectors(self.ambient, &cols)
    }

    /// Image of the subspace under a linear map (`map` is `ambient x ambient`).
    pub fn image_under(&self, map: &Mat) -> Subspace {
        Subspace::from_columns(self.ambient, map * &self.basis)
    }

    /// A matrix `A` with `A v = 0` exactly when `v` lies in the subspace.
    ///
    /// Rows span the annihilator under the standard dot product; membership in
    /// a subspace then becomes a plain matrix-vector test, which lets linear
    /// conditions of the form "image lands in the subspace" stack into one
    /// kernel computation.
    pub fn membership_conditions(&self) -> Mat {
        self.basis.transpose().kernel().transpose()
    }

    /// Coordinates of `v` in the canonical basis, if `v` lies in the subspace.
    pub fn coordinates_of(&self, v: &[Rat]) -> Option<Vec<Rat>> {
        self.basis.solve(v)
    }
}

impl fmt::Debug for Subspace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} of {}) {:?}", self.dim(), self.ambient, self.basis)
    }
}

pub fn vec_zero(n: usize) -> Vec<Rat> {
    vec![Rat::zero(); n]
}

pub fn vec_is_zero(v: &[Rat]) -> bool {
    v.iter().all(Rat::is_zero)
}

pub fn vec_add(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

pub fn vec_sub(a: &[Rat], b: &[Rat]) -> Vec<Rat> {
    assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_scale(a: &[Rat], c: &Rat) -> Vec<Rat> {
    a.iter().map(|x| x * c).collect()
}

pub fn std_basis_vec(n: usize, i: usize) -> Vec<Rat> {
    let mut v = vec_zero(n);
    v[i] = Rat::one();
    v
}

/// Signature `(positive, negative, zero)` of a symmetric matrix, computed by
/// exact congruence diagonalization.
pub fn symmetric_signature(m: &Mat) -> (usize, usize, usize) {
    assert!(m.is_symmetric(), "signature needs a symmetric matrix");
    let n = m.rows();
    let mut a = m.clone();
    let mut pos = 0;
    let mut neg = 0;
    let mut zero = 0;
    for i in 0..n {
        if a.at(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !a.at(j, j).is_zero()) {
                swap_row_col(&mut a, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !a.at(i, j).is_zero()) {
                // All remaining diagonal entries vanish; a congruence by
                // row_i += row_j (and the matching column move) makes the
                // pivot 2*a[i][j] != 0.
                add_row_col(&mut a, i, j);
            }
        }
        let pivot = a.at(i, i).clone();
        if pivot.is_zero() {
            zero += 1;
            continue;
        }
        if pivot.is_positive() {
            pos += 1;
        } else {
            neg += 1;
        }
        for j in i + 1..n {
            if !a.at(j, i).is_zero() {
                let f = a.at(j, i) / &pivot;
                for k in 0..n {
                    let v = a.at(j, k) - &(&f * a.at(i, k));
                    *a.at_mut(j, k) = v;
                }
                for k in 0..n {
                    let v = a.at(k, j) - &(&f * a.at(k, i));
                    *a.at_mut(k, j) = v;
                }
            }
        }
    }
    (pos, neg, zero)
}

fn swap_row_col(a: &mut Mat, i: usize, j: usize) {
    let n = a.cols();
    for k in 0..n {
        let x = a.at(i, k).clone();
        let y = a.at(j, k).clone();
        *a.at_mut(i, k) = y;
        *a.at_mut(j, k) = x;
    }
    for k in 0..n {
        let x = a.at(k, i).clone();
        let y = a.at(k, j).clone();
        *a.at_mut(k, i) = y;
        *a.at_mut(k, j) = x;
    }
}

fn add_row_col(a: &mut Mat, i: usize, j: usize) {
    let n = a.cols();
    for k in 0..n {
        let v = a.at(i, k) + a.at(j, k);
        *a.at_mut(i, k) = v;
    }
    for k in 0..n {
        let v = a.at(k, i) + a.at(k, j);
        *a.at_mut(k, i) = v;
    }
}

/// Projector onto `target` along `complement`; requires the two to be
/// complementary in the ambient space.
pub fn projector_onto(target: &Subspace, complement: &Subspace) -> Mat {
    let n = target.ambient();
    assert_eq!(complement.ambient(), n);
    assert_eq!(target.dim() + complement.dim(), n);
    let basis = target.basis().hstack(complement.basis());
    let inv = basis
        .inverse()
        .expect("target and complement must be complementary");
    let mut selector = Mat::zeros(n, n);
    for i in 0..target.dim() {
        *selector.at_mut(i, i) = Rat::one();
    }
    &(&basis * &selector) * &inv
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn kernel_identity_is_trivial() {
        assert_eq!(Mat::identity(3).kernel().cols(), 0);
    }

    #[test]
    fn kernel_zero_is_full() {
        let k = Mat::zeros(2, 2).kernel();
        assert_eq!(k.cols(), 2);
        assert_eq!(k, Mat::identity(2));
    }

    #[test]
    fn kernel_rank_one() {
        // [[1,1],[1,1]] has kernel spanned by (1,-1).
        let m = Mat::from_i64(&[&[1, 1], &[1, 1]]);
        let k = m.kernel();
        assert_eq!(k.cols(), 1);
        assert!((&m * &k).is_zero());
        let v = k.column(0);
        assert_eq!(&v[0] + &v[1], Rat::zero());
        assert!(!v[0].is_zero());
    }

    #[test]
    fn kernel_columns_complement_rank() {
        let m = Mat::from_i64(&[&[1, 2, 3], &[2, 4, 6], &[0, 1, 1]]);
        assert_eq!(m.kernel().cols(), 3 - m.rank());
    }

    #[test]
    fn solve_and_inverse() {
        let m = Mat::from_i64(&[&[2, 1], &[1, 1]]);
        let x = m.solve(&[Rat::int(3), Rat::int(2)]).unwrap();
        assert_eq!(x, vec![Rat::int(1), Rat::int(1)]);
        let inv = m.inverse().unwrap();
        assert_eq!(&m * &inv, Mat::identity(2));
        assert_eq!(m.det(), Rat::int(1));
    }

    #[test]
    fn singular_has_no_inverse() {
        let m = Mat::from_i64(&[&[1, 2], &[2, 4]]);
        assert!(m.inverse().is_none());
        assert_eq!(m.det(), Rat::zero());
    }

    #[test]
    fn subspace_canonical_equality() {
        // Same plane described by two different spanning sets.
        let a = Subspace::from_vectors(
            3,
            &[
                vec![Rat::int(1), Rat::int(0), Rat::int(1)],
                vec![Rat::int(0), Rat::int(1), Rat::int(1)],
            ],
        );
        let b = Subspace::from_vectors(
            3,
            &[
                vec![Rat::int(1), Rat::int(1), Rat::int(2)],
                vec![Rat::int(1), Rat::int(-1), Rat::int(0)],
            ],
        );
        assert_eq!(a, b);
    }

    #[test]
    fn subspace_sum_and_intersection() {
        let e1 = vec![Rat::int(1), Rat::int(0), Rat::int(0)];
        let e2 = vec![Rat::int(0), Rat::int(1), Rat::int(0)];
        let e3 = vec![Rat::int(0), Rat::int(0), Rat::int(1)];
        let xy = Subspace::from_vectors(3, &[e1.clone(), e2.clone()]);
        let yz = Subspace::from_vectors(3, &[e2.clone(), e3.clone()]);
        assert_eq!(xy.sum(&yz), Subspace::full(3));
        let inter = xy.intersect(&yz);
        assert_eq!(inter.dim(), 1);
        assert!(inter.contains_vector(&e2));
    }

    #[test]
    fn complement_is_complementary() {
        let s = Subspace::from_vectors(
            4,
            &[
                vec![Rat::int(1), Rat::int(2), Rat::int(0), Rat::int(1)],
                vec![Rat::int(0), Rat::int(1), Rat::int(1), Rat::int(0)],
            ],
        );
        let c = s.echelon_complement();
        assert_eq!(s.dim() + c.dim(), 4);
        assert_eq!(s.sum(&c), Subspace::full(4));
        assert!(s.intersect(&c).is_zero());
    }

    #[test]
    fn projector_splits_vectors() {
        let s = Subspace::from_vectors(2, &[vec![Rat::int(1), Rat::int(1)]]);
        let c = s.echelon_complement();
        let p = projector_onto(&s, &c);
        assert_eq!(&p * &p, p);
        let v = p.apply(&[Rat::int(3), Rat::int(5)]);
        assert!(s.contains_vector(&v));
    }
}
