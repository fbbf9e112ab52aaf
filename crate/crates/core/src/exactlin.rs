//! Exact dense linear algebra over a prime field `F_p`.
//!
//! Matrices are row-major and carry their field. Pivoting always takes the
//! first nonzero entry in column order, so every echelon form, kernel basis
//! and complement produced here is reproducible bit for bit.
//!
//! Subspaces are represented by matrices whose columns form a basis.

use std::fmt;

use crate::error::{Error, Result};

pub type Scalar = u32;

/// The prime field `F_p`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Field {
    p: u32,
}

impl Field {
    /// Largest admissible modulus; keeps sums of two residues inside `u32`.
    pub const MAX_P: u64 = (1 << 31) - 1;

    pub fn new(p: u64) -> Result<Self> {
        if p < 2 || p > Self::MAX_P || !is_prime(p) {
            return Err(Error::invalid(format!("field modulus {p} is not a prime below 2^31")));
        }
        Ok(Field { p: p as u32 })
    }

    pub fn p(&self) -> u32 {
        self.p
    }

    pub fn reduce(&self, x: i64) -> Scalar {
        x.rem_euclid(self.p as i64) as Scalar
    }

    #[inline]
    pub fn add(&self, a: Scalar, b: Scalar) -> Scalar {
        let s = a + b;
        if s >= self.p {
            s - self.p
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: Scalar, b: Scalar) -> Scalar {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    #[inline]
    pub fn neg(&self, a: Scalar) -> Scalar {
        if a == 0 {
            0
        } else {
            self.p - a
        }
    }

    #[inline]
    pub fn mul(&self, a: Scalar, b: Scalar) -> Scalar {
        ((a as u64 * b as u64) % self.p as u64) as Scalar
    }

    /// Multiplicative inverse. Panics on zero.
    pub fn inv(&self, a: Scalar) -> Scalar {
        assert!(a != 0, "inverse of zero in F_{}", self.p);
        // Fermat: a^(p-2)
        self.pow(a, (self.p - 2) as u64)
    }

    pub fn pow(&self, mut a: Scalar, mut e: u64) -> Scalar {
        let mut acc: Scalar = 1 % self.p;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, a);
            }
            a = self.mul(a, a);
            e >>= 1;
        }
        acc
    }

    pub fn elements(&self) -> impl Iterator<Item = Scalar> {
        0..self.p
    }
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut k = 2u64;
    while k * k <= n {
        if n % k == 0 {
            return false;
        }
        k += 1;
    }
    true
}

/// Dense matrix over a prime field.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Scalar>,
}

/// Reduced row echelon form together with its pivot columns.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rref {
    pub reduced: Matrix,
    pub pivots: Vec<usize>,
}

impl Rref {
    pub fn rank(&self) -> usize {
        self.pivots.len()
    }
}

impl fmt::Debug for Matrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Matrix[F_{}; {}x{}]", self.field.p, self.rows, self.cols)?;
        let rows: Vec<&[Scalar]> = (0..self.rows).map(|i| self.row(i)).collect();
        write!(f, "{rows:?}")
    }
}

impl Matrix {
    pub fn zeros(field: Field, rows: usize, cols: usize) -> Self {
        Matrix { field, rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = 1;
        }
        m
    }

    pub fn scalar(field: Field, n: usize, c: Scalar) -> Self {
        let mut m = Self::zeros(field, n, n);
        for i in 0..n {
            m.data[i * n + i] = c;
        }
        m
    }

    /// Builds a matrix from integer rows, reducing every entry mod `p`.
    pub fn from_rows(field: Field, rows: &[Vec<i64>]) -> Result<Self> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::invalid("ragged matrix rows"));
        }
        let data = rows.iter().flatten().map(|&x| field.reduce(x)).collect();
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    /// Builds a `rows x cols` matrix from row-major residues.
    pub fn from_vec(field: Field, rows: usize, cols: usize, data: Vec<Scalar>) -> Self {
        assert_eq!(data.len(), rows * cols, "matrix data length");
        debug_assert!(data.iter().all(|&x| x < field.p));
        Matrix { field, rows, cols, data }
    }

    /// Builds a matrix whose columns are the given vectors.
    pub fn from_columns(field: Field, nrows: usize, columns: &[Vec<Scalar>]) -> Self {
        let mut m = Self::zeros(field, nrows, columns.len());
        for (j, c) in columns.iter().enumerate() {
            assert_eq!(c.len(), nrows, "column length");
            for (i, &x) in c.iter().enumerate() {
                m.data[i * m.cols + j] = x;
            }
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, mut f: impl FnMut(usize, usize) -> Scalar) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { field, rows, cols, data }
    }

    pub fn column_vector(field: Field, v: &[Scalar]) -> Self {
        Self::from_vec(field, v.len(), 1, v.to_vec())
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn data(&self) -> &[Scalar] {
        &self.data
    }

    #[inline]
    pub fn get(&self, i: usize, j: usize) -> Scalar {
        self.data[i * self.cols + j]
    }

    #[inline]
    pub fn set(&mut self, i: usize, j: usize, x: Scalar) {
        self.data[i * self.cols + j] = x;
    }

    pub fn row(&self, i: usize) -> &[Scalar] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.get(i, j)).collect()
    }

    pub fn columns(&self) -> Vec<Vec<Scalar>> {
        (0..self.cols).map(|j| self.column(j)).collect()
    }

    pub fn to_signed_rows(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).iter().map(|&x| x as i64).collect()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|&x| x == 0)
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn is_identity(&self) -> bool {
        self.is_square() && *self == Self::identity(self.field, self.rows)
    }

    pub fn transpose(&self) -> Matrix {
        Matrix::from_fn(self.field, self.cols, self.rows, |i, j| self.get(j, i))
    }

    pub fn mul(&self, other: &Matrix) -> Matrix {
        assert_eq!(self.cols, other.rows, "matrix product shape {}x{} * {}x{}", self.rows, self.cols, other.rows, other.cols);
        assert_eq!(self.field, other.field);
        let p = self.field.p as u64;
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
                    *o = (*o + a * b as u64) % p;
                }
            }
        }
        Matrix { field: self.field, rows: self.rows, cols: other.cols, data: out.into_iter().map(|x| x as Scalar).collect() }
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "matrix-vector shape");
        (0..self.rows)
            .map(|i| {
                self.row(i).iter().zip(v).fold(0, |acc, (&a, &b)| self.field.add(acc, self.field.mul(a, b)))
            })
            .collect()
    }

    pub fn add(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix sum shape");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.add(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn sub(&self, other: &Matrix) -> Matrix {
        assert_eq!((self.rows, self.cols), (other.rows, other.cols), "matrix difference shape");
        let data = self.data.iter().zip(&other.data).map(|(&a, &b)| self.field.sub(a, b)).collect();
        Matrix { data, ..*self }
    }

    pub fn scale(&self, c: Scalar) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.mul(a, c)).collect();
        Matrix { data, ..*self }
    }

    pub fn neg(&self) -> Matrix {
        let data = self.data.iter().map(|&a| self.field.neg(a)).collect();
        Matrix { data, ..*self }
    }

    pub fn pow(&self, mut e: usize) -> Matrix {
        assert!(self.is_square());
        let mut acc = Matrix::identity(self.field, self.rows);
        let mut base = self.clone();
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }

    /// Horizontal concatenation; all blocks need the same row count.
    pub fn hstack(field: Field, rows: usize, blocks: &[&Matrix]) -> Matrix {
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let mut off = 0;
        for b in blocks {
            assert_eq!(b.rows, rows, "hstack row count");
            for i in 0..rows {
                m.data[i * cols + off..i * cols + off + b.cols].copy_from_slice(b.row(i));
            }
            off += b.cols;
        }
        m
    }

    /// Vertical concatenation; all blocks need the same column count.
    pub fn vstack(field: Field, cols: usize, blocks: &[&Matrix]) -> Matrix {
        let mut data = Vec::new();
        let mut rows = 0;
        for b in blocks {
            assert_eq!(b.cols, cols, "vstack column count");
            data.extend_from_slice(&b.data);
            rows += b.rows;
        }
        Matrix { field, rows, cols, data }
    }

    pub fn block_diag(field: Field, blocks: &[&Matrix]) -> Matrix {
        let rows = blocks.iter().map(|b| b.rows).sum();
        let cols = blocks.iter().map(|b| b.cols).sum();
        let mut m = Matrix::zeros(field, rows, cols);
        let (mut r0, mut c0) = (0, 0);
        for b in blocks {
            for i in 0..b.rows {
                for j in 0..b.cols {
                    m.set(r0 + i, c0 + j, b.get(i, j));
                }
            }
            r0 += b.rows;
            c0 += b.cols;
        }
        m
    }

    pub fn select_columns(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, self.rows, idx.len(), |i, j| self.get(i, idx[j]))
    }

    pub fn select_rows(&self, idx: &[usize]) -> Matrix {
        Matrix::from_fn(self.field, idx.len(), self.cols, |i, j| self.get(idx[i], j))
    }

    /// Copies `block` into `self` with its top-left corner at `(r0, c0)`.
    pub fn put_block(&mut self, r0: usize, c0: usize, block: &Matrix) {
        for i in 0..block.rows {
            for j in 0..block.cols {
                self.set(r0 + i, c0 + j, block.get(i, j));
            }
        }
    }

    pub fn block(&self, r0: usize, c0: usize, rows: usize, cols: usize) -> Matrix {
        Matrix::from_fn(self.field, rows, cols, |i, j| self.get(r0 + i, c0 + j))
    }

    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.clone();
        let cols = m.cols;
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == m.rows {
                break;
            }
            let Some(pr) = (r..m.rows).find(|&i| m.data[i * cols + c] != 0) else {
                continue;
            };
            if pr != r {
                for j in c..cols {
                    m.data.swap(pr * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m.data[r * cols + c]);
            for j in c..cols {
                m.data[r * cols + j] = f.mul(m.data[r * cols + j], inv);
            }
            for i in 0..m.rows {
                if i == r {
                    continue;
                }
                let factor = m.data[i * cols + c];
                if factor == 0 {
                    continue;
                }
                for j in c..cols {
                    let sub = f.mul(factor, m.data[r * cols + j]);
                    m.data[i * cols + j] = f.sub(m.data[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref { reduced: m, pivots }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank()
    }

    /// Basis of the right null space, one column per free variable.
    pub fn kernel_basis(&self) -> Matrix {
        let Rref { reduced, pivots } = self.rref();
        let f = self.field;
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut k = Matrix::zeros(f, self.cols, free.len());
        for (j, &fc) in free.iter().enumerate() {
            k.set(fc, j, 1);
            for (i, &pc) in pivots.iter().enumerate() {
                k.set(pc, j, f.neg(reduced.get(i, fc)));
            }
        }
        k
    }

    /// Some `x` with `self * x = b`, or `None` when `b` is outside the column space.
    pub fn solve(&self, b: &[Scalar]) -> Result<Option<Vec<Scalar>>> {
        if b.len() != self.rows {
            return Err(Error::DimensionMismatch(format!(
                "right-hand side of length {} for a {}x{} system",
                b.len(),
                self.rows,
                self.cols
            )));
        }
        let rhs = Matrix::column_vector(self.field, b);
        Ok(self.solve_many(&rhs).map(|x| x.column(0)))
    }

    /// Some `X` with `self * X = rhs`, or `None` when no solution exists.
    pub fn solve_many(&self, rhs: &Matrix) -> Option<Matrix> {
        assert_eq!(self.rows, rhs.rows, "solve_many row count");
        let aug = Matrix::hstack(self.field, self.rows, &[self, rhs]);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.iter().any(|&c| c >= self.cols) {
            return None;
        }
        let mut x = Matrix::zeros(self.field, self.cols, rhs.cols);
        for (i, &pc) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(pc, j, reduced.get(i, self.cols + j));
            }
        }
        Some(x)
    }

    pub fn inverse(&self) -> Option<Matrix> {
        if !self.is_square() {
            return None;
        }
        let n = self.rows;
        if n == 0 {
            return Some(self.clone());
        }
        let aug = Matrix::hstack(self.field, n, &[self, &Matrix::identity(self.field, n)]);
        let Rref { reduced, pivots } = aug.rref();
        if pivots.len() < n || pivots[n - 1] != n - 1 {
            return None;
        }
        Some(reduced.block(0, n, n, n))
    }

    pub fn is_invertible(&self) -> bool {
        self.is_square() && self.rank() == self.rows
    }

    pub fn is_nilpotent(&self) -> bool {
        self.is_square() && self.pow(self.rows).is_zero()
    }

    /// The original columns at pivot positions: a basis of the column space.
    pub fn image_basis(&self) -> Matrix {
        let pivots = self.rref().pivots;
        self.select_columns(&pivots)
    }
}

/// Basis of the column space of `m`.
pub fn image_basis(m: &Matrix) -> Matrix {
    m.image_basis()
}

fn check_ambient(u: &Matrix, v: &Matrix) -> Result<()> {
    if u.rows() != v.rows() {
        return Err(Error::DimensionMismatch(format!(
            "subspaces of ambient dimensions {} and {}",
            u.rows(),
            v.rows()
        )));
    }
    Ok(())
}

/// Basis of `U ∩ V` for column bases `u`, `v`.
pub fn intersect(u: &Matrix, v: &Matrix) -> Result<Matrix> {
    check_ambient(u, v)?;
    let f = u.field();
    let u = u.image_basis();
    let v = v.image_basis();
    let k = Matrix::hstack(f, u.rows(), &[&u, &v.neg()]).kernel_basis();
    let coeffs = k.block(0, 0, u.cols(), k.cols());
    Ok(u.mul(&coeffs).image_basis())
}

/// Basis of `U + V`.
pub fn sum(u: &Matrix, v: &Matrix) -> Result<Matrix> {
    check_ambient(u, v)?;
    Ok(Matrix::hstack(u.field(), u.rows(), &[u, v]).image_basis())
}

/// Whether the vector lies in the column span of `u`.
pub fn contains(u: &Matrix, v: &[Scalar]) -> Result<bool> {
    Ok(u.solve(v)?.is_some())
}

/// Whether every column of `v` lies in the column span of `u`.
pub fn contains_all(u: &Matrix, v: &Matrix) -> Result<bool> {
    check_ambient(u, v)?;
    Ok(u.solve_many(v).is_some())
}

/// `V / (U ∩ V)` realised inside the ambient space.
#[derive(Clone, Debug)]
pub struct Quotient {
    /// Representatives (columns, taken from the basis of `V`) of a basis of the quotient.
    pub complement: Matrix,
    /// `dim quotient x ambient`; kills `U` and sends the `j`-th representative to `e_j`.
    pub projection: Matrix,
}

impl Quotient {
    pub fn dim(&self) -> usize {
        self.complement.cols()
    }
}

pub fn quotient(v: &Matrix, u: &Matrix) -> Result<Quotient> {
    check_ambient(u, v)?;
    let f = v.field();
    let n = v.rows();
    let ub = u.image_basis();
    let with_v = Matrix::hstack(f, n, &[&ub, v]);
    let piv = with_v.rref().pivots;
    let comp_idx: Vec<usize> = piv.iter().copied().filter(|&c| c >= ub.cols()).collect();
    let complement = with_v.select_columns(&comp_idx);
    let full = Matrix::hstack(f, n, &[&ub, &complement, &Matrix::identity(f, n)]);
    let basis = full.image_basis();
    debug_assert_eq!(basis.cols(), n);
    let inv = basis.inverse().expect("basis of the ambient space is invertible");
    let rows: Vec<usize> = (ub.cols()..ub.cols() + complement.cols()).collect();
    let projection = inv.select_rows(&rows);
    Ok(Quotient { complement, projection })
}

/// Coordinates with respect to a fixed basis (columns of a full-column-rank matrix).
#[derive(Clone, Debug)]
pub struct Coordinates {
    basis: Matrix,
    rows: Vec<usize>,
    inv: Matrix,
}

impl Coordinates {
    pub fn new(basis: Matrix) -> Self {
        let piv = basis.transpose().rref().pivots;
        assert_eq!(piv.len(), basis.cols(), "coordinate basis must have independent columns");
        let inv = basis.select_rows(&piv).inverse().expect("pivot rows form an invertible block");
        Coordinates { basis, rows: piv, inv }
    }

    pub fn basis(&self) -> &Matrix {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.cols()
    }

    /// Coordinates of a vector known to lie in the span.
    pub fn coords(&self, v: &[Scalar]) -> Vec<Scalar> {
        let sub: Vec<Scalar> = self.rows.iter().map(|&r| v[r]).collect();
        let c = self.inv.mul_vec(&sub);
        debug_assert_eq!(self.basis.mul_vec(&c), v, "vector outside the coordinate span");
        c
    }

    /// Coordinates, or `None` when the vector is outside the span.
    pub fn coords_checked(&self, v: &[Scalar]) -> Option<Vec<Scalar>> {
        let sub: Vec<Scalar> = self.rows.iter().map(|&r| v[r]).collect();
        let c = self.inv.mul_vec(&sub);
        (self.basis.mul_vec(&c) == v).then_some(c)
    }
}

/// Every vector of `F_p^n`, in lexicographic order of coordinates.
pub fn all_vectors(field: Field, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    let p = field.p();
    let total = (p as u128).checked_pow(n as u32).unwrap_or(u128::MAX);
    (0..total).map(move |mut k| {
        let mut v = vec![0; n];
        for x in v.iter_mut().rev() {
            *x = (k % p as u128) as Scalar;
            k /= p as u128;
        }
        v
    })
}

/// One representative per line of `F_p^n`: nonzero vectors whose first nonzero entry is 1.
pub fn projective_points(field: Field, n: usize) -> impl Iterator<Item = Vec<Scalar>> {
    all_vectors(field, n).filter(|v| v.iter().find(|&&x| x != 0) == Some(&1))
}

/// `p^n` as a saturating count.
pub fn field_power(field: Field, n: usize) -> u128 {
    (field.p() as u128).checked_pow(n as u32).unwrap_or(u128::MAX)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f2() -> Field {
        Field::new(2).unwrap()
    }

    fn m(field: Field, rows: &[&[i64]]) -> Matrix {
        Matrix::from_rows(field, &rows.iter().map(|r| r.to_vec()).collect::<Vec<_>>()).unwrap()
    }

    #[test]
    fn field_rejects_composites() {
        assert!(Field::new(4).is_err());
        assert!(Field::new(1).is_err());
        assert!(Field::new(0).is_err());
        assert_eq!(Field::new(7).unwrap().p(), 7);
    }

    #[test]
    fn inverses_in_f7() {
        let f = Field::new(7).unwrap();
        for a in 1..7 {
            assert_eq!(f.mul(a, f.inv(a)), 1);
        }
    }

    #[test]
    fn rref_zero_matrix() {
        let r = Matrix::zeros(f2(), 2, 2).rref();
        assert_eq!(r.rank(), 0);
        assert!(r.pivots.is_empty());
    }

    #[test]
    fn rref_identity_is_fixed() {
        let id = Matrix::identity(f2(), 3);
        let r = id.rref();
        assert_eq!(r.reduced, id);
        assert_eq!(r.rank(), 3);
    }

    #[test]
    fn rref_all_ones_over_f2() {
        let r = m(f2(), &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.reduced, m(f2(), &[&[1, 1], &[0, 0]]));
        assert_eq!(r.rank(), 1);
        assert_eq!(r.pivots, vec![0]);
    }

    #[test]
    fn kernel_examples() {
        assert_eq!(Matrix::identity(f2(), 4).kernel_basis().cols(), 0);
        assert_eq!(Matrix::zeros(f2(), 2, 3).kernel_basis().cols(), 3);
        let k = m(f2(), &[&[1, 1]]).kernel_basis();
        assert_eq!(k.cols(), 1);
        assert_eq!(k.column(0), vec![1, 1]);
    }

    #[test]
    fn solve_examples() {
        let f = f2();
        let b = vec![1, 0, 1];
        assert_eq!(Matrix::identity(f, 3).solve(&b).unwrap(), Some(b.clone()));
        assert_eq!(Matrix::zeros(f, 3, 3).solve(&b).unwrap(), None);
        let x = m(f, &[&[1, 1]]).solve(&[0]).unwrap().unwrap();
        // Oracle: the solution set of x + y = 0 over F_2.
        let solutions: Vec<Vec<Scalar>> = all_vectors(f, 2).filter(|v| (v[0] + v[1]) % 2 == 0).collect();
        assert!(solutions.contains(&x));
    }

    #[test]
    fn solve_rejects_bad_shapes() {
        let err = Matrix::identity(f2(), 2).solve(&[1, 0, 1]).unwrap_err();
        assert_eq!(err.code(), "dimension_mismatch");
    }

    #[test]
    fn subspace_examples() {
        let f = f2();
        let e1 = Matrix::column_vector(f, &[1, 0]);
        let e2 = Matrix::column_vector(f, &[0, 1]);
        let q = quotient(&Matrix::identity(f, 2), &e1).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.projection.mul(&e1).is_zero());
        assert_eq!(intersect(&e1, &e2).unwrap().cols(), 0);
        assert_eq!(sum(&e1, &e2).unwrap().cols(), 2);
        assert!(contains(&e1, &[1, 0]).unwrap());
        assert!(!contains(&e1, &[1, 1]).unwrap());
        assert!(intersect(&e1, &Matrix::identity(f, 3)).is_err());
    }

    #[test]
    fn quotient_projection_is_identity_on_representatives() {
        let f = Field::new(3).unwrap();
        let v = m(f, &[&[1, 0], &[1, 1], &[0, 2]]);
        let u = Matrix::column_vector(f, &[1, 1, 0]);
        let q = quotient(&v, &u).unwrap();
        assert_eq!(q.dim(), 1);
        assert!(q.projection.mul(&q.complement).is_identity());
        assert!(q.projection.mul(&u).is_zero());
    }

    #[test]
    fn coordinates_round_trip() {
        let f = Field::new(5).unwrap();
        let b = m(f, &[&[1, 0], &[2, 1], &[0, 3]]);
        let c = Coordinates::new(b.clone());
        let v = b.mul_vec(&[4, 2]);
        assert_eq!(c.coords(&v), vec![4, 2]);
        assert_eq!(c.coords_checked(&[1, 0, 0]), None);
    }

    #[test]
    fn projective_points_count() {
        assert_eq!(projective_points(Field::new(3).unwrap(), 2).count(), 4);
        assert_eq!(projective_points(f2(), 3).count(), 7);
    }

    #[test]
    fn inverse_and_nilpotence() {
        let f = Field::new(3).unwrap();
        let a = m(f, &[&[1, 2], &[0, 1]]);
        assert!(a.mul(&a.inverse().unwrap()).is_identity());
        assert!(m(f, &[&[0, 1], &[0, 0]]).is_nilpotent());
        assert!(m(f, &[&[1, 1], &[1, 1]]).inverse().is_none());
    }
}
