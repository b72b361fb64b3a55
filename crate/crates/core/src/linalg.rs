//! Dense exact matrices and canonical subspaces.
//!
//! Subspaces are stored in reduced row-echelon form, which makes equality a
//! plain comparison of row lists.

use std::fmt;

use crate::error::{Error, Result};
use crate::scalar::Scalar;

pub fn zero_vec<F: Scalar>(n: usize) -> Vec<F> {
    vec![F::zero(); n]
}

pub fn unit_vec<F: Scalar>(n: usize, i: usize) -> Vec<F> {
    let mut v = zero_vec(n);
    v[i] = F::one();
    v
}

pub fn is_zero_vec<F: Scalar>(v: &[F]) -> bool {
    v.iter().all(Scalar::is_zero)
}

pub fn dot<F: Scalar>(a: &[F], b: &[F]) -> F {
    let mut s = F::zero();
    for (x, y) in a.iter().zip(b) {
        s.add_product(x, y);
    }
    s
}

/// `y += c * x`
pub fn axpy<F: Scalar>(y: &mut [F], c: &F, x: &[F]) {
    if c.is_zero() {
        return;
    }
    for (yi, xi) in y.iter_mut().zip(x) {
        if !xi.is_zero() {
            *yi = yi.plus(&c.times(xi));
        }
    }
}

pub fn scaled<F: Scalar>(c: &F, x: &[F]) -> Vec<F> {
    x.iter().map(|xi| c.times(xi)).collect()
}

pub fn add_vecs<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.plus(y)).collect()
}

pub fn sub_vecs<F: Scalar>(a: &[F], b: &[F]) -> Vec<F> {
    a.iter().zip(b).map(|(x, y)| x.minus(y)).collect()
}

/// Linear combination `Σ coeffs[i] * rows[i]`.
pub fn combine<F: Scalar>(coeffs: &[F], rows: &[Vec<F>], n: usize) -> Vec<F> {
    let mut out = zero_vec(n);
    for (c, r) in coeffs.iter().zip(rows) {
        axpy(&mut out, c, r);
    }
    out
}

fn check_len(expected: usize, found: usize) -> Result<()> {
    if expected == found {
        Ok(())
    } else {
        Err(Error::DimensionMismatch { expected, found })
    }
}

#[derive(Clone, PartialEq, Eq)]
pub struct Matrix<F> {
    rows: usize,
    cols: usize,
    data: Vec<F>,
}

impl<F: Scalar> Matrix<F> {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        Matrix { rows, cols, data: vec![F::zero(); rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, F::one());
        }
        m
    }

    /// Builds a matrix from a list of rows; every row needs `cols` entries.
    pub fn from_rows(rows: Vec<Vec<F>>, cols: usize) -> Result<Self> {
        let n = rows.len();
        let mut data = Vec::with_capacity(n * cols);
        for r in rows {
            check_len(cols, r.len())?;
            data.extend(r);
        }
        Ok(Matrix { rows: n, cols, data })
    }

    pub fn from_fn(rows: usize, cols: usize, f: impl Fn(usize, usize) -> F) -> Self {
        let mut data = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                data.push(f(i, j));
            }
        }
        Matrix { rows, cols, data }
    }

    pub fn nrows(&self) -> usize {
        self.rows
    }

    pub fn ncols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> &F {
        &self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: F) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[F] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn column(&self, j: usize) -> Vec<F> {
        (0..self.rows).map(|i| self.get(i, j).clone()).collect()
    }

    pub fn to_rows(&self) -> Vec<Vec<F>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Scalar::is_zero)
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).clone())
    }

    pub fn conjugate_transpose(&self) -> Self {
        Self::from_fn(self.cols, self.rows, |i, j| self.get(j, i).conjugate())
    }

    pub fn add(&self, o: &Self) -> Result<Self> {
        check_len(self.rows, o.rows)?;
        check_len(self.cols, o.cols)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.plus(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn sub(&self, o: &Self) -> Result<Self> {
        check_len(self.rows, o.rows)?;
        check_len(self.cols, o.cols)?;
        let data = self.data.iter().zip(&o.data).map(|(a, b)| a.minus(b)).collect();
        Ok(Matrix { rows: self.rows, cols: self.cols, data })
    }

    pub fn scale(&self, c: &F) -> Self {
        let data = self.data.iter().map(|a| a.times(c)).collect();
        Matrix { rows: self.rows, cols: self.cols, data }
    }

    pub fn mul(&self, o: &Self) -> Result<Self> {
        check_len(self.cols, o.rows)?;
        let mut out = Self::zeros(self.rows, o.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.get(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..o.cols {
                    let b = o.get(k, j);
                    if !b.is_zero() {
                        out.data[i * o.cols + j].add_product(a, b);
                    }
                }
            }
        }
        Ok(out)
    }

    pub fn mul_vec(&self, v: &[F]) -> Result<Vec<F>> {
        check_len(self.cols, v.len())?;
        Ok((0..self.rows).map(|i| dot(self.row(i), v)).collect())
    }

    pub fn trace(&self) -> F {
        let mut s = F::zero();
        for i in 0..self.rows.min(self.cols) {
            s = s.plus(self.get(i, i));
        }
        s
    }

    /// Reduced row-echelon form and its pivot columns.
    pub fn rref(&self) -> (Self, Vec<usize>) {
        let mut m = self.clone();
        let pivots = m.rref_in_place();
        (m, pivots)
    }

    fn swap_rows(&mut self, a: usize, b: usize) {
        if a == b {
            return;
        }
        for j in 0..self.cols {
            self.data.swap(a * self.cols + j, b * self.cols + j);
        }
    }

    fn rref_in_place(&mut self) -> Vec<usize> {
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..self.cols {
            if r == self.rows {
                break;
            }
            let Some(p) = (r..self.rows).find(|&i| !self.get(i, c).is_zero()) else {
                continue;
            };
            self.swap_rows(r, p);
            let inv = self.get(r, c).inverse().expect("nonzero pivot");
            for j in c..self.cols {
                let v = self.get(r, j).times(&inv);
                self.set(r, j, v);
            }
            let pivot_row: Vec<F> = self.row(r)[c..].to_vec();
            for i in 0..self.rows {
                if i == r {
                    continue;
                }
                let f = self.get(i, c).clone();
                if f.is_zero() {
                    continue;
                }
                for (off, pv) in pivot_row.iter().enumerate() {
                    if !pv.is_zero() {
                        let j = c + off;
                        let v = self.get(i, j).minus(&f.times(pv));
                        self.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        pivots
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Basis of the right kernel `{x : M x = 0}`.
    pub fn nullspace(&self) -> Vec<Vec<F>> {
        let (r, pivots) = self.rref();
        let mut is_pivot = vec![false; self.cols];
        for &p in &pivots {
            is_pivot[p] = true;
        }
        let mut basis = Vec::new();
        for free in (0..self.cols).filter(|&j| !is_pivot[j]) {
            let mut v = unit_vec(self.cols, free);
            for (i, &p) in pivots.iter().enumerate() {
                v[p] = r.get(i, free).negated();
            }
            basis.push(v);
        }
        basis
    }

    /// Solves `self * X = rhs` for every column of `rhs`; `None` if inconsistent.
    pub fn solve(&self, rhs: &Self) -> Result<Option<Self>> {
        check_len(self.rows, rhs.rows)?;
        let n = self.cols;
        let aug = Self::from_fn(self.rows, n + rhs.cols, |i, j| {
            if j < n {
                self.get(i, j).clone()
            } else {
                rhs.get(i, j - n).clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.iter().any(|&p| p >= n) {
            return Ok(None);
        }
        let mut x = Self::zeros(n, rhs.cols);
        for (i, &p) in pivots.iter().enumerate() {
            for j in 0..rhs.cols {
                x.set(p, j, r.get(i, n + j).clone());
            }
        }
        Ok(Some(x))
    }

    pub fn inverse(&self) -> Result<Self> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        match self.solve(&Self::identity(self.rows))? {
            Some(x) if self.rank() == self.rows => Ok(x),
            _ => Err(Error::Singular),
        }
    }

    pub fn determinant(&self) -> Result<F> {
        if !self.is_square() {
            return Err(Error::DimensionMismatch { expected: self.rows, found: self.cols });
        }
        let mut m = self.clone();
        let n = self.rows;
        let mut det = F::one();
        for c in 0..n {
            let Some(p) = (c..n).find(|&i| !m.get(i, c).is_zero()) else {
                return Ok(F::zero());
            };
            if p != c {
                m.swap_rows(p, c);
                det = det.negated();
            }
            let pv = m.get(c, c).clone();
            det = det.times(&pv);
            let inv = pv.inverse()?;
            for i in c + 1..n {
                let f = m.get(i, c).times(&inv);
                if f.is_zero() {
                    continue;
                }
                for j in c..n {
                    let v = m.get(i, j).minus(&f.times(m.get(c, j)));
                    m.set(i, j, v);
                }
            }
        }
        Ok(det)
    }

    pub fn is_symmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows).all(|i| (i + 1..self.rows).all(|j| self.get(i, j) == self.get(j, i)))
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.rows).all(|j| *self.get(i, j) == self.get(j, i).negated()))
    }

    pub fn is_hermitian(&self) -> bool {
        self.is_square()
            && (0..self.rows)
                .all(|i| (i..self.rows).all(|j| *self.get(i, j) == self.get(j, i).conjugate()))
    }
}

impl<F: Scalar> fmt::Debug for Matrix<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "Matrix {}x{} [", self.rows, self.cols)?;
        for i in 0..self.rows {
            let cells: Vec<String> = self.row(i).iter().map(|x| x.to_string()).collect();
            writeln!(f, "  [{}]", cells.join(", "))?;
        }
        write!(f, "]")
    }
}

/// Linear subspace of `F^n`, held as a reduced row-echelon basis.
#[derive(Clone, PartialEq, Eq)]
pub struct Subspace<F> {
    ambient: usize,
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
}

impl<F: Scalar> Subspace<F> {
    /// Span of `vectors`; dependent vectors are dropped.
    pub fn span(ambient: usize, vectors: Vec<Vec<F>>) -> Result<Self> {
        for v in &vectors {
            check_len(ambient, v.len())?;
        }
        let m = Matrix::from_rows(vectors, ambient)?;
        let (r, pivots) = m.rref();
        let rows = (0..pivots.len()).map(|i| r.row(i).to_vec()).collect();
        Ok(Subspace { ambient, rows, pivots })
    }

    pub fn zero(ambient: usize) -> Self {
        Subspace { ambient, rows: Vec::new(), pivots: Vec::new() }
    }

    pub fn full(ambient: usize) -> Self {
        Subspace {
            ambient,
            rows: (0..ambient).map(|i| unit_vec(ambient, i)).collect(),
            pivots: (0..ambient).collect(),
        }
    }

    /// Span of the listed coordinate axes.
    pub fn coordinate(ambient: usize, axes: &[usize]) -> Self {
        let v = axes.iter().map(|&i| unit_vec(ambient, i)).collect();
        Self::span(ambient, v).expect("axis lengths match")
    }

    pub fn ambient_dim(&self) -> usize {
        self.ambient
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    pub fn is_zero(&self) -> bool {
        self.rows.is_empty()
    }

    pub fn is_full(&self) -> bool {
        self.rows.len() == self.ambient
    }

    pub fn basis(&self) -> &[Vec<F>] {
        &self.rows
    }

    pub fn pivots(&self) -> &[usize] {
        &self.pivots
    }

    /// Columns without a pivot; their unit vectors span a complement.
    pub fn free_columns(&self) -> Vec<usize> {
        let mut is_pivot = vec![false; self.ambient];
        for &p in &self.pivots {
            is_pivot[p] = true;
        }
        (0..self.ambient).filter(|&j| !is_pivot[j]).collect()
    }

    /// Canonical representative of `v` modulo this subspace: zero at every pivot.
    pub fn reduce(&self, v: &[F]) -> Vec<F> {
        let mut out = v.to_vec();
        for (row, &p) in self.rows.iter().zip(&self.pivots) {
            let c = out[p].clone();
            if !c.is_zero() {
                axpy(&mut out, &c.negated(), row);
            }
        }
        out
    }

    /// Coordinates of `v + self` in the quotient, indexed by [`Self::free_columns`].
    pub fn quotient_coords(&self, v: &[F]) -> Vec<F> {
        let r = self.reduce(v);
        self.free_columns().into_iter().map(|j| r[j].clone()).collect()
    }

    /// Matrix of the quotient map `F^n → F^n / self`.
    pub fn quotient_matrix(&self) -> Matrix<F> {
        let free = self.free_columns();
        let mut m = Matrix::zeros(free.len(), self.ambient);
        for (i, &c) in free.iter().enumerate() {
            m.set(i, c, F::one());
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                if !row[c].is_zero() {
                    m.set(i, p, row[c].negated());
                }
            }
        }
        m
    }

    pub fn contains_vec(&self, v: &[F]) -> bool {
        v.len() == self.ambient && is_zero_vec(&self.reduce(v))
    }

    pub fn contains(&self, other: &Self) -> bool {
        other.ambient == self.ambient && other.rows.iter().all(|v| self.contains_vec(v))
    }

    /// Coordinates of `v` with respect to [`Self::basis`], if `v` lies in the subspace.
    pub fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        if !self.contains_vec(v) {
            return None;
        }
        Some(self.pivots.iter().map(|&p| v[p].clone()).collect())
    }

    pub fn vector(&self, coords: &[F]) -> Vec<F> {
        combine(coords, &self.rows, self.ambient)
    }

    pub fn sum(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient, other.ambient)?;
        let mut v = self.rows.clone();
        v.extend(other.rows.iter().cloned());
        Self::span(self.ambient, v)
    }

    /// Vectors `y` with `b · y = 0` for every basis row `b`.
    pub fn annihilator(&self) -> Vec<Vec<F>> {
        let mut out = Vec::new();
        for free in self.free_columns() {
            let mut v = unit_vec(self.ambient, free);
            for (row, &p) in self.rows.iter().zip(&self.pivots) {
                v[p] = row[free].negated();
            }
            out.push(v);
        }
        out
    }

    pub fn intersect(&self, other: &Self) -> Result<Self> {
        check_len(self.ambient, other.ambient)?;
        if self.is_zero() || other.is_full() {
            return Ok(self.clone());
        }
        if other.is_zero() || self.is_full() {
            return Ok(other.clone());
        }
        let ann = other.annihilator();
        let c = Matrix::from_fn(ann.len(), self.dim(), |k, i| dot(&self.rows[i], &ann[k]));
        let vs = c.nullspace().iter().map(|a| self.vector(a)).collect();
        Self::span(self.ambient, vs)
    }

    /// Image under the linear map `m` (acting on column vectors).
    pub fn image(&self, m: &Matrix<F>) -> Result<Self> {
        check_len(self.ambient, m.ncols())?;
        let vs = self.rows.iter().map(|r| m.mul_vec(r)).collect::<Result<Vec<_>>>()?;
        Self::span(m.nrows(), vs)
    }

    /// Preimage of `target` under `m`.
    pub fn preimage(m: &Matrix<F>, target: &Self) -> Result<Self> {
        check_len(target.ambient, m.nrows())?;
        let p = target.quotient_matrix().mul(m)?;
        Self::span(m.ncols(), p.nullspace())
    }

    pub fn as_matrix(&self) -> Matrix<F> {
        Matrix::from_rows(self.rows.clone(), self.ambient).expect("row lengths match")
    }
}

impl<F: Scalar> fmt::Debug for Subspace<F> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Subspace(dim {} in {}) ", self.dim(), self.ambient)?;
        let rows: Vec<String> = self
            .rows
            .iter()
            .map(|r| format!("[{}]", r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",")))
            .collect();
        write!(f, "{}", rows.join(" "))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::{q, Q};

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
            .unwrap()
    }

    fn qv(v: &[i64]) -> Vec<Q> {
        v.iter().map(|&x| q(x)).collect()
    }

    #[test]
    fn rref_and_nullspace() {
        let m = qm(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(m.rank(), 2);
        let ns = m.nullspace();
        assert_eq!(ns.len(), 1);
        assert!(is_zero_vec(&m.mul_vec(&ns[0]).unwrap()));
    }

    #[test]
    fn inverse_and_determinant() {
        let m = qm(&[&[2, 1], &[7, 4]]);
        assert_eq!(m.determinant().unwrap(), q(1));
        let inv = m.inverse().unwrap();
        assert_eq!(m.mul(&inv).unwrap(), Matrix::identity(2));
        assert_eq!(qm(&[&[1, 2], &[2, 4]]).inverse(), Err(Error::Singular));
    }

    #[test]
    fn subspace_equality_is_basis_independent() {
        let a = Subspace::span(3, vec![qv(&[1, 1, 0]), qv(&[0, 1, 1])]).unwrap();
        let b = Subspace::span(3, vec![qv(&[1, 2, 1]), qv(&[1, 0, -1]), qv(&[2, 2, 0])]).unwrap();
        assert_eq!(a, b);
        assert_eq!(a.dim(), 2);
    }

    #[test]
    fn intersection_and_sum() {
        let a = Subspace::coordinate(4, &[0, 1]);
        let b = Subspace::span(4, vec![qv(&[1, 0, 1, 0]), qv(&[0, 1, 0, 0])]).unwrap();
        let i = a.intersect(&b).unwrap();
        assert_eq!(i, Subspace::coordinate(4, &[1]));
        assert_eq!(a.sum(&b).unwrap().dim(), 3);
    }

    #[test]
    fn quotient_coordinates() {
        let w = Subspace::span(3, vec![qv(&[1, 1, 0])]).unwrap();
        let v = qv(&[3, 5, 7]);
        assert_eq!(w.quotient_coords(&v), qv(&[2, 7]));
        let p = w.quotient_matrix();
        assert_eq!(p.mul_vec(&v).unwrap(), qv(&[2, 7]));
        assert!(is_zero_vec(&w.quotient_coords(&qv(&[2, 2, 0]))));
    }

    #[test]
    fn solve_system() {
        let a = qm(&[&[1, 1], &[1, -1]]);
        let b = qm(&[&[3], &[1]]);
        let x = a.solve(&b).unwrap().unwrap();
        assert_eq!(x.column(0), qv(&[2, 1]));
        let sing = qm(&[&[1, 1], &[1, 1]]);
        assert!(sing.solve(&b).unwrap().is_none());
    }
}
