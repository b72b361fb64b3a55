//! Bilinear forms and exact signatures.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::linalg::{dot, Matrix, Subspace};
use crate::scalar::{sign, Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Symmetry {
    Symmetric,
    Antisymmetric,
    Hermitian,
}

#[derive(Clone, PartialEq, Eq)]
pub struct BilinearForm<F> {
    matrix: Matrix<F>,
    symmetry: Symmetry,
}

/// Counts of positive, negative and zero entries after diagonalization.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Signature {
    pub pos: usize,
    pub neg: usize,
    pub zero: usize,
}

impl Signature {
    pub fn new(pos: usize, neg: usize, zero: usize) -> Self {
        Signature { pos, neg, zero }
    }

    pub fn swapped(self) -> Self {
        Signature { pos: self.neg, neg: self.pos, zero: self.zero }
    }

    /// `(max(pos, neg), min(pos, neg))`, for comparisons up to overall sign.
    pub fn unordered(self) -> (usize, usize) {
        (self.pos.max(self.neg), self.pos.min(self.neg))
    }

    pub fn dim(self) -> usize {
        self.pos + self.neg + self.zero
    }
}

impl<F: Scalar> std::fmt::Debug for BilinearForm<F> {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "BilinearForm({:?}, {:?})", self.symmetry, self.matrix)
    }
}

impl<F: Scalar> BilinearForm<F> {
    pub fn new(matrix: Matrix<F>, symmetry: Symmetry) -> Result<Self> {
        if !matrix.is_square() {
            return Err(Error::DimensionMismatch { expected: matrix.nrows(), found: matrix.ncols() });
        }
        let ok = match symmetry {
            Symmetry::Symmetric => matrix.is_symmetric(),
            Symmetry::Antisymmetric => matrix.is_antisymmetric(),
            Symmetry::Hermitian => matrix.is_hermitian(),
        };
        if !ok {
            return Err(Error::Format(format!("matrix is not {symmetry:?}")));
        }
        Ok(BilinearForm { matrix, symmetry })
    }

    pub fn matrix(&self) -> &Matrix<F> {
        &self.matrix
    }

    pub fn symmetry(&self) -> Symmetry {
        self.symmetry
    }

    pub fn dim(&self) -> usize {
        self.matrix.nrows()
    }

    /// `B(x, y) = xᵀ M y`, with `x` conjugated for hermitian forms.
    pub fn eval(&self, x: &[F], y: &[F]) -> Result<F> {
        let my = self.matrix.mul_vec(y)?;
        if x.len() != my.len() {
            return Err(Error::DimensionMismatch { expected: my.len(), found: x.len() });
        }
        if self.symmetry == Symmetry::Hermitian {
            let xc: Vec<F> = x.iter().map(Scalar::conjugate).collect();
            Ok(dot(&xc, &my))
        } else {
            Ok(dot(x, &my))
        }
    }

    /// `{x : B(x, ·) = 0}`.
    pub fn radical(&self) -> Subspace<F> {
        Subspace::span(self.dim(), self.matrix.transpose().nullspace()).expect("square form")
    }

    pub fn is_nondegenerate(&self) -> bool {
        self.matrix.rank() == self.dim()
    }

    /// Restriction to the span of `basis` (rows), as a form on coordinates.
    pub fn restrict(&self, basis: &[Vec<F>]) -> Result<Self> {
        let k = basis.len();
        let mut m = Matrix::zeros(k, k);
        for i in 0..k {
            for j in 0..k {
                m.set(i, j, self.eval(&basis[i], &basis[j])?);
            }
        }
        Ok(BilinearForm { matrix: m, symmetry: self.symmetry })
    }
}

impl BilinearForm<Q> {
    pub fn signature(&self) -> Result<Signature> {
        if self.symmetry != Symmetry::Symmetric {
            return Err(Error::Precondition("signature needs a symmetric form".into()));
        }
        Ok(symmetric_signature(&self.matrix))
    }
}

/// Diagonal of a congruent diagonal form `PᵀAP`, by symmetric elimination.
pub fn congruence_diagonal(a: &Matrix<Q>) -> Vec<Q> {
    let n = a.nrows();
    let mut m = a.clone();
    let mut diag = Vec::with_capacity(n);
    let swap = |m: &mut Matrix<Q>, i: usize, j: usize| {
        if i == j {
            return;
        }
        for c in 0..n {
            let (x, y) = (m.get(i, c).clone(), m.get(j, c).clone());
            m.set(i, c, y);
            m.set(j, c, x);
        }
        for r in 0..n {
            let (x, y) = (m.get(r, i).clone(), m.get(r, j).clone());
            m.set(r, i, y);
            m.set(r, j, x);
        }
    };
    for k in 0..n {
        if let Some(p) = (k..n).find(|&i| !m.get(i, i).is_zero()) {
            swap(&mut m, k, p);
        } else if let Some((i, j)) =
            (k..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).find(|&(i, j)| !m.get(i, j).is_zero())
        {
            // row_i += row_j, col_i += col_j makes the (i, i) entry 2·m[i][j].
            for c in 0..n {
                let v = m.get(i, c).plus(m.get(j, c));
                m.set(i, c, v);
            }
            for r in 0..n {
                let v = m.get(r, i).plus(m.get(r, j));
                m.set(r, i, v);
            }
            swap(&mut m, k, i);
        } else {
            diag.extend(std::iter::repeat_with(Q::zero).take(n - k));
            return diag;
        }
        let p = m.get(k, k).clone();
        let inv = p.inverse().expect("nonzero pivot");
        for r in k + 1..n {
            let f = m.get(r, k).times(&inv);
            if f.is_zero() {
                continue;
            }
            for c in k..n {
                let v = m.get(r, c).minus(&f.times(m.get(k, c)));
                m.set(r, c, v);
            }
        }
        for c in k + 1..n {
            m.set(c, k, Q::zero());
            m.set(k, c, Q::zero());
        }
        diag.push(p);
    }
    diag
}

pub fn symmetric_signature(a: &Matrix<Q>) -> Signature {
    let d = congruence_diagonal(a);
    let pos = d.iter().filter(|x| sign(x) > 0).count();
    let neg = d.iter().filter(|x| sign(x) < 0).count();
    Signature::new(pos, neg, d.len() - pos - neg)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn qm(rows: &[&[i64]]) -> Matrix<Q> {
        let cols = rows[0].len();
        Matrix::from_rows(rows.iter().map(|r| r.iter().map(|&x| q(x)).collect()).collect(), cols)
            .unwrap()
    }

    #[test]
    fn hyperbolic_plane() {
        assert_eq!(symmetric_signature(&qm(&[&[0, 1], &[1, 0]])), Signature::new(1, 1, 0));
    }

    #[test]
    fn mixed_signature_with_kernel() {
        let m = qm(&[&[1, 2, 0], &[2, 1, 0], &[0, 0, 0]]);
        assert_eq!(symmetric_signature(&m), Signature::new(1, 1, 1));
        let f = BilinearForm::new(m, Symmetry::Symmetric).unwrap();
        assert_eq!(f.radical().dim(), 1);
        assert!(!f.is_nondegenerate());
    }

    #[test]
    fn symmetry_is_checked() {
        assert!(BilinearForm::new(qm(&[&[0, 1], &[2, 0]]), Symmetry::Symmetric).is_err());
        assert!(BilinearForm::new(qm(&[&[0, 1], &[-1, 0]]), Symmetry::Antisymmetric).is_ok());
    }
}
