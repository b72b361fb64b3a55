//! Classical matrix Lie algebras and their real forms.
//!
//! Each real form is given by an explicit basis of complex matrices; the
//! structure constants are read off by exact coordinate solves.

use crate::complexify::realify_vec;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{Qi, Scalar, Q};

pub type CMat = Matrix<Qi>;

pub fn unit(n: usize, i: usize, j: usize) -> CMat {
    let mut m = Matrix::zeros(n, n);
    m.set(i, j, Qi::one());
    m
}

pub fn commutator(a: &CMat, b: &CMat) -> CMat {
    commutator_any(a, b)
}

fn times_i(m: &CMat) -> CMat {
    m.scale(&Qi::i())
}

fn flatten(m: &CMat) -> Vec<Qi> {
    flatten_any(m)
}

/// Coordinates with respect to a fixed list of independent vectors.
struct Coordinates<F> {
    rows: Vec<Vec<F>>,
    pivots: Vec<usize>,
    inverse: Matrix<F>,
}

impl<F: Scalar> Coordinates<F> {
    fn new(rows: Vec<Vec<F>>) -> Result<Self> {
        let len = rows.first().map_or(0, Vec::len);
        let b = Matrix::from_rows(rows.clone(), len)?;
        let (_, pivots) = b.rref();
        if pivots.len() != rows.len() {
            return Err(Error::Parameter("basis matrices are dependent".into()));
        }
        let square = Matrix::from_fn(rows.len(), rows.len(), |k, c| rows[k][pivots[c]].clone());
        let inverse = square.transpose().inverse()?;
        Ok(Coordinates { rows, pivots, inverse })
    }

    fn coords(&self, v: &[F]) -> Option<Vec<F>> {
        let at: Vec<F> = self.pivots.iter().map(|&p| v[p].clone()).collect();
        let a = self.inverse.mul_vec(&at).expect("square");
        let back = crate::linalg::combine(&a, &self.rows, v.len());
        (back == v).then_some(a)
    }
}

fn flatten_any<F: Scalar>(m: &Matrix<F>) -> Vec<F> {
    (0..m.nrows()).flat_map(|i| m.row(i).to_vec()).collect()
}

fn commutator_any<F: Scalar>(a: &Matrix<F>, b: &Matrix<F>) -> Matrix<F> {
    a.mul(b).expect("square").sub(&b.mul(a).expect("square")).expect("square")
}

/// Matrix algebra spanned by `mats` over their own field.
pub fn matrix_algebra<F: Scalar>(names: Vec<String>, mats: &[Matrix<F>]) -> Result<LieAlgebra<F>> {
    let c = Coordinates::new(mats.iter().map(flatten_any).collect())?;
    let mut brackets = Vec::new();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let v = c
                .coords(&flatten_any(&commutator_any(&mats[i], &mats[j])))
                .ok_or_else(|| Error::NotSubalgebra(format!("[{}, {}]", names[i], names[j])))?;
            brackets.push((i, j, v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()));
        }
    }
    LieAlgebra::from_brackets(names, brackets)
}

/// Complex matrix algebra spanned (over ℂ) by `mats`.
pub fn complex_matrix_algebra(names: Vec<String>, mats: &[CMat]) -> Result<LieAlgebra<Qi>> {
    matrix_algebra(names, mats)
}

/// Span of `gens` closed under commutators, as an echelon list of matrices.
pub fn commutator_closure<F: Scalar>(n: usize, gens: &[Matrix<F>]) -> Vec<Matrix<F>> {
    let unflatten = |v: &[F]| Matrix::from_fn(n, n, |i, j| v[i * n + j].clone());
    let mut span = Subspace::span(n * n, gens.iter().map(flatten_any).collect()).expect("lengths match");
    loop {
        let mats: Vec<Matrix<F>> = span.basis().iter().map(|v| unflatten(v)).collect();
        let mut rows = span.basis().to_vec();
        for i in 0..mats.len() {
            for j in i + 1..mats.len() {
                rows.push(flatten_any(&commutator_any(&mats[i], &mats[j])));
            }
        }
        let next = Subspace::span(n * n, rows).expect("lengths match");
        if next.dim() == span.dim() {
            return mats;
        }
        span = next;
    }
}

/// Real matrix algebra spanned (over ℝ) by `mats`.
pub fn real_matrix_algebra(names: Vec<String>, mats: &[CMat]) -> Result<LieAlgebra<Q>> {
    let c = Coordinates::new(mats.iter().map(|m| realify_vec(&flatten(m))).collect())?;
    let mut brackets = Vec::new();
    for i in 0..mats.len() {
        for j in i + 1..mats.len() {
            let v = c
                .coords(&realify_vec(&flatten(&commutator(&mats[i], &mats[j]))))
                .ok_or_else(|| Error::NotSubalgebra(format!("[{}, {}]", names[i], names[j])))?;
            brackets.push((i, j, v.into_iter().enumerate().filter(|(_, x)| !x.is_zero()).collect()));
        }
    }
    LieAlgebra::from_brackets(names, brackets)
}

/// A named basis of matrices.
#[derive(Clone, Debug)]
pub struct MatrixBasis {
    pub names: Vec<String>,
    pub mats: Vec<CMat>,
}

impl MatrixBasis {
    pub fn len(&self) -> usize {
        self.mats.len()
    }

    pub fn is_empty(&self) -> bool {
        self.mats.is_empty()
    }

    pub fn size(&self) -> usize {
        self.mats.first().map_or(0, Matrix::nrows)
    }

    fn push(&mut self, name: String, m: CMat) {
        self.names.push(name);
        self.mats.push(m);
    }

    pub fn complex_algebra(&self) -> Result<LieAlgebra<Qi>> {
        complex_matrix_algebra(self.names.clone(), &self.mats)
    }

    pub fn real_algebra(&self) -> Result<LieAlgebra<Q>> {
        real_matrix_algebra(self.names.clone(), &self.mats)
    }

    /// Complex coordinates of `m` in this basis.
    pub fn coords(&self, m: &CMat) -> Option<Vec<Qi>> {
        Coordinates::new(self.mats.iter().map(flatten).collect()).ok()?.coords(&flatten(m))
    }

    /// `{ξ : ξ·v ∈ ℂv}`, as a complex subspace in basis coordinates.
    pub fn line_stabilizer(&self, v: &[Qi]) -> Subspace<Qi> {
        let n = self.size();
        let images: Vec<Vec<Qi>> = self.mats.iter().map(|m| m.mul_vec(v).expect("size")).collect();
        let mut rows = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                let row: Vec<Qi> = images
                    .iter()
                    .map(|w| w[a].times(&v[b]).minus(&w[b].times(&v[a])))
                    .collect();
                rows.push(row);
            }
        }
        let m = Matrix::from_rows(rows, self.len()).expect("lengths match");
        Subspace::span(self.len(), m.nullspace()).expect("lengths match")
    }
}

fn check(cond: bool, what: &str) -> Result<()> {
    if cond {
        Ok(())
    } else {
        Err(Error::Parameter(what.to_string()))
    }
}

/// `E_ij` (`i != j`) and `H_k = E_kk - E_{k+1,k+1}`: a real basis of `sl_n(ℝ)`
/// and a complex basis of `sl_n(ℂ)`.
pub fn sl_basis(n: usize) -> Result<MatrixBasis> {
    check(n >= 2, "sl needs n >= 2")?;
    let mut b = MatrixBasis { names: Vec::new(), mats: Vec::new() };
    for i in 0..n {
        for j in 0..n {
            if i != j {
                b.push(format!("E{}{}", i + 1, j + 1), unit(n, i, j));
            }
        }
    }
    for k in 0..n - 1 {
        let h = unit(n, k, k).sub(&unit(n, k + 1, k + 1)).expect("size");
        b.push(format!("H{}", k + 1), h);
    }
    Ok(b)
}

/// Anti-hermitian traceless matrices for the form `diag(I_p, -I_q)`.
pub fn su_basis(p: usize, q: usize) -> Result<MatrixBasis> {
    let n = p + q;
    check(n >= 2, "su needs p + q >= 2")?;
    let eps = |a: usize| if a < p { 1 } else { -1 };
    let mut b = MatrixBasis { names: Vec::new(), mats: Vec::new() };
    for a in 0..n {
        for c in a + 1..n {
            let (e, f) = (unit(n, a, c), unit(n, c, a));
            let (x, y) = if eps(a) == eps(c) {
                (e.sub(&f)?, times_i(&e.add(&f)?))
            } else {
                (e.add(&f)?, times_i(&e.sub(&f)?))
            };
            b.push(format!("X{}{}", a + 1, c + 1), x);
            b.push(format!("Y{}{}", a + 1, c + 1), y);
        }
    }
    for k in 0..n - 1 {
        let h = unit(n, k, k).sub(&unit(n, k + 1, k + 1))?;
        b.push(format!("iH{}", k + 1), times_i(&h));
    }
    Ok(b)
}

pub fn so_basis(n: usize) -> Result<MatrixBasis> {
    check(n >= 2, "so needs n >= 2")?;
    let mut b = MatrixBasis { names: Vec::new(), mats: Vec::new() };
    for a in 0..n {
        for c in a + 1..n {
            b.push(format!("R{}{}", a + 1, c + 1), unit(n, a, c).sub(&unit(n, c, a))?);
        }
    }
    Ok(b)
}

pub fn u_basis(n: usize) -> Result<MatrixBasis> {
    let mut b = su_basis(n, 0)?;
    b.push("iI".into(), times_i(&Matrix::identity(n)));
    Ok(b)
}

/// Real solutions `X` of the real-linear conditions `f(X) = 0` on `n × n` matrices.
fn real_solutions(n: usize, conditions: &[&dyn Fn(&CMat) -> CMat]) -> Vec<CMat> {
    let mut gens = Vec::with_capacity(2 * n * n);
    for i in 0..n {
        for j in 0..n {
            gens.push(unit(n, i, j));
        }
    }
    for i in 0..n {
        for j in 0..n {
            gens.push(times_i(&unit(n, i, j)));
        }
    }
    let cols: Vec<Vec<Q>> = gens
        .iter()
        .map(|g| conditions.iter().flat_map(|f| realify_vec(&flatten(&f(g)))).collect())
        .collect();
    let rows = cols.first().map_or(0, Vec::len);
    let m = Matrix::from_fn(rows, gens.len(), |r, c| cols[c][r].clone());
    m.nullspace()
        .into_iter()
        .map(|x| {
            let mut out = Matrix::zeros(n, n);
            for (k, g) in gens.iter().enumerate() {
                if !x[k].is_zero() {
                    out = out.add(&g.scale(&Qi::from_q(x[k].clone()))).expect("size");
                }
            }
            out
        })
        .collect()
}

/// `sp(p,q) = sp_{2m}(ℂ) ∩ u(2p, 2q)` with `m = p + q`, on `ℂ^{2m}` with
/// symplectic form `[[0, I_m], [-I_m, 0]]` and hermitian form
/// `diag(I_p, -I_q, I_p, -I_q)`.
pub fn sp_basis(p: usize, q: usize) -> Result<MatrixBasis> {
    let m = p + q;
    check(m >= 1, "sp needs p + q >= 1")?;
    let n = 2 * m;
    let mut omega = Matrix::zeros(n, n);
    let mut herm = Matrix::zeros(n, n);
    for k in 0..m {
        omega.set(k, m + k, Qi::one());
        omega.set(m + k, k, Qi::from_int(-1));
        let s = if k < p { 1 } else { -1 };
        herm.set(k, k, Qi::from_int(s));
        herm.set(m + k, m + k, Qi::from_int(s));
    }
    let symplectic = |x: &CMat| x.transpose().mul(&omega).expect("size").add(&omega.mul(x).expect("size")).expect("size");
    let unitary = |x: &CMat| {
        x.conjugate_transpose().mul(&herm).expect("size").add(&herm.mul(x).expect("size")).expect("size")
    };
    let mats = real_solutions(n, &[&symplectic, &unitary]);
    let names = (0..mats.len()).map(|k| format!("S{}", k + 1)).collect();
    let b = MatrixBasis { names, mats };
    check(b.len() == m * (2 * m + 1), "sp(p,q) dimension")?;
    Ok(b)
}

pub fn build_su(p: usize, q: usize) -> Result<LieAlgebra<Q>> {
    su_basis(p, q)?.real_algebra()
}

pub fn build_sl_real(n: usize) -> Result<LieAlgebra<Q>> {
    sl_basis(n)?.real_algebra()
}

pub fn build_sl_complex(n: usize) -> Result<LieAlgebra<Qi>> {
    sl_basis(n)?.complex_algebra()
}

/// `sl_n(ℂ)` as a real algebra of dimension `2(n² - 1)`.
pub fn build_sl_complex_as_real(n: usize) -> Result<LieAlgebra<Q>> {
    Ok(crate::complexify::realify(&build_sl_complex(n)?))
}

pub fn build_sp(p: usize, q: usize) -> Result<LieAlgebra<Q>> {
    sp_basis(p, q)?.real_algebra()
}

pub fn build_so(n: usize) -> Result<LieAlgebra<Q>> {
    so_basis(n)?.real_algebra()
}

pub fn build_u(n: usize) -> Result<LieAlgebra<Q>> {
    u_basis(n)?.real_algebra()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn classical_dimensions() {
        assert_eq!(build_su(2, 1).unwrap().dim(), 8);
        assert_eq!(build_sl_real(3).unwrap().dim(), 8);
        assert_eq!(build_so(4).unwrap().dim(), 6);
        assert_eq!(build_u(2).unwrap().dim(), 4);
        assert_eq!(build_sp(1, 1).unwrap().dim(), 10);
        assert_eq!(build_sl_complex_as_real(2).unwrap().dim(), 6);
    }

    #[test]
    fn builders_validate() {
        for a in [build_su(2, 1), build_su(3, 0), build_sl_real(3), build_so(4), build_u(2), build_sp(1, 1)] {
            assert!(a.unwrap().validate().passed());
        }
    }

    #[test]
    fn line_stabilizer_is_parabolic() {
        let b = sl_basis(3).unwrap();
        let v = vec![Qi::one(), Qi::zero(), Qi::zero()];
        let s = b.line_stabilizer(&v);
        assert_eq!(s.dim(), 6);
        assert!(b.complex_algebra().unwrap().is_subalgebra(&s));
    }
}
