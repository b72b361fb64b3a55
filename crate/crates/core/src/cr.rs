//! Invariant CR structures `(R, J)` on `G/H`, encoded on the Lie algebra.
//!
//! `R` is a subspace of `g` containing the isotropy algebra `h`, and `J` is
//! an endomorphism of `R` that squares to `-1` modulo `h`. Vectors are
//! coordinate vectors in `g`.

use serde::Serialize;

use crate::error::{Error, Result};
use crate::forms::{symmetric_signature, Signature};
use crate::lie::LieAlgebra;
use crate::linalg::{add_vecs, is_zero_vec, sub_vecs, unit_vec, Matrix, Subspace};
use crate::scalar::{Scalar, Q};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CrPair {
    g: LieAlgebra<Q>,
    h: Subspace<Q>,
    r: Subspace<Q>,
    j: Matrix<Q>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct CrType {
    /// Real dimension of `G/H`.
    pub n: usize,
    /// Complex rank of the CR bundle.
    pub l: usize,
    /// CR codimension `n - 2l`.
    pub k: usize,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Serialize)]
pub enum Condition {
    /// `Jξ ∈ h` exactly when `ξ ∈ h`.
    KernelIsIsotropy,
    /// `J²ξ + ξ ∈ h`.
    SquareIsMinusOne,
    /// `[h, R] ⊆ R` and `J[ξ,ζ] - [ξ,Jζ] ∈ h` for `ξ ∈ h`.
    IsotropyInvariance,
    /// The integrability condition on pairs in `R`.
    Integrability,
}

impl Condition {
    pub fn label(self) -> &'static str {
        match self {
            Condition::KernelIsIsotropy => "kernel-is-isotropy",
            Condition::SquareIsMinusOne => "square-is-minus-one",
            Condition::IsotropyInvariance => "isotropy-invariance",
            Condition::Integrability => "integrability",
        }
    }

    pub fn all() -> [Condition; 4] {
        [
            Condition::KernelIsIsotropy,
            Condition::SquareIsMinusOne,
            Condition::IsotropyInvariance,
            Condition::Integrability,
        ]
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail,
    NotCheckable,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomRow {
    pub condition: Condition,
    pub status: Status,
    pub witness: Vec<Vec<Q>>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AxiomReport {
    pub rows: Vec<AxiomRow>,
}

impl AxiomReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == Status::Pass)
    }

    /// No row failed; rows that could not be checked are tolerated.
    pub fn no_failures(&self) -> bool {
        self.rows.iter().all(|r| r.status != Status::Fail)
    }

    pub fn status(&self, c: Condition) -> Status {
        self.rows.iter().find(|r| r.condition == c).map(|r| r.status).unwrap_or(Status::NotCheckable)
    }
}

/// Lie-algebra Levi form `(ξ, ζ) ↦ [ξ, ζ] mod R` on `R/h`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LeviReport {
    /// Echelon basis of a complement of `h` in `R`, in `g` coordinates.
    pub domain: Vec<Vec<Q>>,
    /// Number of components, `dim g/R`.
    pub value_dim: usize,
    /// `forms[c][a][b]`: component `c` of `[ξ_a, ξ_b]` in `g/R`. Antisymmetric.
    pub forms: Vec<Matrix<Q>>,
    /// Symmetric completions `½(ψ_c[ξ_a, Jξ_b] + ψ_c[ξ_b, Jξ_a])`.
    pub completions: Vec<Matrix<Q>>,
    /// `J` on the domain in domain coordinates.
    pub j_domain: Matrix<Q>,
    /// Joint radical of all forms and completions, in domain coordinates.
    pub kernel: Subspace<Q>,
    pub nondegenerate: bool,
    /// `R = h`: the structure is totally real and the form is empty.
    pub degenerate_domain: bool,
}

/// Levi signature along one codirection.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct LeviSignature {
    /// Counts on the complex space `R/h`.
    pub hermitian: Signature,
    /// Counts of the underlying real symmetric form (each twice the hermitian count).
    pub real: Signature,
}

impl LeviSignature {
    /// Both sign conventions, `(pos, neg)` first.
    pub fn orderings(&self) -> [Signature; 2] {
        [self.hermitian, self.hermitian.swapped()]
    }

    pub fn unordered(&self) -> (usize, usize) {
        self.hermitian.unordered()
    }
}

impl CrPair {
    /// Builds a pair; `J` is normalized modulo `h` and set to zero off `R`.
    pub fn new(g: LieAlgebra<Q>, h: Subspace<Q>, r: Subspace<Q>, j: Matrix<Q>) -> Result<Self> {
        let d = g.dim();
        for (what, s) in [("h", &h), ("R", &r)] {
            if s.ambient_dim() != d {
                return Err(Error::MalformedPair(format!(
                    "{what} lives in dimension {}, algebra has dimension {d}",
                    s.ambient_dim()
                )));
            }
        }
        if j.nrows() != d || j.ncols() != d {
            return Err(Error::MalformedPair(format!("J must be {d}x{d}")));
        }
        let j = normalize_j(&j, &h, &r);
        Ok(CrPair { g, h, r, j })
    }

    pub fn algebra(&self) -> &LieAlgebra<Q> {
        &self.g
    }

    pub fn isotropy(&self) -> &Subspace<Q> {
        &self.h
    }

    pub fn distribution(&self) -> &Subspace<Q> {
        &self.r
    }

    pub fn j(&self) -> &Matrix<Q> {
        &self.j
    }

    pub fn apply_j(&self, v: &[Q]) -> Vec<Q> {
        self.j.mul_vec(v).expect("J is square")
    }

    fn bracket(&self, x: &[Q], y: &[Q]) -> Vec<Q> {
        self.g.bracket(x, y).expect("dimensions checked")
    }

    /// `h ⊆ R` and `J(R) ⊆ R`.
    pub fn structural_check(&self) -> Result<()> {
        if !self.r.contains(&self.h) {
            return Err(Error::MalformedPair("h is not contained in R".into()));
        }
        for v in self.r.basis() {
            if !self.r.contains_vec(&self.apply_j(v)) {
                return Err(Error::MalformedPair("J does not preserve R".into()));
            }
        }
        if !self.g.is_subalgebra(&self.h) {
            return Err(Error::MalformedPair("h is not a subalgebra".into()));
        }
        Ok(())
    }

    /// Evaluates the four axioms on basis vectors. The isotropy-invariance
    /// axiom is only decidable here for connected isotropy.
    pub fn check(&self, connected_isotropy: bool) -> Result<AxiomReport> {
        self.structural_check()?;
        let h = &self.h;
        let r = self.r.basis();
        let mut rows = Vec::new();

        let mut w1 = Vec::new();
        for x in h.basis() {
            let jx = self.apply_j(x);
            if !h.contains_vec(&jx) {
                w1 = vec![x.clone(), jx];
                break;
            }
        }
        if w1.is_empty() {
            // Vectors of R mapped into h must lie in h.
            let images: Vec<Vec<Q>> = r.iter().map(|v| h.quotient_coords(&self.apply_j(v))).collect();
            let m = Matrix::from_fn(h.free_columns().len(), r.len(), |i, a| images[a][i].clone());
            for coeffs in m.nullspace() {
                let v = self.r.vector(&coeffs);
                if !h.contains_vec(&v) {
                    w1 = vec![v];
                    break;
                }
            }
        }
        rows.push(row(Condition::KernelIsIsotropy, w1));

        let mut w2 = Vec::new();
        for x in r {
            let s = add_vecs(&self.apply_j(&self.apply_j(x)), x);
            if !h.contains_vec(&s) {
                w2 = vec![x.clone(), s];
                break;
            }
        }
        rows.push(row(Condition::SquareIsMinusOne, w2));

        if connected_isotropy {
            let mut w3 = Vec::new();
            'c3: for x in h.basis() {
                for z in r {
                    let b = self.bracket(x, z);
                    if !self.r.contains_vec(&b) {
                        w3 = vec![x.clone(), z.clone(), b];
                        break 'c3;
                    }
                    let d = sub_vecs(&self.apply_j(&b), &self.bracket(x, &self.apply_j(z)));
                    if !h.contains_vec(&d) {
                        w3 = vec![x.clone(), z.clone(), d];
                        break 'c3;
                    }
                }
            }
            rows.push(row(Condition::IsotropyInvariance, w3));
        } else {
            rows.push(AxiomRow {
                condition: Condition::IsotropyInvariance,
                status: Status::NotCheckable,
                witness: Vec::new(),
            });
        }

        let mut w4 = Vec::new();
        'c4: for (a, x) in r.iter().enumerate() {
            let jx = self.apply_j(x);
            for z in &r[a..] {
                let jz = self.apply_j(z);
                let u = sub_vecs(&self.bracket(x, z), &self.bracket(&jx, &jz));
                if !self.r.contains_vec(&u) {
                    w4 = vec![x.clone(), z.clone(), u];
                    break 'c4;
                }
                let t = sub_vecs(
                    &sub_vecs(&self.apply_j(&u), &self.bracket(&jx, z)),
                    &self.bracket(x, &jz),
                );
                if !h.contains_vec(&t) {
                    w4 = vec![x.clone(), z.clone(), t];
                    break 'c4;
                }
            }
        }
        rows.push(row(Condition::Integrability, w4));
        Ok(AxiomReport { rows })
    }

    pub fn cr_type(&self) -> Result<CrType> {
        let n = self.g.dim() - self.h.dim();
        let two_l = self.r.dim() - self.h.dim();
        if two_l % 2 == 1 {
            return Err(Error::OddRank(two_l));
        }
        Ok(CrType { n, l: two_l / 2, k: n - two_l })
    }

    pub fn levi_form(&self) -> Result<LeviReport> {
        self.structural_check()?;
        let h = &self.h;
        let reduced: Vec<Vec<Q>> = self.r.basis().iter().map(|v| h.reduce(v)).collect();
        let domain_space = Subspace::span(self.g.dim(), reduced)?;
        let domain = domain_space.basis().to_vec();
        let m = domain.len();
        let value_dim = self.g.dim() - self.r.dim();

        let mut j_domain = Matrix::zeros(m, m);
        let mut jd: Vec<Vec<Q>> = Vec::with_capacity(m);
        for (a, b) in domain.iter().enumerate() {
            let jb = self.apply_j(b);
            let c = domain_space
                .coords(&h.reduce(&jb))
                .ok_or_else(|| Error::MalformedPair("J does not preserve R".into()))?;
            for (i, x) in c.into_iter().enumerate() {
                j_domain.set(i, a, x);
            }
            jd.push(jb);
        }

        let mut forms = vec![Matrix::zeros(m, m); value_dim];
        let mut raw = vec![Matrix::zeros(m, m); value_dim];
        for a in 0..m {
            for b in 0..m {
                if a < b {
                    let v = self.r.quotient_coords(&self.bracket(&domain[a], &domain[b]));
                    for (c, x) in v.into_iter().enumerate() {
                        forms[c].set(b, a, x.negated());
                        forms[c].set(a, b, x);
                    }
                }
                let w = self.r.quotient_coords(&self.bracket(&domain[a], &jd[b]));
                for (c, x) in w.into_iter().enumerate() {
                    raw[c].set(a, b, x);
                }
            }
        }
        let half = Q::new(1.into(), 2.into());
        let completions: Vec<Matrix<Q>> = raw
            .iter()
            .map(|s| s.add(&s.transpose()).expect("square").scale(&half))
            .collect();

        let mut stacked = Vec::new();
        for f in forms.iter().chain(&completions) {
            stacked.extend(f.to_rows());
        }
        let kernel = if m == 0 {
            Subspace::zero(0)
        } else {
            let sm = Matrix::from_rows(stacked, m)?;
            Subspace::span(m, sm.nullspace())?
        };
        let nondegenerate = kernel.is_zero();
        Ok(LeviReport {
            domain,
            value_dim,
            forms,
            completions,
            j_domain,
            kernel,
            nondegenerate,
            degenerate_domain: m == 0,
        })
    }

    pub fn levi_signature(&self, codirection: &[Q]) -> Result<LeviSignature> {
        self.levi_form()?.signature(codirection)
    }
}

fn row(condition: Condition, witness: Vec<Vec<Q>>) -> AxiomRow {
    let status = if witness.is_empty() { Status::Pass } else { Status::Fail };
    AxiomRow { condition, status, witness }
}

/// `J'(v) = J(v_R) mod h`, where `v_R` is the part of `v` along `R`'s echelon basis.
fn normalize_j(j: &Matrix<Q>, h: &Subspace<Q>, r: &Subspace<Q>) -> Matrix<Q> {
    let d = j.nrows();
    let mut out = Matrix::zeros(d, d);
    for (row, &p) in r.basis().iter().zip(r.pivots()) {
        let img = h.reduce(&j.mul_vec(row).expect("square"));
        for (i, x) in img.into_iter().enumerate() {
            out.set(i, p, x);
        }
    }
    out
}

impl LeviReport {
    /// `Σ λ_c · completion_c`.
    pub fn scalar_form(&self, codirection: &[Q]) -> Result<Matrix<Q>> {
        if codirection.len() != self.value_dim {
            return Err(Error::DimensionMismatch { expected: self.value_dim, found: codirection.len() });
        }
        if is_zero_vec(codirection) {
            return Err(Error::ZeroCodirection);
        }
        let m = self.domain.len();
        let mut s = Matrix::zeros(m, m);
        for (c, l) in codirection.iter().enumerate() {
            if !l.is_zero() {
                s = s.add(&self.completions[c].scale(l))?;
            }
        }
        Ok(s)
    }

    pub fn signature(&self, codirection: &[Q]) -> Result<LeviSignature> {
        let s = self.scalar_form(codirection)?;
        let real = symmetric_signature(&s);
        if real.pos % 2 == 1 || real.neg % 2 == 1 {
            return Err(Error::Precondition("Levi form is not J-invariant".into()));
        }
        let hermitian = Signature::new(real.pos / 2, real.neg / 2, real.zero / 2);
        Ok(LeviSignature { hermitian, real })
    }

    /// Radical of the scalar form along `codirection`, in domain coordinates.
    pub fn scalar_radical(&self, codirection: &[Q]) -> Result<Subspace<Q>> {
        let s = self.scalar_form(codirection)?;
        Subspace::span(self.domain.len(), s.nullspace())
    }

    /// Codirections `e_0 … e_{k-1}` of `g/R`.
    pub fn codirection_basis(&self) -> Vec<Vec<Q>> {
        (0..self.value_dim).map(|c| unit_vec(self.value_dim, c)).collect()
    }
}
