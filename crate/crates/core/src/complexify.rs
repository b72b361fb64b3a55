//! Complexifications, realifications and orbit models `G/H ⊂ Ĝ/Ĥ`.
//!
//! A complex algebra with basis `e_1 … e_N` is realified on the ordered
//! basis `(e_1, …, e_N, i·e_1, …, i·e_N)`; multiplication by `i` is the map
//! `J(x, y) = (-y, x)`.

use crate::cr::CrPair;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::{is_zero_vec, Matrix, Subspace};
use crate::scalar::{Qi, Scalar, Q};

/// Realified coordinates `(Re v, Im v)` of a complex vector.
pub fn realify_vec(v: &[Qi]) -> Vec<Q> {
    let mut out: Vec<Q> = v.iter().map(|z| z.re.clone()).collect();
    out.extend(v.iter().map(|z| z.im.clone()));
    out
}

/// Inverse of [`realify_vec`].
pub fn complexify_vec(v: &[Q]) -> Vec<Qi> {
    let n = v.len() / 2;
    (0..n).map(|k| Qi::new(v[k].clone(), v[n + k].clone())).collect()
}

/// Multiplication by `i` in realified coordinates.
pub fn apply_j(v: &[Q]) -> Vec<Q> {
    let n = v.len() / 2;
    let mut out: Vec<Q> = v[n..].iter().map(Scalar::negated).collect();
    out.extend(v[..n].iter().cloned());
    out
}

pub fn j_matrix(n: usize) -> Matrix<Q> {
    let mut m = Matrix::zeros(2 * n, 2 * n);
    for k in 0..n {
        m.set(n + k, k, Q::one());
        m.set(k, n + k, Q::one().negated());
    }
    m
}

/// The complex algebra viewed as a real algebra of twice the dimension.
pub fn realify(alg: &LieAlgebra<Qi>) -> LieAlgebra<Q> {
    let n = alg.dim();
    let mut names: Vec<String> = alg.names().to_vec();
    names.extend(alg.names().iter().map(|s| format!("i*{s}")));
    let mut brackets = Vec::new();
    for (a, b, terms) in alg.nonzero_brackets() {
        let (mut re, mut im) = (Vec::new(), Vec::new());
        for (k, c) in &terms {
            if !c.re.is_zero() {
                re.push((*k, c.re.clone()));
                im.push((n + k, c.re.clone()));
            }
            if !c.im.is_zero() {
                re.push((n + k, c.im.clone()));
                im.push((*k, c.im.negated()));
            }
        }
        // [e_a, e_b] = re, [e_a, i e_b] = [i e_a, e_b] = i·re, [i e_a, i e_b] = -re.
        let neg: Vec<(usize, Q)> = re.iter().map(|(k, c)| (*k, c.negated())).collect();
        brackets.push((a, b, re));
        brackets.push((a, n + b, im.clone()));
        brackets.push((n + a, b, im));
        brackets.push((n + a, n + b, neg));
    }
    LieAlgebra::from_brackets(names, brackets).expect("indices in range")
}

/// Real span of a complex subspace, in realified coordinates.
pub fn realify_subspace(s: &Subspace<Qi>) -> Subspace<Q> {
    let n = s.ambient_dim();
    let mut rows = Vec::with_capacity(2 * s.dim());
    for v in s.basis() {
        let r = realify_vec(v);
        rows.push(apply_j(&r));
        rows.push(r);
    }
    Subspace::span(2 * n, rows).expect("lengths match")
}

/// Complex span of a real subspace given in realified coordinates.
pub fn complex_span(s: &Subspace<Q>) -> Subspace<Qi> {
    let n = s.ambient_dim() / 2;
    Subspace::span(n, s.basis().iter().map(|v| complexify_vec(v)).collect()).expect("lengths match")
}

pub fn j_image(s: &Subspace<Q>) -> Subspace<Q> {
    Subspace::span(s.ambient_dim(), s.basis().iter().map(|v| apply_j(v)).collect())
        .expect("lengths match")
}

/// A real algebra together with its complexification.
#[derive(Clone, Debug)]
pub struct Complexification {
    pub g_real: LieAlgebra<Q>,
    pub g_hat: LieAlgebra<Qi>,
    /// `g_hat` as a real algebra; its first `dim g` coordinates are the embedded `g`.
    pub realified: LieAlgebra<Q>,
}

impl Complexification {
    pub fn embedding(&self) -> Subspace<Q> {
        let n = self.g_real.dim();
        Subspace::coordinate(2 * n, &(0..n).collect::<Vec<_>>())
    }

    pub fn j_ambient(&self) -> Matrix<Q> {
        j_matrix(self.g_real.dim())
    }

    /// `G/H ⊂ Ĝ/Ĥ` for a complex isotropy algebra `ĥ ⊆ ĝ`.
    pub fn orbit_model(&self, isotropy_hat: Subspace<Qi>) -> Result<OrbitModel> {
        OrbitModel::new(self.g_hat.clone(), self.embedding(), isotropy_hat)
    }
}

pub fn complexify(g: &LieAlgebra<Q>) -> Complexification {
    let g_hat = g.map_scalars(|c| Qi::from_q(c.clone()));
    let realified = realify(&g_hat);
    Complexification { g_real: g.clone(), g_hat, realified }
}

/// A real algebra that may arrive over either field.
#[derive(Clone, Debug)]
pub enum AnyAlgebra {
    Real(LieAlgebra<Q>),
    Complex(LieAlgebra<Qi>),
}

impl AnyAlgebra {
    pub fn dim(&self) -> usize {
        match self {
            AnyAlgebra::Real(a) => a.dim(),
            AnyAlgebra::Complex(a) => a.dim(),
        }
    }
}

/// Rejects algebras that are already complex.
pub fn complexify_any(g: &AnyAlgebra) -> Result<Complexification> {
    match g {
        AnyAlgebra::Real(a) => Ok(complexify(a)),
        AnyAlgebra::Complex(_) => Err(Error::WrongField { expected: crate::scalar::FieldKind::Rational }),
    }
}

/// Real subalgebra `g` of a complex algebra `ĝ` with complex isotropy `ĥ`,
/// modelling the orbit `G/H` of the base point of `Ĝ/Ĥ`.
#[derive(Clone, Debug)]
pub struct OrbitModel {
    ambient: LieAlgebra<Qi>,
    realified: LieAlgebra<Q>,
    real_sub: Subspace<Q>,
    isotropy_hat: Subspace<Qi>,
    isotropy_real: Subspace<Q>,
    g: LieAlgebra<Q>,
    h_ambient: Subspace<Q>,
}

/// Anticanonical fibration `G/H → G/J` at Lie-algebra level.
#[derive(Clone, Debug)]
pub struct FibrationReport {
    /// `j = {ξ ∈ g : [ξ, ĥ] ⊆ ĥ}` in `g` coordinates.
    pub j: Subspace<Q>,
    /// `j / h` with induced brackets.
    pub fiber: LieAlgebra<Q>,
    pub dim_fiber: usize,
    pub dim_base: usize,
    pub h_dim: usize,
    pub degenerate: bool,
    /// For degenerate fibrations: whether `h = 0`, the algebra-level form of discrete isotropy.
    pub discrete_isotropy: Option<bool>,
    pub caveats: Vec<String>,
}

pub const COMPONENT_CAVEAT: &str = "component-level unknown: only identity components are visible";

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FactRow {
    pub name: &'static str,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct FiberGlobalizationReport {
    pub rows: Vec<FactRow>,
}

impl FiberGlobalizationReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.pass)
    }

    pub fn fact(&self, name: &str) -> Option<bool> {
        self.rows.iter().find(|r| r.name == name).map(|r| r.pass)
    }
}

impl OrbitModel {
    pub fn new(ambient: LieAlgebra<Qi>, real_sub: Subspace<Q>, isotropy_hat: Subspace<Qi>) -> Result<Self> {
        let model = Self::build(ambient, real_sub, isotropy_hat)?;
        if !model.is_generic() {
            return Err(Error::InvalidModel("g + Jg does not span the ambient algebra".into()));
        }
        Ok(model)
    }

    /// Like [`OrbitModel::new`] but without the genericity requirement.
    pub fn new_nongeneric(
        ambient: LieAlgebra<Qi>,
        real_sub: Subspace<Q>,
        isotropy_hat: Subspace<Qi>,
    ) -> Result<Self> {
        Self::build(ambient, real_sub, isotropy_hat)
    }

    fn build(ambient: LieAlgebra<Qi>, real_sub: Subspace<Q>, isotropy_hat: Subspace<Qi>) -> Result<Self> {
        let n = ambient.dim();
        if real_sub.ambient_dim() != 2 * n {
            return Err(Error::DimensionMismatch { expected: 2 * n, found: real_sub.ambient_dim() });
        }
        if isotropy_hat.ambient_dim() != n {
            return Err(Error::DimensionMismatch { expected: n, found: isotropy_hat.ambient_dim() });
        }
        if !ambient.is_subalgebra(&isotropy_hat) {
            return Err(Error::InvalidModel("isotropy is not a complex subalgebra".into()));
        }
        let realified = realify(&ambient);
        let g = realified
            .subalgebra(&real_sub)
            .map_err(|_| Error::InvalidModel("real part is not a subalgebra".into()))?;
        let isotropy_real = realify_subspace(&isotropy_hat);
        let h_ambient = real_sub.intersect(&isotropy_real)?;
        let model = OrbitModel { ambient, realified, real_sub, isotropy_hat, isotropy_real, g, h_ambient };
        if model.codim_signed() < 0 {
            return Err(Error::InvalidModel("negative codimension".into()));
        }
        Ok(model)
    }

    pub fn ambient(&self) -> &LieAlgebra<Qi> {
        &self.ambient
    }

    pub fn realified(&self) -> &LieAlgebra<Q> {
        &self.realified
    }

    pub fn real_sub(&self) -> &Subspace<Q> {
        &self.real_sub
    }

    pub fn isotropy_hat(&self) -> &Subspace<Qi> {
        &self.isotropy_hat
    }

    /// `ĥ` as a real subspace of the realified ambient.
    pub fn isotropy_real(&self) -> &Subspace<Q> {
        &self.isotropy_real
    }

    /// `g` as an algebra on the echelon basis of `real_sub`.
    pub fn g(&self) -> &LieAlgebra<Q> {
        &self.g
    }

    /// `h = g ∩ ĥ` in realified ambient coordinates.
    pub fn h_ambient(&self) -> &Subspace<Q> {
        &self.h_ambient
    }

    /// `h` in `g` coordinates.
    pub fn h(&self) -> Subspace<Q> {
        self.to_g_coords(&self.h_ambient)
    }

    pub fn dim_complex_ambient(&self) -> usize {
        self.ambient.dim()
    }

    /// Real dimension of the orbit, `dim g - dim h`.
    pub fn orbit_dim(&self) -> usize {
        self.real_sub.dim() - self.h_ambient.dim()
    }

    fn codim_signed(&self) -> i64 {
        let x = 2 * (self.ambient.dim() as i64 - self.isotropy_hat.dim() as i64);
        x - self.orbit_dim() as i64
    }

    /// `2(dim_ℂ ĝ - dim_ℂ ĥ) - (dim g - dim h)`.
    pub fn codim(&self) -> usize {
        self.codim_signed() as usize
    }

    pub fn is_generic(&self) -> bool {
        self.real_sub.sum(&j_image(&self.real_sub)).map(|s| s.is_full()).unwrap_or(false)
    }

    /// Re-expresses a subspace of `real_sub` in `g` coordinates.
    pub fn to_g_coords(&self, s: &Subspace<Q>) -> Subspace<Q> {
        let rows = s
            .basis()
            .iter()
            .map(|v| self.real_sub.coords(v).expect("subspace of g"))
            .collect();
        Subspace::span(self.g.dim(), rows).expect("lengths match")
    }

    /// Pushes a subspace in `g` coordinates into the realified ambient.
    pub fn to_ambient(&self, s: &Subspace<Q>) -> Subspace<Q> {
        let rows = s.basis().iter().map(|c| self.real_sub.vector(c)).collect();
        Subspace::span(self.real_sub.ambient_dim(), rows).expect("lengths match")
    }

    /// `m = g ∩ Jg` in realified ambient coordinates.
    pub fn max_complex_ideal_ambient(&self) -> Subspace<Q> {
        self.real_sub.intersect(&j_image(&self.real_sub)).expect("same ambient")
    }

    /// `m = g ∩ Jg` in `g` coordinates.
    pub fn max_complex_ideal(&self) -> Subspace<Q> {
        self.to_g_coords(&self.max_complex_ideal_ambient())
    }

    /// The induced invariant CR structure, in `g` coordinates.
    ///
    /// `R = {ξ ∈ g : Jξ ∈ g + ĥ}`; for `ξ ∈ R` write `Jξ = η + χ` with
    /// `η ∈ g`, `χ ∈ ĥ` and set `J̃ξ = η`.
    pub fn cr_pair(&self) -> Result<CrPair> {
        let d = self.g.dim();
        let gi = self.real_sub.sum(&self.isotropy_real)?;
        let r_amb = self.real_sub.intersect(&j_image(&gi))?;
        let r = self.to_g_coords(&r_amb);

        let g_rows = self.real_sub.basis();
        let hh = self.isotropy_real.basis();
        let big = g_rows.len() + hh.len();
        let a = Matrix::from_fn(self.real_sub.ambient_dim(), big, |i, c| {
            if c < g_rows.len() {
                g_rows[c][i].clone()
            } else {
                hh[c - g_rows.len()][i].clone()
            }
        });
        let targets: Vec<Vec<Q>> = r_amb.basis().iter().map(|v| apply_j(v)).collect();
        let rhs = Matrix::from_fn(self.real_sub.ambient_dim(), targets.len(), |i, c| targets[c][i].clone());
        let sol = a
            .solve(&rhs)?
            .ok_or_else(|| Error::InvalidModel("J(R) escapes g + ĥ".into()))?;

        // J̃ on g coordinates: r_amb basis vectors map to the g-part of the solution.
        let r_coords: Vec<Vec<Q>> =
            r_amb.basis().iter().map(|v| self.real_sub.coords(v).expect("R ⊆ g")).collect();
        let mut images = Matrix::zeros(d, r_coords.len());
        for c in 0..r_coords.len() {
            for i in 0..d {
                images.set(i, c, sol.get(i, c).clone());
            }
        }
        // Solve J̃ · R = images on span(R), zero on the complement of R.
        let rbasis = Matrix::from_fn(d, r_coords.len(), |i, c| r_coords[c][i].clone());
        let mut j = Matrix::zeros(d, d);
        if !r_coords.is_empty() {
            let free = r.free_columns();
            let mut full = rbasis.to_rows();
            for (i, row) in full.iter_mut().enumerate() {
                for &f in &free {
                    row.push(if i == f { Q::one() } else { Q::zero() });
                }
            }
            let frame = Matrix::from_rows(full, r_coords.len() + free.len())?;
            let mut img_ext = images.to_rows();
            for row in img_ext.iter_mut() {
                row.extend(std::iter::repeat_with(Q::zero).take(free.len()));
            }
            let img_ext = Matrix::from_rows(img_ext, r_coords.len() + free.len())?;
            j = img_ext.mul(&frame.inverse()?)?;
        }
        CrPair::new(self.g.clone(), self.h(), r, j)
    }

    /// `ĵ = {ξ ∈ ĝ : [ξ, ĥ] ⊆ ĥ}`.
    pub fn complex_normalizer(&self) -> Subspace<Qi> {
        self.ambient.normalizer_subalgebra(&self.isotropy_hat)
    }

    /// `n_cr = {ξ ∈ g : [ξ, ĥ] ⊆ ĥ}` in `g` coordinates.
    pub fn cr_normalizer(&self) -> Subspace<Q> {
        let d = self.g.dim();
        let chis: Vec<Vec<Q>> = self.isotropy_hat.basis().iter().map(|v| realify_vec(v)).collect();
        let mut rows: Vec<Vec<Q>> = Vec::new();
        let cols: Vec<Vec<Vec<Q>>> = self
            .real_sub
            .basis()
            .iter()
            .map(|gi| {
                chis.iter()
                    .map(|chi| {
                        let b = self.realified.bracket(gi, chi).expect("lengths match");
                        self.isotropy_real.quotient_coords(&b)
                    })
                    .collect()
            })
            .collect();
        let qdim = self.isotropy_real.free_columns().len();
        for t in 0..chis.len() {
            for c in 0..qdim {
                let row: Vec<Q> = cols.iter().take(d).map(|col| col[t][c].clone()).collect();
                if !is_zero_vec(&row) {
                    rows.push(row);
                }
            }
        }
        let m = Matrix::from_rows(rows, d).expect("row lengths match");
        Subspace::span(d, m.nullspace()).expect("lengths match")
    }

    pub fn fibration(&self) -> Result<FibrationReport> {
        let j = self.cr_normalizer();
        let h = self.h();
        if !j.contains(&h) {
            return Err(Error::InvalidModel("CR-normalizer misses the isotropy".into()));
        }
        let j_alg = self.g.subalgebra(&j)?;
        let h_in_j = Subspace::span(
            j.dim(),
            h.basis().iter().map(|v| j.coords(v).expect("h ⊆ j")).collect(),
        )?;
        let fiber = j_alg.quotient(&h_in_j)?.algebra;
        let degenerate = j.is_full();
        Ok(FibrationReport {
            dim_fiber: j.dim() - h.dim(),
            dim_base: self.g.dim() - j.dim(),
            h_dim: h.dim(),
            degenerate,
            discrete_isotropy: degenerate.then(|| h.is_zero()),
            caveats: vec![COMPONENT_CAVEAT.to_string()],
            fiber,
            j,
        })
    }

    /// Algebraic facts behind globalizing a degenerate fibration with trivial isotropy.
    pub fn fiber_globalization_check(&self) -> Result<FiberGlobalizationReport> {
        let f = self.fibration()?;
        if !f.degenerate {
            return Err(Error::Precondition("the anticanonical fibration is not degenerate".into()));
        }
        if f.h_dim != 0 {
            return Err(Error::Precondition("isotropy algebra is not zero".into()));
        }
        let codim = self.codim();
        let m = self.max_complex_ideal_ambient();
        let m_c = m.dim() / 2;
        let n_c = self.ambient.dim();
        let r_hat = self.realified.radical();
        let levi_in_m = m.sum(&r_hat)?.is_full();
        let r_g = self.to_ambient(&self.g.radical());
        let r_trace = r_hat.intersect(&self.real_sub)?;
        let rows = vec![
            FactRow { name: "codim-at-most-two", pass: codim <= 2, detail: format!("codim = {codim}") },
            FactRow {
                name: "ambient-within-two-of-m",
                pass: n_c <= m_c + 2,
                detail: format!("dim_C ĝ = {n_c}, dim_C m = {m_c}"),
            },
            FactRow {
                name: "levi-factor-in-m",
                pass: levi_in_m,
                detail: format!("dim(m + r̂) = {} of {}", m.sum(&r_hat)?.dim(), 2 * n_c),
            },
            FactRow {
                name: "real-radical-is-trace",
                pass: r_g == r_trace,
                detail: format!("dim r = {}, dim(r̂ ∩ g) = {}", r_g.dim(), r_trace.dim()),
            },
        ];
        Ok(FiberGlobalizationReport { rows })
    }

    /// Conjugates the whole model by a complex-linear automorphism of `ĝ`
    /// given in realified coordinates.
    pub fn transformed(&self, auto: &Matrix<Q>) -> Result<OrbitModel> {
        let g = self.real_sub.image(auto)?;
        let h_real = self.isotropy_real.image(auto)?;
        OrbitModel::new_nongeneric(self.ambient.clone(), g, complex_span(&h_real))
    }

    /// Product model in `ĝ₁ ⊕ ĝ₂`.
    pub fn product(&self, other: &OrbitModel) -> Result<OrbitModel> {
        let (n1, n2) = (self.ambient.dim(), other.ambient.dim());
        let n = n1 + n2;
        let ambient = self.ambient.direct_sum(&other.ambient);
        let place = |v: &[Q], off: usize, len: usize| {
            let mut out = vec![Q::zero(); 2 * n];
            for k in 0..len {
                out[off + k] = v[k].clone();
                out[n + off + k] = v[len + k].clone();
            }
            out
        };
        let mut rows: Vec<Vec<Q>> = self.real_sub.basis().iter().map(|v| place(v, 0, n1)).collect();
        rows.extend(other.real_sub.basis().iter().map(|v| place(v, n1, n2)));
        let mut hat: Vec<Vec<Qi>> = self
            .isotropy_hat
            .basis()
            .iter()
            .map(|v| {
                let mut w = v.clone();
                w.extend(std::iter::repeat_with(Qi::zero).take(n2));
                w
            })
            .collect();
        hat.extend(other.isotropy_hat.basis().iter().map(|v| {
            let mut w = vec![Qi::zero(); n1];
            w.extend(v.iter().cloned());
            w
        }));
        OrbitModel::new(ambient, Subspace::span(2 * n, rows)?, Subspace::span(n, hat)?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    fn complex_sl2() -> LieAlgebra<Qi> {
        LieAlgebra::from_brackets(
            vec!["h".into(), "e".into(), "f".into()],
            vec![
                (0, 1, vec![(1, Qi::from_int(2))]),
                (0, 2, vec![(2, Qi::from_int(-2))]),
                (1, 2, vec![(0, Qi::from_int(1))]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn realification_is_a_lie_algebra() {
        let r = realify(&complex_sl2());
        assert_eq!(r.dim(), 6);
        assert!(r.validate().passed());
        assert!(r.radical().is_zero());
    }

    #[test]
    fn j_squares_to_minus_one() {
        let v = vec![q(1), q(2), q(3), q(4)];
        let jj = apply_j(&apply_j(&v));
        assert_eq!(jj, v.iter().map(|x| x.negated()).collect::<Vec<_>>());
        assert_eq!(j_matrix(2).mul_vec(&v).unwrap(), apply_j(&v));
    }

    #[test]
    fn borel_is_self_normalizing() {
        let g = complex_sl2();
        let rs = Subspace::full(6);
        let borel = Subspace::coordinate(3, &[0, 1]);
        let model = OrbitModel::new(g, rs, borel).unwrap();
        let n = model.cr_normalizer();
        assert_eq!(model.to_ambient(&n), model.isotropy_real().clone());
    }
}
