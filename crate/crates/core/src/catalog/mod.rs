//! Classification instances as exact orbit models.
//!
//! Every entry carries the invariants asserted for it by the classification
//! (codimension, CR type, Levi signature, fiber row) and, where the
//! topology is known, fundamental-group data for the homotopy criterion.

pub mod models;
pub mod perturb;
pub mod taxon;
pub mod verify;

use serde::Serialize;

use crate::complexify::{complexify, realify_vec, OrbitModel};
use crate::cr::CrType;
use crate::error::{Error, Result};
use crate::globalize::Pi1Descriptor;
use crate::lie::LieAlgebra;
use crate::linalg::{unit_vec, Subspace};
use crate::scalar::{Qi, Scalar, Q};

use models::{sl_basis, su_basis, MatrixBasis};
use taxon::{BaseKind, FiberClass, FiberContext, FiberTag};

pub use verify::{verify_entry, RowStatus, VerifyReport, VerifyRow};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Family {
    Quadric,
    SpQuadric,
    RealProjective,
    TwistedDiagonal,
    Product,
    CompactSpherical,
    Parallelizable,
}

impl Family {
    pub fn label(self) -> &'static str {
        match self {
            Family::Quadric => "quadric",
            Family::SpQuadric => "sp-quadric",
            Family::RealProjective => "real-projective",
            Family::TwistedDiagonal => "twisted-diagonal",
            Family::Product => "product",
            Family::CompactSpherical => "compact-spherical",
            Family::Parallelizable => "parallelizable",
        }
    }
}

/// Invariants the classification asserts for an entry.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct Expected {
    pub codim: usize,
    pub cr_type: Option<CrType>,
    /// `(max, min)` of the hermitian Levi signature along the outward codirection.
    pub levi_signature: Option<(usize, usize)>,
    /// Totally real: the Levi form has an empty domain.
    pub totally_real: bool,
    pub orbit_dim: Option<usize>,
    pub m_dim: Option<usize>,
    pub fiber: Option<FiberClass>,
    pub base_dim: Option<usize>,
}

/// Fundamental groups of the real and complex normalizer quotients.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Pi1Data {
    pub real: Pi1Descriptor,
    pub complex: Pi1Descriptor,
    /// The induced map is known to be onto.
    pub surjective: bool,
}

/// Attributes supplied with an entry rather than computed.
#[derive(Clone, Debug, Default, Serialize)]
pub struct Tags {
    /// `g` is the Lie algebra of a compact group.
    pub compact: bool,
    /// `g` is simple.
    pub simple: bool,
    pub kahler: bool,
    pub fiber_context: FiberContext,
    /// Affine-rational fiber algebra, when it differs from the anticanonical fiber.
    #[serde(skip)]
    pub affine_fiber: Option<LieAlgebra<Q>>,
}

#[derive(Clone, Debug)]
pub struct CatalogEntry {
    pub name: String,
    pub family: Family,
    pub params: Vec<usize>,
    pub model: OrbitModel,
    pub expected: Expected,
    pub pi1: Option<Pi1Data>,
    pub tags: Tags,
    pub caveats: Vec<String>,
}

pub const UZ_CAVEAT: &str = "isotropy modelled by its identity component; the discrete part is invisible";

fn pi1(real: usize, complex: usize, surjective: bool) -> Option<Pi1Data> {
    Some(Pi1Data {
        real: Pi1Descriptor::free(real),
        complex: Pi1Descriptor::free(complex),
        surjective,
    })
}

fn isotropic_vector(p: usize, q: usize) -> Vec<Qi> {
    let mut v = vec![Qi::zero(); p + q];
    v[0] = Qi::one();
    v[p] = Qi::one();
    v
}

/// Realified coordinates, in the basis `amb`, of the real span of `mats`.
fn real_rows(amb: &MatrixBasis, mats: &[models::CMat]) -> Result<Vec<Vec<Q>>> {
    mats.iter()
        .map(|m| {
            amb.coords(m)
                .map(|c| realify_vec(&c))
                .ok_or_else(|| Error::InvalidModel("matrix outside the ambient algebra".into()))
        })
        .collect()
}

/// Embeds a complex vector of a summand into `ĝ₁ ⊕ ĝ₂`.
fn place(v: &[Qi], offset: usize, total: usize) -> Vec<Qi> {
    let mut out = vec![Qi::zero(); total];
    out[offset..offset + v.len()].clone_from_slice(v);
    out
}

fn entry(name: String, family: Family, params: Vec<usize>, model: OrbitModel) -> CatalogEntry {
    CatalogEntry {
        name,
        family,
        params,
        model,
        expected: Expected::default(),
        pi1: None,
        tags: Tags::default(),
        caveats: Vec::new(),
    }
}

/// `SU(p,q)` on the isotropic lines of `ℙ_{p+q-1}`.
pub fn quadric_orbit(p: usize, q: usize) -> Result<CatalogEntry> {
    if p < 1 || q < 1 {
        return Err(Error::Parameter("quadric needs p, q >= 1".into()));
    }
    let basis = su_basis(p, q)?;
    let c = complexify(&basis.real_algebra()?);
    let hat = basis.line_stabilizer(&isotropic_vector(p, q));
    let model = c.orbit_model(hat)?;
    let n = p + q;
    let mut e = entry(format!("quadric({p},{q})"), Family::Quadric, vec![p, q], model);
    e.expected = Expected {
        codim: 1,
        cr_type: Some(CrType { n: 2 * n - 3, l: n - 2, k: 1 }),
        levi_signature: Some(((p - 1).max(q - 1), (p - 1).min(q - 1))),
        totally_real: n == 2,
        orbit_dim: Some(2 * n - 3),
        m_dim: Some(0),
        fiber: Some(FiberClass::Point),
        base_dim: Some(2 * n - 3),
    };
    e.pi1 = pi1(0, 0, true);
    e.tags.simple = true;
    Ok(e)
}

/// `Sp(p,q)` acting on the same quadric of `ℙ_{2(p+q)-1}`.
pub fn sp_quadric_orbit(p: usize, q: usize) -> Result<CatalogEntry> {
    if p < 1 || q < 1 {
        return Err(Error::Parameter("sp-quadric needs p, q >= 1".into()));
    }
    let m = p + q;
    let basis = models::sp_basis(p, q)?;
    let c = complexify(&basis.real_algebra()?);
    let mut v = vec![Qi::zero(); 2 * m];
    v[0] = Qi::one();
    v[p] = Qi::one();
    let model = c.orbit_model(basis.line_stabilizer(&v))?;
    let mut e = entry(format!("sp-quadric({p},{q})"), Family::SpQuadric, vec![p, q], model);
    let (a, b) = (2 * p - 1, 2 * q - 1);
    e.expected = Expected {
        codim: 1,
        cr_type: Some(CrType { n: 4 * m - 3, l: 2 * m - 2, k: 1 }),
        levi_signature: Some((a.max(b), a.min(b))),
        orbit_dim: Some(4 * m - 3),
        m_dim: Some(0),
        fiber: Some(FiberClass::Point),
        base_dim: Some(4 * m - 3),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 0, true);
    e.tags.simple = true;
    Ok(e)
}

/// `SL_3(ℝ)` on `ℙ_2(ℝ) ⊂ ℙ_2(ℂ)`.
pub fn real_projective_orbit() -> Result<CatalogEntry> {
    let basis = sl_basis(3)?;
    let c = complexify(&basis.real_algebra()?);
    let e1 = vec![Qi::one(), Qi::zero(), Qi::zero()];
    let model = c.orbit_model(basis.line_stabilizer(&e1))?;
    let mut e = entry("p2r".into(), Family::RealProjective, vec![], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 2, l: 0, k: 2 }),
        totally_real: true,
        orbit_dim: Some(2),
        m_dim: Some(0),
        fiber: Some(FiberClass::Point),
        base_dim: Some(2),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 1, false);
    e.tags.simple = true;
    Ok(e)
}

/// `SL_{n+1}(ℂ)` acting on `{([z],[w]) : zᵗw̄ = 0} ⊂ ℙ_n × ℙ_n` by `A ↦ (A, (Ā⁻¹)ᵗ)`.
pub fn twisted_diagonal_orbit(n: usize) -> Result<CatalogEntry> {
    if n < 1 {
        return Err(Error::Parameter("twisted diagonal needs n >= 1".into()));
    }
    let size = n + 1;
    let basis = sl_basis(size)?;
    let d = basis.len();
    let sl = basis.complex_algebra()?;
    let ambient = sl.direct_sum(&sl);
    let mut rows = Vec::with_capacity(2 * d);
    for (k, b) in basis.mats.iter().enumerate() {
        let bt = basis
            .coords(&b.transpose())
            .ok_or_else(|| Error::InvalidModel("transpose outside sl".into()))?;
        let mut x = place(&unit_vec::<Qi>(d, k), 0, 2 * d);
        let mut y = x.iter().map(|c| c.times(&Qi::i())).collect::<Vec<_>>();
        for (t, c) in bt.iter().enumerate() {
            x[d + t] = c.negated();
            y[d + t] = c.times(&Qi::i());
        }
        rows.push(realify_vec(&x));
        rows.push(realify_vec(&y));
    }
    let mut e1 = vec![Qi::zero(); size];
    e1[0] = Qi::one();
    let mut e2 = vec![Qi::zero(); size];
    e2[1] = Qi::one();
    let mut hat: Vec<Vec<Qi>> = basis.line_stabilizer(&e1).basis().iter().map(|v| place(v, 0, 2 * d)).collect();
    hat.extend(basis.line_stabilizer(&e2).basis().iter().map(|v| place(v, d, 2 * d)));
    let model = OrbitModel::new(ambient, Subspace::span(4 * d, rows)?, Subspace::span(2 * d, hat)?)?;
    let mut e = entry(format!("twisted({n})"), Family::TwistedDiagonal, vec![n], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 4 * n - 2, l: 2 * n - 2, k: 2 }),
        totally_real: n == 1,
        orbit_dim: Some(4 * n - 2),
        m_dim: Some(0),
        fiber: Some(FiberClass::Point),
        base_dim: Some(4 * n - 2),
        ..Expected::default()
    };
    e.tags.simple = true;
    Ok(e)
}

/// `S¹ = iℝ ⊂ ℂ` acting on `ℂ*`.
fn circle_model() -> Result<OrbitModel> {
    OrbitModel::new(LieAlgebra::abelian(1), Subspace::coordinate(2, &[1]), Subspace::zero(1))
}

pub fn quadric_product() -> Result<CatalogEntry> {
    let a = quadric_orbit(2, 1)?;
    let b = quadric_orbit(1, 1)?;
    let model = a.model.product(&b.model)?;
    let mut e = entry("quadric(2,1)*quadric(1,1)".into(), Family::Product, vec![2, 1, 1, 1], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 4, l: 1, k: 2 }),
        orbit_dim: Some(4),
        m_dim: Some(0),
        fiber: Some(FiberClass::Point),
        base_dim: Some(4),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 0, true);
    Ok(e)
}

pub fn quadric_circle() -> Result<CatalogEntry> {
    let a = quadric_orbit(2, 1)?;
    let model = a.model.product(&circle_model()?)?;
    let mut e = entry("quadric(2,1)*circle".into(), Family::Product, vec![2, 1], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 4, l: 1, k: 2 }),
        orbit_dim: Some(4),
        m_dim: Some(0),
        fiber: Some(FiberClass::Row(FiberTag::LinearCStar)),
        base_dim: Some(3),
        ..Expected::default()
    };
    e.pi1 = pi1(1, 1, true);
    e.tags.fiber_context = FiberContext { center_acts: true, base: BaseKind::Other, ..FiberContext::default() };
    Ok(e)
}

/// `ĝ = sl₂ ⊕ ℂ^k` with a real subalgebra `su₂ ⊕ (extra)` given in realified coordinates.
fn su2_plus_abelian(k: usize, extra: &[Vec<Qi>], hat: Vec<Vec<Qi>>) -> Result<OrbitModel> {
    let sl = sl_basis(2)?;
    let ambient = sl.complex_algebra()?.direct_sum(&LieAlgebra::abelian(k));
    let n = 3 + k;
    let mut rows: Vec<Vec<Q>> = real_rows(&sl, &su_basis(2, 0)?.mats)?
        .into_iter()
        .map(|r| {
            let mut out = vec![Q::zero(); 2 * n];
            out[..3].clone_from_slice(&r[..3]);
            out[n..n + 3].clone_from_slice(&r[3..6]);
            out
        })
        .collect();
    rows.extend(extra.iter().map(|v| realify_vec(v)));
    OrbitModel::new(ambient, Subspace::span(2 * n, rows)?, Subspace::span(n, hat)?)
}

/// Complex coordinate vector in `sl₂ ⊕ ℂ^k` (basis `E12, E21, H1, e'_1, …`).
fn cvec(entries: &[(usize, Qi)], n: usize) -> Vec<Qi> {
    let mut v = vec![Qi::zero(); n];
    for (i, c) in entries {
        v[*i] = c.clone();
    }
    v
}

/// `SU₂ × (S¹)²` whose anticanonical fiber is a principal `(ℂ*)²`.
pub fn torus_principal() -> Result<CatalogEntry> {
    let n = 5;
    let one = Qi::one();
    let extra = vec![cvec(&[(3, Qi::i())], n), cvec(&[(4, Qi::i())], n)];
    let hat = vec![cvec(&[(0, one.clone())], n), cvec(&[(2, one.clone()), (3, one)], n)];
    let model = su2_plus_abelian(2, &extra, hat)?;
    let mut e = entry("torus-principal".into(), Family::CompactSpherical, vec![], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 4, l: 1, k: 2 }),
        orbit_dim: Some(4),
        m_dim: Some(0),
        fiber: Some(FiberClass::Row(FiberTag::TorusPrincipal)),
        base_dim: Some(2),
        ..Expected::default()
    };
    e.tags.compact = true;
    e.tags.fiber_context = FiberContext { center_acts: false, base: BaseKind::Point, ..FiberContext::default() };
    Ok(e)
}

/// `SU₂ × S¹` on `SL₂(ℂ)/U_ℤ` with `S¹` acting through the right `U`-action.
pub fn sl2_uz() -> Result<CatalogEntry> {
    let n = 4;
    let one = Qi::one();
    let extra = vec![cvec(&[(3, one.clone())], n)];
    let hat = vec![cvec(&[(0, one.clone()), (3, one)], n)];
    let model = su2_plus_abelian(1, &extra, hat)?;
    let mut e = entry("sl2-uz".into(), Family::CompactSpherical, vec![], model);
    e.expected = Expected {
        codim: 2,
        orbit_dim: Some(4),
        m_dim: Some(0),
        fiber: Some(FiberClass::Row(FiberTag::LinearCStar)),
        base_dim: Some(3),
        ..Expected::default()
    };
    e.tags.compact = true;
    e.tags.fiber_context = FiberContext {
        unipotent_acts: true,
        base: BaseKind::AffineSpace,
        c_fiber_further: true,
        ..FiberContext::default()
    };
    e.caveats.push(UZ_CAVEAT.to_string());
    Ok(e)
}

/// `SU₂` acting on the affine quadric `SL₂(ℂ)/ℂ*` with hypersurface orbits.
pub fn su2_affine_quadric() -> Result<CatalogEntry> {
    let sl = sl_basis(2)?;
    let su = su_basis(2, 0)?;
    let rows = real_rows(&sl, &su.mats)?;
    let hat = vec![cvec(&[(0, Qi::one()), (2, Qi::one())], 3)];
    let model = OrbitModel::new(sl.complex_algebra()?, Subspace::span(6, rows)?, Subspace::span(3, hat)?)?;
    let mut e = entry("su2-affine-quadric".into(), Family::CompactSpherical, vec![], model);
    e.expected = Expected {
        codim: 1,
        cr_type: Some(CrType { n: 3, l: 1, k: 1 }),
        levi_signature: Some((1, 0)),
        orbit_dim: Some(3),
        m_dim: Some(0),
        fiber: Some(FiberClass::Row(FiberTag::Rank1Symmetric)),
        base_dim: Some(3),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 1, false);
    e.tags.compact = true;
    e.tags.simple = true;
    e.tags.affine_fiber = Some(su.real_algebra()?);
    e.tags.fiber_context = FiberContext { sphere_base: true, ..FiberContext::default() };
    Ok(e)
}

fn complex_heisenberg() -> Result<LieAlgebra<Qi>> {
    LieAlgebra::from_brackets(
        vec!["x".into(), "y".into(), "z".into()],
        vec![(0, 1, vec![(2, Qi::one())])],
    )
}

/// `Heis₃(ℝ) × ℝ` in the complex Heisenberg group, trivial isotropy.
pub fn heisenberg_solvmanifold() -> Result<CatalogEntry> {
    let model = OrbitModel::new(complex_heisenberg()?, Subspace::coordinate(6, &[0, 1, 2, 5]), Subspace::zero(3))?;
    let mut e = entry("heisenberg-solvmanifold".into(), Family::Parallelizable, vec![], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 4, l: 1, k: 2 }),
        orbit_dim: Some(4),
        m_dim: Some(2),
        fiber: Some(FiberClass::OutsideTable),
        base_dim: Some(0),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 0, true);
    e.tags.kahler = true;
    Ok(e)
}

/// The real torus `(S¹)²` in `(ℂ*)²`.
pub fn compact_torus() -> Result<CatalogEntry> {
    let model = OrbitModel::new(LieAlgebra::abelian(2), Subspace::coordinate(4, &[2, 3]), Subspace::zero(2))?;
    let mut e = entry("torus(2)".into(), Family::Parallelizable, vec![2], model);
    e.expected = Expected {
        codim: 2,
        cr_type: Some(CrType { n: 2, l: 0, k: 2 }),
        totally_real: true,
        orbit_dim: Some(2),
        m_dim: Some(0),
        fiber: Some(FiberClass::Row(FiberTag::TorusPrincipal)),
        base_dim: Some(0),
        ..Expected::default()
    };
    e.pi1 = pi1(2, 2, true);
    e.tags.compact = true;
    e.tags.kahler = true;
    Ok(e)
}

/// `SL₂(ℂ)` acting on itself.
pub fn complex_sl2() -> Result<CatalogEntry> {
    let ambient = sl_basis(2)?.complex_algebra()?;
    let model = OrbitModel::new(ambient, Subspace::full(6), Subspace::zero(3))?;
    let mut e = entry("complex-sl2".into(), Family::Parallelizable, vec![], model);
    e.expected = Expected {
        codim: 0,
        cr_type: Some(CrType { n: 6, l: 3, k: 0 }),
        orbit_dim: Some(6),
        m_dim: Some(6),
        fiber: Some(FiberClass::OutsideTable),
        base_dim: Some(0),
        ..Expected::default()
    };
    e.pi1 = pi1(0, 0, true);
    e.tags.simple = true;
    Ok(e)
}

/// Names of the shipped catalog, in canonical order.
pub fn names() -> Vec<String> {
    let mut out = Vec::new();
    for n in 2..=6 {
        for p in 1..n {
            out.push(format!("quadric({},{})", p, n - p));
        }
    }
    out.push("sp-quadric(1,1)".into());
    out.push("sp-quadric(1,2)".into());
    out.push("p2r".into());
    for n in 1..=4 {
        out.push(format!("twisted({n})"));
    }
    out.extend(
        [
            "quadric(2,1)*quadric(1,1)",
            "quadric(2,1)*circle",
            "torus-principal",
            "sl2-uz",
            "su2-affine-quadric",
            "heisenberg-solvmanifold",
            "torus(2)",
            "complex-sl2",
        ]
        .map(String::from),
    );
    out
}

fn parse_params(s: &str) -> Option<Vec<usize>> {
    s.split(',').map(|t| t.trim().parse().ok()).collect()
}

/// Builds an entry by name; parametrized families accept any valid parameters.
pub fn by_name(name: &str) -> Result<CatalogEntry> {
    let unknown = || Error::UnknownEntry(name.to_string());
    let name = name.trim();
    if let Some((head, rest)) = name.split_once('(') {
        if !head.is_empty() && rest.ends_with(')') && !rest.contains('(') {
            let args = parse_params(&rest[..rest.len() - 1]).ok_or_else(unknown)?;
            return match (head, args.as_slice()) {
                ("quadric", &[p, q]) => quadric_orbit(p, q),
                ("sp-quadric", &[p, q]) => sp_quadric_orbit(p, q),
                ("twisted", &[n]) => twisted_diagonal_orbit(n),
                ("torus", &[2]) => compact_torus(),
                _ => Err(unknown()),
            };
        }
    }
    match name {
        "p2r" => real_projective_orbit(),
        "quadric(2,1)*quadric(1,1)" => quadric_product(),
        "quadric(2,1)*circle" => quadric_circle(),
        "torus-principal" => torus_principal(),
        "sl2-uz" => sl2_uz(),
        "su2-affine-quadric" => su2_affine_quadric(),
        "heisenberg-solvmanifold" => heisenberg_solvmanifold(),
        "complex-sl2" => complex_sl2(),
        _ => Err(unknown()),
    }
}

/// The full shipped catalog.
pub fn all_entries() -> Result<Vec<CatalogEntry>> {
    names().iter().map(|n| by_name(n)).collect()
}
