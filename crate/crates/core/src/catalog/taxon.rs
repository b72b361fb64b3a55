//! Rows of the affine-rational fiber table, matched by coarse exact invariants.

use serde::Serialize;

use crate::lie::LieAlgebra;
use crate::scalar::Q;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberTag {
    /// `(ℂ*)²` over a point, principal.
    TorusPrincipal,
    /// `ℂ*` over `ℂ^m` with a linear unipotent action.
    LinearCStar,
    /// `ℂ^n` obtained by removing root groups from a unipotent radical.
    RootRemoved,
    /// Affine symmetric space of rank one.
    Rank1Symmetric,
    /// Affine spherical space of rank two.
    Rank2Symmetric,
    /// `SL_{m+1}/SL_m` over `T(ℙ_m)`.
    SlSeries,
    /// `Sp_{2n}/(Sp_{2n-2} × ℂ*)` over `T(ℙ_n(ℍ))`.
    SpSeries,
    /// `SO_9/Spin_7`.
    So9Spin7,
}

impl FiberTag {
    pub const ALL: [FiberTag; 8] = [
        FiberTag::TorusPrincipal,
        FiberTag::LinearCStar,
        FiberTag::RootRemoved,
        FiberTag::Rank1Symmetric,
        FiberTag::Rank2Symmetric,
        FiberTag::SlSeries,
        FiberTag::SpSeries,
        FiberTag::So9Spin7,
    ];

    pub fn label(self) -> &'static str {
        match self {
            FiberTag::TorusPrincipal => "torus-principal",
            FiberTag::LinearCStar => "linear-C*",
            FiberTag::RootRemoved => "root-removed",
            FiberTag::Rank1Symmetric => "rank1-symmetric",
            FiberTag::Rank2Symmetric => "rank2-symmetric",
            FiberTag::SlSeries => "SL_m-series",
            FiberTag::SpSeries => "Sp-series",
            FiberTag::So9Spin7 => "SO9-Spin7",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum FiberClass {
    /// Zero-dimensional fiber.
    Point,
    Row(FiberTag),
    OutsideTable,
}

impl FiberClass {
    pub fn label(self) -> &'static str {
        match self {
            FiberClass::Point => "point",
            FiberClass::Row(t) => t.label(),
            FiberClass::OutsideTable => "outside-table",
        }
    }
}

impl std::fmt::Display for FiberClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum BaseKind {
    #[default]
    Point,
    AffineSpace,
    TangentProjective,
    TangentQuaternionic,
    Other,
}

/// Model-supplied data the algebra alone does not determine.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
pub struct FiberContext {
    pub center_acts: bool,
    pub unipotent_acts: bool,
    pub base: BaseKind,
    /// The symmetric base is `S²`.
    pub sphere_base: bool,
    /// A `ℂ`-fiber that fibers further onto an affine quadric.
    pub c_fiber_further: bool,
    pub rank_two: bool,
}

/// Coarse invariants of a fiber algebra.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct FiberInvariants {
    pub dim: usize,
    pub abelian: bool,
    pub nilpotent: bool,
    pub perfect: bool,
    pub derived_length: Option<usize>,
    pub radical_dim: usize,
}

impl FiberInvariants {
    pub fn of(f: &LieAlgebra<Q>) -> Self {
        FiberInvariants {
            dim: f.dim(),
            abelian: f.is_abelian(),
            nilpotent: f.is_nilpotent(),
            perfect: f.derived_algebra().dim() == f.dim(),
            derived_length: f.derived_length(),
            radical_dim: f.radical().dim(),
        }
    }
}

pub fn classify_invariants(inv: &FiberInvariants, ctx: &FiberContext) -> FiberClass {
    if inv.dim == 0 {
        return FiberClass::Point;
    }
    if inv.abelian && inv.dim == 2 {
        return FiberClass::Row(FiberTag::TorusPrincipal);
    }
    if inv.abelian && inv.dim == 1 {
        return FiberClass::Row(if ctx.base == BaseKind::TangentProjective {
            FiberTag::SlSeries
        } else {
            FiberTag::LinearCStar
        });
    }
    if inv.nilpotent && ctx.unipotent_acts {
        return FiberClass::Row(FiberTag::RootRemoved);
    }
    if ctx.rank_two {
        return FiberClass::Row(FiberTag::Rank2Symmetric);
    }
    if inv.perfect && inv.radical_dim == 0 {
        if inv.dim == 3 {
            return FiberClass::Row(if ctx.base == BaseKind::TangentQuaternionic {
                FiberTag::SpSeries
            } else {
                FiberTag::Rank1Symmetric
            });
        }
        if inv.dim == 36 && ctx.base == BaseKind::Point {
            return FiberClass::Row(FiberTag::So9Spin7);
        }
    }
    FiberClass::OutsideTable
}

pub fn classify_fiber(f: &LieAlgebra<Q>, ctx: &FiberContext) -> FiberClass {
    classify_invariants(&FiberInvariants::of(f), ctx)
}

/// The two-dimensional affine quadric occurs in the fiber.
pub fn involves_affine_quadric(class: FiberClass, ctx: &FiberContext) -> bool {
    match class {
        FiberClass::Row(FiberTag::SpSeries) => true,
        FiberClass::Row(FiberTag::Rank1Symmetric) => ctx.sphere_base,
        _ => ctx.c_fiber_further,
    }
}
