//! Globalization criteria: the radical test, the homotopy condition on
//! fundamental groups, and the fine-classification conclusions.

use std::collections::BTreeMap;

use serde::Serialize;

use crate::catalog::taxon::{classify_fiber, involves_affine_quadric, FiberClass, FiberContext};
use crate::catalog::{CatalogEntry, Family, Pi1Data};
use crate::complexify::OrbitModel;
use crate::error::{Error, Result};
use crate::lie::LieAlgebra;
use crate::linalg::Subspace;
use crate::scalar::Scalar;

/// A finitely generated abelian group `ℤ^rank ⊕ ⊕ ℤ/d_i`, with `d_1 | d_2 | …`.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize)]
pub struct Pi1Descriptor {
    pub rank: usize,
    pub torsion: Vec<u64>,
}

fn prime_powers(mut n: u64) -> Vec<(u64, u64)> {
    let mut out = Vec::new();
    let mut p = 2;
    while p * p <= n {
        if n.is_multiple_of(p) {
            let mut pk = 1;
            while n.is_multiple_of(p) {
                n /= p;
                pk *= p;
            }
            out.push((p, pk));
        }
        p += 1;
    }
    if n > 1 {
        out.push((n, n));
    }
    out
}

impl Pi1Descriptor {
    /// Canonical invariant-factor form of `ℤ^rank ⊕ ⊕ ℤ/t`.
    pub fn new(rank: usize, torsion: &[u64]) -> Result<Self> {
        let mut by_prime: BTreeMap<u64, Vec<u64>> = BTreeMap::new();
        for &t in torsion {
            if t == 0 {
                return Err(Error::Parameter("torsion orders must be positive".into()));
            }
            for (p, pk) in prime_powers(t) {
                by_prime.entry(p).or_default().push(pk);
            }
        }
        let len = by_prime.values().map(Vec::len).max().unwrap_or(0);
        let mut factors = vec![1u64; len];
        for powers in by_prime.values_mut() {
            powers.sort_unstable_by(|a, b| b.cmp(a));
            for (i, pk) in powers.iter().enumerate() {
                factors[len - 1 - i] *= pk;
            }
        }
        Ok(Pi1Descriptor { rank, torsion: factors })
    }

    pub fn free(rank: usize) -> Self {
        Pi1Descriptor { rank, torsion: Vec::new() }
    }

    pub fn is_trivial(&self) -> bool {
        self.rank == 0 && self.torsion.is_empty()
    }
}

impl std::fmt::Display for Pi1Descriptor {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut parts = Vec::new();
        match self.rank {
            0 => {}
            1 => parts.push("Z".to_string()),
            r => parts.push(format!("Z^{r}")),
        }
        parts.extend(self.torsion.iter().map(|t| format!("Z/{t}")));
        if parts.is_empty() {
            f.write_str("0")
        } else {
            f.write_str(&parts.join("+"))
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ConditionC {
    Pass,
    WeakPass,
    Fail,
    Unknown,
}

impl ConditionC {
    pub fn label(self) -> &'static str {
        match self {
            ConditionC::Pass => "pass",
            ConditionC::WeakPass => "weak-pass",
            ConditionC::Fail => "fail",
            ConditionC::Unknown => "unknown",
        }
    }
}

/// Decides what rank data can say about `π₁(real) → π₁(complex)` having finite cokernel.
pub fn condition_c_check(real: &Pi1Descriptor, complex: &Pi1Descriptor, known_surjective: bool) -> ConditionC {
    if real.rank < complex.rank {
        ConditionC::Fail
    } else if known_surjective {
        ConditionC::Pass
    } else {
        ConditionC::WeakPass
    }
}

pub fn condition_c_of(data: Option<&Pi1Data>) -> ConditionC {
    data.map_or(ConditionC::Unknown, |d| condition_c_check(&d.real, &d.complex, d.surjective))
}

/// `[r̂, r̂] ⊆ ĵ` for the radical `r̂` of the ambient algebra.
pub fn radical_abelian_check<F: Scalar>(ambient: &LieAlgebra<F>, j_hat: &Subspace<F>) -> bool {
    let r = ambient.radical();
    j_hat.contains(&ambient.bracket_spaces(&r, &r))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Overall {
    /// Both the radical test and the homotopy condition pass.
    Globalizable,
    GlobalizableAfterFiniteQuotient,
    NotDecidableAtAlgebraLevel,
}

impl Overall {
    pub fn label(self) -> &'static str {
        match self {
            Overall::Globalizable => "globalizable-by-homotopy-criterion",
            Overall::GlobalizableAfterFiniteQuotient => "globalizable-after-finite-quotient",
            Overall::NotDecidableAtAlgebraLevel => "not-decidable-at-algebra-level",
        }
    }
}

impl std::fmt::Display for Overall {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.label())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GlobalizationVerdict {
    pub radical_abelian: bool,
    pub condition_c: ConditionC,
    pub affine_quadric: bool,
    pub real_projective_plane: bool,
    pub overall: Overall,
    pub notes: Vec<String>,
}

pub const P2R_NOTE: &str =
    "restricting to the preimage of SO3(R) satisfies the homotopy condition, so that smaller group does globalize";

pub const AFFINE_QUADRIC_NOTE: &str = "the two-dimensional affine quadric occurs; globalization must be settled case by case";

/// Inputs of the verdict that do not depend on how the model was obtained.
#[derive(Clone, Debug)]
pub struct VerdictInput {
    pub radical_abelian: bool,
    pub condition_c: ConditionC,
    pub affine_quadric: bool,
    pub real_projective_plane: bool,
    /// The model lies inside the classified range, so the classification
    /// settles the cases whose topology is not tabulated.
    pub classified: bool,
}

pub fn combine(input: &VerdictInput) -> GlobalizationVerdict {
    let mut notes = Vec::new();
    let overall = if input.real_projective_plane {
        notes.push(P2R_NOTE.to_string());
        Overall::NotDecidableAtAlgebraLevel
    } else if input.affine_quadric {
        notes.push(AFFINE_QUADRIC_NOTE.to_string());
        Overall::NotDecidableAtAlgebraLevel
    } else if !input.radical_abelian {
        Overall::NotDecidableAtAlgebraLevel
    } else {
        match input.condition_c {
            ConditionC::Pass => Overall::Globalizable,
            ConditionC::WeakPass => Overall::GlobalizableAfterFiniteQuotient,
            ConditionC::Unknown if input.classified => {
                notes.push("fundamental groups not tabulated; the classification covers this case".into());
                Overall::GlobalizableAfterFiniteQuotient
            }
            ConditionC::Unknown | ConditionC::Fail => Overall::NotDecidableAtAlgebraLevel,
        }
    };
    GlobalizationVerdict {
        radical_abelian: input.radical_abelian,
        condition_c: input.condition_c,
        affine_quadric: input.affine_quadric,
        real_projective_plane: input.real_projective_plane,
        overall,
        notes,
    }
}

/// Fiber row of an orbit model, using an explicit affine-rational fiber when given.
pub fn model_fiber_class(
    model: &OrbitModel,
    affine_fiber: Option<&LieAlgebra<crate::scalar::Q>>,
    ctx: &FiberContext,
) -> Result<FiberClass> {
    match affine_fiber {
        Some(f) => Ok(classify_fiber(f, ctx)),
        None => Ok(classify_fiber(&model.fibration()?.fiber, ctx)),
    }
}

pub fn entry_fiber_class(entry: &CatalogEntry) -> Result<FiberClass> {
    model_fiber_class(&entry.model, entry.tags.affine_fiber.as_ref(), &entry.tags.fiber_context)
}

pub fn affine_quadric_involvement(class: FiberClass, ctx: &FiberContext) -> bool {
    involves_affine_quadric(class, ctx)
}

pub fn verdict(entry: &CatalogEntry) -> Result<GlobalizationVerdict> {
    let class = entry_fiber_class(entry)?;
    let m = &entry.model;
    Ok(combine(&VerdictInput {
        radical_abelian: radical_abelian_check(m.ambient(), &m.complex_normalizer()),
        condition_c: condition_c_of(entry.pi1.as_ref()),
        affine_quadric: affine_quadric_involvement(class, &entry.tags.fiber_context),
        real_projective_plane: entry.family == Family::RealProjective,
        classified: true,
    }))
}

/// Verdict for a model outside the catalog: no topology, no classification.
pub fn model_verdict(model: &OrbitModel) -> Result<GlobalizationVerdict> {
    let ctx = FiberContext::default();
    let class = model_fiber_class(model, None, &ctx)?;
    Ok(combine(&VerdictInput {
        radical_abelian: radical_abelian_check(model.ambient(), &model.complex_normalizer()),
        condition_c: ConditionC::Unknown,
        affine_quadric: affine_quadric_involvement(class, &ctx),
        real_projective_plane: false,
        classified: false,
    }))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FineRow {
    pub name: &'static str,
    pub applicable: bool,
    pub pass: bool,
    pub detail: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FineReport {
    pub rows: Vec<FineRow>,
}

impl FineReport {
    /// No applicable row failed.
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| !r.applicable || r.pass)
    }

    pub fn row(&self, name: &str) -> Option<&FineRow> {
        self.rows.iter().find(|r| r.name == name)
    }
}

/// Degenerate anticanonical fibration with zero isotropy algebra.
pub fn is_parallelizable(model: &OrbitModel) -> Result<bool> {
    let f = model.fibration()?;
    Ok(f.degenerate && f.h_dim == 0)
}

pub fn fine_classification_checks_model(model: &OrbitModel, kahler: bool) -> Result<FineReport> {
    let levi = model.cr_pair()?.levi_form()?;
    let fib = model.fibration()?;
    let codim = model.codim();
    let mut rows = Vec::new();

    let abelian = fib.fiber.is_abelian();
    rows.push(FineRow {
        name: "fiber-is-torus",
        applicable: levi.nondegenerate,
        pass: abelian && fib.dim_fiber <= codim,
        detail: format!("fiber dim {} (abelian: {abelian}), codim {codim}", fib.dim_fiber),
    });

    let parallel = fib.degenerate && fib.h_dim == 0;
    let g = model.g();
    let m = model.max_complex_ideal();
    let m_solvable = g.subalgebra(&m)?.is_solvable();
    let applicable = parallel && kahler;
    rows.push(FineRow {
        name: "m-solvable",
        applicable,
        pass: m_solvable,
        detail: format!("dim m = {}", m.dim()),
    });
    rows.push(FineRow {
        name: "g-solvable",
        applicable: applicable && codim <= 2,
        pass: g.is_solvable(),
        detail: format!("dim g = {}, codim {codim}", g.dim()),
    });
    Ok(FineReport { rows })
}

pub fn fine_classification_checks(entry: &CatalogEntry) -> Result<FineReport> {
    fine_classification_checks_model(&entry.model, entry.tags.kahler)
}

/// What each sub-check tests, for `--explain`.
pub fn explain(check: &str) -> &'static str {
    match check {
        "radical-abelian" => {
            "tests whether the derived algebra of the ambient radical lies in the complex normalizer; if so the complex normalizer group acts on the fiber and a globalization of the CR bundle exists"
        }
        "condition-c" => {
            "compares fundamental groups of the real and complex normalizer quotients; a finite cokernel lets the bundle globalize, possibly after a finite quotient"
        }
        "affine-quadric" => {
            "flags fibers built from SL2(C)/C*, where the real group has trivial fundamental group but the complex one has Z"
        }
        "real-projective-plane" => "the base P2(R) in P2(C) has the same fundamental-group defect",
        "overall" => "a model globalizes unless the affine quadric is involved or its base is the real projective plane",
        "fiber-is-torus" => "a Levi-nondegenerate orbit has anticanonical fiber (C*)^k with k at most the codimension",
        "m-solvable" => "a parallelizable Kaehler orbit has solvable maximal complex ideal",
        "g-solvable" => "in codimension at most two a parallelizable Kaehler orbit has solvable g",
        _ => "",
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::Qi;

    #[test]
    fn invariant_factors() {
        let d = Pi1Descriptor::new(1, &[6, 4, 1]).unwrap();
        assert_eq!(d.torsion, vec![2, 12]);
        assert_eq!(d.to_string(), "Z+Z/2+Z/12");
        assert!(Pi1Descriptor::new(0, &[0]).is_err());
        assert!(Pi1Descriptor::new(0, &[]).unwrap().is_trivial());
    }

    #[test]
    fn condition_c_rule() {
        let z0 = Pi1Descriptor::free(0);
        let z1 = Pi1Descriptor::free(1);
        assert_eq!(condition_c_check(&z0, &z1, false), ConditionC::Fail);
        assert_eq!(condition_c_check(&z0, &z1, true), ConditionC::Fail);
        assert_eq!(condition_c_check(&z1, &z1, false), ConditionC::WeakPass);
        assert_eq!(condition_c_check(&z1, &z1, true), ConditionC::Pass);
    }

    /// `aff(1) ⊕ sl₂` with `[a, b] = b`.
    fn solvable_plus_sl2() -> LieAlgebra<Qi> {
        let one = Qi::one();
        let two = Qi::from_int(2);
        LieAlgebra::from_brackets(
            ["h", "e", "f", "a", "b"].map(String::from).to_vec(),
            vec![
                (0, 1, vec![(1, two.clone())]),
                (0, 2, vec![(2, two.negated())]),
                (1, 2, vec![(0, one.clone())]),
                (3, 4, vec![(4, one)]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn radical_test_sees_the_derived_line() {
        let g = solvable_plus_sl2();
        assert!(g.validate().passed());
        let missing = Subspace::coordinate(5, &[0, 1, 2, 3]);
        assert!(g.is_subalgebra(&missing));
        assert!(!radical_abelian_check(&g, &missing));
        assert!(radical_abelian_check(&g, &Subspace::full(5)));
        assert!(radical_abelian_check(&g, &Subspace::coordinate(5, &[0, 1, 2, 4])));
    }

    #[test]
    fn weak_pass_never_beats_pass() {
        let mut input = VerdictInput {
            radical_abelian: true,
            condition_c: ConditionC::WeakPass,
            affine_quadric: false,
            real_projective_plane: false,
            classified: true,
        };
        let weak = combine(&input).overall;
        input.condition_c = ConditionC::Pass;
        assert!(combine(&input).overall <= weak);
        assert_eq!(combine(&input).overall, Overall::Globalizable);
    }
}
