//! Recomputes an entry's invariants and diffs them against the expected record.

use serde::Serialize;

use super::CatalogEntry;
use crate::complexify::{j_image, OrbitModel};
use crate::cr::CrType;
use crate::error::Result;
use crate::forms::symmetric_signature;
use crate::globalize::entry_fiber_class;
use crate::lie::LieAlgebra;
use crate::scalar::{Scalar, Q};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum RowStatus {
    Match,
    Mismatch,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyRow {
    pub check: &'static str,
    pub expected: String,
    pub computed: String,
    pub status: RowStatus,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct VerifyReport {
    pub entry: String,
    pub rows: Vec<VerifyRow>,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.status == RowStatus::Match)
    }

    pub fn mismatches(&self) -> Vec<&VerifyRow> {
        self.rows.iter().filter(|r| r.status == RowStatus::Mismatch).collect()
    }

    pub fn row(&self, check: &str) -> Option<&VerifyRow> {
        self.rows.iter().find(|r| r.check == check)
    }
}

fn push<T: PartialEq + std::fmt::Display>(rows: &mut Vec<VerifyRow>, check: &'static str, expected: T, computed: T) {
    let status = if expected == computed { RowStatus::Match } else { RowStatus::Mismatch };
    rows.push(VerifyRow { check, expected: expected.to_string(), computed: computed.to_string(), status });
}

fn fmt_type(t: CrType) -> String {
    format!("({},{},{})", t.n, t.l, t.k)
}

fn fmt_pair((a, b): (usize, usize)) -> String {
    format!("{{{a},{b}}}")
}

/// `m` is an ideal of `g` and `J`-stable in the ambient.
pub fn m_is_complex_ideal(model: &OrbitModel) -> bool {
    let m_amb = model.max_complex_ideal_ambient();
    model.g().is_ideal(&model.max_complex_ideal()) && j_image(&m_amb) == m_amb
}

/// Killing form negative semidefinite with radical equal to the center.
pub fn is_compact_algebra(g: &LieAlgebra<Q>) -> bool {
    let s = symmetric_signature(g.killing_form().matrix());
    s.pos == 0 && g.radical() == g.center()
}

/// The real radical is abelian and central.
pub fn radical_abelian_central(g: &LieAlgebra<Q>) -> (bool, bool) {
    let r = g.radical();
    let abelian = g.bracket_spaces(&r, &r).is_zero();
    let central = g.bracket_spaces(&g.full(), &r).is_zero();
    (abelian, central)
}

pub fn verify_entry(e: &CatalogEntry) -> Result<VerifyReport> {
    let m = &e.model;
    let x = &e.expected;
    let mut rows = Vec::new();

    push(&mut rows, "validate", true, m.g().validate().passed());
    push(&mut rows, "generic", true, m.is_generic());
    push(&mut rows, "codim", x.codim, m.codim());
    if let Some(d) = x.orbit_dim {
        push(&mut rows, "orbit-dim", d, m.orbit_dim());
    }

    let pair = m.cr_pair()?;
    push(&mut rows, "cr-axioms", true, pair.check(true)?.passed());
    let t = pair.cr_type()?;
    push(&mut rows, "cr-codim-is-codim", m.codim(), t.k);
    if let Some(expected) = x.cr_type {
        push(&mut rows, "cr-type", fmt_type(expected), fmt_type(t));
    }

    let levi = pair.levi_form()?;
    push(&mut rows, "totally-real", x.totally_real, levi.degenerate_domain);
    if let Some(sig) = x.levi_signature {
        let computed = if levi.value_dim == 1 {
            fmt_pair(levi.signature(&[Q::one()])?.unordered())
        } else {
            format!("value dimension {}", levi.value_dim)
        };
        push(&mut rows, "levi-signature", fmt_pair(sig), computed);
    }

    push(&mut rows, "m-ideal", true, m_is_complex_ideal(m));
    if let Some(d) = x.m_dim {
        push(&mut rows, "m-dim", d, m.max_complex_ideal().dim());
    }

    let fib = m.fibration()?;
    let j = &fib.j;
    let h = m.h();
    let within = m.g().normalizer_subalgebra(&h).contains(j);
    push(&mut rows, "n-cr-bounds", true, j.contains(&h) && within && m.g().is_subalgebra(j));
    if let Some(f) = x.fiber {
        push(&mut rows, "fiber", f, entry_fiber_class(e)?);
    }
    if let Some(b) = x.base_dim {
        push(&mut rows, "base-dim", b, fib.dim_base);
    }

    if e.tags.compact {
        push(&mut rows, "compact-form", true, is_compact_algebra(m.g()));
        let (abelian, central) = radical_abelian_central(m.g());
        push(&mut rows, "radical-abelian", true, abelian);
        push(&mut rows, "radical-central", true, central);
    }
    Ok(VerifyReport { entry: e.name.clone(), rows })
}
