//! Line-oriented report records, rendered as text or as JSON lines.
//!
//! Every JSON line carries `schema` and `record` first, then the fields in
//! insertion order, so output is byte-stable for identical input.

use serde::Serialize;
use serde_json::{json, Value};

use crate::catalog::{CatalogEntry, VerifyReport};
use crate::complexify::{FibrationReport, FiberGlobalizationReport};
use crate::cr::{AxiomReport, CrType, LeviReport, LeviSignature, Status};
use crate::globalize::{explain, FineReport, GlobalizationVerdict};
use crate::lie::{LieAlgebra, ValidationReport};
use crate::scalar::{Scalar, Q};

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Format {
    Text,
    Json,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Record {
    pub kind: &'static str,
    pub fields: Vec<(String, Value)>,
}

impl Record {
    pub fn new(kind: &'static str) -> Self {
        Record { kind, fields: Vec::new() }
    }

    pub fn field(mut self, key: &str, value: impl Serialize) -> Self {
        self.fields.push((key.to_string(), serde_json::to_value(value).expect("serializable")));
        self
    }

    pub fn get(&self, key: &str) -> Option<&Value> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v)
    }

    pub fn to_json_line(&self) -> String {
        let mut out = format!("{{\"schema\":{SCHEMA_VERSION},\"record\":{}", json!(self.kind));
        for (k, v) in &self.fields {
            out.push(',');
            out.push_str(&json!(k).to_string());
            out.push(':');
            out.push_str(&v.to_string());
        }
        out.push('}');
        out
    }

    pub fn to_text_line(&self) -> String {
        let mut out = self.kind.to_string();
        for (k, v) in &self.fields {
            let shown = match v {
                Value::String(s) if !s.contains(' ') && !s.is_empty() => s.clone(),
                other => other.to_string(),
            };
            out.push_str(&format!(" {k}={shown}"));
        }
        out
    }

    pub fn render(&self, format: Format) -> String {
        match format {
            Format::Text => self.to_text_line(),
            Format::Json => self.to_json_line(),
        }
    }

    fn explained(self, on: bool, check: &str) -> Self {
        let text = explain(check);
        if on && !text.is_empty() {
            self.field("explain", text)
        } else {
            self
        }
    }
}

fn vec_str<F: Scalar>(v: &[F]) -> String {
    format!("[{}]", v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
}

fn pass(b: bool) -> &'static str {
    if b {
        "pass"
    } else {
        "fail"
    }
}

pub fn validation_records(src: &str, v: &ValidationReport) -> Vec<Record> {
    let row = |name: &str, hit: Option<(usize, usize, usize)>| {
        let r = Record::new("validate").field("source", src).field("check", name).field("status", pass(hit.is_none()));
        match hit {
            Some((i, j, k)) => r.field("witness", [i, j, k]),
            None => r,
        }
    };
    vec![row("antisymmetry", v.antisymmetry), row("jacobi", v.jacobi)]
}

pub fn structure_records<F: Scalar>(src: &str, a: &LieAlgebra<F>) -> Vec<Record> {
    let derived: Vec<usize> = a.derived_series().iter().map(|s| s.dim()).collect();
    let lower: Vec<usize> = a.lower_central_series().iter().map(|s| s.dim()).collect();
    vec![Record::new("structure")
        .field("source", src)
        .field("field", F::KIND)
        .field("dimension", a.dim())
        .field("derived_series", derived)
        .field("lower_central_series", lower)
        .field("solvable", a.is_solvable())
        .field("nilpotent", a.is_nilpotent())
        .field("radical_dim", a.radical().dim())
        .field("center_dim", a.center().dim())]
}

pub fn axiom_records(src: &str, r: &AxiomReport) -> Vec<Record> {
    r.rows
        .iter()
        .map(|row| {
            let status = match row.status {
                Status::Pass => "pass",
                Status::Fail => "fail",
                Status::NotCheckable => "not-checkable",
            };
            let rec = Record::new("cr-axiom").field("source", src).field("condition", row.condition.label()).field("status", status);
            if row.witness.is_empty() {
                rec
            } else {
                rec.field("witness", row.witness.iter().map(|w| vec_str(w)).collect::<Vec<_>>())
            }
        })
        .collect()
}

pub fn cr_type_record(src: &str, t: CrType) -> Record {
    Record::new("cr-type").field("source", src).field("n", t.n).field("l", t.l).field("k", t.k)
}

pub fn levi_records(src: &str, l: &LeviReport, sig: Option<(&[Q], LeviSignature)>) -> Vec<Record> {
    let mut rec = Record::new("levi")
        .field("source", src)
        .field("domain_dim", l.domain.len())
        .field("value_dim", l.value_dim)
        .field("kernel_dim", l.kernel.dim())
        .field("nondegenerate", l.nondegenerate)
        .field("degenerate_domain", l.degenerate_domain);
    if let Some((c, s)) = sig {
        let [a, b] = s.orderings();
        rec = rec
            .field("codirection", vec_str(c))
            .field("signature", [a.pos, a.neg, a.zero])
            .field("signature_swapped", [b.pos, b.neg, b.zero]);
    }
    vec![rec]
}

pub fn fibration_records(src: &str, f: &FibrationReport) -> Vec<Record> {
    vec![Record::new("fibration")
        .field("source", src)
        .field("degenerate", f.degenerate)
        .field("dim_fiber", f.dim_fiber)
        .field("dim_base", f.dim_base)
        .field("h_dim", f.h_dim)
        .field("fiber_abelian", f.fiber.is_abelian())
        .field("discrete_isotropy", f.discrete_isotropy)
        .field("caveats", &f.caveats)]
}

pub fn fiber_globalization_records(src: &str, r: &FiberGlobalizationReport) -> Vec<Record> {
    r.rows
        .iter()
        .map(|row| {
            Record::new("fiber-globalization")
                .field("source", src)
                .field("fact", row.name)
                .field("status", pass(row.pass))
                .field("detail", &row.detail)
        })
        .collect()
}

pub fn verdict_records(src: &str, v: &GlobalizationVerdict, explain_on: bool) -> Vec<Record> {
    let sub = |check: &str, status: &str| {
        Record::new("globalize").field("source", src).field("check", check).field("status", status)
    };
    let mut out = vec![
        sub("radical-abelian", pass(v.radical_abelian)).explained(explain_on, "radical-abelian"),
        sub("condition-c", v.condition_c.label()).explained(explain_on, "condition-c"),
        sub("affine-quadric", if v.affine_quadric { "involved" } else { "not-involved" })
            .explained(explain_on, "affine-quadric"),
        sub("real-projective-plane", if v.real_projective_plane { "yes" } else { "no" })
            .explained(explain_on, "real-projective-plane"),
    ];
    let mut overall = sub("overall", v.overall.label()).explained(explain_on, "overall");
    if !v.notes.is_empty() {
        overall = overall.field("notes", &v.notes);
    }
    out.push(overall);
    out
}

pub fn fine_records(src: &str, r: &FineReport, explain_on: bool) -> Vec<Record> {
    r.rows
        .iter()
        .map(|row| {
            let status = if !row.applicable { "not-applicable" } else { pass(row.pass) };
            Record::new("fine-class")
                .field("source", src)
                .field("check", row.name)
                .field("status", status)
                .field("detail", &row.detail)
                .explained(explain_on, row.name)
        })
        .collect()
}

pub fn verify_records(r: &VerifyReport) -> Vec<Record> {
    let mut out: Vec<Record> = r
        .rows
        .iter()
        .map(|row| {
            Record::new("verify")
                .field("entry", &r.entry)
                .field("check", row.check)
                .field("expected", &row.expected)
                .field("computed", &row.computed)
                .field("status", row.status)
        })
        .collect();
    out.push(
        Record::new("verify-summary")
            .field("entry", &r.entry)
            .field("rows", r.rows.len())
            .field("mismatches", r.mismatches().len())
            .field("status", if r.passed() { "all-match" } else { "mismatch" }),
    );
    out
}

pub fn entry_summary(e: &CatalogEntry, v: &GlobalizationVerdict) -> Record {
    Record::new("entry")
        .field("name", &e.name)
        .field("family", e.family.label())
        .field("params", &e.params)
        .field("codim", e.expected.codim)
        .field("verdict", v.overall.label())
}

pub fn entry_detail(e: &CatalogEntry, v: &GlobalizationVerdict) -> Vec<Record> {
    let x = &e.expected;
    let mut rec = entry_summary(e, v)
        .field("orbit_dim", e.model.orbit_dim())
        .field("totally_real", x.totally_real)
        .field("m_dim", e.model.max_complex_ideal().dim());
    if let Some(t) = x.cr_type {
        rec = rec.field("cr_type", [t.n, t.l, t.k]);
    }
    if let Some(s) = x.levi_signature {
        rec = rec.field("levi_signature", [s.0, s.1]);
    }
    if let Some(f) = x.fiber {
        rec = rec.field("fiber", f.label());
    }
    if let Some(p) = &e.pi1 {
        rec = rec
            .field("pi1_real", p.real.to_string())
            .field("pi1_complex", p.complex.to_string())
            .field("pi1_surjective", p.surjective);
    }
    rec = rec.field("compact", e.tags.compact).field("kahler", e.tags.kahler);
    if !e.caveats.is_empty() {
        rec = rec.field("caveats", &e.caveats);
    }
    if !v.notes.is_empty() {
        rec = rec.field("notes", &v.notes);
    }
    vec![rec]
}

pub fn error_record(src: &str, message: &str) -> Record {
    Record::new("error").field("source", src).field("message", message)
}

pub fn skipped_record(src: &str, analysis: &str, reason: &str) -> Record {
    Record::new("skipped").field("source", src).field("analysis", analysis).field("reason", reason)
}
