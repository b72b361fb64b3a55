//! JSON file formats for algebras, CR pairs and orbit models.
//!
//! A rational literal is a JSON integer or a string `"n"` / `"n/d"`; a
//! Gaussian rational is a pair `["re", "im"]` of rational literals (a bare
//! rational literal is also accepted on `Q_i`). Brackets are listed sparsely
//! as `[i, j, [[k, c], ...]]` with `i < j`.

use serde_json::{json, Map, Value};

use crate::catalog::CatalogEntry;
use crate::complexify::{AnyAlgebra, OrbitModel};
use crate::cr::CrPair;
use crate::error::{Error, Result};
use crate::lie::{default_names, LieAlgebra};
use crate::linalg::{Matrix, Subspace};
use crate::scalar::{format_q, parse_q, FieldKind, Qi, Scalar, Q};

fn fmt_err(msg: impl Into<String>) -> Error {
    Error::Format(msg.into())
}

/// Field-specific literal codec.
pub trait Literal: Scalar {
    fn parse(v: &Value) -> Result<Self>;
    fn to_json(&self) -> Value;
}

fn parse_rational(v: &Value) -> Result<Q> {
    match v {
        Value::String(s) => parse_q(s),
        Value::Number(n) => n
            .as_i64()
            .map(|i| Q::from_integer(i.into()))
            .ok_or_else(|| Error::BadLiteral(n.to_string())),
        other => Err(Error::BadLiteral(other.to_string())),
    }
}

impl Literal for Q {
    fn parse(v: &Value) -> Result<Self> {
        parse_rational(v)
    }

    fn to_json(&self) -> Value {
        Value::String(format_q(self))
    }
}

impl Literal for Qi {
    fn parse(v: &Value) -> Result<Self> {
        match v {
            Value::Array(a) if a.len() == 2 => Ok(Qi::new(parse_rational(&a[0])?, parse_rational(&a[1])?)),
            Value::Array(_) => Err(Error::BadLiteral(v.to_string())),
            other => Ok(Qi::from_q(parse_rational(other)?)),
        }
    }

    fn to_json(&self) -> Value {
        json!([format_q(&self.re), format_q(&self.im)])
    }
}

fn field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Value> {
    obj.get(key).ok_or_else(|| fmt_err(format!("missing field `{key}`")))
}

fn as_array<'a>(v: &'a Value, what: &str) -> Result<&'a Vec<Value>> {
    v.as_array().ok_or_else(|| fmt_err(format!("`{what}` must be an array")))
}

fn as_index(v: &Value, dim: usize, what: &str) -> Result<usize> {
    let i = v.as_u64().ok_or_else(|| fmt_err(format!("{what} must be a nonnegative integer")))? as usize;
    if i >= dim {
        return Err(fmt_err(format!("{what} {i} out of range for dimension {dim}")));
    }
    Ok(i)
}

fn parse_vector<F: Literal>(v: &Value, len: usize, what: &str) -> Result<Vec<F>> {
    let a = as_array(v, what)?;
    if a.len() != len {
        return Err(Error::DimensionMismatch { expected: len, found: a.len() });
    }
    a.iter().map(F::parse).collect()
}

fn parse_rows<F: Literal>(v: &Value, len: usize, what: &str) -> Result<Vec<Vec<F>>> {
    as_array(v, what)?.iter().map(|r| parse_vector(r, len, what)).collect()
}

fn parse_field(obj: &Map<String, Value>) -> Result<FieldKind> {
    serde_json::from_value(field(obj, "field")?.clone())
        .map_err(|_| fmt_err("`field` must be \"Q\" or \"Q_i\""))
}

fn parse_algebra_as<F: Literal>(obj: &Map<String, Value>) -> Result<LieAlgebra<F>> {
    let dim = field(obj, "dimension")?
        .as_u64()
        .ok_or_else(|| fmt_err("`dimension` must be a nonnegative integer"))? as usize;
    let names = match obj.get("basis") {
        None => default_names(dim),
        Some(b) => {
            let names: Vec<String> = as_array(b, "basis")?
                .iter()
                .map(|n| n.as_str().map(String::from).ok_or_else(|| fmt_err("basis names must be strings")))
                .collect::<Result<_>>()?;
            if names.len() != dim {
                return Err(Error::DimensionMismatch { expected: dim, found: names.len() });
            }
            names
        }
    };
    let mut brackets = Vec::new();
    for entry in as_array(field(obj, "brackets")?, "brackets")? {
        let e = as_array(entry, "bracket entry")?;
        if e.len() != 3 {
            return Err(fmt_err("bracket entries are [i, j, [[k, c], ...]]"));
        }
        let i = as_index(&e[0], dim, "bracket index")?;
        let j = as_index(&e[1], dim, "bracket index")?;
        if i >= j {
            return Err(fmt_err(format!("bracket entry ({i}, {j}) must have i < j")));
        }
        let mut terms = Vec::new();
        for t in as_array(&e[2], "bracket terms")? {
            let t = as_array(t, "bracket term")?;
            if t.len() != 2 {
                return Err(fmt_err("bracket terms are [k, c]"));
            }
            terms.push((as_index(&t[0], dim, "bracket target")?, F::parse(&t[1])?));
        }
        brackets.push((i, j, terms));
    }
    LieAlgebra::from_brackets(names, brackets)
}

pub fn parse_algebra(obj: &Map<String, Value>) -> Result<AnyAlgebra> {
    match parse_field(obj)? {
        FieldKind::Rational => Ok(AnyAlgebra::Real(parse_algebra_as(obj)?)),
        FieldKind::Gaussian => Ok(AnyAlgebra::Complex(parse_algebra_as(obj)?)),
    }
}

fn real_algebra(obj: &Map<String, Value>) -> Result<LieAlgebra<Q>> {
    match parse_field(obj)? {
        FieldKind::Rational => parse_algebra_as(obj),
        FieldKind::Gaussian => Err(Error::WrongField { expected: FieldKind::Rational }),
    }
}

fn complex_algebra(obj: &Map<String, Value>) -> Result<LieAlgebra<Qi>> {
    match parse_field(obj)? {
        FieldKind::Gaussian => parse_algebra_as(obj),
        FieldKind::Rational => Err(Error::WrongField { expected: FieldKind::Gaussian }),
    }
}

/// A CR pair together with its loader options.
#[derive(Clone, Debug)]
pub struct CrFile {
    pub pair: CrPair,
    pub connected_isotropy: bool,
    pub codirection: Option<Vec<Q>>,
}

/// An orbit model together with its loader options.
#[derive(Clone, Debug)]
pub struct OrbitFile {
    pub model: OrbitModel,
    pub connected_isotropy: bool,
    pub codirection: Option<Vec<Q>>,
    pub kahler: bool,
}

#[derive(Clone, Debug)]
pub enum Document {
    Algebra(AnyAlgebra),
    Cr(CrFile),
    Orbit(OrbitFile),
}

fn flag(obj: &Map<String, Value>, key: &str, default: bool) -> Result<bool> {
    match obj.get(key) {
        None => Ok(default),
        Some(v) => v.as_bool().ok_or_else(|| fmt_err(format!("`{key}` must be a boolean"))),
    }
}

fn codirection(obj: &Map<String, Value>) -> Result<Option<Vec<Q>>> {
    obj.get("codirection")
        .map(|v| as_array(v, "codirection")?.iter().map(parse_rational).collect())
        .transpose()
}

fn parse_cr(obj: &Map<String, Value>) -> Result<CrFile> {
    let g = real_algebra(obj)?;
    let d = g.dim();
    let h = Subspace::span(d, parse_rows::<Q>(field(obj, "h_basis")?, d, "h_basis")?)?;
    let r = Subspace::span(d, parse_rows::<Q>(field(obj, "R_basis")?, d, "R_basis")?)?;
    let j = Matrix::from_rows(parse_rows::<Q>(field(obj, "J")?, d, "J")?, d)?;
    if j.nrows() != d {
        return Err(Error::DimensionMismatch { expected: d, found: j.nrows() });
    }
    Ok(CrFile {
        pair: CrPair::new(g, h, r, j)?,
        connected_isotropy: flag(obj, "connected_isotropy", true)?,
        codirection: codirection(obj)?,
    })
}

fn parse_orbit(obj: &Map<String, Value>) -> Result<OrbitFile> {
    let amb = field(obj, "ambient")?
        .as_object()
        .ok_or_else(|| fmt_err("`ambient` must be an algebra object"))?;
    let ambient = complex_algebra(amb)?;
    let n = ambient.dim();
    let real = Subspace::span(2 * n, parse_rows::<Q>(field(obj, "real_basis")?, 2 * n, "real_basis")?)?;
    let hat = Subspace::span(n, parse_rows::<Qi>(field(obj, "isotropy_hat_basis")?, n, "isotropy_hat_basis")?)?;
    Ok(OrbitFile {
        model: OrbitModel::new(ambient, real, hat)?,
        connected_isotropy: flag(obj, "connected_isotropy", true)?,
        codirection: codirection(obj)?,
        kahler: flag(obj, "kahler", false)?,
    })
}

/// Parses any of the three formats, told apart by their keys.
pub fn parse_document(text: &str) -> Result<Document> {
    let v: Value = serde_json::from_str(text).map_err(|e| fmt_err(e.to_string()))?;
    let obj = v.as_object().ok_or_else(|| fmt_err("top level must be an object"))?;
    if obj.contains_key("ambient") {
        Ok(Document::Orbit(parse_orbit(obj)?))
    } else if obj.contains_key("R_basis") {
        Ok(Document::Cr(parse_cr(obj)?))
    } else {
        Ok(Document::Algebra(parse_algebra(obj)?))
    }
}

pub fn algebra_to_json<F: Literal>(a: &LieAlgebra<F>) -> Value {
    let brackets: Vec<Value> = a
        .nonzero_brackets()
        .into_iter()
        .map(|(i, j, terms)| {
            let t: Vec<Value> = terms.iter().map(|(k, c)| json!([k, c.to_json()])).collect();
            json!([i, j, t])
        })
        .collect();
    json!({
        "dimension": a.dim(),
        "field": F::KIND,
        "basis": a.names(),
        "brackets": brackets,
    })
}

fn rows_to_json<F: Literal>(rows: &[Vec<F>]) -> Value {
    Value::Array(rows.iter().map(|r| Value::Array(r.iter().map(Literal::to_json).collect())).collect())
}

pub fn cr_pair_to_json(p: &CrPair) -> Value {
    let mut v = algebra_to_json(p.algebra());
    let obj = v.as_object_mut().expect("object");
    obj.insert("h_basis".into(), rows_to_json(p.isotropy().basis()));
    obj.insert("R_basis".into(), rows_to_json(p.distribution().basis()));
    obj.insert("J".into(), rows_to_json(&p.j().to_rows()));
    v
}

pub fn orbit_to_json(m: &OrbitModel) -> Value {
    json!({
        "ambient": algebra_to_json(m.ambient()),
        "real_basis": rows_to_json(m.real_sub().basis()),
        "isotropy_hat_basis": rows_to_json(m.isotropy_hat().basis()),
    })
}

/// Orbit-file export of a catalog entry, so it can be edited and re-analyzed.
pub fn entry_to_json(e: &CatalogEntry) -> Value {
    let mut v = orbit_to_json(&e.model);
    let obj = v.as_object_mut().expect("object");
    obj.insert("kahler".into(), Value::Bool(e.tags.kahler));
    v
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::scalar::q;

    #[test]
    fn algebra_round_trip() {
        let text = r#"{"dimension": 3, "field": "Q", "basis": ["h","e","f"],
            "brackets": [[0,1,[[1,"2"]]], [0,2,[[2,-2]]], [1,2,[[0,"1/1"]]]]}"#;
        let Document::Algebra(AnyAlgebra::Real(a)) = parse_document(text).unwrap() else { panic!() };
        assert_eq!(a.structure_constant(1, 0, 1), q(-2));
        let back = algebra_to_json(&a).to_string();
        let Document::Algebra(AnyAlgebra::Real(b)) = parse_document(&back).unwrap() else { panic!() };
        assert_eq!(a, b);
    }

    #[test]
    fn rejects_lower_triangle_and_bad_literals() {
        let lower = r#"{"dimension": 2, "field": "Q", "brackets": [[1,0,[[0,"1"]]]]}"#;
        assert!(matches!(parse_document(lower), Err(Error::Format(_))));
        let zero = r#"{"dimension": 2, "field": "Q", "brackets": [[0,1,[[0,"1/0"]]]]}"#;
        assert_eq!(parse_document(zero).unwrap_err(), Error::DivisionByZero);
        let unknown_field = r#"{"dimension": 1, "field": "R", "brackets": []}"#;
        assert!(parse_document(unknown_field).is_err());
    }

    #[test]
    fn gaussian_literals() {
        assert_eq!(Qi::parse(&json!(["1/2", "-3"])).unwrap(), Qi::new(crate::scalar::qr(1, 2), q(-3)));
        assert_eq!(Qi::parse(&json!("2")).unwrap(), Qi::from_int(2));
        assert!(Qi::parse(&json!(["1"])).is_err());
    }
}
