//! JSON file formats for algebras, representation pairs and operators.
//!
//! Algebra files list structure constants with 0-based indices:
//! `{"dim": n, "basis": [..], "binary": [{"i":0,"j":1,"value":{"0":"1"}}],
//! "ternary": [{"i":0,"j":1,"k":1,"value":{"0":"1"}}]}`; entries with
//! `i > j` are accepted and antisymmetrized, inconsistent duplicates are
//! rejected. Representation files are
//! `{"algebra": <path or inline algebra>, "module_dim": m, "rho": [..],
//! "mu": [[..]]}` with row-major matrices of rational strings. Operator
//! files are `{"rows": r, "cols": c, "entries": [..]}` (row-major).

use std::collections::BTreeMap;
use std::path::{Path, PathBuf};

use serde::{Deserialize, Serialize};
use serde_json::Value;

use crate::algebra::{AlgebraBuilder, LieYamagutiAlgebra};
use crate::error::{Error, ParseRationalError, Result};
use crate::exact::{Matrix, Rational};
use crate::rep::{LieYRepPair, Representation};

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct AlgebraFile {
    dim: usize,
    #[serde(default)]
    basis: Option<Vec<String>>,
    #[serde(default)]
    binary: Vec<BinaryEntry>,
    #[serde(default)]
    ternary: Vec<TernaryEntry>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct BinaryEntry {
    i: usize,
    j: usize,
    value: BTreeMap<String, Value>,
}

#[derive(Deserialize, Serialize)]
#[serde(deny_unknown_fields)]
struct TernaryEntry {
    i: usize,
    j: usize,
    k: usize,
    value: BTreeMap<String, Value>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct RepFile {
    algebra: Value,
    module_dim: usize,
    rho: Vec<Vec<Vec<Value>>>,
    mu: Vec<Vec<Vec<Vec<Value>>>>,
}

#[derive(Deserialize)]
#[serde(deny_unknown_fields)]
struct OperatorFile {
    rows: usize,
    cols: usize,
    entries: Vec<Value>,
}

fn json_error(e: serde_json::Error) -> Error {
    Error::ParseError {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    }
}

fn parse_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(json_error)
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| Error::Io(format!("{}: {e}", path.display())))
}

/// A rational literal: a string `"p"`/`"p/q"` or a JSON integer.
fn rational(v: &Value) -> Result<Rational> {
    match v {
        Value::String(s) => Ok(s.parse()?),
        Value::Number(n) => n
            .as_i64()
            .map(Rational::from_int)
            .ok_or_else(|| ParseRationalError(n.to_string()).into()),
        other => Err(ParseRationalError(other.to_string()).into()),
    }
}

fn index(key: &str, dim: usize) -> Result<usize> {
    let k: usize = key
        .parse()
        .map_err(|_| Error::Schema(format!("output index {key:?} is not a non-negative integer")))?;
    if k >= dim {
        return Err(Error::Schema(format!("output index {k} out of range for dimension {dim}")));
    }
    Ok(k)
}

fn matrix(rows: &[Vec<Value>], n: usize, what: &str) -> Result<Matrix> {
    if rows.len() != n || rows.iter().any(|r| r.len() != n) {
        return Err(Error::Schema(format!("{what} must be a {n}x{n} matrix")));
    }
    let data = rows.iter().flatten().map(rational).collect::<Result<Vec<_>>>()?;
    Matrix::from_vec(n, n, data)
}

fn algebra_from_file(f: AlgebraFile) -> Result<LieYamagutiAlgebra> {
    let mut b = AlgebraBuilder::new(f.dim);
    for e in &f.binary {
        for (k, v) in &e.value {
            b.binary(e.i, e.j, index(k, f.dim)?, rational(v)?)?;
        }
    }
    for e in &f.ternary {
        for (l, v) in &e.value {
            b.ternary(e.i, e.j, e.k, index(l, f.dim)?, rational(v)?)?;
        }
    }
    let a = b.build()?;
    match f.basis {
        Some(names) => a.with_basis_names(names),
        None => Ok(a),
    }
}

/// Parses an algebra file. Only the shape and antisymmetry are validated;
/// the axioms are checked separately.
pub fn parse_algebra(text: &str) -> Result<LieYamagutiAlgebra> {
    algebra_from_file(parse_json(text)?)
}

pub fn load_algebra(path: impl AsRef<Path>) -> Result<LieYamagutiAlgebra> {
    parse_algebra(&read(path.as_ref())?)
}

/// Parses a representation file; a string `algebra` field is a path
/// resolved relative to `base_dir`.
pub fn parse_pair(text: &str, base_dir: &Path) -> Result<LieYRepPair> {
    let f: RepFile = parse_json(text)?;
    let algebra = match f.algebra {
        Value::String(p) => {
            let mut path = PathBuf::from(&p);
            if path.is_relative() {
                path = base_dir.join(path);
            }
            load_algebra(path)?
        }
        inline @ Value::Object(_) => {
            algebra_from_file(serde_json::from_value(inline).map_err(|e| Error::Schema(e.to_string()))?)?
        }
        _ => return Err(Error::Schema("`algebra` must be a path or an inline algebra".into())),
    };
    let n = algebra.dim();
    let m = f.module_dim;
    if f.rho.len() != n || f.mu.len() != n || f.mu.iter().any(|r| r.len() != n) {
        return Err(Error::Schema(format!(
            "rho needs {n} matrices and mu an {n}x{n} array of matrices"
        )));
    }
    let rho = f
        .rho
        .iter()
        .enumerate()
        .map(|(i, r)| matrix(r, m, &format!("rho[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let mu = f
        .mu
        .iter()
        .enumerate()
        .map(|(i, row)| {
            row.iter()
                .enumerate()
                .map(|(j, r)| matrix(r, m, &format!("mu[{i}][{j}]")))
                .collect::<Result<Vec<_>>>()
        })
        .collect::<Result<Vec<_>>>()?;
    LieYRepPair::new(algebra, Representation::new(n, m, rho, mu)?)
}

pub fn load_pair(path: impl AsRef<Path>) -> Result<LieYRepPair> {
    let path = path.as_ref();
    let base = path.parent().unwrap_or_else(|| Path::new("."));
    parse_pair(&read(path)?, base)
}

pub fn parse_operator(text: &str) -> Result<Matrix> {
    let f: OperatorFile = parse_json(text)?;
    if f.entries.len() != f.rows * f.cols {
        return Err(Error::Schema(format!(
            "{} entries for a {}x{} operator",
            f.entries.len(),
            f.rows,
            f.cols
        )));
    }
    let data = f.entries.iter().map(rational).collect::<Result<Vec<_>>>()?;
    Matrix::from_vec(f.rows, f.cols, data)
}

pub fn load_operator(path: impl AsRef<Path>) -> Result<Matrix> {
    parse_operator(&read(path.as_ref())?)
}

fn value_map(fiber: &[Rational]) -> BTreeMap<String, Value> {
    fiber
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.is_zero())
        .map(|(k, c)| (k.to_string(), Value::String(c.to_string())))
        .collect()
}

fn matrix_rows(m: &Matrix) -> Value {
    Value::Array(
        (0..m.rows())
            .map(|i| Value::Array(m.row(i).iter().map(|c| Value::String(c.to_string())).collect()))
            .collect(),
    )
}

/// Canonical JSON for an algebra: `i < j` entries only, nonzero values,
/// ascending index order, reduced rationals.
pub fn algebra_to_value(a: &LieYamagutiAlgebra) -> Value {
    let d = a.dim();
    let mut binary = Vec::new();
    let mut ternary = Vec::new();
    for i in 0..d {
        for j in i + 1..d {
            let value = value_map(a.bracket_basis(i, j));
            if !value.is_empty() {
                binary.push(BinaryEntry { i, j, value });
            }
            for k in 0..d {
                let value = value_map(a.triple_basis(i, j, k));
                if !value.is_empty() {
                    ternary.push(TernaryEntry { i, j, k, value });
                }
            }
        }
    }
    serde_json::json!({
        "dim": d,
        "basis": a.basis_names(),
        "binary": binary,
        "ternary": ternary,
    })
}

/// JSON for a pair with the algebra inlined.
pub fn pair_to_value(p: &LieYRepPair) -> Value {
    let rep = &p.rep;
    serde_json::json!({
        "algebra": algebra_to_value(&p.algebra),
        "module_dim": rep.module_dim(),
        "rho": rep.rho().iter().map(matrix_rows).collect::<Vec<_>>(),
        "mu": rep.mu().iter().map(|r| r.iter().map(matrix_rows).collect::<Vec<_>>()).collect::<Vec<_>>(),
    })
}

pub fn operator_to_value(m: &Matrix) -> Value {
    serde_json::json!({
        "rows": m.rows(),
        "cols": m.cols(),
        "entries": m.data().iter().map(|c| c.to_string()).collect::<Vec<_>>(),
    })
}

/// Pretty-printed, newline-terminated JSON text.
pub fn to_pretty(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values serialize");
    s.push('\n');
    s
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::fixtures::a2;

    #[test]
    fn a2_round_trip() {
        let a = a2();
        let text = to_pretty(&algebra_to_value(&a));
        let b = parse_algebra(&text).unwrap();
        assert_eq!(a.binary(), b.binary());
        assert_eq!(a.ternary(), b.ternary());
        assert_eq!(to_pretty(&algebra_to_value(&b)), text);
    }

    #[test]
    fn lower_entries_are_antisymmetrized() {
        let a = parse_algebra(r#"{"dim":2,"binary":[{"i":1,"j":0,"value":{"0":"-1"}}]}"#).unwrap();
        assert_eq!(a.bracket_basis(0, 1), &[Rational::from_int(1), Rational::from_int(0)]);
    }

    #[test]
    fn conflicting_and_malformed_input() {
        let conflict = r#"{"dim":2,"binary":[{"i":0,"j":1,"value":{"0":"1"}},{"i":1,"j":0,"value":{"0":"1"}}]}"#;
        assert!(matches!(parse_algebra(conflict), Err(Error::ConflictingEntry(_))));
        let bad = r#"{"dim":2,"binary":[{"i":0,"j":1,"value":{"0":"1/0"}}]}"#;
        assert!(matches!(parse_algebra(bad), Err(Error::BadRational(_))));
        let syntax = "{\"dim\": 2,\n  \"binary\": [}";
        match parse_algebra(syntax) {
            Err(Error::ParseError { line, .. }) => assert_eq!(line, 2),
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn pair_and_operator_round_trip() {
        let p = LieYRepPair::coadjoint(a2());
        let text = to_pretty(&pair_to_value(&p));
        let q = parse_pair(&text, Path::new(".")).unwrap();
        assert_eq!(p.rep, q.rep);
        let m = Matrix::from_ints(&[&[0, 1, 2], &[3, 4, 5]]);
        assert_eq!(parse_operator(&to_pretty(&operator_to_value(&m))).unwrap(), m);
    }
}
