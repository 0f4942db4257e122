//! JSON exchange format for modules.
//!
//! ```json
//! {"field":{"Fp":32003},"dim":2,"x":[[0,0],[1,0]],"y":[[0,0],[0,0]]}
//! ```
//!
//! `field` is `"Q"` or `{"Fp": p}`; `x` and `y` are row-major. Entries over a
//! prime field are integers in `0..p`. Over `Q` integral entries are written
//! as integers and the rest as `"num/den"` strings. Writing a parsed document
//! reproduces it byte for byte when it was produced by this module.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::ToPrimitive;
use serde::{Deserialize, Serialize};
use serde_json::Value;
use thiserror::Error;

use crate::field::{format_rational, parse_rational, Field, FieldError, FieldSpec, Fp, Rationals};
use crate::linalg::Matrix;
use crate::modrep::{ModuleError, ModuleRep};

#[derive(Debug, Error)]
pub enum IoError {
    #[error("malformed module document: {0}")]
    Json(#[from] serde_json::Error),
    #[error(transparent)]
    Field(#[from] FieldError),
    #[error("matrix {name} must be {dim}x{dim}")]
    Shape { name: &'static str, dim: usize },
    #[error("bad entry {value} in matrix {name}")]
    Entry { name: &'static str, value: String },
    #[error(transparent)]
    Module(#[from] ModuleError),
}

#[derive(Debug, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct ModuleDoc {
    field: FieldSpec,
    dim: usize,
    x: Vec<Vec<Value>>,
    y: Vec<Vec<Value>>,
}

/// A module over whichever field its document names.
#[derive(Debug, Clone, PartialEq)]
pub enum AnyModule {
    Fp(ModuleRep<Fp>),
    Q(ModuleRep<Rationals>),
}

impl AnyModule {
    pub fn dim(&self) -> usize {
        match self {
            AnyModule::Fp(m) => m.dim(),
            AnyModule::Q(m) => m.dim(),
        }
    }

    pub fn field_spec(&self) -> FieldSpec {
        match self {
            AnyModule::Fp(m) => m.field().spec(),
            AnyModule::Q(_) => FieldSpec::Q,
        }
    }

    pub fn from_json(text: &str) -> Result<Self, IoError> {
        let doc: ModuleDoc = serde_json::from_str(text)?;
        match doc.field {
            FieldSpec::Fp(p) => {
                let f = Fp::new(p)?;
                let read = |name, rows: &[Vec<Value>]| {
                    read_matrix(&f, name, doc.dim, rows, |v| {
                        v.as_i64().map(|n| f.elem(n)).or_else(|| v.as_u64().map(|n| n % p))
                    })
                };
                Ok(AnyModule::Fp(ModuleRep::new(read("x", &doc.x)?, read("y", &doc.y)?)?))
            }
            FieldSpec::Q => {
                let read = |name, rows: &[Vec<Value>]| {
                    read_matrix(&Rationals, name, doc.dim, rows, |v| match v {
                        Value::Number(n) => n.as_i64().map(|n| BigRational::from_integer(BigInt::from(n))),
                        Value::String(s) => parse_rational(s),
                        _ => None,
                    })
                };
                Ok(AnyModule::Q(ModuleRep::new(read("x", &doc.x)?, read("y", &doc.y)?)?))
            }
        }
    }

    pub fn to_json(&self) -> String {
        let doc = match self {
            AnyModule::Fp(m) => {
                let w = |a: &Matrix<Fp>| write_matrix(a, |e| Value::from(*e));
                ModuleDoc { field: self.field_spec(), dim: m.dim(), x: w(m.x()), y: w(m.y()) }
            }
            AnyModule::Q(m) => {
                let w = |a: &Matrix<Rationals>| write_matrix(a, rational_value);
                ModuleDoc { field: FieldSpec::Q, dim: m.dim(), x: w(m.x()), y: w(m.y()) }
            }
        };
        serde_json::to_string(&doc).expect("module documents always serialize")
    }
}

impl From<ModuleRep<Fp>> for AnyModule {
    fn from(m: ModuleRep<Fp>) -> Self {
        AnyModule::Fp(m)
    }
}

impl From<ModuleRep<Rationals>> for AnyModule {
    fn from(m: ModuleRep<Rationals>) -> Self {
        AnyModule::Q(m)
    }
}

fn rational_value(a: &BigRational) -> Value {
    if a.is_integer() {
        if let Some(n) = a.numer().to_i64() {
            return Value::from(n);
        }
    }
    Value::String(format_rational(a))
}

fn read_matrix<K: Field>(
    f: &K,
    name: &'static str,
    dim: usize,
    rows: &[Vec<Value>],
    entry: impl Fn(&Value) -> Option<K::Elem>,
) -> Result<Matrix<K>, IoError> {
    if rows.len() != dim || rows.iter().any(|r| r.len() != dim) {
        return Err(IoError::Shape { name, dim });
    }
    let mut data = Vec::with_capacity(dim * dim);
    for v in rows.iter().flatten() {
        data.push(entry(v).ok_or_else(|| IoError::Entry { name, value: v.to_string() })?);
    }
    Ok(Matrix::new(f.clone(), dim, dim, data).expect("shape checked"))
}

fn write_matrix<K: Field>(m: &Matrix<K>, entry: impl Fn(&K::Elem) -> Value) -> Vec<Vec<Value>> {
    (0..m.rows()).map(|r| m.row(r).iter().map(&entry).collect()).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::modrep::materialize_string;
    use crate::strings::parse_word;

    #[test]
    fn round_trip_fp() {
        let f = Fp::new(32003).unwrap();
        let m = materialize_string(&parse_word("xY").unwrap(), &f).unwrap();
        let text = AnyModule::from(m.clone()).to_json();
        assert_eq!(
            text,
            r#"{"field":{"Fp":32003},"dim":3,"x":[[0,0,0],[1,0,0],[0,0,0]],"y":[[0,0,0],[0,0,1],[0,0,0]]}"#
        );
        let back = AnyModule::from_json(&text).unwrap();
        assert_eq!(back, AnyModule::Fp(m));
        assert_eq!(back.to_json(), text);
    }

    #[test]
    fn round_trip_q() {
        let text = r#"{"field":"Q","dim":2,"x":[[0,0],["-1/2",0]],"y":[[0,0],[0,0]]}"#;
        let m = AnyModule::from_json(text).unwrap();
        assert_eq!(m.field_spec(), FieldSpec::Q);
        assert_eq!(m.to_json(), text);
    }

    #[test]
    fn rejects_bad_documents() {
        assert!(matches!(
            AnyModule::from_json(r#"{"field":{"Fp":4},"dim":1,"x":[[0]],"y":[[0]]}"#),
            Err(IoError::Field(FieldError::NotPrime(4)))
        ));
        assert!(matches!(
            AnyModule::from_json(r#"{"field":"Q","dim":2,"x":[[0]],"y":[[0]]}"#),
            Err(IoError::Shape { name: "x", dim: 2 })
        ));
        assert!(matches!(
            AnyModule::from_json(r#"{"field":"Q","dim":1,"x":[["a"]],"y":[[0]]}"#),
            Err(IoError::Entry { name: "x", .. })
        ));
        assert!(matches!(
            AnyModule::from_json(r#"{"field":"Q","dim":1,"x":[[1]],"y":[[0]]}"#),
            Err(IoError::Module(ModuleError::NotNilpotent('x')))
        ));
        assert!(AnyModule::from_json("{}").is_err());
    }
}
