//! JSON wire format for matrices, classes, linear combinations and tensors.
//!
//! ```text
//! graph    {"type":"adj","rows":[[0,1],[1,0]]}
//!          {"type":"ext","rows":[[0,1],[1,0]],"ext":[1,0]}
//! lincomb  {"terms":[{"coeff":"3/1","graph":<graph>},...]}
//! tensor   {"arity":2,"terms":[{"coeff":"1/2","graphs":[<graph>,<graph>]},...]}
//! ```
//!
//! Coefficients are strings `p/q` in lowest terms; integers are accepted on
//! input. Output is compact, one document per line, terms in class order.

use std::fmt::Write as _;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::Zero;
use serde_json::Value;

use crate::canonical::{graph_key, ClassKind, GraphClass};
use crate::error::{Error, Result};
use crate::linear::{LinComb, Rational, TensorComb};
use crate::matrix::{AdjMatrix, ExtAdjMatrix};

/// A matrix exactly as written, before canonicalization.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct WireGraph {
    pub kind: ClassKind,
    pub diagram: ExtAdjMatrix,
}

impl WireGraph {
    pub fn plain(m: AdjMatrix) -> Self {
        WireGraph {
            kind: ClassKind::Plain,
            diagram: ExtAdjMatrix::without_legs(m),
        }
    }

    pub fn extended(d: ExtAdjMatrix) -> Self {
        WireGraph {
            kind: ClassKind::Extended,
            diagram: d,
        }
    }

    pub fn matrix(&self) -> &AdjMatrix {
        self.diagram.internal()
    }

    pub fn class(&self) -> Result<GraphClass> {
        GraphClass::from_diagram(self.kind, &self.diagram)
    }

    pub fn to_json(&self) -> String {
        graph_key(self.kind, self.diagram.internal(), self.diagram.external())
    }
}

/// Any parsed top-level document.
#[derive(Clone, Debug)]
pub enum Document {
    Graph(WireGraph),
    LinComb(LinComb),
    Tensor(TensorComb),
}

impl Document {
    /// Graphs read as the combination `1·{G}`.
    pub fn into_lincomb(self) -> Result<LinComb> {
        match self {
            Document::Graph(g) => Ok(LinComb::from_class(g.class()?)),
            Document::LinComb(x) => Ok(x),
            Document::Tensor(t) if t.arity() == 1 => {
                Ok(t.iter().map(|(k, v)| (k[0].clone(), v.clone())).collect())
            }
            Document::Tensor(_) => Err(Error::malformed("$", "expected a graph or linear combination, found a tensor")),
        }
    }

    pub fn into_tensor(self) -> Result<TensorComb> {
        match self {
            Document::Tensor(t) => Ok(t),
            other => Ok(TensorComb::from_lincomb(&other.into_lincomb()?)),
        }
    }

    pub fn to_json(&self) -> String {
        match self {
            Document::Graph(g) => g.to_json(),
            Document::LinComb(x) => lincomb_to_json(x),
            Document::Tensor(t) => tensor_to_json(t),
        }
    }
}

pub fn class_to_json(c: &GraphClass) -> String {
    c.key().to_string()
}

pub fn rational_to_string(r: &Rational) -> String {
    format!("{}/{}", r.numer(), r.denom())
}

pub fn lincomb_to_json(x: &LinComb) -> String {
    let mut s = String::from("{\"terms\":[");
    for (i, (c, v)) in x.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{{\"coeff\":\"{}\",\"graph\":{}}}", rational_to_string(v), c.key());
    }
    s.push_str("]}");
    s
}

pub fn tensor_to_json(t: &TensorComb) -> String {
    let mut s = format!("{{\"arity\":{},\"terms\":[", t.arity());
    for (i, (k, v)) in t.iter().enumerate() {
        if i > 0 {
            s.push(',');
        }
        let _ = write!(s, "{{\"coeff\":\"{}\",\"graphs\":[", rational_to_string(v));
        for (j, c) in k.iter().enumerate() {
            if j > 0 {
                s.push(',');
            }
            s.push_str(c.key());
        }
        s.push_str("]}");
    }
    s.push_str("]}");
    s
}

/// Parses JSON text, reporting syntax errors by byte offset.
pub fn parse_json(text: &str) -> Result<Value> {
    serde_json::from_str(text).map_err(|e| {
        let offset = byte_offset(text, e.line(), e.column());
        Error::malformed("$", format!("invalid JSON at byte {offset}: {e}"))
    })
}

fn byte_offset(text: &str, line: usize, column: usize) -> usize {
    let mut offset = 0;
    for (i, l) in text.split_inclusive('\n').enumerate() {
        if i + 1 == line {
            return offset + column.saturating_sub(1).min(l.len());
        }
        offset += l.len();
    }
    text.len()
}

pub fn parse_document(text: &str) -> Result<Document> {
    document_from_value(&parse_json(text)?, "$")
}

pub fn parse_graph(text: &str) -> Result<WireGraph> {
    graph_from_value(&parse_json(text)?, "$")
}

pub fn parse_lincomb(text: &str) -> Result<LinComb> {
    parse_document(text)?.into_lincomb()
}

pub fn parse_tensor(text: &str) -> Result<TensorComb> {
    parse_document(text)?.into_tensor()
}

pub fn document_from_value(v: &Value, path: &str) -> Result<Document> {
    let obj = v
        .as_object()
        .ok_or_else(|| Error::malformed(path, "expected an object"))?;
    if obj.contains_key("terms") {
        let terms = obj["terms"]
            .as_array()
            .ok_or_else(|| Error::malformed(format!("{path}.terms"), "expected an array"))?;
        let declared = match obj.get("arity") {
            None => None,
            Some(a) => Some(natural(a, &format!("{path}.arity"))? as usize),
        };
        let tensor = declared.is_some()
            || terms
                .iter()
                .any(|t| t.as_object().is_some_and(|o| o.contains_key("graphs")));
        if !tensor {
            let mut out = LinComb::zero();
            for (i, t) in terms.iter().enumerate() {
                let tp = format!("{path}.terms[{i}]");
                let coeff = coeff_field(t, &tp)?;
                let g = field(t, "graph", &tp)?;
                let class = graph_from_value(g, &format!("{tp}.graph"))?.class()?;
                out.add_term(class, coeff);
            }
            return Ok(Document::LinComb(out));
        }
        let mut out: Option<TensorComb> = declared.map(TensorComb::zero);
        for (i, t) in terms.iter().enumerate() {
            let tp = format!("{path}.terms[{i}]");
            let coeff = coeff_field(t, &tp)?;
            let gs = field(t, "graphs", &tp)?
                .as_array()
                .ok_or_else(|| Error::malformed(format!("{tp}.graphs"), "expected an array"))?;
            let mut factors = Vec::with_capacity(gs.len());
            for (j, g) in gs.iter().enumerate() {
                factors.push(graph_from_value(g, &format!("{tp}.graphs[{j}]"))?.class()?);
            }
            let acc = out.get_or_insert_with(|| TensorComb::zero(factors.len()));
            if acc.arity() != factors.len() {
                return Err(Error::malformed(
                    format!("{tp}.graphs"),
                    format!("expected {} factors, found {}", acc.arity(), factors.len()),
                ));
            }
            acc.add_term(factors, coeff);
        }
        return Ok(Document::Tensor(out.unwrap_or_else(|| TensorComb::zero(2))));
    }
    Ok(Document::Graph(graph_from_value(v, path)?))
}

fn field<'a>(v: &'a Value, name: &str, path: &str) -> Result<&'a Value> {
    v.as_object()
        .ok_or_else(|| Error::malformed(path, "expected an object"))?
        .get(name)
        .ok_or_else(|| Error::malformed(format!("{path}.{name}"), "missing field"))
}

fn coeff_field(t: &Value, path: &str) -> Result<Rational> {
    let p = format!("{path}.coeff");
    match field(t, "coeff", path)? {
        Value::String(s) => parse_rational(s).map_err(|m| Error::malformed(p, m)),
        Value::Number(n) if n.is_i64() || n.is_u64() => {
            parse_rational(&n.to_string()).map_err(|m| Error::malformed(p, m))
        }
        _ => Err(Error::malformed(p, "expected a string \"p/q\"")),
    }
}

/// Parses `p`, `p/q` or `-p/q` with arbitrary-precision integers.
pub fn parse_rational(s: &str) -> std::result::Result<Rational, String> {
    let (n, d) = match s.split_once('/') {
        Some((n, d)) => (n, d),
        None => (s, "1"),
    };
    let n = BigInt::from_str(n.trim()).map_err(|_| format!("bad numerator in {s:?}"))?;
    let d = BigInt::from_str(d.trim()).map_err(|_| format!("bad denominator in {s:?}"))?;
    if d.is_zero() {
        return Err(format!("zero denominator in {s:?}"));
    }
    Ok(Rational::new(n, d))
}

fn natural(v: &Value, path: &str) -> Result<u32> {
    v.as_u64()
        .and_then(|n| u32::try_from(n).ok())
        .ok_or_else(|| Error::malformed(path, "expected a natural number"))
}

fn naturals(v: &Value, path: &str) -> Result<Vec<u32>> {
    v.as_array()
        .ok_or_else(|| Error::malformed(path, "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, x)| natural(x, &format!("{path}[{i}]")))
        .collect()
}

pub fn graph_from_value(v: &Value, path: &str) -> Result<WireGraph> {
    let kind = match field(v, "type", path)?.as_str() {
        Some("adj") => ClassKind::Plain,
        Some("ext") => ClassKind::Extended,
        _ => return Err(Error::malformed(format!("{path}.type"), "expected \"adj\" or \"ext\"")),
    };
    let rows_path = format!("{path}.rows");
    let rows = field(v, "rows", path)?
        .as_array()
        .ok_or_else(|| Error::malformed(&rows_path, "expected an array"))?
        .iter()
        .enumerate()
        .map(|(i, r)| naturals(r, &format!("{rows_path}[{i}]")))
        .collect::<Result<Vec<_>>>()?;
    let n = rows.len();
    for (i, r) in rows.iter().enumerate() {
        if r.len() != n {
            return Err(Error::malformed(format!("{rows_path}[{i}]"), format!("expected {n} entries")));
        }
        if r[i] != 0 {
            return Err(Error::malformed(format!("{rows_path}[{i}][{i}]"), "diagonal entry must be 0"));
        }
        for (j, &x) in r.iter().enumerate() {
            if x != rows[j][i] {
                return Err(Error::malformed(format!("{rows_path}[{i}][{j}]"), "matrix is not symmetric"));
            }
        }
    }
    let m = AdjMatrix::new(rows).map_err(|e| Error::malformed(&rows_path, e.to_string()))?;
    match kind {
        ClassKind::Plain => {
            if v.get("ext").is_some() {
                return Err(Error::malformed(format!("{path}.ext"), "only allowed when type is \"ext\""));
            }
            Ok(WireGraph::plain(m))
        }
        ClassKind::Extended => {
            let ext_path = format!("{path}.ext");
            let legs = naturals(field(v, "ext", path)?, &ext_path)?;
            if legs.len() != n {
                return Err(Error::malformed(ext_path, format!("expected {n} entries")));
            }
            let d = ExtAdjMatrix::new(m, legs).map_err(|e| Error::malformed(path, e.to_string()))?;
            Ok(WireGraph::extended(d))
        }
    }
}
