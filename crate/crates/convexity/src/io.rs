//! JSON input for geometries and JSON/DOT/OFF output for the derived
//! structures.
//!
//! The input schema is strict: a top-level object with `n`, `kind`, and
//! exactly the fields that kind needs.  Rationals are JSON integers or
//! strings like `"3/4"`.

use std::collections::BTreeMap;
use std::fmt::Display;
use std::path::Path;

use num::bigint::BigInt;
use num::{BigRational, One, Zero};
use serde_json::{json, Map, Value};

use crate::complex::SimplicialComplex;
use crate::geometry::{BasePoset, ConvexGeometry, IdealDirection};
use crate::lattice::GradedPoset;
use crate::poly::Poly;
use crate::qsym::FlagQSym;
use crate::sphere::{QNode, QPoset, SignedElement};
use crate::subset::Subset;
use crate::{Error, Result};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

/// Parses `"p"`, `"-p"`, or `"p/q"`; rejects a zero denominator.
pub fn parse_rational(s: &str) -> Result<BigRational> {
    let s = s.trim();
    let (num_str, den_str) = match s.split_once('/') {
        Some((a, b)) => (a.trim(), b.trim()),
        None => (s, "1"),
    };
    let num: BigInt = num_str
        .parse()
        .map_err(|_| parse_err(format!("invalid integer {num_str:?}")))?;
    let den: BigInt = den_str
        .parse()
        .map_err(|_| parse_err(format!("invalid integer {den_str:?}")))?;
    if den.is_zero() {
        return Err(parse_err(format!("zero denominator in {s:?}")));
    }
    Ok(BigRational::new(num, den))
}

fn rational_from_value(v: &Value) -> Result<BigRational> {
    match v {
        Value::Number(n) => {
            let i = n
                .as_i64()
                .ok_or_else(|| parse_err(format!("{n} is not an integer; use a \"p/q\" string")))?;
            Ok(BigRational::from_integer(BigInt::from(i)))
        }
        Value::String(s) => parse_rational(s),
        other => Err(parse_err(format!(
            "expected a number or \"p/q\" string, found {other}"
        ))),
    }
}

fn usize_field(obj: &Map<String, Value>, key: &str) -> Result<usize> {
    let v = obj
        .get(key)
        .ok_or_else(|| parse_err(format!("missing field {key:?}")))?;
    v.as_u64()
        .map(|x| x as usize)
        .ok_or_else(|| parse_err(format!("field {key:?} must be a nonnegative integer")))
}

fn array_field<'a>(obj: &'a Map<String, Value>, key: &str) -> Result<&'a Vec<Value>> {
    let v = obj
        .get(key)
        .ok_or_else(|| parse_err(format!("missing field {key:?}")))?;
    v.as_array()
        .ok_or_else(|| parse_err(format!("field {key:?} must be an array")))
}

fn check_keys(obj: &Map<String, Value>, allowed: &[&str]) -> Result<()> {
    for key in obj.keys() {
        if !allowed.contains(&key.as_str()) {
            return Err(parse_err(format!("unknown field {key:?}")));
        }
    }
    Ok(())
}

fn point_list(obj: &Map<String, Value>, n: usize) -> Result<Vec<Value>> {
    let coords = array_field(obj, "coords")?;
    if coords.len() != n {
        return Err(parse_err(format!(
            "expected {n} coordinates, found {}",
            coords.len()
        )));
    }
    Ok(coords.clone())
}

fn subset_from_value(v: &Value, n: usize) -> Result<Subset> {
    let arr = v
        .as_array()
        .ok_or_else(|| parse_err(format!("expected an array of points, found {v}")))?;
    let mut elems = vec![];
    for e in arr {
        let p = e
            .as_u64()
            .ok_or_else(|| parse_err(format!("expected a point label, found {e}")))?
            as usize;
        if p < 1 || p > n {
            return Err(parse_err(format!("point {p} is outside 1..={n}")));
        }
        elems.push(p);
    }
    Subset::from_elems(elems.into_iter()).map_err(|e| parse_err(e.to_string()))
}

/// Reads a geometry from its JSON description.
pub fn geometry_from_json_str(s: &str) -> Result<ConvexGeometry> {
    let v: Value = serde_json::from_str(s).map_err(|e| parse_err(format!("invalid JSON: {e}")))?;
    geometry_from_json(&v)
}

pub fn geometry_from_json(v: &Value) -> Result<ConvexGeometry> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("top level must be an object"))?;
    let n = usize_field(obj, "n")?;
    let kind = obj
        .get("kind")
        .and_then(Value::as_str)
        .ok_or_else(|| parse_err("missing or non-string field \"kind\""))?;
    match kind {
        "points1d" => {
            check_keys(obj, &["n", "kind", "coords"])?;
            let coords = point_list(obj, n)?
                .iter()
                .map(rational_from_value)
                .collect::<Result<Vec<_>>>()?;
            ConvexGeometry::points_1d(coords)
        }
        "points2d" => {
            check_keys(obj, &["n", "kind", "coords"])?;
            let mut pts = vec![];
            for p in point_list(obj, n)? {
                let pair = p
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| parse_err(format!("expected an [x, y] pair, found {p}")))?;
                pts.push((
                    rational_from_value(&pair[0])?,
                    rational_from_value(&pair[1])?,
                ));
            }
            ConvexGeometry::points_2d(pts)
        }
        "poset" => {
            check_keys(obj, &["n", "kind", "relations", "direction"])?;
            let mut relations = vec![];
            for r in array_field(obj, "relations")? {
                let pair = r
                    .as_array()
                    .filter(|a| a.len() == 2)
                    .ok_or_else(|| parse_err(format!("expected an [a, b] pair, found {r}")))?;
                let a = pair[0]
                    .as_u64()
                    .ok_or_else(|| parse_err("relation entries must be point labels"))?;
                let b = pair[1]
                    .as_u64()
                    .ok_or_else(|| parse_err("relation entries must be point labels"))?;
                relations.push((a as usize, b as usize));
            }
            let direction = match obj.get("direction").and_then(Value::as_str) {
                Some("lower") => IdealDirection::Lower,
                Some("upper") => IdealDirection::Upper,
                Some(other) => {
                    return Err(parse_err(format!(
                        "direction must be \"lower\" or \"upper\", found {other:?}"
                    )))
                }
                None => return Err(parse_err("missing or non-string field \"direction\"")),
            };
            let poset = BasePoset::new(n, &relations)?;
            ConvexGeometry::poset_ideal(poset, direction)
        }
        "family" => {
            check_keys(obj, &["n", "kind", "sets"])?;
            let sets = array_field(obj, "sets")?
                .iter()
                .map(|s| subset_from_value(s, n))
                .collect::<Result<Vec<_>>>()?;
            ConvexGeometry::explicit_family(n, sets)
        }
        other => Err(parse_err(format!(
            "kind must be points1d, points2d, poset, or family, found {other:?}"
        ))),
    }
}

pub fn geometry_from_path(path: &Path) -> Result<ConvexGeometry> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| std::io::Error::new(e.kind(), format!("{}: {e}", path.display())))?;
    geometry_from_json_str(&text)
}

fn subset_json(s: Subset) -> Value {
    Value::Array(s.elems().map(|e| json!(e)).collect())
}

/// Poset as JSON: labeled ranked elements plus the cover relations.
pub fn poset_json(p: &GradedPoset) -> Value {
    let elements: Vec<Value> = (0..p.len())
        .map(|i| {
            json!({
                "index": i,
                "label": p.label(i),
                "rank": p.rank(i),
            })
        })
        .collect();
    let covers: Vec<Value> = p
        .cover_pairs()
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    json!({
        "size": p.len(),
        "height": p.rank(p.top()),
        "elements": elements,
        "covers": covers,
    })
}

/// Poset as a Graphviz digraph with elements layered by rank.
pub fn poset_dot(p: &GradedPoset) -> String {
    let mut out = String::from("digraph poset {\n  rankdir=BT;\n  node [shape=box];\n");
    let top_rank = p.rank(p.top());
    for r in 0..=top_rank {
        let level = p.elements_of_rank(r);
        if level.is_empty() {
            continue;
        }
        out.push_str("  { rank=same;");
        for i in level {
            out.push_str(&format!(" v{i};"));
        }
        out.push_str(" }\n");
    }
    for i in 0..p.len() {
        out.push_str(&format!(
            "  v{i} [label=\"{}\"];\n",
            p.label(i).replace('"', "\\\"")
        ));
    }
    for (a, b) in p.cover_pairs() {
        out.push_str(&format!("  v{a} -> v{b};\n"));
    }
    out.push_str("}\n");
    out
}

/// Complex as JSON: facets printed through the vertex `Display`.
pub fn complex_json<V: Ord + Clone + Display>(
    c: &SimplicialComplex<V>,
    max_faces: usize,
) -> Result<Value> {
    let facets: Vec<Value> = c
        .facets()
        .iter()
        .map(|f| Value::Array(f.iter().map(|v| json!(v.to_string())).collect()))
        .collect();
    let f_vector: Vec<Value> = c
        .f_vector(max_faces)?
        .iter()
        .map(|x| json!(x.to_string()))
        .collect();
    Ok(json!({
        "dim": c.dim(),
        "facet_count": c.facet_count(),
        "vertex_count": c.vertices().len(),
        "f_vector": f_vector,
        "facets": facets,
    }))
}

/// The signed poset as JSON: each node with its closed set and negative
/// extreme points, plus the cover relations.
pub fn qposet_json(q: &QPoset) -> Value {
    let nodes: Vec<Value> = (0..q.len())
        .map(|i| match q.node(i) {
            QNode::Bottom => json!({"index": i, "type": "bottom"}),
            QNode::Top => json!({"index": i, "type": "top"}),
            QNode::Proper(s) => json!({
                "index": i,
                "type": "proper",
                "set": subset_json(s.set()),
                "extreme": subset_json(s.ext()),
                "negative": subset_json(s.neg()),
            }),
        })
        .collect();
    let covers: Vec<Value> = q
        .poset()
        .cover_pairs()
        .into_iter()
        .map(|(a, b)| json!([a, b]))
        .collect();
    json!({
        "n": q.n(),
        "size": q.len(),
        "nodes": nodes,
        "covers": covers,
    })
}

/// Polynomial as JSON: coefficient strings from the constant term up.
pub fn poly_json(p: &Poly) -> Value {
    let coeffs: Vec<Value> = p.coeffs().iter().map(|c| json!(c.to_string())).collect();
    json!({"coefficients": coeffs})
}

/// Quasisymmetric function as JSON: composition → coefficient.
pub fn flag_json(f: &FlagQSym) -> Value {
    let mut coeffs = BTreeMap::new();
    for (alpha, c) in f.coeffs() {
        coeffs.insert(alpha.to_string(), Value::String(c.to_string()));
    }
    json!({
        "degree": f.degree(),
        "coefficients": coeffs,
    })
}

/// OFF export of a reflected complex for geometries on at most three
/// points: the vertex of `(B, ε)` is placed at `Σ_{b ∈ ext(B)} ε(b) e_b / |B|`,
/// which separates vertices because a closed set is spanned by its extreme
/// points.
pub fn off_export(n: usize, c: &SimplicialComplex<SignedElement>) -> Result<String> {
    if n > 3 {
        return Err(Error::ResourceLimit(format!(
            "OFF export is limited to three coordinates, geometry has {n}"
        )));
    }
    let vertices = c.vertices();
    let index: BTreeMap<&SignedElement, usize> =
        vertices.iter().enumerate().map(|(i, v)| (v, i)).collect();
    let mut out = String::from("OFF\n");
    let edge_guess = if c.dim() == Some(1) {
        c.facet_count()
    } else {
        0
    };
    out.push_str(&format!(
        "{} {} {}\n",
        vertices.len(),
        c.facet_count(),
        edge_guess
    ));
    for v in &vertices {
        let card = BigRational::from(BigInt::from(v.set().card() as i64));
        let mut coords = [
            BigRational::zero(),
            BigRational::zero(),
            BigRational::zero(),
        ];
        for b in v.ext().elems() {
            let sign = if v.neg().contains(b) {
                -BigRational::one()
            } else {
                BigRational::one()
            };
            coords[b - 1] = sign / card.clone();
        }
        let as_f64 = |r: &BigRational| -> f64 {
            let num = r.numer().to_string().parse::<f64>().unwrap_or(0.0);
            let den = r.denom().to_string().parse::<f64>().unwrap_or(1.0);
            num / den
        };
        out.push_str(&format!(
            "{:.6} {:.6} {:.6}\n",
            as_f64(&coords[0]),
            as_f64(&coords[1]),
            as_f64(&coords[2])
        ));
    }
    for f in c.facets() {
        out.push_str(&format!("{}", f.len()));
        for v in f {
            out.push_str(&format!(" {}", index[v]));
        }
        out.push('\n');
    }
    Ok(out)
}
