//! JSON reading and writing.
//!
//! A diversity is either sparse,
//! `{"labels":["a","b","c"], "values":{"a,b":"1", …, "a,b,c":"3/2"}}`, with
//! one entry per subset of size at least two (keys are comma-joined labels in
//! any order), or dense, `{"labels":[…], "table":["0", …]}` with `2^n`
//! entries in bitmask order. Numbers may be JSON numbers or strings holding
//! an integer, a decimal or a fraction `p/q`. Output always uses strings,
//! with `p/q` for non-integers, and lists subsets in increasing bitmask
//! order.

use num::BigRational;
use serde_json::{json, Map, Value};

use crate::diversity::{Diversity, MetricTable, ValidationReport};
use crate::error::{Error, Result};
use crate::geometry::{EmbeddingMap, PointConfiguration};
use crate::l1cone::{cut_key, CutCombination, DistortionResult, DISTORTION_NORMALIZATION};
use crate::lp::{LinearProgram, LpSolution};
use crate::scalar::{parse_rational, Scalar};
use crate::subset;
use crate::transform::{LambdaVector, NegativityWitness};

fn parse_err(msg: impl Into<String>) -> Error {
    Error::Parse(msg.into())
}

pub fn parse_json(text: impl AsRef<[u8]>) -> Result<Value> {
    serde_json::from_slice(text.as_ref()).map_err(|e| parse_err(e.to_string()))
}

/// A JSON number or a string holding an integer, decimal or fraction.
pub fn parse_scalar(v: &Value) -> Result<BigRational> {
    match v {
        Value::String(s) => parse_rational(s),
        Value::Number(n) => parse_rational(&n.to_string()),
        other => Err(Error::MalformedRational(other.to_string())),
    }
}

fn parse_labels(v: Option<&Value>) -> Result<Vec<String>> {
    let arr = v
        .and_then(Value::as_array)
        .ok_or_else(|| parse_err("`labels` must be an array of strings"))?;
    arr.iter()
        .map(|l| {
            l.as_str()
                .map(str::to_string)
                .ok_or_else(|| parse_err("`labels` must be an array of strings"))
        })
        .collect()
}

/// Bitmask of a comma-joined subset key. Repeated or unknown labels are
/// errors; the empty key is the empty set.
pub fn parse_subset_key(labels: &[String], key: &str) -> Result<usize> {
    if key.trim().is_empty() {
        return Ok(0);
    }
    let mut mask = 0usize;
    for name in key.split(',') {
        let name = name.trim();
        let i = labels
            .iter()
            .position(|l| l == name)
            .ok_or_else(|| Error::UnknownLabel(name.to_string()))?;
        if mask >> i & 1 == 1 {
            return Err(parse_err(format!(
                "label `{name}` repeated in subset `{key}`"
            )));
        }
        mask |= 1 << i;
    }
    Ok(mask)
}

pub fn parse_diversity(text: impl AsRef<[u8]>) -> Result<Diversity> {
    diversity_from_json(&parse_json(text)?)
}

pub fn diversity_from_json(v: &Value) -> Result<Diversity> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("diversity must be a JSON object"))?;
    let labels = parse_labels(obj.get("labels"))?;
    crate::diversity::check_labels(&labels)?;
    let n = labels.len();
    let table = match (obj.get("values"), obj.get("table")) {
        (Some(_), Some(_)) => return Err(parse_err("give either `values` or `table`, not both")),
        (Some(values), None) => {
            let values = values
                .as_object()
                .ok_or_else(|| parse_err("`values` must be an object"))?;
            let mut table: Vec<Option<BigRational>> = vec![None; 1 << n];
            for (key, val) in values {
                let mask = parse_subset_key(&labels, key)?;
                let x = parse_scalar(val)?;
                if table[mask].is_some() {
                    return Err(parse_err(format!(
                        "subset {{{}}} given more than once",
                        subset::key(&labels, mask)
                    )));
                }
                table[mask] = Some(x);
            }
            table
                .into_iter()
                .enumerate()
                .map(|(mask, x)| match x {
                    Some(x) => Ok(x),
                    None if subset::size(mask) <= 1 => Ok(BigRational::from_integer(0.into())),
                    None => Err(Error::MissingSubset(subset::key(&labels, mask))),
                })
                .collect::<Result<Vec<_>>>()?
        }
        (None, Some(table)) => {
            let arr = table
                .as_array()
                .ok_or_else(|| parse_err("`table` must be an array"))?;
            if arr.len() != 1 << n {
                return Err(Error::DimensionMismatch {
                    expected: 1 << n,
                    got: arr.len(),
                });
            }
            arr.iter().map(parse_scalar).collect::<Result<Vec<_>>>()?
        }
        (None, None) => return Err(parse_err("diversity needs `values` or `table`")),
    };
    if let Some(mask) =
        (0..table.len()).find(|&m| subset::size(m) <= 1 && !table[m].is_zero_value())
    {
        return Err(Error::NonzeroSmallSet(subset::key(&labels, mask)));
    }
    Diversity::from_table(labels, table)
}

trait ZeroCheck {
    fn is_zero_value(&self) -> bool;
}

impl ZeroCheck for BigRational {
    fn is_zero_value(&self) -> bool {
        num::Zero::is_zero(self)
    }
}

fn labels_json(labels: &[String]) -> Value {
    Value::Array(labels.iter().map(|l| Value::String(l.clone())).collect())
}

fn scalar<T: Scalar>(x: &T) -> Value {
    Value::String(x.to_string())
}

/// Sparse form: every subset of size at least two.
pub fn diversity_to_json<T: Scalar>(d: &Diversity<T>) -> Value {
    let mut values = Map::new();
    for (mask, v) in d.table().iter().enumerate() {
        if subset::size(mask) >= 2 {
            values.insert(d.key(mask), scalar(v));
        }
    }
    json!({ "labels": labels_json(d.labels()), "values": values })
}

pub fn dense_diversity_to_json<T: Scalar>(d: &Diversity<T>) -> Value {
    json!({
        "labels": labels_json(d.labels()),
        "table": d.table().iter().map(scalar).collect::<Vec<_>>(),
    })
}

/// λ on every nonempty subset. `λ_∅` is omitted: it is fixed by
/// `δ(∅) = 0`.
pub fn lambda_to_json<T: Scalar>(lam: &LambdaVector<T>) -> Value {
    let mut values = Map::new();
    for (mask, v) in lam.values().iter().enumerate().skip(1) {
        values.insert(subset::key(lam.labels(), mask), scalar(v));
    }
    json!({ "labels": labels_json(lam.labels()), "lambda": values })
}

pub fn witness_to_json<T: Scalar>(labels: &[String], w: &NegativityWitness<T>) -> Value {
    json!({
        "set": subset::key(labels, w.set),
        "form_value": scalar(&w.form_value),
    })
}

pub fn parse_points(text: impl AsRef<[u8]>) -> Result<PointConfiguration> {
    points_from_json(&parse_json(text)?)
}

pub fn points_from_json(v: &Value) -> Result<PointConfiguration> {
    let obj = v
        .as_object()
        .ok_or_else(|| parse_err("point file must be a JSON object"))?;
    let dim = obj
        .get("dim")
        .and_then(Value::as_u64)
        .ok_or_else(|| parse_err("`dim` must be a nonnegative integer"))? as usize;
    let points = obj
        .get("points")
        .and_then(Value::as_object)
        .ok_or_else(|| parse_err("`points` must be an object"))?;
    let mut labels = Vec::with_capacity(points.len());
    let mut coords = Vec::with_capacity(points.len());
    for (label, p) in points {
        let arr = p
            .as_array()
            .ok_or_else(|| parse_err(format!("point `{label}` must be an array")))?;
        labels.push(label.clone());
        coords.push(arr.iter().map(parse_scalar).collect::<Result<Vec<_>>>()?);
    }
    crate::diversity::check_labels(&labels)?;
    PointConfiguration::new(dim, labels, coords)
}

pub fn points_to_json<T: Scalar>(p: &PointConfiguration<T>) -> Value {
    let mut points = Map::new();
    for (l, x) in p.labels().iter().zip(p.points()) {
        points.insert(l.clone(), Value::Array(x.iter().map(scalar).collect()));
    }
    json!({ "dim": p.dim(), "points": points })
}

/// Coordinate `j` is indexed by the subset listed at position `j` of
/// `coordinates`.
pub fn embedding_to_json<T: Scalar>(e: &EmbeddingMap<T>) -> Value {
    let coordinates: Vec<Value> = (0..e.dim())
        .map(|j| {
            Value::String(subset::key(
                e.labels(),
                EmbeddingMap::<T>::coordinate_set(j),
            ))
        })
        .collect();
    let mut points = Map::new();
    for (l, x) in e.labels().iter().zip(e.coords()) {
        points.insert(l.clone(), Value::Array(x.iter().map(scalar).collect()));
    }
    json!({
        "labels": labels_json(e.labels()),
        "dim": e.dim(),
        "coordinates": coordinates,
        "points": points,
    })
}

/// Support of a cut combination, keyed `"side with first label|other side"`.
pub fn cuts_to_json<T: Scalar>(c: &CutCombination<T>) -> Value {
    let mut cuts = Map::new();
    for (side, w) in c.support() {
        cuts.insert(cut_key(c.labels(), side), scalar(w));
    }
    Value::Object(cuts)
}

pub fn metric_to_json<T: Scalar>(m: &MetricTable<T>) -> Value {
    let mut values = Map::new();
    // pairs in increasing bitmask order
    for mask in 0usize..1 << m.n() {
        if subset::size(mask) == 2 {
            let mut it = subset::members(mask);
            let (i, j) = (it.next().unwrap_or(0), it.next().unwrap_or(0));
            values.insert(subset::key(m.labels(), mask), scalar(m.get(i, j)));
        }
    }
    Value::Object(values)
}

pub fn validation_to_json<T: Scalar>(labels: &[String], r: &ValidationReport<T>) -> Value {
    let violations: Vec<Value> = r
        .violations
        .iter()
        .map(|v| {
            json!({
                "kind": v.kind.name(),
                "sets": v.sets.iter().map(|&s| Value::String(subset::key(labels, s))).collect::<Vec<_>>(),
                "values": v.values.iter().map(scalar).collect::<Vec<_>>(),
            })
        })
        .collect();
    json!({
        "ok": r.ok,
        "strict": r.is_strict(),
        "violations": violations,
        "truncated": r.truncated,
        "degenerate": r.degenerate.iter().map(|&s| Value::String(subset::key(labels, s))).collect::<Vec<_>>(),
    })
}

pub fn lp_to_json<T: Scalar>(lp: &LinearProgram<T>) -> Value {
    let rows: Vec<Value> = lp
        .rows
        .iter()
        .map(|r| {
            json!({
                "coeffs": r.coeffs.iter().map(scalar).collect::<Vec<_>>(),
                "relation": r.relation.symbol(),
                "rhs": scalar(&r.rhs),
            })
        })
        .collect();
    json!({
        "sense": "min",
        "objective": lp.objective.iter().map(scalar).collect::<Vec<_>>(),
        "rows": rows,
    })
}

pub fn lp_solution_to_json<T: Scalar>(s: &LpSolution<T>) -> Value {
    json!({
        "x": s.x.iter().map(scalar).collect::<Vec<_>>(),
        "objective": scalar(&s.objective),
        "dual": s.dual.iter().map(scalar).collect::<Vec<_>>(),
        "dual_objective": scalar(&s.dual_objective),
    })
}

pub fn distortion_to_json<T: Scalar>(r: &DistortionResult<T>, with_lp: bool) -> Value {
    let mut out = json!({
        "alpha": scalar(&r.alpha),
        "dual_bound": scalar(&r.dual_bound),
        "normalization": DISTORTION_NORMALIZATION,
        "cuts": cuts_to_json(&r.witness),
    });
    if with_lp {
        out["lp"] = lp_to_json(&r.program);
        out["solution"] = lp_solution_to_json(&r.solution);
    }
    out
}

/// Compact or indented JSON followed by a newline.
pub fn render(v: &Value, pretty: bool) -> String {
    let mut s = if pretty {
        serde_json::to_string_pretty(v)
    } else {
        serde_json::to_string(v)
    }
    .unwrap_or_default();
    s.push('\n');
    s
}
