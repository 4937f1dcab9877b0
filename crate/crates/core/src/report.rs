//! JSON reports for each command, plus a plain-text rendering.
//!
//! Reports are `serde_json::Value`s built in a fixed key order; maps keyed by
//! point names are sorted by name, so output is byte-stable.

use serde_json::{json, Map, Value};

use crate::bits::PointSet;
use crate::engine::RepresentationEngine;
use crate::error::{Error, Result};
use crate::family::PointFamily;
use crate::rings::{irredundant_decomposition, FiniteRing, IdealFilter, RingIdeal};
use crate::theorems::CheckSuite;
use crate::zr::UniquenessReport;
use crate::Caps;

fn names(family: &PointFamily, z: PointSet) -> Value {
    json!(family.sorted_names(z))
}

fn label(family: &PointFamily, d: Option<usize>) -> Value {
    d.map_or(Value::Null, |d| json!(family.context().label(d)))
}

/// Map from sorted point names of `z` to `f(point)`.
fn by_name(
    family: &PointFamily,
    z: PointSet,
    mut f: impl FnMut(usize) -> Result<Value>,
) -> Result<Value> {
    let mut idx: Vec<usize> = z.iter().collect();
    idx.sort_by(|&a, &b| family.name(a).cmp(family.name(b)));
    let mut m = Map::new();
    for i in idx {
        m.insert(family.name(i).to_string(), f(i)?);
    }
    Ok(Value::Object(m))
}

fn witnesses(engine: &RepresentationEngine<'_>, z: PointSet) -> Result<Value> {
    let family = engine.family();
    by_name(family, z, |b| {
        Ok(label(family, engine.classify_member(z, b)?.witness))
    })
}

/// Brute-force cross-checks requested with `--oracle`.
fn oracle_section(engine: &RepresentationEngine<'_>, chosen: PointSet) -> Result<Value> {
    let family = engine.family();
    let critical = engine.critical_points_oracle()?;
    if critical != engine.critical_points() {
        return Err(Error::violation(
            "critical-oracle",
            format!("oracle gives {:?}", family.sorted_names(critical)),
        ));
    }
    for b in chosen {
        if engine.strongly_irredundant_oracle(chosen, b)?
            != engine.is_strongly_irredundant(chosen, b)
        {
            return Err(Error::violation(
                "strong-irredundance-oracle",
                format!("disagreement at point {}", family.name(b)),
            ));
        }
    }
    Ok(json!({"critical_points": "agrees", "strong_irredundance": "agrees"}))
}

/// Full classification of `chosen` (the whole family by default), critical
/// points and minimal representations.
pub fn analyze_family(
    family: &PointFamily,
    chosen: Option<PointSet>,
    caps: Caps,
    oracle: bool,
) -> Result<Value> {
    let engine = RepresentationEngine::new(family, caps)?;
    let z = chosen.unwrap_or(family.all());
    let members = by_name(family, z, |b| {
        let f = engine.classify_member(z, b)?;
        Ok(json!({
            "irredundant": f.irredundant,
            "strongly_irredundant": f.strongly_irredundant,
            "tightly_irredundant": f.tightly_irredundant,
            "critical": f.critical,
            "isolated_spectral": f.isolated_spectral,
            "isolated_patch": f.isolated_patch,
            "witness": label(family, f.witness),
            "strong_witness": label(family, f.strong_witness),
        }))
    })?;
    let ctx = family.context();
    let mut report = json!({
        "kind": "set-system",
        "C": ctx.labels_of(ctx.fixed()),
        "A": ctx.labels_of(ctx.target()),
        "points": family.names(),
        "chosen": names(family, z),
        "members": members,
    });
    let obj = report.as_object_mut().unwrap();
    for (k, v) in minimal_fields(&engine)? {
        obj.insert(k, v);
    }
    if oracle {
        obj.insert("oracle".into(), oracle_section(&engine, z)?);
    }
    Ok(report)
}

fn minimal_fields(engine: &RepresentationEngine<'_>) -> Result<Map<String, Value>> {
    let family = engine.family();
    let u = engine.unique_minimal_analysis()?;
    let minimal = engine
        .minimal_representations()?
        .into_iter()
        .map(|z| Ok(json!({"members": names(family, z), "witnesses": witnesses(engine, z)?})))
        .collect::<Result<Vec<_>>>()?;
    let mut m = Map::new();
    m.insert("critical".into(), names(family, engine.critical_points()));
    m.insert("cset".into(), names(family, u.cset));
    m.insert("cset_represents".into(), json!(u.cset_represents));
    m.insert("minimal_representations".into(), json!(minimal));
    m.insert("unique_minimal".into(), json!(u.unique));
    m.insert(
        "strongly_irredundant_representation".into(),
        u.strongly_irredundant_rep
            .map_or(Value::Null, |z| names(family, z)),
    );
    Ok(m)
}

pub fn critical_report(family: &PointFamily, caps: Caps, oracle: bool) -> Result<Value> {
    let engine = RepresentationEngine::new(family, caps)?;
    let critical = engine.critical_points();
    let cset = engine.cset();
    let mut report = json!({
        "kind": "critical",
        "points": by_name(family, family.all(), |b| Ok(json!(critical.contains(b))))?,
        "critical": names(family, critical),
        "cset": names(family, cset),
        "cset_represents": engine.is_representation(cset),
    });
    if oracle {
        report
            .as_object_mut()
            .unwrap()
            .insert("oracle".into(), oracle_section(&engine, family.all())?);
    }
    Ok(report)
}

pub fn minimal_report(family: &PointFamily, caps: Caps) -> Result<Value> {
    let engine = RepresentationEngine::new(family, caps)?;
    let closed: Vec<Value> = engine
        .minimal_closed_representations()?
        .into_iter()
        .map(|y| names(family, y))
        .collect();
    let mut report = json!({
        "kind": "minimal",
        "minimal_closed_representations": closed,
    });
    let obj = report.as_object_mut().unwrap();
    for (k, v) in minimal_fields(&engine)? {
        obj.insert(k, v);
    }
    Ok(report)
}

fn ideal_names(ideals: &[RingIdeal]) -> Value {
    json!(ideals.iter().map(|i| i.to_string()).collect::<Vec<_>>())
}

/// Decompositions of `ideal`, or of every proper ideal.
pub fn decompose_report(ring: &FiniteRing, ideal: Option<&RingIdeal>, caps: Caps) -> Result<Value> {
    let ideals = match ideal {
        Some(a) => vec![a.clone()],
        None => ring.enumerate_ideals(IdealFilter::Proper),
    };
    let mut rows = Vec::new();
    for a in &ideals {
        let d = irredundant_decomposition(ring, a, caps)?;
        rows.push(json!({
            "ideal": a.to_string(),
            "components": ideal_names(&d.components),
            "unique": d.unique,
            "strongly_irredundant": d.strongly_irredundant,
            "summary": d.to_string(),
        }));
    }
    Ok(json!({"kind": "decompose", "ring": ring.describe(), "decompositions": rows}))
}

pub fn ring_report(ring: &FiniteRing, ideal: Option<&RingIdeal>, caps: Caps) -> Result<Value> {
    let mut filters = Map::new();
    for f in IdealFilter::ALL {
        let key = serde_json::to_value(f)
            .unwrap()
            .as_str()
            .unwrap()
            .to_string();
        filters.insert(key, ideal_names(&ring.enumerate_ideals(f)));
    }
    let mut report = json!({
        "kind": "ring",
        "ring": ring.describe(),
        "size": ring.size(),
        "arithmetical": ring.is_arithmetical(),
        "ideals": filters,
    });
    if ring.is_arithmetical() {
        let d = decompose_report(ring, ideal, caps)?;
        report
            .as_object_mut()
            .unwrap()
            .insert("decompositions".into(), d["decompositions"].clone());
    }
    Ok(report)
}

pub fn uniqueness_report(r: &UniquenessReport) -> Value {
    json!({"kind": "zr-check", "pool": r.pool, "checks": r.checks, "witnesses": r.witnesses})
}

pub fn checks_report(suite: &CheckSuite) -> Value {
    json!({
        "kind": "check-theorems",
        "passed": suite.all_passed(),
        "checks": suite.checks,
    })
}

/// Line-oriented rendering: `key: value`, nested objects indented, string
/// arrays as `{a, b}`.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    render(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(items) if items.iter().all(|i| !i.is_object() && !i.is_array()) => {
            Some(format!(
                "{{{}}}",
                items
                    .iter()
                    .map(|i| scalar(i).unwrap())
                    .collect::<Vec<_>>()
                    .join(", ")
            ))
        }
        _ => None,
    }
}

fn render(v: &Value, indent: usize, out: &mut String) {
    let pad = "  ".repeat(indent);
    match v {
        Value::Object(m) => {
            for (k, v) in m {
                match scalar(v) {
                    Some(s) => out.push_str(&format!("{pad}{k}: {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}{k}:\n"));
                        render(v, indent + 1, out);
                    }
                }
            }
        }
        Value::Array(items) => {
            for item in items {
                match scalar(item) {
                    Some(s) => out.push_str(&format!("{pad}- {s}\n")),
                    None => {
                        out.push_str(&format!("{pad}-\n"));
                        render(item, indent + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{pad}{}\n", scalar(other).unwrap())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::family::ContextTriple;

    fn i1() -> PointFamily {
        let ctx = ContextTriple::new(&["a", "b", "c"], &["a", "b", "c"], &["a"]).unwrap();
        PointFamily::from_labels(
            ctx,
            &[
                ("B1", vec!["a", "b"]),
                ("B2", vec!["a", "c"]),
                ("B3", vec!["a", "b", "c"]),
            ],
        )
        .unwrap()
    }

    #[test]
    fn i1_analysis() {
        let r = analyze_family(&i1(), None, Caps::default(), true).unwrap();
        assert_eq!(
            r["minimal_representations"][0]["members"],
            json!(["B1", "B2"])
        );
        assert_eq!(
            r["minimal_representations"][0]["witnesses"],
            json!({"B1": "c", "B2": "b"})
        );
        assert_eq!(r["members"]["B3"]["irredundant"], json!(false));
        assert_eq!(r["oracle"]["critical_points"], json!("agrees"));
    }

    #[test]
    fn z12_decomposition() {
        let ring = FiniteRing::zmod(12).unwrap();
        let r = decompose_report(&ring, Some(&RingIdeal::Divisor(6)), Caps::default()).unwrap();
        assert_eq!(
            r["decompositions"][0]["summary"],
            json!("(6) = (2) ∩ (3), unique, strongly irredundant")
        );
        let all = ring_report(&ring, None, Caps::default()).unwrap();
        assert_eq!(all["ideals"]["irreducible"], json!(["(2)", "(3)", "(4)"]));
        assert_eq!(all["decompositions"].as_array().unwrap().len(), 5);
    }

    #[test]
    fn text_rendering() {
        let v = json!({"a": ["x", "y"], "b": {"c": null, "d": 3}, "e": [{"f": true}]});
        assert_eq!(
            to_text(&v),
            "a: {x, y}\nb:\n  c: -\n  d: 3\ne:\n  -\n    f: true\n"
        );
    }
}
