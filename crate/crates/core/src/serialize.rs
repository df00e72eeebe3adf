//! JSON document formats for certificates, colorings, dominating sets, and
//! planarity verdicts. All documents carry `"schema": 1`.

use crate::coloring::{Coloring, ColoringDomain};
use crate::domination::DominatingSet;
use crate::error::AoError;
use crate::hamiltonian::{CycleCertificate, CycleKind, GridParams};
use crate::planarity::{BipartiteWitness, PlanarityVerdict};
use crate::words::{AOParams, Word};
use serde_json::{json, Value};

pub const SCHEMA_VERSION: u64 = 1;

fn get<'a>(doc: &'a Value, key: &str) -> Result<&'a Value, AoError> {
    doc.get(key)
        .ok_or_else(|| AoError::Parse(format!("missing field {key:?}")))
}

fn parse_ao_params(doc: &Value) -> Result<AOParams, AoError> {
    serde_json::from_value(get(doc, "params")?.clone()).map_err(|e| AoError::Parse(e.to_string()))
}

pub fn cycle_to_json(cert: &CycleCertificate) -> Value {
    let d = cert.alphabet();
    let cycle: Vec<String> = cert.vertices.iter().map(|v| v.render(d)).collect();
    match &cert.kind {
        CycleKind::Ao(p) => json!({
            "schema": SCHEMA_VERSION,
            "kind": "ao",
            "params": p,
            "cycle": cycle,
        }),
        CycleKind::Grid(g) => json!({
            "schema": SCHEMA_VERSION,
            "kind": "grid",
            "params": {"d": g.d(), "dim": g.k()},
            "cycle": cycle,
        }),
    }
}

pub fn cycle_from_json(text: &str) -> Result<CycleCertificate, AoError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| AoError::Parse(e.to_string()))?;
    let kind_tag = get(&doc, "kind")?
        .as_str()
        .ok_or_else(|| AoError::Parse("kind must be a string".into()))?
        .to_string();
    let (kind, d, k) = match kind_tag.as_str() {
        "ao" => {
            let p = parse_ao_params(&doc)?;
            (CycleKind::Ao(p), p.d(), p.k())
        }
        "grid" => {
            let params = get(&doc, "params")?;
            let d = get(params, "d")?
                .as_u64()
                .ok_or_else(|| AoError::Parse("grid d must be an integer".into()))?
                as usize;
            let dim = get(params, "dim")?
                .as_u64()
                .ok_or_else(|| AoError::Parse("grid dim must be an integer".into()))?
                as usize;
            let g = GridParams::new(d, dim)?;
            (CycleKind::Grid(g), d, dim)
        }
        other => return Err(AoError::Parse(format!("unknown certificate kind {other:?}"))),
    };
    let texts: Vec<String> = serde_json::from_value(get(&doc, "cycle")?.clone())
        .map_err(|e| AoError::Parse(e.to_string()))?;
    let vertices = texts
        .iter()
        .map(|s| {
            let w = Word::parse(s, d)?;
            if w.len() != k {
                return Err(AoError::Parse(format!(
                    "cycle vertex {s:?} has length {}, expected {k}",
                    w.len()
                )));
            }
            Ok(w)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(CycleCertificate { kind, vertices })
}

/// Plain-text form: one vertex per line.
pub fn cycle_to_text(cert: &CycleCertificate) -> String {
    let d = cert.alphabet();
    let mut out = String::new();
    for v in &cert.vertices {
        out.push_str(&v.render(d));
        out.push('\n');
    }
    out
}

pub fn coloring_to_json(c: &Coloring) -> Value {
    let d = c.alphabet();
    let colors: serde_json::Map<String, Value> = c
        .assignment
        .iter()
        .map(|(w, &color)| (w.render(d), json!(color)))
        .collect();
    let domain = match c.domain {
        ColoringDomain::Ao(p) => json!({"kind": "ao", "params": p}),
        ColoringDomain::Matrix(n) => json!({"kind": "matrix", "order": n}),
    };
    json!({
        "schema": SCHEMA_VERSION,
        "palette": c.palette,
        "colors": colors,
        "domain": domain,
    })
}

pub fn coloring_from_json(text: &str) -> Result<Coloring, AoError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| AoError::Parse(e.to_string()))?;
    let domain_doc = get(&doc, "domain")?;
    let domain = match get(domain_doc, "kind")?.as_str() {
        Some("ao") => ColoringDomain::Ao(parse_ao_params(domain_doc)?),
        Some("matrix") => {
            let n = get(domain_doc, "order")?
                .as_u64()
                .ok_or_else(|| AoError::Parse("matrix order must be an integer".into()))?;
            ColoringDomain::Matrix(n as usize)
        }
        _ => return Err(AoError::Parse("unknown coloring domain".into())),
    };
    let d = match domain {
        ColoringDomain::Ao(p) => p.d(),
        ColoringDomain::Matrix(n) => n,
    };
    let palette = get(&doc, "palette")?
        .as_u64()
        .ok_or_else(|| AoError::Parse("palette must be an integer".into()))? as usize;
    let colors = get(&doc, "colors")?
        .as_object()
        .ok_or_else(|| AoError::Parse("colors must be an object".into()))?;
    let mut assignment = std::collections::BTreeMap::new();
    for (key, value) in colors {
        let w = Word::parse(key, d)?;
        let color = value
            .as_u64()
            .ok_or_else(|| AoError::Parse(format!("color of {key:?} must be an integer")))?;
        assignment.insert(w, color as usize);
    }
    Ok(Coloring {
        assignment,
        palette,
        domain,
    })
}

pub fn dominating_to_json(ds: &DominatingSet) -> Value {
    let d = ds.params.d();
    json!({
        "schema": SCHEMA_VERSION,
        "params": ds.params,
        "members": ds.members.iter().map(|w| w.render(d)).collect::<Vec<_>>(),
    })
}

pub fn dominating_from_json(text: &str) -> Result<DominatingSet, AoError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| AoError::Parse(e.to_string()))?;
    let params = parse_ao_params(&doc)?;
    let texts: Vec<String> = serde_json::from_value(get(&doc, "members")?.clone())
        .map_err(|e| AoError::Parse(e.to_string()))?;
    let members = texts
        .iter()
        .map(|s| Word::parse(s, params.d()))
        .collect::<Result<_, _>>()?;
    Ok(DominatingSet { members, params })
}

pub fn witness_to_json(w: &BipartiteWitness) -> Value {
    let d = w.params.d();
    json!({
        "schema": SCHEMA_VERSION,
        "params": w.params,
        "left": w.left.iter().map(|v| v.render(d)).collect::<Vec<_>>(),
        "right": w.right.iter().map(|v| v.render(d)).collect::<Vec<_>>(),
    })
}

pub fn witness_from_json(text: &str) -> Result<BipartiteWitness, AoError> {
    let doc: Value = serde_json::from_str(text).map_err(|e| AoError::Parse(e.to_string()))?;
    let params = parse_ao_params(&doc)?;
    let parse_side = |key: &str| -> Result<Vec<Word>, AoError> {
        let texts: Vec<String> = serde_json::from_value(get(&doc, key)?.clone())
            .map_err(|e| AoError::Parse(e.to_string()))?;
        texts.iter().map(|s| Word::parse(s, params.d())).collect()
    };
    Ok(BipartiteWitness {
        left: parse_side("left")?,
        right: parse_side("right")?,
        params,
    })
}

pub fn planarity_to_json(v: &PlanarityVerdict) -> Value {
    match v {
        PlanarityVerdict::Planar { embedding, .. } => json!({
            "schema": SCHEMA_VERSION,
            "status": "planar",
            "embedding": embedding,
        }),
        PlanarityVerdict::NonPlanar { witness } => json!({
            "schema": SCHEMA_VERSION,
            "status": "nonplanar",
            "witness": witness_to_json(witness),
        }),
        PlanarityVerdict::Unknown => json!({
            "schema": SCHEMA_VERSION,
            "status": "unknown",
        }),
    }
}
