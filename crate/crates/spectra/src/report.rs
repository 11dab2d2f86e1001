//! JSON documents for every report type, plus a plain-text rendering.
//! Output is deterministic: no timings unless asked for, maps in
//! insertion order.

use serde_json::{json, Map, Value};
use spectra_core::bounds::{BoundEvidence, QBoundReport};
use spectra_core::codes::CodePairReport;
use spectra_core::obstruction::{CertificateKind, ObstructionCertificate, SignExhaust, Witness};
use spectra_core::Rational;

use crate::SPEC_VERSION;

/// Top-level document: `spec_version`, `command`, then the body's fields.
pub fn document(command: &str, body: Value) -> Value {
    let mut m = Map::new();
    m.insert("spec_version".into(), json!(SPEC_VERSION));
    m.insert("command".into(), json!(command));
    if let Value::Object(b) = body {
        m.extend(b);
    } else {
        m.insert("result".into(), body);
    }
    Value::Object(m)
}

pub fn rational(r: &Rational) -> Value {
    json!(r.to_string())
}

pub fn kind_name(k: CertificateKind) -> &'static str {
    match k {
        CertificateKind::Parity => "parity",
        CertificateKind::SignExhaust => "sign-exhaust",
        CertificateKind::UniquePath => "unique-path",
        CertificateKind::ParityTrace => "parity-trace",
    }
}

/// `{graph, j, kind, bound, witness, stats}`; `elapsed_ms` stays null
/// unless a timing is supplied.
pub fn certificate(graph: &str, c: &ObstructionCertificate, elapsed_ms: Option<u128>) -> Value {
    let witness = match &c.witness {
        Witness::PolynomialIndices(f) => json!({ "polynomial_indices": f }),
        Witness::Pair(u, v) => json!({ "pair": [u, v] }),
        Witness::None => json!({ "none": null }),
    };
    let stats = match &c.stats {
        Some(s) => json!({
            "assignments_tried": s.assignments_tried,
            "elapsed_ms": elapsed_ms,
            "first_failure": s.first_failure,
        }),
        None => json!({ "assignments_tried": 0, "elapsed_ms": elapsed_ms }),
    };
    json!({
        "graph": graph,
        "j": c.j,
        "kind": kind_name(c.kind),
        "bound": c.bound,
        "witness": witness,
        "stats": stats,
    })
}

pub fn exhaust_result(graph: &str, r: &SignExhaust, elapsed_ms: Option<u128>) -> Value {
    match r {
        SignExhaust::Unsat(c) => json!({ "outcome": "unsat", "certificate": certificate(graph, c, elapsed_ms) }),
        SignExhaust::Survivor { assignment, variables, tried } => json!({
            "outcome": "survivor",
            "witness": { "assignment_bits": format!("{:#x}", assignment), "variables": variables },
            "stats": { "assignments_tried": tried, "elapsed_ms": elapsed_ms },
        }),
    }
}

fn evidence(graph: &str, e: &BoundEvidence) -> Value {
    let mut v = json!({ "value": e.value, "rule": e.rule.name(), "detail": e.detail });
    if let Some(c) = &e.certificate {
        v["certificate"] = certificate(graph, c, None);
    }
    v
}

pub fn q_bound_report(r: &QBoundReport) -> Value {
    let id = r.graph_id.as_str();
    json!({
        "graph": id,
        "order": r.order,
        "diameter": r.diameter,
        "distance_regular": r.distance_regular,
        "lower": r.lower,
        "upper": r.upper,
        "resolved": r.resolved,
        "lower_rule": r.best_lower().map(|e| e.rule.name()),
        "upper_rule": r.best_upper().map(|e| e.rule.name()),
        "lower_evidence": r.lower_evidence.iter().map(|e| evidence(id, e)).collect::<Vec<_>>(),
        "upper_evidence": r.upper_evidence.iter().map(|e| evidence(id, e)).collect::<Vec<_>>(),
        "cited_not_verified": r.cited.iter().map(|c| json!({ "value": c.value, "source": c.source })).collect::<Vec<_>>(),
        "notes": r.notes,
    })
}

pub fn code_report(r: &CodePairReport) -> Value {
    let mut codes = Map::new();
    for (name, c) in &r.codes {
        codes.insert(name.label().into(), json!({ "dim": c.dimension(), "length": c.length(), "full": c.is_full() }));
    }
    json!({
        "n": r.n,
        "d": r.d,
        "n_mod3": r.n_mod3,
        "d_mod3": r.d_mod3,
        "codes": codes,
        "relations": r.relations.iter().map(|c| json!({ "statement": c.statement, "verified": c.verified })).collect::<Vec<_>>(),
        "observations": r.observations.iter().map(|o| json!({
            "statement": o.statement,
            "observed": o.observed,
            "predicted": o.predicted,
            "matches": o.matches,
        })).collect::<Vec<_>>(),
        "all_verified": r.all_verified(),
    })
}

/// Indented `key: value` lines; arrays of scalars stay on one line.
pub fn to_text(v: &Value) -> String {
    let mut out = String::new();
    write_text(v, 0, &mut out);
    out
}

fn scalar(v: &Value) -> Option<String> {
    match v {
        Value::Null => Some("-".into()),
        Value::Bool(b) => Some(b.to_string()),
        Value::Number(n) => Some(n.to_string()),
        Value::String(s) => Some(s.clone()),
        Value::Array(a) if a.iter().all(|x| !x.is_object() && !x.is_array()) => {
            Some(format!("[{}]", a.iter().map(|x| scalar(x).expect("scalar")).collect::<Vec<_>>().join(", ")))
        }
        _ => None,
    }
}

fn write_text(v: &Value, depth: usize, out: &mut String) {
    let pad = "  ".repeat(depth);
    match v {
        Value::Object(m) => {
            for (k, x) in m {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{}{}: {}\n", pad, k, s)),
                    None => {
                        out.push_str(&format!("{}{}:\n", pad, k));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        Value::Array(a) => {
            for (i, x) in a.iter().enumerate() {
                match scalar(x) {
                    Some(s) => out.push_str(&format!("{}- {}\n", pad, s)),
                    None => {
                        out.push_str(&format!("{}- [{}]\n", pad, i));
                        write_text(x, depth + 1, out);
                    }
                }
            }
        }
        other => out.push_str(&format!("{}{}\n", pad, scalar(other).expect("scalar"))),
    }
}
