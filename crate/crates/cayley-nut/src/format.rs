//! Text and JSON renderings of graphs, certificates and construction results.
//!
//! All JSON is built from `serde_json::Value`, whose maps are ordered by key,
//! so serialized output is key-sorted and byte-reproducible.

use std::fmt::Write as _;

use cayley_nut_core::{ConstructionParameters, ConstructionResult, Graph, NutCertificate};
use serde_json::{json, Map, Value};

/// One `u v` line per edge, `u < v`, ascending.
pub fn edge_list(g: &Graph) -> String {
    let mut out = String::new();
    for (u, v) in g.edges() {
        writeln!(out, "{u} {v}").unwrap();
    }
    out
}

/// Parses the edge-list format. The order is one more than the largest vertex
/// mentioned unless `order` is given.
pub fn parse_edge_list(text: &str, order: Option<usize>) -> Result<Graph, String> {
    let mut edges = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut it = line.split_whitespace().map(str::parse::<usize>);
        match (it.next(), it.next(), it.next()) {
            (Some(Ok(u)), Some(Ok(v)), None) => edges.push((u, v)),
            _ => return Err(format!("line {}: expected two vertex indices", lineno + 1)),
        }
    }
    let n = order.unwrap_or_else(|| edges.iter().map(|&(u, v)| u.max(v) + 1).max().unwrap_or(0));
    Graph::from_edges(n, edges).map_err(|e| e.to_string())
}

pub fn graph_json(g: &Graph) -> Value {
    let edges: Vec<[usize; 2]> = g.edges().map(|(u, v)| [u, v]).collect();
    json!({ "n": g.order(), "edges": edges, "provenance": g.provenance() })
}

/// Certificate JSON. `verified` reflects a fresh [`NutCertificate::verify`].
pub fn certificate_json(cert: &NutCertificate) -> Value {
    let kernel: Vec<String> = cert
        .kernel_integers()
        .iter()
        .map(ToString::to_string)
        .collect();
    json!({
        "graph6": cert.graph6(),
        "order": cert.order(),
        "degree": cert.degree(),
        "kernel": kernel,
        "provenance": cert.provenance(),
        "verified": cert.verify().is_ok(),
    })
}

pub fn parameters_json(result: &ConstructionResult) -> Value {
    let mut map = Map::new();
    map.insert("n".into(), json!(result.order));
    map.insert("d".into(), json!(result.degree));
    match &result.parameters {
        ConstructionParameters::Circulant { connection_set } => {
            map.insert("connection_set".into(), json!(connection_set.steps()));
        }
        ConstructionParameters::PrismComplement { beta } => {
            map.insert("beta".into(), json!(beta));
        }
        ConstructionParameters::Qd16 { generator_words } => {
            map.insert("generators".into(), json!(generator_words));
        }
    }
    Value::Object(map)
}

/// Certificate JSON extended with `regime` and `parameters`.
pub fn construction_json(result: &ConstructionResult) -> Value {
    let mut value = certificate_json(&result.certificate);
    let map = value
        .as_object_mut()
        .expect("certificate JSON is an object");
    map.insert("regime".into(), json!(result.regime.as_str()));
    map.insert("parameters".into(), parameters_json(result));
    value
}

/// Compact degree sequence, e.g. `8^16` or `3^2,2^4`, highest degree first.
pub fn degree_sequence_summary(g: &Graph) -> String {
    let seq = g.degree_sequence();
    let mut parts: Vec<String> = Vec::new();
    let mut i = 0;
    while i < seq.len() {
        let j = seq[i..].iter().take_while(|&&x| x == seq[i]).count();
        parts.push(format!("{}^{}", seq[i], j));
        i += j;
    }
    parts.join(",")
}
