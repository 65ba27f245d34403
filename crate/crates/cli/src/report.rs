//! JSON reports.
//!
//! Reports are `serde_json::Value`s, whose maps keep keys sorted, so the
//! same input always serializes to the same bytes. Vertices and edges are
//! written by name; classes are ordered by their first vertex in file
//! order.

use bidikl_core::{BidirectedGraph, EdgeSet, Partition, ReachProfile, Sign, VertexId};
use serde_json::{json, Map, Value};

pub const ENGINE: &str = concat!("bidikl ", env!("CARGO_PKG_VERSION"));

pub fn type_key(start: Sign, end: Sign) -> String {
    format!("({start},{end})")
}

pub fn profile(p: &ReachProfile) -> Value {
    let map: Map<String, Value> = p
        .entries()
        .map(|(a, b, exists)| (type_key(a, b), Value::Bool(exists)))
        .collect();
    Value::Object(map)
}

pub fn vertices(g: &BidirectedGraph, vs: &[VertexId]) -> Value {
    vs.iter().map(|&v| json!(g.vertex_name(v))).collect()
}

pub fn classes(g: &BidirectedGraph, classes: &[Vec<VertexId>]) -> Value {
    classes.iter().map(|c| vertices(g, c)).collect()
}

pub fn partition(g: &BidirectedGraph, p: &Partition) -> Value {
    classes(g, p.classes())
}

pub fn edges(g: &BidirectedGraph, set: &EdgeSet) -> Value {
    set.iter().map(|e| json!(g.edge_name(e))).collect()
}

/// Wraps `results` with the command echo and a provenance block.
pub fn envelope(g: &BidirectedGraph, command: Value, results: Value) -> Value {
    json!({
        "command": command,
        "results": results,
        "provenance": {
            "engine": ENGINE,
            "edge_order": g.edge_ids().map(|e| g.edge_name(e)).collect::<Vec<_>>(),
            "vertex_order": g.vertices().map(|v| g.vertex_name(v)).collect::<Vec<_>>(),
        },
    })
}

pub fn to_text(report: &Value) -> String {
    let mut text = serde_json::to_string_pretty(report).expect("reports serialize");
    text.push('\n');
    text
}
