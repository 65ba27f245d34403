//! The JSON graph file.
//!
//! ```json
//! {
//!   "kind": "bidirected",
//!   "vertices": ["a", "b"],
//!   "edges": [{ "id": "e", "u": "a", "v": "b", "su": "-", "sv": "+" }],
//!   "b": { "a": 1, "b": 1 }
//! }
//! ```
//!
//! `kind` defaults to `bidirected`. A `digraph` document lists `arcs` as
//! `[tail, head]` pairs instead of edges. A `signed+factor` document lists
//! plain edges (signs optional and ignored) plus a `matching`; its
//! bidirected view is the graph signed `-` on matching edges and `+`
//! elsewhere.

use std::collections::BTreeMap;
use std::fmt;

use bidikl_core::{build_gm, is_b_factor, BidirectedGraph, DegreeSpec, EdgeSet, EdgeSpec, Sign};
use serde::{Deserialize, Serialize};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Kind {
    #[serde(rename = "bidirected")]
    Bidirected,
    #[serde(rename = "digraph")]
    Digraph,
    #[serde(rename = "signed+factor")]
    SignedFactor,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct EdgeRecord {
    pub id: String,
    pub u: String,
    pub v: String,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub su: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sv: Option<String>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct GraphDocument {
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub kind: Option<Kind>,
    pub vertices: Vec<String>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub edges: Vec<EdgeRecord>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub arcs: Option<Vec<(String, String)>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub matching: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub b: Option<BTreeMap<String, u32>>,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum DocError {
    Parse {
        line: usize,
        column: usize,
        message: String,
    },
    Validation {
        field: String,
        message: String,
    },
}

impl fmt::Display for DocError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DocError::Parse { line, column, message } => {
                write!(f, "parse error at line {line}, column {column}: {message}")
            }
            DocError::Validation { field, message } => write!(f, "invalid `{field}`: {message}"),
        }
    }
}

impl std::error::Error for DocError {}

fn invalid(field: impl Into<String>, message: impl Into<String>) -> DocError {
    DocError::Validation {
        field: field.into(),
        message: message.into(),
    }
}

/// A validated document with its graphs built.
#[derive(Debug, Clone)]
pub struct LoadedGraph {
    pub document: GraphDocument,
    /// The bidirected view every circular/KL analysis runs on.
    pub graph: BidirectedGraph,
    /// The same vertices and edges, for b-factor analyses. Signs unused.
    pub plain: BidirectedGraph,
    /// `b` from the file; otherwise the matching's degrees for
    /// `signed+factor` and 1 everywhere for other kinds.
    pub b: DegreeSpec,
    pub matching: Option<EdgeSet>,
}

/// Parses and validates a graph file.
pub fn parse_graph_file(bytes: &[u8]) -> Result<GraphDocument, DocError> {
    let document: GraphDocument = serde_json::from_slice(bytes).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    document.load()?;
    Ok(document)
}

/// Parses, validates and builds the graphs in one go.
pub fn load_graph_file(bytes: &[u8]) -> Result<LoadedGraph, DocError> {
    let document: GraphDocument = serde_json::from_slice(bytes).map_err(|e| DocError::Parse {
        line: e.line(),
        column: e.column(),
        message: e.to_string(),
    })?;
    document.load()
}

fn sign_field(value: Option<&str>, field: String) -> Result<Sign, DocError> {
    let raw = value.ok_or_else(|| invalid(field.clone(), "missing sign"))?;
    raw.parse()
        .map_err(|e: bidikl_core::graph::ParseSignError| invalid(field, e.to_string()))
}

fn core_error(field: &str, e: bidikl_core::Error) -> DocError {
    invalid(field, e.to_string())
}

impl GraphDocument {
    pub fn kind(&self) -> Kind {
        self.kind.unwrap_or(Kind::Bidirected)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("document serializes")
    }

    pub fn load(&self) -> Result<LoadedGraph, DocError> {
        let kind = self.kind();
        if kind != Kind::Digraph && self.arcs.is_some() {
            return Err(invalid("arcs", "only allowed in digraph documents"));
        }
        if kind != Kind::SignedFactor && self.matching.is_some() {
            return Err(invalid("matching", "only allowed in signed+factor documents"));
        }

        let plain = match kind {
            Kind::Bidirected => {
                let mut specs = Vec::with_capacity(self.edges.len());
                for (i, e) in self.edges.iter().enumerate() {
                    let su = sign_field(e.su.as_deref(), format!("edges[{i}].su"))?;
                    let sv = sign_field(e.sv.as_deref(), format!("edges[{i}].sv"))?;
                    specs.push(EdgeSpec::new(&e.id, &e.u, &e.v, su, sv));
                }
                BidirectedGraph::new(self.vertices.iter().cloned(), specs).map_err(|e| core_error("edges", e))?
            }
            Kind::Digraph => {
                if !self.edges.is_empty() {
                    return Err(invalid("edges", "digraph documents list arcs instead"));
                }
                let arcs = self.arcs.as_ref().ok_or_else(|| invalid("arcs", "missing"))?;
                BidirectedGraph::from_digraph(self.vertices.iter().cloned(), arcs.iter().map(|(t, h)| (t, h)))
                    .map_err(|e| core_error("arcs", e))?
            }
            Kind::SignedFactor => {
                for (i, e) in self.edges.iter().enumerate() {
                    for (name, value) in [("su", &e.su), ("sv", &e.sv)] {
                        if let Some(s) = value {
                            sign_field(Some(s), format!("edges[{i}].{name}"))?;
                        }
                    }
                }
                let specs = self
                    .edges
                    .iter()
                    .map(|e| EdgeSpec::new(&e.id, &e.u, &e.v, Sign::Plus, Sign::Plus));
                BidirectedGraph::new(self.vertices.iter().cloned(), specs).map_err(|e| core_error("edges", e))?
            }
        };

        let matching = match &self.matching {
            None if kind == Kind::SignedFactor => return Err(invalid("matching", "missing")),
            None => None,
            Some(ids) => {
                let mut set = EdgeSet::with_capacity(plain.edge_count());
                for (i, id) in ids.iter().enumerate() {
                    let e = plain
                        .edge_id(id)
                        .ok_or_else(|| invalid(format!("matching[{i}]"), format!("unknown edge `{id}`")))?;
                    if set.contains(e) {
                        return Err(invalid(format!("matching[{i}]"), format!("edge `{id}` listed twice")));
                    }
                    set.insert(e);
                }
                Some(set)
            }
        };

        let b = match (&self.b, &matching) {
            (Some(map), _) => {
                for key in map.keys() {
                    if plain.vertex_id(key).is_none() {
                        return Err(invalid(format!("b.{key}"), "unknown vertex"));
                    }
                }
                let mut values = Vec::with_capacity(plain.vertex_count());
                for name in &self.vertices {
                    let value = map
                        .get(name)
                        .ok_or_else(|| invalid("b", format!("no value for vertex `{name}`")))?;
                    values.push(*value);
                }
                DegreeSpec::new(values)
            }
            (None, Some(m)) => {
                let mut degree = vec![0u32; plain.vertex_count()];
                for e in m.iter() {
                    let edge = plain.edge(e).expect("validated edge");
                    degree[edge.u.index()] += 1;
                    degree[edge.v.index()] += 1;
                }
                DegreeSpec::new(degree)
            }
            (None, None) => DegreeSpec::uniform(plain.vertex_count(), 1),
        };

        let graph = match &matching {
            Some(m) => {
                if !is_b_factor(&plain, &b, m).expect("spec sized to graph") {
                    return Err(invalid("matching", "is not a b-factor"));
                }
                build_gm(&plain, m).expect("validated edges")
            }
            None => plain.clone(),
        };

        Ok(LoadedGraph {
            document: self.clone(),
            graph,
            plain,
            b,
            matching,
        })
    }
}
