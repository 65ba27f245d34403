//! Bidirected multigraphs.
//!
//! Every edge end carries a [`Sign`]. A non-loop edge has exactly one sign
//! at each end. A loop stores two signs, which may coincide. Edges have
//! their own identity, so parallel edges are distinct.

use std::collections::HashMap;
use std::fmt;
use std::ops::Neg;
use std::str::FromStr;

use crate::error::{Error, Result};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Sign {
    Plus,
    Minus,
}

impl Sign {
    pub const BOTH: [Sign; 2] = [Sign::Plus, Sign::Minus];

    pub fn as_str(self) -> &'static str {
        match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        }
    }
}

impl Neg for Sign {
    type Output = Sign;

    fn neg(self) -> Sign {
        match self {
            Sign::Plus => Sign::Minus,
            Sign::Minus => Sign::Plus,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ParseSignError(pub String);

impl fmt::Display for ParseSignError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "invalid sign `{}` (expected `+` or `-`)", self.0)
    }
}

impl std::error::Error for ParseSignError {}

impl FromStr for Sign {
    type Err = ParseSignError;

    /// Accepts `+`, `-` and the typographic minus `−` (U+2212).
    fn from_str(s: &str) -> std::result::Result<Sign, ParseSignError> {
        match s {
            "+" => Ok(Sign::Plus),
            "-" | "\u{2212}" => Ok(Sign::Minus),
            _ => Err(ParseSignError(s.to_owned())),
        }
    }
}

/// Dense vertex index. Indices follow the order vertices were declared in.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct VertexId(usize);

impl VertexId {
    pub const fn new(index: usize) -> Self {
        VertexId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

/// Dense edge index. Indices follow the order edges were declared in, and
/// every search in this crate iterates edges in this order.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EdgeId(usize);

impl EdgeId {
    pub const fn new(index: usize) -> Self {
        EdgeId(index)
    }

    pub const fn index(self) -> usize {
        self.0
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Edge {
    pub u: VertexId,
    pub v: VertexId,
    pub sign_u: Sign,
    pub sign_v: Sign,
}

impl Edge {
    pub fn is_loop(&self) -> bool {
        self.u == self.v
    }

    /// `|σ+(e)| = |σ−(e)| = 1`. A loop is digraphic iff its two signs differ.
    pub fn is_digraphic(&self) -> bool {
        self.sign_u != self.sign_v
    }

    pub fn touches(&self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }

    /// Sign of `x` over this edge. Undefined (`None`) for loops, whose two
    /// ends sit on the same vertex, and for vertices the edge misses.
    pub fn sign_at(&self, x: VertexId) -> Option<Sign> {
        if self.is_loop() {
            None
        } else if x == self.u {
            Some(self.sign_u)
        } else if x == self.v {
            Some(self.sign_v)
        } else {
            None
        }
    }

    /// Traverse the edge leaving `from`. Returns the departure sign at
    /// `from`, the arrival sign at the far end, and the far end.
    ///
    /// `flip` only matters for loops: unflipped, a loop departs over its
    /// first stored sign and arrives over its second.
    pub fn traverse(&self, from: VertexId, flip: bool) -> Option<(Sign, Sign, VertexId)> {
        if self.is_loop() {
            if from != self.u {
                return None;
            }
            return Some(if flip {
                (self.sign_v, self.sign_u, from)
            } else {
                (self.sign_u, self.sign_v, from)
            });
        }
        if from == self.u {
            Some((self.sign_u, self.sign_v, self.v))
        } else if from == self.v {
            Some((self.sign_v, self.sign_u, self.u))
        } else {
            None
        }
    }

    /// Loop orientations worth trying from a search. A loop with equal
    /// signs behaves identically either way round.
    pub(crate) fn orientations(&self) -> &'static [bool] {
        if self.is_loop() && self.sign_u != self.sign_v {
            &[false, true]
        } else {
            &[false]
        }
    }
}

/// How an edge's signs are given to [`BidirectedGraph::new`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EndSigns {
    /// One sign per stored end.
    Ends(Sign, Sign),
    /// The vertex sets `σ+(e)` and `σ−(e)`.
    Sets { plus: Vec<String>, minus: Vec<String> },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeSpec {
    pub id: String,
    pub u: String,
    pub v: String,
    pub signs: EndSigns,
}

impl EdgeSpec {
    pub fn new(id: impl Into<String>, u: impl Into<String>, v: impl Into<String>, sign_u: Sign, sign_v: Sign) -> Self {
        EdgeSpec {
            id: id.into(),
            u: u.into(),
            v: v.into(),
            signs: EndSigns::Ends(sign_u, sign_v),
        }
    }

    pub fn from_sign_sets<S: Into<String>>(
        id: impl Into<String>,
        u: impl Into<String>,
        v: impl Into<String>,
        plus: impl IntoIterator<Item = S>,
        minus: impl IntoIterator<Item = S>,
    ) -> Self {
        EdgeSpec {
            id: id.into(),
            u: u.into(),
            v: v.into(),
            signs: EndSigns::Sets {
                plus: plus.into_iter().map(Into::into).collect(),
                minus: minus.into_iter().map(Into::into).collect(),
            },
        }
    }
}

/// An immutable bidirected multigraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BidirectedGraph {
    vertex_names: Vec<String>,
    edge_names: Vec<String>,
    edges: Vec<Edge>,
    incident: Vec<Vec<EdgeId>>,
    vertex_index: HashMap<String, VertexId>,
    edge_index: HashMap<String, EdgeId>,
}

impl BidirectedGraph {
    pub fn new<S: Into<String>>(
        vertices: impl IntoIterator<Item = S>,
        edges: impl IntoIterator<Item = EdgeSpec>,
    ) -> Result<Self> {
        let vertex_names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        let mut vertex_index = HashMap::with_capacity(vertex_names.len());
        for (i, name) in vertex_names.iter().enumerate() {
            if vertex_index.insert(name.clone(), VertexId(i)).is_some() {
                return Err(Error::DuplicateId(name.clone()));
            }
        }

        let mut edge_names = Vec::new();
        let mut edge_index = HashMap::new();
        let mut stored = Vec::new();
        for spec in edges {
            let lookup = |name: &str| {
                vertex_index.get(name).copied().ok_or_else(|| Error::DanglingEndpoint {
                    edge: spec.id.clone(),
                    vertex: name.to_owned(),
                })
            };
            let u = lookup(&spec.u)?;
            let v = lookup(&spec.v)?;
            let (sign_u, sign_v) = match &spec.signs {
                EndSigns::Ends(a, b) => (*a, *b),
                EndSigns::Sets { plus, minus } => signs_from_sets(&spec.id, &spec.u, &spec.v, plus, minus)?,
            };
            let id = EdgeId(stored.len());
            if edge_index.insert(spec.id.clone(), id).is_some() {
                return Err(Error::DuplicateId(spec.id));
            }
            edge_names.push(spec.id);
            stored.push(Edge { u, v, sign_u, sign_v });
        }

        Ok(Self::assemble(
            vertex_names,
            edge_names,
            stored,
            vertex_index,
            edge_index,
        ))
    }

    /// Each arc `(tail, head)` becomes an edge signed `-` at the tail and
    /// `+` at the head, so forward directed walks are `(-, +)`-ditrails.
    /// Arc `i` gets the id `e{i}`.
    pub fn from_digraph<S: Into<String>, T: AsRef<str>>(
        vertices: impl IntoIterator<Item = S>,
        arcs: impl IntoIterator<Item = (T, T)>,
    ) -> Result<Self> {
        let edges = arcs.into_iter().enumerate().map(|(i, (tail, head))| {
            EdgeSpec::new(format!("e{i}"), tail.as_ref(), head.as_ref(), Sign::Minus, Sign::Plus)
        });
        Self::new(vertices, edges)
    }

    fn assemble(
        vertex_names: Vec<String>,
        edge_names: Vec<String>,
        edges: Vec<Edge>,
        vertex_index: HashMap<String, VertexId>,
        edge_index: HashMap<String, EdgeId>,
    ) -> Self {
        let mut incident = vec![Vec::new(); vertex_names.len()];
        for (i, e) in edges.iter().enumerate() {
            incident[e.u.0].push(EdgeId(i));
            if !e.is_loop() {
                incident[e.v.0].push(EdgeId(i));
            }
        }
        BidirectedGraph {
            vertex_names,
            edge_names,
            edges,
            incident,
            vertex_index,
            edge_index,
        }
    }

    pub fn vertex_count(&self) -> usize {
        self.vertex_names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> impl ExactSizeIterator<Item = VertexId> + '_ {
        (0..self.vertex_names.len()).map(VertexId)
    }

    pub fn edge_ids(&self) -> impl ExactSizeIterator<Item = EdgeId> + '_ {
        (0..self.edges.len()).map(EdgeId)
    }

    pub fn edges(&self) -> impl ExactSizeIterator<Item = (EdgeId, &Edge)> + '_ {
        self.edges.iter().enumerate().map(|(i, e)| (EdgeId(i), e))
    }

    pub fn edge(&self, e: EdgeId) -> Result<&Edge> {
        self.edges.get(e.0).ok_or(Error::UnknownEdge(e.0))
    }

    pub fn check_vertex(&self, v: VertexId) -> Result<()> {
        if v.0 < self.vertex_names.len() {
            Ok(())
        } else {
            Err(Error::UnknownVertex(v.0))
        }
    }

    /// Edges touching `v`, in edge order. Loops are listed once.
    pub fn incident(&self, v: VertexId) -> &[EdgeId] {
        &self.incident[v.0]
    }

    pub fn vertex_id(&self, name: &str) -> Option<VertexId> {
        self.vertex_index.get(name).copied()
    }

    pub fn edge_id(&self, name: &str) -> Option<EdgeId> {
        self.edge_index.get(name).copied()
    }

    pub fn vertex_name(&self, v: VertexId) -> &str {
        &self.vertex_names[v.0]
    }

    pub fn edge_name(&self, e: EdgeId) -> &str {
        &self.edge_names[e.0]
    }

    pub fn is_digraphic(&self) -> bool {
        self.edges.iter().all(Edge::is_digraphic)
    }

    /// Same vertices and edges, with every edge re-signed by `signs`.
    pub fn resigned(&self, mut signs: impl FnMut(EdgeId, &Edge) -> (Sign, Sign)) -> Self {
        let edges = self
            .edges()
            .map(|(id, e)| {
                let (sign_u, sign_v) = signs(id, e);
                Edge {
                    u: e.u,
                    v: e.v,
                    sign_u,
                    sign_v,
                }
            })
            .collect();
        Self::assemble(
            self.vertex_names.clone(),
            self.edge_names.clone(),
            edges,
            self.vertex_index.clone(),
            self.edge_index.clone(),
        )
    }

    /// `G[X]`. Vertices of `X` are sorted and deduplicated first.
    pub fn induced_subgraph(&self, vertices: &[VertexId]) -> Result<Subgraph> {
        let mut keep: Vec<VertexId> = vertices.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut local = vec![None; self.vertex_count()];
        for (i, &v) in keep.iter().enumerate() {
            self.check_vertex(v)?;
            local[v.0] = Some(VertexId(i));
        }
        let mut edge_map = Vec::new();
        let mut edges = Vec::new();
        for (id, e) in self.edges() {
            if let (Some(u), Some(v)) = (local[e.u.0], local[e.v.0]) {
                edge_map.push(id);
                edges.push(Edge {
                    u,
                    v,
                    sign_u: e.sign_u,
                    sign_v: e.sign_v,
                });
            }
        }
        let vertex_names: Vec<String> = keep.iter().map(|&v| self.vertex_names[v.0].clone()).collect();
        let edge_names: Vec<String> = edge_map.iter().map(|&e| self.edge_names[e.0].clone()).collect();
        let vertex_index = vertex_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), VertexId(i)))
            .collect();
        let edge_index = edge_names
            .iter()
            .enumerate()
            .map(|(i, n)| (n.clone(), EdgeId(i)))
            .collect();
        Ok(Subgraph {
            graph: Self::assemble(vertex_names, edge_names, edges, vertex_index, edge_index),
            vertices: keep,
            edges: edge_map,
        })
    }
}

/// An induced subgraph together with its embedding into the parent graph.
#[derive(Debug, Clone)]
pub struct Subgraph {
    pub graph: BidirectedGraph,
    /// Local vertex index to parent vertex.
    pub vertices: Vec<VertexId>,
    /// Local edge index to parent edge.
    pub edges: Vec<EdgeId>,
}

impl Subgraph {
    pub fn local_vertex(&self, parent: VertexId) -> Option<VertexId> {
        self.vertices.binary_search(&parent).ok().map(VertexId)
    }
}

fn signs_from_sets(edge: &str, u: &str, v: &str, plus: &[String], minus: &[String]) -> Result<(Sign, Sign)> {
    let illegal = |reason| Error::IllegalSigns {
        edge: edge.to_owned(),
        reason,
    };
    if plus.iter().chain(minus).any(|x| x != u && x != v) {
        return Err(illegal("sign set mentions a vertex that is not an end"));
    }
    let has = |set: &[String], x: &str| set.iter().any(|y| y == x);
    if u == v {
        return match (has(plus, u), has(minus, u)) {
            (true, true) => Ok((Sign::Plus, Sign::Minus)),
            (true, false) => Ok((Sign::Plus, Sign::Plus)),
            (false, true) => Ok((Sign::Minus, Sign::Minus)),
            (false, false) => Err(illegal("loop end has no sign")),
        };
    }
    let end = |x: &str| match (has(plus, x), has(minus, x)) {
        (true, false) => Ok(Sign::Plus),
        (false, true) => Ok(Sign::Minus),
        (true, true) => Err(illegal("non-loop end has both signs")),
        (false, false) => Err(illegal("non-loop end has no sign")),
    };
    Ok((end(u)?, end(v)?))
}

#[cfg(test)]
mod tests {
    use super::*;
    use Sign::{Minus, Plus};

    #[test]
    fn negation_is_an_involution() {
        for s in Sign::BOTH {
            assert_eq!(-(-s), s);
            assert_ne!(-s, s);
        }
    }

    #[test]
    fn sign_parsing() {
        assert_eq!("+".parse::<Sign>(), Ok(Plus));
        assert_eq!("-".parse::<Sign>(), Ok(Minus));
        assert_eq!("\u{2212}".parse::<Sign>(), Ok(Minus));
        assert!("*".parse::<Sign>().is_err());
    }

    #[test]
    fn empty_graph() {
        let g = BidirectedGraph::new(Vec::<String>::new(), []).unwrap();
        assert_eq!(g.vertex_count(), 0);
        assert_eq!(g.edge_count(), 0);
        assert!(g.is_digraphic());
    }

    #[test]
    fn smallest_digraph() {
        let g = BidirectedGraph::new(["a", "b"], [EdgeSpec::new("e", "a", "b", Minus, Plus)]).unwrap();
        assert!(g.is_digraphic());
        let e = g.edge(g.edge_id("e").unwrap()).unwrap();
        assert_eq!(e.sign_at(g.vertex_id("a").unwrap()), Some(Minus));
        assert_eq!(e.sign_at(g.vertex_id("b").unwrap()), Some(Plus));
    }

    #[test]
    fn dangling_endpoint() {
        let err = BidirectedGraph::new(["a"], [EdgeSpec::new("e", "a", "b", Minus, Plus)]).unwrap_err();
        assert!(matches!(err, Error::DanglingEndpoint { ref vertex, .. } if vertex == "b"));
    }

    #[test]
    fn duplicate_ids() {
        assert_eq!(
            BidirectedGraph::new(["a", "a"], []).unwrap_err(),
            Error::DuplicateId("a".into())
        );
        let err = BidirectedGraph::new(
            ["a", "b"],
            [
                EdgeSpec::new("e", "a", "b", Minus, Plus),
                EdgeSpec::new("e", "b", "a", Minus, Plus),
            ],
        )
        .unwrap_err();
        assert_eq!(err, Error::DuplicateId("e".into()));
    }

    #[test]
    fn sign_sets() {
        let ok = BidirectedGraph::new(
            ["a", "b"],
            [
                EdgeSpec::from_sign_sets("e", "a", "b", ["b"], ["a"]),
                EdgeSpec::from_sign_sets("l1", "a", "a", ["a"], ["a"]),
                EdgeSpec::from_sign_sets("l2", "a", "a", Vec::<String>::new(), vec!["a".into()]),
            ],
        )
        .unwrap();
        let e = |n| ok.edge(ok.edge_id(n).unwrap()).unwrap().clone();
        assert_eq!((e("e").sign_u, e("e").sign_v), (Minus, Plus));
        assert_eq!((e("l1").sign_u, e("l1").sign_v), (Plus, Minus));
        assert_eq!((e("l2").sign_u, e("l2").sign_v), (Minus, Minus));
        assert!(ok.edge(ok.edge_id("l1").unwrap()).unwrap().is_digraphic());

        for (plus, minus) in [
            (vec!["a", "b"], vec!["a"]),
            (vec!["a"], vec![]),
            (vec!["a", "b", "c"], vec![]),
        ] {
            let err = BidirectedGraph::new(["a", "b", "c"], [EdgeSpec::from_sign_sets("e", "a", "b", plus, minus)])
                .unwrap_err();
            assert!(matches!(err, Error::IllegalSigns { .. }), "{err:?}");
        }
    }

    #[test]
    fn from_digraph_conventions() {
        let d3 = BidirectedGraph::from_digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        assert!(d3.is_digraphic());
        assert_eq!(d3.edge_count(), 3);
        let lone = BidirectedGraph::from_digraph(["a"], Vec::<(&str, &str)>::new()).unwrap();
        assert_eq!((lone.vertex_count(), lone.edge_count()), (1, 0));
        assert!(matches!(
            BidirectedGraph::from_digraph(["a"], [("a", "z")]),
            Err(Error::DanglingEndpoint { .. })
        ));
    }

    #[test]
    fn traversal_of_loops() {
        let g = BidirectedGraph::new(["a"], [EdgeSpec::new("l", "a", "a", Plus, Minus)]).unwrap();
        let (_, e) = g.edges().next().unwrap();
        let a = VertexId::new(0);
        assert_eq!(e.traverse(a, false), Some((Plus, Minus, a)));
        assert_eq!(e.traverse(a, true), Some((Minus, Plus, a)));
        assert_eq!(e.sign_at(a), None);
        assert_eq!(g.incident(a).len(), 1);
    }

    #[test]
    fn induced_subgraph_keeps_inner_edges() {
        let g = BidirectedGraph::from_digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap();
        let sub = g
            .induced_subgraph(&[VertexId::new(2), VertexId::new(0), VertexId::new(2)])
            .unwrap();
        assert_eq!(sub.vertices, vec![VertexId::new(0), VertexId::new(2)]);
        assert_eq!(sub.edges, vec![EdgeId::new(2)]);
        assert_eq!(sub.graph.vertex_name(VertexId::new(1)), "c");
        assert_eq!(sub.local_vertex(VertexId::new(2)), Some(VertexId::new(1)));
        assert_eq!(sub.local_vertex(VertexId::new(1)), None);
    }
}
