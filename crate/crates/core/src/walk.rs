//! Walks, trails, ditrails and dipaths.
//!
//! A [`Walk`] is stored as a start vertex followed by steps. A step whose
//! source and destination coincide traverses a loop; its `flip` flag picks
//! which stored sign of the loop is the departure sign. Loop traversal is
//! a convention of this crate: a loop occurrence consumes both of its
//! signs, one on the way out and one on the way back in.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, EdgeId, Sign, VertexId};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct Step {
    pub edge: EdgeId,
    pub to: VertexId,
    /// Loops only. Unflipped, a loop departs over its first stored sign.
    pub flip: bool,
}

impl Step {
    pub fn new(edge: EdgeId, to: VertexId) -> Self {
        Step { edge, to, flip: false }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Walk {
    start: VertexId,
    steps: Vec<Step>,
}

/// The `(start, end)` sign type of a ditrail.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DitrailType {
    pub start: Sign,
    pub end: Sign,
}

impl DitrailType {
    pub const fn new(start: Sign, end: Sign) -> Self {
        DitrailType { start, end }
    }

    pub fn reversed(self) -> Self {
        DitrailType::new(self.end, self.start)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct WalkClass {
    pub is_walk: bool,
    pub is_trail: bool,
    pub is_ditrail: bool,
    pub is_dipath: bool,
    /// Sorted. Empty unless `is_ditrail`.
    pub types: Vec<DitrailType>,
}

impl WalkClass {
    pub fn has_type(&self, start: Sign, end: Sign) -> bool {
        self.types.contains(&DitrailType::new(start, end))
    }
}

impl Walk {
    pub fn trivial(v: VertexId) -> Self {
        Walk {
            start: v,
            steps: Vec::new(),
        }
    }

    pub fn new(start: VertexId, steps: Vec<Step>) -> Self {
        Walk { start, steps }
    }

    /// Follows `edges` from `start`, inferring each far end. Loops are
    /// taken unflipped.
    pub fn along(g: &BidirectedGraph, start: VertexId, edges: &[EdgeId]) -> Result<Self> {
        g.check_vertex(start)?;
        let mut at = start;
        let mut steps = Vec::with_capacity(edges.len());
        for &id in edges {
            let (_, _, next) = g.edge(id)?.traverse(at, false).ok_or(Error::EndpointMismatch {
                left: at.index(),
                right: id.index(),
            })?;
            steps.push(Step::new(id, next));
            at = next;
        }
        Ok(Walk { start, steps })
    }

    pub fn start(&self) -> VertexId {
        self.start
    }

    pub fn end(&self) -> VertexId {
        self.steps.last().map_or(self.start, |s| s.to)
    }

    pub fn steps(&self) -> &[Step] {
        &self.steps
    }

    /// Number of edge terms.
    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn is_closed(&self) -> bool {
        self.start == self.end()
    }

    pub fn vertices(&self) -> impl Iterator<Item = VertexId> + '_ {
        std::iter::once(self.start).chain(self.steps.iter().map(|s| s.to))
    }

    pub fn edges(&self) -> impl Iterator<Item = EdgeId> + '_ {
        self.steps.iter().map(|s| s.edge)
    }

    pub fn push(&mut self, step: Step) {
        self.steps.push(step);
    }

    pub(crate) fn pop(&mut self) -> Option<Step> {
        self.steps.pop()
    }

    /// `W^{-1}`: the same vertex and edge terms in reverse order. Loop steps
    /// swap their orientation so each loop is crossed backwards.
    pub fn reversed(&self) -> Walk {
        let verts: Vec<VertexId> = self.vertices().collect();
        let mut steps = Vec::with_capacity(self.steps.len());
        for (i, step) in self.steps.iter().enumerate().rev() {
            let from = verts[i];
            steps.push(Step {
                edge: step.edge,
                to: from,
                flip: if from == step.to { !step.flip } else { step.flip },
            });
        }
        Walk {
            start: self.end(),
            steps,
        }
    }

    /// `W + U`, writing the shared vertex once.
    pub fn concat(&self, other: &Walk) -> Result<Walk> {
        if self.end() != other.start {
            return Err(Error::EndpointMismatch {
                left: self.end().index(),
                right: other.start.index(),
            });
        }
        let mut steps = self.steps.clone();
        steps.extend_from_slice(&other.steps);
        Ok(Walk {
            start: self.start,
            steps,
        })
    }

    /// Departure and arrival sign of every step, or `None` if some step
    /// does not connect its neighbouring vertex terms.
    pub fn step_signs(&self, g: &BidirectedGraph) -> Result<Option<Vec<(Sign, Sign)>>> {
        g.check_vertex(self.start)?;
        for step in &self.steps {
            g.check_vertex(step.to)?;
            g.edge(step.edge)?;
        }
        let mut at = self.start;
        let mut signs = Vec::with_capacity(self.steps.len());
        for step in &self.steps {
            match g.edge(step.edge)?.traverse(at, step.flip) {
                Some((out, back, far)) if far == step.to => signs.push((out, back)),
                _ => return Ok(None),
            }
            at = step.to;
        }
        Ok(Some(signs))
    }
}

/// Classifies `w` in `g` as a walk, trail, ditrail and dipath.
pub fn classify_walk(g: &BidirectedGraph, w: &Walk) -> Result<WalkClass> {
    let Some(signs) = w.step_signs(g)? else {
        return Ok(WalkClass::default());
    };
    let mut seen = HashSet::with_capacity(w.len());
    let is_trail = w.edges().all(|e| seen.insert(e));
    let is_ditrail = is_trail && signs.windows(2).all(|pair| pair[0].1 != pair[1].0);
    let is_dipath = is_ditrail && {
        let mut seen = HashSet::with_capacity(w.len() + 1);
        w.vertices().all(|v| seen.insert(v))
    };
    let types = match (is_ditrail, signs.first(), signs.last()) {
        (false, _, _) => Vec::new(),
        (true, Some(first), Some(last)) => vec![DitrailType::new(first.0, last.1)],
        (true, _, _) => vec![
            DitrailType::new(Sign::Plus, Sign::Minus),
            DitrailType::new(Sign::Minus, Sign::Plus),
        ],
    };
    Ok(WalkClass {
        is_walk: true,
        is_trail,
        is_ditrail,
        is_dipath,
        types,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::EdgeSpec;
    use Sign::{Minus, Plus};

    fn d3() -> BidirectedGraph {
        BidirectedGraph::from_digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    fn t_minus() -> BidirectedGraph {
        BidirectedGraph::new(
            ["x", "y", "z"],
            [
                EdgeSpec::new("xy", "x", "y", Minus, Minus),
                EdgeSpec::new("yz", "y", "z", Minus, Minus),
                EdgeSpec::new("zx", "z", "x", Minus, Minus),
            ],
        )
        .unwrap()
    }

    fn walk(g: &BidirectedGraph, start: &str, edges: &[&str]) -> Walk {
        let ids: Vec<EdgeId> = edges.iter().map(|e| g.edge_id(e).unwrap()).collect();
        Walk::along(g, g.vertex_id(start).unwrap(), &ids).unwrap()
    }

    #[test]
    fn forward_digraph_walk_is_minus_plus() {
        let g = d3();
        let c = classify_walk(&g, &walk(&g, "a", &["e0", "e1"])).unwrap();
        assert!(c.is_ditrail && c.is_dipath);
        assert_eq!(c.types, vec![DitrailType::new(Minus, Plus)]);
    }

    #[test]
    fn same_sign_internal_vertex_breaks_ditrail() {
        let g = t_minus();
        let c = classify_walk(&g, &walk(&g, "x", &["xy", "yz"])).unwrap();
        assert!(c.is_walk && c.is_trail);
        assert!(!c.is_ditrail && !c.is_dipath);
        assert!(c.types.is_empty());
    }

    #[test]
    fn single_vertex_has_both_mixed_types() {
        let g = d3();
        let c = classify_walk(&g, &Walk::trivial(VertexId::new(0))).unwrap();
        assert!(c.is_ditrail && c.is_dipath);
        assert_eq!(
            c.types,
            vec![DitrailType::new(Plus, Minus), DitrailType::new(Minus, Plus)]
        );
    }

    #[test]
    fn repeated_edge_is_not_a_trail() {
        let g = d3();
        let w = walk(&g, "a", &["e0", "e0"]);
        let c = classify_walk(&g, &w).unwrap();
        assert!(c.is_walk && !c.is_trail);
    }

    #[test]
    fn closed_ditrail_is_not_a_dipath() {
        let g = d3();
        let c = classify_walk(&g, &walk(&g, "a", &["e0", "e1", "e2"])).unwrap();
        assert!(c.is_ditrail && !c.is_dipath);
        assert_eq!(c.types, vec![DitrailType::new(Minus, Plus)]);
    }

    #[test]
    fn disconnected_steps_are_not_a_walk() {
        let g = d3();
        let w = Walk::new(VertexId::new(0), vec![Step::new(EdgeId::new(1), VertexId::new(2))]);
        assert_eq!(classify_walk(&g, &w).unwrap(), WalkClass::default());
    }

    #[test]
    fn unknown_ids() {
        let g = d3();
        let w = Walk::trivial(VertexId::new(9));
        assert_eq!(classify_walk(&g, &w), Err(Error::UnknownVertex(9)));
        let w = Walk::new(VertexId::new(0), vec![Step::new(EdgeId::new(7), VertexId::new(1))]);
        assert_eq!(classify_walk(&g, &w), Err(Error::UnknownEdge(7)));
    }

    #[test]
    fn reversal() {
        let g = d3();
        let w = walk(&g, "a", &["e0"]);
        let r = w.reversed();
        assert_eq!(r, walk(&g, "b", &["e0"]));
        assert_eq!(
            classify_walk(&g, &r).unwrap().types,
            vec![DitrailType::new(Plus, Minus)]
        );
        let t = Walk::trivial(VertexId::new(1));
        assert_eq!(t.reversed(), t);
    }

    #[test]
    fn loop_orientation_follows_reversal() {
        let g = BidirectedGraph::new(
            ["a", "b"],
            [
                EdgeSpec::new("ab", "a", "b", Minus, Plus),
                EdgeSpec::new("l", "b", "b", Minus, Plus),
            ],
        )
        .unwrap();
        // a -ab-> b (arrive +), loop out over - and back over +.
        let w = walk(&g, "a", &["ab", "l"]);
        let c = classify_walk(&g, &w).unwrap();
        assert!(c.is_ditrail);
        assert_eq!(c.types, vec![DitrailType::new(Minus, Plus)]);
        let r = w.reversed();
        assert!(r.steps()[0].flip);
        assert_eq!(
            classify_walk(&g, &r).unwrap().types,
            vec![DitrailType::new(Plus, Minus)]
        );
        assert_eq!(r.reversed(), w);
    }

    #[test]
    fn concatenation() {
        let g = d3();
        let ab = walk(&g, "a", &["e0"]);
        let bc = walk(&g, "b", &["e1"]);
        assert_eq!(ab.concat(&bc).unwrap(), walk(&g, "a", &["e0", "e1"]));
        assert_eq!(Walk::trivial(VertexId::new(0)).concat(&ab).unwrap(), ab);
        assert_eq!(
            ab.concat(&Walk::trivial(VertexId::new(2))),
            Err(Error::EndpointMismatch { left: 1, right: 2 })
        );
    }
}
