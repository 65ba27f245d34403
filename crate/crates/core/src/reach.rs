//! Ditrail reachability.
//!
//! [`ditrail_exists`] runs an exact depth-first search over states
//! `(vertex, required next sign, used edges)`. Whether a state can still
//! reach the target depends on nothing else, so failed states are memoised.
//! Each state is also pruned by diwalk reachability over the unused edges:
//! the rest of any ditrail is a diwalk there.
//!
//! [`enumerate_ditrails`] is the plain exhaustive search with neither memo
//! nor pruning, kept as ground truth.

use std::collections::{HashSet, VecDeque};

use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, Sign, VertexId};
use crate::walk::{Step, Walk};

/// The four answers to "is there an `(α, β)`-ditrail from `source` to
/// `target`".
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ReachProfile {
    pub source: VertexId,
    pub target: VertexId,
    exists: [[bool; 2]; 2],
}

const fn slot(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

impl ReachProfile {
    pub fn get(&self, start: Sign, end: Sign) -> bool {
        self.exists[slot(start)][slot(end)]
    }

    /// `(start, end, exists)` in the order `++`, `+-`, `-+`, `--`.
    pub fn entries(&self) -> impl Iterator<Item = (Sign, Sign, bool)> + '_ {
        Sign::BOTH
            .into_iter()
            .flat_map(move |a| Sign::BOTH.into_iter().map(move |b| (a, b, self.get(a, b))))
    }
}

/// A search state: where the trail currently ends, the sign its next edge
/// must leave with, and the edges it has consumed.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct SearchState {
    pub at: VertexId,
    pub need: Sign,
    pub used: EdgeSet,
}

/// Memoised search towards one fixed `(target, end sign)` in one fixed
/// `(graph, avoid)` context.
struct TrailSearch<'g> {
    g: &'g BidirectedGraph,
    target: VertexId,
    end: Sign,
    initial: EdgeSet,
    failed: HashSet<SearchState>,
}

impl<'g> TrailSearch<'g> {
    fn new(g: &'g BidirectedGraph, target: VertexId, end: Sign, avoid: Option<&EdgeSet>) -> Self {
        let mut initial = EdgeSet::with_capacity(g.edge_count());
        if let Some(avoid) = avoid {
            for e in avoid.iter() {
                initial.insert(e);
            }
        }
        TrailSearch {
            g,
            target,
            end,
            initial,
            failed: HashSet::new(),
        }
    }

    /// Searches for a nontrivial ditrail from `source` leaving over `start`.
    fn find(&mut self, source: VertexId, start: Sign) -> Option<Walk> {
        let mut state = SearchState {
            at: source,
            need: start,
            used: self.initial.clone(),
        };
        let mut path = Walk::trivial(source);
        self.extend(&mut state, &mut path).then_some(path)
    }

    fn extend(&mut self, state: &mut SearchState, path: &mut Walk) -> bool {
        if self.failed.contains(state) {
            return false;
        }
        if !diwalk_search(self.g, state.at, state.need, self.target, self.end, Some(&state.used)) {
            self.failed.insert(state.clone());
            return false;
        }
        let g = self.g;
        let (at, need) = (state.at, state.need);
        for &e in g.incident(at) {
            if state.used.contains(e) {
                continue;
            }
            let edge = &g.edge(e).expect("incident edge");
            for &flip in edge.orientations() {
                let Some((out, back, far)) = edge.traverse(at, flip) else {
                    continue;
                };
                if out != need {
                    continue;
                }
                state.used.insert(e);
                path.push(Step { edge: e, to: far, flip });
                if far == self.target && back == self.end {
                    return true;
                }
                state.at = far;
                state.need = -back;
                if self.extend(state, path) {
                    return true;
                }
                state.at = at;
                state.need = need;
                path.pop();
                state.used.remove(e);
            }
        }
        self.failed.insert(state.clone());
        false
    }
}

fn check_avoid(g: &BidirectedGraph, avoid: Option<&EdgeSet>) -> Result<()> {
    match avoid.and_then(EdgeSet::max) {
        Some(e) if e.index() >= g.edge_count() => Err(Error::UnknownEdge(e.index())),
        _ => Ok(()),
    }
}

/// Finds an `(start, end)`-ditrail from `u` to `v` avoiding `avoid`, if any.
/// The witness is the first one met when edges are tried in id order.
pub fn find_ditrail(
    g: &BidirectedGraph,
    u: VertexId,
    v: VertexId,
    start: Sign,
    end: Sign,
    avoid: Option<&EdgeSet>,
) -> Result<Option<Walk>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    check_avoid(g, avoid)?;
    if u == v && start != end {
        return Ok(Some(Walk::trivial(u)));
    }
    Ok(TrailSearch::new(g, v, end, avoid).find(u, start))
}

pub fn ditrail_exists(
    g: &BidirectedGraph,
    u: VertexId,
    v: VertexId,
    start: Sign,
    end: Sign,
    avoid: Option<&EdgeSet>,
) -> Result<bool> {
    find_ditrail(g, u, v, start, end, avoid).map(|w| w.is_some())
}

pub fn reach_profile(g: &BidirectedGraph, u: VertexId, v: VertexId) -> Result<ReachProfile> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut exists = [[false; 2]; 2];
    for end in Sign::BOTH {
        // one memo per end sign, shared by both start signs
        let mut search = TrailSearch::new(g, v, end, None);
        for start in Sign::BOTH {
            exists[slot(start)][slot(end)] = (u == v && start != end) || search.find(u, start).is_some();
        }
    }
    Ok(ReachProfile {
        source: u,
        target: v,
        exists,
    })
}

/// Every `(start, end)`-ditrail from `u` to `v`, up to `limit` of them, by
/// brute force. The single-vertex ditrail comes first when it qualifies.
/// Meant for small graphs.
pub fn enumerate_ditrails(
    g: &BidirectedGraph,
    u: VertexId,
    v: VertexId,
    start: Sign,
    end: Sign,
    limit: usize,
) -> Result<Vec<Walk>> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut out = Vec::new();
    if limit == 0 {
        return Ok(out);
    }
    if u == v && start != end {
        out.push(Walk::trivial(u));
    }
    let mut used = vec![false; g.edge_count()];
    let mut path = Walk::trivial(u);
    enumerate_from(g, u, start, v, end, limit, &mut used, &mut path, &mut out);
    Ok(out)
}

#[allow(clippy::too_many_arguments)]
fn enumerate_from(
    g: &BidirectedGraph,
    at: VertexId,
    need: Sign,
    target: VertexId,
    end: Sign,
    limit: usize,
    used: &mut [bool],
    path: &mut Walk,
    out: &mut Vec<Walk>,
) {
    for &e in g.incident(at) {
        if out.len() >= limit {
            return;
        }
        if used[e.index()] {
            continue;
        }
        let edge = g.edge(e).expect("incident edge");
        for &flip in edge.orientations() {
            let Some((out_sign, back, far)) = edge.traverse(at, flip) else {
                continue;
            };
            if out_sign != need {
                continue;
            }
            used[e.index()] = true;
            path.push(Step { edge: e, to: far, flip });
            if far == target && back == end && out.len() < limit {
                out.push(path.clone());
            }
            enumerate_from(g, far, -back, target, end, limit, used, path, out);
            path.pop();
            used[e.index()] = false;
        }
    }
}

/// Alternating-walk reachability, edges allowed to repeat. Every ditrail is
/// such a walk, so a `false` here rules a ditrail out.
pub fn diwalk_exists(g: &BidirectedGraph, u: VertexId, v: VertexId, start: Sign, end: Sign) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    Ok((u == v && start != end) || diwalk_search(g, u, start, v, end, None))
}

/// BFS over `(vertex, required sign)` pairs, skipping `blocked` edges.
/// Only nontrivial walks count.
fn diwalk_search(
    g: &BidirectedGraph,
    from: VertexId,
    need: Sign,
    target: VertexId,
    end: Sign,
    blocked: Option<&EdgeSet>,
) -> bool {
    let mut seen = vec![[false; 2]; g.vertex_count()];
    let mut queue = VecDeque::new();
    seen[from.index()][slot(need)] = true;
    queue.push_back((from, need));
    while let Some((at, need)) = queue.pop_front() {
        for &e in g.incident(at) {
            if blocked.is_some_and(|b| b.contains(e)) {
                continue;
            }
            let edge = g.edge(e).expect("incident edge");
            for &flip in edge.orientations() {
                let Some((out, back, far)) = edge.traverse(at, flip) else {
                    continue;
                };
                if out != need {
                    continue;
                }
                if far == target && back == end {
                    return true;
                }
                let next = -back;
                let mark = &mut seen[far.index()][slot(next)];
                if !*mark {
                    *mark = true;
                    queue.push_back((far, next));
                }
            }
        }
    }
    false
}
