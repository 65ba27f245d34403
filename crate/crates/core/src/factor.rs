//! b-factors and their Kotzig-Lovász decompositions.
//!
//! Functions here read a [`BidirectedGraph`] as a plain multigraph and
//! ignore its signs. A loop adds 2 to the degree of its vertex.
//!
//! The relations `~-b` and `~+b` are computed two ways: directly from the
//! definition (b-flexible connectivity plus a factor query on `b ∓ χu ∓ χv`)
//! and by reduction, reading `~α` off the signed graph `G^M` of any b-factor
//! `M`. The two must agree.

use crate::circular::components_over;
use crate::edgeset::EdgeSet;
use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, EdgeId, Sign, VertexId};
use crate::kl::{kl_decomposition, quotient, KlPartition};
use crate::partition::Partition;

/// Degree demands `b: V(G) -> Z`. Values may go negative through
/// [`DegreeSpec::decrement`]; such a spec has no factor.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct DegreeSpec {
    values: Vec<i64>,
}

impl DegreeSpec {
    pub fn new(values: impl IntoIterator<Item = u32>) -> Self {
        DegreeSpec {
            values: values.into_iter().map(i64::from).collect(),
        }
    }

    pub fn uniform(vertices: usize, value: u32) -> Self {
        Self::new(std::iter::repeat_n(value, vertices))
    }

    pub fn get(&self, v: VertexId) -> i64 {
        self.values[v.index()]
    }

    pub fn values(&self) -> &[i64] {
        &self.values
    }

    pub fn len(&self) -> usize {
        self.values.len()
    }

    pub fn is_empty(&self) -> bool {
        self.values.is_empty()
    }

    /// `b + χv`.
    pub fn increment(&self, v: VertexId) -> Self {
        let mut next = self.clone();
        next.values[v.index()] += 1;
        next
    }

    /// `b - χv`.
    pub fn decrement(&self, v: VertexId) -> Self {
        let mut next = self.clone();
        next.values[v.index()] -= 1;
        next
    }

    pub fn is_feasible(&self) -> bool {
        self.values.iter().all(|&x| x >= 0)
    }

    /// `b ∓ χu ∓ χv`: subtraction for `-`, addition for `+`.
    pub fn adjusted(&self, u: VertexId, v: VertexId, sign: Sign) -> Self {
        match sign {
            Sign::Minus => self.decrement(u).decrement(v),
            Sign::Plus => self.increment(u).increment(v),
        }
    }

    fn check(&self, g: &BidirectedGraph) -> Result<()> {
        if self.values.len() == g.vertex_count() {
            Ok(())
        } else {
            Err(Error::SpecMismatch {
                expected: g.vertex_count(),
                got: self.values.len(),
            })
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EdgeStatus {
    /// In no b-factor.
    Forbidden,
    /// In every b-factor.
    Essential,
    /// In some b-factors but not all.
    Flexible,
}

impl EdgeStatus {
    pub fn is_allowed(self) -> bool {
        self != EdgeStatus::Forbidden
    }

    pub fn as_str(self) -> &'static str {
        match self {
            EdgeStatus::Forbidden => "forbidden",
            EdgeStatus::Essential => "essential",
            EdgeStatus::Flexible => "flexible",
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum KlMethod {
    Direct,
    Reduction,
}

/// Include-first backtracking over undecided edges in id order.
struct FactorSearch<'g> {
    g: &'g BidirectedGraph,
    residual: Vec<i64>,
    capacity: Vec<i64>,
    undecided: Vec<EdgeId>,
    chosen: EdgeSet,
}

impl<'g> FactorSearch<'g> {
    fn new(g: &'g BidirectedGraph, b: &DegreeSpec, forced: &EdgeSet, forbidden: &EdgeSet) -> Result<Option<Self>> {
        b.check(g)?;
        for set in [forced, forbidden] {
            if let Some(e) = set.max() {
                g.edge(e)?;
            }
        }
        if let Some(e) = forced.iter().find(|&e| forbidden.contains(e)) {
            return Err(Error::Conflict(e.index()));
        }
        let mut residual = b.values.clone();
        let mut capacity = vec![0i64; g.vertex_count()];
        let mut undecided = Vec::new();
        let mut chosen = EdgeSet::with_capacity(g.edge_count());
        for (id, e) in g.edges() {
            if forced.contains(id) {
                residual[e.u.index()] -= 1;
                residual[e.v.index()] -= 1;
                chosen.insert(id);
            } else if !forbidden.contains(id) {
                capacity[e.u.index()] += 1;
                capacity[e.v.index()] += 1;
                undecided.push(id);
            }
        }
        let sum: i64 = residual.iter().sum();
        let viable = sum % 2 == 0 && residual.iter().zip(&capacity).all(|(&r, &c)| (0..=c).contains(&r));
        Ok(viable.then_some(FactorSearch {
            g,
            residual,
            capacity,
            undecided,
            chosen,
        }))
    }

    fn within(&self, x: VertexId) -> bool {
        let (r, c) = (self.residual[x.index()], self.capacity[x.index()]);
        0 <= r && r <= c
    }

    /// Calls `visit` on every factor in search order until it returns false.
    fn run(&mut self, depth: usize, visit: &mut impl FnMut(&EdgeSet) -> bool) -> bool {
        if depth == self.undecided.len() {
            debug_assert!(self.residual.iter().all(|&r| r == 0));
            return visit(&self.chosen);
        }
        let id = self.undecided[depth];
        let e = self.g.edge(id).expect("edge id from graph");
        let (u, v) = (e.u, e.v);
        // a loop touches u twice, so these run twice for it
        self.capacity[u.index()] -= 1;
        self.capacity[v.index()] -= 1;

        self.residual[u.index()] -= 1;
        self.residual[v.index()] -= 1;
        let mut go_on = true;
        if self.within(u) && self.within(v) {
            self.chosen.insert(id);
            go_on = self.run(depth + 1, visit);
            self.chosen.remove(id);
        }
        self.residual[u.index()] += 1;
        self.residual[v.index()] += 1;

        if go_on && self.within(u) && self.within(v) {
            go_on = self.run(depth + 1, visit);
        }
        self.capacity[u.index()] += 1;
        self.capacity[v.index()] += 1;
        go_on
    }
}

/// A b-factor containing `forced` and missing `forbidden`, if one exists.
/// Among all such factors this returns the first met by an include-first
/// search over edges in id order.
pub fn find_b_factor(
    g: &BidirectedGraph,
    b: &DegreeSpec,
    forced: &EdgeSet,
    forbidden: &EdgeSet,
) -> Result<Option<EdgeSet>> {
    let mut found = None;
    if let Some(mut search) = FactorSearch::new(g, b, forced, forbidden)? {
        search.run(0, &mut |m| {
            found = Some(m.clone());
            false
        });
    }
    Ok(found)
}

/// Up to `limit` distinct b-factors, in search order.
pub fn enumerate_b_factors(g: &BidirectedGraph, b: &DegreeSpec, limit: usize) -> Result<Vec<EdgeSet>> {
    let none = EdgeSet::default();
    let mut out = Vec::new();
    if limit == 0 {
        b.check(g)?;
        return Ok(out);
    }
    if let Some(mut search) = FactorSearch::new(g, b, &none, &none)? {
        search.run(0, &mut |m| {
            out.push(m.clone());
            out.len() < limit
        });
    }
    Ok(out)
}

pub fn is_b_factor(g: &BidirectedGraph, b: &DegreeSpec, m: &EdgeSet) -> Result<bool> {
    b.check(g)?;
    let mut degree = vec![0i64; g.vertex_count()];
    for e in m.iter() {
        let edge = g.edge(e)?;
        degree[edge.u.index()] += 1;
        degree[edge.v.index()] += 1;
    }
    Ok(degree == b.values)
}

fn any_factor(g: &BidirectedGraph, b: &DegreeSpec) -> Result<EdgeSet> {
    let none = EdgeSet::default();
    find_b_factor(g, b, &none, &none)?.ok_or(Error::NotFactorizable)
}

/// Status of every edge, indexed by edge id.
pub fn classify_edges(g: &BidirectedGraph, b: &DegreeSpec) -> Result<Vec<EdgeStatus>> {
    let m = any_factor(g, b)?;
    let none = EdgeSet::default();
    g.edge_ids()
        .map(|e| {
            let only_e = EdgeSet::from_edges(g.edge_count(), [e]);
            // membership in m already settles one of the two questions
            Ok(if m.contains(e) {
                match find_b_factor(g, b, &none, &only_e)? {
                    Some(_) => EdgeStatus::Flexible,
                    None => EdgeStatus::Essential,
                }
            } else {
                match find_b_factor(g, b, &only_e, &none)? {
                    Some(_) => EdgeStatus::Flexible,
                    None => EdgeStatus::Forbidden,
                }
            })
        })
        .collect()
}

fn edges_where(g: &BidirectedGraph, status: &[EdgeStatus], keep: impl Fn(EdgeStatus) -> bool) -> EdgeSet {
    EdgeSet::from_edges(g.edge_count(), g.edge_ids().filter(|e| keep(status[e.index()])))
}

fn flexible_partition(g: &BidirectedGraph, status: &[EdgeStatus]) -> Partition {
    let parts = components_over(g, &edges_where(g, status, |s| s == EdgeStatus::Flexible));
    debug_assert!(g
        .edges()
        .all(|(id, e)| { parts.same(e.u, e.v) || status[id.index()] != EdgeStatus::Flexible }));
    parts
}

pub fn b_flexible_components(g: &BidirectedGraph, b: &DegreeSpec) -> Result<Partition> {
    let status = classify_edges(g, b)?;
    Ok(flexible_partition(g, &status))
}

pub fn b_factor_components(g: &BidirectedGraph, b: &DegreeSpec) -> Result<Partition> {
    let status = classify_edges(g, b)?;
    Ok(components_over(g, &edges_where(g, &status, EdgeStatus::is_allowed)))
}

/// `G^M`: edges of `m` are signed `-` at both ends, all others `+`.
pub fn build_gm(g: &BidirectedGraph, m: &EdgeSet) -> Result<BidirectedGraph> {
    if let Some(e) = m.max() {
        g.edge(e)?;
    }
    Ok(g.resigned(|id, _| {
        if m.contains(id) {
            (Sign::Minus, Sign::Minus)
        } else {
            (Sign::Plus, Sign::Plus)
        }
    }))
}

fn lacks_adjusted_factor(g: &BidirectedGraph, b: &DegreeSpec, u: VertexId, v: VertexId, sign: Sign) -> Result<bool> {
    let adjusted = b.adjusted(u, v, sign);
    if !adjusted.is_feasible() {
        return Ok(true);
    }
    Ok(any_factor(g, &adjusted).is_err())
}

/// `u ~-b v` for `sign = -`, `u ~+b v` for `sign = +`.
pub fn b_same_class(g: &BidirectedGraph, b: &DegreeSpec, u: VertexId, v: VertexId, sign: Sign) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let status = classify_edges(g, b)?;
    if u == v {
        return Ok(true);
    }
    Ok(flexible_partition(g, &status).same(u, v) && lacks_adjusted_factor(g, b, u, v, sign)?)
}

pub fn b_kl_decomposition(g: &BidirectedGraph, b: &DegreeSpec, sign: Sign, method: KlMethod) -> Result<KlPartition> {
    match method {
        KlMethod::Direct => {
            let flexible = b_flexible_components(g, b)?;
            let partition = quotient(&flexible, |u, v| {
                lacks_adjusted_factor(g, b, u, v, sign).expect("spec checked")
            });
            Ok(KlPartition { sign, partition })
        }
        KlMethod::Reduction => {
            let m = any_factor(g, b)?;
            b_kl_by_reduction(g, b, sign, &m)
        }
    }
}

/// The reduction route with a caller-chosen b-factor `m`.
pub fn b_kl_by_reduction(g: &BidirectedGraph, b: &DegreeSpec, sign: Sign, m: &EdgeSet) -> Result<KlPartition> {
    if !is_b_factor(g, b, m)? {
        return Err(Error::NotAFactor);
    }
    Ok(kl_decomposition(&build_gm(g, m)?, sign))
}

/// `b|H`, aligned with `g.induced_subgraph(h)`: each vertex of `H` loses
/// one unit per essential edge leaving `H`.
pub fn restrict_b(g: &BidirectedGraph, b: &DegreeSpec, h: &[VertexId]) -> Result<DegreeSpec> {
    let status = classify_edges(g, b)?;
    let mut keep: Vec<VertexId> = h.to_vec();
    keep.sort_unstable();
    keep.dedup();
    let mut inside = vec![false; g.vertex_count()];
    for &v in &keep {
        g.check_vertex(v)?;
        inside[v.index()] = true;
    }
    let mut values = Vec::with_capacity(keep.len());
    for &v in &keep {
        let leaving = g
            .incident(v)
            .iter()
            .filter(|&&e| status[e.index()] == EdgeStatus::Essential)
            .filter(|&&e| {
                let edge = g.edge(e).expect("incident edge");
                !inside[edge.u.index()] || !inside[edge.v.index()]
            })
            .count() as i64;
        let value = b.get(v) - leaving;
        if value < 0 {
            return Err(Error::NegativeRestriction(v.index()));
        }
        values.push(value);
    }
    Ok(DegreeSpec { values })
}
