//! The general Kotzig-Lovász decomposition of a bidirected graph.
//!
//! For a sign `α`, `u ~α v` holds when `u = v`, or when `u` and `v` are
//! circularly connected and no `(α, α)`-ditrail joins them. The relation is
//! an equivalence; its classes partition every circular component.

use crate::circular::{circular_components, CircularStructure};
use crate::error::{Error, Result};
use crate::graph::{BidirectedGraph, Sign, VertexId};
use crate::partition::{Partition, UnionFind};
use crate::reach::ditrail_exists;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct KlPartition {
    pub sign: Sign,
    pub partition: Partition,
}

impl KlPartition {
    pub fn classes(&self) -> &[Vec<VertexId>] {
        self.partition.classes()
    }

    pub fn class_of(&self, v: VertexId) -> usize {
        self.partition.class_of(v)
    }
}

pub fn same_class(g: &BidirectedGraph, u: VertexId, v: VertexId, sign: Sign) -> Result<bool> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v {
        return Ok(true);
    }
    let structure = circular_components(g);
    related(g, &structure, u, v, sign)
}

fn related(g: &BidirectedGraph, structure: &CircularStructure, u: VertexId, v: VertexId, sign: Sign) -> Result<bool> {
    Ok(u == v || (structure.components.same(u, v) && !ditrail_exists(g, u, v, sign, sign, None)?))
}

pub fn kl_decomposition(g: &BidirectedGraph, sign: Sign) -> KlPartition {
    let structure = circular_components(g);
    kl_with_structure(g, &structure, sign)
}

pub(crate) fn kl_with_structure(g: &BidirectedGraph, structure: &CircularStructure, sign: Sign) -> KlPartition {
    let partition = quotient(&structure.components, |u, v| {
        related(g, structure, u, v, sign).expect("vertices from graph")
    });
    KlPartition { sign, partition }
}

/// Quotient of a relation that only ever relates vertices inside one class
/// of `blocks`. Every pair inside a block is evaluated once; the merged
/// classes are then checked to be closed under the relation.
///
/// # Panics
///
/// If the relation is not transitive. The callers' relations are proven
/// equivalences, so this signals a bug.
pub(crate) fn quotient(blocks: &Partition, mut related: impl FnMut(VertexId, VertexId) -> bool) -> Partition {
    let n = blocks.vertex_count();
    let mut uf = UnionFind::new(n);
    let mut pairs = Vec::new();
    for block in blocks.classes() {
        for (i, &u) in block.iter().enumerate() {
            for &v in &block[i + 1..] {
                let r = related(u, v);
                pairs.push((u, v, r));
                if r {
                    uf.union(u.index(), v.index());
                }
            }
        }
    }
    let partition = uf.into_partition();
    for (u, v, r) in pairs {
        assert!(
            r || !partition.same(u, v),
            "relation is not transitive: vertices {} and {} are linked through other vertices but unrelated",
            u.index(),
            v.index()
        );
    }
    partition
}

/// The classes of `kl_decomposition(g, sign)` inside one circular component.
pub fn component_restriction(g: &BidirectedGraph, component: usize, sign: Sign) -> Result<Vec<Vec<VertexId>>> {
    let structure = circular_components(g);
    let Some(members) = structure.components.classes().get(component) else {
        return Err(Error::BadComponent(component));
    };
    let kl = kl_with_structure(g, &structure, sign);
    let target = structure.components.class_of(members[0]);
    Ok(kl
        .classes()
        .iter()
        .filter(|c| structure.components.class_of(c[0]) == target)
        .cloned()
        .collect())
}
