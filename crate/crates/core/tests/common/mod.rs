#![allow(dead_code)]

use bidikl_core::{BidirectedGraph, EdgeSpec, Sign};
use proptest::prelude::*;

pub fn sign() -> impl Strategy<Value = Sign> {
    prop_oneof![Just(Sign::Plus), Just(Sign::Minus)]
}

/// Bidirected multigraphs with loops and parallel edges.
pub fn bidirected(max_vertices: usize, max_edges: usize) -> impl Strategy<Value = BidirectedGraph> {
    (1..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 0..n, sign(), sign()), 0..=max_edges).prop_map(move |raw| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let edges = raw
                .into_iter()
                .enumerate()
                .map(|(i, (u, v, a, b))| EdgeSpec::new(format!("e{i}"), names[u].clone(), names[v].clone(), a, b));
            BidirectedGraph::new(names.clone(), edges).unwrap()
        })
    })
}

/// Digraphs without self-loops, encoded tail `-`, head `+`.
pub fn digraph(max_vertices: usize, max_arcs: usize) -> impl Strategy<Value = BidirectedGraph> {
    (2..=max_vertices).prop_flat_map(move |n| {
        prop::collection::vec((0..n, 1..n), 0..=max_arcs).prop_map(move |raw| {
            let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
            let arcs: Vec<(String, String)> = raw
                .into_iter()
                .map(|(u, d)| (names[u].clone(), names[(u + d) % n].clone()))
                .collect();
            BidirectedGraph::from_digraph(names.clone(), arcs).unwrap()
        })
    })
}
