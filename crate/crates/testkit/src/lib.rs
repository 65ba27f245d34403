//! Seeded random corpora, named fixtures and brute-force oracles.
//!
//! The oracles only read graphs through their data accessors. None of them
//! calls into the search code they are used to check.

use bidikl_core::{BidirectedGraph, DegreeSpec, EdgeSet, EdgeSpec, Sign, VertexId};
use petgraph::graph::DiGraph;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub mod fixtures {
    use super::*;
    use Sign::{Minus, Plus};

    /// Directed triangle a -> b -> c -> a.
    pub fn d3() -> BidirectedGraph {
        BidirectedGraph::from_digraph(["a", "b", "c"], [("a", "b"), ("b", "c"), ("c", "a")]).unwrap()
    }

    /// Single arc a -> b.
    pub fn fx4() -> BidirectedGraph {
        BidirectedGraph::from_digraph(["a", "b"], [("a", "b")]).unwrap()
    }

    /// Triangle with `-` at every edge end.
    pub fn t_minus() -> BidirectedGraph {
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

    /// Square 1-2-3-4 with e12, e34 all-minus and e23, e41 all-plus.
    pub fn fx2() -> BidirectedGraph {
        BidirectedGraph::new(
            ["1", "2", "3", "4"],
            [
                EdgeSpec::new("e12", "1", "2", Minus, Minus),
                EdgeSpec::new("e23", "2", "3", Plus, Plus),
                EdgeSpec::new("e34", "3", "4", Minus, Minus),
                EdgeSpec::new("e41", "4", "1", Plus, Plus),
            ],
        )
        .unwrap()
    }

    /// Plain graph (signs all `+`, meant to be ignored).
    pub fn plain(vertices: &[&str], edges: &[(&str, &str, &str)]) -> BidirectedGraph {
        BidirectedGraph::new(
            vertices.iter().copied(),
            edges.iter().map(|&(id, u, v)| EdgeSpec::new(id, u, v, Plus, Plus)),
        )
        .unwrap()
    }

    /// Plain square 1-2-3-4 with edges e12 < e23 < e34 < e41.
    pub fn square() -> BidirectedGraph {
        plain(
            &["1", "2", "3", "4"],
            &[
                ("e12", "1", "2"),
                ("e23", "2", "3"),
                ("e34", "3", "4"),
                ("e41", "4", "1"),
            ],
        )
    }
}

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_sign(rng: &mut impl Rng) -> Sign {
    if rng.random_bool(0.5) {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

/// A random bidirected multigraph with 1..=`max_vertices` vertices and
/// 0..=`max_edges` edges. Roughly one edge in eight is a loop; parallel
/// edges arise naturally.
pub fn random_bidirected(rng: &mut impl Rng, max_vertices: usize, max_edges: usize) -> BidirectedGraph {
    let n = rng.random_range(1..=max_vertices);
    let m = rng.random_range(0..=max_edges);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let edges: Vec<EdgeSpec> = (0..m)
        .map(|i| {
            let u = rng.random_range(0..n);
            let v = if n == 1 || rng.random_bool(0.125) {
                u
            } else {
                rng.random_range(0..n)
            };
            EdgeSpec::new(
                format!("e{i}"),
                names[u].clone(),
                names[v].clone(),
                random_sign(rng),
                random_sign(rng),
            )
        })
        .collect();
    BidirectedGraph::new(names, edges).unwrap()
}

pub fn bidirected_corpus(seed: u64, count: usize, max_vertices: usize, max_edges: usize) -> Vec<BidirectedGraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_bidirected(&mut rng, max_vertices, max_edges))
        .collect()
}

/// A random digraph (no self-loops, parallel arcs allowed).
pub fn random_digraph(rng: &mut impl Rng, max_vertices: usize, max_arcs: usize) -> BidirectedGraph {
    let n = rng.random_range(1..=max_vertices);
    let names: Vec<String> = (0..n).map(|i| format!("v{i}")).collect();
    let m = if n == 1 { 0 } else { rng.random_range(0..=max_arcs) };
    let arcs: Vec<(String, String)> = (0..m)
        .map(|_| {
            let u = rng.random_range(0..n);
            let mut v = rng.random_range(0..n - 1);
            if v >= u {
                v += 1;
            }
            (names[u].clone(), names[v].clone())
        })
        .collect();
    BidirectedGraph::from_digraph(names, arcs).unwrap()
}

pub fn digraph_corpus(seed: u64, count: usize, max_vertices: usize, max_arcs: usize) -> Vec<BidirectedGraph> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_digraph(&mut rng, max_vertices, max_arcs))
        .collect()
}

/// A random plain multigraph together with a demand vector `b` that is the
/// degree vector of a random edge subset, so the instance is always
/// b-factorizable. Values of `b` stay within `max_b`.
pub fn random_factor_instance(
    rng: &mut impl Rng,
    max_vertices: usize,
    max_edges: usize,
    max_b: u32,
) -> (BidirectedGraph, DegreeSpec) {
    loop {
        let g = random_bidirected(rng, max_vertices, max_edges);
        let mut degree = vec![0u32; g.vertex_count()];
        for (_, e) in g.edges() {
            if rng.random_bool(0.5) {
                degree[e.u.index()] += 1;
                degree[e.v.index()] += 1;
            }
        }
        if degree.iter().all(|&d| d <= max_b) {
            return (g, DegreeSpec::new(degree));
        }
    }
}

pub fn factor_corpus(
    seed: u64,
    count: usize,
    max_vertices: usize,
    max_edges: usize,
    max_b: u32,
) -> Vec<(BidirectedGraph, DegreeSpec)> {
    let mut rng = rng(seed);
    (0..count)
        .map(|_| random_factor_instance(&mut rng, max_vertices, max_edges, max_b))
        .collect()
}

const fn slot(s: Sign) -> usize {
    match s {
        Sign::Plus => 0,
        Sign::Minus => 1,
    }
}

/// Every way to cross edge `e` leaving `from`: `(departure sign, arrival
/// sign, far end)`. Loops with distinct signs can be crossed either way.
fn crossings(g: &BidirectedGraph, e: usize, from: usize) -> Vec<(Sign, Sign, usize)> {
    let edge = g.edge(bidikl_core::EdgeId::new(e)).unwrap();
    let (u, v) = (edge.u.index(), edge.v.index());
    if u == v {
        if u != from {
            return vec![];
        }
        let mut out = vec![(edge.sign_u, edge.sign_v, u)];
        if edge.sign_u != edge.sign_v {
            out.push((edge.sign_v, edge.sign_u, u));
        }
        out
    } else if from == u {
        vec![(edge.sign_u, edge.sign_v, v)]
    } else if from == v {
        vec![(edge.sign_v, edge.sign_u, u)]
    } else {
        vec![]
    }
}

/// Visits every nontrivial ditrail from every start vertex, reporting
/// `(start vertex, start sign, end vertex, end sign, edges, vertices)`.
type Visitor<'a> = dyn FnMut(usize, Sign, usize, Sign, &[usize], &[usize]) + 'a;

fn for_each_ditrail(g: &BidirectedGraph, mut visit: impl FnMut(usize, Sign, usize, Sign, &[usize], &[usize])) {
    #[allow(clippy::too_many_arguments)]
    fn go(
        g: &BidirectedGraph,
        s: usize,
        first: Sign,
        at: usize,
        need: Option<Sign>,
        used: &mut Vec<bool>,
        edges: &mut Vec<usize>,
        verts: &mut Vec<usize>,
        visit: &mut Visitor<'_>,
    ) {
        for e in 0..g.edge_count() {
            if used[e] {
                continue;
            }
            for (out, back, far) in crossings(g, e, at) {
                if need.is_some_and(|n| n != out) || need.is_none() && out != first {
                    continue;
                }
                used[e] = true;
                edges.push(e);
                verts.push(far);
                visit(s, first, far, back, edges, verts);
                go(g, s, first, far, Some(-back), used, edges, verts, visit);
                verts.pop();
                edges.pop();
                used[e] = false;
            }
        }
    }
    let mut used = vec![false; g.edge_count()];
    for s in 0..g.vertex_count() {
        for first in Sign::BOTH {
            let mut edges = Vec::new();
            let mut verts = vec![s];
            go(g, s, first, s, None, &mut used, &mut edges, &mut verts, &mut visit);
        }
    }
}

/// `table[u][v][α][β]`: is there an `(α, β)`-ditrail from `u` to `v`.
/// Includes the single-vertex convention.
pub type ReachTable = Vec<Vec<[[bool; 2]; 2]>>;

pub fn ditrail_table(g: &BidirectedGraph) -> ReachTable {
    let n = g.vertex_count();
    let mut table = vec![vec![[[false; 2]; 2]; n]; n];
    for (u, row) in table.iter_mut().enumerate() {
        row[u][0][1] = true;
        row[u][1][0] = true;
    }
    for_each_ditrail(g, |s, a, t, b, _, _| table[s][t][slot(a)][slot(b)] = true);
    table
}

pub fn table_get(table: &ReachTable, u: VertexId, v: VertexId, a: Sign, b: Sign) -> bool {
    table[u.index()][v.index()][slot(a)][slot(b)]
}

/// `(α, β)`-dipath reachability: ditrails that repeat no vertex.
pub fn dipath_table(g: &BidirectedGraph) -> ReachTable {
    let n = g.vertex_count();
    let mut table = vec![vec![[[false; 2]; 2]; n]; n];
    for (u, row) in table.iter_mut().enumerate() {
        row[u][0][1] = true;
        row[u][1][0] = true;
    }
    for_each_ditrail(g, |s, a, t, b, _, verts| {
        let mut seen = vec![false; n];
        if verts.iter().all(|&x| !std::mem::replace(&mut seen[x], true)) {
            table[s][t][slot(a)][slot(b)] = true;
        }
    });
    table
}

/// Edges lying on some closed `(α, -α)`-ditrail, by exhaustive search.
pub fn circular_edges_brute(g: &BidirectedGraph) -> Vec<bool> {
    let mut circular = vec![false; g.edge_count()];
    for_each_ditrail(g, |s, a, t, b, edges, _| {
        if s == t && a != b {
            for &e in edges {
                circular[e] = true;
            }
        }
    });
    circular
}

/// Components of the circular-edge subgraph as sorted vertex-index lists,
/// ordered by smallest member.
pub fn circular_components_brute(g: &BidirectedGraph) -> Vec<Vec<usize>> {
    let circular = circular_edges_brute(g);
    let edges = g
        .edges()
        .filter(|(id, _)| circular[id.index()])
        .map(|(_, e)| (e.u.index(), e.v.index()));
    connected_classes(g.vertex_count(), edges)
}

pub fn connected_classes(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Vec<Vec<usize>> {
    let mut adj = vec![Vec::new(); n];
    for (u, v) in edges {
        adj[u].push(v);
        adj[v].push(u);
    }
    let mut label = vec![usize::MAX; n];
    let mut classes = Vec::new();
    for s in 0..n {
        if label[s] != usize::MAX {
            continue;
        }
        let mut class = vec![s];
        label[s] = classes.len();
        let mut i = 0;
        while i < class.len() {
            for &y in &adj[class[i]] {
                if label[y] == usize::MAX {
                    label[y] = classes.len();
                    class.push(y);
                }
            }
            i += 1;
        }
        class.sort_unstable();
        classes.push(class);
    }
    classes
}

/// Strong components of a digraphic graph, read with the `-` end as tail,
/// via petgraph's Tarjan implementation. Sorted like
/// [`connected_classes`].
pub fn strong_components(g: &BidirectedGraph) -> Vec<Vec<usize>> {
    let mut d = DiGraph::<(), ()>::new();
    let nodes: Vec<_> = (0..g.vertex_count()).map(|_| d.add_node(())).collect();
    for (_, e) in g.edges() {
        assert!(e.is_digraphic(), "strong components need a digraphic graph");
        let (tail, head) = if e.sign_u == Sign::Minus {
            (e.u, e.v)
        } else {
            (e.v, e.u)
        };
        d.add_edge(nodes[tail.index()], nodes[head.index()], ());
    }
    let mut comps: Vec<Vec<usize>> = petgraph::algo::tarjan_scc(&d)
        .into_iter()
        .map(|c| {
            let mut c: Vec<usize> = c.into_iter().map(|x| x.index()).collect();
            c.sort_unstable();
            c
        })
        .collect();
    comps.sort_unstable();
    comps
}

/// Classes of an arbitrary symmetric relation on `0..n` known to be an
/// equivalence, grouped by first related representative.
pub fn classes_of(n: usize, related: impl Fn(usize, usize) -> bool) -> Vec<Vec<usize>> {
    let mut assigned = vec![false; n];
    let mut out = Vec::new();
    for s in 0..n {
        if assigned[s] {
            continue;
        }
        let class: Vec<usize> = (s..n).filter(|&t| !assigned[t] && related(s, t)).collect();
        for &t in &class {
            assigned[t] = true;
        }
        out.push(class);
    }
    out
}

/// Every b-factor, by checking all `2^m` edge subsets. Negative demands
/// admit nothing.
pub fn factors_brute(g: &BidirectedGraph, b: &[i64]) -> Vec<Vec<usize>> {
    let m = g.edge_count();
    assert!(m <= 20, "brute force over 2^{m} subsets");
    let ends: Vec<(usize, usize)> = g.edges().map(|(_, e)| (e.u.index(), e.v.index())).collect();
    let mut out = Vec::new();
    if b.iter().any(|&x| x < 0) {
        return out;
    }
    for mask in 0u32..(1 << m) {
        let mut deg = vec![0i64; g.vertex_count()];
        for (i, &(u, v)) in ends.iter().enumerate() {
            if mask >> i & 1 == 1 {
                deg[u] += 1;
                deg[v] += 1;
            }
        }
        if deg == b {
            out.push((0..m).filter(|&i| mask >> i & 1 == 1).collect());
        }
    }
    out
}

pub fn has_factor_brute(g: &BidirectedGraph, b: &[i64]) -> bool {
    !factors_brute(g, b).is_empty()
}

pub fn to_edge_set(g: &BidirectedGraph, edges: &[usize]) -> EdgeSet {
    EdgeSet::from_edges(g.edge_count(), edges.iter().map(|&e| bidikl_core::EdgeId::new(e)))
}

/// `u ~±b v` straight from the definition: flexible edges found by
/// enumerating all factors, then a brute-force factor check on
/// `b ∓ χu ∓ χv`.
pub fn b_relation_brute(g: &BidirectedGraph, b: &[i64], sign: Sign) -> Vec<Vec<usize>> {
    let all = factors_brute(g, b);
    assert!(!all.is_empty(), "instance must be b-factorizable");
    let m = g.edge_count();
    let mut inside = vec![0usize; m];
    for f in &all {
        for &e in f {
            inside[e] += 1;
        }
    }
    let flexible = g
        .edges()
        .filter(|(id, _)| inside[id.index()] > 0 && inside[id.index()] < all.len())
        .map(|(_, e)| (e.u.index(), e.v.index()));
    let comps = connected_classes(g.vertex_count(), flexible);
    let mut comp_of = vec![0; g.vertex_count()];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    let delta = match sign {
        Sign::Minus => -1,
        Sign::Plus => 1,
    };
    classes_of(g.vertex_count(), |u, v| {
        if u == v {
            return true;
        }
        if comp_of[u] != comp_of[v] {
            return false;
        }
        let mut adjusted = b.to_vec();
        adjusted[u] += delta;
        adjusted[v] += delta;
        !has_factor_brute(g, &adjusted)
    })
}

/// The classical relation for perfect matchings: `u ~ v` iff `u = v`, or
/// `u` and `v` lie in one factor-connected component and `G - u - v` has no
/// perfect matching.
pub fn classical_kl_brute(g: &BidirectedGraph) -> Vec<Vec<usize>> {
    let n = g.vertex_count();
    let ones = vec![1i64; n];
    let all = factors_brute(g, &ones);
    assert!(!all.is_empty(), "graph must have a perfect matching");
    let mut allowed = vec![false; g.edge_count()];
    for f in &all {
        for &e in f {
            allowed[e] = true;
        }
    }
    let comps = connected_classes(
        n,
        g.edges()
            .filter(|(id, _)| allowed[id.index()])
            .map(|(_, e)| (e.u.index(), e.v.index())),
    );
    let mut comp_of = vec![0; n];
    for (i, c) in comps.iter().enumerate() {
        for &v in c {
            comp_of[v] = i;
        }
    }
    classes_of(n, |u, v| {
        if u == v {
            return true;
        }
        if comp_of[u] != comp_of[v] {
            return false;
        }
        // perfect matching of G - u - v
        let keep: Vec<VertexId> = (0..n).filter(|&x| x != u && x != v).map(VertexId::new).collect();
        let sub = g.induced_subgraph(&keep).unwrap();
        !has_factor_brute(&sub.graph, &vec![1; keep.len()])
    })
}

/// Vertex-index classes of a partition, for comparisons with oracles.
pub fn index_classes(classes: &[Vec<VertexId>]) -> Vec<Vec<usize>> {
    classes.iter().map(|c| c.iter().map(|v| v.index()).collect()).collect()
}
