#![no_main]

//! Decodes a small graph and a walk from raw bytes:
//! `[n, m, (u, v, signs) * m, (edge, flip) * ..]`.

use bidikl_core::{classify_walk, BidirectedGraph, EdgeId, EdgeSpec, Sign, Step, VertexId, Walk};
use libfuzzer_sys::fuzz_target;

fn sign(bit: u8) -> Sign {
    if bit & 1 == 0 {
        Sign::Plus
    } else {
        Sign::Minus
    }
}

fn decode(data: &[u8]) -> Option<(BidirectedGraph, Walk)> {
    let (&n, rest) = data.split_first()?;
    let (&m, rest) = rest.split_first()?;
    let n = usize::from(n % 6) + 1;
    let m = usize::from(m % 8);
    if rest.len() < 3 * m + 1 {
        return None;
    }
    let (edge_bytes, rest) = rest.split_at(3 * m);
    let names: Vec<String> = (0..n).map(|i| i.to_string()).collect();
    let specs = edge_bytes.chunks_exact(3).enumerate().map(|(i, c)| {
        EdgeSpec::new(
            format!("e{i}"),
            names[usize::from(c[0]) % n].clone(),
            names[usize::from(c[1]) % n].clone(),
            sign(c[2]),
            sign(c[2] >> 1),
        )
    });
    let g = BidirectedGraph::new(names.iter().cloned(), specs).ok()?;
    let start = VertexId::new(usize::from(rest[0]) % n);
    let mut walk = Walk::trivial(start);
    let mut at = start;
    for pair in rest[1..].chunks_exact(2) {
        // edge indices may run past the graph; classification must reject them
        let edge = EdgeId::new(usize::from(pair[0]) % (m + 1));
        let flip = pair[1] & 1 == 1;
        let to = g.edge(edge).ok().and_then(|e| e.traverse(at, flip)).map_or(at, |t| t.2);
        walk.push(Step { edge, to, flip });
        at = to;
    }
    Some((g, walk))
}

fuzz_target!(|data: &[u8]| {
    let Some((g, walk)) = decode(data) else {
        return;
    };
    let Ok(class) = classify_walk(&g, &walk) else {
        assert!(walk.edges().any(|e| e.index() >= g.edge_count()));
        return;
    };
    assert!(!class.is_dipath || class.is_ditrail);
    assert!(!class.is_ditrail || class.is_trail);
    assert!(!class.is_trail || class.is_walk);
    let reversed = classify_walk(&g, &walk.reversed()).expect("same ids");
    assert_eq!(reversed.is_ditrail, class.is_ditrail);
    for t in &class.types {
        assert!(reversed.has_type(t.end, t.start));
    }
});
