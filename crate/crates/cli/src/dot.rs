//! Graphviz export.

use std::fmt::Write;

use bidikl_core::{circular_edges, BidirectedGraph, KlPartition};

use crate::CliError;

const PALETTE: [&str; 12] = [
    "#8dd3c7", "#ffffb3", "#bebada", "#fb8072", "#80b1d3", "#fdb462", "#b3de69", "#fccde5", "#d9d9d9", "#bc80bd",
    "#ccebc5", "#ffed6f",
];

fn quoted(s: &str) -> String {
    let mut out = String::with_capacity(s.len() + 2);
    out.push('"');
    for c in s.chars() {
        match c {
            '"' | '\\' => {
                out.push('\\');
                out.push(c);
            }
            '\n' => out.push_str("\\n"),
            _ => out.push(c),
        }
    }
    out.push('"');
    out
}

/// Undirected DOT rendering. Each edge is labelled `su/sv`; circular edges
/// are solid and the rest dashed. With a partition, vertices are filled by
/// class.
pub fn export_dot(g: &BidirectedGraph, partition: Option<&KlPartition>) -> Result<String, CliError> {
    if let Some(p) = partition {
        if p.partition.vertex_count() != g.vertex_count() {
            return Err(CliError::PartitionMismatch {
                expected: g.vertex_count(),
                got: p.partition.vertex_count(),
            });
        }
    }
    let circular = circular_edges(g);
    let mut out = String::from("graph bidikl {\n");
    if let Some(p) = partition {
        writeln!(out, "  // classes of ~{}", p.sign).unwrap();
        out.push_str("  node [style=filled];\n");
    }
    for v in g.vertices() {
        write!(out, "  {}", quoted(g.vertex_name(v))).unwrap();
        if let Some(p) = partition {
            let class = p.class_of(v);
            write!(
                out,
                " [fillcolor={}, group={class}]",
                quoted(PALETTE[class % PALETTE.len()])
            )
            .unwrap();
        }
        out.push_str(";\n");
    }
    for (id, e) in g.edges() {
        writeln!(
            out,
            "  {} -- {} [id={}, label={}, style={}];",
            quoted(g.vertex_name(e.u)),
            quoted(g.vertex_name(e.v)),
            quoted(g.edge_name(id)),
            quoted(&format!("{}/{}", e.sign_u, e.sign_v)),
            if circular.contains(id) { "solid" } else { "dashed" },
        )
        .unwrap();
    }
    out.push_str("}\n");
    Ok(out)
}
