//! DOT and JSON renderings of state graphs.

use std::collections::BTreeMap;
use std::fmt::Write;

use serde::Serialize;

use crate::state::{ReducedStateGraph, StateGraph};

/// Renders `G_sigma` with one DOT edge per crossing. Each edge carries its
/// resolution label, its crossing and the size of its parallel class.
pub fn state_graph_dot(g: &StateGraph, name: &str) -> String {
    let mut parallel: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    for e in &g.edges {
        *parallel.entry(e.ends).or_default() += 1;
    }
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count {
        writeln!(out, "  v{v};").unwrap();
    }
    for e in &g.edges {
        writeln!(
            out,
            "  v{} -- v{} [label=\"{}\", crossing={}, multiplicity={}];",
            e.ends.0, e.ends.1, e.label, e.crossing, parallel[&e.ends]
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

/// Renders `G'_sigma`, one DOT edge per adjacent pair of circles.
pub fn reduced_graph_dot(g: &ReducedStateGraph, name: &str) -> String {
    let mut out = format!("graph {name} {{\n");
    for v in 0..g.vertex_count {
        writeln!(out, "  v{v};").unwrap();
    }
    for e in &g.edges {
        let labels: String = e.labels.iter().map(|l| l.as_char()).collect();
        let label = if e.multiplicity > 1 {
            format!("{} x{}", e.labels[0], e.multiplicity)
        } else {
            labels.clone()
        };
        writeln!(
            out,
            "  v{} -- v{} [label=\"{label}\", labels=\"{labels}\", multiplicity={}];",
            e.ends.0, e.ends.1, e.multiplicity
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[derive(Serialize)]
struct GraphPair<'a> {
    graph: &'a StateGraph,
    reduced: &'a ReducedStateGraph,
}

pub fn graphs_json(g: &StateGraph, reduced: &ReducedStateGraph) -> String {
    serde_json::to_string(&GraphPair { graph: g, reduced }).expect("graph JSON serializes")
}
