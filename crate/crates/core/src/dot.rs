//! Graphviz export of Hasse diagrams.
//!
//! Spaces are drawn through their T0 quotient: a class of equivalent points
//! becomes one node labelled with all its members. Smaller points are drawn
//! lower (`rankdir=BT`), edges point upwards.

use std::fmt::Write;

use crate::covering::Covering;
use crate::space::FiniteSpace;

/// Nodes (member lists of the T0 classes, ordered by least member) and
/// Hasse edges between node indices.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct HasseDiagram {
    pub nodes: Vec<Vec<usize>>,
    pub edges: Vec<(usize, usize)>,
}

pub fn hasse_diagram(space: &FiniteSpace) -> HasseDiagram {
    let q = space.kolmogorov_quotient();
    HasseDiagram {
        edges: q
            .space
            .hasse_covers()
            .into_iter()
            .map(|a| (a.src, a.dst))
            .collect(),
        nodes: q.classes,
    }
}

fn quote(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

fn node_label(space: &FiniteSpace, members: &[usize]) -> String {
    let names: Vec<&str> = members.iter().map(|&m| space.label(m)).collect();
    names.join(" ~ ")
}

fn body(out: &mut String, space: &FiniteSpace, d: &HasseDiagram) {
    for (i, members) in d.nodes.iter().enumerate() {
        let _ = writeln!(
            out,
            "  n{i} [label={}];",
            quote(&node_label(space, members))
        );
    }
    for &(a, b) in &d.edges {
        let _ = writeln!(out, "  n{a} -> n{b};");
    }
}

/// Hasse diagram of a space.
pub fn space_to_dot(space: &FiniteSpace) -> String {
    let d = hasse_diagram(space);
    let mut out = String::from("digraph space {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    body(&mut out, space, &d);
    out.push_str("}\n");
    out
}

/// Height of each node: length of the longest chain of Hasse edges below it.
fn heights(d: &HasseDiagram) -> Vec<usize> {
    let n = d.nodes.len();
    let mut h = vec![0; n];
    // Longest-path relaxation; at most n rounds on a DAG.
    for _ in 0..n {
        let mut changed = false;
        for &(a, b) in &d.edges {
            if h[b] < h[a] + 1 {
                h[b] = h[a] + 1;
                changed = true;
            }
        }
        if !changed {
            break;
        }
    }
    h
}

/// Hasse diagram of the total space of a covering. Each sheet point is put
/// on the rank of the base point below it, and within a rank the fibers are
/// listed in base order, so the sheets line up over the base.
pub fn covering_to_dot(c: &Covering) -> String {
    let total = c.total();
    let d = hasse_diagram(total);
    let base = hasse_diagram(c.base());
    let base_height = heights(&base);
    let mut base_node = vec![0; c.base().len()];
    for (i, members) in base.nodes.iter().enumerate() {
        for &m in members {
            base_node[m] = i;
        }
    }
    let max_h = base_height.iter().copied().max().unwrap_or(0);
    let mut out = String::from("digraph covering {\n  rankdir=BT;\n  node [shape=plaintext];\n");
    body(&mut out, total, &d);
    for level in 0..=max_h {
        let members: Vec<String> = d
            .nodes
            .iter()
            .enumerate()
            .filter(|(_, m)| {
                let (x, _) = c.coordinates(m[0]);
                base_height[base_node[x]] == level
            })
            .map(|(i, _)| format!("n{i};"))
            .collect();
        if !members.is_empty() {
            let _ = writeln!(out, "  {{ rank=same; {} }}", members.join(" "));
        }
    }
    out.push_str("}\n");
    out
}
