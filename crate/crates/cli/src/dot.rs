//! DOT output for sequences and categories.

use std::fmt::Write;

use dct_core::dexact::{is_split_epi, is_split_mono, DSequence};
use dct_core::repcat::{self, Module};

use crate::error::CliError;
use crate::naming::{dims_label, name_of};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Node {
    pub label: String,
    pub dims: Vec<usize>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Edge {
    pub from: usize,
    pub to: usize,
    pub label: String,
}

fn escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// Nodes are emitted in the given order as `n0, n1, …`.
pub fn render(name: &str, nodes: &[Node], edges: &[Edge]) -> String {
    let mut out = String::new();
    writeln!(out, "digraph \"{}\" {{", escape(name)).unwrap();
    if !nodes.is_empty() {
        writeln!(out, "  rankdir=LR;").unwrap();
    }
    for (i, n) in nodes.iter().enumerate() {
        writeln!(out, "  n{i} [label=\"{}\\n{}\"];", escape(&n.label), dims_label(&n.dims)).unwrap();
    }
    for e in edges {
        writeln!(out, "  n{} -> n{} [label=\"{}\"];", e.from, e.to, escape(&e.label)).unwrap();
    }
    out.push_str("}\n");
    out
}

/// `radical`, `iso`, `split mono`, `split epi`, or `non-radical`.
pub fn map_status(f: &dct_core::repcat::Morphism) -> Result<&'static str, CliError> {
    Ok(if repcat::is_radical_morphism(f)? {
        "radical"
    } else if f.is_iso() {
        "iso"
    } else if is_split_mono(f) {
        "split mono"
    } else if is_split_epi(f) {
        "split epi"
    } else {
        "non-radical"
    })
}

pub fn sequence_graph(labels: &[(String, Module)], s: &DSequence) -> Result<(Vec<Node>, Vec<Edge>), CliError> {
    let nodes = s
        .terms()
        .iter()
        .map(|t| Ok(Node { label: name_of(labels, t)?, dims: t.dims().to_vec() }))
        .collect::<Result<Vec<_>, CliError>>()?;
    let edges = s
        .maps()
        .iter()
        .enumerate()
        .map(|(i, f)| Ok(Edge { from: i, to: i + 1, label: map_status(f)?.to_string() }))
        .collect::<Result<Vec<_>, CliError>>()?;
    Ok((nodes, edges))
}
