//! Graphviz export of a diagram: the two forests as trees, joined through a
//! box that carries the braid word and the labels.

use std::fmt::Write;

use bvkit::diagram::Spraige;
use bvkit::forest::{Forest, Tree};

/// Writes the nodes of `forest`; the plus forest hangs upside down, roots last.
fn forest_nodes(out: &mut String, prefix: &str, forest: &Forest, upside_down: bool) -> Vec<String> {
    fn walk(
        out: &mut String,
        prefix: &str,
        tree: &Tree,
        upside_down: bool,
        counter: &mut usize,
        leaves: &mut Vec<String>,
    ) -> String {
        let id = format!("{prefix}{}", *counter);
        *counter += 1;
        match tree {
            Tree::Leaf => {
                let _ = writeln!(out, "    {id} [shape=point];");
                leaves.push(id.clone());
            }
            Tree::Caret(children) => {
                let _ = writeln!(out, "    {id} [shape=circle, label=\"\", width=0.15];");
                for child in children {
                    let c = walk(out, prefix, child, upside_down, counter, leaves);
                    if upside_down {
                        let _ = writeln!(out, "    {c} -> {id};");
                    } else {
                        let _ = writeln!(out, "    {id} -> {c};");
                    }
                }
            }
        }
        id
    }
    let mut counter = 0;
    let mut leaves = Vec::new();
    for tree in forest.trees() {
        walk(out, prefix, tree, upside_down, &mut counter, &mut leaves);
    }
    leaves
}

pub fn element_dot(name: &str, s: &Spraige) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "digraph \"{name}\" {{");
    let _ = writeln!(out, "  rankdir=TB;");
    let _ = writeln!(out, "  subgraph cluster_minus {{\n    label=\"minus: {}\";", s.minus());
    let top = forest_nodes(&mut out, "m", s.minus(), false);
    let _ = writeln!(out, "  }}");
    let labels: Vec<String> = s.labels().iter().map(ToString::to_string).collect();
    let braid = s.braid().to_string();
    let _ = writeln!(
        out,
        "  braid [shape=box, label=\"braid: {}\\nlabels: {}\"];",
        if braid.is_empty() { "id" } else { &braid },
        labels.join("; ")
    );
    let _ = writeln!(out, "  subgraph cluster_plus {{\n    label=\"plus: {}\";", s.plus());
    let bottom = forest_nodes(&mut out, "p", s.plus(), true);
    let _ = writeln!(out, "  }}");
    for (i, leaf) in top.iter().enumerate() {
        let _ = writeln!(out, "  {leaf} -> braid [taillabel=\"{}\"];", i + 1);
    }
    for (i, leaf) in bottom.iter().enumerate() {
        let _ = writeln!(out, "  braid -> {leaf} [headlabel=\"{}\"];", i + 1);
    }
    out.push_str("}\n");
    out
}
