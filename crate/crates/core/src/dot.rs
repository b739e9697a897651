//! Graphviz rendering of a product: one ranked cluster per layer, walk edges
//! drawn bold and the remaining product edges faint.

use std::collections::HashSet;
use std::fmt::Write;

use crate::graph::{ProductVertex, ProductWalk};
use crate::product::{build_product, unflatten, ProductSpec};

fn node(v: ProductVertex) -> String {
    format!("v{}_{}", v.layer, v.inner)
}

pub fn product_dot(spec: &ProductSpec, walk: Option<&ProductWalk>) -> String {
    let n = spec.n();
    let used: HashSet<(ProductVertex, ProductVertex)> = walk
        .map(|w| w.steps().flat_map(|(a, b)| [(a, b), (b, a)]).collect())
        .unwrap_or_default();

    let mut out = String::from("graph product {\n  node [shape=circle, fontsize=10];\n");
    for i in 1..=spec.m() {
        let _ = writeln!(out, "  subgraph cluster_{i} {{\n    label=\"H_{i}\";\n    rank=same;");
        for h in 0..n {
            let v = ProductVertex::new(i, h);
            let _ = writeln!(out, "    {} [label=\"{}\"];", node(v), v);
        }
        out.push_str("  }\n");
    }
    let g = build_product(spec);
    for (a, b) in g.edges() {
        let (a, b) = (unflatten(a, n).unwrap(), unflatten(b, n).unwrap());
        let style = if walk.is_none() {
            ""
        } else if used.contains(&(a, b)) {
            " [penwidth=3]"
        } else {
            " [color=gray80]"
        };
        let _ = writeln!(out, "  {} -- {}{};", node(a), node(b), style);
    }
    out.push_str("}\n");
    out
}
