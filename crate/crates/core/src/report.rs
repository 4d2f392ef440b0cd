//! Decomposition summaries and Graphviz export.

use std::collections::BTreeSet;
use std::fmt::Write;

use serde::Serialize;

use crate::graph::Graph;
use crate::strong::StrongResolvingGraph;
use crate::unicyclic::UnicyclicDecomposition;

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThreadSummary {
    /// Vertex the thread hangs from.
    pub attach: usize,
    pub vertices: Vec<usize>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct AnalyzeReport {
    pub n: usize,
    pub edges: usize,
    pub girth: usize,
    pub cycle: Vec<usize>,
    #[serde(rename = "L")]
    pub l: usize,
    pub b: usize,
    pub branch_active: Vec<usize>,
    pub branching: Vec<usize>,
    pub dimension_base: usize,
    pub threads: Vec<ThreadSummary>,
}

impl AnalyzeReport {
    pub fn new(dec: &UnicyclicDecomposition) -> Self {
        let g = dec.graph();
        let threads = (0..g.n())
            .flat_map(|v| {
                dec.threads(v).iter().map(move |t| ThreadSummary {
                    attach: v,
                    vertices: t.vertices.clone(),
                })
            })
            .collect();
        AnalyzeReport {
            n: g.n(),
            edges: g.edge_count(),
            girth: dec.girth(),
            cycle: dec.cycle().to_vec(),
            l: dec.l_value(),
            b: dec.b_value(),
            branch_active: dec.branch_active().to_vec(),
            branching: dec.branching().to_vec(),
            dimension_base: dec.dimension_base(),
            threads,
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report serializes")
    }

    pub fn to_human(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "n          {}", self.n);
        let _ = writeln!(out, "edges      {}", self.edges);
        let _ = writeln!(out, "girth      {}", self.girth);
        let _ = writeln!(out, "cycle      {:?}", self.cycle);
        let _ = writeln!(out, "L          {}", self.l);
        let _ = writeln!(out, "b          {} {:?}", self.b, self.branch_active);
        let _ = writeln!(out, "dim >=     {}", self.dimension_base);
        let _ = writeln!(out, "threads    {}", self.threads.len());
        for t in &self.threads {
            let _ = writeln!(out, "  at {:<4} {:?}", t.attach, t.vertices);
        }
        out
    }
}

/// Black vertices are drawn filled black, gray ones filled gray. A vertex
/// in both sets is black.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct DotStyle {
    pub black: BTreeSet<usize>,
    pub gray: BTreeSet<usize>,
}

fn node_line(out: &mut String, v: usize, label: Option<&str>, style: &DotStyle) {
    let mut attrs = Vec::new();
    if let Some(l) = label {
        attrs.push(format!("label=\"{}\"", l.replace('"', "\\\"")));
    }
    if style.black.contains(&v) {
        attrs.push("style=filled, fillcolor=black, fontcolor=white".to_string());
    } else if style.gray.contains(&v) {
        attrs.push("style=filled, fillcolor=gray".to_string());
    }
    if attrs.is_empty() {
        let _ = writeln!(out, "  {v};");
    } else {
        let _ = writeln!(out, "  {v} [{}];", attrs.join(", "));
    }
}

/// Deterministic DOT text, vertices and edges in ascending order.
pub fn export_dot(g: &Graph, style: &DotStyle) -> String {
    let mut out = String::from("graph G {\n  node [shape=circle];\n");
    for v in 0..g.n() {
        node_line(&mut out, v, g.label(v), style);
    }
    for &(u, v) in g.edges() {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// DOT for a strong resolving graph. Isolated vertices are kept and drawn
/// gray; `forced` is drawn black.
pub fn export_srg_dot(srg: &StrongResolvingGraph, forced: &BTreeSet<usize>) -> String {
    let style = DotStyle {
        black: forced.clone(),
        gray: srg.isolated.iter().copied().collect(),
    };
    let mut out = String::from("graph SR {\n  node [shape=circle];\n");
    for v in 0..srg.n {
        node_line(&mut out, v, None, &style);
    }
    for &(u, v) in &srg.edges {
        let _ = writeln!(out, "  {u} -- {v};");
    }
    out.push_str("}\n");
    out
}

/// Gray set for metric bases: vertices in some basis but not in all.
pub fn basis_gray(bases: &[Vec<usize>], forced: &BTreeSet<usize>) -> BTreeSet<usize> {
    bases
        .iter()
        .flatten()
        .copied()
        .filter(|v| !forced.contains(v))
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::generators::{fig2a, fig3_g};
    use crate::graph::all_pairs_distances;
    use crate::metric::basis_forced_oracle;
    use crate::strong::{build_srg_definition, strong_basis_forced_oracle};
    use crate::unicyclic::decompose_unicyclic;

    #[test]
    fn fig2a_has_two_black_nodes() {
        let g = fig2a();
        let r = basis_forced_oracle(&all_pairs_distances(&g), 16).unwrap();
        let style = DotStyle {
            gray: basis_gray(r.bases.as_deref().unwrap(), &r.forced),
            black: r.forced,
        };
        let dot = export_dot(&g, &style);
        assert_eq!(dot.matches("fillcolor=black").count(), 2);
        assert_eq!(dot, export_dot(&g, &style));
    }

    #[test]
    fn empty_style_has_no_black_nodes() {
        let dot = export_dot(&Graph::cycle(5), &DotStyle::default());
        assert!(!dot.contains("fillcolor"));
        assert_eq!(dot.matches(" -- ").count(), 5);
    }

    #[test]
    fn srg_isolated_nodes_are_gray() {
        let g = fig3_g();
        let srg = build_srg_definition(&g);
        assert!(!srg.isolated.is_empty());
        let forced = strong_basis_forced_oracle(&g).unwrap();
        let dot = export_srg_dot(&srg, &forced);
        assert_eq!(dot.matches("fillcolor=gray").count(), srg.isolated.len());
        assert_eq!(dot.matches("fillcolor=black").count(), forced.len());
    }

    #[test]
    fn analyze_summary() {
        let r = AnalyzeReport::new(&decompose_unicyclic(&fig2a()).unwrap());
        assert_eq!((r.girth, r.l, r.b, r.threads.len()), (6, 0, 0, 5));
        assert!(r.to_json().contains("\"L\":0"));
    }
}
