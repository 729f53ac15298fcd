use std::fmt::Write;

use nalgebra::DMatrix;
use serde::Serialize;

use super::{OrientedCayleyGraph, Spectrum};

/// Digraph with one arc `g -> cg` per element of `C`.
pub fn to_dot(graph: &OrientedCayleyGraph<'_>) -> String {
    let g = graph.group();
    let mut out = String::from("digraph cayley {\n");
    for v in 0..graph.order() {
        let _ = writeln!(out, "  {v} [label=\"{}\"];", g.label(v).replace('"', "\\\""));
    }
    for (a, b) in graph.arcs() {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
    out
}

pub fn adjacency_csv(a: &DMatrix<f64>) -> String {
    let mut out = String::new();
    for i in 0..a.nrows() {
        let row: Vec<String> = (0..a.ncols()).map(|j| format!("{}", a[(i, j)])).collect();
        out.push_str(&row.join(","));
        out.push('\n');
    }
    out
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SpectrumEntry {
    pub character: usize,
    pub degree: u64,
    pub im_theta: f64,
}

pub fn spectrum_report(spec: &Spectrum) -> Vec<SpectrumEntry> {
    spec.t
        .iter()
        .zip(&spec.degrees)
        .enumerate()
        .map(|(character, (&im_theta, &degree))| SpectrumEntry {
            character,
            degree,
            im_theta,
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::{build_cyclic, conjugacy};

    #[test]
    fn dot_lists_arcs_out_of_each_vertex() {
        let g = build_cyclic(3).unwrap();
        let c = conjugacy(&g);
        let graph = OrientedCayleyGraph::from_classes(&g, &c, &[1]).unwrap();
        let dot = to_dot(&graph);
        assert!(dot.contains("0 -> 1;"));
        assert!(dot.contains("2 -> 0;"));
        assert!(!dot.contains("1 -> 0;"));
        assert_eq!(adjacency_csv(&graph.adjacency_matrix()).lines().next(), Some("0,-1,1"));
    }
}
