//! Embeddability graph of `O_2, …, O_N` and the divisibility graph it
//! mirrors.
//!
//! Graphs are emitted in Graphviz DOT: a `digraph` header, one
//! `"A" -> "B";` line per edge, and a closing brace.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use crate::families::hom_exists;
use crate::poset::leq;
use crate::word::AlgebraTag;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiGraph {
    pub name: String,
    pub vertices: Vec<u64>,
    pub edges: BTreeSet<(u64, u64)>,
    prefix: &'static str,
}

impl DiGraph {
    /// Keeps only covering edges: `a → b` with no `a → c → b`.
    pub fn transitive_reduction(&self) -> DiGraph {
        let edges = self
            .edges
            .iter()
            .filter(|(a, b)| !self.vertices.iter().any(|c| self.edges.contains(&(*a, *c)) && self.edges.contains(&(*c, *b))))
            .copied()
            .collect();
        DiGraph { edges, ..self.clone() }
    }

    /// Reverses every edge and renames vertex `v` to `map(v)`.
    pub fn reversed_relabeled(&self, map: impl Fn(u64) -> u64, name: &str, prefix: &'static str) -> DiGraph {
        DiGraph {
            name: name.to_string(),
            vertices: self.vertices.iter().map(|&v| map(v)).collect(),
            edges: self.edges.iter().map(|&(a, b)| (map(b), map(a))).collect(),
            prefix,
        }
    }

    pub fn to_dot(&self) -> String {
        let mut out = String::new();
        writeln!(out, "digraph {} {{", self.name).unwrap();
        for v in &self.vertices {
            writeln!(out, "  \"{}{}\";", self.prefix, v).unwrap();
        }
        for (a, b) in &self.edges {
            writeln!(out, "  \"{p}{a}\" -> \"{p}{b}\";", p = self.prefix).unwrap();
        }
        out.push_str("}\n");
        out
    }
}

/// Vertices `O_2..O_N`; an edge `O_m → O_n` (`m ≠ n`) for every unital
/// embedding of `O_m` into `O_n`.
pub fn embeddability_graph(max_generators: u64) -> DiGraph {
    let vertices: Vec<u64> = (2..=max_generators).collect();
    let mut edges = BTreeSet::new();
    for &m in &vertices {
        for &n in &vertices {
            if m != n && hom_exists(AlgebraTag::Finite(m as u32), AlgebraTag::Finite(n as u32)) {
                edges.insert((m, n));
            }
        }
    }
    DiGraph { name: "embeddings".into(), vertices, edges, prefix: "O" }
}

/// Vertices `1..=max`; an edge `a → b` whenever `a | b`, `a ≠ b`.
pub fn divisibility_graph(max: u64) -> DiGraph {
    let vertices: Vec<u64> = (1..=max).collect();
    let mut edges = BTreeSet::new();
    for &a in &vertices {
        for &b in &vertices {
            if a != b && leq(a, b) {
                edges.insert((a, b));
            }
        }
    }
    DiGraph { name: "divisibility".into(), vertices, edges, prefix: "" }
}

/// The embeddability graph reversed and relabeled by `O_{n+1} ↦ n`.
pub fn as_divisibility(g: &DiGraph) -> DiGraph {
    g.reversed_relabeled(|v| v - 1, "divisibility", "")
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_graphs() {
        assert!(embeddability_graph(2).edges.is_empty());
        let g = embeddability_graph(5);
        assert_eq!(as_divisibility(&g), divisibility_graph(4));
    }

    #[test]
    fn hasse_diagram_for_eight() {
        let hasse = embeddability_graph(8).transitive_reduction();
        let expected: BTreeSet<(u64, u64)> = [(3, 2), (4, 2), (6, 2), (8, 2), (5, 3), (7, 3), (7, 4)].into_iter().collect();
        assert_eq!(hasse.edges, expected);
    }

    #[test]
    fn dot_output() {
        let dot = embeddability_graph(3).to_dot();
        assert_eq!(dot, "digraph embeddings {\n  \"O2\";\n  \"O3\";\n  \"O3\" -> \"O2\";\n}\n");
    }
}
