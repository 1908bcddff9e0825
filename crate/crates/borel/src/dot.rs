//! Graphviz export of the ideal lattice.

use std::fmt::Write;

use borel_core::ideals::is_abelian;
use borel_core::{IdealLattice, RootStyle, RootSystem};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RenderOptions {
    pub unicode: bool,
    pub mark_abelian: bool,
    pub graph_name: String,
}

impl Default for RenderOptions {
    fn default() -> Self {
        Self {
            unicode: false,
            mark_abelian: true,
            graph_name: "ideals".to_owned(),
        }
    }
}

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Nodes are `n0, n1, ...` in lattice order; the zero ideal sits at the bottom.
pub fn export_dot(lattice: &IdealLattice, rs: &RootSystem, options: &RenderOptions) -> String {
    let style = if options.unicode {
        RootStyle::Unicode
    } else {
        RootStyle::Ascii
    };
    let mut out = String::new();
    writeln!(out, "digraph {} {{", quote(&options.graph_name)).unwrap();
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=box, fontname=\"monospace\"];\n");
    for (i, node) in lattice.nodes.iter().enumerate() {
        let label = node.display(rs, style).to_string();
        write!(out, "  n{i} [label={}", quote(&label)).unwrap();
        if options.mark_abelian && is_abelian(node, rs) {
            out.push_str(", class=\"abelian\", style=filled, fillcolor=\"lightblue\"");
        }
        out.push_str("];\n");
    }
    for &(lo, hi) in &lattice.edges {
        writeln!(out, "  n{lo} -> n{hi};").unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use borel_core::ideals::enumerate_nilradical_ideals;
    use borel_core::lattice::build_lattice;
    use borel_core::Family;
    use std::collections::BTreeSet;

    fn lattice(f: Family, n: usize) -> (RootSystem, IdealLattice) {
        let rs = RootSystem::new(f, n).unwrap();
        let l = build_lattice(&enumerate_nilradical_ideals(&rs), &rs).unwrap();
        (rs, l)
    }

    /// Node labels and edges read back from the statements we emit.
    fn read_back(dot: &str) -> (Vec<String>, BTreeSet<(usize, usize)>) {
        let mut labels = Vec::new();
        let mut edges = BTreeSet::new();
        for line in dot.lines().map(str::trim) {
            if let Some((lo, hi)) = line.strip_suffix(';').and_then(|l| l.split_once(" -> ")) {
                let id = |s: &str| s.trim_start_matches('n').parse::<usize>().unwrap();
                edges.insert((id(lo), id(hi)));
            } else if line.starts_with('n') && line.contains("[label=\"") {
                let start = line.find("[label=\"").unwrap() + 8;
                let end = start + line[start..].find('"').unwrap();
                labels.push(line[start..end].to_owned());
            }
        }
        (labels, edges)
    }

    #[test]
    fn a2_statements() {
        let (rs, l) = lattice(Family::A, 2);
        let dot = export_dot(&l, &rs, &RenderOptions::default());
        let (labels, edges) = read_back(&dot);
        assert_eq!(
            labels,
            [
                "0",
                "[X[a1+a2]]",
                "[X[a1], X[a1+a2]]",
                "[X[a2], X[a1+a2]]",
                "[X[a1], X[a2], X[a1+a2]]"
            ]
        );
        assert_eq!(edges.len(), 5);
        assert!(dot.starts_with("digraph \"ideals\" {\n  rankdir=BT;\n"));
    }

    #[test]
    fn round_trip_recovers_the_lattice() {
        for (f, n) in [(Family::B, 3), (Family::G, 2), (Family::F, 4)] {
            let (rs, l) = lattice(f, n);
            let (labels, edges) = read_back(&export_dot(&l, &rs, &RenderOptions::default()));
            let expected: Vec<String> = l
                .nodes
                .iter()
                .map(|j| j.display(&rs, RootStyle::Ascii).to_string())
                .collect();
            assert_eq!(labels, expected);
            assert_eq!(edges, l.edges.iter().copied().collect());
        }
    }

    #[test]
    fn b2_abelian_marking() {
        let (rs, l) = lattice(Family::B, 2);
        let dot = export_dot(&l, &rs, &RenderOptions::default());
        // 0 plus the three nonzero abelian ideals
        assert_eq!(dot.matches("class=\"abelian\"").count(), 4);
        let plain = RenderOptions {
            mark_abelian: false,
            ..Default::default()
        };
        assert!(!export_dot(&l, &rs, &plain).contains("abelian"));
    }

    #[test]
    fn unicode_labels_and_stability() {
        let (rs, l) = lattice(Family::B, 2);
        let opts = RenderOptions {
            unicode: true,
            graph_name: "B2".to_owned(),
            ..Default::default()
        };
        let dot = export_dot(&l, &rs, &opts);
        assert!(dot.contains("X[α₁+2α₂]"));
        assert_eq!(dot, export_dot(&l, &rs, &opts));
    }
}
