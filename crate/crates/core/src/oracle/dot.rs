use std::fmt::Write;

use super::slots::SlotModel;
use super::symmetry::CanonicalDiagram;

/// Graphviz text for a diagram: nodes `X`, `Y`, `v1..vm`, then one edge per
/// contraction in annihilation-slot order, directed from the creation point
/// to the annihilation point. Self-loops are kept.
pub fn export_diagram(diagram: &CanonicalDiagram) -> String {
    let m = diagram.order();
    let model = SlotModel::propagator(m);
    let graph = diagram.graph();
    let mut out = String::new();
    writeln!(out, "digraph diagram_m{m} {{").unwrap();
    for node in graph.nodes() {
        writeln!(out, "  {node};").unwrap();
    }
    for (a, &c) in diagram.matching().pairing().iter().enumerate() {
        let c = c as usize;
        writeln!(
            out,
            "  {} -> {} [label=\"{}->{}\"];",
            model.creation_node(c),
            model.annihilation_node(a),
            model.creation_point(c),
            model.annihilation_point(a),
        )
        .unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::orbit_census;

    #[test]
    fn first_order_one_diagram() {
        let reps = orbit_census(1, true).unwrap().representatives.unwrap();
        let dot = export_diagram(&reps[0]);
        assert_eq!(
            dot.lines()
                .filter(|l| l.ends_with(';') && !l.contains("->"))
                .count(),
            3
        );
        assert_eq!(dot.lines().filter(|l| l.contains("->")).count(), 3);
        assert_eq!(
            dot,
            "digraph diagram_m1 {\n  X;\n  Y;\n  v1;\n  v1 -> v1 [label=\"x1->x1\"];\n  Y -> v1 [label=\"y->x1'\"];\n  v1 -> X [label=\"x1'->x\"];\n}\n"
        );
        assert_eq!(export_diagram(&reps[0]), dot);
    }

    #[test]
    fn node_set_is_fixed() {
        for rep in orbit_census(3, true).unwrap().representatives.unwrap() {
            let dot = export_diagram(&rep);
            let nodes: Vec<&str> = dot
                .lines()
                .filter(|l| !l.contains("->") && l.ends_with(';'))
                .map(|l| l.trim().trim_end_matches(';'))
                .collect();
            assert_eq!(nodes, ["X", "Y", "v1", "v2", "v3"]);
            assert_eq!(dot.lines().filter(|l| l.contains(" -> ")).count(), 7);
        }
    }
}
