use std::fmt::Write as _;

use fixedbitset::FixedBitSet;

use super::SubgroupLattice;

/// Graphviz rendering of the Hasse diagram (covering pairs only). Normal
/// subgroups are double circles; subgroups in `shaded` are filled.
pub fn to_dot(lat: &SubgroupLattice, shaded: Option<&FixedBitSet>) -> String {
    let mut out = String::new();
    out.push_str("digraph subgroup_lattice {\n");
    out.push_str("  rankdir=BT;\n");
    out.push_str("  node [shape=circle];\n");
    for h in lat.ids() {
        let shape = if lat.is_normal(h) { "doublecircle" } else { "circle" };
        let fill = match shaded {
            Some(s) if s.contains(h) => ", style=filled, fillcolor=lightgray",
            _ => "",
        };
        let _ = writeln!(
            out,
            "  s{h} [label=\"order={}\", shape={shape}{fill}];",
            lat.order(h)
        );
    }
    for a in lat.ids() {
        for b in lat.covers(a) {
            let _ = writeln!(out, "  s{a} -> s{b};");
        }
    }
    out.push_str("}\n");
    out
}
