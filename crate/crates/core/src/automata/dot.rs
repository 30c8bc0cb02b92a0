use std::collections::BTreeMap;
use std::fmt::Write;

use super::Dfa;

/// Graphviz rendering: finals are double circles, the initial state gets an
/// arrow from a point node, parallel edges share one comma-joined label.
pub fn to_dot(d: &Dfa) -> String {
    let mut out = String::new();
    out.push_str("digraph dfa {\n  rankdir=LR;\n  __start [shape=point];\n");
    for q in 0..d.n() {
        let shape = if d.is_final(q) { "doublecircle" } else { "circle" };
        writeln!(out, "  {q} [shape={shape}];").unwrap();
    }
    writeln!(out, "  __start -> {};", d.initial()).unwrap();
    let mut edges: BTreeMap<(usize, usize), Vec<&str>> = BTreeMap::new();
    for (label, t) in d.alphabet().iter().zip(d.delta()) {
        for q in 0..d.n() {
            edges.entry((q, t.apply(q))).or_default().push(label);
        }
    }
    for ((p, q), labels) in edges {
        writeln!(out, "  {p} -> {q} [label=\"{}\"];", labels.join(",")).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn shared_edges_are_joined() {
        let d = Dfa::from_images(&[("a", vec![1, 1]), ("b", vec![0, 1])], 0, &[1]).unwrap();
        let dot = to_dot(&d);
        assert!(dot.contains("1 -> 1 [label=\"a,b\"];"));
        assert!(dot.contains("1 [shape=doublecircle];"));
        assert!(dot.contains("__start -> 0;"));
    }
}
