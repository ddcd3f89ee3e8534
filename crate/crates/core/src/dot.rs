//! Graphviz output. Diagrams are drawn bottom-up; nodes carry labels verbatim.

use std::fmt::Write;

use crate::order::Structure;
use crate::relation::BitMatrix;

fn quote(label: &str) -> String {
    format!("\"{}\"", label.replace('\\', "\\\\").replace('"', "\\\""))
}

/// Covering pairs `(p, q)` of a reflexive order: `p < q` with nothing strictly between.
fn covers(n: usize, leq: impl Fn(usize, usize) -> bool) -> Vec<(usize, usize)> {
    let lt = |p: usize, q: usize| p != q && leq(p, q);
    (0..n)
        .flat_map(|p| (0..n).map(move |q| (p, q)))
        .filter(|&(p, q)| lt(p, q) && !(0..n).any(|r| lt(p, r) && lt(r, q)))
        .collect()
}

/// Hasse diagram of `≤` with solid edges and `≺` overlaid as dashed edges.
/// Elements with `p ≺ p` are drawn with a double outline.
pub fn hasse(s: &Structure) -> String {
    let mut out = String::from("digraph structure {\n  rankdir=BT;\n  node [shape=ellipse];\n");
    for p in s.elements() {
        let attr = if s.prec(p, p) { " [peripheries=2]" } else { "" };
        writeln!(out, "  {}{attr};", quote(s.label(p))).unwrap();
    }
    for (p, q) in covers(s.len(), |p, q| s.leq(p, q)) {
        writeln!(out, "  {} -> {};", quote(s.label(p)), quote(s.label(q))).unwrap();
    }
    for p in s.elements() {
        for q in s.elements().filter(|&q| q != p && s.prec(p, q)) {
            writeln!(
                out,
                "  {} -> {} [style=dashed, constraint=false];",
                quote(s.label(p)),
                quote(s.label(q))
            )
            .unwrap();
        }
    }
    out.push_str("}\n");
    out
}

/// Hasse diagram of a specialization order given as `x ⊑ y` in `order`.
pub fn specialization(labels: &[String], order: &BitMatrix) -> String {
    let mut out = String::from("digraph specialization {\n  rankdir=BT;\n  node [shape=box];\n");
    for l in labels {
        writeln!(out, "  {};", quote(l)).unwrap();
    }
    for (x, y) in covers(labels.len(), |x, y| order.get(x, y)) {
        writeln!(out, "  {} -> {};", quote(&labels[x]), quote(&labels[y])).unwrap();
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::order::fixtures;

    #[test]
    fn chain_has_two_covers() {
        let d = hasse(&fixtures::c3());
        let solid = d.lines().filter(|l| l.contains(" -> ") && !l.contains("dashed"));
        assert_eq!(solid.count(), 2);
        assert!(d.contains("\"0\" -> \"a\";"));
        assert_eq!(d.matches("peripheries=2").count(), 3);
    }

    #[test]
    fn strict_prec_is_dashed() {
        let s = fixtures::s2_strict();
        let d = hasse(&s);
        let dashed = s.elements().flat_map(|p| s.elements().map(move |q| (p, q)));
        let expected = dashed.filter(|&(p, q)| p != q && s.prec(p, q)).count();
        assert_eq!(d.matches("style=dashed").count(), expected);
    }

    #[test]
    fn quoting() {
        assert_eq!(quote("a\"b"), "\"a\\\"b\"");
    }
}
