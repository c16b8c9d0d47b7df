use std::fmt::Write;

use lattix::shelling::{format_label, EdgeLabeling};
use lattix::Lattice;

/// Hasse diagram in DOT, bottom to top, one `rank=same` group per height.
pub fn to_dot(lattice: &Lattice, names: Option<&[String]>, labels: Option<&EdgeLabeling>) -> String {
    let mut out = String::from("digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n");
    for x in lattice.elements() {
        let name = names.map_or_else(|| x.to_string(), |n| n[x].clone());
        writeln!(out, "  {x} [label={}];", quote(&name)).unwrap();
    }
    let top_height = lattice.height(lattice.top());
    for h in 0..=top_height {
        let level: Vec<String> =
            lattice.elements().filter(|&x| lattice.height(x) == h).map(|x| x.to_string()).collect();
        writeln!(out, "  {{ rank=same; {}; }}", level.join("; ")).unwrap();
    }
    for &(a, b) in lattice.covers() {
        match labels.and_then(|f| f.get(a, b)) {
            Some(v) => writeln!(out, "  {a} -> {b} [label={}];", quote(&format_label(&v))).unwrap(),
            None => writeln!(out, "  {a} -> {b};").unwrap(),
        }
    }
    out.push_str("}\n");
    out
}

fn quote(text: &str) -> String {
    format!("\"{}\"", text.replace('\\', "\\\\").replace('"', "\\\""))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn two_chain() {
        let l = Lattice::from_covers(&[(0, 1)]).unwrap();
        assert_eq!(
            to_dot(&l, None, None),
            "digraph lattice {\n  rankdir=BT;\n  node [shape=circle];\n  0 [label=\"0\"];\n  \
             1 [label=\"1\"];\n  { rank=same; 0; }\n  { rank=same; 1; }\n  0 -> 1;\n}\n"
        );
    }
}
