use std::fmt::Write;

use recur_complex::Complex;

use crate::digraph::TransitionDigraph;

pub fn digraph_dot(c: &Complex, d: &TransitionDigraph) -> String {
    let mut s = String::from("digraph A {\n  node [shape=box, fontsize=10];\n");
    for a in 0..d.len() {
        let t = &d.set.tokens[a];
        let _ = writeln!(
            s,
            "  n{a} [label=\"{}\\n{} t={}\\nalong={}\"];",
            c.faces[t.face].id, c.edges[t.edge].id, t.t, t.along
        );
    }
    for (a, row) in d.succ.iter().enumerate() {
        for (b, p) in row {
            let _ = writeln!(s, "  n{a} -> n{b} [label=\"{p}\"];");
        }
    }
    s.push_str("}\n");
    s
}

/// Plain dump: one token per line, then one arc per line.
pub fn digraph_text(c: &Complex, d: &TransitionDigraph) -> String {
    let mut s = String::new();
    let _ = writeln!(s, "tokens {}", d.len());
    for a in 0..d.len() {
        let t = &d.set.tokens[a];
        let i = match &d.set.i_map[a] {
            Ok(j) => j.to_string(),
            Err(_) => "-".into(),
        };
        let _ = writeln!(
            s,
            "{a} face={} pos={} edge={} t={} along={} I={i}",
            c.faces[t.face].id, t.pos, c.edges[t.edge].id, t.t, t.along
        );
    }
    let _ = writeln!(s, "arcs {}", d.arc_count());
    for (a, row) in d.succ.iter().enumerate() {
        for (b, p) in row {
            let _ = writeln!(s, "{a} -> {b} p={p}");
        }
    }
    s
}
