//! Small diagrams used by tests, examples and the command line.

use std::collections::BTreeSet;

use crate::diagram::{PlanarDiagram, RawDEdge, RawDiagram, RawRegion};

fn darts(s: &str) -> Vec<(String, String)> {
    s.split_whitespace()
        .map(|t| {
            let (e, o) = t.split_at(t.len() - 1);
            (e.to_string(), o.to_string())
        })
        .collect()
}

/// Builds a diagram from edge tuples `(id, from, to, label)` and cycles written as `"e1+ e2-"`.
pub fn build(gens: &[&str], edges: &[(&str, &str, &str, &str)], regions: &[(&str, &str)], outer: &str) -> PlanarDiagram {
    let mut vertices: Vec<String> = Vec::new();
    for &(_, a, b, _) in edges {
        for v in [a, b] {
            if !vertices.iter().any(|x| x == v) {
                vertices.push(v.to_string());
            }
        }
    }
    let raw = RawDiagram {
        generators: gens.iter().map(|s| s.to_string()).collect(),
        vertices,
        edges: edges
            .iter()
            .map(|&(id, a, b, l)| RawDEdge { id: id.into(), from: a.into(), to: b.into(), label: l.into() })
            .collect(),
        regions: regions.iter().map(|&(id, b)| RawRegion { id: id.into(), boundary: darts(b) }).collect(),
        outer: darts(outer),
    };
    PlanarDiagram::from_raw(&raw).expect("fixture is well formed")
}

/// Unit squares at the given (row, column) cells; horizontal edges read `a` left to right,
/// vertical edges read `b` upwards, so every square reads abAB from its lower-left corner.
/// The cell set must be connected with no pinch vertices.
pub fn cells(cs: &[(usize, usize)]) -> PlanarDiagram {
    let set: BTreeSet<(usize, usize)> = cs.iter().copied().collect();
    let mut edges: BTreeSet<(String, String, String, String)> = BTreeSet::new();
    let v = |i: usize, j: usize| format!("p{i}_{j}");
    let h = |i: usize, j: usize| format!("h{i}_{j}");
    let u = |i: usize, j: usize| format!("u{i}_{j}");
    let mut regions = Vec::new();
    for &(i, j) in &set {
        edges.insert((h(i, j), v(i, j), v(i, j + 1), "a".into()));
        edges.insert((h(i + 1, j), v(i + 1, j), v(i + 1, j + 1), "a".into()));
        edges.insert((u(i, j), v(i, j), v(i + 1, j), "b".into()));
        edges.insert((u(i, j + 1), v(i, j + 1), v(i + 1, j + 1), "b".into()));
        regions.push((format!("R{i}_{j}"), format!("{}+ {}+ {}- {}-", h(i, j), u(i, j + 1), h(i + 1, j), u(i, j))));
    }
    // Outer darts: those not used by any square, chained tail to head.
    let used: BTreeSet<(String, bool)> = regions
        .iter()
        .flat_map(|(_, b)| darts(b).into_iter().map(|(e, o)| (e, o == "+")))
        .collect();
    let free: Vec<(String, bool, String, String)> = edges
        .iter()
        .flat_map(|(id, a, b, _)| {
            [(id.clone(), true, a.clone(), b.clone()), (id.clone(), false, b.clone(), a.clone())]
        })
        .filter(|(id, f, _, _)| !used.contains(&(id.clone(), *f)))
        .collect();
    let mut outer = vec![free[0].clone()];
    while outer.len() < free.len() {
        let head = outer.last().unwrap().3.clone();
        let next: Vec<_> = free.iter().filter(|d| d.2 == head).collect();
        assert_eq!(next.len(), 1, "pinch vertex {head}");
        outer.push(next[0].clone());
    }
    let outer: Vec<String> = outer.iter().map(|(id, f, _, _)| format!("{id}{}", if *f { "+" } else { "-" })).collect();
    let edge_refs: Vec<(&str, &str, &str, &str)> =
        edges.iter().map(|(a, b, c, d)| (a.as_str(), b.as_str(), c.as_str(), d.as_str())).collect();
    let region_refs: Vec<(&str, &str)> = regions.iter().map(|(a, b)| (a.as_str(), b.as_str())).collect();
    build(&["a", "b"], &edge_refs, &region_refs, &outer.join(" "))
}

pub fn grid(rows: usize, cols: usize) -> PlanarDiagram {
    let cs: Vec<(usize, usize)> = (0..rows).flat_map(|i| (0..cols).map(move |j| (i, j))).collect();
    cells(&cs)
}

pub fn ladder(n: usize) -> PlanarDiagram {
    grid(1, n)
}

pub fn l_tromino() -> PlanarDiagram {
    cells(&[(0, 0), (0, 1), (1, 0)])
}

pub fn square() -> PlanarDiagram {
    grid(1, 1)
}

/// Two squares across a shared `b` edge whose labels read as mirror images.
pub fn mirror_pair() -> PlanarDiagram {
    build(
        &["a", "b"],
        &[
            ("h0", "p0", "p1", "a"),
            ("h1", "p3", "p4", "a"),
            ("u0", "p0", "p3", "b"),
            ("u1", "p1", "p4", "b"),
            ("g0", "p2", "p1", "a"),
            ("g1", "p5", "p4", "a"),
            ("u2", "p2", "p5", "b"),
        ],
        &[("D1", "h0+ u1+ h1- u0-"), ("D2", "g0- u2+ g1+ u1-")],
        "u0+ h1+ g1- u2- g0+ h0-",
    )
}

/// One region with boundary p_m(a,b) p_m(b,a)^-1, drawn as a 2m-gon.
pub fn dihedral_polygon(m: usize) -> PlanarDiagram {
    let w = crate::dihedral::dihedral_presentation(m).relators[0].clone();
    let n = w.len();
    let edges: Vec<(String, String, String, String)> = w
        .iter()
        .enumerate()
        .map(|(k, &l)| {
            let (from, to) = if l > 0 { (k, (k + 1) % n) } else { ((k + 1) % n, k) };
            let name = if l.abs() == 1 { "a" } else { "b" };
            (format!("e{k}"), format!("q{from}"), format!("q{to}"), name.to_string())
        })
        .collect();
    let sign = |k: usize, flip: bool| if (w[k] > 0) != flip { "+" } else { "-" };
    let region: Vec<String> = (0..n).map(|k| format!("e{k}{}", sign(k, false))).collect();
    let outer: Vec<String> = (0..n).rev().map(|k| format!("e{k}{}", sign(k, true))).collect();
    let edge_refs: Vec<(&str, &str, &str, &str)> =
        edges.iter().map(|(a, b, c, d)| (a.as_str(), b.as_str(), c.as_str(), d.as_str())).collect();
    build(&["a", "b"], &edge_refs, &[("D", &region.join(" "))], &outer.join(" "))
}

/// The octagon for m = 4 with a second region glued across the two edges at its
/// first separating vertex, which becomes interior.
pub fn buried_dihedral() -> PlanarDiagram {
    let mut raw = dihedral_polygon(4).to_raw();
    raw.vertices.push("x".into());
    for (id, from, to) in [("f1", "q7", "x"), ("f2", "x", "q1")] {
        raw.edges.push(RawDEdge { id: id.into(), from: from.into(), to: to.into(), label: "b".into() });
    }
    raw.regions.push(RawRegion { id: "E".into(), boundary: darts("e0- e7+ f1+ f2+") });
    let inner: Vec<(String, String)> = raw.outer.drain(..).filter(|(e, _)| e != "e0" && e != "e7").collect();
    raw.outer = darts("f2- f1-");
    raw.outer.extend(inner);
    PlanarDiagram::from_raw(&raw).expect("fixture is well formed")
}
