//! Small hand-built complexes used by tests, examples and the CLI.

use crate::{Complex, RawComplex, RawEdge, RawFace, SubdivisionMode};

/// Builds a complex from `(id, from, to, length)` edges and `(id, "e0+ e1- ...", shape)` faces.
pub fn build(vertices: &[&str], edges: &[(&str, &str, &str, &str)], faces: &[(&str, &str, Option<&str>)]) -> Complex {
    let raw = RawComplex {
        vertices: vertices.iter().map(|s| s.to_string()).collect(),
        edges: edges
            .iter()
            .map(|(id, a, b, l)| RawEdge { id: id.to_string(), ends: [a.to_string(), b.to_string()], length: l.to_string() })
            .collect(),
        faces: faces
            .iter()
            .map(|(id, bd, shape)| RawFace {
                id: id.to_string(),
                boundary: bd
                    .split_whitespace()
                    .map(|t| {
                        let (e, s) = t.split_at(t.len() - 1);
                        (e.to_string(), s.to_string())
                    })
                    .collect(),
                shape: shape.map(|s| s.to_string()),
                scale: None,
                sides: None,
            })
            .collect(),
    };
    Complex::from_raw(&raw).expect("fixture is valid")
}

fn with_sides(mut c: Complex, face: usize, sides: &[usize]) -> Complex {
    let mut raw = c.to_raw();
    raw.faces[face].sides = Some(sides.to_vec());
    c = Complex::from_raw(&raw).expect("fixture is valid");
    c
}

const Q_EDGES: [(&str, &str, &str, &str); 3] = [("e0", "v0", "v1", "sqrt2"), ("e1", "v1", "v2", "1"), ("e2", "v2", "v0", "1")];

/// One unit equilateral triangle.
pub fn lone_triangle() -> Complex {
    build(&["v0", "v1", "v2"], &[("e0", "v0", "v1", "1"), ("e1", "v1", "v2", "1"), ("e2", "v2", "v0", "1")], &[(
        "T",
        "e0+ e1+ e2+",
        Some("Equilateral"),
    )])
}

/// One right isosceles triangle, model orientation.
pub fn lone_q244() -> Complex {
    build(&["v0", "v1", "v2"], &Q_EDGES, &[("T", "e0+ e1+ e2+", Some("TriQ244"))])
}

/// Two right isosceles triangles glued along all three edges.
pub fn pillow() -> Complex {
    let c = build(&["v0", "v1", "v2"], &Q_EDGES, &[
        ("A", "e0+ e1+ e2+", Some("TriQ244")),
        ("B", "e0- e2- e1-", Some("TriQ244")),
    ]);
    with_sides(c, 1, &[0, 2, 1])
}

/// `pages` right isosceles triangles sharing all three edges.
pub fn closed_book(pages: usize) -> Complex {
    let ids: Vec<String> = (0..pages).map(|i| format!("P{i}")).collect();
    let faces: Vec<(&str, &str, Option<&str>)> = ids.iter().map(|id| (id.as_str(), "e0+ e1+ e2+", Some("TriQ244"))).collect();
    build(&["v0", "v1", "v2"], &Q_EDGES, &faces)
}

/// Pillow with a third triangle on the same three edges.
pub fn theta() -> Complex {
    closed_book(3)
}

/// Three right isosceles triangles sharing only their hypotenuse.
pub fn open_book() -> Complex {
    let mut verts = vec!["v0".to_string(), "v1".to_string()];
    let mut edges = vec![("e0".to_string(), "v0".to_string(), "v1".to_string(), "sqrt2")];
    let mut faces = Vec::new();
    for p in 0..3 {
        let apex = format!("w{p}");
        verts.push(apex.clone());
        edges.push((format!("a{p}"), "v1".into(), apex.clone(), "1"));
        edges.push((format!("b{p}"), apex, "v0".into(), "1"));
        faces.push((format!("P{p}"), format!("e0+ a{p}+ b{p}+")));
    }
    let vs: Vec<&str> = verts.iter().map(|s| s.as_str()).collect();
    let es: Vec<(&str, &str, &str, &str)> = edges.iter().map(|(a, b, c, d)| (a.as_str(), b.as_str(), c.as_str(), *d)).collect();
    let fs: Vec<(&str, &str, Option<&str>)> = faces.iter().map(|(a, b)| (a.as_str(), b.as_str(), Some("TriQ244"))).collect();
    build(&vs, &es, &fs)
}

/// Three equilateral triangles sharing all edges; thick but with no anchors.
pub fn equilateral_theta() -> Complex {
    build(&["v0", "v1", "v2"], &[("e0", "v0", "v1", "1"), ("e1", "v1", "v2", "1"), ("e2", "v2", "v0", "1")], &[
        ("P0", "e0+ e1+ e2+", Some("Equilateral")),
        ("P1", "e0+ e1+ e2+", Some("Equilateral")),
        ("P2", "e0+ e1+ e2+", Some("Equilateral")),
    ])
}

/// Disjoint union of two pillows.
pub fn two_pillows() -> Complex {
    disjoint(&pillow(), &pillow())
}

/// A pillow and an open book sharing one vertex.
pub fn pillow_and_book() -> Complex {
    let mut raw = disjoint(&pillow(), &open_book()).to_raw();
    let (keep, drop) = ("a.v0".to_string(), "b.v0".to_string());
    raw.vertices.retain(|v| *v != drop);
    for e in &mut raw.edges {
        for end in &mut e.ends {
            if *end == drop {
                *end = keep.clone();
            }
        }
    }
    Complex::from_raw(&raw).expect("fixture is valid")
}

/// Prefixes ids with `a.` and `b.` and places the complexes side by side.
pub fn disjoint(x: &Complex, y: &Complex) -> Complex {
    let mut out = RawComplex::default();
    for (p, c) in [("a", x), ("b", y)] {
        let raw = c.to_raw();
        out.vertices.extend(raw.vertices.iter().map(|v| format!("{p}.{v}")));
        out.edges.extend(raw.edges.into_iter().map(|mut e| {
            e.id = format!("{p}.{}", e.id);
            e.ends = e.ends.map(|v| format!("{p}.{v}"));
            e
        }));
        out.faces.extend(raw.faces.into_iter().map(|mut f| {
            f.id = format!("{p}.{}", f.id);
            for s in &mut f.boundary {
                s.0 = format!("{p}.{}", s.0);
            }
            f
        }));
    }
    Complex::from_raw(&out).expect("fixture is valid")
}

/// Six unit equilateral triangles around an interior vertex.
pub fn hex_disk() -> Complex {
    let mut verts = vec!["c".to_string()];
    let mut edges = Vec::new();
    let mut faces = Vec::new();
    for i in 0..6 {
        verts.push(format!("p{i}"));
        edges.push((format!("s{i}"), "c".to_string(), format!("p{i}")));
        edges.push((format!("r{i}"), format!("p{i}"), format!("p{}", (i + 1) % 6)));
        faces.push((format!("T{i}"), format!("s{i}+ r{i}+ s{}-", (i + 1) % 6)));
    }
    let vs: Vec<&str> = verts.iter().map(|s| s.as_str()).collect();
    let es: Vec<(&str, &str, &str, &str)> = edges.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str(), "1")).collect();
    let fs: Vec<(&str, &str, Option<&str>)> = faces.iter().map(|(a, b)| (a.as_str(), b.as_str(), Some("Equilateral"))).collect();
    build(&vs, &es, &fs)
}

/// Flat torus from 8 unit equilateral triangles on a 2x2 lattice quotient.
pub fn torus8() -> Complex {
    let v = |i: usize, j: usize| format!("v{}{}", i % 2, j % 2);
    let mut verts = Vec::new();
    let mut edges = Vec::new();
    let mut faces = Vec::new();
    for i in 0..2 {
        for j in 0..2 {
            verts.push(v(i, j));
            edges.push((format!("h{i}{j}"), v(i, j), v(i + 1, j)));
            edges.push((format!("u{i}{j}"), v(i, j), v(i, j + 1)));
            edges.push((format!("d{i}{j}"), v(i, j), v(i + 1, j + 1)));
        }
    }
    for i in 0..2 {
        for j in 0..2 {
            faces.push((format!("L{i}{j}"), format!("h{i}{j}+ u{}{j}+ d{i}{j}-", (i + 1) % 2)));
            faces.push((format!("U{i}{j}"), format!("d{i}{j}+ h{i}{}- u{i}{j}-", (j + 1) % 2)));
        }
    }
    let vs: Vec<&str> = verts.iter().map(|s| s.as_str()).collect();
    let es: Vec<(&str, &str, &str, &str)> = edges.iter().map(|(a, b, c)| (a.as_str(), b.as_str(), c.as_str(), "1")).collect();
    let fs: Vec<(&str, &str, Option<&str>)> = faces.iter().map(|(a, b)| (a.as_str(), b.as_str(), Some("Equilateral"))).collect();
    build(&vs, &es, &fs)
}

/// A single unit square.
pub fn square() -> Complex {
    build(
        &["v0", "v1", "v2", "v3"],
        &[("e0", "v0", "v1", "1"), ("e1", "v1", "v2", "1"), ("e2", "v2", "v3", "1"), ("e3", "v3", "v0", "1")],
        &[("S", "e0+ e1+ e2+ e3+", Some("Gon(4)"))],
    )
}

/// Barycentric subdivision of one equilateral triangle: six TriH236 faces.
pub fn barycentric_triangle() -> Complex {
    lone_triangle().subdivide(SubdivisionMode::Barycentric).expect("barycentric never fails")
}
