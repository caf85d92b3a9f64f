//! The shipped fixture corpus under `fixtures/`, generated from the library constructors.

use recur_artin::{example_a2_diagram, LabeledGraph};
use recur_complex::fixtures as cx;
use recur_diagrams::fixtures as dg;
use recur_diagrams::dihedral_presentation;

/// Complex fixtures; the closed 3-page book is the thick one.
pub const COMPLEXES: [&str; 13] = [
    "pillow.cx",
    "three-page-book.cx",
    "four-page-book.cx",
    "open-book.cx",
    "equilateral-theta.cx",
    "two-pillows.cx",
    "pillow-and-book.cx",
    "hex-disk.cx",
    "torus8.cx",
    "square.cx",
    "barycentric-triangle.cx",
    "lone-triangle.cx",
    "lone-q244.cx",
];

fn presentation_text(p: &recur_diagrams::Presentation) -> String {
    let rels: Vec<String> = p.relators.iter().map(|r| p.show(r)).collect();
    format!("< {} | {} >\n", p.alphabet.0.join(", "), rels.join(", "))
}

/// Every fixture file: name and contents.
pub fn shipped() -> Vec<(String, String)> {
    let complexes = [
        cx::pillow(),
        cx::closed_book(3),
        cx::closed_book(4),
        cx::open_book(),
        cx::equilateral_theta(),
        cx::two_pillows(),
        cx::pillow_and_book(),
        cx::hex_disk(),
        cx::torus8(),
        cx::square(),
        cx::barycentric_triangle(),
        cx::lone_triangle(),
        cx::lone_q244(),
    ];
    let mut out: Vec<(String, String)> =
        COMPLEXES.iter().zip(complexes).map(|(n, c)| (n.to_string(), c.to_json() + "\n")).collect();
    let diagrams = [
        ("grid-2x2.dg", dg::grid(2, 2)),
        ("grid-3x3.dg", dg::grid(3, 3)),
        ("ladder-3.dg", dg::ladder(3)),
        ("l-tromino.dg", dg::l_tromino()),
        ("square.dg", dg::square()),
        ("mirror-pair.dg", dg::mirror_pair()),
        ("example-a2.dg", example_a2_diagram(3).expect("m = 3 diagram exists")),
    ];
    out.extend(diagrams.into_iter().map(|(n, d)| (n.to_string(), d.to_json() + "\n")));
    out.push(("commutator.pres".into(), "< a, b | abAB >\n".into()));
    out.push(("dihedral-4.pres".into(), presentation_text(&dihedral_presentation(4))));
    out.push(("dihedral-5.pres".into(), presentation_text(&dihedral_presentation(5))));
    out.push(("b6-violator.pres".into(), "< a, b | abab, baba >\n".into()));
    let graphs = [
        ("edge-2.gr", LabeledGraph::dihedral(2)),
        ("edge-3.gr", LabeledGraph::dihedral(3)),
        ("edge-4.gr", LabeledGraph::dihedral(4)),
        ("path-3.gr", LabeledGraph::path(3)),
        ("triangle-233.gr", LabeledGraph::triangle(2, 3, 3)),
        ("triangle-333.gr", LabeledGraph::triangle(3, 3, 3)),
        ("triangle-444.gr", LabeledGraph::triangle(4, 4, 4)),
    ];
    for (n, g) in graphs {
        let mut s = format!("vertices {}\n", g.vertices.join(" "));
        for &(a, b, m) in &g.edges {
            s += &format!("{} {} {m}\n", g.vertices[a], g.vertices[b]);
        }
        out.push((n.to_string(), s));
    }
    out
}
