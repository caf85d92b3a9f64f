//! The twelve region diagram over the triangle (2, m, m) whose hypergraph has a cycle.

use std::collections::BTreeSet;

use recur_complex::Dart;
use recur_diagrams::word::{gen_of, inverse, letter, rotate};
use recur_diagrams::{validate_diagram, Alphabet, DEdge, DiagramVerdict, Letter, PlanarDiagram, Region, Word};

use crate::graph::{artin_relator, standard_presentation, LabeledGraph, Target};
use crate::hypergraph::{all_hypergraphs, HyperEdge, Hypergraph};
use crate::ArtinError;

const A: usize = 0;
const B: usize = 1;
const C: usize = 2;

/// Block vertices around the central 2x2 square block, counterclockwise from the lower left:
/// corners c0..c3 at even positions and side midpoints at odd positions.
const RING: [(usize, usize); 8] = [(0, 0), (1, 0), (2, 0), (2, 1), (2, 2), (1, 2), (0, 2), (0, 1)];

/// Outer regions in the order they are glued, with their block edge `(x, y, letter)`: the
/// region runs along the block from ring vertex x to ring vertex y.
const OUTER: [(&str, usize, usize, Letter); 8] = [
    ("R2", 3, 2, -2),
    ("R1", 4, 3, -2),
    ("T2", 5, 4, 1),
    ("T1", 6, 5, 1),
    ("L1", 7, 6, 2),
    ("L2", 0, 7, 2),
    ("B1", 1, 0, -1),
    ("B2", 2, 1, -1),
];

fn pname((x, y): (usize, usize)) -> String {
    format!("p{y}_{x}")
}

fn junction_len(ring: usize, m: u32) -> usize {
    if ring.is_multiple_of(2) {
        1
    } else {
        m as usize - 1
    }
}

fn candidates(block: Letter, other: usize, m: u32) -> Vec<Word> {
    let x = gen_of(block);
    let r = artin_relator(x.min(other), x.max(other), m);
    let mut set = BTreeSet::new();
    for w in [r.clone(), inverse(&r)] {
        for k in 0..w.len() {
            set.insert(rotate(&w, k));
        }
    }
    set.into_iter().filter(|w| w[0] == block).collect()
}

/// Every consistent labelling of the eight outer regions, in lexicographic order.
fn labellings(m: u32) -> Vec<Vec<Word>> {
    let n = 2 * m as usize;
    let cands: Vec<Vec<Word>> =
        OUTER.iter().map(|&(_, _, _, l)| candidates(l, C, m)).collect();
    let fits = |prev: &Word, prev_k: usize, w: &Word, k: usize| {
        let out = junction_len(OUTER[k].2, m);
        let inn = junction_len(OUTER[prev_k].1, m);
        out == inn && inverse(&prev[n - inn..]) == w[1..1 + out]
    };
    let mut out = Vec::new();
    let mut stack: Vec<Word> = Vec::new();
    fn go(
        k: usize,
        stack: &mut Vec<Word>,
        cands: &[Vec<Word>],
        fits: &dyn Fn(&Word, usize, &Word, usize) -> bool,
        out: &mut Vec<Vec<Word>>,
    ) {
        if k == cands.len() {
            if fits(&stack[k - 1], k - 1, &stack[0], 0) {
                out.push(stack.clone());
            }
            return;
        }
        for w in &cands[k] {
            if k > 0 && !fits(&stack[k - 1], k - 1, w, k) {
                continue;
            }
            stack.push(w.clone());
            go(k + 1, stack, cands, fits, out);
            stack.pop();
        }
    }
    go(0, &mut stack, &cands, &fits, &mut out);
    out
}

struct Builder {
    vertices: Vec<String>,
    edges: Vec<DEdge>,
}

impl Builder {
    fn vertex(&mut self, name: String) -> usize {
        match self.vertices.iter().position(|v| *v == name) {
            Some(i) => i,
            None => {
                self.vertices.push(name);
                self.vertices.len() - 1
            }
        }
    }

    /// A new path through `verts` reading `word`; edges are oriented to carry positive labels.
    fn path(&mut self, prefix: &str, verts: &[usize], word: &[Letter]) -> Vec<Dart> {
        word.iter()
            .enumerate()
            .map(|(i, &l)| {
                let (from, to, fwd) = if l > 0 { (verts[i], verts[i + 1], true) } else { (verts[i + 1], verts[i], false) };
                self.edges.push(DEdge { id: format!("{prefix}{i}"), from, to, label: l.abs() });
                Dart::new(self.edges.len() - 1, fwd)
            })
            .collect()
    }
}

fn reversed(ds: &[Dart]) -> Vec<Dart> {
    ds.iter().rev().map(|d| Dart::new(d.edge, !d.forward)).collect()
}

fn assemble(m: u32, words: &[Word]) -> PlanarDiagram {
    let n = 2 * m as usize;
    let mut b = Builder { vertices: Vec::new(), edges: Vec::new() };
    for y in 0..3 {
        for x in 0..3 {
            b.vertex(pname((x, y)));
        }
    }
    let idx = |x: usize, y: usize| 3 * y + x;
    let mut block = std::collections::HashMap::new();
    for y in 0..3 {
        for x in 0..2 {
            block.insert((x, y, true), b.edges.len());
            b.edges.push(DEdge { id: format!("h{y}_{x}"), from: idx(x, y), to: idx(x + 1, y), label: letter(A, false) });
        }
    }
    for y in 0..2 {
        for x in 0..3 {
            block.insert((x, y, false), b.edges.len());
            b.edges.push(DEdge { id: format!("u{y}_{x}"), from: idx(x, y), to: idx(x, y + 1), label: letter(B, false) });
        }
    }
    let mut regions = Vec::new();
    for y in 0..2 {
        for x in 0..2 {
            regions.push(Region {
                id: format!("S{y}_{x}"),
                boundary: vec![
                    Dart::new(block[&(x, y, true)], true),
                    Dart::new(block[&(x + 1, y, false)], true),
                    Dart::new(block[&(x, y + 1, true)], false),
                    Dart::new(block[&(x, y, false)], false),
                ],
            });
        }
    }
    let block_dart = |from: (usize, usize), to: (usize, usize)| {
        if from.1 == to.1 {
            let x = from.0.min(to.0);
            Dart::new(block[&(x, from.1, true)], from.0 < to.0)
        } else {
            let y = from.1.min(to.1);
            Dart::new(block[&(from.0, y, false)], from.1 < to.1)
        }
    };
    // Junctions leave the block outward; region k reads the one at its y end going out.
    let mut outer_tips = [0usize; 8];
    let mut junctions: Vec<Vec<Dart>> = vec![Vec::new(); 8];
    let mut outer_paths: Vec<Vec<Dart>> = Vec::new();
    for (k, &(_, _, y, _)) in OUTER.iter().enumerate() {
        let len = junction_len(y, m);
        let mut verts = vec![b.vertex(pname(RING[y]))];
        for i in 1..len {
            verts.push(b.vertex(format!("j{y}_{i}")));
        }
        verts.push(b.vertex(format!("o{y}")));
        outer_tips[y] = *verts.last().unwrap();
        junctions[y] = b.path(&format!("j{y}_"), &verts, &words[k][1..1 + len]);
    }
    for (k, &(id, x, y, _)) in OUTER.iter().enumerate() {
        let (jy, jx) = (junction_len(y, m), junction_len(x, m));
        let mut verts = vec![outer_tips[y]];
        for i in 1..m as usize - 1 {
            verts.push(b.vertex(format!("t{k}_{i}")));
        }
        verts.push(outer_tips[x]);
        let path = b.path(&format!("t{k}_"), &verts, &words[k][1 + jy..n - jx]);
        let mut boundary = vec![block_dart(RING[x], RING[y])];
        boundary.extend(&junctions[y]);
        boundary.extend(&path);
        boundary.extend(reversed(&junctions[x]));
        regions.push(Region { id: id.to_string(), boundary });
        outer_paths.push(path);
    }
    let mut outer = Vec::new();
    for k in std::iter::once(0).chain((1..8).rev()) {
        outer.extend(reversed(&outer_paths[k]));
    }
    PlanarDiagram { alphabet: Alphabet::new(&["a", "b", "c"]), vertices: b.vertices, edges: b.edges, regions, outer }
}

pub fn a2_graph(m: u32) -> LabeledGraph {
    LabeledGraph::triangle(2, m, m)
}

/// The diagram for labels m_ab = 2 and m_bc = m_ca = m; the first labelling (in
/// lexicographic order) that validates as reduced.
pub fn example_a2_diagram(m: u32) -> Result<PlanarDiagram, ArtinError> {
    if m < 3 {
        return Err(ArtinError::BadLabel(m));
    }
    let p = standard_presentation(&a2_graph(m), Target::Artin);
    labellings(m)
        .into_iter()
        .map(|ws| assemble(m, &ws))
        .find(|d| {
            let v = validate_diagram(d, &p);
            v.valid() && v.reduced()
        })
        .ok_or_else(|| ArtinError::Malformed(format!("no reduced labelling for m = {m}")))
}

#[derive(Debug, Clone)]
pub struct A2Report {
    pub m: u32,
    pub diagram: PlanarDiagram,
    pub verdict: DiagramVerdict,
    pub central_labels: Vec<String>,
    pub hypergraphs: Vec<Hypergraph>,
    /// Region ids along the first hypergraph cycle found, if any.
    pub cycle: Option<Vec<String>>,
    /// Whether some hypergraph cycle passes through a central square.
    pub cycle_through_squares: bool,
}

impl A2Report {
    pub fn regions(&self) -> usize {
        self.diagram.regions.len()
    }

    pub fn tree(&self) -> bool {
        self.hypergraphs.iter().all(|h| h.is_forest)
    }

    pub fn render(&self) -> String {
        let mut s = format!("12-region example over the triangle (2, {m}, {m})\n", m = self.m);
        s += &format!("regions: {}\n", self.regions());
        s += &format!("central labels: {}\n", self.central_labels.join(" "));
        s += &format!("valid: {}\nreduced: {}\n", self.verdict.valid(), self.verdict.reduced());
        s += &format!("hypergraph components: {}\n", self.hypergraphs.len());
        match &self.cycle {
            Some(c) => s += &format!("hypergraph cycle of length {}: {}\n", c.len(), c.join(" ")),
            None => s += "hypergraph cycle: none\n",
        }
        s += &format!("cycle through the central squares: {}\n", self.cycle_through_squares);
        s += &format!("hypergraph is a tree: {}\n", self.tree());
        s
    }
}

pub fn example_a2_report(m: u32) -> Result<A2Report, ArtinError> {
    let diagram = example_a2_diagram(m)?;
    let verdict = validate_diagram(&diagram, &standard_presentation(&a2_graph(m), Target::Artin));
    let complex = diagram.to_complex()?;
    let hypergraphs = all_hypergraphs(&complex)?;
    let names = |cyc: &[HyperEdge]| cyc.iter().map(|h| complex.faces[h.face].id.clone()).collect::<Vec<_>>();
    let cycle = hypergraphs.iter().find_map(|h| h.cycle.as_deref()).map(names);
    let squares: BTreeSet<usize> = (0..4).collect();
    let cycle_through_squares =
        hypergraphs.iter().filter_map(|h| h.cycle.as_ref()).any(|c| c.iter().any(|h| squares.contains(&h.face)));
    Ok(A2Report {
        m,
        central_labels: (0..4).map(|r| diagram.alphabet.show(&diagram.region_word(r))).collect(),
        diagram,
        verdict,
        hypergraphs,
        cycle,
        cycle_through_squares,
    })
}
