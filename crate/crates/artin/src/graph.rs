use std::collections::BTreeSet;
use std::fmt;

use recur_diagrams::dihedral::p_m;
use recur_diagrams::word::{inverse, letter};
use recur_diagrams::{Alphabet, Presentation};
use serde::{Deserialize, Serialize};

use crate::ArtinError;

/// A simple graph on generators with edge labels m >= 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LabeledGraph {
    pub vertices: Vec<String>,
    /// `(s, t, m)` with `s < t`.
    pub edges: Vec<(usize, usize, u32)>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Target {
    Artin,
    Coxeter,
}

impl std::str::FromStr for Target {
    type Err = ArtinError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "artin" | "artin-dihedral" => Ok(Target::Artin),
            "coxeter" => Ok(Target::Coxeter),
            other => Err(ArtinError::BadGraph(format!("unknown target {other:?}"))),
        }
    }
}

#[derive(Debug, Clone, Serialize, Deserialize)]
struct RawGraph {
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String, u32)>,
}

impl LabeledGraph {
    pub fn new<S: AsRef<str>>(vertices: &[S], edges: &[(&str, &str, u32)]) -> Result<Self, ArtinError> {
        let vertices: Vec<String> = vertices.iter().map(|s| s.as_ref().to_string()).collect();
        let idx = |v: &str| {
            vertices.iter().position(|x| x == v).ok_or_else(|| ArtinError::UnknownGenerator(v.to_string()))
        };
        let mut out = Vec::new();
        let mut seen = BTreeSet::new();
        for &(a, b, m) in edges {
            let (s, t) = (idx(a)?, idx(b)?);
            if s == t {
                return Err(ArtinError::BadGraph(format!("loop at {a}")));
            }
            if m < 2 {
                return Err(ArtinError::BadGraph(format!("label {m} on {a}{b} is below 2")));
            }
            if !seen.insert((s.min(t), s.max(t))) {
                return Err(ArtinError::BadGraph(format!("repeated edge {a}{b}")));
            }
            out.push((s.min(t), s.max(t), m));
        }
        let uniq: BTreeSet<&String> = vertices.iter().collect();
        if uniq.len() != vertices.len() {
            return Err(ArtinError::BadGraph("repeated vertex".into()));
        }
        Ok(LabeledGraph { vertices, edges: out })
    }

    /// A single edge `a - b` with label m.
    pub fn dihedral(m: u32) -> Self {
        LabeledGraph::new(&["a", "b"], &[("a", "b", m)]).expect("valid label")
    }

    /// Triangle on a, b, c with labels m_ab, m_bc, m_ca.
    pub fn triangle(ab: u32, bc: u32, ca: u32) -> Self {
        LabeledGraph::new(&["a", "b", "c"], &[("a", "b", ab), ("b", "c", bc), ("c", "a", ca)]).expect("valid labels")
    }

    /// Path a - b - c with both labels m.
    pub fn path(m: u32) -> Self {
        LabeledGraph::new(&["a", "b", "c"], &[("a", "b", m), ("b", "c", m)]).expect("valid labels")
    }

    /// Accepts JSON `{"vertices": [...], "edges": [["a","b",4], ...]}` or lines
    /// `vertices a b c` followed by `a b 4`.
    pub fn parse(text: &str) -> Result<Self, ArtinError> {
        let t = text.trim();
        if t.starts_with('{') {
            let raw: RawGraph = serde_json::from_str(t).map_err(|e| ArtinError::BadGraph(e.to_string()))?;
            let edges: Vec<(&str, &str, u32)> = raw.edges.iter().map(|(a, b, m)| (a.as_str(), b.as_str(), *m)).collect();
            return LabeledGraph::new(&raw.vertices, &edges);
        }
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String, u32)> = Vec::new();
        for line in t.lines().map(|l| l.split('#').next().unwrap().trim()).filter(|l| !l.is_empty()) {
            let parts: Vec<&str> = line.split_whitespace().collect();
            match parts.as_slice() {
                ["vertices", rest @ ..] => vertices.extend(rest.iter().map(|s| s.to_string())),
                [a, b, m] => {
                    let m = m.parse().map_err(|_| ArtinError::BadGraph(format!("bad label in {line:?}")))?;
                    edges.push((a.to_string(), b.to_string(), m));
                }
                _ => return Err(ArtinError::BadGraph(format!("cannot read {line:?}"))),
            }
        }
        let edges: Vec<(&str, &str, u32)> = edges.iter().map(|(a, b, m)| (a.as_str(), b.as_str(), *m)).collect();
        LabeledGraph::new(&vertices, &edges)
    }

    pub fn to_json(&self) -> String {
        let raw = RawGraph {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|&(s, t, m)| (self.vertices[s].clone(), self.vertices[t].clone(), m))
                .collect(),
        };
        serde_json::to_string(&raw).expect("graph serializes")
    }

    pub fn label(&self, s: usize, t: usize) -> Option<u32> {
        let (s, t) = (s.min(t), s.max(t));
        self.edges.iter().find(|e| e.0 == s && e.1 == t).map(|e| e.2)
    }

    pub fn alphabet(&self) -> Alphabet {
        Alphabet::new(&self.vertices)
    }

    pub fn triangles(&self) -> Vec<[usize; 3]> {
        let n = self.vertices.len();
        let mut out = Vec::new();
        for a in 0..n {
            for b in a + 1..n {
                for c in b + 1..n {
                    if self.label(a, b).is_some() && self.label(b, c).is_some() && self.label(a, c).is_some() {
                        out.push([a, b, c]);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for LabeledGraph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let es: Vec<String> =
            self.edges.iter().map(|&(s, t, m)| format!("{}-{}:{m}", self.vertices[s], self.vertices[t])).collect();
        write!(f, "{{{}}} [{}]", self.vertices.join(","), es.join(" "))
    }
}

/// The relator p_m(s,t) p_m(t,s)^-1.
pub fn artin_relator(s: usize, t: usize, m: u32) -> Vec<i32> {
    let (x, y) = (letter(s, false), letter(t, false));
    let mut r = p_m(x, y, m as usize);
    r.extend(inverse(&p_m(y, x, m as usize)));
    r
}

pub fn standard_presentation(g: &LabeledGraph, target: Target) -> Presentation {
    let mut rels: Vec<Vec<i32>> = g.edges.iter().map(|&(s, t, m)| artin_relator(s, t, m)).collect();
    if target == Target::Coxeter {
        rels.extend((0..g.vertices.len()).map(|s| vec![letter(s, false); 2]));
    }
    Presentation::new(g.alphabet(), rels)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub struct GraphFlags {
    pub extra_large: bool,
    pub triangle_with_two: bool,
    pub two_dimensional: bool,
    pub square_with_three_twos: bool,
}

impl fmt::Display for GraphFlags {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "extra-large: {}\ntriangle with a 2: {}\ntwo-dimensional: {}\nsquare with three 2s: {}",
            self.extra_large, self.triangle_with_two, self.two_dimensional, self.square_with_three_twos
        )
    }
}

pub fn classify_graph(g: &LabeledGraph) -> GraphFlags {
    let tris = g.triangles();
    let lab = |a: usize, b: usize| g.label(a, b).unwrap() as u64;
    let two_dimensional = tris.iter().all(|&[a, b, c]| {
        let (x, y, z) = (lab(a, b), lab(b, c), lab(a, c));
        y * z + x * z + x * y <= x * y * z
    });
    let triangle_with_two = tris.iter().any(|&[a, b, c]| [lab(a, b), lab(b, c), lab(a, c)].contains(&2));
    let n = g.vertices.len();
    let mut square_with_three_twos = false;
    for a in 0..n {
        for b in 0..n {
            for c in 0..n {
                for d in 0..n {
                    let vs = [a, b, c, d];
                    if vs.iter().collect::<BTreeSet<_>>().len() < 4 {
                        continue;
                    }
                    let ls: Option<Vec<u32>> = (0..4).map(|i| g.label(vs[i], vs[(i + 1) % 4])).collect();
                    if let Some(ls) = ls {
                        square_with_three_twos |= ls.iter().filter(|&&m| m == 2).count() >= 3;
                    }
                }
            }
        }
    }
    GraphFlags {
        extra_large: g.edges.iter().all(|e| e.2 >= 4),
        triangle_with_two,
        two_dimensional,
        square_with_three_twos,
    }
}
