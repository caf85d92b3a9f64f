use std::collections::{BTreeSet, HashMap};

use recur_complex::{RawComplex, RawEdge, RawFace};
use recur_complex::{Complex, Dart};
use serde::{Deserialize, Serialize};

use crate::presentation::Presentation;
use crate::word::{inverse, Alphabet, Letter, Word};
use crate::DiagramError;

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DEdge {
    pub id: String,
    pub from: usize,
    pub to: usize,
    pub label: Letter,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Region {
    pub id: String,
    /// Counterclockwise boundary cycle.
    pub boundary: Vec<Dart>,
}

/// A planar 2-complex with polygonal regions.
///
/// Every cycle, including `outer`, keeps its face on the left, so each dart
/// is used by exactly one cycle. The boundary word of the disc is the inverse
/// of the outer cycle's word.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PlanarDiagram {
    pub alphabet: Alphabet,
    pub vertices: Vec<String>,
    pub edges: Vec<DEdge>,
    pub regions: Vec<Region>,
    pub outer: Vec<Dart>,
}

/// Which cycle a dart belongs to.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    Region(usize),
    Outer,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawDEdge {
    pub id: String,
    pub from: String,
    pub to: String,
    pub label: String,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawRegion {
    pub id: String,
    pub boundary: Vec<(String, String)>,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct RawDiagram {
    pub generators: Vec<String>,
    pub vertices: Vec<String>,
    pub edges: Vec<RawDEdge>,
    pub regions: Vec<RawRegion>,
    pub outer: Vec<(String, String)>,
}

pub fn rev(d: Dart) -> Dart {
    Dart::new(d.edge, !d.forward)
}

impl PlanarDiagram {
    pub fn from_raw(raw: &RawDiagram) -> Result<Self, DiagramError> {
        let alphabet = Alphabet::new(&raw.generators);
        let vidx: HashMap<&str, usize> = raw.vertices.iter().enumerate().map(|(i, v)| (v.as_str(), i)).collect();
        let vertex = |id: &str| vidx.get(id).copied().ok_or(DiagramError::Unknown { kind: "vertex", id: id.into() });
        let mut edges = Vec::new();
        for e in &raw.edges {
            let w = alphabet.parse(&e.label)?;
            if w.len() != 1 {
                return Err(DiagramError::BadWord { word: e.label.clone(), pos: 0, reason: "edge label must be one letter".into() });
            }
            edges.push(DEdge { id: e.id.clone(), from: vertex(&e.from)?, to: vertex(&e.to)?, label: w[0] });
        }
        let eidx: HashMap<&str, usize> = raw.edges.iter().enumerate().map(|(i, e)| (e.id.as_str(), i)).collect();
        let cycle = |b: &[(String, String)]| -> Result<Vec<Dart>, DiagramError> {
            b.iter()
                .map(|(e, s)| {
                    let edge = *eidx.get(e.as_str()).ok_or(DiagramError::Unknown { kind: "edge", id: e.clone() })?;
                    match s.as_str() {
                        "+" => Ok(Dart::new(edge, true)),
                        "-" => Ok(Dart::new(edge, false)),
                        _ => Err(DiagramError::Malformed(format!("orientation {s:?} on edge {e}"))),
                    }
                })
                .collect()
        };
        let regions = raw
            .regions
            .iter()
            .map(|r| Ok(Region { id: r.id.clone(), boundary: cycle(&r.boundary)? }))
            .collect::<Result<Vec<_>, DiagramError>>()?;
        Ok(PlanarDiagram { alphabet, vertices: raw.vertices.clone(), edges, regions, outer: cycle(&raw.outer)? })
    }

    pub fn to_raw(&self) -> RawDiagram {
        let cycle = |b: &[Dart]| {
            b.iter().map(|d| (self.edges[d.edge].id.clone(), if d.forward { "+" } else { "-" }.to_string())).collect()
        };
        RawDiagram {
            generators: self.alphabet.0.clone(),
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawDEdge {
                    id: e.id.clone(),
                    from: self.vertices[e.from].clone(),
                    to: self.vertices[e.to].clone(),
                    label: self.alphabet.show_letter(e.label),
                })
                .collect(),
            regions: self.regions.iter().map(|r| RawRegion { id: r.id.clone(), boundary: cycle(&r.boundary) }).collect(),
            outer: cycle(&self.outer),
        }
    }

    pub fn from_json(s: &str) -> Result<Self, DiagramError> {
        PlanarDiagram::from_raw(&serde_json::from_str(s)?)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("diagram serializes")
    }

    pub fn dart_start(&self, d: Dart) -> usize {
        let e = &self.edges[d.edge];
        if d.forward {
            e.from
        } else {
            e.to
        }
    }

    pub fn dart_end(&self, d: Dart) -> usize {
        self.dart_start(rev(d))
    }

    pub fn dart_label(&self, d: Dart) -> Letter {
        let l = self.edges[d.edge].label;
        if d.forward {
            l
        } else {
            -l
        }
    }

    pub fn cycle_word(&self, c: &[Dart]) -> Word {
        c.iter().map(|&d| self.dart_label(d)).collect()
    }

    pub fn region_word(&self, r: usize) -> Word {
        self.cycle_word(&self.regions[r].boundary)
    }

    /// Counterclockwise boundary label of the whole diagram.
    pub fn boundary_word(&self) -> Word {
        inverse(&self.cycle_word(&self.outer))
    }

    pub fn area(&self) -> usize {
        self.regions.len()
    }

    pub fn valence(&self, v: usize) -> usize {
        self.edges.iter().map(|e| (e.from == v) as usize + (e.to == v) as usize).sum()
    }

    /// Owner and position of every dart.
    pub fn sides(&self) -> HashMap<Dart, (Side, usize)> {
        let mut m = HashMap::new();
        for (ri, r) in self.regions.iter().enumerate() {
            for (k, &d) in r.boundary.iter().enumerate() {
                m.insert(d, (Side::Region(ri), k));
            }
        }
        for (k, &d) in self.outer.iter().enumerate() {
            m.insert(d, (Side::Outer, k));
        }
        m
    }

    pub fn cycle(&self, s: Side) -> &[Dart] {
        match s {
            Side::Region(r) => &self.regions[r].boundary,
            Side::Outer => &self.outer,
        }
    }

    /// Bookkeeping problems: dart usage, closed cycles, vertex links, connectivity and Euler characteristic.
    pub fn structure_problems(&self) -> Vec<String> {
        let mut out = Vec::new();
        let mut used: HashMap<Dart, usize> = HashMap::new();
        let cycles: Vec<(String, &[Dart])> = self
            .regions
            .iter()
            .map(|r| (format!("region {}", r.id), r.boundary.as_slice()))
            .chain(std::iter::once(("outer face".to_string(), self.outer.as_slice())))
            .collect();
        for (name, c) in &cycles {
            if c.is_empty() && name != "outer face" {
                out.push(format!("{name} has an empty boundary"));
            }
            for (k, &d) in c.iter().enumerate() {
                *used.entry(d).or_default() += 1;
                let next = c[(k + 1) % c.len()];
                if self.dart_end(d) != self.dart_start(next) {
                    out.push(format!("{name} is not a closed path at position {k}"));
                }
            }
        }
        for (ei, e) in self.edges.iter().enumerate() {
            for fwd in [true, false] {
                let n = used.get(&Dart::new(ei, fwd)).copied().unwrap_or(0);
                if n != 1 {
                    out.push(format!("edge {} {} used {n} times", e.id, if fwd { "+" } else { "-" }));
                }
            }
        }
        if !out.is_empty() {
            return out;
        }
        // Rotation at each vertex: rev(d_k) -> d_{k+1}; one orbit per vertex.
        let mut sigma: HashMap<Dart, Dart> = HashMap::new();
        for (_, c) in &cycles {
            for k in 0..c.len() {
                sigma.insert(rev(c[k]), c[(k + 1) % c.len()]);
            }
        }
        let mut seen = BTreeSet::new();
        let mut orbits = vec![0usize; self.vertices.len()];
        for ei in 0..self.edges.len() {
            for fwd in [true, false] {
                let d = Dart::new(ei, fwd);
                if seen.contains(&(d.edge, d.forward)) {
                    continue;
                }
                orbits[self.dart_start(d)] += 1;
                let mut x = d;
                while seen.insert((x.edge, x.forward)) {
                    x = sigma[&x];
                }
            }
        }
        for (v, &n) in orbits.iter().enumerate() {
            if n > 1 {
                out.push(format!("vertex {} has a disconnected link ({n} sectors)", self.vertices[v]));
            }
        }
        let mut uf: Vec<usize> = (0..self.vertices.len()).collect();
        for e in &self.edges {
            let (a, b) = (find(&mut uf, e.from), find(&mut uf, e.to));
            uf[a] = b;
        }
        let comps = (0..self.vertices.len()).filter(|&v| find(&mut uf, v) == v).count();
        if comps != 1 {
            out.push(format!("diagram has {comps} components"));
        }
        let chi = self.vertices.len() as i64 - self.edges.len() as i64 + self.regions.len() as i64 + 1;
        if chi != 2 {
            out.push(format!("V - E + F = {chi}, expected 2"));
        }
        out
    }

    /// Pairs of distinct regions across an edge whose labels mirror each other.
    pub fn mirror_pairs(&self) -> Vec<MirrorPair> {
        let sides = self.sides();
        let mut out = Vec::new();
        for (ei, e) in self.edges.iter().enumerate() {
            let (Some(&(Side::Region(r1), i)), Some(&(Side::Region(r2), j))) =
                (sides.get(&Dart::new(ei, true)), sides.get(&Dart::new(ei, false)))
            else {
                continue;
            };
            if r1 == r2 {
                continue;
            }
            let (b1, b2) = (&self.regions[r1].boundary, &self.regions[r2].boundary);
            let n = b1.len();
            if b2.len() != n {
                continue;
            }
            let mirror =
                (0..n).all(|k| self.dart_label(b1[(i + k) % n]) == -self.dart_label(b2[(j + n - k % n) % n]));
            if mirror {
                out.push(MirrorPair {
                    edge: e.id.clone(),
                    regions: (self.regions[r1].id.clone(), self.regions[r2].id.clone()),
                });
            }
        }
        out
    }

    /// The diagram as a 2-complex; regular polygons with 4, 6 or 12 sides get their shape tag.
    pub fn to_complex(&self) -> Result<Complex, DiagramError> {
        let raw = RawComplex {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    id: e.id.clone(),
                    ends: [self.vertices[e.from].clone(), self.vertices[e.to].clone()],
                    length: "1".into(),
                })
                .collect(),
            faces: self
                .regions
                .iter()
                .map(|r| {
                    let k = r.boundary.len();
                    RawFace {
                        id: r.id.clone(),
                        boundary: r
                            .boundary
                            .iter()
                            .map(|d| (self.edges[d.edge].id.clone(), if d.forward { "+" } else { "-" }.into()))
                            .collect(),
                        shape: matches!(k, 4 | 6 | 12).then(|| format!("Gon({k})")),
                        scale: None,
                        sides: None,
                    }
                })
                .collect(),
        };
        Ok(Complex::from_raw(&raw)?)
    }

    /// Relabels letters into another alphabet by generator name.
    pub fn translate_to(&self, target: &Alphabet) -> Option<PlanarDiagram> {
        let map: Option<Vec<usize>> = self.alphabet.0.iter().map(|g| target.index(g)).collect();
        let map = map?;
        let mut d = self.clone();
        for e in &mut d.edges {
            let g = map[crate::word::gen_of(e.label)];
            e.label = crate::word::letter(g, e.label < 0);
        }
        d.alphabet = target.clone();
        Some(d)
    }
}

pub(crate) fn find(uf: &mut [usize], mut x: usize) -> usize {
    while uf[x] != x {
        uf[x] = uf[uf[x]];
        x = uf[x];
    }
    x
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MirrorPair {
    pub edge: String,
    pub regions: (String, String),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DiagramVerdict {
    pub problems: Vec<String>,
    /// Regions whose label is not in the symmetrized relator set.
    pub unlabeled: Vec<String>,
    pub mirror_pairs: Vec<MirrorPair>,
}

impl DiagramVerdict {
    pub fn valid(&self) -> bool {
        self.problems.is_empty() && self.unlabeled.is_empty()
    }

    pub fn reduced(&self) -> bool {
        self.mirror_pairs.is_empty()
    }
}

pub fn validate_diagram(d: &PlanarDiagram, p: &Presentation) -> DiagramVerdict {
    let mut problems = d.structure_problems();
    let d = match d.translate_to(&p.alphabet) {
        Some(t) => t,
        None => {
            problems.push("diagram uses generators missing from the presentation".into());
            d.clone()
        }
    };
    let sym: BTreeSet<Word> = p.symmetrized().into_iter().collect();
    let unlabeled =
        (0..d.regions.len()).filter(|&r| !sym.contains(&d.region_word(r))).map(|r| d.regions[r].id.clone()).collect();
    let mirror_pairs = if problems.is_empty() { d.mirror_pairs() } else { Vec::new() };
    DiagramVerdict { problems, unlabeled, mirror_pairs }
}
