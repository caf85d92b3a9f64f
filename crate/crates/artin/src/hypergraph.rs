use std::collections::{BTreeMap, BTreeSet, HashMap, VecDeque};
use std::fmt::Write;

use recur_complex::Complex;

use crate::ArtinError;

/// A pair of antipodal edges of an even-sided face; `pos` is the smaller boundary position.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct HyperEdge {
    pub face: usize,
    pub pos: usize,
    pub ends: (usize, usize),
}

/// One connected component of the dual hypergraph of a complex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Hypergraph {
    /// Carrier edges, sorted.
    pub vertices: Vec<usize>,
    pub edges: Vec<HyperEdge>,
    pub is_forest: bool,
    /// A closed walk of hyperedges when the component is not a forest.
    pub cycle: Option<Vec<HyperEdge>>,
    /// Faces crossed by two different chords of this component.
    pub self_intersections: Vec<usize>,
    /// Vertex components of the carrier once cut along the component.
    pub complement_components: usize,
    /// Whether every face met carries a shape, so the trace has a geometric realization.
    pub metrized: bool,
}

impl Hypergraph {
    pub fn embedded(&self) -> bool {
        self.self_intersections.is_empty() && self.edges.iter().all(|h| h.ends.0 != h.ends.1)
    }

    pub fn faces(&self) -> BTreeSet<usize> {
        self.edges.iter().map(|h| h.face).collect()
    }

    pub fn contains_edge(&self, e: usize) -> bool {
        self.vertices.binary_search(&e).is_ok()
    }

    /// A shared carrier edge or face, if the two components meet.
    pub fn meets(&self, other: &Hypergraph) -> Option<Meeting> {
        if let Some(&e) = self.vertices.iter().find(|e| other.contains_edge(**e)) {
            return Some(Meeting::Edge(e));
        }
        let fs = other.faces();
        self.faces().into_iter().find(|f| fs.contains(f)).map(Meeting::Face)
    }

    pub fn report(&self, c: &Complex) -> String {
        let mut s = String::new();
        let _ = writeln!(s, "carrier edges: {}", self.vertices.len());
        let _ = writeln!(s, "antipodal pairs: {}", self.edges.len());
        let _ = writeln!(s, "forest within the complex: {}", self.is_forest);
        let _ = writeln!(s, "embedded within the complex: {}", self.embedded());
        let _ = writeln!(s, "complement components (hint): {}", self.complement_components);
        if let Some(cyc) = &self.cycle {
            let faces: Vec<&str> = cyc.iter().map(|h| c.faces[h.face].id.as_str()).collect();
            let _ = writeln!(s, "cycle of length {} through faces {}", cyc.len(), faces.join(" "));
        }
        if self.metrized {
            let _ = writeln!(s, "realization: chords through edge midpoints, offset up to 1/4 along each edge");
        }
        s.push_str("note: only the finite complex is examined; tree-ness beyond it is not certified\n");
        s
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Meeting {
    Edge(usize),
    Face(usize),
}

/// Occurrences of each edge in face boundaries.
fn incidence(c: &Complex) -> Vec<Vec<(usize, usize)>> {
    let mut inc = vec![Vec::new(); c.edges.len()];
    for (f, face) in c.faces.iter().enumerate() {
        for (i, d) in face.boundary.iter().enumerate() {
            inc[d.edge].push((f, i));
        }
    }
    inc
}

fn antipodal(c: &Complex, f: usize, i: usize) -> Result<HyperEdge, ArtinError> {
    let b = &c.faces[f].boundary;
    let k = b.len();
    if k % 2 == 1 {
        return Err(ArtinError::OddFace(c.faces[f].id.clone()));
    }
    let j = (i + k / 2) % k;
    let pos = i.min(j);
    Ok(HyperEdge { face: f, pos, ends: (b[pos].edge, b[pos + k / 2].edge) })
}

pub fn trace_hypergraph(c: &Complex, start: usize) -> Result<Hypergraph, ArtinError> {
    if start >= c.edges.len() {
        return Err(ArtinError::BadEdge(start.to_string()));
    }
    trace_with(c, start, &incidence(c))
}

fn trace_with(c: &Complex, start: usize, inc: &[Vec<(usize, usize)>]) -> Result<Hypergraph, ArtinError> {
    let mut verts = BTreeSet::from([start]);
    let mut hedges = BTreeSet::new();
    let mut queue = VecDeque::from([start]);
    while let Some(e) = queue.pop_front() {
        for &(f, i) in &inc[e] {
            let h = antipodal(c, f, i)?;
            hedges.insert(h);
            for x in [h.ends.0, h.ends.1] {
                if verts.insert(x) {
                    queue.push_back(x);
                }
            }
        }
    }
    let vertices: Vec<usize> = verts.into_iter().collect();
    let edges: Vec<HyperEdge> = hedges.into_iter().collect();
    let cycle = find_cycle(&vertices, &edges);
    let mut per_face: BTreeMap<usize, usize> = BTreeMap::new();
    for h in &edges {
        *per_face.entry(h.face).or_default() += 1;
    }
    let self_intersections = per_face.into_iter().filter(|&(_, n)| n > 1).map(|(f, _)| f).collect();
    let complement_components = complement(c, &vertices, &edges);
    let metrized = edges.iter().all(|h| c.faces[h.face].shape.is_some());
    Ok(Hypergraph {
        is_forest: cycle.is_none(),
        vertices,
        edges,
        cycle,
        self_intersections,
        complement_components,
        metrized,
    })
}

/// Every component, ordered by smallest carrier edge.
pub fn all_hypergraphs(c: &Complex) -> Result<Vec<Hypergraph>, ArtinError> {
    let inc = incidence(c);
    let mut done = vec![false; c.edges.len()];
    let mut out = Vec::new();
    for e in 0..c.edges.len() {
        if done[e] {
            continue;
        }
        let h = trace_with(c, e, &inc)?;
        for &v in &h.vertices {
            done[v] = true;
        }
        out.push(h);
    }
    Ok(out)
}

fn find_cycle(vertices: &[usize], edges: &[HyperEdge]) -> Option<Vec<HyperEdge>> {
    let idx: HashMap<usize, usize> = vertices.iter().enumerate().map(|(i, &v)| (v, i)).collect();
    let mut tree: Vec<Vec<(usize, HyperEdge)>> = vec![Vec::new(); vertices.len()];
    let mut parent: Vec<usize> = (0..vertices.len()).collect();
    for &h in edges {
        let (a, b) = (idx[&h.ends.0], idx[&h.ends.1]);
        let (ra, rb) = (crate::find(&mut parent, a), crate::find(&mut parent, b));
        if ra == rb {
            let mut path = tree_path(&tree, b, a);
            path.push(h);
            return Some(path);
        }
        parent[ra] = rb;
        tree[a].push((b, h));
        tree[b].push((a, h));
    }
    None
}

/// Hyperedges along the forest path from `from` to `to`.
fn tree_path(tree: &[Vec<(usize, HyperEdge)>], from: usize, to: usize) -> Vec<HyperEdge> {
    let mut prev: HashMap<usize, (usize, HyperEdge)> = HashMap::new();
    let mut queue = VecDeque::from([from]);
    let mut seen = BTreeSet::from([from]);
    while let Some(v) = queue.pop_front() {
        if v == to {
            break;
        }
        for &(w, h) in &tree[v] {
            if seen.insert(w) {
                prev.insert(w, (v, h));
                queue.push_back(w);
            }
        }
    }
    let mut path = Vec::new();
    let mut v = to;
    while v != from {
        let (p, h) = prev[&v];
        path.push(h);
        v = p;
    }
    path.reverse();
    path
}

fn complement(c: &Complex, vertices: &[usize], edges: &[HyperEdge]) -> usize {
    let n = c.vertices.len();
    let mut parent: Vec<usize> = (0..n).collect();
    let cut: BTreeSet<usize> = vertices.iter().copied().collect();
    for (i, e) in c.edges.iter().enumerate() {
        if !cut.contains(&i) {
            let (a, b) = (crate::find(&mut parent, e.ends[0]), crate::find(&mut parent, e.ends[1]));
            parent[a] = b;
        }
    }
    let mut chords: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for h in edges {
        chords.entry(h.face).or_default().push(h.pos);
    }
    for (f, face) in c.faces.iter().enumerate() {
        let k = face.boundary.len();
        let cs = chords.get(&f).map(Vec::as_slice).unwrap_or(&[]);
        let mut pieces: BTreeMap<Vec<bool>, usize> = BTreeMap::new();
        for (j, d) in face.boundary.iter().enumerate() {
            let sig: Vec<bool> = cs.iter().map(|&i| (j + k - i - 1) % k < k / 2).collect();
            let v = c.dart_start(*d);
            match pieces.get(&sig) {
                Some(&u) => {
                    let (a, b) = (crate::find(&mut parent, u), crate::find(&mut parent, v));
                    parent[a] = b;
                }
                None => {
                    pieces.insert(sig, v);
                }
            }
        }
    }
    (0..n).filter(|&v| crate::find(&mut parent, v) == v).count()
}

/// DOT rendering with carrier face annotations; nodes and arcs sorted.
pub fn hypergraph_dot(c: &Complex, hs: &[Hypergraph]) -> String {
    let mut s = String::from("graph hypergraph {\n");
    let mut nodes = BTreeSet::new();
    let mut arcs = BTreeSet::new();
    for h in hs {
        nodes.extend(h.vertices.iter().map(|&e| c.edges[e].id.clone()));
        for he in &h.edges {
            arcs.insert((c.edges[he.ends.0].id.clone(), c.edges[he.ends.1].id.clone(), c.faces[he.face].id.clone()));
        }
    }
    for n in nodes {
        let _ = writeln!(s, "  \"{n}\";");
    }
    for (a, b, f) in arcs {
        let _ = writeln!(s, "  \"{a}\" -- \"{b}\" [label=\"{f}\"];");
    }
    s.push_str("}\n");
    s
}
