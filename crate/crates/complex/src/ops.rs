use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use crate::{Complex, ComplexError};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Classification {
    NotEssential,
    Essential,
    Thick,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Classification::NotEssential => "not-essential",
            Classification::Essential => "essential",
            Classification::Thick => "thick",
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum GalleryClass {
    Sphere,
    /// A closed surface other than the sphere.
    ClosedSurface,
    Disk,
    SurfaceWithBoundary,
    PseudomanifoldNonsurface,
    NotPseudomanifold,
}

impl fmt::Display for GalleryClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            GalleryClass::Sphere => "sphere",
            GalleryClass::ClosedSurface => "closed-surface",
            GalleryClass::Disk => "disk",
            GalleryClass::SurfaceWithBoundary => "surface-with-boundary",
            GalleryClass::PseudomanifoldNonsurface => "pseudomanifold-nonsurface",
            GalleryClass::NotPseudomanifold => "not-pseudomanifold",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GalleryComponent {
    /// Face indices, ascending.
    pub faces: Vec<usize>,
    /// Edges traversed exactly once within the component.
    pub boundary_edges: Vec<usize>,
    pub vertices: Vec<usize>,
    pub edges: Vec<usize>,
    pub euler: i64,
    pub class: GalleryClass,
}

struct Dsu(Vec<usize>);

impl Dsu {
    fn new(n: usize) -> Self {
        Dsu((0..n).collect())
    }
    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] != r {
            r = self.0[r];
        }
        let mut y = x;
        while self.0[y] != r {
            let next = self.0[y];
            self.0[y] = r;
            y = next;
        }
        r
    }
    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            self.0[a.max(b)] = a.min(b);
        }
    }
}

impl Complex {
    /// Traversal counts for every edge.
    pub fn degrees(&self) -> Vec<usize> {
        let mut deg = vec![0; self.edges.len()];
        for f in &self.faces {
            for d in &f.boundary {
                deg[d.edge] += 1;
            }
        }
        deg
    }

    pub fn edge_degree(&self, id: &str) -> Result<usize, ComplexError> {
        let e = self.edge_index(id).ok_or_else(|| ComplexError::UnknownEdge(id.to_string()))?;
        Ok(self.faces.iter().flat_map(|f| &f.boundary).filter(|d| d.edge == e).count())
    }

    /// Connected components of the underlying 1-skeleton plus isolated vertices.
    pub fn vertex_components(&self) -> Vec<Vec<usize>> {
        let mut dsu = Dsu::new(self.vertices.len());
        for e in &self.edges {
            dsu.union(e.ends[0], e.ends[1]);
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for v in 0..self.vertices.len() {
            let r = dsu.find(v);
            groups.entry(r).or_default().push(v);
        }
        groups.into_values().collect()
    }

    pub fn classify(&self) -> Classification {
        let deg = self.degrees();
        let mut touched = vec![false; self.vertices.len()];
        for e in &self.edges {
            touched[e.ends[0]] = true;
            touched[e.ends[1]] = true;
        }
        let essential = deg.iter().all(|&d| d >= 2) && touched.iter().all(|&t| t);
        if !essential {
            Classification::NotEssential
        } else if deg.iter().any(|&d| d >= 3) {
            Classification::Thick
        } else {
            Classification::Essential
        }
    }

    pub fn gallery_components(&self) -> Vec<GalleryComponent> {
        let nf = self.faces.len();
        let mut dsu = Dsu::new(nf);
        let mut first_face = vec![usize::MAX; self.edges.len()];
        for (i, f) in self.faces.iter().enumerate() {
            for d in &f.boundary {
                if first_face[d.edge] == usize::MAX {
                    first_face[d.edge] = i;
                } else {
                    dsu.union(first_face[d.edge], i);
                }
            }
        }
        let mut groups: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for i in 0..nf {
            let r = dsu.find(i);
            groups.entry(r).or_default().push(i);
        }
        groups.into_values().map(|faces| self.component(faces)).collect()
    }

    fn component(&self, faces: Vec<usize>) -> GalleryComponent {
        let mut deg: BTreeMap<usize, usize> = BTreeMap::new();
        let mut verts = BTreeSet::new();
        for &f in &faces {
            for &d in &self.faces[f].boundary {
                *deg.entry(d.edge).or_default() += 1;
                verts.insert(self.dart_start(d));
            }
        }
        let boundary_edges: Vec<usize> = deg.iter().filter(|(_, &k)| k == 1).map(|(&e, _)| e).collect();
        let euler = verts.len() as i64 - deg.len() as i64 + faces.len() as i64;
        let class = if deg.values().any(|&k| k > 2) {
            GalleryClass::NotPseudomanifold
        } else if !self.links_are_manifold(&faces, &verts) {
            GalleryClass::PseudomanifoldNonsurface
        } else if boundary_edges.is_empty() {
            if euler == 2 {
                GalleryClass::Sphere
            } else {
                GalleryClass::ClosedSurface
            }
        } else if euler == 1 {
            GalleryClass::Disk
        } else {
            GalleryClass::SurfaceWithBoundary
        };
        GalleryComponent {
            faces,
            boundary_edges,
            vertices: verts.into_iter().collect(),
            edges: deg.into_keys().collect(),
            euler,
            class,
        }
    }

    /// Every vertex link is a single cycle or a single path.
    fn links_are_manifold(&self, faces: &[usize], verts: &BTreeSet<usize>) -> bool {
        // Link nodes are edge ends (edge, end index); link arcs are face corners.
        let mut adj: BTreeMap<(usize, usize), Vec<(usize, usize)>> = BTreeMap::new();
        let mut at_vertex: BTreeMap<usize, BTreeSet<(usize, usize)>> = BTreeMap::new();
        for &f in faces {
            let b = &self.faces[f].boundary;
            let n = b.len();
            for k in 0..n {
                let (d, e) = (b[k], b[(k + 1) % n]);
                let into = (d.edge, if d.forward { 1 } else { 0 });
                let out = (e.edge, if e.forward { 0 } else { 1 });
                let v = self.dart_end(d);
                adj.entry(into).or_default().push(out);
                adj.entry(out).or_default().push(into);
                at_vertex.entry(v).or_default().extend([into, out]);
            }
        }
        for v in verts {
            let nodes = &at_vertex[v];
            if nodes.iter().any(|x| adj[x].len() > 2) {
                return false;
            }
            let start = *nodes.iter().next().unwrap();
            let mut seen = BTreeSet::from([start]);
            let mut stack = vec![start];
            while let Some(x) = stack.pop() {
                for y in &adj[&x] {
                    if seen.insert(*y) {
                        stack.push(*y);
                    }
                }
            }
            if seen.len() != nodes.len() {
                return false;
            }
        }
        true
    }
}
