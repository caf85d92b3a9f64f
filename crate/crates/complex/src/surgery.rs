use std::collections::BTreeSet;

use recur_shapes::Quad;

use crate::{Complex, ComplexError, Edge, GalleryClass};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CollapseReport {
    /// Face ids in removal order.
    pub removed_faces: Vec<String>,
    pub removed_edges: Vec<String>,
    /// The reverse-order run removed the same faces and reached the same Euler characteristic.
    pub confluent: bool,
}

impl Complex {
    fn collapse_order(&self, reverse: bool) -> (BTreeSet<usize>, BTreeSet<usize>, Vec<usize>, Vec<usize>) {
        let mut order: Vec<usize> = (0..self.edges.len()).collect();
        order.sort_by(|&a, &b| self.edges[a].id.cmp(&self.edges[b].id));
        if reverse {
            order.reverse();
        }
        let mut deg = self.degrees();
        let mut alive_f: BTreeSet<usize> = (0..self.faces.len()).collect();
        let mut alive_e: BTreeSet<usize> = (0..self.edges.len()).collect();
        let (mut rf, mut re) = (Vec::new(), Vec::new());
        loop {
            let free = order.iter().copied().find(|&e| alive_e.contains(&e) && deg[e] == 1);
            let Some(e) = free else { break };
            let f = *alive_f
                .iter()
                .find(|&&f| self.faces[f].boundary.iter().any(|d| d.edge == e))
                .expect("degree-1 edge has a face");
            for d in &self.faces[f].boundary {
                deg[d.edge] -= 1;
            }
            alive_f.remove(&f);
            alive_e.remove(&e);
            rf.push(f);
            re.push(e);
        }
        (alive_f, alive_e, rf, re)
    }

    fn restrict(&self, faces: &BTreeSet<usize>, edges: &BTreeSet<usize>) -> Complex {
        let mut remap = vec![usize::MAX; self.edges.len()];
        let mut out = Complex { vertices: self.vertices.clone(), ..Default::default() };
        for &e in edges {
            remap[e] = out.edges.len();
            out.edges.push(self.edges[e].clone());
        }
        for &f in faces {
            let mut face = self.faces[f].clone();
            for d in &mut face.boundary {
                d.edge = remap[d.edge];
            }
            out.faces.push(face);
        }
        out
    }

    /// Removes faces with free edges, scanning edges in ascending id order.
    pub fn collapse_free_edges(&self) -> (Complex, CollapseReport) {
        let (f1, e1, rf, re) = self.collapse_order(false);
        let (f2, e2, _, _) = self.collapse_order(true);
        let result = self.restrict(&f1, &e1);
        let other = self.restrict(&f2, &e2);
        let report = CollapseReport {
            removed_faces: rf.iter().map(|&f| self.faces[f].id.clone()).collect(),
            removed_edges: re.iter().map(|&e| self.edges[e].id.clone()).collect(),
            confluent: f1 == f2 && result.euler_characteristic() == other.euler_characteristic(),
        };
        (result, report)
    }

    /// Replaces each sphere gallery component by a 1-dimensional cone on its vertices.
    pub fn cone_off_spheres(&self) -> Result<Complex, ComplexError> {
        let deg = self.degrees();
        let mut drop_f = BTreeSet::new();
        let mut drop_e = BTreeSet::new();
        let mut cones = Vec::new();
        for (ci, comp) in self.gallery_components().into_iter().enumerate() {
            if comp.class != GalleryClass::Sphere {
                continue;
            }
            if let Some(&e) = comp.edges.iter().find(|&&e| deg[e] != 2) {
                return Err(ComplexError::SphereNotConable {
                    component: ci,
                    edge: self.edges[e].id.clone(),
                    degree: deg[e],
                });
            }
            drop_f.extend(comp.faces.iter().copied());
            drop_e.extend(comp.edges.iter().copied());
            cones.push(comp.vertices);
        }
        if cones.is_empty() {
            return Ok(self.clone());
        }
        let keep_f = (0..self.faces.len()).filter(|f| !drop_f.contains(f)).collect();
        let keep_e = (0..self.edges.len()).filter(|e| !drop_e.contains(e)).collect();
        let mut out = self.restrict(&keep_f, &keep_e);
        for (k, verts) in cones.into_iter().enumerate() {
            let apex_id = fresh(&out.vertices, &format!("apex{k}"));
            let apex = out.vertices.len();
            out.vertices.push(apex_id.clone());
            for v in verts {
                let id = fresh_edge(&out.edges, &format!("{apex_id}-{}", self.vertices[v]));
                out.edges.push(Edge { id, ends: [apex, v], length: Quad::one() });
            }
        }
        Ok(out)
    }
}

pub(crate) fn fresh(taken: &[String], base: &str) -> String {
    let mut id = base.to_string();
    let mut k = 0;
    while taken.iter().any(|t| t == &id) {
        k += 1;
        id = format!("{base}~{k}");
    }
    id
}

pub(crate) fn fresh_edge(edges: &[Edge], base: &str) -> String {
    let mut id = base.to_string();
    let mut k = 0;
    while edges.iter().any(|e| e.id == id) {
        k += 1;
        id = format!("{base}~{k}");
    }
    id
}

