use std::collections::BTreeSet;

use crate::Complex;

/// Nerve of the closed 2-cell cover, up to dimension 2.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WiseNerve {
    /// One id per cell; attached cells are named after their edge.
    pub cells: Vec<String>,
    pub edges: Vec<(usize, usize)>,
    pub triangles: Vec<(usize, usize, usize)>,
}

impl Complex {
    pub fn wise_complex(&self) -> WiseNerve {
        let deg = self.degrees();
        let mut cells = Vec::new();
        let mut cell_verts: Vec<BTreeSet<usize>> = Vec::new();
        for (i, f) in self.faces.iter().enumerate() {
            cells.push(f.id.clone());
            cell_verts.push(self.face_vertices(i).into_iter().collect());
        }
        for (e, edge) in self.edges.iter().enumerate() {
            if deg[e] == 0 {
                cells.push(format!("cell:{}", edge.id));
                cell_verts.push(edge.ends.iter().copied().collect());
            }
        }
        let mut by_vertex = vec![Vec::new(); self.vertices.len()];
        for (c, vs) in cell_verts.iter().enumerate() {
            for &v in vs {
                by_vertex[v].push(c);
            }
        }
        let mut edges = BTreeSet::new();
        let mut triangles = BTreeSet::new();
        for cs in &by_vertex {
            for (i, &a) in cs.iter().enumerate() {
                for (j, &b) in cs.iter().enumerate().skip(i + 1) {
                    edges.insert((a, b));
                    for &c in &cs[j + 1..] {
                        triangles.insert((a, b, c));
                    }
                }
            }
        }
        WiseNerve { cells, edges: edges.into_iter().collect(), triangles: triangles.into_iter().collect() }
    }
}
