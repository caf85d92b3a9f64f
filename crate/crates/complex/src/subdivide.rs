use std::collections::BTreeMap;

use recur_shapes::{Quad, ShapeKind, SideMap};

use crate::{Complex, ComplexError, Dart, Edge, Face, ShapeRef};

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum SubdivisionMode {
    Barycentric,
    Altitude,
}

impl std::str::FromStr for SubdivisionMode {
    type Err = String;
    fn from_str(s: &str) -> Result<Self, String> {
        match s {
            "barycentric" => Ok(SubdivisionMode::Barycentric),
            "altitude" => Ok(SubdivisionMode::Altitude),
            _ => Err(format!("unknown subdivision mode {s:?}")),
        }
    }
}

struct Builder {
    out: Complex,
}

impl Builder {
    fn vertex(&mut self, id: String) -> usize {
        self.out.vertices.push(id);
        self.out.vertices.len() - 1
    }
    fn edge(&mut self, id: String, a: usize, b: usize, length: Quad) -> usize {
        self.out.edges.push(Edge { id, ends: [a, b], length });
        self.out.edges.len() - 1
    }
    fn face(&mut self, id: String, boundary: Vec<Dart>, shape: Option<(ShapeKind, Quad)>) {
        let n = boundary.len();
        self.out.faces.push(Face {
            id,
            boundary,
            shape: shape.map(|(kind, scale)| ShapeRef { kind, scale }),
            sides: SideMap::identity(n),
        });
    }
}

fn q(s: &str) -> Quad {
    s.parse().expect("literal scalar")
}

fn rev(d: Dart) -> Dart {
    Dart::new(d.edge, !d.forward)
}

/// Split an old edge into halves `[0]` (start side) and `[1]`; returns the half of `d` next to its start.
fn half_at_start(halves: &[usize; 2], d: Dart) -> Dart {
    if d.forward {
        Dart::new(halves[0], true)
    } else {
        Dart::new(halves[1], false)
    }
}

fn half_at_end(halves: &[usize; 2], d: Dart) -> Dart {
    if d.forward {
        Dart::new(halves[1], true)
    } else {
        Dart::new(halves[0], false)
    }
}

impl Complex {
    pub fn subdivide(&self, mode: SubdivisionMode) -> Result<Complex, ComplexError> {
        match mode {
            SubdivisionMode::Barycentric => Ok(self.barycentric()),
            SubdivisionMode::Altitude => self.altitude(),
        }
    }

    fn barycentric(&self) -> Complex {
        let mut b = Builder { out: Complex { vertices: self.vertices.clone(), ..Default::default() } };
        let half = q("1/2");
        let mut halves = Vec::with_capacity(self.edges.len());
        let mut mids = Vec::with_capacity(self.edges.len());
        for e in &self.edges {
            let m = b.vertex(format!("{}.m", e.id));
            let l = &e.length * &half;
            let h0 = b.edge(format!("{}.0", e.id), e.ends[0], m, l.clone());
            let h1 = b.edge(format!("{}.1", e.id), m, e.ends[1], l);
            halves.push([h0, h1]);
            mids.push(m);
        }
        for (fi, f) in self.faces.iter().enumerate() {
            let c = b.vertex(format!("{}.c", f.id));
            // (center-vertex, center-midpoint) spoke lengths, new tag, new-tag scale.
            let (cv, cm, tag) = match &f.shape {
                Some(ShapeRef { kind: ShapeKind::Equilateral, scale: s }) => {
                    (s * &q("sqrt3/3"), s * &q("sqrt3/6"), Some((ShapeKind::TriH236, s * &q("sqrt3/6"))))
                }
                Some(ShapeRef { kind: ShapeKind::Gon(4), scale: s }) => {
                    (s * &q("sqrt2/2"), s * &half, Some((ShapeKind::TriQ244, s * &half)))
                }
                Some(ShapeRef { kind: ShapeKind::Gon(6), scale: s }) => {
                    (s.clone(), s * &q("sqrt3/2"), Some((ShapeKind::TriH236, s * &half)))
                }
                Some(ShapeRef { kind: ShapeKind::Gon(12), scale: s }) => (s * &q("sqrt6/2 + sqrt2/2"), s * &q("1 + sqrt3/2"), None),
                _ => (Quad::one(), Quad::one(), None),
            };
            let verts = self.face_vertices(fi);
            let n = f.boundary.len();
            let to_v: Vec<usize> = (0..n).map(|k| b.edge(format!("{}.v{k}", f.id), c, verts[k], cv.clone())).collect();
            let to_m: Vec<usize> =
                (0..n).map(|k| b.edge(format!("{}.m{k}", f.id), c, mids[f.boundary[k].edge], cm.clone())).collect();
            for (k, &d) in f.boundary.iter().enumerate() {
                let hs = &halves[d.edge];
                let mc = Dart::new(to_m[k], false);
                let cm_ = Dart::new(to_m[k], true);
                for (j, (spoke, vm)) in [(to_v[k], rev(half_at_start(hs, d))), (to_v[(k + 1) % n], half_at_end(hs, d))]
                    .into_iter()
                    .enumerate()
                {
                    let cv_ = Dart::new(spoke, true);
                    let vc = Dart::new(spoke, false);
                    // vm runs midpoint -> corner; flip for corner -> midpoint.
                    let v_to_m = rev(vm);
                    let id = format!("{}.{k}{}", f.id, if j == 0 { 'a' } else { 'b' });
                    let boundary = match &tag {
                        Some((ShapeKind::TriQ244, _)) => vec![vc, cm_, vm],
                        Some((ShapeKind::TriH236, _)) if matches!(f.shape.as_ref().map(|s| s.kind), Some(ShapeKind::Gon(6))) => {
                            vec![vm, vc, cm_]
                        }
                        _ => vec![mc, cv_, v_to_m],
                    };
                    b.face(id, boundary, tag.clone());
                }
            }
        }
        b.out
    }

    fn altitude(&self) -> Result<Complex, ComplexError> {
        // Hypotenuse side, foot position along it, right-angle model vertex.
        let spec = |kind: ShapeKind| match kind {
            ShapeKind::TriQ244 => Some((0usize, q("1/2"), 2usize)),
            ShapeKind::TriH236 => Some((1usize, q("1/4"), 0usize)),
            _ => None,
        };
        let mut feet: BTreeMap<usize, Quad> = BTreeMap::new();
        let mut legs = vec![false; self.edges.len()];
        for f in &self.faces {
            let kind = f.shape.as_ref().map(|s| s.kind);
            let Some((h, t, _)) = kind.and_then(spec) else {
                return Err(ComplexError::NotRightTriangle(f.id.clone()));
            };
            for (k, d) in f.boundary.iter().enumerate() {
                if f.sides.side(k) != h {
                    legs[d.edge] = true;
                    continue;
                }
                let te = if d.forward == f.sides.forward() { t.clone() } else { &Quad::one() - &t };
                if let Some(prev) = feet.insert(d.edge, te.clone()) {
                    if prev != te {
                        return Err(ComplexError::AltitudeConflict(self.edges[d.edge].id.clone()));
                    }
                }
            }
        }
        if let Some(&e) = feet.keys().find(|&&e| legs[e]) {
            return Err(ComplexError::AltitudeConflict(self.edges[e].id.clone()));
        }

        let mut b = Builder { out: Complex { vertices: self.vertices.clone(), ..Default::default() } };
        let mut kept = vec![usize::MAX; self.edges.len()];
        let mut split: BTreeMap<usize, ([usize; 2], usize)> = BTreeMap::new();
        for (i, e) in self.edges.iter().enumerate() {
            match feet.get(&i) {
                None => kept[i] = b.edge(e.id.clone(), e.ends[0], e.ends[1], e.length.clone()),
                Some(t) => {
                    let foot = b.vertex(format!("{}.f", e.id));
                    let h0 = b.edge(format!("{}.0", e.id), e.ends[0], foot, &e.length * t);
                    let h1 = b.edge(format!("{}.1", e.id), foot, e.ends[1], &e.length * &(&Quad::one() - t));
                    split.insert(i, ([h0, h1], foot));
                }
            }
        }
        for (fi, f) in self.faces.iter().enumerate() {
            let shape = f.shape.as_ref().expect("checked above");
            let (h, _, right) = spec(shape.kind).expect("checked above");
            let s = &shape.scale;
            let mv = self.model_vertices(fi);
            let side_dart = |i: usize| {
                let d = f.boundary[f.sides.position_of(i)];
                Dart::new(kept[d.edge], d.forward == f.sides.forward())
            };
            let hd = {
                let d = f.boundary[f.sides.position_of(h)];
                Dart::new(d.edge, d.forward == f.sides.forward())
            };
            let (hs, foot) = split[&hd.edge];
            let first = half_at_start(&hs, hd);
            let second = half_at_end(&hs, hd);
            let alt_len = match shape.kind {
                ShapeKind::TriQ244 => s * &q("sqrt2/2"),
                _ => s * &q("sqrt3/2"),
            };
            let alt = Dart::new(b.edge(format!("{}.alt", f.id), mv[right], foot, alt_len), true);
            match shape.kind {
                ShapeKind::TriQ244 => {
                    let sc = s * &q("sqrt2/2");
                    b.face(format!("{}.a", f.id), vec![side_dart(2), first, rev(alt)], Some((ShapeKind::TriQ244, sc.clone())));
                    b.face(format!("{}.b", f.id), vec![side_dart(1), alt, second], Some((ShapeKind::TriQ244, sc)));
                }
                _ => {
                    b.face(
                        format!("{}.a", f.id),
                        vec![rev(first), rev(side_dart(0)), alt],
                        Some((ShapeKind::TriH236, s * &q("1/2"))),
                    );
                    b.face(
                        format!("{}.b", f.id),
                        vec![rev(alt), rev(side_dart(2)), rev(second)],
                        Some((ShapeKind::TriH236, s * &q("sqrt3/2"))),
                    );
                }
            }
        }
        Ok(b.out)
    }
}
