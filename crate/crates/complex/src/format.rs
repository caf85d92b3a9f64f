use std::collections::{BTreeMap, HashSet};

use recur_shapes::{shape_catalog, Quad, ShapeKind, SideMap};
use serde::{Deserialize, Serialize};

use crate::{Complex, ComplexError, Dart, Edge, Face, ShapeRef, Violation, ViolationKind};

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq, Default)]
pub struct RawComplex {
    pub vertices: Vec<String>,
    pub edges: Vec<RawEdge>,
    #[serde(default)]
    pub faces: Vec<RawFace>,
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawEdge {
    pub id: String,
    pub ends: [String; 2],
    #[serde(default = "one")]
    pub length: String,
}

fn one() -> String {
    "1".into()
}

#[derive(Debug, Clone, Serialize, Deserialize, PartialEq, Eq)]
pub struct RawFace {
    pub id: String,
    pub boundary: Vec<(String, String)>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub shape: Option<String>,
    /// Model scale; inferred from the first side when absent.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub scale: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub sides: Option<Vec<usize>>,
}

fn violation(location: impl Into<String>, kind: ViolationKind, detail: impl Into<String>) -> Violation {
    Violation { location: location.into(), kind, detail: detail.into() }
}

/// Checks every invariant and collects all violations rather than stopping at the first.
pub fn validate_complex(raw: &RawComplex) -> Result<Complex, Vec<Violation>> {
    let mut out = Vec::new();
    let mut vindex = BTreeMap::new();
    for (i, v) in raw.vertices.iter().enumerate() {
        if vindex.insert(v.clone(), i).is_some() {
            out.push(violation(format!("vertex {v}"), ViolationKind::DuplicateId, "vertex id repeated"));
        }
    }

    let mut eindex = BTreeMap::new();
    let mut edges = Vec::with_capacity(raw.edges.len());
    for (i, e) in raw.edges.iter().enumerate() {
        let loc = format!("edge {}", e.id);
        if eindex.insert(e.id.clone(), i).is_some() {
            out.push(violation(&loc, ViolationKind::DuplicateId, "edge id repeated"));
        }
        let mut ends = [0usize; 2];
        for (k, v) in e.ends.iter().enumerate() {
            match vindex.get(v) {
                Some(&j) => ends[k] = j,
                None => out.push(violation(&loc, ViolationKind::UnknownVertex, format!("endpoint {v:?} is not a vertex"))),
            }
        }
        let length = match e.length.parse::<Quad>() {
            Ok(q) => {
                if !q.is_positive() {
                    out.push(violation(&loc, ViolationKind::NonPositiveLength, format!("length {q} is not positive")));
                }
                q
            }
            Err(err) => {
                out.push(violation(&loc, ViolationKind::BadScalar, err.to_string()));
                Quad::one()
            }
        };
        edges.push(Edge { id: e.id.clone(), ends, length });
    }

    let mut fids = HashSet::new();
    let mut faces = Vec::with_capacity(raw.faces.len());
    for f in &raw.faces {
        let loc = format!("face {}", f.id);
        if !fids.insert(f.id.clone()) {
            out.push(violation(&loc, ViolationKind::DuplicateId, "face id repeated"));
        }
        if f.boundary.is_empty() {
            out.push(violation(&loc, ViolationKind::EmptyBoundary, "boundary is empty"));
        }
        let mut boundary = Vec::with_capacity(f.boundary.len());
        let mut resolved = true;
        for (k, (eid, flag)) in f.boundary.iter().enumerate() {
            let forward = match flag.as_str() {
                "+" => true,
                "-" => false,
                other => {
                    out.push(violation(&loc, ViolationKind::BadOrientationFlag, format!("step {k}: flag {other:?}")));
                    resolved = false;
                    true
                }
            };
            match eindex.get(eid) {
                Some(&j) => boundary.push(Dart::new(j, forward)),
                None => {
                    out.push(violation(&loc, ViolationKind::DanglingEdgeReference, format!("step {k}: no edge {eid:?}")));
                    resolved = false;
                }
            }
        }
        let tmp = Complex { vertices: raw.vertices.clone(), edges: edges.clone(), faces: vec![] };
        if resolved {
            let n = boundary.len();
            for k in 0..n {
                let a = tmp.dart_end(boundary[k]);
                let b = tmp.dart_start(boundary[(k + 1) % n]);
                if a != b {
                    out.push(violation(
                        &loc,
                        ViolationKind::OpenBoundary,
                        format!("step {k} ends at {} but step {} starts at {}", raw.vertices[a], (k + 1) % n, raw.vertices[b]),
                    ));
                }
            }
        }

        let n = f.boundary.len();
        let sides = match &f.sides {
            None => SideMap::identity(n),
            Some(list) => match SideMap::from_list(list) {
                Some(m) if m.len() == n => m,
                _ => {
                    out.push(violation(&loc, ViolationKind::BadSideMap, format!("{list:?} is not a dihedral side map of length {n}")));
                    SideMap::identity(n)
                }
            },
        };

        let mut shape = None;
        if let Some(name) = &f.shape {
            match name.parse::<ShapeKind>().ok().and_then(|k| shape_catalog(k).ok().map(|t| (k, t))) {
                None => out.push(violation(&loc, ViolationKind::UnknownShape, format!("{name:?} is not in the catalog"))),
                Some((kind, tpl)) => {
                    if tpl.n_sides() != n {
                        out.push(violation(
                            &loc,
                            ViolationKind::ShapeSideCount,
                            format!("shape/side-count mismatch: {kind} has {} sides, boundary has {n}", tpl.n_sides()),
                        ));
                    } else if resolved {
                        let scale = match &f.scale {
                            Some(s) => s.parse::<Quad>().map_err(|e| e.to_string()),
                            None => {
                                let side = sides.side(0);
                                Ok(&edges[boundary[0].edge].length / &tpl.lengths[side])
                            }
                        };
                        match scale {
                            Err(e) => out.push(violation(&loc, ViolationKind::BadScalar, e)),
                            Ok(scale) => {
                                for (k, d) in boundary.iter().enumerate() {
                                    let want = &scale * &tpl.lengths[sides.side(k)];
                                    let have = &edges[d.edge].length;
                                    if &want != have {
                                        out.push(violation(
                                            &loc,
                                            ViolationKind::SideLengthMismatch,
                                            format!("step {k} edge {} has length {have}, shape side needs {want}", edges[d.edge].id),
                                        ));
                                    }
                                }
                                shape = Some(ShapeRef { kind, scale });
                            }
                        }
                    }
                }
            }
        }
        faces.push(Face { id: f.id.clone(), boundary, shape, sides });
    }

    if out.is_empty() {
        Ok(Complex { vertices: raw.vertices.clone(), edges, faces })
    } else {
        Err(out)
    }
}

impl Complex {
    pub fn from_raw(raw: &RawComplex) -> Result<Complex, ComplexError> {
        validate_complex(raw).map_err(ComplexError::Invalid)
    }

    pub fn from_json(text: &str) -> Result<Complex, ComplexError> {
        let raw: RawComplex = serde_json::from_str(text)?;
        Complex::from_raw(&raw)
    }

    pub fn to_raw(&self) -> RawComplex {
        RawComplex {
            vertices: self.vertices.clone(),
            edges: self
                .edges
                .iter()
                .map(|e| RawEdge {
                    id: e.id.clone(),
                    ends: [self.vertices[e.ends[0]].clone(), self.vertices[e.ends[1]].clone()],
                    length: e.length.to_string(),
                })
                .collect(),
            faces: self
                .faces
                .iter()
                .map(|f| RawFace {
                    id: f.id.clone(),
                    boundary: f
                        .boundary
                        .iter()
                        .map(|d| (self.edges[d.edge].id.clone(), if d.forward { "+" } else { "-" }.to_string()))
                        .collect(),
                    shape: f.shape.as_ref().map(|s| s.kind.to_string()),
                    scale: f.shape.as_ref().map(|s| s.scale.to_string()),
                    sides: if f.sides.is_identity() { None } else { Some(f.sides.to_list()) },
                })
                .collect(),
        }
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(&self.to_raw()).expect("raw complex serializes")
    }
}
