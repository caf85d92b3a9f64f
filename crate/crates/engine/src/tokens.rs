use std::collections::BTreeMap;
use std::fmt;

use recur_complex::Complex;
use recur_shapes::{chord, shape_catalog, Anchor, Quad, ShapeKind, ShapeTemplate};

use crate::EngineError;

/// A direction in A: a model anchor of a face, seen from the edge under it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Token {
    pub face: usize,
    /// Boundary position of the side carrying the anchor.
    pub pos: usize,
    pub edge: usize,
    /// Position along the edge in its stored orientation.
    pub t: Quad,
    /// Cosine between the direction and the edge's stored orientation.
    pub along: Quad,
    /// Index into the face shape's anchor list.
    pub anchor: usize,
}

impl Token {
    pub fn is_perpendicular(&self) -> bool {
        self.along.is_zero()
    }
}

/// Why I failed at a token.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum IFailure {
    VertexHit,
    NotInA { side: usize, t: Box<Quad>, along: Box<Quad> },
}

/// The instantiated direction set with H and I precomputed.
#[derive(Debug, Clone)]
pub struct DirectionSet {
    pub tokens: Vec<Token>,
    /// `I` on token indices.
    pub i_map: Vec<Result<usize, IFailure>>,
    /// For each token, its continuations, or the traversal (face, pos) where one is missing.
    pub h_map: Vec<Vec<usize>>,
    pub h_missing: Vec<(usize, usize, usize)>,
    pub templates: Vec<Option<ShapeTemplate>>,
    /// Traversals (face, pos) of each edge.
    pub traversals: Vec<Vec<(usize, usize)>>,
}

impl DirectionSet {
    pub fn instantiate(c: &Complex) -> Result<DirectionSet, EngineError> {
        let mut templates = Vec::with_capacity(c.faces.len());
        let mut tokens = Vec::new();
        let mut first = Vec::with_capacity(c.faces.len());
        for (fi, f) in c.faces.iter().enumerate() {
            let shape = f.shape.as_ref().ok_or_else(|| EngineError::UntaggedFace(f.id.clone()))?;
            let tpl = shape_catalog(shape.kind).expect("validated shape");
            let mut local = Vec::new();
            for (ai, a) in tpl.anchors.iter().enumerate() {
                let pos = f.sides.position_of(a.side);
                let d = f.boundary[pos];
                let same = d.forward == f.sides.forward();
                let along = tpl.along(a);
                local.push(Token {
                    face: fi,
                    pos,
                    edge: d.edge,
                    t: if same { a.t.clone() } else { &Quad::one() - &a.t },
                    along: if same { along } else { -&along },
                    anchor: ai,
                });
            }
            local.sort_by(|x, y| x.pos.cmp(&y.pos).then(x.anchor.cmp(&y.anchor)));
            first.push(tokens.len());
            tokens.extend(local);
            templates.push(Some(tpl));
        }
        first.push(tokens.len());

        let mut traversals = vec![Vec::new(); c.edges.len()];
        for (fi, f) in c.faces.iter().enumerate() {
            for (k, d) in f.boundary.iter().enumerate() {
                traversals[d.edge].push((fi, k));
            }
        }

        let find = |face: usize, pos: usize, t: &Quad, along: &Quad| {
            (first[face]..first[face + 1]).find(|&j| tokens[j].pos == pos && &tokens[j].t == t && &tokens[j].along == along)
        };
        let find_anchor = |face: usize, anchor: usize| (first[face]..first[face + 1]).find(|&j| tokens[j].anchor == anchor);

        // I depends only on the shape, so compute it once per kind.
        let mut by_kind: BTreeMap<ShapeKind, Vec<Result<usize, IFailure>>> = BTreeMap::new();
        for tpl in templates.iter().flatten() {
            by_kind.entry(tpl.kind).or_insert_with(|| tpl.anchors.iter().map(|a| model_i(tpl, a)).collect());
        }
        let i_map = tokens
            .iter()
            .map(|tk| {
                let kind = templates[tk.face].as_ref().unwrap().kind;
                by_kind[&kind][tk.anchor].clone().map(|ai| find_anchor(tk.face, ai).expect("every anchor is a token"))
            })
            .collect();

        let mut h_map = Vec::with_capacity(tokens.len());
        let mut h_missing = Vec::new();
        for (i, tk) in tokens.iter().enumerate() {
            let back = -&tk.along;
            let mut out = Vec::new();
            for &(f, p) in &traversals[tk.edge] {
                if (f, p) == (tk.face, tk.pos) {
                    continue;
                }
                match find(f, p, &tk.t, &back) {
                    Some(j) => out.push(j),
                    None => h_missing.push((i, f, p)),
                }
            }
            h_map.push(out);
        }
        Ok(DirectionSet { tokens, i_map, h_map, h_missing, templates, traversals })
    }

    pub fn len(&self) -> usize {
        self.tokens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.tokens.is_empty()
    }

    pub fn i_of(&self, a: usize) -> Result<usize, EngineError> {
        self.i_map[a].clone().map_err(|_| EngineError::NoChord(a.to_string()))
    }

    pub fn h_of(&self, a: usize) -> &[usize] {
        &self.h_map[a]
    }

    pub fn template(&self, a: usize) -> &ShapeTemplate {
        self.templates[self.tokens[a].face].as_ref().unwrap()
    }

    pub fn model_anchor(&self, a: usize) -> &Anchor {
        &self.template(a).anchors[self.tokens[a].anchor]
    }

    pub fn kind(&self, a: usize) -> ShapeKind {
        self.template(a).kind
    }

    /// Index of a token given by face, position and exact edge coordinates.
    pub fn lookup(&self, face: usize, pos: usize, t: &Quad, along: &Quad) -> Option<usize> {
        self.tokens.iter().position(|x| x.face == face && x.pos == pos && &x.t == t && &x.along == along)
    }

    pub fn label(&self, c: &Complex, a: usize) -> String {
        TokenLabel { c, t: &self.tokens[a] }.to_string()
    }
}

fn model_i(tpl: &ShapeTemplate, a: &Anchor) -> Result<usize, IFailure> {
    match chord(tpl, a) {
        Err(_) => Err(IFailure::VertexHit),
        Ok(seg) => {
            let along = tpl.along(&seg.end);
            tpl.find_anchor(seg.end.side, &seg.end.t, &along)
                .ok_or(IFailure::NotInA { side: seg.end.side, t: Box::new(seg.end.t), along: Box::new(along) })
        }
    }
}

pub(crate) struct TokenLabel<'a> {
    pub c: &'a Complex,
    pub t: &'a Token,
}

impl fmt::Display for TokenLabel<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.t;
        write!(f, "{}/{}:{}@{}<{}>", self.c.faces[t.face].id, t.pos, self.c.edges[t.edge].id, t.t, t.along)
    }
}
