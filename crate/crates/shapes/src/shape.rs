use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use crate::{Pt, Quad, ShapeError};

/// Catalog polygon kinds. `Gon(k)` is the regular k-gon with unit sides.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ShapeKind {
    /// Right isosceles triangle, angles pi/2, pi/4, pi/4.
    TriQ244,
    /// Right triangle with angles pi/2, pi/3, pi/6.
    TriH236,
    Gon(u32),
    /// Unit equilateral triangle; metric only, no anchors.
    Equilateral,
}

impl ShapeKind {
    pub fn sides(&self) -> usize {
        match self {
            ShapeKind::TriQ244 | ShapeKind::TriH236 | ShapeKind::Equilateral => 3,
            ShapeKind::Gon(k) => *k as usize,
        }
    }

    pub fn is_right_triangle(&self) -> bool {
        matches!(self, ShapeKind::TriQ244 | ShapeKind::TriH236)
    }
}

impl fmt::Display for ShapeKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            ShapeKind::TriQ244 => write!(f, "TriQ244"),
            ShapeKind::TriH236 => write!(f, "TriH236"),
            ShapeKind::Gon(k) => write!(f, "Gon({k})"),
            ShapeKind::Equilateral => write!(f, "Equilateral"),
        }
    }
}

impl FromStr for ShapeKind {
    type Err = ShapeError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let kind = match s.trim() {
            "TriQ244" => ShapeKind::TriQ244,
            "TriH236" => ShapeKind::TriH236,
            "Equilateral" => ShapeKind::Equilateral,
            "UnitSquare" => ShapeKind::Gon(4),
            other => {
                let inner = other
                    .strip_prefix("Gon(")
                    .and_then(|r| r.strip_suffix(')'))
                    .ok_or_else(|| ShapeError::UnknownShape(s.to_string()))?;
                let k: u32 = inner.trim().parse().map_err(|_| ShapeError::UnknownShape(s.to_string()))?;
                ShapeKind::Gon(k)
            }
        };
        if let ShapeKind::Gon(k) = kind {
            if k % 2 != 0 {
                return Err(ShapeError::UnknownShape(s.to_string()));
            }
            if k < 4 {
                return Err(ShapeError::GonTooSmall(k / 2));
            }
            if !matches!(k, 4 | 6 | 8 | 12) {
                return Err(ShapeError::GonNotExact(k));
            }
        }
        Ok(kind)
    }
}

/// A model direction at a point of a polygon side.
///
/// `t` is measured from the side's start vertex; `dir` is a unit vector.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Anchor {
    pub side: usize,
    pub t: Quad,
    pub dir: Pt,
}

impl Anchor {
    pub fn new(side: usize, t: Quad, dir: Pt) -> Self {
        Anchor { side, t, dir }
    }
}

impl fmt::Debug for Anchor {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "side {} t={} dir={}", self.side, self.t, self.dir)
    }
}

/// Correspondence between face boundary positions and model sides.
///
/// A rotation sends position k to side k+r and runs along the side; a
/// reflection sends position k to side r-k and runs against it.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SideMap {
    Rotation { n: usize, r: usize },
    Reflection { n: usize, r: usize },
}

impl SideMap {
    pub fn identity(n: usize) -> Self {
        SideMap::Rotation { n, r: 0 }
    }

    /// Recognise a rotation or reflection from an explicit side list.
    pub fn from_list(sides: &[usize]) -> Option<Self> {
        let n = sides.len();
        if n == 0 || sides.iter().any(|&s| s >= n) {
            return None;
        }
        let rot = SideMap::Rotation { n, r: sides[0] };
        if (0..n).all(|k| rot.side(k) == sides[k]) {
            return Some(rot);
        }
        let refl = SideMap::Reflection { n, r: sides[0] };
        (0..n).all(|k| refl.side(k) == sides[k]).then_some(refl)
    }

    pub fn len(&self) -> usize {
        match *self {
            SideMap::Rotation { n, .. } | SideMap::Reflection { n, .. } => n,
        }
    }

    pub fn is_empty(&self) -> bool {
        self.len() == 0
    }

    pub fn side(&self, pos: usize) -> usize {
        match *self {
            SideMap::Rotation { n, r } => (pos + r) % n,
            SideMap::Reflection { n, r } => (r + n - pos % n) % n,
        }
    }

    pub fn position_of(&self, side: usize) -> usize {
        match *self {
            SideMap::Rotation { n, r } => (side + n - r) % n,
            SideMap::Reflection { n, r } => (r + n - side) % n,
        }
    }

    /// True when boundary positions run along model sides.
    pub fn forward(&self) -> bool {
        matches!(self, SideMap::Rotation { .. })
    }

    pub fn to_list(&self) -> Vec<usize> {
        (0..self.len()).map(|k| self.side(k)).collect()
    }

    pub fn is_identity(&self) -> bool {
        matches!(*self, SideMap::Rotation { r: 0, .. })
    }
}

/// A metrized polygon with its model anchors, at unit scale.
#[derive(Debug, Clone)]
pub struct ShapeTemplate {
    pub kind: ShapeKind,
    pub vertices: Vec<Pt>,
    pub lengths: Vec<Quad>,
    pub anchors: Vec<Anchor>,
    /// Isometries of the polygon, as maps on sides.
    pub symmetries: Vec<SideMap>,
}

fn q(s: &str) -> Quad {
    s.parse().expect("catalog scalar")
}

fn pt(x: &str, y: &str) -> Pt {
    Pt::new(q(x), q(y))
}

fn an(side: usize, t: &str, x: &str, y: &str) -> Anchor {
    Anchor::new(side, q(t), pt(x, y))
}

/// Cosine and sine of `k * pi / 6`.
fn trig_sixth(k: usize) -> (Quad, Quad) {
    const C: [&str; 12] = ["1", "sqrt3/2", "1/2", "0", "-1/2", "-sqrt3/2", "-1", "-sqrt3/2", "-1/2", "0", "1/2", "sqrt3/2"];
    (q(C[k % 12]), q(C[(k + 9) % 12]))
}

/// Cosine and sine of `k * pi / 4`.
fn trig_quarter(k: usize) -> (Quad, Quad) {
    const C: [&str; 8] = ["1", "sqrt2/2", "0", "-sqrt2/2", "-1", "-sqrt2/2", "0", "sqrt2/2"];
    (q(C[k % 8]), q(C[(k + 6) % 8]))
}

fn regular(k: usize) -> Vec<Pt> {
    let mut out = vec![Pt::origin()];
    for i in 0..k - 1 {
        let (c, s) = match k {
            4 => trig_quarter(2 * i),
            6 => trig_sixth(2 * i),
            8 => trig_quarter(i),
            12 => trig_sixth(i),
            _ => unreachable!("checked by ShapeKind parsing"),
        };
        let last = out.last().unwrap().clone();
        out.push(&last + &Pt::new(c, s));
    }
    out
}

fn dihedral(n: usize) -> Vec<SideMap> {
    (0..n)
        .map(|r| SideMap::Rotation { n, r })
        .chain((0..n).map(|r| SideMap::Reflection { n, r }))
        .collect()
}

/// Build a catalog shape.
pub fn shape_catalog(kind: ShapeKind) -> Result<ShapeTemplate, ShapeError> {
    let (vertices, anchors, symmetries) = match kind {
        ShapeKind::TriQ244 => {
            let h = "sqrt2/2";
            let mh = "-sqrt2/2";
            (
                vec![pt("1", "0"), pt("0", "1"), pt("0", "0")],
                vec![
                    an(0, "1/4", mh, mh),
                    an(0, "1/2", "-1", "0"),
                    an(0, "1/2", "0", "-1"),
                    an(0, "3/4", mh, mh),
                    an(1, "1/2", "1", "0"),
                    an(1, "1/2", h, h),
                    an(1, "1/2", h, mh),
                    an(2, "1/2", "0", "1"),
                    an(2, "1/2", h, h),
                    an(2, "1/2", mh, h),
                ],
                vec![SideMap::identity(3), SideMap::Reflection { n: 3, r: 0 }],
            )
        }
        ShapeKind::TriH236 => {
            let r3 = "sqrt3/2";
            let mr3 = "-sqrt3/2";
            (
                vec![pt("0", "0"), pt("1", "0"), pt("0", "sqrt3")],
                vec![
                    an(0, "1/2", "0", "1"),
                    an(0, "1/2", "1/2", r3),
                    an(0, "1/2", "-1/2", r3),
                    an(1, "1/4", "-1", "0"),
                    an(1, "1/4", "-1/2", mr3),
                    an(1, "1/2", "0", "-1"),
                    an(1, "1/2", mr3, "1/2"),
                    an(1, "3/4", mr3, "-1/2"),
                    an(1, "3/4", "-1/2", mr3),
                    an(1, "3/4", "-1", "0"),
                    an(2, "1/4", "1", "0"),
                    an(2, "1/3", r3, "-1/2"),
                    an(2, "1/3", r3, "1/2"),
                    an(2, "1/2", "1/2", mr3),
                    an(2, "1/2", "1/2", r3),
                    an(2, "3/4", "1", "0"),
                ],
                vec![SideMap::identity(3)],
            )
        }
        ShapeKind::Equilateral => (
            vec![pt("0", "0"), pt("1", "0"), pt("1/2", "sqrt3/2")],
            vec![],
            dihedral(3),
        ),
        ShapeKind::Gon(k) => {
            let k = k as usize;
            if k < 4 || k % 2 == 1 {
                return Err(ShapeError::GonTooSmall(k as u32 / 2));
            }
            if !matches!(k, 4 | 6 | 8 | 12) {
                return Err(ShapeError::GonNotExact(k as u32));
            }
            let vs = regular(k);
            let mut anchors = Vec::new();
            for i in 0..k {
                let e = &vs[(i + 1) % k] - &vs[i];
                // unit sides: the inward normal is the quarter turn
                let n = e.perp();
                anchors.push(Anchor::new(i, Quad::ratio(1, 4), n.clone()));
                anchors.push(Anchor::new(i, Quad::ratio(3, 4), n));
            }
            (vs, anchors, dihedral(k))
        }
    };
    let n = vertices.len();
    let lengths = (0..n)
        .map(|i| {
            (&vertices[(i + 1) % n] - &vertices[i])
                .norm2()
                .sqrt()
                .expect("catalog side lengths lie in the field")
        })
        .collect();
    Ok(ShapeTemplate { kind, vertices, lengths, anchors, symmetries })
}

impl ShapeTemplate {
    pub fn n_sides(&self) -> usize {
        self.vertices.len()
    }

    pub fn side_vector(&self, i: usize) -> Pt {
        let n = self.n_sides();
        &self.vertices[(i + 1) % n] - &self.vertices[i]
    }

    /// Unit direction of side `i`.
    pub fn side_unit(&self, i: usize) -> Pt {
        self.side_vector(i).scale(&self.lengths[i].recip().expect("positive length"))
    }

    pub fn point_on(&self, side: usize, t: &Quad) -> Pt {
        &self.vertices[side] + &self.side_vector(side).scale(t)
    }

    pub fn anchor_point(&self, a: &Anchor) -> Pt {
        self.point_on(a.side, &a.t)
    }

    /// Cosine between an anchor direction and its side direction.
    pub fn along(&self, a: &Anchor) -> Quad {
        a.dir.dot(&self.side_unit(a.side))
    }

    pub fn is_perpendicular(&self, a: &Anchor) -> bool {
        a.dir.dot(&self.side_vector(a.side)).is_zero()
    }

    /// Intrinsic key of an anchor: side, position and cosine to the side.
    pub fn key(&self, a: &Anchor) -> (usize, Quad, Quad) {
        (a.side, a.t.clone(), self.along(a))
    }

    pub fn find_anchor(&self, side: usize, t: &Quad, along: &Quad) -> Option<usize> {
        self.anchors
            .iter()
            .position(|a| a.side == side && &a.t == t && &self.along(a) == along)
    }

    /// Rebuild the unit direction at `side` from its cosine to the side.
    pub fn direction_from_along(&self, side: usize, along: &Quad) -> Option<Pt> {
        let s2 = &Quad::one() - &(along * along);
        let s = s2.sqrt()?;
        let u = self.side_unit(side);
        Some(&u.scale(along) + &u.perp().scale(&s))
    }

    /// Image of an anchor under a symmetry given as a side map.
    pub fn act(&self, g: &SideMap, a: &Anchor) -> (usize, Quad, Quad) {
        let along = self.along(a);
        if g.forward() {
            (g.side(a.side), a.t.clone(), along)
        } else {
            (g.side(a.side), &Quad::one() - &a.t, -along)
        }
    }

    /// True when every listed symmetry preserves side lengths and the anchor set.
    pub fn symmetric(&self) -> bool {
        let keys: BTreeSet<_> = self.anchors.iter().map(|a| self.key(a)).collect();
        self.symmetries.iter().all(|g| {
            (0..self.n_sides()).all(|i| self.lengths[g.side(i)] == self.lengths[i])
                && self.anchors.iter().all(|a| keys.contains(&self.act(g, a)))
        })
    }

    /// Twice the signed area; positive for counterclockwise vertex order.
    pub fn twice_area(&self) -> Quad {
        let n = self.n_sides();
        (0..n).fold(Quad::zero(), |acc, i| acc + self.vertices[i].cross(&self.vertices[(i + 1) % n]))
    }

    /// Convex with counterclockwise vertices.
    pub fn is_convex(&self) -> bool {
        let n = self.n_sides();
        (0..n).all(|i| self.side_vector(i).cross(&self.side_vector((i + 1) % n)).is_positive())
    }
}
