use std::fmt;

use crate::{Anchor, Pt, Quad, ShapeError, ShapeTemplate};

/// Straight segment from an anchor to the boundary, at unit scale.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ChordSegment {
    pub start: Anchor,
    /// Exit side, position and the reversed travel direction there.
    pub end: Anchor,
    pub from: Pt,
    pub to: Pt,
    pub length: Quad,
}

fn check_anchor(s: &ShapeTemplate, a: &Anchor) -> Result<(), ShapeError> {
    if a.side >= s.n_sides() || !a.t.is_positive() || a.t >= Quad::one() {
        return Err(ShapeError::BadPosition { side: a.side });
    }
    if !s.side_vector(a.side).perp().dot(&a.dir).is_positive() {
        return Err(ShapeError::NotInward { side: a.side });
    }
    Ok(())
}

/// Follow the direction of `a` to the boundary.
///
/// The end anchor carries the reversed direction, so `chord` applied to it
/// runs back to `a`.
pub fn chord(s: &ShapeTemplate, a: &Anchor) -> Result<ChordSegment, ShapeError> {
    check_anchor(s, a)?;
    let p = s.anchor_point(a);
    let d = &a.dir;
    let n = s.n_sides();
    let mut best: Option<(Quad, usize, Quad)> = None;
    for j in 0..n {
        if j == a.side {
            continue;
        }
        let e = s.side_vector(j);
        let denom = d.cross(&e);
        if denom.is_zero() {
            continue;
        }
        let w = &s.vertices[j] - &p;
        let dist = &w.cross(&e) / &denom;
        let u = &w.cross(d) / &denom;
        if !dist.is_positive() || u.is_negative() || u > Quad::one() {
            continue;
        }
        if best.as_ref().is_none_or(|(b, _, _)| &dist < b) {
            best = Some((dist, j, u));
        }
    }
    let (length, side, u) = best.ok_or(ShapeError::NotInward { side: a.side })?;
    if u.is_zero() || u == Quad::one() {
        return Err(ShapeError::VertexHit { side: a.side });
    }
    let to = &p + &d.scale(&length);
    Ok(ChordSegment {
        start: a.clone(),
        end: Anchor::new(side, u, d.neg()),
        from: p,
        to,
        length,
    })
}

/// Result of following a billiard path by specular reflection.
#[derive(Debug, Clone)]
pub struct Trace {
    /// Starting anchor of every segment, in order.
    pub anchors: Vec<Anchor>,
    /// Segments until the path first returns to the initial anchor.
    pub period: Option<usize>,
    /// The path hits a side perpendicularly and runs back on itself.
    pub retracing: bool,
}

impl Trace {
    pub fn closed(&self) -> bool {
        self.period.is_some()
    }

    /// Geometrically distinct segments of a closed path.
    pub fn distinct_segments(&self) -> Option<usize> {
        self.period.map(|p| if self.retracing { p / 2 } else { p })
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.period {
            Some(p) => writeln!(f, "closed, period {p}{}", if self.retracing { ", retracing" } else { "" })?,
            None => writeln!(f, "open after {} segments", self.anchors.len())?,
        }
        for a in &self.anchors {
            writeln!(f, "  side {} t={} dir=({}; {})", a.side, a.t, a.dir.x, a.dir.y)?;
        }
        Ok(())
    }
}

/// Iterate chord and reflection starting from `a` for at most `max_bounces` segments.
pub fn billiard_trace(s: &ShapeTemplate, a: &Anchor, max_bounces: usize) -> Result<Trace, ShapeError> {
    let mut anchors = vec![];
    let mut cur = a.clone();
    let mut retracing = false;
    for _ in 0..max_bounces.max(1) {
        anchors.push(cur.clone());
        let c = chord(s, &cur)?;
        let incoming = c.end.dir.neg();
        let e = s.side_vector(c.end.side);
        if incoming.dot(&e).is_zero() {
            retracing = true;
        }
        let next = Anchor::new(c.end.side, c.end.t.clone(), incoming.reflect_in(&e));
        if &next == a {
            let period = anchors.len();
            return Ok(Trace { anchors, period: Some(period), retracing });
        }
        cur = next;
    }
    Ok(Trace { anchors, period: None, retracing })
}
