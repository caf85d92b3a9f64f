use std::fmt;
use std::ops::{Add, Sub};

use crate::Quad;

/// A point or vector in the plane with exact coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Pt {
    pub x: Quad,
    pub y: Quad,
}

impl Pt {
    pub fn new(x: Quad, y: Quad) -> Self {
        Pt { x, y }
    }

    pub fn origin() -> Self {
        Pt::new(Quad::zero(), Quad::zero())
    }

    pub fn dot(&self, o: &Pt) -> Quad {
        &self.x * &o.x + &self.y * &o.y
    }

    pub fn cross(&self, o: &Pt) -> Quad {
        &self.x * &o.y - &self.y * &o.x
    }

    pub fn scale(&self, k: &Quad) -> Pt {
        Pt::new(&self.x * k, &self.y * k)
    }

    pub fn neg(&self) -> Pt {
        Pt::new(-&self.x, -&self.y)
    }

    /// Quarter turn counterclockwise: `(-y, x)`.
    pub fn perp(&self) -> Pt {
        Pt::new(-&self.y, self.x.clone())
    }

    pub fn norm2(&self) -> Quad {
        self.dot(self)
    }

    /// Mirror image of a direction in a line with direction `axis`.
    pub fn reflect_in(&self, axis: &Pt) -> Pt {
        let n = axis.perp();
        let k = &(&self.dot(&n) * &Quad::int(2)) / &n.norm2();
        self - &n.scale(&k)
    }
}

impl<'a> Add<&'a Pt> for &'a Pt {
    type Output = Pt;
    fn add(self, o: &Pt) -> Pt {
        Pt::new(&self.x + &o.x, &self.y + &o.y)
    }
}

impl<'a> Sub<&'a Pt> for &'a Pt {
    type Output = Pt;
    fn sub(self, o: &Pt) -> Pt {
        Pt::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl fmt::Display for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.x, self.y)
    }
}

impl fmt::Debug for Pt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
