use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// A point of a system, labelled 1..=n.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Point(u32);

impl Point {
    pub fn new(index: u32) -> Point {
        assert!(index >= 1, "points are 1-based");
        Point(index)
    }

    /// 1-based label, as it appears in all interfaces and reports.
    pub fn index(self) -> u32 {
        self.0
    }

    /// 0-based position for internal array indexing.
    pub(crate) fn zi(self) -> usize {
        self.0 as usize - 1
    }
}

impl std::fmt::Display for Point {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// An unordered triple, stored with its points in ascending order.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct Triple([Point; 3]);

impl Triple {
    pub fn new(a: u32, b: u32, c: u32) -> Result<Triple> {
        if a == 0 || b == 0 || c == 0 || a == b || a == c || b == c {
            return Err(Error::MalformedTriple(a, b, c));
        }
        let mut p = [a, b, c];
        p.sort_unstable();
        Ok(Triple([
            Point::new(p[0]),
            Point::new(p[1]),
            Point::new(p[2]),
        ]))
    }

    pub fn points(&self) -> [Point; 3] {
        self.0
    }

    pub fn labels(&self) -> [u32; 3] {
        [self.0[0].index(), self.0[1].index(), self.0[2].index()]
    }

    pub fn contains(&self, p: Point) -> bool {
        self.0.contains(&p)
    }

    pub fn max_label(&self) -> u32 {
        self.0[2].index()
    }
}

impl std::fmt::Display for Triple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{} {} {}", self.0[0], self.0[1], self.0[2])
    }
}

/// A cyclically ordered triple, stored in canonical rotation (minimum point first).
///
/// `[a,b,c]`, `[b,c,a]` and `[c,a,b]` compare equal; the reversal `[a,c,b]`
/// compares unequal.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct OrientedTriple([Point; 3]);

/// Rotates a 3-cycle so that its minimum point comes first.
pub fn canonical_rotation(cycle: [u32; 3]) -> Result<OrientedTriple> {
    let [a, b, c] = cycle;
    if a == 0 || b == 0 || c == 0 || a == b || a == c || b == c {
        return Err(Error::MalformedTriple(a, b, c));
    }
    let mut best = 0;
    for i in 1..3 {
        if cycle[i] < cycle[best] {
            best = i;
        }
    }
    let rot = [cycle[best], cycle[(best + 1) % 3], cycle[(best + 2) % 3]];
    Ok(OrientedTriple([
        Point::new(rot[0]),
        Point::new(rot[1]),
        Point::new(rot[2]),
    ]))
}

impl OrientedTriple {
    pub fn cycle(&self) -> [Point; 3] {
        self.0
    }

    pub fn labels(&self) -> [u32; 3] {
        [self.0[0].index(), self.0[1].index(), self.0[2].index()]
    }

    /// The underlying unordered triple.
    pub fn underlying(&self) -> Triple {
        let [a, b, c] = self.labels();
        Triple::new(a, b, c).expect("oriented triple is well-formed")
    }

    /// The opposite cyclic order, canonically rotated.
    pub fn reversed(&self) -> OrientedTriple {
        let [a, b, c] = self.labels();
        canonical_rotation([a, c, b]).expect("reversal of a valid cycle is valid")
    }

    /// True when the cycle is the ascending rotation of its underlying triple.
    pub fn is_ascending(&self) -> bool {
        let [a, b, c] = self.labels();
        a < b && b < c
    }
}

impl std::fmt::Display for OrientedTriple {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "[{},{},{}]", self.0[0], self.0[1], self.0[2])
    }
}
