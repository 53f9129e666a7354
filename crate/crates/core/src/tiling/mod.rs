//! Punctured hexagons and their rhombus tilings, encoded as families of
//! nonintersecting lattice paths.
//!
//! Path coordinates follow the usual picture: each path takes unit steps east
//! `(x+1, y)` or south `(x, y-1)`. The lattice point `(x, y)` corresponds to
//! the vertical triangle edge at column `x - y`, row `y`; a path step traverses
//! one rhombus containing a vertical edge. The hexagon with sides
//! `a, b+1, c, a+1, b, c+1` becomes the region
//! `0 <= x <= a+b`, `0 <= y <= a+c`, `-c-1 <= x-y <= b`.

mod enumerate;
mod lgv;
mod svg;

pub use enumerate::{enumerate_tilings, for_each_family, nth_family, ENUMERATION_GUARD};
pub use lgv::count_via_path_determinants;
pub use svg::{render_tiling_svg, rhombus_count};

use std::fmt;

use crate::combinat::binomial;
use crate::error::{Error, Result};
use crate::ExactInt;

/// A point of the integer lattice.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePoint {
    pub x: i64,
    pub y: i64,
}

impl LatticePoint {
    pub const fn new(x: i64, y: i64) -> Self {
        LatticePoint { x, y }
    }

    pub fn step(self, s: Step) -> LatticePoint {
        match s {
            Step::East => LatticePoint::new(self.x + 1, self.y),
            Step::South => LatticePoint::new(self.x, self.y - 1),
        }
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.x, self.y)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Step {
    East,
    South,
}

/// A lattice path given by its start and its unit steps.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct LatticePath {
    pub start: LatticePoint,
    pub steps: Vec<Step>,
}

impl LatticePath {
    /// All visited points, start included.
    pub fn points(&self) -> Vec<LatticePoint> {
        let mut out = Vec::with_capacity(self.steps.len() + 1);
        let mut p = self.start;
        out.push(p);
        for &s in &self.steps {
            p = p.step(s);
            out.push(p);
        }
        out
    }

    pub fn end(&self) -> LatticePoint {
        self.steps.iter().fold(self.start, |p, &s| p.step(s))
    }
}

/// Paths `P_1, ..., P_{a+1}`; `P_{a+1}` starts at the puncture.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PathFamily {
    pub paths: Vec<LatticePath>,
}

/// The hexagon with sides `a, b+1, c, a+1, b, c+1` (clockwise from the left)
/// with one unit triangle removed.
///
/// The removed triangle is the one to the left of the vertical edge at the
/// puncture point. The default puncture is the centre `((a+b)/2, (a+c)/2)` when
/// `a, b, c` share parity, and `((a+b)/2, (a+c+1)/2)` when only `a, b` do.
/// `puncture_offset` shifts the puncture away from that default.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PuncturedHexagon {
    a: usize,
    b: usize,
    c: usize,
    puncture_offset: (i64, i64),
}

impl PuncturedHexagon {
    /// The hexagon with its default puncture.
    pub fn new(a: usize, b: usize, c: usize) -> Result<Self> {
        Self::with_offset(a, b, c, 0, 0)
    }

    /// The hexagon with the puncture moved by `(dx, dy)` from its default.
    pub fn with_offset(a: usize, b: usize, c: usize, dx: i64, dy: i64) -> Result<Self> {
        if a == 0 || b == 0 || c == 0 {
            return Err(Error::Precondition(format!(
                "side lengths must be positive, got ({a},{b},{c})"
            )));
        }
        let h = PuncturedHexagon { a, b, c, puncture_offset: (dx, dy) };
        let base = default_puncture(a, b, c)?;
        let p = LatticePoint::new(base.x + dx, base.y + dy);
        if !h.contains(p) || p.x - p.y == -(c as i64) - 1 {
            return Err(Error::InvalidPuncture(format!(
                "{p} does not mark a triangle inside the ({a},{b},{c}) hexagon"
            )));
        }
        Ok(h)
    }

    pub fn a(&self) -> usize {
        self.a
    }

    pub fn b(&self) -> usize {
        self.b
    }

    pub fn c(&self) -> usize {
        self.c
    }

    pub fn puncture_offset(&self) -> (i64, i64) {
        self.puncture_offset
    }

    /// `true` for the centrally punctured hexagon with `a, b, c` of equal parity.
    pub fn is_central(&self) -> bool {
        self.puncture_offset == (0, 0) && self.a % 2 == self.c % 2
    }

    /// The start point `A_{a+1}` of the exceptional path.
    pub fn puncture(&self) -> LatticePoint {
        let base = default_puncture(self.a, self.b, self.c).expect("validated at construction");
        LatticePoint::new(base.x + self.puncture_offset.0, base.y + self.puncture_offset.1)
    }

    /// Whether `p` corresponds to a vertical edge of the hexagon.
    pub fn contains(&self, p: LatticePoint) -> bool {
        let (a, b, c) = (self.a as i64, self.b as i64, self.c as i64);
        (0..=a + b).contains(&p.x) && (0..=a + c).contains(&p.y) && (-c - 1..=b).contains(&(p.x - p.y))
    }

    /// Total number of unit triangles, puncture included.
    pub fn area(&self) -> usize {
        let (a, b, c) = (self.a, self.b, self.c);
        (a + b + 1 + c).pow(2) - a * a - b * b - c * c
    }
}

impl fmt::Display for PuncturedHexagon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "H({},{},{}) punctured at {}", self.a, self.b, self.c, self.puncture())
    }
}

/// The default puncture point for sides `(a, b, c)`.
pub fn default_puncture(a: usize, b: usize, c: usize) -> Result<LatticePoint> {
    if a % 2 != b % 2 {
        return Err(Error::Parity(format!(
            "a and b must share parity for a default puncture, got ({a},{b},{c})"
        )));
    }
    let x = ((a + b) / 2) as i64;
    let y = if a % 2 == c % 2 { (a + c) / 2 } else { (a + c + 1) / 2 } as i64;
    Ok(LatticePoint::new(x, y))
}

/// `(A_1, ..., A_{a+1})` and `(E_1, ..., E_{a+1})` with
/// `A_i = (i-1, c+i)`, `E_j = (b+j-1, j-1)` and `A_{a+1}` the puncture.
pub fn start_end_points(h: &PuncturedHexagon) -> (Vec<LatticePoint>, Vec<LatticePoint>) {
    let (a, b, c) = (h.a as i64, h.b as i64, h.c as i64);
    let mut starts: Vec<LatticePoint> = (1..=a).map(|i| LatticePoint::new(i - 1, c + i)).collect();
    starts.push(h.puncture());
    let ends = (1..=a + 1).map(|j| LatticePoint::new(b + j - 1, j - 1)).collect();
    (starts, ends)
}

/// Start and end points for the centrally punctured hexagon; fails unless
/// `a, b, c` share parity.
pub fn central_start_end_points(
    a: usize,
    b: usize,
    c: usize,
) -> Result<(Vec<LatticePoint>, Vec<LatticePoint>)> {
    if a % 2 != b % 2 || b % 2 != c % 2 {
        return Err(Error::Parity(format!(
            "a central puncture needs a, b, c of equal parity, got ({a},{b},{c})"
        )));
    }
    Ok(start_end_points(&PuncturedHexagon::new(a, b, c)?))
}

/// Number of east/south lattice paths from `p` to `q`.
pub fn count_paths(p: LatticePoint, q: LatticePoint) -> ExactInt {
    let east = q.x - p.x;
    let south = p.y - q.y;
    if east < 0 || south < 0 {
        return ExactInt::from(0);
    }
    binomial(east + south, east)
}

/// Checks that `family` is a nonintersecting path family for `h`.
pub fn validate_family(h: &PuncturedHexagon, family: &PathFamily) -> Result<()> {
    let (starts, ends) = start_end_points(h);
    if family.paths.len() != starts.len() {
        return Err(Error::InvalidFamily(format!(
            "expected {} paths, got {}",
            starts.len(),
            family.paths.len()
        )));
    }
    let mut seen = std::collections::HashSet::new();
    for (i, (path, &start)) in family.paths.iter().zip(&starts).enumerate() {
        if path.start != start {
            return Err(Error::InvalidFamily(format!(
                "path {} starts at {} instead of {start}",
                i + 1,
                path.start
            )));
        }
        for p in path.points() {
            if !h.contains(p) {
                return Err(Error::InvalidFamily(format!("path {} leaves the hexagon at {p}", i + 1)));
            }
            if !seen.insert(p) {
                return Err(Error::InvalidFamily(format!("paths meet at {p}")));
            }
        }
        if !ends.contains(&path.end()) {
            return Err(Error::InvalidFamily(format!(
                "path {} ends at {}, which is not an end point",
                i + 1,
                path.end()
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(x: i64, y: i64) -> LatticePoint {
        LatticePoint::new(x, y)
    }

    #[test]
    fn start_end_examples() {
        let (s, e) = central_start_end_points(3, 5, 5).unwrap();
        assert_eq!(s[3], pt(4, 4));
        assert_eq!(s[0], pt(0, 6));
        assert_eq!(e[0], pt(5, 0));
        let (s, e) = central_start_end_points(1, 1, 1).unwrap();
        assert_eq!(s, vec![pt(0, 2), pt(1, 1)]);
        assert_eq!(e, vec![pt(1, 0), pt(2, 1)]);
        assert!(matches!(central_start_end_points(1, 1, 2), Err(Error::Parity(_))));
    }

    #[test]
    fn count_paths_examples() {
        assert_eq!(count_paths(pt(0, 3), pt(2, 0)), ExactInt::from(10));
        assert_eq!(count_paths(pt(4, 4), pt(4, 4)), ExactInt::from(1));
        assert_eq!(count_paths(pt(2, 0), pt(0, 0)), ExactInt::from(0));
    }

    #[test]
    fn puncture_positions() {
        assert_eq!(PuncturedHexagon::new(1, 1, 2).unwrap().puncture(), pt(1, 2));
        assert_eq!(PuncturedHexagon::new(2, 2, 1).unwrap().puncture(), pt(2, 2));
        assert!(PuncturedHexagon::new(1, 2, 1).is_err());
        assert!(PuncturedHexagon::new(0, 2, 2).is_err());
        assert!(PuncturedHexagon::with_offset(1, 1, 1, 5, 0).is_err());
        // left boundary edge has no triangle to its left inside the hexagon
        assert!(PuncturedHexagon::with_offset(1, 1, 1, -1, 1).is_err());
        assert!(PuncturedHexagon::with_offset(1, 1, 1, 1, 0).is_ok());
    }

    #[test]
    fn area_bookkeeping() {
        assert_eq!(PuncturedHexagon::new(1, 1, 1).unwrap().area(), 13);
    }
}
