//! Segment clipping against a triangular window.
//!
//! This is a Cohen–Sutherland style clipper with a triangle in place of the
//! usual rectangle. The three side lines split the plane into seven regions,
//! each tagged with a 3-bit outcode:
//!
//! ```text
//!                 \ 101 /
//!                  \   /
//!                    C
//!            100    / \    001
//!                  /000\
//!        ---------A-----B---------
//!           110   |  010  |  011
//! ```
//!
//! (bit `010` = outside AB, `100` = outside AC, `001` = outside BC). Codes
//! of both endpoints decide trivial accept/reject; otherwise the codes also
//! name the only sides the segment can enter and leave through, so at most
//! one or two side intersections are ever computed.

use std::fmt;

use crate::error::{KernelError, Result};
use crate::frame::Point2;
use crate::geom::Tolerance;

/// A side of the window triangle, named by its endpoints.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Side {
    AB,
    AC,
    BC,
}

impl Side {
    pub const ALL: [Side; 3] = [Side::AB, Side::AC, Side::BC];

    /// Outcode bit set for points outside this side's line.
    pub const fn bit(self) -> u8 {
        match self {
            Side::AB => RegionCode::AB_BIT,
            Side::AC => RegionCode::AC_BIT,
            Side::BC => RegionCode::BC_BIT,
        }
    }
}

/// 3-bit outcode of a point against a window triangle.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct RegionCode(u8);

impl RegionCode {
    pub const BC_BIT: u8 = 0b001;
    pub const AB_BIT: u8 = 0b010;
    pub const AC_BIT: u8 = 0b100;

    pub const INSIDE: RegionCode = RegionCode(0);

    /// All seven realizable codes; `111` cannot occur.
    pub const ALL: [RegionCode; 7] = [
        RegionCode(0b000),
        RegionCode(0b001),
        RegionCode(0b010),
        RegionCode(0b011),
        RegionCode(0b100),
        RegionCode(0b101),
        RegionCode(0b110),
    ];

    pub fn from_bits(bits: u8) -> Option<RegionCode> {
        (bits < 7).then_some(RegionCode(bits))
    }

    pub const fn bits(self) -> u8 {
        self.0
    }

    pub const fn is_inside(self) -> bool {
        self.0 == 0
    }

    pub const fn is_outside(self, side: Side) -> bool {
        self.0 & side.bit() != 0
    }
}

impl fmt::Display for RegionCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:03b}", self.0)
    }
}

/// Line `l1·u + l2·v + l3 = 0` in homogeneous form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct HomLine {
    pub l1: f64,
    pub l2: f64,
    pub l3: f64,
}

impl HomLine {
    pub fn eval(&self, p: Point2) -> f64 {
        self.l1 * p.u + self.l2 * p.v + self.l3
    }

    /// Scaled so that `eval` returns a signed Euclidean distance.
    pub fn normalized(&self) -> HomLine {
        let k = self.l1.hypot(self.l2);
        HomLine {
            l1: self.l1 / k,
            l2: self.l2 / k,
            l3: self.l3 / k,
        }
    }
}

/// Line through two points: the cross product of `(p.u, p.v, 1)` and
/// `(q.u, q.v, 1)`. Points left of `p -> q` evaluate positive.
pub fn line_through(p: Point2, q: Point2) -> Result<HomLine> {
    if !(p.is_finite() && q.is_finite()) {
        return Err(KernelError::NonFiniteInput);
    }
    if p == q {
        return Err(KernelError::ZeroLengthSegment);
    }
    Ok(HomLine {
        l1: p.v - q.v,
        l2: q.u - p.u,
        l3: p.u * q.v - p.v * q.u,
    })
}

/// Counter-clockwise window triangle with cached unit side lines.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Triangle2 {
    pub a: Point2,
    pub b: Point2,
    pub c: Point2,
    lines: [HomLine; 3],
}

impl Triangle2 {
    /// Builds a window, swapping `b` and `c` if the input is clockwise.
    pub fn new(a: Point2, b: Point2, c: Point2, tol: &Tolerance) -> Result<Triangle2> {
        if !(a.is_finite() && b.is_finite() && c.is_finite()) {
            return Err(KernelError::NonFiniteInput);
        }
        let area2 = b.sub(a).cross(c.sub(a));
        if 0.5 * area2.abs() < tol.eps_area {
            return Err(KernelError::DegenerateTriangle);
        }
        let (b, c) = if area2 < 0.0 { (c, b) } else { (b, c) };
        let lines = [
            line_through(a, b)?.normalized(),
            line_through(c, a)?.normalized(),
            line_through(b, c)?.normalized(),
        ];
        Ok(Triangle2 { a, b, c, lines })
    }

    pub fn vertices(&self) -> [Point2; 3] {
        [self.a, self.b, self.c]
    }

    pub fn area(&self) -> f64 {
        0.5 * self.b.sub(self.a).cross(self.c.sub(self.a))
    }

    pub fn line(&self, side: Side) -> &HomLine {
        match side {
            Side::AB => &self.lines[0],
            Side::AC => &self.lines[1],
            Side::BC => &self.lines[2],
        }
    }

    /// Side endpoints in counter-clockwise direction (AC runs `c -> a`).
    pub fn side_endpoints(&self, side: Side) -> (Point2, Point2) {
        match side {
            Side::AB => (self.a, self.b),
            Side::AC => (self.c, self.a),
            Side::BC => (self.b, self.c),
        }
    }

    /// Sides in counter-clockwise boundary order starting at `a`.
    pub const BOUNDARY: [Side; 3] = [Side::AB, Side::BC, Side::AC];
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum ClipResult2 {
    Empty,
    Point(Point2),
    Segment(Point2, Point2),
}

impl ClipResult2 {
    /// Homogeneous line carrying a segment result.
    pub fn supporting_line(&self) -> Option<HomLine> {
        match self {
            ClipResult2::Segment(p, q) => line_through(*p, *q).ok(),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum TrivialClass {
    AcceptInside,
    RejectOutside,
    Suspicious,
}

/// Points within `eps_dist` of a side line count as inside that line.
pub fn region_code(p: Point2, w: &Triangle2, tol: &Tolerance) -> RegionCode {
    let mut bits = 0;
    for side in Side::ALL {
        if w.line(side).eval(p) < -tol.eps_dist {
            bits |= side.bit();
        }
    }
    RegionCode(bits)
}

pub fn point_in_triangle(p: Point2, w: &Triangle2, tol: &Tolerance) -> bool {
    region_code(p, w, tol).is_inside()
}

pub fn trivially_classify(c1: RegionCode, c2: RegionCode) -> TrivialClass {
    if c1.is_inside() && c2.is_inside() {
        TrivialClass::AcceptInside
    } else if c1.bits() & c2.bits() != 0 {
        TrivialClass::RejectOutside
    } else {
        TrivialClass::Suspicious
    }
}

fn sides_of(code: RegionCode) -> &'static [Side] {
    match code.bits() {
        0b010 => &[Side::AB],
        0b100 => &[Side::AC],
        0b001 => &[Side::BC],
        0b110 => &[Side::AB, Side::AC],
        0b011 => &[Side::AB, Side::BC],
        0b101 => &[Side::AC, Side::BC],
        _ => &[],
    }
}

/// Sides a segment starting in region `c` can enter the window through.
///
/// A side region offers its one side, a vertex region the two sides meeting
/// at that vertex. From inside there is no entry crossing, so every side is
/// a candidate and they are tried in the order AB, AC, BC.
pub fn candidate_entry_sides(c: RegionCode) -> &'static [Side] {
    if c.is_inside() {
        &Side::ALL
    } else {
        sides_of(c)
    }
}

/// Sides a segment entering from `entry_code` can leave through when its
/// far end is in `exit_code`.
///
/// | entry | exit | exit sides |
/// |-------|------|------------|
/// | any   | 000  | none (far end is inside) |
/// | 010   | 100 / 001 / 101 | AC / BC / AC or BC |
/// | 100   | 010 / 001 / 011 | AB / BC / AB or BC |
/// | 001   | 100 / 010 / 110 | AC / AB / AB or AC |
/// | 110   | 001  | BC |
/// | 011   | 100  | AC |
/// | 101   | 010  | AB |
/// | 000   | c    | the sides `c` is outside of |
///
/// In every row the candidates are exactly the lines the far end is outside
/// of. Pairs sharing a bit are trivially rejected and get no exit side.
pub fn candidate_exit_sides(entry_code: RegionCode, exit_code: RegionCode) -> &'static [Side] {
    if entry_code.bits() & exit_code.bits() != 0 {
        return &[];
    }
    sides_of(exit_code)
}

/// Proper crossing of `p -> q` with a side: returns the parameter along
/// `p -> q` and the point, or `None` when the lines are parallel or the
/// crossing falls outside either segment by more than `eps_param`.
fn side_crossing(
    p: Point2,
    q: Point2,
    side: Side,
    w: &Triangle2,
    tol: &Tolerance,
) -> Option<(f64, Point2)> {
    let (a, b) = w.side_endpoints(side);
    let d = q.sub(p);
    let e = b.sub(a);
    let denom = d.cross(e);
    if denom.abs() <= tol.eps_param * d.norm() * e.norm() {
        return None;
    }
    let ap = a.sub(p);
    let s = ap.cross(e) / denom;
    let u = ap.cross(d) / denom;
    let slack = tol.eps_param;
    if !(-slack..=1.0 + slack).contains(&s) || !(-slack..=1.0 + slack).contains(&u) {
        return None;
    }
    let s = s.clamp(0.0, 1.0);
    Some((s, p.lerp(q, s)))
}

pub fn segment_side_intersection(
    p: Point2,
    q: Point2,
    side: Side,
    w: &Triangle2,
    tol: &Tolerance,
) -> Result<Option<Point2>> {
    if p.distance(q) <= tol.eps_dist {
        return Err(KernelError::ZeroLengthSegment);
    }
    Ok(side_crossing(p, q, side, w, tol).map(|(_, x)| x))
}

/// Overlap of a segment lying along a side line with that side.
fn clip_collinear(p: Point2, q: Point2, side: Side, w: &Triangle2, tol: &Tolerance) -> ClipResult2 {
    let (a, b) = w.side_endpoints(side);
    let e = b.sub(a);
    let len2 = e.dot(e);
    // Side parameter of each segment endpoint.
    let up = p.sub(a).dot(e) / len2;
    let uq = q.sub(a).dot(e) / len2;
    let lo = up.min(uq).max(0.0);
    let hi = up.max(uq).min(1.0);
    let slack = tol.eps_dist / len2.sqrt();
    if lo > hi + slack {
        return ClipResult2::Empty;
    }
    let hi = hi.max(lo);
    // Keep the segment's own direction.
    let (first, second) = if up <= uq { (lo, hi) } else { (hi, lo) };
    let x = a.lerp(b, first);
    let y = a.lerp(b, second);
    if x.distance(y) <= tol.eps_dist {
        ClipResult2::Point(x)
    } else {
        ClipResult2::Segment(x, y)
    }
}

/// Part of segment `p -> q` inside the closed window `w`.
///
/// Trivial cases are settled from the outcodes alone. For a suspicious
/// segment the entry crossing is searched only on
/// [`candidate_entry_sides`] of the start code and the exit crossing only on
/// [`candidate_exit_sides`]; a start or end already inside the window is its
/// own entry or exit. The result keeps the direction of `p -> q`.
pub fn clip_segment_to_triangle(
    p: Point2,
    q: Point2,
    w: &Triangle2,
    tol: &Tolerance,
) -> Result<ClipResult2> {
    if !(p.is_finite() && q.is_finite()) {
        return Err(KernelError::NonFiniteInput);
    }
    if p.distance(q) <= tol.eps_dist {
        return Err(KernelError::ZeroLengthSegment);
    }
    if w.area() < tol.eps_area {
        return Err(KernelError::DegenerateTriangle);
    }

    let c1 = region_code(p, w, tol);
    let c2 = region_code(q, w, tol);
    match trivially_classify(c1, c2) {
        TrivialClass::AcceptInside => return Ok(ClipResult2::Segment(p, q)),
        TrivialClass::RejectOutside => return Ok(ClipResult2::Empty),
        TrivialClass::Suspicious => {}
    }

    for side in Side::ALL {
        let line = w.line(side);
        if line.eval(p).abs() <= tol.eps_dist && line.eval(q).abs() <= tol.eps_dist {
            return Ok(clip_collinear(p, q, side, w, tol));
        }
    }

    let entry = if c1.is_inside() {
        Some((0.0, p))
    } else {
        candidate_entry_sides(c1)
            .iter()
            .filter_map(|&side| side_crossing(p, q, side, w, tol))
            .min_by(|x, y| x.0.total_cmp(&y.0))
    };
    let Some(entry) = entry else {
        return Ok(ClipResult2::Empty);
    };

    let exit = if c2.is_inside() {
        Some((1.0, q))
    } else {
        let sides = candidate_exit_sides(c1, c2);
        sides
            .iter()
            .filter_map(|&side| side_crossing(p, q, side, w, tol))
            .filter(|x| x.0 >= entry.0)
            .max_by(|x, y| x.0.total_cmp(&y.0))
    };
    // Grazing contact: the entry crossing is also the last point inside.
    let exit = exit.unwrap_or(entry);

    Ok(if entry.1.distance(exit.1) <= tol.eps_dist {
        ClipResult2::Point(entry.1)
    } else {
        ClipResult2::Segment(entry.1, exit.1)
    })
}
