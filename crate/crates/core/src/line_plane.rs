//! Triangle edges against a plane.
//!
//! An edge `p1 -> p2` is the parametric line `p1 + t·(p2 - p1)`; substituting
//! it into the plane equation gives `t = -(n·p1 + r) / (n·(p2 - p1))`. The
//! crossing belongs to the edge iff `t ∈ [0, 1]`.
//!
//! Endpoints within `eps_dist` of the plane are snapped onto it: such an
//! endpoint is reported as the hit itself rather than through the division,
//! which keeps shared-vertex and edge-in-plane contacts exact.

use crate::error::{KernelError, Result};
use crate::geom::{signed_distance, Plane, Point3, Tolerance, Triangle3};

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ParamLine {
    pub origin: Point3,
    pub direction: Point3,
}

impl ParamLine {
    pub fn at(&self, t: f64) -> Point3 {
        self.origin + self.direction * t
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgePlaneHit {
    None,
    AtPoint { point: Point3, t: f64 },
    EdgeInPlane,
}

/// Where a triangle meets a plane it does not lie in.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum EdgeProjection {
    /// All vertices strictly on one side.
    Empty,
    /// One contact point: a vertex on the plane, the others on one side.
    Point(Point3),
    /// The triangle straddles the plane (or has an edge in it).
    Segment(Point3, Point3),
    /// Every vertex is on the plane; handled by the coplanar path instead.
    CoplanarEdges,
}

pub fn param_line_from_segment(p1: Point3, p2: Point3, tol: &Tolerance) -> Result<ParamLine> {
    if !(p1.is_finite() && p2.is_finite()) {
        return Err(KernelError::NonFiniteInput);
    }
    if p1.distance(p2) <= tol.eps_dist {
        return Err(KernelError::ZeroLengthSegment);
    }
    Ok(ParamLine {
        origin: p1,
        direction: p2 - p1,
    })
}

/// Line parameter where `line` meets `pl`.
///
/// The denominator `n·direction` is the change in signed distance over the
/// unit parameter step; at or below `eps_dist` the line counts as parallel.
pub fn solve_t(line: &ParamLine, pl: &Plane, tol: &Tolerance) -> Result<f64> {
    let denom = pl.normal().dot(line.direction);
    if denom.abs() <= tol.eps_dist {
        return Err(KernelError::ParallelToPlane);
    }
    Ok(-signed_distance(line.origin, pl) / denom)
}

pub fn edge_plane_intersection(
    p1: Point3,
    p2: Point3,
    pl: &Plane,
    tol: &Tolerance,
) -> Result<EdgePlaneHit> {
    let line = param_line_from_segment(p1, p2, tol)?;
    let d1 = signed_distance(p1, pl);
    let d2 = signed_distance(p2, pl);
    let on1 = d1.abs() <= tol.eps_dist;
    let on2 = d2.abs() <= tol.eps_dist;
    Ok(match (on1, on2) {
        (true, true) => EdgePlaneHit::EdgeInPlane,
        (true, false) => EdgePlaneHit::AtPoint { point: p1, t: 0.0 },
        (false, true) => EdgePlaneHit::AtPoint { point: p2, t: 1.0 },
        (false, false) => match solve_t(&line, pl, tol) {
            Ok(t) if t >= -tol.eps_param && t <= 1.0 + tol.eps_param => {
                let t = t.clamp(0.0, 1.0);
                EdgePlaneHit::AtPoint {
                    point: line.at(t),
                    t,
                }
            }
            _ => EdgePlaneHit::None,
        },
    })
}

/// Intersects each edge of `tri` with `pl` and merges hits closer than
/// `eps_dist` (a vertex on the plane is reported by both incident edges).
pub fn project_triangle_edges(
    tri: &Triangle3,
    pl: &Plane,
    tol: &Tolerance,
) -> Result<EdgeProjection> {
    tri.validate(tol)?;
    let mut points: Vec<Point3> = Vec::with_capacity(3);
    let mut add = |p: Point3| {
        if points.iter().all(|q| q.distance(p) > tol.eps_dist) {
            points.push(p);
        }
    };
    let mut in_plane = 0;
    for (p1, p2) in tri.edges() {
        match edge_plane_intersection(p1, p2, pl, tol)? {
            EdgePlaneHit::None => {}
            EdgePlaneHit::AtPoint { point, .. } => add(point),
            EdgePlaneHit::EdgeInPlane => {
                in_plane += 1;
                add(p1);
                add(p2);
            }
        }
    }
    if in_plane >= 2 {
        return Ok(EdgeProjection::CoplanarEdges);
    }
    Ok(match points.as_slice() {
        [] => EdgeProjection::Empty,
        [p] => EdgeProjection::Point(*p),
        [p, q] => EdgeProjection::Segment(*p, *q),
        // Unreachable with snapped endpoints; keep the widest pair if
        // rounding ever produces a third hit.
        _ => {
            let mut best = (points[0], points[1]);
            for i in 0..points.len() {
                for j in i + 1..points.len() {
                    if points[i].distance(points[j]) > best.0.distance(best.1) {
                        best = (points[i], points[j]);
                    }
                }
            }
            EdgeProjection::Segment(best.0, best.1)
        }
    })
}
