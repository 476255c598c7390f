//! Top-level dispatch over the six arrangements of two triangles.
//!
//! t1's supporting plane is the reference. If every vertex of t2 lies on it
//! the pair is coplanar and goes to the Weiler–Atherton clip in t1's frame.
//! Otherwise t2's edges are cut by t1's plane; the resulting point or segment
//! is mapped into t1's frame and clipped by t1's 2D image.

use serde::{Deserialize, Serialize};

use crate::clip2d::{clip_segment_to_triangle, point_in_triangle, ClipResult2, Triangle2};
use crate::coplanar::{intersect_coplanar, ContourResult};
use crate::error::Result;
use crate::frame::{build_frame, from_plane, PlaneFrame, Point2};
use crate::geom::{
    classify_planes, plane_from_triangle, signed_distance, PlaneRelation, Point3, Tolerance,
    Triangle3,
};
use crate::line_plane::{project_triangle_edges, EdgeProjection};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum CaseLabel {
    CoplanarNoContact,
    CoplanarContour,
    ParallelPlanes,
    CrossingPlanesNoContact,
    TouchPoint,
    CrossingSegment,
}

impl CaseLabel {
    pub const ALL: [CaseLabel; 6] = [
        CaseLabel::CoplanarNoContact,
        CaseLabel::CoplanarContour,
        CaseLabel::ParallelPlanes,
        CaseLabel::CrossingPlanesNoContact,
        CaseLabel::TouchPoint,
        CaseLabel::CrossingSegment,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CaseLabel::CoplanarNoContact => "CoplanarNoContact",
            CaseLabel::CoplanarContour => "CoplanarContour",
            CaseLabel::ParallelPlanes => "ParallelPlanes",
            CaseLabel::CrossingPlanesNoContact => "CrossingPlanesNoContact",
            CaseLabel::TouchPoint => "TouchPoint",
            CaseLabel::CrossingSegment => "CrossingSegment",
        }
    }
}

impl std::fmt::Display for CaseLabel {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum EmptyReason {
    ParallelPlanes,
    CoplanarDisjoint,
    PlanesCrossNoContact,
    SegmentOutsideWindow,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub enum IntersectionResult {
    Empty(EmptyReason),
    Touch(Point3),
    Segment(Point3, Point3),
    /// Convex, counter-clockwise about t1's normal, 3 to 6 vertices.
    Contour(Vec<Point3>),
}

impl IntersectionResult {
    pub fn points(&self) -> Vec<Point3> {
        match self {
            IntersectionResult::Empty(_) => Vec::new(),
            IntersectionResult::Touch(p) => vec![*p],
            IntersectionResult::Segment(p, q) => vec![*p, *q],
            IntersectionResult::Contour(v) => v.clone(),
        }
    }

    pub fn is_empty(&self) -> bool {
        matches!(self, IntersectionResult::Empty(_))
    }
}

fn image(frame: &PlaneFrame, t: &Triangle3, tol: &Tolerance) -> Result<Triangle2> {
    let [a, b, c] = t.vertices().map(|p| frame.project(p));
    Triangle2::new(a, b, c, tol)
}

fn lift_all(frame: &PlaneFrame, pts: &[Point2]) -> Vec<Point3> {
    pts.iter().map(|&q| from_plane(frame, q)).collect()
}

pub fn intersect(
    t1: &Triangle3,
    t2: &Triangle3,
    tol: &Tolerance,
) -> Result<(CaseLabel, IntersectionResult)> {
    t1.validate(tol)?;
    t2.validate(tol)?;
    let pl1 = plane_from_triangle(t1, tol)?;
    let pl2 = plane_from_triangle(t2, tol)?;
    let frame = build_frame(&pl1, t1.a, tol)?;
    let window = image(&frame, t1, tol)?;

    let d = t2.vertices().map(|p| signed_distance(p, &pl1));
    if d.iter().all(|x| x.abs() <= tol.eps_dist) {
        let clipped = image(&frame, t2, tol)?;
        let contour = match intersect_coplanar(&window, &clipped, tol)? {
            ContourResult::Disjoint => {
                return Ok((
                    CaseLabel::CoplanarNoContact,
                    IntersectionResult::Empty(EmptyReason::CoplanarDisjoint),
                ))
            }
            ContourResult::Contour(c) => c,
            ContourResult::ClippedInsideWindow => clipped.vertices().to_vec(),
            ContourResult::WindowInsideClipped => window.vertices().to_vec(),
        };
        return Ok((
            CaseLabel::CoplanarContour,
            IntersectionResult::Contour(lift_all(&frame, &contour)),
        ));
    }

    let same_side = d.iter().all(|&x| x > tol.eps_dist) || d.iter().all(|&x| x < -tol.eps_dist);
    if same_side && classify_planes(&pl1, &pl2, tol) != PlaneRelation::Intersecting {
        return Ok((
            CaseLabel::ParallelPlanes,
            IntersectionResult::Empty(EmptyReason::ParallelPlanes),
        ));
    }

    let outside = || {
        Ok((
            CaseLabel::CrossingPlanesNoContact,
            IntersectionResult::Empty(EmptyReason::SegmentOutsideWindow),
        ))
    };
    match project_triangle_edges(t2, &pl1, tol)? {
        EdgeProjection::Empty => Ok((
            CaseLabel::CrossingPlanesNoContact,
            IntersectionResult::Empty(EmptyReason::PlanesCrossNoContact),
        )),
        EdgeProjection::Point(p) => {
            let q = frame.project(p);
            if point_in_triangle(q, &window, tol) {
                Ok((
                    CaseLabel::TouchPoint,
                    IntersectionResult::Touch(from_plane(&frame, q)),
                ))
            } else {
                outside()
            }
        }
        EdgeProjection::Segment(p, q) => {
            let (p2, q2) = (frame.project(p), frame.project(q));
            match clip_segment_to_triangle(p2, q2, &window, tol)? {
                ClipResult2::Empty => outside(),
                ClipResult2::Point(x) => Ok((
                    CaseLabel::TouchPoint,
                    IntersectionResult::Touch(from_plane(&frame, x)),
                )),
                ClipResult2::Segment(x, y) => Ok((
                    CaseLabel::CrossingSegment,
                    IntersectionResult::Segment(from_plane(&frame, x), from_plane(&frame, y)),
                )),
            }
        }
        // Unreachable: all three distances would be within eps_dist.
        EdgeProjection::CoplanarEdges => outside(),
    }
}

pub fn classify_only(t1: &Triangle3, t2: &Triangle3, tol: &Tolerance) -> Result<CaseLabel> {
    intersect(t1, t2, tol).map(|(label, _)| label)
}
