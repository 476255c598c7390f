//! Triangle–triangle intersection in 3D.
//!
//! The 3D problem is reduced to 2D: the second triangle is cut by the first
//! triangle's plane, the cut is expressed in a frame on that plane, and it
//! is clipped by the first triangle with a seven-region outcode clipper.
//! Coplanar pairs go through a Weiler–Atherton polygon clip instead.
//!
//! ```
//! use tritri::{intersect, CaseLabel, Tolerance, Triangle3};
//!
//! let t1 = Triangle3::from([[0., 0., 0.], [4., 0., 0.], [0., 4., 0.]]);
//! let t2 = Triangle3::from([[1., 1., -1.], [1., 1., 2.], [3., 3., 2.]]);
//! let (case, result) = intersect(&t1, &t2, &Tolerance::default()).unwrap();
//! assert_eq!(case, CaseLabel::CrossingSegment);
//! assert_eq!(result.points().len(), 2);
//! ```

pub mod batch;
pub mod clip2d;
pub mod coplanar;
pub mod error;
pub mod frame;
pub mod geom;
pub mod intersect;
pub mod line_plane;

pub use clip2d::{
    candidate_entry_sides, candidate_exit_sides, clip_segment_to_triangle, line_through,
    point_in_triangle, region_code, segment_side_intersection, trivially_classify, ClipResult2,
    HomLine, RegionCode, Side, Triangle2, TrivialClass,
};
pub use coplanar::{
    build_vertex_loops, intersect_coplanar, trace_contour, ContourResult, NodeKind, VertexLoop,
    VertexLoops, VertexNode,
};
pub use error::{KernelError, Result};
pub use frame::{build_frame, from_plane, to_plane, PlaneFrame, Point2};
pub use geom::{
    classify_planes, plane_from_triangle, signed_distance, Plane, PlaneRelation, Point3, Tolerance,
    Triangle3,
};
pub use intersect::{classify_only, intersect, CaseLabel, EmptyReason, IntersectionResult};
pub use line_plane::{
    edge_plane_intersection, param_line_from_segment, project_triangle_edges, solve_t,
    EdgePlaneHit, EdgeProjection, ParamLine,
};
