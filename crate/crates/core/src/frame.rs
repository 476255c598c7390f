//! Rigid motion taking a plane to 2D coordinates and back.
//!
//! The anchor maps to the 2D origin and the plane normal becomes the dropped
//! coordinate, so on-plane points keep their distances exactly (up to
//! rounding).

use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};
use crate::geom::{signed_distance, Plane, Point3, Tolerance};

#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point2 {
    pub u: f64,
    pub v: f64,
}

// Plain value methods; `Point2` deliberately stays free of operator traits.
#[allow(clippy::should_implement_trait)]
impl Point2 {
    pub const fn new(u: f64, v: f64) -> Self {
        Point2 { u, v }
    }

    pub fn sub(self, o: Point2) -> Point2 {
        Point2::new(self.u - o.u, self.v - o.v)
    }

    pub fn add(self, o: Point2) -> Point2 {
        Point2::new(self.u + o.u, self.v + o.v)
    }

    pub fn scale(self, k: f64) -> Point2 {
        Point2::new(self.u * k, self.v * k)
    }

    pub fn dot(self, o: Point2) -> f64 {
        self.u * o.u + self.v * o.v
    }

    /// z-component of the 3D cross product.
    pub fn cross(self, o: Point2) -> f64 {
        self.u * o.v - self.v * o.u
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, o: Point2) -> f64 {
        self.sub(o).norm()
    }

    pub fn lerp(self, o: Point2, t: f64) -> Point2 {
        self.add(o.sub(self).scale(t))
    }

    pub fn is_finite(self) -> bool {
        self.u.is_finite() && self.v.is_finite()
    }
}

impl From<[f64; 2]> for Point2 {
    fn from([u, v]: [f64; 2]) -> Self {
        Point2::new(u, v)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PlaneFrame {
    pub origin: Point3,
    pub u_axis: Point3,
    pub v_axis: Point3,
    pub n_axis: Point3,
}

/// Frame with `n_axis` = plane normal, origin at `anchor`.
///
/// `u_axis` starts from the world axis least aligned with the normal and is
/// orthogonalized against it; `v_axis = n × u` completes a right-handed
/// basis, so counter-clockwise about the normal stays counter-clockwise in 2D.
pub fn build_frame(pl: &Plane, anchor: Point3, tol: &Tolerance) -> Result<PlaneFrame> {
    if !anchor.is_finite() {
        return Err(KernelError::NonFiniteInput);
    }
    if signed_distance(anchor, pl).abs() > tol.eps_dist {
        return Err(KernelError::AnchorOffPlane);
    }
    let n = pl.normal();
    let axes = [
        Point3::new(1.0, 0.0, 0.0),
        Point3::new(0.0, 1.0, 0.0),
        Point3::new(0.0, 0.0, 1.0),
    ];
    let seed = axes
        .into_iter()
        .min_by(|a, b| a.dot(n).abs().total_cmp(&b.dot(n).abs()))
        .expect("three axes");
    let u = seed - n * seed.dot(n);
    let u = u / u.norm();
    let v = n.cross(u);
    Ok(PlaneFrame {
        origin: anchor,
        u_axis: u,
        v_axis: v / v.norm(),
        n_axis: n,
    })
}

impl PlaneFrame {
    /// Projection onto the frame without the on-plane check.
    pub fn project(&self, p: Point3) -> Point2 {
        let d = p - self.origin;
        Point2::new(d.dot(self.u_axis), d.dot(self.v_axis))
    }

    pub fn height(&self, p: Point3) -> f64 {
        (p - self.origin).dot(self.n_axis)
    }
}

pub fn to_plane(f: &PlaneFrame, p: Point3, tol: &Tolerance) -> Result<Point2> {
    if f.height(p).abs() > tol.eps_dist {
        return Err(KernelError::PointOffPlane);
    }
    Ok(f.project(p))
}

pub fn from_plane(f: &PlaneFrame, q: Point2) -> Point3 {
    f.origin + f.u_axis * q.u + f.v_axis * q.v
}
