//! Numeric foundation: points, triangles, planes and the tolerance policy.

use std::ops::{Add, Div, Mul, Neg, Sub};

use serde::{Deserialize, Serialize};

use crate::error::{KernelError, Result};

/// A point (or free vector) in world space.
#[derive(Debug, Clone, Copy, PartialEq, Default, Serialize, Deserialize)]
pub struct Point3 {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl Point3 {
    pub const fn new(x: f64, y: f64, z: f64) -> Self {
        Point3 { x, y, z }
    }

    pub fn dot(self, o: Point3) -> f64 {
        self.x * o.x + self.y * o.y + self.z * o.z
    }

    pub fn cross(self, o: Point3) -> Point3 {
        Point3::new(
            self.y * o.z - self.z * o.y,
            self.z * o.x - self.x * o.z,
            self.x * o.y - self.y * o.x,
        )
    }

    pub fn norm(self) -> f64 {
        self.dot(self).sqrt()
    }

    pub fn distance(self, o: Point3) -> f64 {
        (self - o).norm()
    }

    pub fn lerp(self, o: Point3, t: f64) -> Point3 {
        self + (o - self) * t
    }

    pub fn is_finite(self) -> bool {
        self.x.is_finite() && self.y.is_finite() && self.z.is_finite()
    }

    pub fn to_array(self) -> [f64; 3] {
        [self.x, self.y, self.z]
    }
}

impl From<[f64; 3]> for Point3 {
    fn from([x, y, z]: [f64; 3]) -> Self {
        Point3::new(x, y, z)
    }
}

impl Add for Point3 {
    type Output = Point3;
    fn add(self, o: Point3) -> Point3 {
        Point3::new(self.x + o.x, self.y + o.y, self.z + o.z)
    }
}

impl Sub for Point3 {
    type Output = Point3;
    fn sub(self, o: Point3) -> Point3 {
        Point3::new(self.x - o.x, self.y - o.y, self.z - o.z)
    }
}

impl Mul<f64> for Point3 {
    type Output = Point3;
    fn mul(self, k: f64) -> Point3 {
        Point3::new(self.x * k, self.y * k, self.z * k)
    }
}

impl Div<f64> for Point3 {
    type Output = Point3;
    fn div(self, k: f64) -> Point3 {
        Point3::new(self.x / k, self.y / k, self.z / k)
    }
}

impl Neg for Point3 {
    type Output = Point3;
    fn neg(self) -> Point3 {
        Point3::new(-self.x, -self.y, -self.z)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Triangle3 {
    pub a: Point3,
    pub b: Point3,
    pub c: Point3,
}

impl Triangle3 {
    pub const fn new(a: Point3, b: Point3, c: Point3) -> Self {
        Triangle3 { a, b, c }
    }

    pub fn vertices(&self) -> [Point3; 3] {
        [self.a, self.b, self.c]
    }

    /// Edges in vertex order: AB, BC, CA.
    pub fn edges(&self) -> [(Point3, Point3); 3] {
        [(self.a, self.b), (self.b, self.c), (self.c, self.a)]
    }

    /// Unnormalized normal `(b - a) × (c - a)`; its length is twice the area.
    pub fn raw_normal(&self) -> Point3 {
        (self.b - self.a).cross(self.c - self.a)
    }

    pub fn area(&self) -> f64 {
        0.5 * self.raw_normal().norm()
    }

    pub fn is_finite(&self) -> bool {
        self.a.is_finite() && self.b.is_finite() && self.c.is_finite()
    }

    /// Checks the finiteness and minimum-area invariants.
    pub fn validate(&self, tol: &Tolerance) -> Result<()> {
        if !self.is_finite() {
            return Err(KernelError::NonFiniteInput);
        }
        if self.area() < tol.eps_area {
            return Err(KernelError::DegenerateTriangle);
        }
        Ok(())
    }
}

impl From<[[f64; 3]; 3]> for Triangle3 {
    fn from([a, b, c]: [[f64; 3]; 3]) -> Self {
        Triangle3::new(a.into(), b.into(), c.into())
    }
}

/// Absolute tolerances in world units.
///
/// Distances within `eps_dist` count as zero, triangles with area below
/// `eps_area` are degenerate, and parametric containment tests (segment
/// parameters, normal angles) get `eps_param` of slack.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Tolerance {
    pub eps_dist: f64,
    pub eps_area: f64,
    pub eps_param: f64,
}

impl Default for Tolerance {
    fn default() -> Self {
        Tolerance {
            eps_dist: 1e-9,
            eps_area: 1e-12,
            eps_param: 1e-9,
        }
    }
}

impl Tolerance {
    pub fn new(eps_dist: f64, eps_area: f64, eps_param: f64) -> Result<Self> {
        let ok = |v: f64| v.is_finite() && v > 0.0;
        if !(ok(eps_dist) && ok(eps_area) && ok(eps_param)) {
            return Err(KernelError::InvalidTolerance);
        }
        Ok(Tolerance {
            eps_dist,
            eps_area,
            eps_param,
        })
    }

    /// One knob for the CLI: `eps` for distances and parameters, `eps / 1000`
    /// for areas (which reproduces the defaults at `eps = 1e-9`).
    pub fn uniform(eps: f64) -> Result<Self> {
        Tolerance::new(eps, eps * 1e-3, eps)
    }
}

/// Supporting plane `q·x + w·y + u·z + r = 0` with unit normal `(q, w, u)`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Plane {
    pub q: f64,
    pub w: f64,
    pub u: f64,
    pub r: f64,
}

impl Plane {
    pub fn normal(&self) -> Point3 {
        Point3::new(self.q, self.w, self.u)
    }

    /// Builds a plane from a point on it and a nonzero normal.
    pub fn from_point_normal(p: Point3, n: Point3) -> Result<Self> {
        let len = n.norm();
        if !(len.is_finite() && len > 0.0) || !p.is_finite() {
            return Err(KernelError::NonFiniteInput);
        }
        let n = n / len;
        Ok(Plane {
            q: n.x,
            w: n.y,
            u: n.z,
            r: -n.dot(p),
        })
    }

    pub fn flipped(&self) -> Plane {
        Plane {
            q: -self.q,
            w: -self.w,
            u: -self.u,
            r: -self.r,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum PlaneRelation {
    Coincident,
    Parallel,
    Intersecting,
}

/// Plane through the triangle's vertices, normal by the right-hand rule on
/// `a -> b -> c`.
pub fn plane_from_triangle(t: &Triangle3, tol: &Tolerance) -> Result<Plane> {
    t.validate(tol)?;
    let n = t.raw_normal();
    // Offset from the centroid spreads rounding evenly over the vertices.
    let centroid = (t.a + t.b + t.c) / 3.0;
    Plane::from_point_normal(centroid, n)
}

pub fn signed_distance(p: Point3, pl: &Plane) -> f64 {
    pl.q * p.x + pl.w * p.y + pl.u * p.z + pl.r
}

pub fn classify_planes(p1: &Plane, p2: &Plane, tol: &Tolerance) -> PlaneRelation {
    let (n1, n2) = (p1.normal(), p2.normal());
    if n1.cross(n2).norm() > tol.eps_param {
        return PlaneRelation::Intersecting;
    }
    let offset_gap = if n1.dot(n2) >= 0.0 {
        (p1.r - p2.r).abs()
    } else {
        (p1.r + p2.r).abs()
    };
    if offset_gap <= tol.eps_dist {
        PlaneRelation::Coincident
    } else {
        PlaneRelation::Parallel
    }
}
