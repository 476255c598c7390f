//! Exact-arithmetic reference for triangle–triangle intersection.
//!
//! Everything here runs on [`BigRational`] coordinates, so no predicate is
//! ever rounded. The algorithms are deliberately plain and slow:
//!
//! * segments are clipped against a triangle by intersecting the parameter
//!   intervals of its three closed half-planes,
//! * coplanar triangles are intersected with Sutherland–Hodgman,
//! * non-coplanar pairs are cut by sign analysis of exact plane distances.
//!
//! The crate shares no code with the fast kernel it is used to check.

mod polygon;
mod segment;
mod triangle;

pub use num_rational::BigRational;
pub use polygon::{clip_polygon, polygon_area2, simplify_polygon};
pub use segment::{clip_segment_interval, ExactClip2};
pub use triangle::{
    oracle_intersect, oracle_intersect_f64, ExactGeometry, OracleLabel, OracleOutcome,
};

use num_traits::{Signed, ToPrimitive, Zero};
use std::fmt;
use std::ops::{Add, Mul, Sub};

pub type Rational = BigRational;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum OracleError {
    NonFinite,
    DegenerateTriangle,
}

impl fmt::Display for OracleError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            OracleError::NonFinite => f.write_str("coordinate is not finite"),
            OracleError::DegenerateTriangle => f.write_str("triangle has zero area"),
        }
    }
}

impl std::error::Error for OracleError {}

pub(crate) fn rational(v: f64) -> Result<Rational, OracleError> {
    Rational::from_float(v).ok_or(OracleError::NonFinite)
}

/// Nearest `f64` to an exact value.
pub fn to_f64(r: &Rational) -> f64 {
    r.to_f64().unwrap_or(f64::NAN)
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational2 {
    pub x: Rational,
    pub y: Rational,
}

impl Rational2 {
    pub fn new(x: Rational, y: Rational) -> Self {
        Rational2 { x, y }
    }

    pub fn from_f64(p: [f64; 2]) -> Result<Self, OracleError> {
        Ok(Rational2::new(rational(p[0])?, rational(p[1])?))
    }

    pub fn to_f64(&self) -> [f64; 2] {
        [to_f64(&self.x), to_f64(&self.y)]
    }

    pub fn cross(&self, other: &Rational2) -> Rational {
        &self.x * &other.y - &self.y * &other.x
    }

    pub fn scale(&self, k: &Rational) -> Rational2 {
        Rational2::new(&self.x * k, &self.y * k)
    }
}

impl<'a> Sub for &'a Rational2 {
    type Output = Rational2;
    fn sub(self, o: &'a Rational2) -> Rational2 {
        Rational2::new(&self.x - &o.x, &self.y - &o.y)
    }
}

impl<'a> Add for &'a Rational2 {
    type Output = Rational2;
    fn add(self, o: &'a Rational2) -> Rational2 {
        Rational2::new(&self.x + &o.x, &self.y + &o.y)
    }
}

/// `cross(b - a, p - a)`: positive when `p` is left of the directed line `a -> b`.
pub fn orient2(a: &Rational2, b: &Rational2, p: &Rational2) -> Rational {
    (b - a).cross(&(p - a))
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Rational3 {
    pub x: Rational,
    pub y: Rational,
    pub z: Rational,
}

impl Rational3 {
    pub fn new(x: Rational, y: Rational, z: Rational) -> Self {
        Rational3 { x, y, z }
    }

    pub fn from_f64(p: [f64; 3]) -> Result<Self, OracleError> {
        Ok(Rational3::new(
            rational(p[0])?,
            rational(p[1])?,
            rational(p[2])?,
        ))
    }

    pub fn to_f64(&self) -> [f64; 3] {
        [to_f64(&self.x), to_f64(&self.y), to_f64(&self.z)]
    }

    pub fn dot(&self, o: &Rational3) -> Rational {
        &self.x * &o.x + &self.y * &o.y + &self.z * &o.z
    }

    pub fn cross(&self, o: &Rational3) -> Rational3 {
        Rational3::new(
            &self.y * &o.z - &self.z * &o.y,
            &self.z * &o.x - &self.x * &o.z,
            &self.x * &o.y - &self.y * &o.x,
        )
    }

    pub fn scale(&self, k: &Rational) -> Rational3 {
        Rational3::new(&self.x * k, &self.y * k, &self.z * k)
    }

    pub fn is_zero(&self) -> bool {
        self.x.is_zero() && self.y.is_zero() && self.z.is_zero()
    }

    pub fn coord(&self, axis: usize) -> &Rational {
        match axis {
            0 => &self.x,
            1 => &self.y,
            _ => &self.z,
        }
    }

    /// Euclidean norm, evaluated in floating point.
    pub fn norm_f64(&self) -> f64 {
        let [x, y, z] = self.to_f64();
        (x * x + y * y + z * z).sqrt()
    }

    pub(crate) fn abs_coord(&self, axis: usize) -> Rational {
        self.coord(axis).abs()
    }
}

impl<'a> Sub for &'a Rational3 {
    type Output = Rational3;
    fn sub(self, o: &'a Rational3) -> Rational3 {
        Rational3::new(&self.x - &o.x, &self.y - &o.y, &self.z - &o.z)
    }
}

impl<'a> Add for &'a Rational3 {
    type Output = Rational3;
    fn add(self, o: &'a Rational3) -> Rational3 {
        Rational3::new(&self.x + &o.x, &self.y + &o.y, &self.z + &o.z)
    }
}

impl<'a> Mul<&'a Rational> for &'a Rational3 {
    type Output = Rational3;
    fn mul(self, k: &'a Rational) -> Rational3 {
        self.scale(k)
    }
}
