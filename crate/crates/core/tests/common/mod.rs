//! Random inputs shared by the integration tests.
//!
//! Coordinates live on a dyadic grid (multiples of 1/16 in [-10, 10]) and
//! affine weights are multiples of 1/8, so constructed coplanar triangles are
//! exactly coplanar in f64 and every nonzero distance to a classification
//! boundary is far larger than the tolerances.

#![allow(dead_code)]

use rand::Rng;
use tritri::{CaseLabel, Point2, Point3, Triangle3};
use tritri_oracle::OracleLabel;

pub type Tri = [[f64; 3]; 3];

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum PairKind {
    Generic,
    Coplanar,
    SharedVertex,
    PlaneCrossing,
    /// Extra kind outside the standard mix: a triangle in a shifted copy of
    /// t1's plane.
    Parallel,
}

pub fn grid(rng: &mut impl Rng) -> f64 {
    f64::from(rng.gen_range(-160i32..=160)) / 16.0
}

pub fn grid_point(rng: &mut impl Rng) -> [f64; 3] {
    [grid(rng), grid(rng), grid(rng)]
}

fn sub(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [a[0] - b[0], a[1] - b[1], a[2] - b[2]]
}

fn cross(a: [f64; 3], b: [f64; 3]) -> [f64; 3] {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

fn dot(a: [f64; 3], b: [f64; 3]) -> f64 {
    a[0] * b[0] + a[1] * b[1] + a[2] * b[2]
}

/// Twice the area, computed exactly enough for the grid sizes used here.
pub fn area2(t: &Tri) -> f64 {
    let n = cross(sub(t[1], t[0]), sub(t[2], t[0]));
    dot(n, n).sqrt()
}

fn well_formed(t: &Tri) -> bool {
    area2(t) >= 0.5
}

pub fn grid_triangle(rng: &mut impl Rng) -> Tri {
    loop {
        let t = [grid_point(rng), grid_point(rng), grid_point(rng)];
        if well_formed(&t) {
            return t;
        }
    }
}

/// A point of `t`'s plane: affine combination with weights in 1/8 steps.
fn affine_point(rng: &mut impl Rng, t: &Tri) -> [f64; 3] {
    let w1 = f64::from(rng.gen_range(-12i32..=20)) / 8.0;
    let w2 = f64::from(rng.gen_range(-12i32..=20)) / 8.0;
    let w0 = 1.0 - w1 - w2;
    let mut p = [0.0; 3];
    for k in 0..3 {
        p[k] = w0 * t[0][k] + w1 * t[1][k] + w2 * t[2][k];
    }
    p
}

/// Sign of the distance of `p` to `t`'s plane; exact on grid inputs.
fn side(t: &Tri, p: [f64; 3]) -> f64 {
    dot(cross(sub(t[1], t[0]), sub(t[2], t[0])), sub(p, t[0]))
}

pub fn random_pair(rng: &mut impl Rng, kind: PairKind) -> (Tri, Tri) {
    let t1 = grid_triangle(rng);
    loop {
        let t2 = match kind {
            PairKind::Generic => grid_triangle(rng),
            PairKind::Coplanar => [
                affine_point(rng, &t1),
                affine_point(rng, &t1),
                affine_point(rng, &t1),
            ],
            PairKind::Parallel => {
                let shift = grid_point(rng);
                if side(
                    &t1,
                    [
                        t1[0][0] + shift[0],
                        t1[0][1] + shift[1],
                        t1[0][2] + shift[2],
                    ],
                ) == 0.0
                {
                    continue;
                }
                [
                    affine_point(rng, &t1),
                    affine_point(rng, &t1),
                    affine_point(rng, &t1),
                ]
                .map(|p| [p[0] + shift[0], p[1] + shift[1], p[2] + shift[2]])
            }
            PairKind::SharedVertex => {
                let k = rng.gen_range(0..3);
                [t1[k], grid_point(rng), grid_point(rng)]
            }
            PairKind::PlaneCrossing => {
                let t2 = grid_triangle(rng);
                let s: Vec<f64> = t2.iter().map(|&p| side(&t1, p)).collect();
                let pos = s.iter().any(|&x| x > 0.0);
                let neg = s.iter().any(|&x| x < 0.0);
                if !(pos && neg) {
                    continue;
                }
                t2
            }
        };
        if well_formed(&t2) {
            return (t1, t2);
        }
    }
}

/// The 40/30/15/15 generic/coplanar/shared-vertex/plane-crossing mix.
pub fn mixed_kind(i: usize) -> PairKind {
    match i % 20 {
        0..=7 => PairKind::Generic,
        8..=13 => PairKind::Coplanar,
        14..=16 => PairKind::SharedVertex,
        _ => PairKind::PlaneCrossing,
    }
}

pub fn triangle(t: &Tri) -> Triangle3 {
    Triangle3::from(*t)
}

pub fn label_name(l: OracleLabel) -> String {
    format!("{l:?}")
}

pub fn same_label(core: CaseLabel, oracle: OracleLabel) -> bool {
    core.name() == label_name(oracle)
}

pub fn p3(a: [f64; 3]) -> Point3 {
    Point3::from(a)
}

/// Every point of `a` is within `tol` (per coordinate) of a point of `b`
/// and vice versa.
pub fn same_point_set(a: &[Point3], b: &[Point3], tol: f64) -> bool {
    let near = |p: &Point3, q: &Point3| {
        (p.x - q.x).abs() <= tol && (p.y - q.y).abs() <= tol && (p.z - q.z).abs() <= tol
    };
    a.len() == b.len()
        && a.iter().all(|p| b.iter().any(|q| near(p, q)))
        && b.iter().all(|q| a.iter().any(|p| near(p, q)))
}

pub fn grid2(rng: &mut impl Rng) -> Point2 {
    Point2::new(grid(rng), grid(rng))
}

pub fn cross2(o: Point2, a: Point2, b: Point2) -> f64 {
    a.sub(o).cross(b.sub(o))
}

/// A grid triangle in the plane with a comfortable area, any orientation.
pub fn grid_triangle2(rng: &mut impl Rng) -> [Point2; 3] {
    loop {
        let t = [grid2(rng), grid2(rng), grid2(rng)];
        if cross2(t[0], t[1], t[2]).abs() >= 0.5 {
            return t;
        }
    }
}

pub fn pair_line(t1: &Tri, t2: &Tri) -> String {
    let mut s = String::new();
    for p in t1.iter().chain(t2.iter()) {
        for c in p {
            if !s.is_empty() {
                s.push(' ');
            }
            s.push_str(&c.to_string());
        }
    }
    s
}
