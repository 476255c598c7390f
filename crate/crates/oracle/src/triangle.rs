use num_traits::{Signed, Zero};

use crate::polygon::clip_polygon;
use crate::{to_f64, OracleError, Rational, Rational2, Rational3};

/// The six ways two triangles can sit relative to each other.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum OracleLabel {
    CoplanarNoContact,
    CoplanarContour,
    ParallelPlanes,
    CrossingPlanesNoContact,
    TouchPoint,
    CrossingSegment,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactGeometry {
    Empty,
    Point(Rational3),
    Segment(Rational3, Rational3),
    Polygon(Vec<Rational3>),
}

impl ExactGeometry {
    pub fn points_f64(&self) -> Vec<[f64; 3]> {
        match self {
            ExactGeometry::Empty => Vec::new(),
            ExactGeometry::Point(p) => vec![p.to_f64()],
            ExactGeometry::Segment(p, q) => vec![p.to_f64(), q.to_f64()],
            ExactGeometry::Polygon(v) => v.iter().map(Rational3::to_f64).collect(),
        }
    }
}

#[derive(Debug, Clone)]
pub struct OracleOutcome {
    pub label: OracleLabel,
    pub geometry: ExactGeometry,
    /// Smallest strictly positive distance between the input and a
    /// classification boundary (a vertex near but not on a plane or line,
    /// nearly parallel normals, a nearly degenerate output feature).
    /// `f64::INFINITY` when nothing is close. Exact contacts (distance zero)
    /// are not counted: those are on the boundary, not near it.
    pub margin: f64,
}

#[derive(Default)]
struct Margin(Option<f64>);

impl Margin {
    fn observe(&mut self, d: f64) {
        let d = d.abs();
        if d > 0.0 {
            self.0 = Some(self.0.map_or(d, |m| m.min(d)));
        }
    }

    fn value(&self) -> f64 {
        self.0.unwrap_or(f64::INFINITY)
    }
}

fn normal(t: &[Rational3; 3]) -> Rational3 {
    (&t[1] - &t[0]).cross(&(&t[2] - &t[0]))
}

fn line_distance(a: &Rational3, b: &Rational3, p: &Rational3) -> f64 {
    let dir = b - a;
    let len = dir.norm_f64();
    if len == 0.0 {
        return (p - a).norm_f64();
    }
    dir.cross(&(p - a)).norm_f64() / len
}

/// Exact intersection of two triangles given by `f64` coordinates.
pub fn oracle_intersect_f64(
    t1: &[[f64; 3]; 3],
    t2: &[[f64; 3]; 3],
) -> Result<OracleOutcome, OracleError> {
    let conv = |t: &[[f64; 3]; 3]| -> Result<[Rational3; 3], OracleError> {
        Ok([
            Rational3::from_f64(t[0])?,
            Rational3::from_f64(t[1])?,
            Rational3::from_f64(t[2])?,
        ])
    };
    oracle_intersect(&conv(t1)?, &conv(t2)?)
}

pub fn oracle_intersect(
    t1: &[Rational3; 3],
    t2: &[Rational3; 3],
) -> Result<OracleOutcome, OracleError> {
    let n1 = normal(t1);
    let n2 = normal(t2);
    if n1.is_zero() || n2.is_zero() {
        return Err(OracleError::DegenerateTriangle);
    }
    let mut margin = Margin::default();

    let d2: Vec<Rational> = t2.iter().map(|v| n1.dot(&(v - &t1[0]))).collect();
    let d1: Vec<Rational> = t1.iter().map(|v| n2.dot(&(v - &t2[0]))).collect();
    let (n1_len, n2_len) = (n1.norm_f64(), n2.norm_f64());
    for d in &d2 {
        margin.observe(to_f64(d) / n1_len);
    }
    for d in &d1 {
        margin.observe(to_f64(d) / n2_len);
    }

    if d2.iter().all(Zero::is_zero) {
        return Ok(coplanar(t1, t2, &n1, margin));
    }

    let axis = n1.cross(&n2);
    margin.observe(axis.norm_f64() / (n1_len * n2_len));
    if axis.is_zero() {
        return Ok(OracleOutcome {
            label: OracleLabel::ParallelPlanes,
            geometry: ExactGeometry::Empty,
            margin: margin.value(),
        });
    }

    // t2 ∩ plane(t1): on-plane vertices plus strict sign changes along edges.
    let mut section: Vec<Rational3> = Vec::new();
    let mut push = |p: Rational3| {
        if !section.contains(&p) {
            section.push(p);
        }
    };
    for i in 0..3 {
        let j = (i + 1) % 3;
        if d2[i].is_zero() {
            push(t2[i].clone());
        }
        if (d2[i].is_positive() && d2[j].is_negative())
            || (d2[i].is_negative() && d2[j].is_positive())
        {
            let t = &d2[i] / &(&d2[i] - &d2[j]);
            push(&t2[i] + &(&t2[j] - &t2[i]).scale(&t));
        }
    }

    for p in &section {
        for k in 0..3 {
            margin.observe(line_distance(&t1[k], &t1[(k + 1) % 3], p));
        }
    }

    let inside = |p: &Rational3, k: usize| -> Rational {
        let a = &t1[k];
        let b = &t1[(k + 1) % 3];
        (b - a).cross(&(p - a)).dot(&n1)
    };

    let (label, geometry) = match section.len() {
        0 => (OracleLabel::CrossingPlanesNoContact, ExactGeometry::Empty),
        1 => {
            let p = &section[0];
            if (0..3).all(|k| !inside(p, k).is_negative()) {
                (OracleLabel::TouchPoint, ExactGeometry::Point(p.clone()))
            } else {
                (OracleLabel::CrossingPlanesNoContact, ExactGeometry::Empty)
            }
        }
        _ => {
            let (p, q) = (&section[0], &section[1]);
            margin.observe((q - p).norm_f64());
            for v in t1 {
                margin.observe(line_distance(p, q, v));
            }
            let mut lo = Rational::zero();
            let mut hi = Rational::from_integer(1.into());
            let mut empty = false;
            for k in 0..3 {
                let f0 = inside(p, k);
                let f1 = inside(q, k);
                let slope = &f1 - &f0;
                if slope.is_zero() {
                    if f0.is_negative() {
                        empty = true;
                    }
                    continue;
                }
                let root = -&f0 / &slope;
                if slope.is_positive() {
                    if root > lo {
                        lo = root;
                    }
                } else if root < hi {
                    hi = root;
                }
            }
            if empty || lo > hi {
                (OracleLabel::CrossingPlanesNoContact, ExactGeometry::Empty)
            } else {
                let dir = q - p;
                let a = p + &dir.scale(&lo);
                let b = p + &dir.scale(&hi);
                margin.observe((&b - &a).norm_f64());
                if lo == hi {
                    (OracleLabel::TouchPoint, ExactGeometry::Point(a))
                } else {
                    (OracleLabel::CrossingSegment, ExactGeometry::Segment(a, b))
                }
            }
        }
    };

    Ok(OracleOutcome {
        label,
        geometry,
        margin: margin.value(),
    })
}

/// Axis whose coordinate is dropped when projecting a plane with normal `n`.
fn dominant_axis(n: &Rational3) -> usize {
    let (ax, ay, az) = (n.abs_coord(0), n.abs_coord(1), n.abs_coord(2));
    if ax >= ay && ax >= az {
        0
    } else if ay >= az {
        1
    } else {
        2
    }
}

fn coplanar(
    t1: &[Rational3; 3],
    t2: &[Rational3; 3],
    n1: &Rational3,
    mut margin: Margin,
) -> OracleOutcome {
    for (a, b) in [(t1, t2), (t2, t1)] {
        for v in a.iter() {
            for k in 0..3 {
                margin.observe(line_distance(&b[k], &b[(k + 1) % 3], v));
                margin.observe((v - &b[k]).norm_f64());
            }
        }
    }

    let drop = dominant_axis(n1);
    let (i, j) = ((drop + 1) % 3, (drop + 2) % 3);
    let flat = |p: &Rational3| Rational2::new(p.coord(i).clone(), p.coord(j).clone());
    let window = [flat(&t1[0]), flat(&t1[1]), flat(&t1[2])];
    let subject = [flat(&t2[0]), flat(&t2[1]), flat(&t2[2])];
    let poly = clip_polygon(&subject, &window);

    if poly.len() < 3 {
        return OracleOutcome {
            label: OracleLabel::CoplanarNoContact,
            geometry: ExactGeometry::Empty,
            margin: margin.value(),
        };
    }

    // Recover the dropped coordinate from n1 · (p - a) = 0.
    let a = &t1[0];
    let lift = |q: &Rational2| -> Rational3 {
        let mut c = [Rational::zero(), Rational::zero(), Rational::zero()];
        c[i] = q.x.clone();
        c[j] = q.y.clone();
        let rest = n1.coord(i) * &(&q.x - a.coord(i)) + n1.coord(j) * &(&q.y - a.coord(j));
        c[drop] = a.coord(drop) - &(rest / n1.coord(drop));
        let [x, y, z] = c;
        Rational3::new(x, y, z)
    };
    let verts: Vec<Rational3> = poly.iter().map(lift).collect();
    let n = verts.len();
    for k in 0..n {
        let prev = &verts[(k + n - 1) % n];
        let next = &verts[(k + 1) % n];
        margin.observe((&verts[k] - next).norm_f64());
        margin.observe(line_distance(prev, next, &verts[k]));
    }

    OracleOutcome {
        label: OracleLabel::CoplanarContour,
        geometry: ExactGeometry::Polygon(verts),
        margin: margin.value(),
    }
}
