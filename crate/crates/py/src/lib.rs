//! Python bindings: `import pytritri`.
//!
//! Triangles are passed as three `(x, y, z)` triples; 2D triangles and
//! points as `(u, v)` pairs. Kernel errors surface as `ValueError`.

use pyo3::exceptions::PyValueError;
use pyo3::prelude::*;

use tritri::{
    ClipResult2, ContourResult, IntersectionResult, KernelError, Point2, Triangle2, Triangle3,
};

fn value_error(e: KernelError) -> PyErr {
    PyValueError::new_err(e.to_string())
}

#[pyclass(name = "Tolerance", frozen, from_py_object)]
#[derive(Clone, Copy)]
struct PyTolerance {
    inner: tritri::Tolerance,
}

#[pymethods]
impl PyTolerance {
    #[new]
    #[pyo3(signature = (eps_dist = 1e-9, eps_area = 1e-12, eps_param = 1e-9))]
    fn new(eps_dist: f64, eps_area: f64, eps_param: f64) -> PyResult<Self> {
        let inner = tritri::Tolerance::new(eps_dist, eps_area, eps_param).map_err(value_error)?;
        Ok(PyTolerance { inner })
    }

    /// `eps_dist = eps_param = eps`, `eps_area = eps * 1e-3`.
    #[staticmethod]
    fn uniform(eps: f64) -> PyResult<Self> {
        let inner = tritri::Tolerance::uniform(eps).map_err(value_error)?;
        Ok(PyTolerance { inner })
    }

    #[getter]
    fn eps_dist(&self) -> f64 {
        self.inner.eps_dist
    }

    #[getter]
    fn eps_area(&self) -> f64 {
        self.inner.eps_area
    }

    #[getter]
    fn eps_param(&self) -> f64 {
        self.inner.eps_param
    }

    fn __repr__(&self) -> String {
        format!(
            "Tolerance(eps_dist={:e}, eps_area={:e}, eps_param={:e})",
            self.inner.eps_dist, self.inner.eps_area, self.inner.eps_param
        )
    }
}

/// Outcome of `intersect`.
#[pyclass(name = "Intersection", frozen, get_all)]
struct PyIntersection {
    /// One of the six case labels, e.g. `"CrossingSegment"`.
    case: String,
    /// `"Empty"`, `"Touch"`, `"Segment"` or `"Contour"`.
    kind: String,
    /// Why the result is empty, else `None`.
    reason: Option<String>,
    points: Vec<(f64, f64, f64)>,
}

#[pymethods]
impl PyIntersection {
    fn __repr__(&self) -> String {
        format!(
            "Intersection(case={:?}, kind={:?}, points={:?})",
            self.case, self.kind, self.points
        )
    }
}

fn tol_or_default(tol: Option<PyTolerance>) -> tritri::Tolerance {
    tol.map(|t| t.inner).unwrap_or_default()
}

#[pyfunction]
#[pyo3(signature = (t1, t2, tol = None))]
fn intersect(
    t1: [[f64; 3]; 3],
    t2: [[f64; 3]; 3],
    tol: Option<PyTolerance>,
) -> PyResult<PyIntersection> {
    let (case, result) = tritri::intersect(
        &Triangle3::from(t1),
        &Triangle3::from(t2),
        &tol_or_default(tol),
    )
    .map_err(value_error)?;
    let (kind, reason) = match &result {
        IntersectionResult::Empty(r) => ("Empty", Some(format!("{r:?}"))),
        IntersectionResult::Touch(_) => ("Touch", None),
        IntersectionResult::Segment(..) => ("Segment", None),
        IntersectionResult::Contour(_) => ("Contour", None),
    };
    Ok(PyIntersection {
        case: case.name().to_string(),
        kind: kind.to_string(),
        reason,
        points: result.points().iter().map(|p| (p.x, p.y, p.z)).collect(),
    })
}

#[pyfunction]
#[pyo3(signature = (t1, t2, tol = None))]
fn classify_only(
    t1: [[f64; 3]; 3],
    t2: [[f64; 3]; 3],
    tol: Option<PyTolerance>,
) -> PyResult<&'static str> {
    tritri::classify_only(
        &Triangle3::from(t1),
        &Triangle3::from(t2),
        &tol_or_default(tol),
    )
    .map(|c| c.name())
    .map_err(value_error)
}

fn triangle2(t: [[f64; 2]; 3], tol: &tritri::Tolerance) -> PyResult<Triangle2> {
    Triangle2::new(t[0].into(), t[1].into(), t[2].into(), tol).map_err(value_error)
}

fn pair(p: Point2) -> (f64, f64) {
    (p.u, p.v)
}

/// 3-bit outside code of `p` against `window` (bits: AC=4, AB=2, BC=1).
#[pyfunction]
#[pyo3(signature = (p, window, tol = None))]
fn region_code(p: [f64; 2], window: [[f64; 2]; 3], tol: Option<PyTolerance>) -> PyResult<u8> {
    let tol = tol_or_default(tol);
    Ok(tritri::region_code(p.into(), &triangle2(window, &tol)?, &tol).bits())
}

/// Part of segment `p`-`q` inside `window`: 0, 1 or 2 points.
#[pyfunction]
#[pyo3(signature = (p, q, window, tol = None))]
fn clip_segment(
    p: [f64; 2],
    q: [f64; 2],
    window: [[f64; 2]; 3],
    tol: Option<PyTolerance>,
) -> PyResult<Vec<(f64, f64)>> {
    let tol = tol_or_default(tol);
    let w = triangle2(window, &tol)?;
    Ok(
        match tritri::clip_segment_to_triangle(p.into(), q.into(), &w, &tol).map_err(value_error)? {
            ClipResult2::Empty => vec![],
            ClipResult2::Point(x) => vec![pair(x)],
            ClipResult2::Segment(x, y) => vec![pair(x), pair(y)],
        },
    )
}

/// Intersection of two triangles in the plane as `(kind, vertices)`.
#[pyfunction]
#[pyo3(signature = (window, clipped, tol = None))]
fn clip_triangle(
    window: [[f64; 2]; 3],
    clipped: [[f64; 2]; 3],
    tol: Option<PyTolerance>,
) -> PyResult<(&'static str, Vec<(f64, f64)>)> {
    let tol = tol_or_default(tol);
    let w = triangle2(window, &tol)?;
    let c = triangle2(clipped, &tol)?;
    Ok(
        match tritri::intersect_coplanar(&w, &c, &tol).map_err(value_error)? {
            ContourResult::Disjoint => ("Disjoint", vec![]),
            ContourResult::Contour(v) => ("Contour", v.into_iter().map(pair).collect()),
            ContourResult::ClippedInsideWindow => {
                ("ClippedInsideWindow", c.vertices().map(pair).to_vec())
            }
            ContourResult::WindowInsideClipped => {
                ("WindowInsideClipped", w.vertices().map(pair).to_vec())
            }
        },
    )
}

#[pymodule]
fn pytritri(m: &Bound<'_, PyModule>) -> PyResult<()> {
    m.add_class::<PyTolerance>()?;
    m.add_class::<PyIntersection>()?;
    m.add_function(wrap_pyfunction!(intersect, m)?)?;
    m.add_function(wrap_pyfunction!(classify_only, m)?)?;
    m.add_function(wrap_pyfunction!(region_code, m)?)?;
    m.add_function(wrap_pyfunction!(clip_segment, m)?)?;
    m.add_function(wrap_pyfunction!(clip_triangle, m)?)?;
    Ok(())
}
