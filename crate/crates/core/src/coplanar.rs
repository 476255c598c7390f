//! Weiler–Atherton clipping of one triangle by another in a shared plane.
//!
//! Both triangles become cyclic vertex lists. Every point where the clipped
//! triangle's boundary passes into the window becomes an entry node, every
//! point where it passes out an exit node; each node is inserted into both
//! lists and the two copies are linked. Tracing then alternates: forward
//! along the clipped list from an entry to the next exit, across the link,
//! forward along the window list to the next entry, and so on until the
//! starting entry comes round again.
//!
//! Crossings are found by clipping each clipped edge against the window with
//! the outcode clipper. The inside parts are chained along the boundary into
//! maximal runs. A run's first point is an entry and its last point an
//! exit. Runs of zero length are touches (a vertex resting on a side, an
//! edge grazing a corner) and produce no nodes.

use crate::clip2d::{clip_segment_to_triangle, point_in_triangle, ClipResult2, Triangle2};
use crate::error::{KernelError, Result};
use crate::frame::Point2;
use crate::geom::Tolerance;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum NodeKind {
    OriginalVertex,
    EntryPoint,
    ExitPoint,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct VertexNode {
    pub position: Point2,
    pub kind: NodeKind,
    /// Index of the same intersection point in the other loop.
    pub twin: Option<usize>,
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VertexLoop {
    pub nodes: Vec<VertexNode>,
}

impl VertexLoop {
    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn count(&self, kind: NodeKind) -> usize {
        self.nodes.iter().filter(|n| n.kind == kind).count()
    }

    fn originals(&self) -> Vec<Point2> {
        self.nodes
            .iter()
            .filter(|n| n.kind == NodeKind::OriginalVertex)
            .map(|n| n.position)
            .collect()
    }
}

#[derive(Debug, Clone, Default, PartialEq)]
pub struct VertexLoops {
    pub window: VertexLoop,
    pub clipped: VertexLoop,
}

#[derive(Debug, Clone, PartialEq)]
pub enum ContourResult {
    Disjoint,
    /// Convex, counter-clockwise, 3 to 6 vertices.
    Contour(Vec<Point2>),
    ClippedInsideWindow,
    WindowInsideClipped,
}

/// Position along a triangle boundary: edge index and parameter on it.
#[derive(Debug, Clone, Copy)]
struct BoundaryPos {
    edge: usize,
    t: f64,
    point: Point2,
}

#[derive(Debug, Clone, Copy)]
struct Run {
    start: BoundaryPos,
    end: BoundaryPos,
    length: f64,
}

fn edge_param(from: Point2, to: Point2, x: Point2) -> f64 {
    let d = to.sub(from);
    (x.sub(from).dot(d) / d.dot(d)).clamp(0.0, 1.0)
}

/// Maximal runs of the clipped boundary lying inside the window, in
/// boundary order. `None` means the whole boundary is inside.
fn inside_runs(
    window: &Triangle2,
    clipped: &Triangle2,
    tol: &Tolerance,
) -> Result<Option<Vec<Run>>> {
    let verts = clipped.vertices();
    let mut runs: Vec<Run> = Vec::new();
    for i in 0..3 {
        let (from, to) = (verts[i], verts[(i + 1) % 3]);
        let (x0, x1) = match clip_segment_to_triangle(from, to, window, tol)? {
            ClipResult2::Empty => continue,
            ClipResult2::Point(x) => (x, x),
            ClipResult2::Segment(x, y) => (x, y),
        };
        let start = BoundaryPos {
            edge: i,
            t: edge_param(from, to, x0),
            point: x0,
        };
        let end = BoundaryPos {
            edge: i,
            t: edge_param(from, to, x1),
            point: x1,
        };
        let length = x0.distance(x1);
        match runs.last_mut() {
            Some(last) if last.end.point.distance(x0) <= tol.eps_dist => {
                last.end = end;
                last.length += length;
            }
            _ => runs.push(Run { start, end, length }),
        }
    }

    if runs.len() == 1 {
        let r = runs[0];
        let closes = r.end.point.distance(r.start.point) <= tol.eps_dist;
        if closes && r.length > 2.0 * tol.eps_dist {
            return Ok(None);
        }
    }
    if runs.len() >= 2 {
        let last = runs[runs.len() - 1];
        if last.end.point.distance(runs[0].start.point) <= tol.eps_dist {
            runs[0].start = last.start;
            runs[0].length += last.length;
            runs.pop();
        }
    }
    runs.retain(|r| r.length > tol.eps_dist);
    Ok(Some(runs))
}

/// Where a boundary point sits on the window: side index in
/// counter-clockwise order (AB, BC, CA) and parameter along it. Points at a
/// corner are placed at the start of the following side.
fn window_position(window: &Triangle2, x: Point2, tol: &Tolerance) -> (usize, f64) {
    let w = window.vertices();
    let mut best = (0usize, 0.0f64, f64::INFINITY);
    for k in 0..3 {
        let (a, b) = (w[k], w[(k + 1) % 3]);
        let e = b.sub(a);
        let len = e.norm();
        let u = x.sub(a).dot(e) / (len * len);
        let slack = tol.eps_dist / len;
        if u < -slack || u > 1.0 + slack {
            continue;
        }
        let dist = e.cross(x.sub(a)).abs() / len;
        if dist < best.2 {
            let u = u.clamp(0.0, 1.0);
            best = if u >= 1.0 - slack {
                ((k + 1) % 3, 0.0, dist)
            } else if u <= slack {
                (k, 0.0, dist)
            } else {
                (k, u, dist)
            };
        }
    }
    (best.0, best.1)
}

/// Builds the two cyclic vertex lists with linked entry/exit nodes.
///
/// Both triangles are taken counter-clockwise (a [`Triangle2`] already is).
pub fn build_vertex_loops(
    window: &Triangle2,
    clipped: &Triangle2,
    tol: &Tolerance,
) -> Result<VertexLoops> {
    if window.area() < tol.eps_area || clipped.area() < tol.eps_area {
        return Err(KernelError::DegenerateTriangle);
    }
    let runs = inside_runs(window, clipped, tol)?.unwrap_or_default();

    // (kind, position on clipped boundary, position on window boundary)
    struct Crossing {
        kind: NodeKind,
        on_clipped: (usize, f64),
        on_window: (usize, f64),
        point: Point2,
    }
    let mut crossings = Vec::with_capacity(runs.len() * 2);
    for run in &runs {
        for (kind, pos) in [
            (NodeKind::EntryPoint, run.start),
            (NodeKind::ExitPoint, run.end),
        ] {
            crossings.push(Crossing {
                kind,
                on_clipped: (pos.edge, pos.t),
                on_window: window_position(window, pos.point, tol),
                point: pos.point,
            });
        }
    }

    let order = |key: fn(&Crossing) -> (usize, f64)| {
        let mut idx: Vec<usize> = (0..crossings.len()).collect();
        idx.sort_by(|&i, &j| {
            let (ei, ti) = key(&crossings[i]);
            let (ej, tj) = key(&crossings[j]);
            ei.cmp(&ej).then(ti.total_cmp(&tj))
        });
        idx
    };
    let clipped_order = order(|c| c.on_clipped);
    let window_order = order(|c| c.on_window);

    let assemble = |verts: [Point2; 3], sorted: &[usize], edge_of: fn(&Crossing) -> usize| {
        let mut nodes = Vec::with_capacity(3 + sorted.len());
        let mut slot = vec![0usize; crossings.len()];
        for (k, v) in verts.iter().enumerate() {
            nodes.push(VertexNode {
                position: *v,
                kind: NodeKind::OriginalVertex,
                twin: None,
            });
            for &c in sorted.iter().filter(|&&c| edge_of(&crossings[c]) == k) {
                slot[c] = nodes.len();
                nodes.push(VertexNode {
                    position: crossings[c].point,
                    kind: crossings[c].kind,
                    twin: None,
                });
            }
        }
        (nodes, slot)
    };
    let (mut clipped_nodes, clipped_slot) =
        assemble(clipped.vertices(), &clipped_order, |c| c.on_clipped.0);
    let (mut window_nodes, window_slot) =
        assemble(window.vertices(), &window_order, |c| c.on_window.0);
    for c in 0..crossings.len() {
        clipped_nodes[clipped_slot[c]].twin = Some(window_slot[c]);
        window_nodes[window_slot[c]].twin = Some(clipped_slot[c]);
    }

    Ok(VertexLoops {
        window: VertexLoop {
            nodes: window_nodes,
        },
        clipped: VertexLoop {
            nodes: clipped_nodes,
        },
    })
}

fn check_links(loops: &VertexLoops) -> Result<()> {
    for (this, other) in [
        (&loops.clipped, &loops.window),
        (&loops.window, &loops.clipped),
    ] {
        for (i, node) in this.nodes.iter().enumerate() {
            match (node.kind, node.twin) {
                (NodeKind::OriginalVertex, None) => {}
                (NodeKind::OriginalVertex, Some(_)) | (_, None) => {
                    return Err(KernelError::MalformedLoops)
                }
                (kind, Some(j)) => {
                    let twin = other.nodes.get(j).ok_or(KernelError::MalformedLoops)?;
                    if twin.kind != kind || twin.twin != Some(i) {
                        return Err(KernelError::MalformedLoops);
                    }
                }
            }
        }
    }
    if loops.clipped.count(NodeKind::EntryPoint) != loops.clipped.count(NodeKind::ExitPoint) {
        return Err(KernelError::MalformedLoops);
    }
    Ok(())
}

/// Removes repeated vertices and vertices within `eps_dist` of the line
/// through their neighbours.
pub fn simplify_contour(mut poly: Vec<Point2>, tol: &Tolerance) -> Vec<Point2> {
    loop {
        let n = poly.len();
        if n < 3 {
            if n == 2 && poly[0].distance(poly[1]) <= tol.eps_dist {
                poly.pop();
            }
            return poly;
        }
        let redundant = (0..n).find(|&i| {
            let prev = poly[(i + n - 1) % n];
            let cur = poly[i];
            let next = poly[(i + 1) % n];
            if cur.distance(prev) <= tol.eps_dist {
                return true;
            }
            let base = next.sub(prev);
            let len = base.norm();
            len > tol.eps_dist && (base.cross(cur.sub(prev)) / len).abs() <= tol.eps_dist
        });
        match redundant {
            Some(i) => {
                poly.remove(i);
            }
            None => return poly,
        }
    }
}

fn containment(loops: &VertexLoops, tol: &Tolerance) -> Result<ContourResult> {
    let tri = |pts: Vec<Point2>| -> Result<Triangle2> {
        match pts.as_slice() {
            [a, b, c] => Triangle2::new(*a, *b, *c, tol),
            _ => Err(KernelError::MalformedLoops),
        }
    };
    let window = tri(loops.window.originals())?;
    let clipped = tri(loops.clipped.originals())?;
    Ok(
        if clipped
            .vertices()
            .iter()
            .all(|&p| point_in_triangle(p, &window, tol))
        {
            ContourResult::ClippedInsideWindow
        } else if window
            .vertices()
            .iter()
            .all(|&p| point_in_triangle(p, &clipped, tol))
        {
            ContourResult::WindowInsideClipped
        } else {
            ContourResult::Disjoint
        },
    )
}

/// Walks the linked loops and collects the intersection contour.
pub fn trace_contour(loops: &VertexLoops, tol: &Tolerance) -> Result<ContourResult> {
    check_links(loops)?;
    let clipped = &loops.clipped.nodes;
    let window = &loops.window.nodes;
    let Some(start) = clipped.iter().position(|n| n.kind == NodeKind::EntryPoint) else {
        return containment(loops, tol);
    };

    let next = |i: usize, len: usize| (i + 1) % len;
    let mut visited = vec![false; clipped.len()];
    let mut contour = Vec::new();
    let mut entry = start;
    loop {
        if visited[entry] {
            return Err(KernelError::MalformedLoops);
        }
        visited[entry] = true;
        contour.push(clipped[entry].position);

        // Along the clipped triangle to the exit.
        let mut j = next(entry, clipped.len());
        while clipped[j].kind == NodeKind::OriginalVertex {
            contour.push(clipped[j].position);
            j = next(j, clipped.len());
        }
        if clipped[j].kind != NodeKind::ExitPoint {
            return Err(KernelError::MalformedLoops);
        }
        contour.push(clipped[j].position);

        // Along the window to the next entry.
        let mut k = next(
            clipped[j].twin.ok_or(KernelError::MalformedLoops)?,
            window.len(),
        );
        while window[k].kind == NodeKind::OriginalVertex {
            contour.push(window[k].position);
            k = next(k, window.len());
        }
        if window[k].kind != NodeKind::EntryPoint {
            return Err(KernelError::MalformedLoops);
        }
        entry = window[k].twin.ok_or(KernelError::MalformedLoops)?;
        if entry == start {
            break;
        }
    }
    // Two convex regions meet in one convex region: one circuit visits
    // every entry.
    if clipped
        .iter()
        .enumerate()
        .any(|(i, n)| n.kind == NodeKind::EntryPoint && !visited[i])
    {
        return Err(KernelError::MalformedLoops);
    }

    let contour = simplify_contour(contour, tol);
    if contour.len() < 3 {
        // Boundary-only contact.
        return Ok(ContourResult::Disjoint);
    }
    if signed_area(&contour) < 0.0 {
        return Err(KernelError::MalformedLoops);
    }
    Ok(ContourResult::Contour(contour))
}

pub fn signed_area(poly: &[Point2]) -> f64 {
    let n = poly.len();
    (0..n)
        .map(|i| poly[i].cross(poly[(i + 1) % n]))
        .sum::<f64>()
        * 0.5
}

pub fn intersect_coplanar(
    window: &Triangle2,
    clipped: &Triangle2,
    tol: &Tolerance,
) -> Result<ContourResult> {
    let loops = build_vertex_loops(window, clipped, tol)?;
    trace_contour(&loops, tol)
}
