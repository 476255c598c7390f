//! Batch drivers behind the `tritri` command: triangle-pair files and
//! all-pairs testing of two OFF triangle soups.
//!
//! Records are processed in parallel chunks and written in input order, so
//! output depends only on the input and the tolerance.

use std::collections::BTreeMap;
use std::io::{BufRead, Write};
use std::path::{Path, PathBuf};
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::error::KernelError;
use crate::geom::{Point3, Tolerance, Triangle3};
use crate::intersect::{intersect, CaseLabel, IntersectionResult};

/// Records handed to the worker pool at a time.
const CHUNK: usize = 4096;

#[derive(Debug, Error)]
pub enum BatchError {
    #[error("I/O error: {0}")]
    Io(#[from] std::io::Error),
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("file not found: {}", .0.display())]
    FileNotFound(PathBuf),
    #[error("mesh has no triangles: {}", .0.display())]
    EmptyMesh(PathBuf),
    #[error("invalid tolerance: {0}")]
    Tolerance(#[from] KernelError),
    #[error("cannot build worker pool: {0}")]
    Pool(#[from] rayon::ThreadPoolBuildError),
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PairRecord {
    /// Zero-based record sequence number.
    pub id: usize,
    /// One-based source line.
    pub line: usize,
    pub t1: Triangle3,
    pub t2: Triangle3,
}

#[derive(Debug, Clone, Default, PartialEq, Serialize)]
pub struct Summary {
    /// Records (or mesh pairs) examined.
    pub records: usize,
    /// Records written to the output stream.
    pub emitted: usize,
    /// Records skipped because a triangle was degenerate or non-finite.
    pub skipped: usize,
    pub counts: BTreeMap<CaseLabel, usize>,
    pub total_us: f64,
}

impl Summary {
    pub fn all_degenerate(&self) -> bool {
        self.records > 0 && self.skipped == self.records
    }
}

#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct RunOptions {
    /// Worker threads; `None` uses one per core.
    pub jobs: Option<usize>,
    /// Add per-record `us` timings (makes output run-dependent).
    pub timing: bool,
    /// Mesh mode: emit only pairs with a non-empty intersection.
    pub contacts_only: bool,
}

#[derive(Serialize)]
struct PairOut<'a> {
    id: usize,
    case: CaseLabel,
    points: &'a [[f64; 3]],
    #[serde(skip_serializing_if = "Option::is_none")]
    us: Option<f64>,
}

#[derive(Serialize)]
struct MeshOut<'a> {
    a: usize,
    b: usize,
    case: CaseLabel,
    points: &'a [[f64; 3]],
    #[serde(skip_serializing_if = "Option::is_none")]
    us: Option<f64>,
}

fn parse_err(line: usize, message: impl Into<String>) -> BatchError {
    BatchError::Parse {
        line,
        message: message.into(),
    }
}

fn parse_f64(tok: &str, line: usize) -> Result<f64, BatchError> {
    let v: f64 = tok
        .parse()
        .map_err(|_| parse_err(line, format!("not a number: {tok:?}")))?;
    if !v.is_finite() {
        return Err(parse_err(line, format!("non-finite value: {tok:?}")));
    }
    Ok(v)
}

fn triangle(c: &[f64]) -> Triangle3 {
    Triangle3::new(
        Point3::new(c[0], c[1], c[2]),
        Point3::new(c[3], c[4], c[5]),
        Point3::new(c[6], c[7], c[8]),
    )
}

/// Parses one pair per line: 18 whitespace-separated numbers. Blank lines
/// and lines starting with `#` are skipped.
pub fn parse_pairs(reader: impl BufRead) -> Result<Vec<PairRecord>, BatchError> {
    let mut out = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line_no = i + 1;
        let line = line?;
        let trimmed = line.trim();
        if trimmed.is_empty() || trimmed.starts_with('#') {
            continue;
        }
        let coords = trimmed
            .split_whitespace()
            .map(|t| parse_f64(t, line_no))
            .collect::<Result<Vec<f64>, _>>()?;
        if coords.len() != 18 {
            return Err(parse_err(
                line_no,
                format!("expected 18 numbers, found {}", coords.len()),
            ));
        }
        out.push(PairRecord {
            id: out.len(),
            line: line_no,
            t1: triangle(&coords[..9]),
            t2: triangle(&coords[9..]),
        });
    }
    Ok(out)
}

/// Parses an ASCII OFF file into a triangle soup. Faces with more than
/// three vertices are rejected.
pub fn parse_off(reader: impl BufRead) -> Result<Vec<Triangle3>, BatchError> {
    // Significant lines with comments stripped, keeping line numbers.
    let mut lines = Vec::new();
    for (i, line) in reader.lines().enumerate() {
        let line = line?;
        let body = line.split('#').next().unwrap_or("").trim().to_string();
        if !body.is_empty() {
            lines.push((i + 1, body));
        }
    }
    let mut it = lines.into_iter();
    let (first_no, first) = it
        .next()
        .ok_or_else(|| parse_err(1, "missing OFF header"))?;
    let mut header = first.split_whitespace();
    if header.next() != Some("OFF") {
        return Err(parse_err(first_no, "missing OFF header"));
    }
    let rest: Vec<String> = header.map(str::to_string).collect();
    let (counts_no, counts) = if rest.is_empty() {
        let (n, l) = it
            .next()
            .ok_or_else(|| parse_err(first_no, "missing element counts"))?;
        (n, l.split_whitespace().map(str::to_string).collect())
    } else {
        (first_no, rest)
    };
    let count = |k: usize| -> Result<usize, BatchError> {
        counts
            .get(k)
            .ok_or_else(|| parse_err(counts_no, "missing element counts"))?
            .parse()
            .map_err(|_| parse_err(counts_no, "invalid element count"))
    };
    let (nv, nf) = (count(0)?, count(1)?);

    let mut verts = Vec::with_capacity(nv);
    for _ in 0..nv {
        let (n, l) = it
            .next()
            .ok_or_else(|| parse_err(counts_no, "unexpected end of vertex list"))?;
        let c = l
            .split_whitespace()
            .take(3)
            .map(|t| parse_f64(t, n))
            .collect::<Result<Vec<f64>, _>>()?;
        if c.len() != 3 {
            return Err(parse_err(n, "vertex needs three coordinates"));
        }
        verts.push(Point3::new(c[0], c[1], c[2]));
    }

    let mut tris = Vec::with_capacity(nf);
    for _ in 0..nf {
        let (n, l) = it
            .next()
            .ok_or_else(|| parse_err(counts_no, "unexpected end of face list"))?;
        // Trailing colour values after the indices are ignored.
        let toks: Vec<&str> = l.split_whitespace().collect();
        let k: usize = toks
            .first()
            .and_then(|t| t.parse().ok())
            .ok_or_else(|| parse_err(n, "invalid face"))?;
        if k != 3 {
            return Err(parse_err(
                n,
                format!("face with {k} vertices; only triangles are supported"),
            ));
        }
        if toks.len() < 4 {
            return Err(parse_err(n, "face needs three indices"));
        }
        let pick = |t: &str| -> Result<Point3, BatchError> {
            let i: usize = t
                .parse()
                .map_err(|_| parse_err(n, format!("invalid index {t:?}")))?;
            verts
                .get(i)
                .copied()
                .ok_or_else(|| parse_err(n, format!("vertex index {i} out of range")))
        };
        tris.push(Triangle3::new(
            pick(toks[1])?,
            pick(toks[2])?,
            pick(toks[3])?,
        ));
    }
    Ok(tris)
}

pub fn read_off(path: &Path) -> Result<Vec<Triangle3>, BatchError> {
    let file = std::fs::File::open(path).map_err(|e| match e.kind() {
        std::io::ErrorKind::NotFound => BatchError::FileNotFound(path.to_path_buf()),
        _ => BatchError::Io(e),
    })?;
    let tris = parse_off(std::io::BufReader::new(file))?;
    if tris.is_empty() {
        return Err(BatchError::EmptyMesh(path.to_path_buf()));
    }
    Ok(tris)
}

struct Outcome {
    result: Option<(CaseLabel, IntersectionResult)>,
    us: f64,
}

fn evaluate(t1: &Triangle3, t2: &Triangle3, tol: &Tolerance) -> Outcome {
    let start = Instant::now();
    let result = intersect(t1, t2, tol).ok();
    Outcome {
        result,
        us: start.elapsed().as_secs_f64() * 1e6,
    }
}

fn pool(jobs: Option<usize>) -> Result<rayon::ThreadPool, BatchError> {
    let mut b = rayon::ThreadPoolBuilder::new();
    if let Some(n) = jobs.filter(|&n| n > 0) {
        b = b.num_threads(n);
    }
    Ok(b.build()?)
}

fn points(r: &IntersectionResult) -> Vec<[f64; 3]> {
    r.points().into_iter().map(Point3::to_array).collect()
}

fn tally(summary: &mut Summary, o: &Outcome) {
    summary.records += 1;
    summary.total_us += o.us;
    match &o.result {
        Some((label, _)) => *summary.counts.entry(*label).or_default() += 1,
        None => summary.skipped += 1,
    }
}

/// Intersects every record and writes one JSON line per non-degenerate
/// record, in input order.
pub fn run_pairs(
    records: &[PairRecord],
    tol: &Tolerance,
    opts: &RunOptions,
    out: &mut dyn Write,
) -> Result<Summary, BatchError> {
    let pool = pool(opts.jobs)?;
    let mut summary = Summary::default();
    for chunk in records.chunks(CHUNK) {
        let outcomes: Vec<Outcome> = pool.install(|| {
            chunk
                .par_iter()
                .map(|r| evaluate(&r.t1, &r.t2, tol))
                .collect()
        });
        for (rec, o) in chunk.iter().zip(&outcomes) {
            tally(&mut summary, o);
            if let Some((case, result)) = &o.result {
                let line = PairOut {
                    id: rec.id,
                    case: *case,
                    points: &points(result),
                    us: opts.timing.then_some(o.us),
                };
                serde_json::to_writer(&mut *out, &line).map_err(std::io::Error::from)?;
                out.write_all(b"\n")?;
                summary.emitted += 1;
            }
        }
    }
    out.flush()?;
    Ok(summary)
}

/// Naive all-pairs test of two triangle soups, in lexicographic index
/// order. With `same_mesh`, only pairs `i < j` are tested.
pub fn run_meshes(
    a: &[Triangle3],
    b: &[Triangle3],
    same_mesh: bool,
    tol: &Tolerance,
    opts: &RunOptions,
    out: &mut dyn Write,
) -> Result<Summary, BatchError> {
    let pool = pool(opts.jobs)?;
    let mut summary = Summary::default();
    let mut pending: Vec<(usize, usize)> = Vec::with_capacity(CHUNK);
    let mut flush =
        |pending: &mut Vec<(usize, usize)>, summary: &mut Summary| -> Result<(), BatchError> {
            let outcomes: Vec<Outcome> = pool.install(|| {
                pending
                    .par_iter()
                    .map(|&(i, j)| evaluate(&a[i], &b[j], tol))
                    .collect()
            });
            for (&(i, j), o) in pending.iter().zip(&outcomes) {
                tally(summary, o);
                if let Some((case, result)) = &o.result {
                    if opts.contacts_only && result.is_empty() {
                        continue;
                    }
                    let line = MeshOut {
                        a: i,
                        b: j,
                        case: *case,
                        points: &points(result),
                        us: opts.timing.then_some(o.us),
                    };
                    serde_json::to_writer(&mut *out, &line).map_err(std::io::Error::from)?;
                    out.write_all(b"\n")?;
                    summary.emitted += 1;
                }
            }
            pending.clear();
            Ok(())
        };
    for i in 0..a.len() {
        let j0 = if same_mesh { i + 1 } else { 0 };
        for j in j0..b.len() {
            pending.push((i, j));
            if pending.len() == CHUNK {
                flush(&mut pending, &mut summary)?;
            }
        }
    }
    flush(&mut pending, &mut summary)?;
    out.flush()?;
    Ok(summary)
}

#[cfg(test)]
mod tests {
    use super::*;

    const IDENTICAL: &str = "0 0 0 4 0 0 0 4 0 0 0 0 4 0 0 0 4 0\n";

    fn run(input: &str, opts: &RunOptions) -> (String, Summary) {
        let recs = parse_pairs(input.as_bytes()).unwrap();
        let mut buf = Vec::new();
        let s = run_pairs(&recs, &Tolerance::default(), opts, &mut buf).unwrap();
        (String::from_utf8(buf).unwrap(), s)
    }

    #[test]
    fn identical_pair_is_coplanar_contour() {
        let (out, s) = run(IDENTICAL, &RunOptions::default());
        assert!(
            out.starts_with(r#"{"id":0,"case":"CoplanarContour","points":[["#),
            "{out}"
        );
        assert_eq!(s.counts[&CaseLabel::CoplanarContour], 1);
        assert!(!out.contains("\"us\""));
    }

    #[test]
    fn timing_flag_adds_us() {
        let (out, _) = run(
            IDENTICAL,
            &RunOptions {
                timing: true,
                ..Default::default()
            },
        );
        assert!(out.contains("\"us\":"));
    }

    #[test]
    fn wrong_arity_names_the_line() {
        let input = "# header\n0 0 0 1 0 0 0 1 0 0 0 1 1 0 1 0 1\n";
        match parse_pairs(input.as_bytes()) {
            Err(BatchError::Parse { line, message }) => {
                assert_eq!(line, 2);
                assert!(message.contains("17"), "{message}");
            }
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn degenerate_records_are_skipped_and_counted() {
        let input = format!("{IDENTICAL}0 0 0 1 1 1 2 2 2 0 0 0 1 0 0 0 1 0\n");
        let (out, s) = run(&input, &RunOptions::default());
        assert_eq!(out.lines().count(), 1);
        assert_eq!((s.records, s.emitted, s.skipped), (2, 1, 1));
        assert!(!s.all_degenerate());
    }

    #[test]
    fn off_parser_reads_triangles_and_rejects_quads() {
        let off = "OFF\n# comment\n4 2 0\n0 0 0\n1 0 0\n0 1 0\n1 1 0\n3 0 1 2\n3 1 3 2 255 0 0\n";
        let tris = parse_off(off.as_bytes()).unwrap();
        assert_eq!(tris.len(), 2);
        assert_eq!(tris[1].b, Point3::new(1., 1., 0.));

        let quad = "OFF\n4 1 0\n0 0 0\n1 0 0\n1 1 0\n0 1 0\n4 0 1 2 3\n";
        match parse_off(quad.as_bytes()) {
            Err(BatchError::Parse { line, .. }) => assert_eq!(line, 7),
            other => panic!("{other:?}"),
        }
    }

    #[test]
    fn mesh_against_itself_skips_diagonal_and_mirrors() {
        let a = vec![
            Triangle3::from([[0., 0., 0.], [4., 0., 0.], [0., 4., 0.]]),
            Triangle3::from([[1., 1., -1.], [1., 1., 2.], [3., 3., 2.]]),
            Triangle3::from([[100., 0., 0.], [101., 0., 0.], [100., 1., 0.]]),
        ];
        let mut buf = Vec::new();
        let s = run_meshes(
            &a,
            &a,
            true,
            &Tolerance::default(),
            &RunOptions::default(),
            &mut buf,
        )
        .unwrap();
        assert_eq!(s.records, 3);
        let out = String::from_utf8(buf).unwrap();
        let first: Vec<&str> = out.lines().collect();
        assert!(
            first[0].starts_with(r#"{"a":0,"b":1,"case":"CrossingSegment""#),
            "{out}"
        );

        let mut buf = Vec::new();
        let opts = RunOptions {
            contacts_only: true,
            ..Default::default()
        };
        let s = run_meshes(&a, &a, true, &Tolerance::default(), &opts, &mut buf).unwrap();
        assert_eq!((s.records, s.emitted), (3, 1));
    }
}
