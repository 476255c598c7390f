use num_traits::{Signed, Zero};

use crate::{orient2, Rational, Rational2};

/// Twice the signed area (positive for counter-clockwise).
pub fn polygon_area2(poly: &[Rational2]) -> Rational {
    let n = poly.len();
    let mut acc = Rational::zero();
    for i in 0..n {
        acc += poly[i].cross(&poly[(i + 1) % n]);
    }
    acc
}

/// Drops repeated vertices and vertices lying on the segment between their
/// neighbours until neither remains.
pub fn simplify_polygon(poly: Vec<Rational2>) -> Vec<Rational2> {
    let mut out = poly;
    loop {
        let n = out.len();
        if n < 3 {
            out.dedup();
            if out.len() == 2 && out[0] == out[1] {
                out.pop();
            }
            return out;
        }
        let mut removed = None;
        for i in 0..n {
            let prev = &out[(i + n - 1) % n];
            let cur = &out[i];
            let next = &out[(i + 1) % n];
            if cur == prev || orient2(prev, cur, next).is_zero() {
                removed = Some(i);
                break;
            }
        }
        match removed {
            Some(i) => {
                out.remove(i);
            }
            None => return out,
        }
    }
}

/// Sutherland–Hodgman clip of `subject` by the closed triangle `window`.
///
/// The output is simplified and counter-clockwise; fewer than three vertices
/// means the interiors do not overlap.
pub fn clip_polygon(subject: &[Rational2], window: &[Rational2; 3]) -> Vec<Rational2> {
    let mut win = window.to_vec();
    if polygon_area2(&win).is_negative() {
        win.reverse();
    }
    let mut poly = subject.to_vec();
    if polygon_area2(&poly).is_negative() {
        poly.reverse();
    }

    for k in 0..3 {
        if poly.is_empty() {
            break;
        }
        let a = &win[k];
        let b = &win[(k + 1) % 3];
        let input = std::mem::take(&mut poly);
        let n = input.len();
        for i in 0..n {
            let s = &input[(i + n - 1) % n];
            let e = &input[i];
            let fs = orient2(a, b, s);
            let fe = orient2(a, b, e);
            let s_in = !fs.is_negative();
            let e_in = !fe.is_negative();
            if e_in {
                if !s_in {
                    poly.push(crossing(s, e, &fs, &fe));
                }
                poly.push(e.clone());
            } else if s_in {
                poly.push(crossing(s, e, &fs, &fe));
            }
        }
    }
    simplify_polygon(poly)
}

fn crossing(s: &Rational2, e: &Rational2, fs: &Rational, fe: &Rational) -> Rational2 {
    let t = fs / &(fs - fe);
    s + &(e - s).scale(&t)
}
