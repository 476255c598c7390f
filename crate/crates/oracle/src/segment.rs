use num_traits::{Signed, Zero};

use crate::{orient2, Rational, Rational2};

/// Exact result of clipping a segment by a closed triangle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ExactClip2 {
    Empty,
    Point(Rational2),
    Segment(Rational2, Rational2),
}

/// Clips `p -> q` against the closed triangle `tri` (either orientation).
///
/// Each side contributes one linear constraint `f(s) >= 0` on the segment
/// parameter `s`; the result is the intersection of those intervals with
/// `[0, 1]`.
pub fn clip_segment_interval(p: &Rational2, q: &Rational2, tri: &[Rational2; 3]) -> ExactClip2 {
    let area = orient2(&tri[0], &tri[1], &tri[2]);
    let flip = area.is_negative();

    let mut lo = Rational::zero();
    let mut hi: Rational = Rational::from_integer(1.into());
    for k in 0..3 {
        let a = &tri[k];
        let b = &tri[(k + 1) % 3];
        let mut f0 = orient2(a, b, p);
        let mut f1 = orient2(a, b, q);
        if flip {
            f0 = -f0;
            f1 = -f1;
        }
        let slope = &f1 - &f0;
        if slope.is_zero() {
            if f0.is_negative() {
                return ExactClip2::Empty;
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
        if lo > hi {
            return ExactClip2::Empty;
        }
    }

    let d = q - p;
    let at = |s: &Rational| p + &d.scale(s);
    if lo == hi || p == q {
        ExactClip2::Point(at(&lo))
    } else {
        ExactClip2::Segment(at(&lo), at(&hi))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q2(x: i64, y: i64) -> Rational2 {
        Rational2::new(
            Rational::from_integer(x.into()),
            Rational::from_integer(y.into()),
        )
    }

    fn window() -> [Rational2; 3] {
        [q2(0, 0), q2(4, 0), q2(0, 4)]
    }

    #[test]
    fn vertical_chord_through_window() {
        let r = clip_segment_interval(&q2(1, -2), &q2(1, 3), &window());
        assert_eq!(r, ExactClip2::Segment(q2(1, 0), q2(1, 3)));
    }

    #[test]
    fn segment_left_of_window_is_empty() {
        let r = clip_segment_interval(&q2(-1, -1), &q2(-1, 5), &window());
        assert_eq!(r, ExactClip2::Empty);
    }

    #[test]
    fn grazing_vertex_is_a_point() {
        let r = clip_segment_interval(&q2(3, -1), &q2(5, 1), &window());
        assert_eq!(r, ExactClip2::Point(q2(4, 0)));
    }

    #[test]
    fn clockwise_window_gives_same_answer() {
        let w = window();
        let cw = [w[0].clone(), w[2].clone(), w[1].clone()];
        let r = clip_segment_interval(&q2(1, -2), &q2(1, 3), &cw);
        assert_eq!(r, ExactClip2::Segment(q2(1, 0), q2(1, 3)));
    }

    #[test]
    fn collinear_overlap_with_side() {
        let r = clip_segment_interval(&q2(-1, 0), &q2(5, 0), &window());
        assert_eq!(r, ExactClip2::Segment(q2(0, 0), q2(4, 0)));
    }
}
