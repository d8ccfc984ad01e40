//! Congruence of contours under the full isometry group, mirror images
//! included.

use std::f64::consts::PI;

use super::contour::Contour;
use super::isometry::Isometry;
use super::point::{wrap_pi, Point};
use super::segment::PathSegment;
use super::SIG_TOL;

/// One segment of a contour described intrinsically.
#[derive(Clone, Copy, Debug, PartialEq)]
struct Token {
    is_arc: bool,
    /// Length for lines, radius for arcs.
    size: f64,
    abs_sweep: f64,
    sweep_sign: f64,
    /// Signed turn from this segment into the next, in `(−π, π]`.
    turn: f64,
}

/// A quantized, canonical description of a contour's shape. Equal for
/// congruent contours (up to quantization boundaries) and independent of
/// position, starting segment, traversal direction and mirroring.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Signature(Vec<[i64; 5]>);

impl Signature {
    pub fn segment_count(&self) -> usize {
        self.0.len()
    }
}

fn tokens(c: &Contour) -> Vec<Token> {
    let segs = c.segments();
    let n = segs.len();
    (0..n)
        .map(|i| {
            let s = &segs[i];
            let next = &segs[(i + 1) % n];
            let mut turn = wrap_pi(next.tangent_at(0.0).angle() - s.tangent_at(1.0).angle());
            if (turn.abs() - PI).abs() <= SIG_TOL {
                turn = PI;
            }
            match s {
                PathSegment::Line { .. } => Token {
                    is_arc: false,
                    size: s.length(),
                    abs_sweep: 0.0,
                    sweep_sign: 0.0,
                    turn,
                },
                PathSegment::Arc(arc) => Token {
                    is_arc: true,
                    size: arc.radius,
                    abs_sweep: arc.sweep.abs(),
                    sweep_sign: arc.sweep.signum(),
                    turn,
                },
            }
        })
        .collect()
}

fn quantize(t: &Token) -> [i64; 5] {
    let q = |v: f64| (v / SIG_TOL).round() as i64;
    [t.is_arc as i64, q(t.size), q(t.abs_sweep), t.sweep_sign as i64, q(t.turn)]
}

/// The two counterclockwise candidates whose token sequences are compared:
/// the contour itself and its mirror image, together with the isometry that
/// maps the original onto each candidate.
fn candidates(c: &Contour) -> [(Contour, Isometry); 2] {
    let ccw = c.oriented_ccw().merged();
    let mirror = Isometry::reflection(Point::ORIGIN, 0.0);
    let mirrored = ccw.transformed(&mirror).reversed();
    [(ccw, Isometry::identity()), (mirrored, mirror)]
}

fn min_rotation(seq: &[[i64; 5]]) -> Vec<[i64; 5]> {
    let n = seq.len();
    (0..n)
        .map(|s| (0..n).map(|i| seq[(i + s) % n]).collect::<Vec<_>>())
        .min()
        .unwrap_or_default()
}

/// Canonical signature: the least cyclic rotation over the contour and its
/// mirror image.
pub fn contour_signature(c: &Contour) -> Signature {
    let [a, b] = candidates(c);
    let sa = min_rotation(&tokens(&a.0).iter().map(quantize).collect::<Vec<_>>());
    let sb = min_rotation(&tokens(&b.0).iter().map(quantize).collect::<Vec<_>>());
    Signature(sa.min(sb))
}

fn tokens_match(x: &Token, y: &Token, len_tol: f64) -> bool {
    x.is_arc == y.is_arc
        && (x.size - y.size).abs() <= len_tol
        && (x.abs_sweep - y.abs_sweep).abs() <= SIG_TOL
        && x.sweep_sign == y.sweep_sign
        && wrap_pi(x.turn - y.turn).abs() <= SIG_TOL
}

/// Anchor points of a contour: each segment's start and midpoint.
fn anchors(c: &Contour) -> Vec<Point> {
    c.segments()
        .iter()
        .flat_map(|s| [s.start(), s.point_at(0.5)])
        .collect()
}

/// Least-squares rotation plus translation taking `src[i]` to `dst[i]`.
fn procrustes(src: &[Point], dst: &[Point]) -> Isometry {
    let inv = 1.0 / src.len() as f64;
    let ca = src.iter().fold(Point::ORIGIN, |a, p| a + *p) * inv;
    let cb = dst.iter().fold(Point::ORIGIN, |a, p| a + *p) * inv;
    let (mut sin, mut cos) = (0.0, 0.0);
    for (a, b) in src.iter().zip(dst) {
        let (a, b) = (*a - ca, *b - cb);
        sin += a.cross(b);
        cos += a.dot(b);
    }
    let theta = sin.atan2(cos);
    let rot = Isometry::rotation(Point::ORIGIN, theta);
    Isometry::translation(cb - rot.apply(ca)).compose(&rot)
}

/// Largest distance from the image of `c1` under `g` to `c2`, measured at
/// the anchors and a few interior points of every segment.
pub fn alignment_residual(c1: &Contour, c2: &Contour, g: &Isometry) -> f64 {
    c1.segments()
        .iter()
        .flat_map(|s| [0.0, 0.25, 0.5, 0.75].map(|t| s.point_at(t)))
        .map(|p| c2.distance_to(g.apply(p)))
        .fold(0.0, f64::max)
}

/// Whether `c1` and `c2` are congruent, allowing reflections. On success
/// returns an isometry mapping `c1` onto `c2` with residual below
/// `SIG_TOL · scale`.
pub fn congruent(c1: &Contour, c2: &Contour) -> Option<Isometry> {
    let scale = c1.scale().max(c2.scale());
    let len_tol = SIG_TOL * scale;
    let a = c1.oriented_ccw().merged();
    let ta = tokens(&a);
    let pa = anchors(&a);
    let n = ta.len();
    for (cand, to_cand) in candidates(c2) {
        let tb = tokens(&cand);
        if tb.len() != n {
            continue;
        }
        let pb = anchors(&cand);
        for shift in 0..n {
            if !(0..n).all(|i| tokens_match(&ta[i], &tb[(i + shift) % n], len_tol)) {
                continue;
            }
            let dst: Vec<Point> = (0..2 * n).map(|i| pb[(i + 2 * shift) % (2 * n)]).collect();
            let onto_cand = procrustes(&pa, &dst);
            // `to_cand` is an involution (identity or the x-axis mirror).
            let witness = to_cand.compose(&onto_cand);
            if alignment_residual(c1, c2, &witness) < len_tol {
                return Some(witness);
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    fn square() -> Contour {
        let pts = [(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)].map(|(x, y)| Point::new(x, y));
        Contour::new((0..4).map(|i| PathSegment::line(pts[i], pts[(i + 1) % 4])).collect()).unwrap()
    }

    fn curved_triangle() -> Contour {
        let s3 = 3f64.sqrt();
        let p = Point::new(-1.0, 0.0);
        let q = Point::new(1.0, 0.0);
        let r = Point::new(0.0, s3);
        Contour::new(vec![
            PathSegment::arc_from(Point::new(0.0, -s3), p, -PI / 3.0),
            PathSegment::arc_from(p, q, PI / 3.0),
            PathSegment::arc_from(q, r, PI / 3.0),
        ])
        .unwrap()
    }

    /// A lopsided contour with no symmetry at all.
    fn blob() -> Contour {
        let a = Point::new(0.0, 0.0);
        let b = Point::new(3.0, 0.0);
        let c = Point::new(2.0, 1.5);
        Contour::new(vec![
            PathSegment::line(a, b),
            PathSegment::arc_from(Point::new(2.0, 0.0), b, PI / 2.0),
            PathSegment::line(Point::new(2.0, 1.0), c),
            PathSegment::line(c, a),
        ])
        .unwrap()
    }

    #[test]
    fn signature_ignores_rigid_motion() {
        let g = Isometry::translation(Point::new(4.0, -2.0)).compose(&Isometry::rotation(Point::ORIGIN, 31f64.to_radians()));
        assert_eq!(contour_signature(&square()), contour_signature(&square().transformed(&g)));
    }

    #[test]
    fn signature_ignores_mirroring() {
        let m = Isometry::reflection(Point::new(0.3, 0.0), 1.1);
        assert_eq!(contour_signature(&blob()), contour_signature(&blob().transformed(&m)));
    }

    #[test]
    fn translation_witness() {
        let offset = Point::new(5.0, 7.0);
        let g = congruent(&blob(), &blob().transformed(&Isometry::translation(offset))).unwrap();
        assert!(g.preserves_orientation());
        assert!(g.apply(Point::ORIGIN).approx_eq(offset, 1e-9));
    }

    #[test]
    fn mirror_witness_is_reflection() {
        let m = Isometry::reflection(Point::new(0.0, 1.0), 0.4);
        let g = congruent(&blob(), &blob().transformed(&m)).unwrap();
        assert!(!g.preserves_orientation());
        let tri = curved_triangle();
        assert!(congruent(&tri, &tri.transformed(&Isometry::reflection(Point::ORIGIN, 0.0))).is_some());
    }

    #[test]
    fn scaling_breaks_congruence() {
        let tri = curved_triangle();
        assert!(congruent(&tri, &tri.scaled(2.0)).is_none());
        assert_ne!(contour_signature(&tri), contour_signature(&tri.scaled(2.0)));
    }
}
