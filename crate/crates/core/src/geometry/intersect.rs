//! Exact pairwise intersection of lines and circular arcs, with a distance
//! tolerance for tangency and shared endpoints.

use super::point::Point;
use super::segment::{Arc, PathSegment};

/// All points where `s1` and `s2` meet, each reported once. Overlapping
/// collinear or co-circular pieces report the endpoints of the overlap.
pub fn intersections(s1: &PathSegment, s2: &PathSegment, tol: f64) -> Vec<Point> {
    let bb1 = s1.bbox().expanded(tol);
    if !bb1.overlaps(&s2.bbox()) {
        return Vec::new();
    }
    let raw = match (s1, s2) {
        (PathSegment::Line { a, b }, PathSegment::Line { a: c, b: d }) => line_line(*a, *b, *c, *d, tol),
        (PathSegment::Line { a, b }, PathSegment::Arc(arc)) | (PathSegment::Arc(arc), PathSegment::Line { a, b }) => {
            line_arc(*a, *b, arc, tol)
        }
        (PathSegment::Arc(x), PathSegment::Arc(y)) => arc_arc(x, y, tol),
    };
    dedup(raw, tol)
}

fn dedup(points: Vec<Point>, tol: f64) -> Vec<Point> {
    let mut out: Vec<Point> = Vec::with_capacity(points.len());
    for p in points {
        if !out.iter().any(|q| q.approx_eq(p, tol)) {
            out.push(p);
        }
    }
    out
}

fn on_segment(p: Point, s: &PathSegment, tol: f64) -> bool {
    s.distance_to(p) <= tol
}

fn line_line(a: Point, b: Point, c: Point, d: Point, tol: f64) -> Vec<Point> {
    let r = b - a;
    let s = d - c;
    let denom = r.cross(s);
    let (lr, ls) = (r.norm(), s.norm());
    let l1 = PathSegment::line(a, b);
    let l2 = PathSegment::line(c, d);
    if denom.abs() <= 1e-12 * lr * ls {
        // Parallel: only collinear overlaps intersect.
        if (c - a).cross(r).abs() / lr > tol {
            return Vec::new();
        }
        return [a, b]
            .into_iter()
            .filter(|p| on_segment(*p, &l2, tol))
            .chain([c, d].into_iter().filter(|p| on_segment(*p, &l1, tol)))
            .collect();
    }
    let t = (c - a).cross(s) / denom;
    let u = (c - a).cross(r) / denom;
    let (et, eu) = (tol / lr, tol / ls);
    if t < -et || t > 1.0 + et || u < -eu || u > 1.0 + eu {
        // The crossing may still lie within `tol` of an endpoint when the lines
        // meet at a shallow angle.
        return [a, b]
            .into_iter()
            .filter(|p| on_segment(*p, &l2, tol))
            .chain([c, d].into_iter().filter(|p| on_segment(*p, &l1, tol)))
            .collect();
    }
    vec![a + r * t.clamp(0.0, 1.0)]
}

fn line_arc(a: Point, b: Point, arc: &Arc, tol: f64) -> Vec<Point> {
    let r = b - a;
    let len = r.norm();
    let dir = r * (1.0 / len);
    let line = PathSegment::line(a, b);
    let arc_seg = PathSegment::Arc(*arc);
    // Foot of the perpendicular from the center onto the infinite line.
    let t_foot = (arc.center - a).dot(dir);
    let foot = a + dir * t_foot;
    let h = foot.dist(arc.center);
    let mut candidates = Vec::new();
    if h > arc.radius + tol {
        return Vec::new();
    }
    if (h - arc.radius).abs() <= tol {
        candidates.push(foot);
    } else {
        let half = (arc.radius * arc.radius - h * h).max(0.0).sqrt();
        candidates.push(foot - dir * half);
        candidates.push(foot + dir * half);
    }
    let mut out: Vec<Point> = candidates
        .into_iter()
        .filter(|p| on_segment(*p, &line, tol) && on_segment(*p, &arc_seg, tol))
        .collect();
    // Endpoints that touch the other piece within tolerance count as well.
    for p in [a, b] {
        if on_segment(p, &arc_seg, tol) {
            out.push(p);
        }
    }
    for p in [arc_seg.start(), arc_seg.end()] {
        if on_segment(p, &line, tol) {
            out.push(p);
        }
    }
    out
}

fn arc_arc(x: &Arc, y: &Arc, tol: f64) -> Vec<Point> {
    let sx = PathSegment::Arc(*x);
    let sy = PathSegment::Arc(*y);
    let d = x.center.dist(y.center);
    let mut out = Vec::new();
    let same_circle = d <= tol && (x.radius - y.radius).abs() <= tol;
    if !same_circle {
        if d > x.radius + y.radius + tol || d < (x.radius - y.radius).abs() - tol || d <= tol {
            // Disjoint, nested or concentric with different radii.
        } else {
            let u = (y.center - x.center) * (1.0 / d);
            let tangent = (d - (x.radius + y.radius)).abs() <= tol || (d - (x.radius - y.radius).abs()).abs() <= tol;
            // Distance from x.center to the radical line.
            let along = (d * d + x.radius * x.radius - y.radius * y.radius) / (2.0 * d);
            let base = x.center + u * along;
            if tangent {
                out.push(base);
            } else {
                let half = (x.radius * x.radius - along * along).max(0.0).sqrt();
                out.push(base + u.perp() * half);
                out.push(base - u.perp() * half);
            }
            out.retain(|p| on_segment(*p, &sx, tol) && on_segment(*p, &sy, tol));
        }
    }
    for p in [sx.start(), sx.end()] {
        if on_segment(p, &sy, tol) {
            out.push(p);
        }
    }
    for p in [sy.start(), sy.end()] {
        if on_segment(p, &sx, tol) {
            out.push(p);
        }
    }
    out
}
