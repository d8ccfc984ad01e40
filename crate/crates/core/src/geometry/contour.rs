use std::f64::consts::TAU;

use super::intersect::intersections;
use super::isometry::Isometry;
use super::point::Point;
use super::segment::PathSegment;
use super::{BBox, GeometryError, GEOM_TOL};

/// An open chain of segments anchored at `start`. An empty path is a single
/// point, which keeps zero-length grooves out of segment lists.
#[derive(Clone, Debug, PartialEq)]
pub struct Path {
    start: Point,
    segments: Vec<PathSegment>,
}

impl Path {
    pub fn new(start: Point) -> Self {
        Path {
            start,
            segments: Vec::new(),
        }
    }

    pub fn from_segments(start: Point, segments: Vec<PathSegment>) -> Self {
        let mut path = Path::new(start);
        for s in segments {
            path.push(s);
        }
        path
    }

    /// Appends `seg`, snapping its start onto the current end.
    pub fn push(&mut self, seg: PathSegment) {
        let end = self.end();
        let seg = match seg {
            PathSegment::Line { b, .. } => PathSegment::Line { a: end, b },
            arc => arc,
        };
        self.segments.push(seg);
    }

    pub fn extend(&mut self, other: &Path) {
        for s in &other.segments {
            self.push(*s);
        }
    }

    pub fn start(&self) -> Point {
        self.start
    }

    pub fn end(&self) -> Point {
        self.segments.last().map_or(self.start, PathSegment::end)
    }

    pub fn segments(&self) -> &[PathSegment] {
        &self.segments
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn length(&self) -> f64 {
        self.segments.iter().map(PathSegment::length).sum()
    }

    pub fn reversed(&self) -> Path {
        Path {
            start: self.end(),
            segments: self.segments.iter().rev().map(PathSegment::reversed).collect(),
        }
    }

    pub fn transformed(&self, g: &Isometry) -> Path {
        Path {
            start: g.apply(self.start),
            segments: self.segments.iter().map(|s| s.transformed(g)).collect(),
        }
    }

    /// Whether no two segments meet except consecutive ones at their shared
    /// endpoint.
    pub fn is_simple(&self, tol: f64) -> bool {
        let n = self.segments.len();
        for i in 0..n {
            for j in i + 1..n {
                let pts = intersections(&self.segments[i], &self.segments[j], tol);
                let allowed: Vec<Point> = if j == i + 1 { vec![self.segments[i].end()] } else { Vec::new() };
                if pts.iter().any(|p| !allowed.iter().any(|a| a.dist(*p) <= tol * 100.0)) {
                    return false;
                }
            }
        }
        true
    }
}

/// Result of [`Contour::locate`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Location {
    Inside,
    Boundary,
    Outside,
}

/// Result of [`Contour::is_simple`].
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Simplicity {
    pub simple: bool,
    pub violation: Option<Point>,
}

/// A point on a contour given by segment index and parameter.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BoundaryPos {
    pub segment: usize,
    pub param: f64,
}

/// A closed chain of segments.
#[derive(Clone, Debug, PartialEq)]
pub struct Contour {
    segments: Vec<PathSegment>,
}

impl Contour {
    /// Builds a contour, checking finiteness and closure within
    /// `GEOM_TOL · scale`.
    pub fn new(segments: Vec<PathSegment>) -> Result<Self, GeometryError> {
        if segments.is_empty() {
            return Err(GeometryError::Empty);
        }
        for s in &segments {
            if !(s.start().is_finite() && s.end().is_finite()) {
                return Err(GeometryError::NonFinite);
            }
        }
        let c = Contour { segments };
        let tol = GEOM_TOL * c.scale().max(f64::MIN_POSITIVE);
        for (i, s) in c.segments.iter().enumerate() {
            let next = &c.segments[(i + 1) % c.segments.len()];
            let gap = s.end().dist(next.start());
            if gap > tol {
                return Err(GeometryError::NotClosed { index: i, gap });
            }
            if s.length() <= 1e-12 * c.scale() {
                return Err(GeometryError::DegenerateSegment { index: i });
            }
        }
        Ok(c)
    }

    /// Closes `path` with its own start; fails when the ends are apart.
    pub fn from_path(path: &Path) -> Result<Self, GeometryError> {
        Contour::new(path.segments().to_vec())
    }

    pub fn segments(&self) -> &[PathSegment] {
        &self.segments
    }

    pub fn len(&self) -> usize {
        self.segments.len()
    }

    pub fn is_empty(&self) -> bool {
        self.segments.is_empty()
    }

    pub fn bbox(&self) -> BBox {
        let mut bb = self.segments[0].bbox();
        for s in &self.segments[1..] {
            bb = bb.union(&s.bbox());
        }
        bb
    }

    /// Length scale used by every relative tolerance: the bounding-box
    /// diagonal.
    pub fn scale(&self) -> f64 {
        self.bbox().diagonal()
    }

    /// Signed area, positive for counterclockwise traversal.
    pub fn area(&self) -> f64 {
        self.segments.iter().map(PathSegment::area_term).sum()
    }

    pub fn length(&self) -> f64 {
        self.segments.iter().map(PathSegment::length).sum()
    }

    /// First moment of the boundary curve, `∫ z ds`.
    pub fn moment(&self) -> Point {
        self.segments
            .iter()
            .fold(Point::ORIGIN, |acc, s| acc + s.moment())
    }

    /// Centroid of the boundary curve; equivariant under isometries.
    pub fn boundary_centroid(&self) -> Point {
        self.moment() * (1.0 / self.length())
    }

    pub fn vertices(&self) -> Vec<Point> {
        self.segments.iter().map(PathSegment::start).collect()
    }

    pub fn reversed(&self) -> Contour {
        Contour {
            segments: self.segments.iter().rev().map(PathSegment::reversed).collect(),
        }
    }

    pub fn transformed(&self, g: &Isometry) -> Contour {
        Contour {
            segments: self.segments.iter().map(|s| s.transformed(g)).collect(),
        }
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> Contour {
        Contour {
            segments: self.segments.iter().map(|s| s.scaled(factor)).collect(),
        }
    }

    pub fn oriented_ccw(&self) -> Contour {
        if self.area() < 0.0 {
            self.reversed()
        } else {
            self.clone()
        }
    }

    /// `per_segment + 1` points on each segment, endpoints included.
    pub fn sample(&self, per_segment: usize) -> Vec<Point> {
        self.segments.iter().flat_map(|s| s.sample(per_segment)).collect()
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        self.segments
            .iter()
            .map(|s| s.distance_to(p))
            .fold(f64::INFINITY, f64::min)
    }

    /// The nearest boundary position to `p`.
    pub fn project(&self, p: Point) -> BoundaryPos {
        let mut best = (f64::INFINITY, BoundaryPos { segment: 0, param: 0.0 });
        for (i, s) in self.segments.iter().enumerate() {
            let t = s.closest_param(p);
            let d = s.point_at(t).dist(p);
            if d < best.0 {
                best = (d, BoundaryPos { segment: i, param: t });
            }
        }
        best.1
    }

    pub fn point_at(&self, pos: BoundaryPos) -> Point {
        self.segments[pos.segment].point_at(pos.param)
    }

    /// Winding number of the contour around `p`; `p` must not lie on it.
    pub fn winding_number(&self, p: Point) -> i64 {
        let total: f64 = self.segments.iter().map(|s| s.winding_angle(p)).sum();
        (total / TAU).round() as i64
    }

    /// Classifies `p` with a boundary band of `GEOM_TOL · scale`.
    pub fn locate(&self, p: Point) -> Location {
        self.locate_with_band(p, GEOM_TOL * self.scale())
    }

    pub fn locate_with_band(&self, p: Point, band: f64) -> Location {
        if self.distance_to(p) <= band {
            return Location::Boundary;
        }
        if self.winding_number(p) != 0 {
            Location::Inside
        } else {
            Location::Outside
        }
    }

    /// Checks that non-adjacent segments are disjoint and adjacent ones meet
    /// only at their shared endpoint.
    pub fn is_simple(&self) -> Simplicity {
        let scale = self.scale();
        let tol = GEOM_TOL * scale;
        // Intersections of adjacent segments this close to their common
        // vertex are the vertex itself seen through rounding.
        let joint = 1e-7 * scale;
        let n = self.segments.len();
        for i in 0..n {
            for j in i + 1..n {
                let mut joints = Vec::new();
                if j == i + 1 {
                    joints.push(self.segments[i].end());
                }
                if i == 0 && j == n - 1 {
                    joints.push(self.segments[0].start());
                }
                for p in intersections(&self.segments[i], &self.segments[j], tol) {
                    if !joints.iter().any(|v| v.dist(p) <= joint) {
                        return Simplicity {
                            simple: false,
                            violation: Some(p),
                        };
                    }
                }
                if !joints.is_empty() && folds_back(&self.segments[i], &self.segments[j], j == i + 1, tol) {
                    return Simplicity {
                        simple: false,
                        violation: Some(joints[0]),
                    };
                }
            }
        }
        Simplicity {
            simple: true,
            violation: None,
        }
    }

    /// Merges consecutive collinear lines and co-circular arcs turning the
    /// same way, so that equal shapes built from different subdivisions
    /// compare equal.
    pub fn merged(&self) -> Contour {
        let n = self.segments.len();
        let tol = GEOM_TOL * self.scale();
        // Start after a genuine corner so the wraparound junction needs no
        // special case.
        let first = (0..n)
            .find(|&i| merge_pair(&self.segments[(i + n - 1) % n], &self.segments[i], tol).is_none())
            .unwrap_or(0);
        let mut out: Vec<PathSegment> = Vec::with_capacity(n);
        for k in 0..n {
            let s = self.segments[(first + k) % n];
            if let Some(last) = out.last_mut() {
                if let Some(m) = merge_pair(last, &s, tol) {
                    *last = m;
                    continue;
                }
            }
            out.push(s);
        }
        Contour { segments: out }
    }

    /// The part of the boundary running forward from `from` to `to`.
    pub fn sub_path(&self, from: BoundaryPos, to: BoundaryPos) -> Path {
        let n = self.segments.len();
        let min_len = 1e-12 * self.scale();
        let mut path = Path::new(self.point_at(from));
        let push = |seg: PathSegment, path: &mut Path| {
            if seg.length() > min_len {
                path.push(seg);
            }
        };
        if from.segment == to.segment && from.param <= to.param {
            push(self.segments[from.segment].sub(from.param, to.param), &mut path);
            return path;
        }
        push(self.segments[from.segment].sub(from.param, 1.0), &mut path);
        let mut i = (from.segment + 1) % n;
        while i != to.segment {
            push(self.segments[i], &mut path);
            i = (i + 1) % n;
        }
        push(self.segments[to.segment].sub(0.0, to.param), &mut path);
        path
    }

    /// Cuts the region along the straight chord between two boundary
    /// positions. The first piece runs forward from `a` to `b`, the second
    /// from `b` back to `a`. Coincident positions (a pinch point) give a
    /// chord of length zero, which is omitted.
    pub fn split_by_chord(&self, a: BoundaryPos, b: BoundaryPos) -> Result<(Contour, Contour), GeometryError> {
        let (pa, pb) = (self.point_at(a), self.point_at(b));
        let close = |path: Path, from: Point, to: Point| -> Result<Contour, GeometryError> {
            let mut segs = path.segments().to_vec();
            if from.dist(to) > 1e-12 * self.scale() {
                segs.push(PathSegment::line(from, to));
            }
            Contour::new(segs)
        };
        let first = close(self.sub_path(a, b), pb, pa)?;
        let second = close(self.sub_path(b, a), pa, pb)?;
        Ok((first, second))
    }
}

/// Detects two consecutive segments that double back over each other at
/// their shared vertex.
fn folds_back(s: &PathSegment, t: &PathSegment, s_then_t: bool, tol: f64) -> bool {
    let (into, out_of) = if s_then_t { (s, t) } else { (t, s) };
    if into.tangent_at(1.0).dot(out_of.tangent_at(0.0)) > -1.0 + 1e-12 {
        return false;
    }
    // Opposite tangents: a fold if the outgoing piece runs back along the
    // incoming one, a cusp if differing curvature pulls them apart.
    let step = 0.01 * into.length().min(out_of.length());
    into.distance_to(out_of.point_at(step / out_of.length())) <= tol
}

/// Combines `a` followed by `b` into one segment when they lie on the same
/// line or circle and continue smoothly.
fn merge_pair(a: &PathSegment, b: &PathSegment, tol: f64) -> Option<PathSegment> {
    if a.end().dist(b.start()) > tol {
        return None;
    }
    match (a, b) {
        (PathSegment::Line { a: s, b: m }, PathSegment::Line { b: e, .. }) => {
            let d1 = (*m - *s).normalized();
            let d2 = (*e - *m).normalized();
            if d1.cross(d2).abs() <= 1e-9 && d1.dot(d2) > 0.0 {
                Some(PathSegment::line(*s, *e))
            } else {
                None
            }
        }
        (PathSegment::Arc(x), PathSegment::Arc(y)) => {
            let same_circle = x.center.dist(y.center) <= tol && (x.radius - y.radius).abs() <= tol;
            let total = x.sweep + y.sweep;
            if same_circle && x.sweep.signum() == y.sweep.signum() && total.abs() < TAU - 1e-6 {
                Some(PathSegment::Arc(super::segment::Arc { sweep: total, ..*x }))
            } else {
                None
            }
        }
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    pub(crate) fn unit_circle() -> Contour {
        Contour::new(
            (0..4)
                .map(|i| PathSegment::arc(Point::ORIGIN, 1.0, i as f64 * FRAC_PI_2, FRAC_PI_2))
                .collect(),
        )
        .unwrap()
    }

    fn polygon(pts: &[(f64, f64)]) -> Contour {
        let pts: Vec<Point> = pts.iter().map(|&(x, y)| Point::new(x, y)).collect();
        Contour::new(
            (0..pts.len())
                .map(|i| PathSegment::line(pts[i], pts[(i + 1) % pts.len()]))
                .collect(),
        )
        .unwrap()
    }

    pub(crate) fn curved_triangle() -> Contour {
        let s3 = 3f64.sqrt();
        let p = Point::new(-1.0, 0.0);
        let q = Point::new(1.0, 0.0);
        let r = Point::new(0.0, s3);
        Contour::new(vec![
            // p → q along the bottom arc centred (0, −√3).
            PathSegment::arc_from(Point::new(0.0, -s3), p, -PI / 3.0),
            PathSegment::arc_from(p, q, PI / 3.0),
            PathSegment::arc_from(q, r, PI / 3.0),
        ])
        .unwrap()
    }

    #[test]
    fn circle_area_and_orientation() {
        let c = unit_circle();
        assert!((c.area() - PI).abs() < 1e-12);
        assert!((c.reversed().area() + PI).abs() < 1e-12);
    }

    #[test]
    fn curved_triangle_area() {
        assert!((curved_triangle().area() - 2.0 * PI / 3.0).abs() < 1e-12);
    }

    #[test]
    fn open_chain_is_rejected() {
        let segs = vec![
            PathSegment::line(Point::new(0.0, 0.0), Point::new(1.0, 0.0)),
            PathSegment::line(Point::new(1.0, 0.0), Point::new(1.0, 1.0)),
        ];
        assert!(matches!(Contour::new(segs), Err(GeometryError::NotClosed { .. })));
    }

    #[test]
    fn square_simple_bowtie_not() {
        let sq = polygon(&[(0.0, 0.0), (1.0, 0.0), (1.0, 1.0), (0.0, 1.0)]);
        assert!(sq.is_simple().simple);
        let bow = polygon(&[(0.0, 0.0), (1.0, 1.0), (1.0, 0.0), (0.0, 1.0)]);
        let s = bow.is_simple();
        assert!(!s.simple);
        assert!(s.violation.unwrap().approx_eq(Point::new(0.5, 0.5), 1e-9));
    }

    #[test]
    fn locations() {
        let c = unit_circle();
        assert_eq!(c.locate(Point::ORIGIN), Location::Inside);
        assert_eq!(c.locate(Point::new(1.0, 0.0)), Location::Boundary);
        assert_eq!(c.locate(Point::new(1.5, 0.2)), Location::Outside);
        let tri = curved_triangle();
        let above_bottom = Point::new(0.0, 2.0 - 3f64.sqrt() + 0.01);
        assert_eq!(tri.locate(above_bottom), Location::Inside);
        assert_eq!(tri.locate(Point::new(0.0, 2.0 - 3f64.sqrt() - 0.01)), Location::Outside);
        assert_eq!(tri.winding_number(Point::new(0.0, 1.0)), 1);
        assert_eq!(tri.reversed().winding_number(Point::new(0.0, 1.0)), -1);
    }

    #[test]
    fn merge_recombines_split_arcs() {
        let tri = curved_triangle();
        let mut segs = Vec::new();
        for s in tri.segments() {
            let (a, b) = s.split_at(0.3);
            segs.push(a);
            segs.push(b);
        }
        let split = Contour::new(segs).unwrap();
        assert_eq!(split.merged().len(), 3);
        assert!((split.merged().area() - tri.area()).abs() < 1e-12);
    }

    #[test]
    fn chord_split_halves_area() {
        let sq = polygon(&[(0.0, 0.0), (2.0, 0.0), (2.0, 2.0), (0.0, 2.0)]);
        let a = BoundaryPos { segment: 0, param: 0.5 };
        let b = BoundaryPos { segment: 2, param: 0.5 };
        let (h1, h2) = sq.split_by_chord(a, b).unwrap();
        assert!((h1.area() - 2.0).abs() < 1e-12);
        assert!((h2.area() - 2.0).abs() < 1e-12);
    }

    #[test]
    fn tangent_cusp_between_circles_is_simple() {
        // Lens between the unit circle and a smaller circle tangent to it
        // from inside at (1, 0): both corners are zero-angle cusps.
        let big = PathSegment::arc(Point::ORIGIN, 1.0, 0.0, std::f64::consts::FRAC_PI_2);
        let small = PathSegment::arc_from(Point::new(0.5, 0.0), Point::new(0.5, 0.5), -std::f64::consts::FRAC_PI_2);
        let back = PathSegment::line(Point::new(0.0, 1.0), Point::new(0.5, 0.5));
        let c = Contour::new(vec![big, back, small]).unwrap();
        assert!(c.is_simple().simple);
    }

    #[test]
    fn reversing_cusp_is_not_simple() {
        let c = Contour::new(vec![
            PathSegment::line(Point::new(0.0, 0.0), Point::new(2.0, 0.0)),
            PathSegment::line(Point::new(2.0, 0.0), Point::new(1.0, 0.0)),
            PathSegment::line(Point::new(1.0, 0.0), Point::new(0.0, 1.0)),
            PathSegment::line(Point::new(0.0, 1.0), Point::new(0.0, 0.0)),
        ])
        .unwrap();
        assert!(!c.is_simple().simple);
    }
}
