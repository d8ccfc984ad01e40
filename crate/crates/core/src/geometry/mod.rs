//! Planar primitives: points, isometries, line and arc segments, and closed
//! contours with area, simplicity, containment and congruence tests.

mod congruence;
mod contour;
mod intersect;
mod isometry;
mod point;
mod segment;

pub use congruence::{alignment_residual, congruent, contour_signature, Signature};
pub use contour::{BoundaryPos, Contour, Location, Path, Simplicity};
pub use intersect::intersections;
pub use isometry::{Isometry, IsometryKind};
pub use point::{wrap_pi, wrap_tau, Point};
pub use segment::{Arc, PathSegment};

use thiserror::Error;

/// Relative tolerance for geometric equality (times the contour scale).
pub const GEOM_TOL: f64 = 1e-9;
/// Tolerance for algebraic identities such as chain closure.
pub const ALG_TOL: f64 = 1e-12;
/// Resolution of contour signatures and congruence witnesses.
pub const SIG_TOL: f64 = 1e-7;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GeometryError {
    #[error("contour is not closed: gap {gap:e} after segment {index}")]
    NotClosed { index: usize, gap: f64 },
    #[error("contour has no segments")]
    Empty,
    #[error("invalid arc: {0}")]
    InvalidArc(String),
    #[error("non-finite coordinate")]
    NonFinite,
    #[error("segment {index} has zero length")]
    DegenerateSegment { index: usize },
}

/// Axis-aligned bounding box.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct BBox {
    pub min: Point,
    pub max: Point,
}

impl BBox {
    pub fn from_points(points: &[Point]) -> BBox {
        let mut bb = BBox {
            min: Point::new(f64::INFINITY, f64::INFINITY),
            max: Point::new(f64::NEG_INFINITY, f64::NEG_INFINITY),
        };
        for p in points {
            bb.include(*p);
        }
        bb
    }

    pub fn include(&mut self, p: Point) {
        self.min = Point::new(self.min.x.min(p.x), self.min.y.min(p.y));
        self.max = Point::new(self.max.x.max(p.x), self.max.y.max(p.y));
    }

    pub fn union(&self, other: &BBox) -> BBox {
        let mut bb = *self;
        bb.include(other.min);
        bb.include(other.max);
        bb
    }

    pub fn expanded(&self, margin: f64) -> BBox {
        BBox {
            min: Point::new(self.min.x - margin, self.min.y - margin),
            max: Point::new(self.max.x + margin, self.max.y + margin),
        }
    }

    pub fn overlaps(&self, other: &BBox) -> bool {
        self.min.x <= other.max.x && other.min.x <= self.max.x && self.min.y <= other.max.y && other.min.y <= self.max.y
    }

    pub fn contains(&self, p: Point) -> bool {
        p.x >= self.min.x && p.x <= self.max.x && p.y >= self.min.y && p.y <= self.max.y
    }

    pub fn diagonal(&self) -> f64 {
        self.min.dist(self.max)
    }
}

/// Image of a contour under an isometry.
pub fn apply_isometry(g: &Isometry, c: &Contour) -> Contour {
    c.transformed(g)
}

/// Signed area, positive for counterclockwise contours.
pub fn contour_area(c: &Contour) -> f64 {
    c.area()
}

pub fn contour_is_simple(c: &Contour) -> Simplicity {
    c.is_simple()
}

/// Intersection points of two segments at the default absolute tolerance.
pub fn segment_intersections(s1: &PathSegment, s2: &PathSegment) -> Vec<Point> {
    let scale = s1.bbox().union(&s2.bbox()).diagonal().max(1.0);
    intersections(s1, s2, GEOM_TOL * scale)
}

pub fn point_location(p: Point, c: &Contour) -> Location {
    c.locate(p)
}
