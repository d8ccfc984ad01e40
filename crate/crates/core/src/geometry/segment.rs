use std::f64::consts::{FRAC_PI_2, TAU};

use super::isometry::Isometry;
use super::point::{wrap_tau, Point};
use super::{BBox, GeometryError};

/// A circular arc stored by its center, radius, start angle and signed sweep.
///
/// Positive sweep runs counterclockwise. Rotations map arcs to arcs by pure
/// parameter arithmetic, which keeps orbit constructions exact up to the
/// rounding of the rotated center.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Arc {
    pub center: Point,
    pub radius: f64,
    pub start_angle: f64,
    pub sweep: f64,
}

impl Arc {
    pub fn new(center: Point, radius: f64, start_angle: f64, sweep: f64) -> Result<Self, GeometryError> {
        if !(center.is_finite() && radius.is_finite() && start_angle.is_finite() && sweep.is_finite()) {
            return Err(GeometryError::NonFinite);
        }
        if radius <= 0.0 {
            return Err(GeometryError::InvalidArc(format!("radius {radius} is not positive")));
        }
        if sweep == 0.0 || sweep.abs() >= TAU {
            return Err(GeometryError::InvalidArc(format!("sweep {sweep} outside 0 < |sweep| < 2π")));
        }
        Ok(Arc {
            center,
            radius,
            start_angle,
            sweep,
        })
    }

    pub fn end_angle(&self) -> f64 {
        self.start_angle + self.sweep
    }

    pub fn point_at_angle(&self, angle: f64) -> Point {
        self.center + Point::polar(self.radius, angle)
    }

    /// Whether the direction `angle` (seen from the center) lies on the arc,
    /// allowing `eps` radians of slack at both ends.
    pub fn contains_angle(&self, angle: f64, eps: f64) -> bool {
        let d = wrap_tau(self.directed_offset(angle));
        d <= self.sweep.abs() + eps || d >= TAU - eps
    }

    fn directed_offset(&self, angle: f64) -> f64 {
        if self.sweep > 0.0 {
            angle - self.start_angle
        } else {
            self.start_angle - angle
        }
    }

    /// Parameter in `[0, 1]` of the direction `angle`, clamped to the arc.
    pub fn param_of_angle(&self, angle: f64) -> f64 {
        let d = wrap_tau(self.directed_offset(angle));
        if d >= TAU - 1e-12 {
            return 0.0;
        }
        (d / self.sweep.abs()).min(1.0)
    }
}

/// One piece of a tile boundary: a straight segment or a circular arc.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum PathSegment {
    Line { a: Point, b: Point },
    Arc(Arc),
}

impl PathSegment {
    pub fn line(a: Point, b: Point) -> Self {
        PathSegment::Line { a, b }
    }

    /// Arc constructor that panics on invalid parameters; use [`Arc::new`] for
    /// untrusted input.
    pub fn arc(center: Point, radius: f64, start_angle: f64, sweep: f64) -> Self {
        PathSegment::Arc(Arc::new(center, radius, start_angle, sweep).expect("valid arc parameters"))
    }

    /// Arc centered `center` starting at `from` and sweeping `sweep`.
    pub fn arc_from(center: Point, from: Point, sweep: f64) -> Self {
        Self::arc(center, from.dist(center), (from - center).angle(), sweep)
    }

    pub fn start(&self) -> Point {
        match self {
            PathSegment::Line { a, .. } => *a,
            PathSegment::Arc(arc) => arc.point_at_angle(arc.start_angle),
        }
    }

    pub fn end(&self) -> Point {
        match self {
            PathSegment::Line { b, .. } => *b,
            PathSegment::Arc(arc) => arc.point_at_angle(arc.end_angle()),
        }
    }

    pub fn point_at(&self, t: f64) -> Point {
        match self {
            PathSegment::Line { a, b } => a.lerp(*b, t),
            PathSegment::Arc(arc) => arc.point_at_angle(arc.start_angle + t * arc.sweep),
        }
    }

    /// Unit tangent in the direction of travel.
    pub fn tangent_at(&self, t: f64) -> Point {
        match self {
            PathSegment::Line { a, b } => (*b - *a).normalized(),
            PathSegment::Arc(arc) => {
                let theta = arc.start_angle + t * arc.sweep;
                Point::polar(1.0, theta + arc.sweep.signum() * FRAC_PI_2)
            }
        }
    }

    pub fn length(&self) -> f64 {
        match self {
            PathSegment::Line { a, b } => a.dist(*b),
            PathSegment::Arc(arc) => arc.radius * arc.sweep.abs(),
        }
    }

    pub fn is_line(&self) -> bool {
        matches!(self, PathSegment::Line { .. })
    }

    pub fn as_arc(&self) -> Option<&Arc> {
        match self {
            PathSegment::Arc(arc) => Some(arc),
            PathSegment::Line { .. } => None,
        }
    }

    pub fn reversed(&self) -> Self {
        match self {
            PathSegment::Line { a, b } => PathSegment::Line { a: *b, b: *a },
            PathSegment::Arc(arc) => PathSegment::Arc(Arc {
                start_angle: arc.end_angle(),
                sweep: -arc.sweep,
                ..*arc
            }),
        }
    }

    /// Image under an isometry; reflections negate the arc sweep.
    pub fn transformed(&self, g: &Isometry) -> Self {
        match self {
            PathSegment::Line { a, b } => PathSegment::Line {
                a: g.apply(*a),
                b: g.apply(*b),
            },
            PathSegment::Arc(arc) => {
                let sweep = if g.preserves_orientation() { arc.sweep } else { -arc.sweep };
                PathSegment::Arc(Arc {
                    center: g.apply(arc.center),
                    radius: arc.radius,
                    start_angle: g.map_angle(arc.start_angle),
                    sweep,
                })
            }
        }
    }

    /// Uniform scaling about the origin.
    pub fn scaled(&self, factor: f64) -> Self {
        match self {
            PathSegment::Line { a, b } => PathSegment::Line {
                a: *a * factor,
                b: *b * factor,
            },
            PathSegment::Arc(arc) => PathSegment::Arc(Arc {
                center: arc.center * factor,
                radius: arc.radius * factor,
                ..*arc
            }),
        }
    }

    /// Contribution `½∮(x dy − y dx)` of this segment to the enclosed area.
    pub fn area_term(&self) -> f64 {
        match self {
            PathSegment::Line { a, b } => 0.5 * a.cross(*b),
            PathSegment::Arc(arc) => {
                let (r, c) = (arc.radius, arc.center);
                let (t0, t1) = (arc.start_angle, arc.end_angle());
                0.5 * (r * r * arc.sweep + r * (c.x * (t1.sin() - t0.sin()) - c.y * (t1.cos() - t0.cos())))
            }
        }
    }

    /// First moment `∫ z ds` along the segment.
    pub fn moment(&self) -> Point {
        match self {
            PathSegment::Line { a, b } => a.midpoint(*b) * a.dist(*b),
            PathSegment::Arc(arc) => {
                let (r, c) = (arc.radius, arc.center);
                let (t0, t1) = (arc.start_angle, arc.end_angle());
                let s = arc.sweep.signum();
                // ∫ (c + r e^{iθ}) r |dθ|
                let integral = Point::new(t1.sin() - t0.sin(), -(t1.cos() - t0.cos()));
                c * (r * arc.sweep.abs()) + integral * (r * r * s)
            }
        }
    }

    pub fn bbox(&self) -> BBox {
        let mut bb = BBox::from_points(&[self.start(), self.end()]);
        if let PathSegment::Arc(arc) = self {
            for k in 0..4 {
                let theta = k as f64 * FRAC_PI_2;
                if arc.contains_angle(theta, 0.0) {
                    bb.include(arc.point_at_angle(theta));
                }
            }
        }
        bb
    }

    /// Parameter of the point on the segment closest to `p`.
    pub fn closest_param(&self, p: Point) -> f64 {
        match self {
            PathSegment::Line { a, b } => {
                let d = *b - *a;
                ((p - *a).dot(d) / d.norm_sq()).clamp(0.0, 1.0)
            }
            PathSegment::Arc(arc) => {
                let rel = p - arc.center;
                if rel.norm() == 0.0 {
                    return 0.0;
                }
                let theta = rel.angle();
                if arc.contains_angle(theta, 0.0) {
                    arc.param_of_angle(theta)
                } else if p.dist(self.start()) <= p.dist(self.end()) {
                    0.0
                } else {
                    1.0
                }
            }
        }
    }

    pub fn distance_to(&self, p: Point) -> f64 {
        match self {
            PathSegment::Arc(arc) => {
                let rel = p - arc.center;
                if rel.norm() > 0.0 && arc.contains_angle(rel.angle(), 0.0) {
                    (rel.norm() - arc.radius).abs()
                } else {
                    p.dist(self.start()).min(p.dist(self.end()))
                }
            }
            PathSegment::Line { .. } => p.dist(self.point_at(self.closest_param(p))),
        }
    }

    /// Splits at parameter `t` in `(0, 1)`.
    pub fn split_at(&self, t: f64) -> (Self, Self) {
        match self {
            PathSegment::Line { a, b } => {
                let m = a.lerp(*b, t);
                (PathSegment::Line { a: *a, b: m }, PathSegment::Line { a: m, b: *b })
            }
            PathSegment::Arc(arc) => {
                let first = Arc {
                    sweep: arc.sweep * t,
                    ..*arc
                };
                let second = Arc {
                    start_angle: arc.start_angle + arc.sweep * t,
                    sweep: arc.sweep * (1.0 - t),
                    ..*arc
                };
                (PathSegment::Arc(first), PathSegment::Arc(second))
            }
        }
    }

    /// The piece between parameters `t0 < t1`.
    pub fn sub(&self, t0: f64, t1: f64) -> Self {
        match self {
            PathSegment::Line { .. } => PathSegment::Line {
                a: self.point_at(t0),
                b: self.point_at(t1),
            },
            PathSegment::Arc(arc) => PathSegment::Arc(Arc {
                start_angle: arc.start_angle + arc.sweep * t0,
                sweep: arc.sweep * (t1 - t0),
                ..*arc
            }),
        }
    }

    /// `count + 1` evenly spaced points including both endpoints.
    pub fn sample(&self, count: usize) -> Vec<Point> {
        (0..=count).map(|i| self.point_at(i as f64 / count as f64)).collect()
    }

    /// Signed angle subtended at `p` while travelling along the segment.
    pub(crate) fn winding_angle(&self, p: Point) -> f64 {
        let (s, e) = (self.start() - p, self.end() - p);
        let chord = s.cross(e).atan2(s.dot(e));
        match self {
            PathSegment::Line { .. } => chord,
            PathSegment::Arc(arc) => {
                // The closed loop arc + reversed chord winds once around the
                // points of the circular segment it bounds.
                if p.dist(arc.center) >= arc.radius {
                    return chord;
                }
                let (a, b) = (self.start(), self.end());
                let side_p = (b - a).cross(p - a);
                if side_p.abs() <= 1e-15 * (b - a).norm_sq().max(1e-300) {
                    let (h0, h1) = self.split_at(0.5);
                    return h0.winding_angle(p) + h1.winding_angle(p);
                }
                let side_mid = (b - a).cross(self.point_at(0.5) - a);
                if side_p * side_mid > 0.0 {
                    chord + TAU * arc.sweep.signum()
                } else {
                    chord
                }
            }
        }
    }
}
