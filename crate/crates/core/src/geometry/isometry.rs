use super::point::{wrap_pi, Point};

/// Classification of a planar isometry.
#[derive(Clone, Copy, Debug, PartialEq)]
pub enum IsometryKind {
    Identity,
    Translation { offset: Point },
    Rotation { center: Point, angle: f64 },
    /// Reflection in the line through `point` with direction `angle`.
    Reflection { point: Point, angle: f64 },
    /// Reflection followed by a translation along the mirror axis.
    GlideReflection { point: Point, angle: f64, shift: f64 },
}

/// A distance-preserving affine map `z ↦ M z + b` with `M` orthogonal.
///
/// `M` is stored as `[m00, m01, m10, m11]`. Composition is closed, so every
/// combination of rotations, translations and reflections is again an
/// `Isometry`.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Isometry {
    m: [f64; 4],
    offset: Point,
}

impl Default for Isometry {
    fn default() -> Self {
        Self::identity()
    }
}

impl Isometry {
    pub fn identity() -> Self {
        Isometry {
            m: [1.0, 0.0, 0.0, 1.0],
            offset: Point::ORIGIN,
        }
    }

    pub fn translation(offset: Point) -> Self {
        Isometry {
            m: [1.0, 0.0, 0.0, 1.0],
            offset,
        }
    }

    /// Counterclockwise rotation by `angle` about `center`.
    pub fn rotation(center: Point, angle: f64) -> Self {
        let (s, c) = angle.sin_cos();
        let m = [c, -s, s, c];
        let rc = Point::new(c * center.x - s * center.y, s * center.x + c * center.y);
        Isometry {
            m,
            offset: center - rc,
        }
    }

    /// Reflection in the line through `point` with direction `angle`.
    pub fn reflection(point: Point, angle: f64) -> Self {
        let (s, c) = (2.0 * angle).sin_cos();
        let m = [c, s, s, -c];
        let mp = Point::new(c * point.x + s * point.y, s * point.x - c * point.y);
        Isometry {
            m,
            offset: point - mp,
        }
    }

    pub fn apply(&self, p: Point) -> Point {
        Point::new(
            self.m[0] * p.x + self.m[1] * p.y + self.offset.x,
            self.m[2] * p.x + self.m[3] * p.y + self.offset.y,
        )
    }

    /// Applies only the linear part (for direction vectors).
    pub fn apply_vector(&self, v: Point) -> Point {
        Point::new(
            self.m[0] * v.x + self.m[1] * v.y,
            self.m[2] * v.x + self.m[3] * v.y,
        )
    }

    /// Image of the direction with polar angle `angle`.
    pub fn map_angle(&self, angle: f64) -> f64 {
        self.apply_vector(Point::polar(1.0, angle)).angle()
    }

    /// `self ∘ other`: apply `other` first.
    pub fn compose(&self, other: &Isometry) -> Isometry {
        let a = self.m;
        let b = other.m;
        let m = [
            a[0] * b[0] + a[1] * b[2],
            a[0] * b[1] + a[1] * b[3],
            a[2] * b[0] + a[3] * b[2],
            a[2] * b[1] + a[3] * b[3],
        ];
        Isometry {
            m,
            offset: self.apply(other.offset),
        }
    }

    pub fn inverse(&self) -> Isometry {
        let m = [self.m[0], self.m[2], self.m[1], self.m[3]];
        let inv = Isometry {
            m,
            offset: Point::ORIGIN,
        };
        Isometry {
            m,
            offset: -inv.apply_vector(self.offset),
        }
    }

    /// `self` applied `times` times (negative powers use the inverse).
    pub fn pow(&self, times: i64) -> Isometry {
        let base = if times < 0 { self.inverse() } else { *self };
        let mut out = Isometry::identity();
        for _ in 0..times.unsigned_abs() {
            out = base.compose(&out);
        }
        out
    }

    pub fn determinant(&self) -> f64 {
        self.m[0] * self.m[3] - self.m[1] * self.m[2]
    }

    pub fn preserves_orientation(&self) -> bool {
        self.determinant() > 0.0
    }

    pub fn offset(&self) -> Point {
        self.offset
    }

    /// Rotation angle of the linear part (for reflections, twice the axis angle).
    pub fn linear_angle(&self) -> f64 {
        self.m[2].atan2(self.m[0])
    }

    pub fn kind(&self) -> IsometryKind {
        const EPS: f64 = 1e-12;
        let theta = self.linear_angle();
        if self.preserves_orientation() {
            if wrap_pi(theta).abs() <= EPS {
                if self.offset.norm() <= EPS {
                    IsometryKind::Identity
                } else {
                    IsometryKind::Translation {
                        offset: self.offset,
                    }
                }
            } else {
                // Fixed point c solves (I - M) c = b.
                let (s, c) = theta.sin_cos();
                let a00 = 1.0 - c;
                let a01 = s;
                let a10 = -s;
                let a11 = 1.0 - c;
                let det = a00 * a11 - a01 * a10;
                let b = self.offset;
                let center = Point::new(
                    (a11 * b.x - a01 * b.y) / det,
                    (-a10 * b.x + a00 * b.y) / det,
                );
                IsometryKind::Rotation {
                    center,
                    angle: wrap_pi(theta),
                }
            }
        } else {
            let axis = theta / 2.0;
            let dir = Point::polar(1.0, axis);
            let shift = self.offset.dot(dir);
            // The perpendicular part of the offset locates the axis.
            let point = (self.offset - dir * shift) * 0.5;
            if shift.abs() <= EPS {
                IsometryKind::Reflection { point, angle: axis }
            } else {
                IsometryKind::GlideReflection {
                    point,
                    angle: axis,
                    shift,
                }
            }
        }
    }
}
