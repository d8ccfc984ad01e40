use std::f64::consts::PI;

use crate::geometry::{Isometry, Point};

use super::WedgeError;

/// The canonical generator points and the images of `q` under alternating
/// rotations about `p` and `q`.
#[derive(Clone, Debug, PartialEq)]
pub struct VertexConfiguration {
    pub n: u32,
    pub p: Point,
    pub q: Point,
    pub alpha: f64,
    /// `w_0 = q, …, w_m = p` with `w_{j+1} = (β_q ∘ α_p)(w_j)` and `m = (n−1)/2`.
    pub chain: Vec<Point>,
    /// `α_p(w_j)` for each chain point.
    pub mirror_chain: Vec<Point>,
    /// Fixed point of `α_p ∘ β_q`, above the axis.
    pub c_plus: Point,
    /// Fixed point of `β_q ∘ α_p`, below the axis.
    pub c_minus: Point,
}

impl VertexConfiguration {
    /// Radius of the circles around `c_plus` and `c_minus` through `p` and `q`.
    pub fn circle_radius(&self) -> f64 {
        1.0 / (self.alpha / 2.0).cos()
    }

    /// `α_p`: counterclockwise rotation by `π/n` about `p`.
    pub fn alpha_p(&self) -> Isometry {
        Isometry::rotation(self.p, self.alpha)
    }

    /// `β_q`: counterclockwise rotation by `π/n` about `q`.
    pub fn beta_q(&self) -> Isometry {
        Isometry::rotation(self.q, self.alpha)
    }

    pub fn m(&self) -> usize {
        (self.n as usize - 1) / 2
    }

    /// The `n` configuration points above the axis: the chain together with
    /// its mirror images, `p` and `q` counted once.
    pub fn upper_points(&self) -> Vec<Point> {
        let mut pts = self.chain.clone();
        pts.extend(self.mirror_chain.iter().take(self.m()).copied());
        pts
    }

    /// Reflections of [`Self::upper_points`] across the `p`–`q` line.
    pub fn lower_points(&self) -> Vec<Point> {
        self.upper_points().into_iter().map(|v| Point::new(v.x, -v.y)).collect()
    }
}

pub(crate) fn check_n(n: u32) -> Result<(), WedgeError> {
    if n < 3 || n.is_multiple_of(2) {
        Err(WedgeError::InvalidN(n))
    } else {
        Ok(())
    }
}

pub fn vertex_chain(n: u32) -> Result<VertexConfiguration, WedgeError> {
    check_n(n)?;
    let alpha = PI / n as f64;
    let p = Point::new(-1.0, 0.0);
    let q = Point::new(1.0, 0.0);
    let alpha_p = Isometry::rotation(p, alpha);
    let step = Isometry::rotation(q, alpha).compose(&alpha_p);
    let m = (n as usize - 1) / 2;
    let mut chain = Vec::with_capacity(m + 1);
    let mut w = q;
    chain.push(w);
    for _ in 0..m {
        w = step.apply(w);
        chain.push(w);
    }
    // The orbit lands on p up to rounding; store the exact point.
    chain[m] = p;
    let mirror_chain = chain.iter().map(|w| alpha_p.apply(*w)).collect();
    let h = alpha.sin() / (alpha.cos() + 1.0);
    Ok(VertexConfiguration {
        n,
        p,
        q,
        alpha,
        chain,
        mirror_chain,
        c_plus: Point::new(0.0, h),
        c_minus: Point::new(0.0, -h),
    })
}

/// Boundary of the admissible region for the groove endpoint.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct CriticalLocus {
    pub n: u32,
    /// Half-angle of the cone at `q`, `π/(2n)`.
    pub ray_angle: f64,
    /// Radius about `p` that the groove endpoint must stay within.
    pub radius: f64,
    /// Largest symmetric groove length, `R − 2`.
    pub t_max: f64,
}

impl CriticalLocus {
    /// Whether a groove endpoint lies strictly inside the cone at `q` and
    /// strictly within distance `R` of `p`.
    pub fn admissible(&self, candidate: Point) -> bool {
        let q = Point::new(1.0, 0.0);
        let p = Point::new(-1.0, 0.0);
        let rel = candidate - q;
        rel.norm() > 0.0 && rel.angle().abs() < self.ray_angle && candidate.dist(p) < self.radius
    }

    /// Groove-to-disk-radius ratio at the critical symmetric length.
    pub fn critical_ratio(&self) -> f64 {
        self.t_max / (2.0 + self.t_max)
    }
}

pub fn critical_locus(n: u32) -> Result<CriticalLocus, WedgeError> {
    check_n(n)?;
    let alpha = PI / n as f64;
    let radius = 2.0 * (5.0 - 4.0 * alpha.cos()).sqrt();
    Ok(CriticalLocus {
        n,
        ray_angle: alpha / 2.0,
        radius,
        t_max: radius - 2.0,
    })
}
