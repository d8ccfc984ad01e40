//! n-wedges: tiles radially generated by the two vertices `p = (−1, 0)` and
//! `q = (1, 0)`, with angle `π/n` at both.

mod build;
mod config;
mod ops;

pub use build::{build_asymmetric_wedge, build_symmetric_wedge, symmetric_wedge_unchecked};
pub use config::{critical_locus, vertex_chain, CriticalLocus, VertexConfiguration};
pub use ops::{
    radially_generated_about, split_wedge_symmetric, subdivide_wedge, verify_radial_generation, RadialReport,
};

use thiserror::Error;

use crate::geometry::{Contour, GeometryError, Path, Point};

#[derive(Debug, Error, Clone, PartialEq)]
pub enum WedgeError {
    #[error("n must be an odd integer at least 3, got {0}")]
    InvalidN(u32),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("normalized groove length {0} outside [0, 1)")]
    GrooveOutOfRange(f64),
    #[error("wedge boundary self-intersects near ({x}, {y})", x = .0.x, y = .0.y)]
    SelfIntersection(Point),
    #[error("groove endpoint ({x}, {y}) lies outside the admissible region", x = .0.x, y = .0.y)]
    InadmissibleEndpoint(Point),
    #[error("groove path collides: {0}")]
    PathCollision(String),
    #[error("wedge groove is not symmetric")]
    NotSymmetric,
    #[error("subdividing into {k} parts collides with the wedge boundary near ({x}, {y})", x = .at.x, y = .at.y)]
    SubdivisionCollision { k: usize, at: Point },
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// How the groove at `q` is shaped.
#[derive(Clone, Debug, PartialEq)]
pub enum GrooveProfile {
    /// Straight groove along the `p`–`q` line with length `t · t_max`.
    Symmetric { t_normalized: f64 },
    /// Any simple path from `q` to the groove endpoint `r_p`.
    Custom { path: Path },
}

/// An n-wedge in canonical coordinates.
#[derive(Clone, Debug, PartialEq)]
pub struct Wedge {
    pub config: VertexConfiguration,
    pub groove: GrooveProfile,
    /// The groove path from `q` to `r_p` (empty when the groove has length 0).
    pub groove_path: Path,
    /// Side path from `r_p` through `q` and the chain down to `p`.
    pub eta: Path,
    /// Counterclockwise boundary: `ρ_p`, then `α_p(η̃)`, then `η̃` reversed.
    pub boundary: Contour,
    /// Radius of the disk about `p` tiled by `2n` copies: `|r_p − p|`.
    pub disk_radius: f64,
}

impl Wedge {
    pub fn n(&self) -> u32 {
        self.config.n
    }

    pub fn p(&self) -> Point {
        self.config.p
    }

    pub fn q(&self) -> Point {
        self.config.q
    }

    pub fn r_p(&self) -> Point {
        self.eta.start()
    }

    /// Groove length `|r_p − q|`.
    pub fn groove_length(&self) -> f64 {
        self.r_p().dist(self.q())
    }

    pub fn expected_area(&self) -> f64 {
        std::f64::consts::PI * self.disk_radius * self.disk_radius / (2.0 * self.config.n as f64)
    }

    pub fn is_symmetric(&self) -> bool {
        matches!(self.groove, GrooveProfile::Symmetric { .. })
    }
}
