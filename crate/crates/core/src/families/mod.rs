//! Complete disk tilings: the radial families, `D_n^t` with its critical
//! member, the subdivided families `C_{n,k}^t` and `C̃_{n,k}^{t*}`, and a
//! validator that characterizes any tiling.

mod c;
mod d;
mod radial;
mod validate;
mod word;

pub use c::{build_c, build_ctilde, default_ctilde_groove, edge_word_of, CtildeVariant, Pivot};
pub use d::{build_d, build_d31};
pub use radial::{s_curve_side, tile_disk_radial};
pub use validate::{same_tiling, validate_tiling, validate_tiling_with, TilingReport, ValidationOptions};
pub use word::{Edge, EdgeWord};

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::geometry::{Contour, GeometryError, Isometry, Point};
use crate::wedge::WedgeError;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum FamilyError {
    #[error("n = {0} is not valid for this family")]
    InvalidN(u32),
    #[error("k must be at least 1")]
    InvalidK,
    #[error("invalid edge word: {0}")]
    WordInvalid(String),
    #[error("radial side path is not simple")]
    SideSelfIntersects,
    #[error("radial side meets its rotated image away from the center near ({x}, {y})", x = .0.x, y = .0.y)]
    RotationOverlap(Point),
    #[error("an asymmetric groove needs 0 < t < 1, got {0}")]
    GrooveRequired(f64),
    #[error("tiling is not a member of family C")]
    NotCFamily,
    #[error("boundary arc spanning {0} rad matches neither edge length")]
    UnrecognizedSpan(f64),
    #[error(transparent)]
    Wedge(#[from] WedgeError),
    #[error(transparent)]
    Geometry(#[from] GeometryError),
}

/// Whether a tile keeps the orientation of the family's reference tile or is
/// a flipped copy.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Orientation {
    Positive,
    Negative,
}

/// Handedness of a whole tiling; `B` is the mirror image of `A`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Chirality {
    A,
    B,
}

impl Chirality {
    pub fn flipped(self) -> Chirality {
        match self {
            Chirality::A => Chirality::B,
            Chirality::B => Chirality::A,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Family {
    #[serde(rename = "symradial")]
    SymRadial,
    #[serde(rename = "radgen")]
    RadGen,
    D,
    D31,
    C,
    Ctilde,
}

/// Descriptive parameters carried alongside a tiling.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct FamilyTag {
    pub family: Family,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub n: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub k: Option<u32>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub t: Option<f64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub word: Option<String>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub chirality: Option<Chirality>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub variant: Option<String>,
}

impl FamilyTag {
    pub fn new(family: Family) -> Self {
        FamilyTag {
            family,
            n: None,
            k: None,
            t: None,
            word: None,
            chirality: None,
            variant: None,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Disk {
    pub center: Point,
    pub radius: f64,
}

impl Disk {
    pub const UNIT: Disk = Disk {
        center: Point::ORIGIN,
        radius: 1.0,
    };
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tile {
    pub id: usize,
    pub contour: Contour,
    pub orientation: Orientation,
}

#[derive(Clone, Debug, PartialEq)]
pub struct Tiling {
    pub disk: Disk,
    pub tiles: Vec<Tile>,
    pub tag: FamilyTag,
}

impl Tiling {
    /// Assembles a tiling, orienting every contour counterclockwise and
    /// numbering tiles in order.
    pub fn new(disk: Disk, tiles: Vec<(Contour, Orientation)>, tag: FamilyTag) -> Tiling {
        let tiles = tiles
            .into_iter()
            .enumerate()
            .map(|(id, (contour, orientation))| Tile {
                id,
                contour: contour.oriented_ccw(),
                orientation,
            })
            .collect();
        Tiling { disk, tiles, tag }
    }

    /// Moves the disk to the origin and scales it to radius 1.
    pub fn normalized(&self) -> Tiling {
        let shift = Isometry::translation(-self.disk.center);
        let factor = 1.0 / self.disk.radius;
        Tiling {
            disk: Disk::UNIT,
            tiles: self
                .tiles
                .iter()
                .map(|t| Tile {
                    contour: t.contour.transformed(&shift).scaled(factor),
                    ..t.clone()
                })
                .collect(),
            tag: self.tag.clone(),
        }
    }

    /// Image under an isometry fixing nothing in particular; the disk moves
    /// with the tiles.
    pub fn transformed(&self, g: &Isometry) -> Tiling {
        Tiling {
            disk: Disk {
                center: g.apply(self.disk.center),
                radius: self.disk.radius,
            },
            tiles: self
                .tiles
                .iter()
                .map(|t| Tile {
                    contour: t.contour.transformed(g).oriented_ccw(),
                    ..t.clone()
                })
                .collect(),
            tag: self.tag.clone(),
        }
    }

    /// Mirror image across the horizontal line through the disk center.
    /// Orientation tags are kept, chirality and edge word are flipped.
    pub fn mirrored(&self) -> Tiling {
        let m = Isometry::reflection(self.disk.center, 0.0);
        let mut out = self.transformed(&m);
        out.tag.chirality = out.tag.chirality.map(Chirality::flipped);
        if let Some(w) = &out.tag.word {
            out.tag.word = Some(w.chars().rev().collect());
        }
        out
    }

    pub fn tile_count(&self) -> usize {
        self.tiles.len()
    }
}
