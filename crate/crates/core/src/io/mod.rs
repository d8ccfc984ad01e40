//! Tiling documents (versioned JSON) and SVG rendering.

mod document;
mod svg;

pub use document::{load, save, DiskRecord, SegmentRecord, TileRecord, TilingDocument, SCHEMA_VERSION};
pub use svg::{contour_path_data, locus_svg, to_svg, SvgStyle};

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum DocumentError {
    #[error("schema violation at {pointer:?}: {message}")]
    SchemaViolation { pointer: String, message: String },
    #[error("unsupported schema_version {0}")]
    VersionUnsupported(u64),
}
