use serde::{Deserialize, Serialize};

use crate::families::{Disk, FamilyTag, Orientation, Tile, Tiling};
use crate::geometry::{Arc, Contour, GeometryError, PathSegment, Point};

use super::DocumentError;

pub const SCHEMA_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TilingDocument {
    pub schema_version: u32,
    pub disk: DiskRecord,
    pub tiles: Vec<TileRecord>,
    pub metadata: FamilyTag,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct DiskRecord {
    pub cx: f64,
    pub cy: f64,
    pub r: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct TileRecord {
    pub id: usize,
    pub orientation: Orientation,
    pub path: Vec<SegmentRecord>,
}

#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "lowercase", deny_unknown_fields)]
pub enum SegmentRecord {
    Line { x0: f64, y0: f64, x1: f64, y1: f64 },
    Arc { cx: f64, cy: f64, r: f64, start: f64, sweep: f64 },
}

impl From<&PathSegment> for SegmentRecord {
    fn from(s: &PathSegment) -> Self {
        match s {
            PathSegment::Line { a, b } => SegmentRecord::Line {
                x0: a.x,
                y0: a.y,
                x1: b.x,
                y1: b.y,
            },
            PathSegment::Arc(arc) => SegmentRecord::Arc {
                cx: arc.center.x,
                cy: arc.center.y,
                r: arc.radius,
                start: arc.start_angle,
                sweep: arc.sweep,
            },
        }
    }
}

impl SegmentRecord {
    fn to_segment(self) -> Result<PathSegment, GeometryError> {
        match self {
            SegmentRecord::Line { x0, y0, x1, y1 } => {
                let (a, b) = (Point::new(x0, y0), Point::new(x1, y1));
                if !(a.is_finite() && b.is_finite()) {
                    return Err(GeometryError::NonFinite);
                }
                Ok(PathSegment::Line { a, b })
            }
            SegmentRecord::Arc { cx, cy, r, start, sweep } => {
                Ok(PathSegment::Arc(Arc::new(Point::new(cx, cy), r, start, sweep)?))
            }
        }
    }
}

impl TilingDocument {
    pub fn from_tiling(t: &Tiling) -> Self {
        TilingDocument {
            schema_version: SCHEMA_VERSION,
            disk: DiskRecord {
                cx: t.disk.center.x,
                cy: t.disk.center.y,
                r: t.disk.radius,
            },
            tiles: t
                .tiles
                .iter()
                .map(|tile| TileRecord {
                    id: tile.id,
                    orientation: tile.orientation,
                    path: tile.contour.segments().iter().map(SegmentRecord::from).collect(),
                })
                .collect(),
            metadata: t.tag.clone(),
        }
    }

    pub fn to_tiling(&self) -> Result<Tiling, DocumentError> {
        if self.schema_version != SCHEMA_VERSION {
            return Err(DocumentError::VersionUnsupported(u64::from(self.schema_version)));
        }
        let d = self.disk;
        if !(d.cx.is_finite() && d.cy.is_finite() && d.r.is_finite() && d.r > 0.0) {
            return Err(DocumentError::SchemaViolation {
                pointer: "/disk".into(),
                message: "disk needs a finite center and a positive radius".into(),
            });
        }
        let tiles = self
            .tiles
            .iter()
            .enumerate()
            .map(|(index, rec)| {
                let violation = |e: GeometryError| DocumentError::SchemaViolation {
                    pointer: format!("/tiles/{index}/path"),
                    message: format!("tile {}: {e}", rec.id),
                };
                let segments = rec
                    .path
                    .iter()
                    .map(|s| s.to_segment())
                    .collect::<Result<Vec<_>, _>>()
                    .map_err(violation)?;
                Ok(Tile {
                    id: rec.id,
                    contour: Contour::new(segments).map_err(violation)?,
                    orientation: rec.orientation,
                })
            })
            .collect::<Result<Vec<_>, DocumentError>>()?;
        Ok(Tiling {
            disk: Disk {
                center: Point::new(d.cx, d.cy),
                radius: d.r,
            },
            tiles,
            tag: self.metadata.clone(),
        })
    }
}

/// Serializes a tiling as pretty-printed JSON with a trailing newline.
/// Floats are written in shortest round-trip form, so saving what was
/// loaded reproduces the same bytes.
pub fn save(t: &Tiling) -> Vec<u8> {
    let mut out = serde_json::to_vec_pretty(&TilingDocument::from_tiling(t)).expect("documents always serialize");
    out.push(b'\n');
    out
}

/// Turns a serde path such as `tiles[3].path` into the JSON pointer
/// `/tiles/3/path`.
fn pointer(path: &serde_path_to_error::Path) -> String {
    use serde_path_to_error::Segment;
    let mut out = String::new();
    for seg in path.iter() {
        match seg {
            Segment::Seq { index } => out.push_str(&format!("/{index}")),
            Segment::Map { key } => out.push_str(&format!("/{}", key.replace('~', "~0").replace('/', "~1"))),
            Segment::Enum { .. } | Segment::Unknown => {}
        }
    }
    out
}

pub fn load(bytes: &[u8]) -> Result<Tiling, DocumentError> {
    let value: serde_json::Value = serde_json::from_slice(bytes).map_err(|e| DocumentError::SchemaViolation {
        pointer: String::new(),
        message: e.to_string(),
    })?;
    match value.get("schema_version").and_then(serde_json::Value::as_u64) {
        Some(v) if v == u64::from(SCHEMA_VERSION) => {}
        Some(v) => return Err(DocumentError::VersionUnsupported(v)),
        None => {
            return Err(DocumentError::SchemaViolation {
                pointer: "/schema_version".into(),
                message: "missing or non-integer schema_version".into(),
            })
        }
    }
    let doc: TilingDocument = serde_path_to_error::deserialize(value).map_err(|e| DocumentError::SchemaViolation {
        pointer: pointer(e.path()),
        message: e.inner().to_string(),
    })?;
    doc.to_tiling()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{build_d, Chirality};

    fn sample() -> Tiling {
        build_d(3, 0.0, Chirality::A).unwrap()
    }

    #[test]
    fn save_load_save_is_stable() {
        let first = save(&sample());
        let again = save(&load(&first).unwrap());
        assert_eq!(first, again);
    }

    #[test]
    fn round_trip_is_exact() {
        let t = sample();
        assert_eq!(load(&save(&t)).unwrap(), t);
    }

    #[test]
    fn open_contour_names_the_tile() {
        let mut doc = TilingDocument::from_tiling(&sample());
        doc.tiles[2].path.pop();
        let bytes = serde_json::to_vec(&doc).unwrap();
        match load(&bytes) {
            Err(DocumentError::SchemaViolation { pointer, message }) => {
                assert_eq!(pointer, "/tiles/2/path");
                assert!(message.starts_with("tile 2:"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn unknown_field_is_located() {
        let mut v: serde_json::Value = serde_json::from_slice(&save(&sample())).unwrap();
        v["tiles"][1]["path"][0]["extra"] = serde_json::json!(1);
        match load(&serde_json::to_vec(&v).unwrap()) {
            Err(DocumentError::SchemaViolation { pointer, message }) => {
                assert!(pointer.starts_with("/tiles/1/path/0"), "{pointer}");
                assert!(message.contains("extra"), "{message}");
            }
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn future_versions_are_refused() {
        let mut v: serde_json::Value = serde_json::from_slice(&save(&sample())).unwrap();
        v["schema_version"] = serde_json::json!(2);
        assert_eq!(
            load(&serde_json::to_vec(&v).unwrap()),
            Err(DocumentError::VersionUnsupported(2))
        );
    }
}
