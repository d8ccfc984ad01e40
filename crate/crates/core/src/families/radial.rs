use std::f64::consts::{PI, TAU};

use crate::geometry::{intersections, Isometry, Path, PathSegment, Point, GEOM_TOL};

use super::{Disk, Family, FamilyError, FamilyTag, Orientation, Tiling};

/// An S-shaped side from the origin to `(1, 0)` made of two half circles.
pub fn s_curve_side() -> Path {
    let mid = Point::new(0.5, 0.0);
    Path::from_segments(
        Point::ORIGIN,
        vec![
            PathSegment::arc_from(Point::new(0.25, 0.0), Point::ORIGIN, -PI),
            PathSegment::arc_from(Point::new(0.75, 0.0), mid, PI),
        ],
    )
}

/// Tiles the disk centred at the start of `side` with `n` rotated copies of
/// the tile bounded by `side`, its rotation by `2π/n` and the arc between
/// their outer ends.
pub fn tile_disk_radial(side: &Path, n: u32) -> Result<Tiling, FamilyError> {
    if n < 2 {
        return Err(FamilyError::InvalidN(n));
    }
    let center = side.start();
    let outer = side.end();
    let radius = outer.dist(center);
    let tol = GEOM_TOL * radius.max(f64::MIN_POSITIVE);
    if side.is_empty() || !side.is_simple(tol) {
        return Err(FamilyError::SideSelfIntersects);
    }
    let step = TAU / n as f64;
    let rot = Isometry::rotation(center, step);
    let image = side.transformed(&rot);
    for s in side.segments() {
        for z in s.sample(16) {
            if z.dist(center) > radius + tol {
                return Err(FamilyError::RotationOverlap(z));
            }
        }
        for t in image.segments() {
            if let Some(z) = intersections(s, t, tol)
                .into_iter()
                .find(|z| z.dist(center) > 1e-7 * radius)
            {
                return Err(FamilyError::RotationOverlap(z));
            }
        }
    }
    let start = (outer - center).angle();
    let tiles = (0..n)
        .map(|i| {
            let g = Isometry::rotation(center, i as f64 * step);
            let mut segs = vec![PathSegment::arc(center, radius, start + i as f64 * step, step)];
            segs.extend_from_slice(side.transformed(&rot.compose(&g)).reversed().segments());
            segs.extend_from_slice(side.transformed(&g).segments());
            Ok((crate::geometry::Contour::new(segs)?, Orientation::Positive))
        })
        .collect::<Result<Vec<_>, FamilyError>>()?;
    let is_straight = side.len() == 1 && side.segments()[0].is_line();
    let mut tag = FamilyTag::new(if is_straight { Family::SymRadial } else { Family::RadGen });
    tag.n = Some(n);
    Ok(Tiling::new(Disk { center, radius }, tiles, tag).normalized())
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn straight_radius_six_sectors() {
        let side = Path::from_segments(Point::ORIGIN, vec![PathSegment::line(Point::ORIGIN, Point::new(1.0, 0.0))]);
        let t = tile_disk_radial(&side, 6).unwrap();
        assert_eq!(t.tile_count(), 6);
        for tile in &t.tiles {
            assert!((tile.contour.area() - PI / 6.0).abs() < 1e-12);
        }
        assert_eq!(t.tag.family, Family::SymRadial);
    }

    #[test]
    fn s_curve_tiles() {
        let t = tile_disk_radial(&s_curve_side(), 6).unwrap();
        let total: f64 = t.tiles.iter().map(|x| x.contour.area()).sum();
        assert!((total - PI).abs() < 1e-9);
        assert_eq!(t.tag.family, Family::RadGen);
    }

    #[test]
    fn one_copy_is_rejected() {
        let side = Path::from_segments(Point::ORIGIN, vec![PathSegment::line(Point::ORIGIN, Point::new(1.0, 0.0))]);
        assert_eq!(tile_disk_radial(&side, 1), Err(FamilyError::InvalidN(1)));
    }

    #[test]
    fn wide_side_overlaps_its_image() {
        // A bulge reaching far sideways crosses the neighbouring copy.
        let side = Path::from_segments(
            Point::ORIGIN,
            vec![PathSegment::arc_from(Point::new(0.5, 0.0), Point::ORIGIN, -1.9 * PI)],
        );
        assert!(matches!(tile_disk_radial(&side, 6), Err(FamilyError::RotationOverlap(_))));
    }
}
