use crate::geometry::Isometry;
use crate::wedge::{build_symmetric_wedge, split_wedge_symmetric, symmetric_wedge_unchecked, Wedge};

use super::{Chirality, Disk, Family, FamilyError, FamilyTag, Orientation, Tiling};

/// Places both halves of each of the `2n` wedge copies about `p`. The half
/// containing `q` is tagged positive, its mirror half negative.
fn assemble(w: &Wedge, family: Family, chirality: Chirality) -> Result<Tiling, FamilyError> {
    let (right, left) = split_wedge_symmetric(w)?;
    let n = w.n();
    let mut tiles = Vec::with_capacity(4 * n as usize);
    for a in 0..2 * n {
        let g = Isometry::rotation(w.p(), a as f64 * w.config.alpha);
        tiles.push((right.transformed(&g), Orientation::Positive));
        tiles.push((left.transformed(&g), Orientation::Negative));
    }
    let mut tag = FamilyTag::new(family);
    tag.n = Some(n);
    tag.t = match w.groove {
        crate::wedge::GrooveProfile::Symmetric { t_normalized } => Some(t_normalized),
        crate::wedge::GrooveProfile::Custom { .. } => None,
    };
    tag.chirality = Some(Chirality::A);
    let disk = Disk {
        center: w.p(),
        radius: w.disk_radius,
    };
    let tiling = Tiling::new(disk, tiles, tag).normalized();
    Ok(match chirality {
        Chirality::A => tiling,
        Chirality::B => tiling.mirrored(),
    })
}

/// The `4n`-tile member of `D_n^t`: every symmetric wedge halved along its
/// symmetry line.
pub fn build_d(n: u32, t_normalized: f64, chirality: Chirality) -> Result<Tiling, FamilyError> {
    let w = build_symmetric_wedge(n, t_normalized)?;
    assemble(&w, Family::D, chirality)
}

/// The exceptional member with the critical groove length, where each wedge
/// pinches on its symmetry line and the halves meet at the pinch point.
pub fn build_d31(chirality: Chirality) -> Result<Tiling, FamilyError> {
    let w = symmetric_wedge_unchecked(3, 1.0)?;
    assemble(&w, Family::D31, chirality)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::Point;
    use crate::wedge::critical_locus;

    #[test]
    fn d3_has_twelve_tiles() {
        let t = build_d(3, 0.0, Chirality::A).unwrap();
        assert_eq!(t.tile_count(), 12);
        let total: f64 = t.tiles.iter().map(|x| x.contour.area()).sum();
        assert!((total - std::f64::consts::PI).abs() < 1e-9);
    }

    #[test]
    fn chirality_b_is_the_mirror() {
        let a = build_d(5, 0.3, Chirality::A).unwrap();
        let b = build_d(5, 0.3, Chirality::B).unwrap();
        assert_eq!(b.tag.chirality, Some(Chirality::B));
        let m = a.mirrored();
        for (x, y) in m.tiles.iter().zip(&b.tiles) {
            assert!(x.contour.vertices()[0].approx_eq(y.contour.vertices()[0], 1e-12));
        }
    }

    #[test]
    fn critical_member_groove_ratio() {
        let t = build_d31(Chirality::A).unwrap();
        assert_eq!(t.tile_count(), 12);
        // The groove along the positive x-axis ends on the unit circle.
        let edge = Point::new(1.0, 0.0);
        let groove = t
            .tiles
            .iter()
            .flat_map(|x| x.contour.segments())
            .find(|s| s.is_line() && s.start().y.abs() < 1e-12 && s.end().y.abs() < 1e-12 && (s.start().dist(edge) < 1e-12 || s.end().dist(edge) < 1e-12))
            .expect("groove leg on the axis");
        assert!((groove.length() - critical_locus(3).unwrap().critical_ratio()).abs() < 1e-12);
        assert!((groove.length() - 0.4226).abs() < 1e-3);
    }
}
