use crate::geometry::{intersections, BoundaryPos, Contour, Isometry, Path, PathSegment, Point, GEOM_TOL};

use super::{Wedge, WedgeError};

/// Which generating vertices a wedge is radially generated about.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RadialReport {
    pub about_p: bool,
    pub about_q: bool,
}

const SAMPLES_PER_SEGMENT: usize = 64;

/// Whether `contour` is bounded by an arc centred `v` with sweep `angle`
/// and two sides `ν`, `R(ν)` meeting at `v`, where `R` is the rotation by
/// the arc's sweep about `v`.
pub fn radially_generated_about(contour: &Contour, v: Point, angle: f64) -> bool {
    let c = contour.oriented_ccw().merged();
    let scale = c.scale();
    let tol = GEOM_TOL * scale;
    let n = c.len();
    for (i, seg) in c.segments().iter().enumerate() {
        let Some(arc) = seg.as_arc() else { continue };
        if arc.center.dist(v) > tol || (arc.sweep.abs() - angle).abs() > 1e-9 {
            continue;
        }
        let rest = c.sub_path(
            BoundaryPos {
                segment: (i + 1) % n,
                param: 0.0,
            },
            BoundaryPos { segment: i, param: 0.0 },
        );
        let Some(split) = (1..rest.len()).find(|&j| rest.segments()[j].start().dist(v) <= tol) else {
            continue;
        };
        let into_v = Path::from_segments(rest.start(), rest.segments()[..split].to_vec());
        let out_of_v = Path::from_segments(v, rest.segments()[split..].to_vec());
        let rot = Isometry::rotation(v, arc.sweep);
        if (into_v.length() - out_of_v.length()).abs() <= tol
            && maps_onto(&out_of_v, &rot, &into_v, tol)
            && maps_onto(&into_v, &rot.inverse(), &out_of_v, tol)
        {
            return true;
        }
    }
    false
}

/// Whether every sample of `src` lands on `dst` after applying `g`.
fn maps_onto(src: &Path, g: &Isometry, dst: &Path, tol: f64) -> bool {
    src.segments().iter().all(|s| {
        s.sample(SAMPLES_PER_SEGMENT).into_iter().all(|z| {
            let image = g.apply(z);
            dst.segments().iter().any(|t| t.distance_to(image) <= tol)
        })
    })
}

pub fn verify_radial_generation(w: &Wedge) -> RadialReport {
    RadialReport {
        about_p: radially_generated_about(&w.boundary, w.p(), w.config.alpha),
        about_q: radially_generated_about(&w.boundary, w.q(), w.config.alpha),
    }
}

/// Boundary positions where the contour meets the vertical line `x = 0`,
/// one per distinct crossing. A crossing at a vertex is reported once; two
/// different stretches of boundary touching at the same point are both kept.
fn axis_crossings(c: &Contour) -> Vec<BoundaryPos> {
    let n = c.len();
    let tol = GEOM_TOL * c.scale();
    let mut found: Vec<BoundaryPos> = Vec::new();
    for (i, s) in c.segments().iter().enumerate() {
        let params: Vec<f64> = match s {
            PathSegment::Line { a, b } => {
                if (a.x <= tol && b.x >= -tol) || (a.x >= -tol && b.x <= tol) {
                    let dx = a.x - b.x;
                    if dx.abs() <= f64::EPSILON {
                        vec![0.0]
                    } else {
                        vec![(a.x / dx).clamp(0.0, 1.0)]
                    }
                } else {
                    Vec::new()
                }
            }
            PathSegment::Arc(arc) => {
                let ratio = -arc.center.x / arc.radius;
                if ratio.abs() > 1.0 + 1e-12 {
                    Vec::new()
                } else {
                    let theta = ratio.clamp(-1.0, 1.0).acos();
                    [theta, -theta]
                        .into_iter()
                        .filter(|th| arc.contains_angle(*th, 1e-12))
                        .map(|th| arc.param_of_angle(th))
                        .collect()
                }
            }
        };
        for t in params {
            // Snap end-of-segment crossings onto the next segment's start.
            let pos = if t >= 1.0 - 1e-9 {
                BoundaryPos {
                    segment: (i + 1) % n,
                    param: 0.0,
                }
            } else if t <= 1e-9 {
                BoundaryPos { segment: i, param: 0.0 }
            } else {
                BoundaryPos { segment: i, param: t }
            };
            if c.point_at(pos).x.abs() > 1e3 * tol {
                continue;
            }
            if !found
                .iter()
                .any(|f| f.segment == pos.segment && (f.param - pos.param).abs() <= 1e-9)
            {
                found.push(pos);
            }
        }
    }
    found
}

/// Splits a symmetric wedge along its symmetry line `x = 0`. Returns the
/// half containing `q` first and the half containing `p` second; they are
/// mirror images of each other.
///
/// Also handles the pinched critical wedge, where both crossings sit at the
/// same point and the cut has length zero.
pub fn split_wedge_symmetric(w: &Wedge) -> Result<(Contour, Contour), WedgeError> {
    if !w.is_symmetric() {
        return Err(WedgeError::NotSymmetric);
    }
    let crossings = axis_crossings(&w.boundary);
    let [a, b] = crossings[..] else {
        return Err(WedgeError::NotSymmetric);
    };
    let (first, second) = w.boundary.split_by_chord(a, b)?;
    let tol = GEOM_TOL * w.boundary.scale();
    if first.distance_to(w.q()) <= tol {
        Ok((first, second))
    } else {
        Ok((second, first))
    }
}

/// Cuts a wedge into `k` congruent subtiles by rotating the side path about
/// `p` in steps of `π/(nk)`.
pub fn subdivide_wedge(w: &Wedge, k: usize) -> Result<Vec<Contour>, WedgeError> {
    if k == 0 {
        return Err(WedgeError::InvalidK);
    }
    if k == 1 {
        return Ok(vec![w.boundary.clone()]);
    }
    let p = w.p();
    let step_angle = w.config.alpha / k as f64;
    let step = |j: usize| Isometry::rotation(p, j as f64 * step_angle);
    let start = (w.r_p() - p).angle();
    let subtile = |j: usize| -> Result<Contour, WedgeError> {
        let mut segs = vec![PathSegment::arc(p, w.disk_radius, start + j as f64 * step_angle, step_angle)];
        segs.extend_from_slice(w.eta.transformed(&step(j + 1)).segments());
        segs.extend_from_slice(w.eta.transformed(&step(j)).reversed().segments());
        Ok(Contour::new(segs)?)
    };
    let first = subtile(0)?;
    if let Some(at) = first.is_simple().violation {
        return Err(WedgeError::SubdivisionCollision { k, at });
    }
    // Every intermediate side must stay strictly inside the wedge, touching
    // its boundary only at p and at its own end on the arc.
    let scale = w.boundary.scale();
    let tol = GEOM_TOL * scale;
    let joint = 1e-7 * scale;
    for j in 1..k {
        let side = w.eta.transformed(&step(j));
        let allowed = [p, side.start()];
        for s in side.segments() {
            for b in w.boundary.segments() {
                for z in intersections(s, b, tol) {
                    if !allowed.iter().any(|a| a.dist(z) <= joint) {
                        return Err(WedgeError::SubdivisionCollision { k, at: z });
                    }
                }
            }
        }
    }
    (0..k).map(subtile).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geometry::congruent;
    use crate::wedge::{build_asymmetric_wedge, build_symmetric_wedge, symmetric_wedge_unchecked};
    use std::f64::consts::PI;

    #[test]
    fn symmetric_wedges_are_generated_about_both_vertices() {
        for n in [3u32, 5, 7] {
            for t in [0.0, 0.3, 0.8] {
                let w = build_symmetric_wedge(n, t).unwrap();
                assert_eq!(verify_radial_generation(&w), RadialReport { about_p: true, about_q: true }, "n={n} t={t}");
            }
        }
    }

    #[test]
    fn bent_groove_wedge_is_generated_about_both_vertices() {
        let q = Point::new(1.0, 0.0);
        let mid = Point::new(1.1, 0.1);
        let path = Path::from_segments(q, vec![PathSegment::line(q, mid), PathSegment::line(mid, Point::new(1.2, 0.0))]);
        let w = build_asymmetric_wedge(3, path).unwrap();
        assert_eq!(verify_radial_generation(&w), RadialReport { about_p: true, about_q: true });
    }

    #[test]
    fn sector_is_generated_only_about_its_apex() {
        let angle = 2.0 * PI / 6.0;
        let apex = Point::ORIGIN;
        let a = Point::new(1.0, 0.0);
        let b = Point::polar(1.0, angle);
        let sector = Contour::new(vec![
            PathSegment::line(apex, a),
            PathSegment::arc_from(apex, a, angle),
            PathSegment::line(b, apex),
        ])
        .unwrap();
        assert!(radially_generated_about(&sector, apex, angle));
        assert!(!radially_generated_about(&sector, a, angle));
        assert!(!radially_generated_about(&sector, b, angle));
    }

    #[test]
    fn chord_in_place_of_an_arc_breaks_generation() {
        let w = build_symmetric_wedge(3, 0.0).unwrap();
        let mut segs = w.boundary.segments().to_vec();
        let last = segs[2];
        segs[2] = PathSegment::line(last.start(), last.end());
        let c = Contour::new(segs).unwrap();
        assert!(!radially_generated_about(&c, w.p(), w.config.alpha));
        assert!(!radially_generated_about(&c, w.q(), w.config.alpha));
    }

    #[test]
    fn n3_plain_halves() {
        let w = build_symmetric_wedge(3, 0.0).unwrap();
        let (right, left) = split_wedge_symmetric(&w).unwrap();
        let s3 = 3f64.sqrt();
        let cut = right
            .segments()
            .iter()
            .find(|s| s.is_line())
            .expect("cut segment");
        let ends = [cut.start(), cut.end()];
        assert!(ends.iter().any(|e| e.approx_eq(Point::new(0.0, s3), 1e-9)));
        assert!(ends.iter().any(|e| e.approx_eq(Point::new(0.0, 2.0 - s3), 1e-9)));
        let g = congruent(&right, &left).unwrap();
        assert!(!g.preserves_orientation());
        assert!((right.area() - left.area()).abs() < 1e-12);
    }

    #[test]
    fn n5_halves_have_half_area() {
        let w = build_symmetric_wedge(5, 0.0).unwrap();
        let (a, b) = split_wedge_symmetric(&w).unwrap();
        for h in [&a, &b] {
            assert!((h.area() - 4.0 * PI / 20.0).abs() < 1e-9);
            assert!(h.is_simple().simple);
        }
        assert!(congruent(&a, &b).is_some());
    }

    #[test]
    fn grooved_halves_each_hold_one_leg_of_the_apex_notch() {
        let w = build_symmetric_wedge(3, 0.5).unwrap();
        let (a, b) = split_wedge_symmetric(&w).unwrap();
        assert!(congruent(&a, &b).is_some());
        let apex = Point::new(0.0, 3f64.sqrt());
        for h in [&a, &b] {
            let legs = h
                .segments()
                .iter()
                .filter(|s| s.is_line() && (s.start().dist(apex) < 1e-9 || s.end().dist(apex) < 1e-9))
                .filter(|s| s.start().x.abs() > 1e-9 || s.end().x.abs() > 1e-9)
                .count();
            assert_eq!(legs, 1);
        }
    }

    #[test]
    fn critical_wedge_splits_at_the_pinch() {
        let w = symmetric_wedge_unchecked(3, 1.0).unwrap();
        let (a, b) = split_wedge_symmetric(&w).unwrap();
        assert!(a.is_simple().simple && b.is_simple().simple);
        assert!(congruent(&a, &b).is_some());
        assert!((a.area() + b.area() - w.expected_area()).abs() < 1e-9);
    }

    #[test]
    fn subdivision_areas_and_congruence() {
        let w = build_symmetric_wedge(3, 0.0).unwrap();
        assert_eq!(subdivide_wedge(&w, 1).unwrap(), vec![w.boundary.clone()]);
        let parts = subdivide_wedge(&w, 2).unwrap();
        assert_eq!(parts.len(), 2);
        for part in &parts {
            assert!((part.area() - 4.0 * PI / 12.0).abs() < 1e-9);
        }
        assert!(congruent(&parts[0], &parts[1]).is_some());
        for (n, t, k) in [(5u32, 0.3, 3usize), (7, 0.3, 2), (3, 0.3, 3)] {
            let w = build_symmetric_wedge(n, t).unwrap();
            let parts = subdivide_wedge(&w, k).unwrap();
            let total: f64 = parts.iter().map(Contour::area).sum();
            assert!((total - w.boundary.area()).abs() < 1e-9 * total);
            for part in &parts[1..] {
                assert!(congruent(&parts[0], part).is_some());
            }
        }
    }

    #[test]
    fn long_grooves_block_fine_subdivision() {
        let w = build_symmetric_wedge(3, 0.9).unwrap();
        assert!(matches!(subdivide_wedge(&w, 5), Err(WedgeError::SubdivisionCollision { k: 5, .. })));
    }
}
