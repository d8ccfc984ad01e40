use crate::geometry::{Contour, Isometry, Location, Path, PathSegment, Point, GEOM_TOL};

use super::config::{critical_locus, vertex_chain, VertexConfiguration};
use super::{GrooveProfile, Wedge, WedgeError};

/// Runs the orbit construction for a groove path from `q` to `r_p` without
/// any validity checks.
///
/// The base unit `E₀` is the groove, the arc of `ρ_p` and the rotated groove
/// traversed backwards; it runs from `q` to `α_p(q)`. Its images under
/// `(β_q α_p)^j β_q` carry the side path along the vertex chain from `q` to
/// `p`.
fn assemble(config: VertexConfiguration, groove: GrooveProfile, groove_path: Path) -> Result<Wedge, WedgeError> {
    let (p, q) = (config.p, config.q);
    let alpha_p = config.alpha_p();
    let beta_q = config.beta_q();
    let r_p = groove_path.end();
    let disk_radius = r_p.dist(p);
    let rho = PathSegment::arc_from(p, r_p, config.alpha);

    let mut base = groove_path.clone();
    base.push(rho);
    base.extend(&groove_path.transformed(&alpha_p).reversed());

    let step = beta_q.compose(&alpha_p);
    let mut eta = groove_path.reversed();
    let mut g = beta_q;
    for _ in 0..config.m() {
        eta.extend(&base.transformed(&g));
        g = step.compose(&g);
    }
    debug_assert!(eta.end().dist(p) < 1e-9);
    debug_assert!(eta.start().dist(r_p) < 1e-12 && groove_path.start().dist(q) < 1e-12);

    let mut segments = vec![rho];
    segments.extend_from_slice(eta.transformed(&alpha_p).segments());
    segments.extend_from_slice(eta.reversed().segments());
    let boundary = Contour::new(segments)?;
    Ok(Wedge {
        config,
        groove,
        groove_path,
        eta,
        boundary,
        disk_radius,
    })
}

fn symmetric_groove(config: &VertexConfiguration, length: f64) -> Path {
    let q = config.q;
    if length > 0.0 {
        Path::from_segments(q, vec![PathSegment::line(q, q + Point::new(length, 0.0))])
    } else {
        Path::new(q)
    }
}

/// Builds the symmetric wedge for any non-negative groove length, skipping
/// the range and simplicity checks. Past the critical length the boundary is
/// no longer simple; at exactly the critical length it pinches.
pub fn symmetric_wedge_unchecked(n: u32, t_normalized: f64) -> Result<Wedge, WedgeError> {
    if !(t_normalized.is_finite() && t_normalized >= 0.0) {
        return Err(WedgeError::GrooveOutOfRange(t_normalized));
    }
    let config = vertex_chain(n)?;
    let locus = critical_locus(n)?;
    let groove = symmetric_groove(&config, t_normalized * locus.t_max);
    assemble(config, GrooveProfile::Symmetric { t_normalized }, groove)
}

/// Symmetric wedge with groove length `t_normalized · t_max(n)`.
pub fn build_symmetric_wedge(n: u32, t_normalized: f64) -> Result<Wedge, WedgeError> {
    if !(t_normalized.is_finite() && (0.0..1.0).contains(&t_normalized)) {
        return Err(WedgeError::GrooveOutOfRange(t_normalized));
    }
    let w = symmetric_wedge_unchecked(n, t_normalized)?;
    let simple = w.boundary.is_simple();
    if let Some(at) = simple.violation {
        return Err(WedgeError::SelfIntersection(at));
    }
    Ok(w)
}

/// Wedge whose groove follows an arbitrary path from `q` to an admissible
/// endpoint `r_p`.
pub fn build_asymmetric_wedge(n: u32, path: Path) -> Result<Wedge, WedgeError> {
    let config = vertex_chain(n)?;
    let locus = critical_locus(n)?;
    if path.start().dist(config.q) > 1e-12 {
        return Err(WedgeError::PathCollision(format!(
            "groove path starts at ({}, {}) instead of q",
            path.start().x,
            path.start().y
        )));
    }
    if path.is_empty() || !locus.admissible(path.end()) {
        return Err(WedgeError::InadmissibleEndpoint(path.end()));
    }
    if !path.is_simple(GEOM_TOL * path.length().max(1.0)) {
        return Err(WedgeError::PathCollision("groove path is not simple".into()));
    }
    let w = assemble(config, GrooveProfile::Custom { path: path.clone() }, path)?;
    if let Some(at) = w.boundary.is_simple().violation {
        return Err(WedgeError::PathCollision(format!(
            "wedge boundary self-intersects near ({}, {})",
            at.x, at.y
        )));
    }
    check_copies_disjoint(&w)?;
    Ok(w)
}

/// Checks that the wedge stays inside its disk and that its `2n` rotated
/// copies about `p` do not overlap.
fn check_copies_disjoint(w: &Wedge) -> Result<(), WedgeError> {
    let p = w.p();
    let scale = w.boundary.scale();
    let samples: Vec<Point> = w
        .boundary
        .segments()
        .iter()
        .flat_map(|s| [0.25, 0.5, 0.75].map(|t| s.point_at(t)))
        .collect();
    if let Some(out) = samples.iter().find(|z| z.dist(p) > w.disk_radius + GEOM_TOL * scale) {
        return Err(WedgeError::PathCollision(format!(
            "boundary leaves the disk near ({}, {})",
            out.x, out.y
        )));
    }
    let copies = 2 * w.n() as i64;
    for j in 1..copies {
        let copy = w
            .boundary
            .transformed(&Isometry::rotation(p, j as f64 * w.config.alpha));
        if let Some(z) = samples.iter().find(|z| copy.locate(**z) == Location::Inside) {
            return Err(WedgeError::PathCollision(format!(
                "rotated copy {j} overlaps the wedge near ({}, {})",
                z.x, z.y
            )));
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::PI;

    #[test]
    fn n3_plain_wedge_is_curved_triangle() {
        let w = build_symmetric_wedge(3, 0.0).unwrap();
        let s3 = 3f64.sqrt();
        let b = &w.boundary;
        assert_eq!(b.len(), 3);
        let mut verts = b.vertices();
        verts.sort_by(|a, c| a.x.total_cmp(&c.x));
        assert!(verts[0].approx_eq(Point::new(-1.0, 0.0), 1e-9));
        assert!(verts[1].approx_eq(Point::new(0.0, s3), 1e-9));
        assert!(verts[2].approx_eq(Point::new(1.0, 0.0), 1e-9));
        // η runs q → p around (0, −√3); the rotated side is centred at q.
        let eta = w.eta.segments()[0].as_arc().unwrap();
        assert!(eta.center.approx_eq(Point::new(0.0, -s3), 1e-12));
        assert!((eta.radius - 2.0).abs() < 1e-12);
        let side = b.segments()[1].as_arc().unwrap();
        assert!(side.center.approx_eq(Point::new(1.0, 0.0), 1e-12));
        assert!((b.area() - 4.0 * PI / 6.0).abs() < 1e-12);
    }

    #[test]
    fn n5_plain_wedge_has_five_radius_two_arcs() {
        let w = build_symmetric_wedge(5, 0.0).unwrap();
        assert_eq!(w.boundary.len(), 5);
        for s in w.boundary.segments() {
            assert!((s.as_arc().unwrap().radius - 2.0).abs() < 1e-12);
        }
        assert!(w.boundary.is_simple().simple);
    }

    #[test]
    fn grooved_wedge_has_three_segments_per_step() {
        for n in [3u32, 5, 7] {
            let w = build_symmetric_wedge(n, 0.5).unwrap();
            assert_eq!(w.boundary.len(), 3 * n as usize);
            assert!((w.boundary.area() - w.expected_area()).abs() < 1e-9 * w.expected_area());
        }
    }

    #[test]
    fn range_is_checked() {
        assert_eq!(build_symmetric_wedge(3, 1.0), Err(WedgeError::GrooveOutOfRange(1.0)));
        assert!(matches!(build_symmetric_wedge(3, -0.1), Err(WedgeError::GrooveOutOfRange(_))));
        assert!(matches!(build_symmetric_wedge(4, 0.1), Err(WedgeError::InvalidN(4))));
    }

    #[test]
    fn past_the_locus_the_boundary_crosses_itself() {
        let w = symmetric_wedge_unchecked(3, 1.05).unwrap();
        assert!(!w.boundary.is_simple().simple);
    }

    #[test]
    fn groove_legs_at_p_and_q_are_parallel() {
        for n in [3u32, 5, 7, 9] {
            let w = build_symmetric_wedge(n, 0.4).unwrap();
            let at_q = w.groove_path.segments()[0].tangent_at(0.0);
            // The outer leg at p is the last piece of the rotated side.
            let rotated = w.eta.transformed(&w.config.alpha_p());
            let at_p = rotated.segments().last().unwrap().tangent_at(1.0);
            assert!(rotated.end().approx_eq(w.p(), 1e-12));
            assert!(at_q.cross(at_p).abs() < 1e-12, "n={n}");
        }
    }

    #[test]
    fn straight_custom_groove_matches_symmetric() {
        let sym = build_symmetric_wedge(3, 0.3).unwrap();
        let q = Point::new(1.0, 0.0);
        let path = Path::from_segments(q, vec![PathSegment::line(q, sym.r_p())]);
        let custom = build_asymmetric_wedge(3, path).unwrap();
        assert_eq!(custom.boundary.len(), sym.boundary.len());
        for (a, b) in custom.boundary.segments().iter().zip(sym.boundary.segments()) {
            assert!(a.start().approx_eq(b.start(), 1e-9) && a.point_at(0.5).approx_eq(b.point_at(0.5), 1e-9));
        }
    }

    #[test]
    fn bent_groove_builds() {
        let q = Point::new(1.0, 0.0);
        let mid = Point::new(1.1, 0.1);
        let end = Point::new(1.2, 0.0);
        let path = Path::from_segments(q, vec![PathSegment::line(q, mid), PathSegment::line(mid, end)]);
        let w = build_asymmetric_wedge(3, path).unwrap();
        assert!(w.boundary.is_simple().simple);
        assert!((w.boundary.area() - w.expected_area()).abs() < 1e-9 * w.expected_area());
    }

    #[test]
    fn steep_groove_is_inadmissible() {
        let q = Point::new(1.0, 0.0);
        let end = q + Point::polar(0.2, 0.6 * PI);
        let path = Path::from_segments(q, vec![PathSegment::line(q, end)]);
        assert!(matches!(build_asymmetric_wedge(3, path), Err(WedgeError::InadmissibleEndpoint(_))));
    }
}
