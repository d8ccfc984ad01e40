use std::f64::consts::PI;
use std::fmt::Write;

use crate::families::{Orientation, Tiling};
use crate::geometry::{BBox, Contour, PathSegment, Point};
use crate::wedge::{critical_locus, vertex_chain, WedgeError};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq)]
pub enum SvgStyle {
    #[default]
    StrokeOnly,
    /// Positive tiles filled dark gray, negative tiles red.
    OrientationColored,
}

const POSITIVE_FILL: &str = "#3a3a3a";
const NEGATIVE_FILL: &str = "#c8281e";

/// Six-decimal coordinate without a negative zero.
fn num(v: f64) -> String {
    let s = format!("{v:.6}");
    if s == "-0.000000" {
        "0.000000".into()
    } else {
        s
    }
}

fn push_segment(d: &mut String, s: &PathSegment) {
    match s {
        PathSegment::Line { b, .. } => {
            let _ = write!(d, " L {} {}", num(b.x), num(b.y));
        }
        PathSegment::Arc(arc) => {
            // Halves keep every piece at most a half turn, where the
            // endpoint form of an SVG arc is unambiguous.
            let pieces = if arc.sweep.abs() > PI { 2 } else { 1 };
            let flag = if arc.sweep > 0.0 { 1 } else { 0 };
            for i in 1..=pieces {
                let end = arc.point_at_angle(arc.start_angle + arc.sweep * i as f64 / pieces as f64);
                let r = num(arc.radius);
                let _ = write!(d, " A {r} {r} 0 0 {flag} {} {}", num(end.x), num(end.y));
            }
        }
    }
}

pub fn contour_path_data(c: &Contour) -> String {
    let start = c.segments()[0].start();
    let mut d = format!("M {} {}", num(start.x), num(start.y));
    for s in c.segments() {
        push_segment(&mut d, s);
    }
    d.push_str(" Z");
    d
}

fn header(out: &mut String, min: Point, size: f64, px: u32) {
    let _ = writeln!(out, r#"<?xml version="1.0" encoding="UTF-8"?>"#);
    // The content is drawn in y-up coordinates inside a flipped group, so
    // the vertical range of the view box is negated.
    let _ = writeln!(
        out,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" width="{px}" height="{px}" viewBox="{} {} {} {}">"#,
        num(min.x),
        num(-(min.y + size)),
        num(size),
        num(size)
    );
}

/// One `<path>` per tile inside a view box that frames the disk with a 5%
/// margin. Identical tilings give identical bytes.
pub fn to_svg(t: &Tiling, style: SvgStyle, size_px: u32) -> String {
    let r = t.disk.radius;
    let c = t.disk.center;
    let margin = 0.05 * r;
    let mut out = String::new();
    header(&mut out, Point::new(c.x - r - margin, c.y - r - margin), 2.0 * (r + margin), size_px);
    let stroke = num(0.004 * r);
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" stroke="black" stroke-width="{stroke}" stroke-linejoin="round">"#);
    let _ = writeln!(
        out,
        r#"<circle cx="{}" cy="{}" r="{}" fill="none"/>"#,
        num(c.x),
        num(c.y),
        num(r)
    );
    for tile in &t.tiles {
        let fill = match (style, tile.orientation) {
            (SvgStyle::StrokeOnly, _) => "none",
            (SvgStyle::OrientationColored, Orientation::Positive) => POSITIVE_FILL,
            (SvgStyle::OrientationColored, Orientation::Negative) => NEGATIVE_FILL,
        };
        let _ = writeln!(
            out,
            r#"<path id="tile-{}" fill="{fill}" d="{}"/>"#,
            tile.id,
            contour_path_data(&tile.contour)
        );
    }
    out.push_str("</g>\n</svg>\n");
    out
}

/// Diagram of the vertex configuration for `n`: the chain and its mirror,
/// the circles around `c_±`, the cone at `q` and the arc of radius `R`
/// about `p` that bound the admissible groove endpoints.
pub fn locus_svg(n: u32) -> Result<String, WedgeError> {
    let cfg = vertex_chain(n)?;
    let locus = critical_locus(n)?;
    let (p, q) = (cfg.p, cfg.q);
    // Where each ray from q leaves the disk of radius R about p.
    let ray_end = |angle: f64| {
        let (c, s) = (angle.cos(), angle.sin());
        let reach = -2.0 * c + (4.0 * c * c - 4.0 + locus.radius * locus.radius).sqrt();
        q + Point::new(c * reach, s * reach)
    };
    let upper_end = ray_end(locus.ray_angle);
    let lower_end = ray_end(-locus.ray_angle);
    let rho = cfg.circle_radius();
    let mut extent: Vec<Point> = vec![p, q, upper_end, lower_end, p + Point::new(locus.radius, 0.0)];
    for c in [cfg.c_plus, cfg.c_minus] {
        extent.extend([Point::new(rho, rho), Point::new(-rho, -rho)].map(|d| c + d));
    }
    let bounds = BBox::from_points(&extent);
    let span = (bounds.max.x - bounds.min.x).max(bounds.max.y - bounds.min.y);
    let margin = 0.05 * span;
    let size = span + 2.0 * margin;
    let min = Point::new(bounds.min.x - margin, bounds.min.y - margin);
    let mut out = String::new();
    header(&mut out, min, size, 800);
    let stroke = num(0.004 * span);
    let _ = writeln!(out, r#"<g transform="scale(1,-1)" fill="none" stroke="black" stroke-width="{stroke}">"#);
    for (class, center) in [("circle plus", cfg.c_plus), ("circle minus", cfg.c_minus)] {
        let _ = writeln!(
            out,
            r#"<circle class="{class}" cx="{}" cy="{}" r="{}" stroke-dasharray="{} {}"/>"#,
            num(center.x),
            num(center.y),
            num(rho),
            stroke,
            stroke
        );
    }
    for end in [upper_end, lower_end] {
        let _ = writeln!(
            out,
            r#"<line class="ray" x1="{}" y1="{}" x2="{}" y2="{}"/>"#,
            num(q.x),
            num(q.y),
            num(end.x),
            num(end.y)
        );
    }
    let _ = writeln!(
        out,
        r#"<path class="locus-arc" d="M {} {} A {r} {r} 0 0 1 {} {}"/>"#,
        num(lower_end.x),
        num(lower_end.y),
        num(upper_end.x),
        num(upper_end.y),
        r = num(locus.radius)
    );
    let dot = num(0.012 * span);
    let dots = |class: &str, pts: &[Point], out: &mut String| {
        for z in pts {
            let _ = writeln!(
                out,
                r#"<circle class="{class}" cx="{}" cy="{}" r="{dot}" fill="black"/>"#,
                num(z.x),
                num(z.y)
            );
        }
    };
    dots("vertex upper", &cfg.upper_points(), &mut out);
    dots("vertex lower", &cfg.lower_points(), &mut out);
    out.push_str("</g>\n");
    let label = q + Point::new(locus.t_max / 2.0, 0.0);
    let _ = writeln!(
        out,
        r#"<text x="{}" y="{}" font-size="{}" text-anchor="middle">t_max = {:.6}</text>"#,
        num(label.x),
        num(-label.y + 0.06 * span),
        num(0.04 * span),
        locus.t_max
    );
    out.push_str("</svg>\n");
    Ok(out)
}
