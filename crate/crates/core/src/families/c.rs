use std::f64::consts::TAU;

use crate::geometry::{wrap_tau, Contour, Isometry, Path, PathSegment, Point};
use crate::wedge::{build_asymmetric_wedge, build_symmetric_wedge, critical_locus, subdivide_wedge, Wedge};

use super::{Chirality, Disk, Edge, EdgeWord, Family, FamilyError, FamilyTag, Orientation, Tiling};

/// Which vertex of the wedge the subtiles are fanned around.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Pivot {
    AboutP,
    AboutQ,
}

impl Pivot {
    pub fn label(self) -> &'static str {
        match self {
            Pivot::AboutP => "about-p",
            Pivot::AboutQ => "about-q",
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub struct CtildeVariant {
    pub pivot: Pivot,
    pub chirality: Chirality,
}

impl CtildeVariant {
    pub const ALL: [CtildeVariant; 4] = [
        CtildeVariant { pivot: Pivot::AboutP, chirality: Chirality::A },
        CtildeVariant { pivot: Pivot::AboutP, chirality: Chirality::B },
        CtildeVariant { pivot: Pivot::AboutQ, chirality: Chirality::A },
        CtildeVariant { pivot: Pivot::AboutQ, chirality: Chirality::B },
    ];
}

fn subtiles(w: &Wedge, k: u32) -> Result<Vec<Contour>, FamilyError> {
    if k == 0 {
        return Err(FamilyError::InvalidK);
    }
    Ok(subdivide_wedge(w, k as usize)?)
}

fn finish(disk: Disk, tiles: Vec<(Contour, Orientation)>, tag: FamilyTag, chirality: Chirality) -> Tiling {
    let tiling = Tiling::new(disk, tiles, tag).normalized();
    match chirality {
        Chirality::A => tiling,
        Chirality::B => tiling.mirrored(),
    }
}

/// The member of `C_{n,k}^t` described by `word`. Reading counterclockwise
/// from the groove of the first wedge, `S` places the next radial subtile
/// and `L` places a whole wedge whose `k` subtiles are flipped onto the
/// fan around its other vertex.
pub fn build_c(n: u32, k: u32, t_normalized: f64, word: &EdgeWord, chirality: Chirality) -> Result<Tiling, FamilyError> {
    let w = build_symmetric_wedge(n, t_normalized)?;
    let subs = subtiles(&w, k)?;
    word.validate(n, k)?;
    let p = w.p();
    let step = w.config.alpha / k as f64;
    let flip = Isometry::reflection(Point::ORIGIN, std::f64::consts::FRAC_PI_2);
    let mut tiles = Vec::new();
    let mut slot = 0u32;
    for edge in word.edges() {
        let turn = Isometry::rotation(p, slot as f64 * step);
        match edge {
            Edge::Short => {
                tiles.push((subs[0].transformed(&turn), Orientation::Positive));
                slot += 1;
            }
            Edge::Long => {
                let g = turn.compose(&flip);
                for sub in &subs {
                    tiles.push((sub.transformed(&g), Orientation::Negative));
                }
                slot += k;
            }
        }
    }
    let mut tag = FamilyTag::new(Family::C);
    tag.n = Some(n);
    tag.k = Some(k);
    tag.t = Some(t_normalized);
    tag.word = Some(word.to_string());
    tag.chirality = Some(Chirality::A);
    let disk = Disk { center: p, radius: w.disk_radius };
    Ok(finish(disk, tiles, tag, chirality))
}

/// A bent groove from `q` ending on the line through `p` and `q` at
/// normalized length `t`. The bend breaks the wedge's mirror symmetry.
pub fn default_ctilde_groove(n: u32, t_normalized: f64) -> Result<Path, FamilyError> {
    if !(t_normalized > 0.0 && t_normalized < 1.0) {
        return Err(FamilyError::GrooveRequired(t_normalized));
    }
    let len = t_normalized * critical_locus(n)?.t_max;
    let q = Point::new(1.0, 0.0);
    let bend = q + Point::new(len / 2.0, len / 4.0);
    let end = q + Point::new(len, 0.0);
    Ok(Path::from_segments(q, vec![PathSegment::line(q, bend), PathSegment::line(bend, end)]))
}

/// A member of `C̃_{n,k}^{t*}`: the `k`-fold subdivision of an asymmetric
/// wedge, with `2n` copies placed around `p` or around `q`.
pub fn build_ctilde(n: u32, k: u32, groove: &Path, variant: CtildeVariant) -> Result<Tiling, FamilyError> {
    let w = build_asymmetric_wedge(n, groove.clone())?;
    let subs = subtiles(&w, k)?;
    let (center, turn) = match variant.pivot {
        Pivot::AboutP => (w.p(), w.config.alpha_p()),
        Pivot::AboutQ => (w.q(), w.config.beta_q()),
    };
    let mut tiles = Vec::with_capacity(2 * n as usize * subs.len());
    for a in 0..2 * n {
        let g = turn.pow(a as i64);
        tiles.extend(subs.iter().map(|s| (s.transformed(&g), Orientation::Positive)));
    }
    let mut tag = FamilyTag::new(Family::Ctilde);
    tag.n = Some(n);
    tag.k = Some(k);
    tag.chirality = Some(Chirality::A);
    tag.variant = Some(variant.pivot.label().to_string());
    let disk = Disk { center, radius: w.disk_radius };
    Ok(finish(disk, tiles, tag, variant.chirality))
}

/// Reads the edge word of a `C_{n,k}^t` member off its boundary circle.
/// Each maximal arc of the circle covered by a single tile is one edge; for
/// `k = 1` both letters span the same angle and the flip tag decides.
pub fn edge_word_of(t: &Tiling) -> Result<EdgeWord, FamilyError> {
    let (Family::C, Some(n), Some(k)) = (t.tag.family, t.tag.n, t.tag.k) else {
        return Err(FamilyError::NotCFamily);
    };
    let disk = t.disk;
    let tol = 1e-7 * disk.radius;
    // (start angle, span, tile index) of every piece of the disk circle.
    let mut pieces: Vec<(f64, f64, usize)> = Vec::new();
    for (i, tile) in t.tiles.iter().enumerate() {
        for seg in tile.contour.segments() {
            let Some(arc) = seg.as_arc() else { continue };
            if arc.center.dist(disk.center) > tol || (arc.radius - disk.radius).abs() > tol {
                continue;
            }
            let from = if arc.sweep > 0.0 { arc.start_angle } else { arc.end_angle() };
            let mut from = wrap_tau(from);
            if from > TAU - 1e-9 {
                from = 0.0;
            }
            pieces.push((from, arc.sweep.abs(), i));
        }
    }
    pieces.sort_by(|a, b| a.0.total_cmp(&b.0));
    let mut merged: Vec<(f64, usize)> = Vec::new();
    for (_, span, i) in pieces {
        match merged.last_mut() {
            Some(last) if last.1 == i => last.0 += span,
            _ => merged.push((span, i)),
        }
    }
    if merged.len() > 1 && merged[0].1 == merged[merged.len() - 1].1 {
        let (span, _) = merged.pop().expect("non-empty");
        merged[0].0 += span;
    }
    let long = std::f64::consts::PI / n as f64;
    let short = long / k as f64;
    let eps = 1e-6;
    let edges = merged
        .into_iter()
        .map(|(span, i)| {
            if k == 1 && (span - long).abs() < eps {
                Ok(match t.tiles[i].orientation {
                    Orientation::Negative => Edge::Long,
                    Orientation::Positive => Edge::Short,
                })
            } else if (span - long).abs() < eps {
                Ok(Edge::Long)
            } else if (span - short).abs() < eps {
                Ok(Edge::Short)
            } else {
                Err(FamilyError::UnrecognizedSpan(span))
            }
        })
        .collect::<Result<Vec<_>, _>>()?;
    let word = EdgeWord::new(edges);
    word.validate(n, k)?;
    Ok(word)
}
