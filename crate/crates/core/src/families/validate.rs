use std::f64::consts::{PI, TAU};

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::geometry::{congruent, BBox, Contour, Isometry, PathSegment, Point, GEOM_TOL};

use super::{Disk, Tiling};

/// Interior parameters at which boundary segments are probed. Kept away
/// from the ends so that vertex contacts do not count as edge contacts.
const EDGE_PROBES: [f64; 3] = [0.137, 0.537, 0.861];

/// Relative tolerance for symmetry detection, looser than geometric
/// equality because symmetric tiles are built through different chains of
/// rotations.
const SYMMETRY_TOL: f64 = 1e-7;

const MAX_FAILURES: usize = 20;

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ValidationOptions {
    pub samples: usize,
    pub seed: u64,
}

impl Default for ValidationOptions {
    fn default() -> Self {
        ValidationOptions {
            samples: 10_000,
            seed: 42,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct TilingReport {
    pub valid: bool,
    pub monohedral: bool,
    pub tile_count: usize,
    pub center_touch_count: usize,
    pub boundary_touch_count: usize,
    pub cyclic_symmetry_order: usize,
    pub trivial_cyclic_symmetry: bool,
    pub has_mirror_symmetry: bool,
    pub area_relative_error: f64,
    pub samples: usize,
    pub seed: u64,
    pub uncovered_samples: usize,
    pub multiply_covered_samples: usize,
    pub failures: Vec<String>,
}

impl TilingReport {
    /// Pretty-printed JSON, one field per line.
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

/// A tile with the quantities every check reuses.
struct Prepared<'a> {
    contour: &'a Contour,
    bbox: BBox,
    centroid: Point,
    length: f64,
    area: f64,
}

impl<'a> Prepared<'a> {
    fn new(contour: &'a Contour, margin: f64) -> Self {
        Prepared {
            contour,
            bbox: contour.bbox().expanded(margin),
            centroid: contour.boundary_centroid(),
            length: contour.length(),
            area: contour.area(),
        }
    }
}

struct Failures(Vec<String>, usize);

impl Failures {
    fn push(&mut self, msg: String) {
        self.1 += 1;
        if self.0.len() < MAX_FAILURES {
            self.0.push(msg);
        }
    }

    fn finish(mut self) -> Vec<String> {
        if self.1 > self.0.len() {
            let more = self.1 - self.0.len();
            self.0.push(format!("... and {more} more"));
        }
        self.0
    }
}

pub fn validate_tiling(t: &Tiling) -> TilingReport {
    validate_tiling_with(t, ValidationOptions::default())
}

pub fn validate_tiling_with(t: &Tiling, opts: ValidationOptions) -> TilingReport {
    let disk = t.disk;
    let r = disk.radius;
    let tol = GEOM_TOL * 2.0 * r;
    let mut failures = Failures(Vec::new(), 0);
    let oriented: Vec<Contour> = t.tiles.iter().map(|x| x.contour.oriented_ccw()).collect();
    let prepared: Vec<Prepared> = oriented.iter().map(|c| Prepared::new(c, 1e-6 * r)).collect();

    for (tile, c) in t.tiles.iter().zip(&oriented) {
        if let Some(at) = c.is_simple().violation {
            failures.push(format!("tile {} is not simple near ({:.6}, {:.6})", tile.id, at.x, at.y));
        }
        let outside = c
            .segments()
            .iter()
            .flat_map(|s| s.sample(8))
            .find(|z| z.dist(disk.center) > r + tol);
        if let Some(z) = outside {
            failures.push(format!("tile {} leaves the disk near ({:.6}, {:.6})", tile.id, z.x, z.y));
        }
    }

    let total: f64 = prepared.iter().map(|p| p.area.abs()).sum();
    let disk_area = PI * r * r;
    let area_relative_error = (total - disk_area).abs() / disk_area;
    if area_relative_error > GEOM_TOL {
        failures.push(format!("tile areas sum to {total} instead of {disk_area}"));
    }

    check_edges(t, &prepared, disk, tol, &mut failures);

    let (uncovered, multiply) = monte_carlo(&prepared, disk, opts);
    if uncovered > 0 || multiply > 0 {
        failures.push(format!(
            "{uncovered} sample points uncovered, {multiply} covered more than once"
        ));
    }
    let valid = failures.1 == 0;

    let mut monohedral = true;
    'pairs: for i in 0..oriented.len() {
        for j in i + 1..oriented.len() {
            if congruent(&oriented[i], &oriented[j]).is_none() {
                monohedral = false;
                failures.push(format!("tiles {} and {} are not congruent", t.tiles[i].id, t.tiles[j].id));
                break 'pairs;
            }
        }
    }

    let center_touch_count = oriented
        .iter()
        .filter(|c| c.distance_to(disk.center) <= tol || c.winding_number(disk.center) != 0)
        .count();
    let boundary_touch_count = oriented
        .iter()
        .filter(|c| c.segments().iter().map(|s| farthest_distance(s, disk.center)).fold(0.0, f64::max) >= r - tol)
        .count();
    let cyclic_symmetry_order = cyclic_order(&prepared, disk);
    TilingReport {
        valid,
        monohedral,
        tile_count: t.tiles.len(),
        center_touch_count,
        boundary_touch_count,
        cyclic_symmetry_order,
        trivial_cyclic_symmetry: cyclic_symmetry_order == 1,
        has_mirror_symmetry: mirror_symmetric(&prepared, disk),
        area_relative_error,
        samples: opts.samples,
        seed: opts.seed,
        uncovered_samples: uncovered,
        multiply_covered_samples: multiply,
        failures: failures.finish(),
    }
}

/// Every probe point of every segment must lie on the disk circle or on the
/// boundary of exactly one other tile, traversed the opposite way there.
fn check_edges(t: &Tiling, prepared: &[Prepared], disk: Disk, tol: f64, failures: &mut Failures) {
    for (i, tile) in prepared.iter().enumerate() {
        for (si, seg) in tile.contour.segments().iter().enumerate() {
            for &param in &EDGE_PROBES {
                let z = seg.point_at(param);
                if (z.dist(disk.center) - disk.radius).abs() <= tol {
                    continue;
                }
                let partners: Vec<usize> = prepared
                    .iter()
                    .enumerate()
                    .filter(|(j, other)| *j != i && other.bbox.contains(z) && other.contour.distance_to(z) <= tol)
                    .map(|(j, _)| j)
                    .collect();
                let id = t.tiles[i].id;
                match partners[..] {
                    [j] => {
                        let other = prepared[j].contour;
                        let pos = other.project(z);
                        let tangent = other.segments()[pos.segment].tangent_at(pos.param);
                        if seg.tangent_at(param).dot(tangent) > -1.0 + 1e-6 {
                            failures.push(format!(
                                "tile {id} segment {si} runs alongside tile {} in the same direction",
                                t.tiles[j].id
                            ));
                        }
                    }
                    [] => failures.push(format!("tile {id} segment {si} has no neighbour at ({:.6}, {:.6})", z.x, z.y)),
                    _ => failures.push(format!(
                        "tile {id} segment {si} touches {} other tiles at ({:.6}, {:.6})",
                        partners.len(),
                        z.x,
                        z.y
                    )),
                }
            }
        }
    }
}

/// Counts sample points covered by no tile and by several tiles, skipping
/// points within `1e-6 · r` of any boundary.
fn monte_carlo(prepared: &[Prepared], disk: Disk, opts: ValidationOptions) -> (usize, usize) {
    let band = 1e-6 * disk.radius;
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let (mut uncovered, mut multiply) = (0, 0);
    'points: for _ in 0..opts.samples {
        let rho = disk.radius * rng.gen::<f64>().sqrt();
        let theta = TAU * rng.gen::<f64>();
        if rho > disk.radius - band {
            continue;
        }
        let z = disk.center + Point::polar(rho, theta);
        let mut hits = 0;
        for p in prepared {
            if !p.bbox.contains(z) {
                continue;
            }
            if p.contour.distance_to(z) < band {
                continue 'points;
            }
            if p.contour.winding_number(z) != 0 {
                hits += 1;
            }
        }
        match hits {
            0 => uncovered += 1,
            1 => {}
            _ => multiply += 1,
        }
    }
    (uncovered, multiply)
}

/// Largest distance from `c` to a point of the segment.
fn farthest_distance(s: &PathSegment, c: Point) -> f64 {
    let ends = s.start().dist(c).max(s.end().dist(c));
    match s {
        PathSegment::Line { .. } => ends,
        PathSegment::Arc(arc) => {
            let away = arc.center - c;
            if away.norm() <= f64::EPSILON * arc.radius {
                return arc.radius;
            }
            if arc.contains_angle(away.angle(), 0.0) {
                ends.max(away.norm() + arc.radius)
            } else {
                ends
            }
        }
    }
}

/// Whether `g` maps every tile onto some tile of `targets`, optionally
/// requiring matching orientation tags.
fn maps_onto(
    src: &[Prepared],
    targets: &[Prepared],
    g: &Isometry,
    tol: f64,
    tags: Option<(&[super::Orientation], &[super::Orientation])>,
) -> bool {
    src.iter().enumerate().all(|(i, a)| {
        let c = g.apply(a.centroid);
        targets.iter().enumerate().any(|(j, b)| {
            if let Some((ta, tb)) = tags {
                if ta[i] != tb[j] {
                    return false;
                }
            }
            b.centroid.dist(c) <= tol
                && (a.length - b.length).abs() <= tol
                && (a.area.abs() - b.area.abs()).abs() <= tol
                && a.contour.segments().iter().all(|s| {
                    EDGE_PROBES
                        .iter()
                        .all(|&t| b.contour.distance_to(g.apply(s.point_at(t))) <= tol)
                })
        })
    })
}

fn cyclic_order(prepared: &[Prepared], disk: Disk) -> usize {
    let tol = SYMMETRY_TOL * disk.radius;
    (2..=prepared.len().max(1))
        .rev()
        .find(|&d| {
            let g = Isometry::rotation(disk.center, TAU / d as f64);
            maps_onto(prepared, prepared, &g, tol, None)
        })
        .unwrap_or(1)
}

/// A tile whose boundary centroid is off the disk center, used to anchor
/// candidate symmetries.
fn anchor(prepared: &[Prepared], disk: Disk) -> Option<usize> {
    prepared
        .iter()
        .position(|p| p.centroid.dist(disk.center) > SYMMETRY_TOL * disk.radius)
}

fn mirror_symmetric(prepared: &[Prepared], disk: Disk) -> bool {
    let tol = SYMMETRY_TOL * disk.radius;
    let Some(a) = anchor(prepared, disk) else {
        return false;
    };
    let phi0 = (prepared[a].centroid - disk.center).angle();
    prepared.iter().any(|b| {
        let rel = b.centroid - disk.center;
        if (rel.norm() - (prepared[a].centroid - disk.center).norm()).abs() > tol {
            return false;
        }
        let axis = (phi0 + rel.angle()) / 2.0;
        let m = Isometry::reflection(disk.center, axis);
        maps_onto(prepared, prepared, &m, tol, None)
    })
}

/// Whether two tilings coincide, tags included, after normalizing both to
/// the unit disk and allowing a rotation about the center.
pub fn same_tiling(a: &Tiling, b: &Tiling) -> bool {
    if a.tiles.len() != b.tiles.len() {
        return false;
    }
    let (a, b) = (a.normalized(), b.normalized());
    let ca: Vec<Contour> = a.tiles.iter().map(|t| t.contour.oriented_ccw()).collect();
    let cb: Vec<Contour> = b.tiles.iter().map(|t| t.contour.oriented_ccw()).collect();
    let pa: Vec<Prepared> = ca.iter().map(|c| Prepared::new(c, 1e-6)).collect();
    let pb: Vec<Prepared> = cb.iter().map(|c| Prepared::new(c, 1e-6)).collect();
    let ta: Vec<_> = a.tiles.iter().map(|t| t.orientation).collect();
    let tb: Vec<_> = b.tiles.iter().map(|t| t.orientation).collect();
    let tol = SYMMETRY_TOL;
    let disk = Disk::UNIT;
    let Some(i) = anchor(&pa, disk) else {
        return maps_onto(&pa, &pb, &Isometry::identity(), tol, Some((&ta, &tb)));
    };
    let c0 = pa[i].centroid;
    pb.iter().any(|q| {
        if (q.centroid.norm() - c0.norm()).abs() > tol {
            return false;
        }
        let g = Isometry::rotation(Point::ORIGIN, q.centroid.angle() - c0.angle());
        maps_onto(&pa, &pb, &g, tol, Some((&ta, &tb)))
    })
}
