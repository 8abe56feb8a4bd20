//! Equiangular fans through a cut point of a disk or annulus.
//!
//! A configuration carries two concentric circles (outer radius R, inner
//! radius r), a cut point P inside the closed inner disk, an even number of
//! cuts n ≥ 4 and a phase. The n lines through P meet at 2n equal angles of
//! π/n and split the outer disk, the inner disk and the ring between them
//! into 2n slices, sectors and pieces whose exact areas this module computes.
//!
//! Internally every sweep is counter-clockwise; wedge k spans directions
//! [θ₀ + kπ/n, θ₀ + (k+1)π/n]. Reports and labels translate to the 1-based
//! clockwise numbering used in hand drawings where needed.

use serde::{Deserialize, Serialize};
use std::f64::consts::PI;

use crate::error::{Error, Result};
use crate::geom::{
    central_angle, circular_segment_area, normalize_rad, ray_exit_distance, triangle_area, Angle,
    Circle, Point, EXIT_ZERO_REL, ON_CIRCLE_REL,
};

/// Relative window (× πR²) in which a piece area that came out slightly
/// negative from cancellation is clamped to zero. Anything more negative is
/// a logic bug, not rounding, and turns into a numeric error.
pub const PIECE_CLAMP_REL: f64 = 1e-12;

/// Angular slack when classifying wedge starts against the tangent window in
/// the boundary case. Directions are exact sums of exact steps, so only
/// rounding dust has to be absorbed.
const ANGLE_DUST: f64 = 1e-12;

/// Two concentric disks, a cut point of the inner one, and the fan geometry.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct BaumkuchenConfig {
    /// Common center O of both circles.
    pub center: Point,
    /// Radius R of the outer disk D.
    pub outer_radius: f64,
    /// Radius r of the inner disk D̃, 0 < r ≤ R.
    pub inner_radius: f64,
    /// Cut point P with |P − O| ≤ r; equality is the boundary case.
    #[serde(rename = "point")]
    pub cut_point: Point,
    /// Number of lines n; even and at least 4. The fan has 2n wedges.
    pub cuts: u32,
    /// Direction of the first cut ray.
    pub phase: Angle,
}

impl BaumkuchenConfig {
    pub fn new(
        center: Point,
        outer_radius: f64,
        inner_radius: f64,
        cut_point: Point,
        cuts: u32,
        phase: Angle,
    ) -> Result<Self> {
        BaumkuchenConfig {
            center,
            outer_radius,
            inner_radius,
            cut_point,
            cuts,
            phase,
        }
        .validated()
    }

    /// Checks every invariant and hands the configuration back unchanged.
    pub fn validated(self) -> Result<Self> {
        if !self.center.is_finite()
            || !self.cut_point.is_finite()
            || !self.outer_radius.is_finite()
            || !self.inner_radius.is_finite()
            || !self.phase.radians().is_finite()
        {
            return Err(Error::InvalidArgument(
                "configuration fields must be finite".into(),
            ));
        }
        if self.inner_radius <= 0.0 {
            return Err(Error::InvalidArgument(
                "inner radius must be strictly positive".into(),
            ));
        }
        if self.inner_radius > self.outer_radius {
            return Err(Error::RadiiOrder);
        }
        if self.cuts < 4 || self.cuts % 2 != 0 {
            return Err(Error::invalid_cuts_even());
        }
        let d = self.center.distance(self.cut_point);
        if d > self.inner_radius * (1.0 + ON_CIRCLE_REL) {
            return Err(Error::PointOutsideInnerDisk);
        }
        Ok(self)
    }

    pub fn outer_circle(&self) -> Circle {
        Circle {
            center: self.center,
            radius: self.outer_radius,
        }
    }

    pub fn inner_circle(&self) -> Circle {
        Circle {
            center: self.center,
            radius: self.inner_radius,
        }
    }

    /// Area of the ring B = D \ int D̃.
    pub fn annulus_area(&self) -> f64 {
        PI * (self.outer_radius - self.inner_radius) * (self.outer_radius + self.inner_radius)
    }

    /// True when P sits on the boundary of the inner disk within tolerance;
    /// the hypothesis of the boundary lemmas.
    pub fn is_boundary_case(&self) -> bool {
        self.inner_circle().on_boundary(self.cut_point)
    }
}

/// Validates a configuration, returning it unchanged on success.
pub fn validate_config(cfg: BaumkuchenConfig) -> Result<BaumkuchenConfig> {
    cfg.validated()
}

/// The 2n cut directions θ₀ + kπ/n, each normalized to [0, 2π).
pub fn cut_directions(cfg: &BaumkuchenConfig) -> Vec<Angle> {
    directions_rad(cfg)
        .into_iter()
        .map(|t| Angle::new(normalize_rad(t)).expect("finite direction"))
        .collect()
}

/// Raw (un-normalized) direction values used by the area pipeline.
fn directions_rad(cfg: &BaumkuchenConfig) -> Vec<f64> {
    let step = PI / cfg.cuts as f64;
    (0..2 * cfg.cuts)
        .map(|k| cfg.phase.radians() + k as f64 * step)
        .collect()
}

/// Per-ray exit data and per-wedge slice areas of one disk cut by the fan.
#[derive(Debug, Clone)]
pub struct FanSlices {
    /// Exit point of each of the 2n rays; equals the origin for rays that
    /// leave the closed disk immediately (origin on the boundary).
    pub exit_points: Vec<Point>,
    /// Exit distance of each ray.
    pub exit_distances: Vec<f64>,
    /// Area of each of the 2n slices.
    pub areas: Vec<f64>,
}

/// Cuts one disk by the equiangular fan from `origin` and returns exit data
/// plus the 2n exact slice areas (triangle + circular segment per wedge).
pub fn fan_slices(circle: &Circle, origin: Point, cuts: u32, phase: Angle) -> Result<FanSlices> {
    if cuts < 4 || cuts % 2 != 0 {
        return Err(Error::invalid_cuts_even());
    }
    let two_n = (2 * cuts) as usize;
    let step = PI / cuts as f64;
    let zero_tol = EXIT_ZERO_REL * circle.radius;

    let mut exit_distances = Vec::with_capacity(two_n);
    let mut exit_points = Vec::with_capacity(two_n);
    for k in 0..two_n {
        let theta = phase.radians() + k as f64 * step;
        let t = ray_exit_distance(circle, origin, Angle::new(theta)?)?;
        if t <= zero_tol {
            // degenerate exit: pin the point to the origin so downstream
            // central angles are anchored, not left to rounding dust
            exit_distances.push(0.0);
            exit_points.push(origin);
        } else {
            exit_distances.push(t);
            let (sin_t, cos_t) = theta.sin_cos();
            exit_points.push(Point::new(origin.x + t * cos_t, origin.y + t * sin_t));
        }
    }

    let mut areas = Vec::with_capacity(two_n);
    for k in 0..two_n {
        let k1 = (k + 1) % two_n;
        areas.push(slice_area_from_exits(
            circle,
            origin,
            exit_distances[k],
            exit_points[k],
            exit_distances[k1],
            exit_points[k1],
        )?);
    }
    Ok(FanSlices {
        exit_points,
        exit_distances,
        areas,
    })
}

fn slice_area_from_exits(
    circle: &Circle,
    origin: Point,
    t0: f64,
    e0: Point,
    t1: f64,
    e1: Point,
) -> Result<f64> {
    if t0 == 0.0 && t1 == 0.0 {
        // wedge points away from the disk (origin on the boundary)
        return Ok(0.0);
    }
    let arc = central_angle(circle, e0, e1)?;
    let area = triangle_area(origin, e0, e1) + circular_segment_area(circle.radius, arc)?;
    Ok(area)
}

/// The full fan partition: cut directions, boundary points on both circles,
/// and per-wedge slice, sector and piece areas. Index k is 0-based and
/// corresponds to the 1-based label k+1 in reports.
#[derive(Debug, Clone, Serialize)]
pub struct FanPartition {
    pub directions: Vec<Angle>,
    pub outer_points: Vec<Point>,
    pub inner_points: Vec<Point>,
    pub outer_slices: Vec<f64>,
    pub inner_slices: Vec<f64>,
    pub outer_sectors: Vec<f64>,
    pub pieces: Vec<f64>,
}

/// Boundary points of the fan on one circle (the Aₖ on D, the Ãₖ on D̃).
pub fn boundary_points(circle: &Circle, cfg: &BaumkuchenConfig) -> Result<Vec<Point>> {
    let cfg = cfg.validated()?;
    Ok(fan_slices(circle, cfg.cut_point, cfg.cuts, cfg.phase)?.exit_points)
}

/// Exact area of wedge k of the given disk: the region between rays k and
/// k+1 from P and the arc joining their exit points.
pub fn wedge_slice_area(circle: &Circle, cfg: &BaumkuchenConfig, k: usize) -> Result<f64> {
    let cfg = cfg.validated()?;
    let two_n = (2 * cfg.cuts) as usize;
    if k >= two_n {
        return Err(Error::InvalidArgument(format!(
            "wedge index {k} out of range 0..{two_n}"
        )));
    }
    Ok(fan_slices(circle, cfg.cut_point, cfg.cuts, cfg.phase)?.areas[k])
}

/// Builds the complete partition of D, D̃ and the ring B for a configuration.
pub fn full_partition(cfg: &BaumkuchenConfig) -> Result<FanPartition> {
    let cfg = cfg.validated()?;
    let outer_circle = cfg.outer_circle();
    let inner_circle = cfg.inner_circle();
    let outer = fan_slices(&outer_circle, cfg.cut_point, cfg.cuts, cfg.phase)?;
    let inner = fan_slices(&inner_circle, cfg.cut_point, cfg.cuts, cfg.phase)?;

    let two_n = (2 * cfg.cuts) as usize;
    let clamp = PIECE_CLAMP_REL * PI * cfg.outer_radius * cfg.outer_radius;
    let mut pieces = Vec::with_capacity(two_n);
    for k in 0..two_n {
        let piece = outer.areas[k] - inner.areas[k];
        if piece < 0.0 {
            if piece >= -clamp {
                pieces.push(0.0);
            } else {
                return Err(Error::Numeric(format!(
                    "piece {k} came out {piece:e}, more negative than rounding allows"
                )));
            }
        } else {
            pieces.push(piece);
        }
    }

    let mut outer_sectors = Vec::with_capacity(two_n);
    for k in 0..two_n {
        let k1 = (k + 1) % two_n;
        outer_sectors.push(crate::geom::sector_area(
            &outer_circle,
            outer.exit_points[k],
            outer.exit_points[k1],
        )?);
    }

    Ok(FanPartition {
        directions: cut_directions(&cfg),
        outer_points: outer.exit_points,
        inner_points: inner.exit_points,
        outer_slices: outer.areas,
        inner_slices: inner.areas,
        outer_sectors,
        pieces,
    })
}

/// Inner-disk slice areas relabeled for the boundary case |P − O| = r:
/// the n−1 chord slices Sl(Ã₁)‥Sl(Ãₙ₋₁) numbered clockwise from P, the end
/// figure bounded by the two extreme chords and the arc through P, and the
/// vertices Ã₁‥Ãₙ themselves (Ãₙ = P when one cut line is tangent at P).
#[derive(Debug, Clone, Serialize)]
pub struct BoundaryCaseSlices {
    pub chord_slices: Vec<f64>,
    pub end_figure: f64,
    pub vertices: Vec<Point>,
}

/// Relabels the inner wedge areas into the clockwise boundary-case indexing.
///
/// Wedges whose closure lies in the inward half-plane at P are the chord
/// slices; everything else (the two partial wedges straddling the tangent
/// plus the outward zero wedges) makes up the end figure. When a cut
/// boundary coincides with the tangent there are n inward wedges and the
/// one starting furthest from the tangent plays the end figure, which pins
/// the degenerate vertex Ãₙ to P.
pub fn boundary_case_slices(cfg: &BaumkuchenConfig) -> Result<BoundaryCaseSlices> {
    let cfg = cfg.validated()?;
    if !cfg.is_boundary_case() {
        return Err(Error::NotBoundaryCase);
    }
    let n = cfg.cuts as usize;
    let two_n = 2 * n;
    let inner_circle = cfg.inner_circle();
    let p = cfg.cut_point;
    let slices = fan_slices(&inner_circle, p, cfg.cuts, cfg.phase)?;

    // offset of each wedge start from the lower tangent direction
    let to_center = (
        cfg.center.x - p.x,
        cfg.center.y - p.y,
    );
    let lower_tangent = to_center.1.atan2(to_center.0) - PI / 2.0;
    let step = PI / cfg.cuts as f64;
    let dirs = directions_rad(&cfg);

    let mut inward: Vec<(f64, usize)> = Vec::with_capacity(n);
    for (k, dir) in dirs.iter().enumerate().take(two_n) {
        let mut delta = normalize_rad(dir - lower_tangent);
        if delta >= std::f64::consts::TAU - ANGLE_DUST {
            delta -= std::f64::consts::TAU;
        }
        if delta <= PI - step + ANGLE_DUST {
            inward.push((delta, k));
        }
    }
    inward.sort_by(|a, b| a.0.partial_cmp(&b.0).expect("finite offsets"));
    if inward.len() != n - 1 && inward.len() != n {
        return Err(Error::Numeric(format!(
            "boundary case found {} inward wedges for n = {n}",
            inward.len()
        )));
    }
    let chords: &[(f64, usize)] = if inward.len() == n {
        &inward[..n - 1]
    } else {
        &inward[..]
    };

    // clockwise from P: the lemma's slice k is the (n−k)-th inward wedge
    let mut chord_slices = Vec::with_capacity(n - 1);
    for k in 1..n {
        chord_slices.push(slices.areas[chords[n - 1 - k].1]);
    }
    let end_figure = inner_circle.area() - chord_slices.iter().sum::<f64>();

    // chord directions d₁‥dₙ; Ãₖ is the exit of dₙ₊₁₋ₖ
    let degenerate = inward.len() == n;
    let mut chord_dirs: Vec<f64> = chords.iter().map(|&(_, k)| dirs[k]).collect();
    if degenerate {
        chord_dirs.push(dirs[inward[n - 1].1]);
    } else {
        chord_dirs.push(chord_dirs[n - 2] + step);
    }
    let zero_tol = EXIT_ZERO_REL * inner_circle.radius;
    let mut vertices = Vec::with_capacity(n);
    for k in 1..=n {
        if degenerate && k == n {
            // the first chord runs along the tangent, whose only
            // intersection with the circle is P; the ray exit would smear
            // P's radial rounding into a sqrt-amplified vertex offset
            vertices.push(p);
            continue;
        }
        let theta = chord_dirs[n - k];
        let t = ray_exit_distance(&inner_circle, p, Angle::new(theta)?)?;
        if t <= zero_tol {
            vertices.push(p);
        } else {
            let (sin_t, cos_t) = theta.sin_cos();
            vertices.push(Point::new(p.x + t * cos_t, p.y + t * sin_t));
        }
    }

    Ok(BoundaryCaseSlices {
        chord_slices,
        end_figure,
        vertices,
    })
}
