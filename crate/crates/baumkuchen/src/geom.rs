//! Scalar 2D primitives: angles, ray–circle exits, triangle / segment /
//! sector areas. Everything downstream (fans, theorem verifiers) is built
//! from these few functions, so their contracts are deliberately narrow.

use serde::{Deserialize, Serialize};
use std::f64::consts::TAU;

use crate::error::{Error, Result};

/// Relative tolerance for "point lies on a circle": | |p−c| − ρ | ≤ ON_CIRCLE_REL · ρ.
///
/// Inputs typically come from prior floating-point intersections, and the
/// same window decides whether a cut point counts as a boundary case.
pub const ON_CIRCLE_REL: f64 = 1e-9;

/// Relative window (× ρ²) in which a slightly negative ray discriminant is
/// treated as zero. Origins on the boundary land here through rounding.
pub const DISC_CLAMP_REL: f64 = 1e-12;

/// Exit distances below EXIT_ZERO_REL · ρ are degenerate: the ray leaves the
/// closed disk immediately and the exit point is the origin itself.
pub const EXIT_ZERO_REL: f64 = 1e-12;

/// A point of the plane. Coordinates are expected to be finite; entry points
/// that accept user data validate this.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
#[serde(from = "[f64; 2]", into = "[f64; 2]")]
pub struct Point {
    pub x: f64,
    pub y: f64,
}

impl Point {
    pub const fn new(x: f64, y: f64) -> Self {
        Point { x, y }
    }

    pub fn is_finite(&self) -> bool {
        self.x.is_finite() && self.y.is_finite()
    }

    pub fn distance(&self, other: Point) -> f64 {
        (self.x - other.x).hypot(self.y - other.y)
    }
}

impl From<[f64; 2]> for Point {
    fn from(v: [f64; 2]) -> Self {
        Point { x: v[0], y: v[1] }
    }
}

impl From<Point> for [f64; 2] {
    fn from(p: Point) -> Self {
        [p.x, p.y]
    }
}

/// A circle given by center and radius (strictly positive and finite).
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct Circle {
    pub center: Point,
    pub radius: f64,
}

impl Circle {
    pub fn new(center: Point, radius: f64) -> Result<Self> {
        if !center.is_finite() || !radius.is_finite() {
            return Err(Error::InvalidArgument(
                "circle center and radius must be finite".into(),
            ));
        }
        if radius <= 0.0 {
            return Err(Error::InvalidArgument(
                "circle radius must be strictly positive".into(),
            ));
        }
        Ok(Circle { center, radius })
    }

    pub fn area(&self) -> f64 {
        std::f64::consts::PI * self.radius * self.radius
    }

    /// The point at angular position `phi` on the boundary.
    pub fn point_at(&self, phi: f64) -> Point {
        Point::new(
            self.center.x + self.radius * phi.cos(),
            self.center.y + self.radius * phi.sin(),
        )
    }

    /// True when `p` is on the boundary within the ON_CIRCLE_REL window.
    pub fn on_boundary(&self, p: Point) -> bool {
        (self.center.distance(p) - self.radius).abs() <= ON_CIRCLE_REL * self.radius
    }

    /// True when `p` is inside or on the circle, with the boundary widened by
    /// the ON_CIRCLE_REL window.
    pub fn contains(&self, p: Point) -> bool {
        self.center.distance(p) <= self.radius * (1.0 + ON_CIRCLE_REL)
    }
}

/// An angle in radians. Construction rejects non-finite values; the
/// normalized form lies in [0, 2π).
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Angle(f64);

impl Angle {
    pub fn new(radians: f64) -> Result<Self> {
        if !radians.is_finite() {
            return Err(Error::InvalidArgument("angle must be finite".into()));
        }
        Ok(Angle(radians))
    }

    /// Zero angle.
    pub const ZERO: Angle = Angle(0.0);

    pub fn radians(self) -> f64 {
        self.0
    }
}

/// Reduces an angle to [0, 2π). Idempotent.
pub fn normalize_angle(theta: Angle) -> Angle {
    Angle(normalize_rad(theta.0))
}

/// Scalar form of [`normalize_angle`] for internal arithmetic.
pub(crate) fn normalize_rad(theta: f64) -> f64 {
    let r = theta.rem_euclid(TAU);
    // rem_euclid can round up to exactly 2π for tiny negative inputs
    if r >= TAU {
        0.0
    } else {
        r
    }
}

/// Distance along the ray `origin + t·(cos θ, sin θ)` to its exit from the
/// circle: t = w·u + sqrt((w·u)² + ρ² − d²) with w = center − origin, d = |w|.
///
/// The origin must lie inside or on the circle; for an origin on the boundary
/// and a ray pointing outward the exit distance is 0.
pub fn ray_exit_distance(circle: &Circle, origin: Point, theta: Angle) -> Result<f64> {
    if !origin.is_finite() {
        return Err(Error::InvalidArgument("ray origin must be finite".into()));
    }
    let rho = circle.radius;
    let wx = circle.center.x - origin.x;
    let wy = circle.center.y - origin.y;
    let d = wx.hypot(wy);
    if d > rho * (1.0 + ON_CIRCLE_REL) {
        return Err(Error::OutsideCircle);
    }
    let (sin_t, cos_t) = theta.radians().sin_cos();
    let b = wx * cos_t + wy * sin_t;
    let mut disc = b * b + (rho - d) * (rho + d);
    if disc < 0.0 {
        if disc >= -DISC_CLAMP_REL * rho * rho {
            disc = 0.0;
        } else {
            return Err(Error::Numeric(format!(
                "ray–circle discriminant {disc:e} below clamp window"
            )));
        }
    }
    Ok(b + disc.sqrt())
}

/// Exit point of the ray from `origin` at angle `theta`: lies on the circle.
pub fn ray_exit_point(circle: &Circle, origin: Point, theta: Angle) -> Result<Point> {
    let t = ray_exit_distance(circle, origin, theta)?;
    let (sin_t, cos_t) = theta.radians().sin_cos();
    Ok(Point::new(origin.x + t * cos_t, origin.y + t * sin_t))
}

/// Counter-clockwise angle from `a` to `b` about the circle center, in
/// [0, 2π). Coincident inputs give 0, never 2π; callers that need a full
/// turn must detect coincidence themselves.
pub fn central_angle(circle: &Circle, a: Point, b: Point) -> Result<Angle> {
    if !circle.on_boundary(a) || !circle.on_boundary(b) {
        return Err(Error::OffBoundary);
    }
    if a == b {
        return Ok(Angle(0.0));
    }
    let pa = (a.y - circle.center.y).atan2(a.x - circle.center.x);
    let pb = (b.y - circle.center.y).atan2(b.x - circle.center.x);
    Ok(Angle(normalize_rad(pb - pa)))
}

/// Area of the circular segment between a chord and its arc:
/// (ρ²/2)(α − sin α) for central angle α ∈ [0, 2π].
pub fn circular_segment_area(radius: f64, alpha: Angle) -> Result<f64> {
    if !(radius.is_finite() && radius > 0.0) {
        return Err(Error::InvalidArgument(
            "segment radius must be finite and positive".into(),
        ));
    }
    let a = alpha.radians();
    if !(0.0..=TAU).contains(&a) {
        return Err(Error::InvalidArgument(format!(
            "segment angle {a} outside [0, 2π]"
        )));
    }
    Ok(0.5 * radius * radius * (a - a.sin()))
}

/// Unsigned triangle area |((a−p) × (b−p))| / 2.
///
/// Vertices are put in a canonical order first, so the result is exactly
/// invariant under permutations of the arguments.
pub fn triangle_area(p: Point, a: Point, b: Point) -> f64 {
    let mut v = [p, a, b];
    v.sort_by(|u, w| (u.x, u.y).partial_cmp(&(w.x, w.y)).expect("finite coords"));
    let [p, a, b] = v;
    let cross = (a.x - p.x) * (b.y - p.y) - (a.y - p.y) * (b.x - p.x);
    0.5 * cross.abs()
}

/// Area of the circular sector swept counter-clockwise from `a` to `b`:
/// (ρ²/2) · central_angle(a, b).
pub fn sector_area(circle: &Circle, a: Point, b: Point) -> Result<f64> {
    let phi = central_angle(circle, a, b)?;
    Ok(0.5 * circle.radius * circle.radius * phi.radians())
}

#[cfg(test)]
mod tests {
    use super::*;
    use std::f64::consts::{FRAC_PI_2, PI};

    fn unit() -> Circle {
        Circle::new(Point::new(0.0, 0.0), 1.0).unwrap()
    }

    #[test]
    fn normalize_examples() {
        assert_eq!(normalize_angle(Angle::new(0.0).unwrap()).radians(), 0.0);
        assert_eq!(normalize_angle(Angle::new(TAU).unwrap()).radians(), 0.0);
        assert!(
            (normalize_angle(Angle::new(-FRAC_PI_2).unwrap()).radians() - 3.0 * FRAC_PI_2).abs()
                < 1e-15
        );
        // idempotent
        let t = Angle::new(-7.25).unwrap();
        let once = normalize_angle(t);
        assert_eq!(normalize_angle(once), once);
        // tiny negative inputs must not normalize to exactly 2π
        let near = normalize_angle(Angle::new(-1e-18).unwrap());
        assert!(near.radians() < TAU);
    }

    #[test]
    fn angle_rejects_non_finite() {
        assert!(Angle::new(f64::NAN).is_err());
        assert!(Angle::new(f64::INFINITY).is_err());
    }

    #[test]
    fn exit_distance_examples() {
        let c = unit();
        let p = Point::new(0.5, 0.0);
        assert!((ray_exit_distance(&c, p, Angle::new(0.0).unwrap()).unwrap() - 0.5).abs() < 1e-15);
        assert!((ray_exit_distance(&c, p, Angle::new(PI).unwrap()).unwrap() - 1.5).abs() < 1e-15);
        let t = ray_exit_distance(&c, p, Angle::new(FRAC_PI_2).unwrap()).unwrap();
        assert!((t - 0.75f64.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn exit_distance_outside_errors() {
        let c = unit();
        let err = ray_exit_distance(&c, Point::new(1.5, 0.0), Angle::ZERO).unwrap_err();
        assert_eq!(err, Error::OutsideCircle);
    }

    #[test]
    fn exit_point_examples() {
        let c = unit();
        let p = Point::new(0.5, 0.0);
        let e = ray_exit_point(&c, p, Angle::ZERO).unwrap();
        assert!((e.x - 1.0).abs() < 1e-15 && e.y.abs() < 1e-15);
        let e = ray_exit_point(&c, p, Angle::new(FRAC_PI_2).unwrap()).unwrap();
        assert!((e.x - 0.5).abs() < 1e-15 && (e.y - 0.75f64.sqrt()).abs() < 1e-15);
        // diameter through a boundary point
        let e = ray_exit_point(&c, Point::new(1.0, 0.0), Angle::new(PI).unwrap()).unwrap();
        assert!((e.x + 1.0).abs() < 1e-12 && e.y.abs() < 1e-12);
    }

    #[test]
    fn tangent_ray_from_boundary_point_exits_immediately() {
        let c = unit();
        let p = Point::new(1.0, 0.0);
        let t = ray_exit_distance(&c, p, Angle::new(FRAC_PI_2).unwrap()).unwrap();
        assert!(t.abs() <= EXIT_ZERO_REL);
        let e = ray_exit_point(&c, p, Angle::new(FRAC_PI_2).unwrap()).unwrap();
        assert_eq!(e, p);
    }

    #[test]
    fn central_angle_examples() {
        let c = unit();
        let a = Point::new(1.0, 0.0);
        let b = Point::new(0.0, 1.0);
        assert!((central_angle(&c, a, b).unwrap().radians() - FRAC_PI_2).abs() < 1e-15);
        assert_eq!(central_angle(&c, a, a).unwrap().radians(), 0.0);
        assert!((central_angle(&c, b, a).unwrap().radians() - 3.0 * FRAC_PI_2).abs() < 1e-15);
    }

    #[test]
    fn central_angle_off_boundary_errors() {
        let c = unit();
        let err = central_angle(&c, Point::new(0.5, 0.0), Point::new(1.0, 0.0)).unwrap_err();
        assert_eq!(err, Error::OffBoundary);
    }

    #[test]
    fn segment_examples() {
        assert!((circular_segment_area(1.0, Angle::new(PI).unwrap()).unwrap() - PI / 2.0).abs() < 1e-15);
        assert!((circular_segment_area(1.0, Angle::new(TAU).unwrap()).unwrap() - PI).abs() < 1e-15);
        let q = circular_segment_area(2.0, Angle::new(FRAC_PI_2).unwrap()).unwrap();
        assert!((q - (PI - 2.0)).abs() < 1e-15);
        assert!(circular_segment_area(1.0, Angle::new(-0.1).unwrap()).is_err());
        assert!(circular_segment_area(1.0, Angle::new(TAU + 0.1).unwrap()).is_err());
    }

    #[test]
    fn triangle_examples() {
        let o = Point::new(0.0, 0.0);
        assert_eq!(triangle_area(o, Point::new(1.0, 0.0), Point::new(0.0, 1.0)), 0.5);
        assert_eq!(triangle_area(o, Point::new(1.0, 0.0), Point::new(2.0, 0.0)), 0.0);
        assert_eq!(triangle_area(o, Point::new(2.0, 0.0), Point::new(0.0, 3.0)), 3.0);
    }

    #[test]
    fn sector_examples() {
        let c = unit();
        let a = Point::new(1.0, 0.0);
        let b = Point::new(0.0, 1.0);
        assert!((sector_area(&c, a, b).unwrap() - PI / 4.0).abs() < 1e-15);
        assert_eq!(sector_area(&c, a, a).unwrap(), 0.0);
        let big = Circle::new(Point::new(0.0, 0.0), 2.0).unwrap();
        let q = sector_area(&big, Point::new(2.0, 0.0), Point::new(0.0, 2.0)).unwrap();
        assert!((q - PI).abs() < 1e-14);
    }
}
