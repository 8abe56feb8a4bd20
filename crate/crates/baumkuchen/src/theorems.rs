//! Executable verifiers for the pair-sum identities of the fan partition.
//!
//! Each verifier builds the relevant partition, evaluates the claimed
//! identities and returns a report carrying one residual per identity, so
//! callers can assert on magnitudes instead of trusting a boolean.
//!
//! Residual conventions: reports about areas carry raw residuals in area
//! units with an absolute tolerance of `tol · πR²`. The boundary-polygon
//! report mixes radians and areas, so its rows are normalized (angles in
//! radians, areas divided by πr²) and compared against `tol` directly.

use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{central_angle, triangle_area, Angle, Circle, Point, ON_CIRCLE_REL};
use crate::partition::{boundary_case_slices, fan_slices, full_partition, BaumkuchenConfig};

/// Default relative tolerance for exact-pipeline residuals.
pub const DEFAULT_TOL: f64 = 1e-10;

/// One labeled residual of a verified identity.
#[derive(Debug, Clone, Serialize)]
pub struct Residual {
    pub label: String,
    pub value: f64,
}

/// Outcome of verifying one identity on one configuration.
///
/// `passed` holds exactly when every |residual| is at most `tolerance`.
#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub identity: String,
    pub passed: bool,
    pub tolerance: f64,
    pub residuals: Vec<Residual>,
    pub config: ConfigEcho,
}

/// The configuration a report was produced from.
#[derive(Debug, Clone, Copy, Serialize)]
#[serde(untagged)]
pub enum ConfigEcho {
    Annulus(BaumkuchenConfig),
    Disk(PizzaConfig),
}

impl VerificationReport {
    fn new(identity: &str, tolerance: f64, residuals: Vec<Residual>, config: ConfigEcho) -> Self {
        let passed = residuals.iter().all(|r| r.value.abs() <= tolerance);
        VerificationReport {
            identity: identity.to_string(),
            passed,
            tolerance,
            residuals,
            config,
        }
    }

    pub fn max_abs_residual(&self) -> f64 {
        self.residuals
            .iter()
            .map(|r| r.value.abs())
            .fold(0.0, f64::max)
    }
}

fn check_tol(tol: f64) -> Result<f64> {
    if !(tol.is_finite() && tol > 0.0) {
        return Err(Error::InvalidArgument(
            "tolerance must be finite and positive".into(),
        ));
    }
    Ok(tol)
}

/// Verifies that opposite ring pieces pair-sum to area(B)/n on all n pairs.
pub fn verify_theorem1(cfg: &BaumkuchenConfig, tol: f64) -> Result<VerificationReport> {
    let tol = check_tol(tol)?;
    let cfg = cfg.validated()?;
    let part = full_partition(&cfg)?;
    let n = cfg.cuts as usize;
    let share = cfg.annulus_area() / cfg.cuts as f64;
    let residuals = (0..n)
        .map(|k| Residual {
            label: format!(
                "Piece(A{}) + Piece(A{}) - area(B)/{}",
                k + 1,
                k + 1 + n,
                cfg.cuts
            ),
            value: part.pieces[k] + part.pieces[k + n] - share,
        })
        .collect();
    let abs_tol = tol * PI * cfg.outer_radius * cfg.outer_radius;
    Ok(VerificationReport::new(
        "baumkuchen",
        abs_tol,
        residuals,
        ConfigEcho::Annulus(cfg),
    ))
}

/// Checks the proof decomposition of the pair-sum identity: with D′ the disk
/// on radius OP, every ring piece equals the difference of the corresponding
/// pieces of B₁ = D \ int D′ and B₂ = D̃ \ int D′. P lies on ∂D′, so both
/// sub-problems are boundary cases.
pub fn decompose_via_op(cfg: &BaumkuchenConfig, tol: f64) -> Result<VerificationReport> {
    let tol = check_tol(tol)?;
    let cfg = cfg.validated()?;
    let d_op = cfg.center.distance(cfg.cut_point);
    if d_op == 0.0 {
        return Err(Error::DegenerateDecomposition);
    }
    // a snapped boundary point may measure a hair outside D̃
    let d_op = d_op.min(cfg.inner_radius);
    let ring = full_partition(&cfg)?;
    let b1 = full_partition(&BaumkuchenConfig {
        inner_radius: d_op,
        ..cfg
    })?;
    let b2 = full_partition(&BaumkuchenConfig {
        outer_radius: cfg.inner_radius,
        inner_radius: d_op,
        ..cfg
    })?;
    let residuals = (0..ring.pieces.len())
        .map(|k| Residual {
            label: format!(
                "Piece_B(A{k1}) - (Piece_B1(A{k1}) - Piece_B2(A{k1}))",
                k1 = k + 1
            ),
            value: ring.pieces[k] - (b1.pieces[k] - b2.pieces[k]),
        })
        .collect();
    let abs_tol = tol * PI * cfg.outer_radius * cfg.outer_radius;
    Ok(VerificationReport::new(
        "decompose",
        abs_tol,
        residuals,
        ConfigEcho::Annulus(cfg),
    ))
}

fn require_boundary_case(cfg: &BaumkuchenConfig) -> Result<()> {
    if cfg.is_boundary_case() {
        Ok(())
    } else {
        Err(Error::NotBoundaryCase)
    }
}

/// Verifies the boundary-case polygon conditions for P on ∂D̃: the inscribed
/// n-gon Ã₁‥Ãₙ is regular, opposite chord slices pair-sum to (2/n)·area(D̃),
/// and the middle slice plus the end figure reach the same total.
///
/// Rows are normalized: angle deviations in radians, area deviations divided
/// by πr². `passed` compares them against `tol` directly.
pub fn verify_lemma2(cfg: &BaumkuchenConfig, tol: f64) -> Result<VerificationReport> {
    let tol = check_tol(tol)?;
    let cfg = cfg.validated()?;
    require_boundary_case(&cfg)?;
    let b = boundary_case_slices(&cfg)?;
    let n = cfg.cuts as usize;
    let inner_circle = cfg.inner_circle();
    let inner_area = inner_circle.area();
    let share = 2.0 * inner_area / cfg.cuts as f64;
    let regular_gap = TAU / cfg.cuts as f64;

    let mut residuals = Vec::with_capacity(n + n / 2);
    for k in 0..n {
        // clockwise gap from Ãₖ to its successor equals the ccw angle back
        let k1 = (k + 1) % n;
        let gap = central_angle(&inner_circle, b.vertices[k1], b.vertices[k])?;
        residuals.push(Residual {
            label: format!(
                "central angle (A~{}, A~{}) - 2pi/{} [rad]",
                k + 1,
                k1 + 1,
                cfg.cuts
            ),
            value: gap.radians() - regular_gap,
        });
    }
    for k in 1..n / 2 {
        residuals.push(Residual {
            label: format!(
                "(Sl(A~{k}) + Sl(A~{}) - (2/{}) area(D~)) / (pi r^2)",
                k + n / 2,
                cfg.cuts
            ),
            value: (b.chord_slices[k - 1] + b.chord_slices[k - 1 + n / 2] - share) / inner_area,
        });
    }
    residuals.push(Residual {
        label: format!(
            "(Sl(A~{}) + end figure - (2/{}) area(D~)) / (pi r^2)",
            n / 2,
            cfg.cuts
        ),
        value: (b.chord_slices[n / 2 - 1] + b.end_figure - share) / inner_area,
    });

    Ok(VerificationReport::new(
        "lemma2",
        tol,
        residuals,
        ConfigEcho::Annulus(cfg),
    ))
}

/// The pair-sum identity restricted to P on the inner boundary.
pub fn verify_lemma3(cfg: &BaumkuchenConfig, tol: f64) -> Result<VerificationReport> {
    let tol = check_tol(tol)?;
    let cfg = cfg.validated()?;
    require_boundary_case(&cfg)?;
    let mut report = verify_theorem1(&cfg, tol)?;
    report.identity = "lemma3".to_string();
    Ok(report)
}

/// A plain disk cut by an equiangular fan: the pizza setting.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, serde::Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PizzaConfig {
    pub center: Point,
    pub radius: f64,
    #[serde(rename = "point")]
    pub cut_point: Point,
    pub cuts: u32,
    pub phase: Angle,
}

impl PizzaConfig {
    pub fn new(center: Point, radius: f64, cut_point: Point, cuts: u32, phase: Angle) -> Result<Self> {
        PizzaConfig {
            center,
            radius,
            cut_point,
            cuts,
            phase,
        }
        .validated()
    }

    pub fn validated(self) -> Result<Self> {
        if !self.center.is_finite()
            || !self.cut_point.is_finite()
            || !self.radius.is_finite()
            || !self.phase.radians().is_finite()
        {
            return Err(Error::InvalidArgument(
                "configuration fields must be finite".into(),
            ));
        }
        if self.radius <= 0.0 {
            return Err(Error::InvalidArgument(
                "radius must be strictly positive".into(),
            ));
        }
        if self.cuts < 4 || self.cuts % 4 != 0 {
            return Err(Error::invalid_cuts_multiple_of_four());
        }
        if self.center.distance(self.cut_point) >= self.radius {
            return Err(Error::PointOutsideInnerDisk);
        }
        Ok(self)
    }

    pub fn circle(&self) -> Circle {
        Circle {
            center: self.center,
            radius: self.radius,
        }
    }
}

/// Who gets which slices. Indices are 1-based slice labels; person k holds
/// {k, k+n/2, k+n, k+3n/2}, which partitions {1‥2n}.
#[derive(Debug, Clone, Serialize)]
pub struct PizzaAssignment {
    pub people: u32,
    pub shares: Vec<[u32; 4]>,
    /// Per-person slice-area totals; empty until areas are attached.
    pub totals: Vec<f64>,
}

/// The constructive slice distribution for n a multiple of 4, indices only.
pub fn pizza_assignment(cuts: u32) -> Result<PizzaAssignment> {
    if cuts < 4 || cuts % 4 != 0 {
        return Err(Error::invalid_cuts_multiple_of_four());
    }
    let half = cuts / 2;
    let shares = (1..=half)
        .map(|k| [k, k + half, k + cuts, k + cuts + half])
        .collect();
    Ok(PizzaAssignment {
        people: half,
        shares,
        totals: Vec::new(),
    })
}

/// The assignment together with each person's total slice area.
pub fn pizza_shares(cfg: &PizzaConfig) -> Result<PizzaAssignment> {
    let cfg = cfg.validated()?;
    let slices = fan_slices(&cfg.circle(), cfg.cut_point, cfg.cuts, cfg.phase)?;
    let mut assignment = pizza_assignment(cfg.cuts)?;
    assignment.totals = assignment
        .shares
        .iter()
        .map(|share| share.iter().map(|&i| slices.areas[(i - 1) as usize]).sum())
        .collect();
    Ok(assignment)
}

/// Verifies the equal-share claim: every person's four slices total
/// 2πR²/n, within tol·πR².
pub fn verify_pizza(cfg: &PizzaConfig, tol: f64) -> Result<VerificationReport> {
    let tol = check_tol(tol)?;
    let cfg = cfg.validated()?;
    let assignment = pizza_shares(&cfg)?;
    let target = 2.0 * PI * cfg.radius * cfg.radius / cfg.cuts as f64;
    let residuals = assignment
        .totals
        .iter()
        .enumerate()
        .map(|(i, total)| Residual {
            label: format!("total(person {}) - 2 pi R^2/{}", i + 1, cfg.cuts),
            value: total - target,
        })
        .collect();
    let abs_tol = tol * PI * cfg.radius * cfg.radius;
    Ok(VerificationReport::new(
        "pizza",
        abs_tol,
        residuals,
        ConfigEcho::Disk(cfg),
    ))
}

/// Triangle identity from the boundary-polygon proof: for P on ∂D̃ and
/// 1 ≤ k ≤ n/2−1, the triangles over opposite polygon sides based at P and
/// at O have equal summed area. Exposed for the property suite.
pub fn lemma2_triangle_residual(
    vertices: &[Point],
    center: Point,
    p: Point,
    k: usize,
) -> f64 {
    let n = vertices.len();
    let at = |i: usize| vertices[(i - 1) % n];
    let lhs = triangle_area(at(k), at(k + 1), p) + triangle_area(at(k + n / 2), at(k + n / 2 + 1), p);
    let rhs = triangle_area(at(k), at(k + 1), center)
        + triangle_area(at(k + n / 2), at(k + n / 2 + 1), center);
    lhs - rhs
}

/// True when the cut point sits within the boundary-snap window of ∂D̃.
pub fn is_boundary_config(cfg: &BaumkuchenConfig) -> bool {
    (cfg.center.distance(cfg.cut_point) - cfg.inner_radius).abs()
        <= ON_CIRCLE_REL * cfg.inner_radius
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Angle;

    fn annulus(r_out: f64, r_in: f64, p: (f64, f64), n: u32, phase: f64) -> BaumkuchenConfig {
        BaumkuchenConfig::new(
            Point::new(0.0, 0.0),
            r_out,
            r_in,
            Point::new(p.0, p.1),
            n,
            Angle::new(phase).unwrap(),
        )
        .unwrap()
    }

    #[test]
    fn theorem1_concentric_and_offset() {
        let report = verify_theorem1(&annulus(2.0, 1.0, (0.0, 0.0), 4, 0.0), 1e-10).unwrap();
        assert!(report.passed);
        assert!(report.max_abs_residual() < 1e-12);

        let report = verify_theorem1(&annulus(2.0, 1.0, (0.4, 0.3), 4, 0.2), 1e-10).unwrap();
        assert!(report.passed);
        assert!(report.max_abs_residual() < 1e-10 * PI * 4.0);
        assert_eq!(report.residuals.len(), 4);
    }

    #[test]
    fn theorem1_boundary_point_is_a_lemma3_instance() {
        let report = verify_theorem1(&annulus(1.0, 0.7, (0.7, 0.0), 6, 0.0), 1e-10).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn decompose_residuals_vanish() {
        let cfg = annulus(2.0, 1.0, (0.4, 0.3), 4, 0.2);
        let report = decompose_via_op(&cfg, 1e-12).unwrap();
        assert!(report.passed);
        assert!(report.max_abs_residual() <= 1e-12 * PI * 4.0);
    }

    #[test]
    fn decompose_rejects_centered_point() {
        let cfg = annulus(2.0, 1.0, (0.0, 0.0), 4, 0.2);
        assert_eq!(
            decompose_via_op(&cfg, 1e-12).unwrap_err(),
            Error::DegenerateDecomposition
        );
    }

    #[test]
    fn decompose_b1_pairs_follow_the_sub_annulus() {
        // pieces of B₁ pair-sum to π(R² − |OP|²)/n
        let cfg = annulus(2.0, 1.0, (0.4, 0.3), 4, 0.0);
        let d = cfg.center.distance(cfg.cut_point);
        let b1 = full_partition(&BaumkuchenConfig {
            inner_radius: d,
            ..cfg
        })
        .unwrap();
        let share = PI * (4.0 - d * d) / 4.0;
        for k in 0..4 {
            assert!((b1.pieces[k] + b1.pieces[k + 4] - share).abs() < 1e-12);
        }
    }

    #[test]
    fn decompose_degenerate_b2_reduces_to_theorem1() {
        let cfg = annulus(1.0, 0.7, (0.7, 0.0), 6, 0.3);
        let report = decompose_via_op(&cfg, 1e-12).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn lemma2_square_case() {
        for phase in [0.0, 0.4, 1.9, 3.7] {
            let cfg = annulus(2.0, 1.0, (1.0, 0.0), 4, phase);
            let report = verify_lemma2(&cfg, 1e-10).unwrap();
            assert!(report.passed, "phase {phase}: {report:?}");
            // n regularity rows + n/2 − 1 pair rows + 1 end row
            assert_eq!(report.residuals.len(), 4 + 1 + 1);
        }
    }

    #[test]
    fn lemma2_rejects_interior_point() {
        let cfg = annulus(2.0, 1.0, (0.4, 0.3), 4, 0.2);
        assert_eq!(verify_lemma2(&cfg, 1e-10).unwrap_err(), Error::NotBoundaryCase);
        assert_eq!(verify_lemma3(&cfg, 1e-10).unwrap_err(), Error::NotBoundaryCase);
    }

    #[test]
    fn lemma3_examples() {
        let report = verify_lemma3(&annulus(2.0, 1.0, (1.0, 0.0), 4, 0.0), 1e-10).unwrap();
        assert!(report.passed);
        // rotational symmetry: a different boundary point passes identically
        let report = verify_lemma3(&annulus(2.0, 1.0, (0.0, -1.0), 4, 0.0), 1e-10).unwrap();
        assert!(report.passed);
        let report = verify_lemma3(&annulus(2.0, 1.0, (1.0, 0.0), 8, 0.77), 1e-10).unwrap();
        assert!(report.passed);
    }

    #[test]
    fn pizza_assignment_examples() {
        let a = pizza_assignment(4).unwrap();
        assert_eq!(a.people, 2);
        assert_eq!(a.shares, vec![[1, 3, 5, 7], [2, 4, 6, 8]]);
        let a = pizza_assignment(8).unwrap();
        assert_eq!(a.shares[2], [3, 7, 11, 15]);
        assert!(matches!(pizza_assignment(6), Err(Error::InvalidCuts(_))));
        // shares partition {1‥2n}
        let a = pizza_assignment(16).unwrap();
        let mut seen: Vec<u32> = a.shares.iter().flatten().copied().collect();
        seen.sort_unstable();
        assert_eq!(seen, (1..=32).collect::<Vec<_>>());
    }

    #[test]
    fn pizza_centered_split_is_exact() {
        let cfg = PizzaConfig::new(
            Point::new(0.0, 0.0),
            1.0,
            Point::new(0.0, 0.0),
            4,
            Angle::ZERO,
        )
        .unwrap();
        let shares = pizza_shares(&cfg).unwrap();
        for total in &shares.totals {
            assert!((total - PI / 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn pizza_offset_point() {
        let cfg = PizzaConfig::new(
            Point::new(0.0, 0.0),
            1.0,
            Point::new(0.35, 0.2),
            4,
            Angle::new(0.3).unwrap(),
        )
        .unwrap();
        let report = verify_pizza(&cfg, 1e-10).unwrap();
        assert!(report.passed);
        let shares = pizza_shares(&cfg).unwrap();
        assert_eq!(shares.totals.len(), 2);
        for total in &shares.totals {
            assert!((total - PI / 2.0).abs() < 1e-10);
        }
    }

    // Frozen from the quadrature oracle (abs_tol 1e-12): 16 slice areas for
    // R = 1, P = (0.6, 0.1), n = 8, phase 0.
    #[test]
    fn pizza_n8_slices_match_quadrature_and_split_evenly() {
        let cfg = PizzaConfig::new(
            Point::new(0.0, 0.0),
            1.0,
            Point::new(0.6, 0.1),
            8,
            Angle::ZERO,
        )
        .unwrap();
        let slices = fan_slices(&cfg.circle(), cfg.cut_point, cfg.cuts, cfg.phase).unwrap();
        let expect = [
            0.030_384_863_344_059_5,
            0.033_938_117_023_662_9,
            0.045_839_561_777_527_0,
            0.073_651_984_419_445_7,
            0.131_634_476_155_977_4,
            0.231_368_675_579_285_7,
            0.358_367_151_447_672_6,
            0.465_945_332_175_043_7,
            0.503_631_498_191_117_6,
            0.452_443_684_838_608_4,
            0.338_029_613_500_035_4,
            0.212_877_003_700_440_1,
            0.119_747_325_706_293_9,
            0.067_647_685_955_891_3,
            0.043_161_836_672_212_9,
            0.032_923_843_102_519_0,
        ];
        for (got, want) in slices.areas.iter().zip(expect) {
            assert!((got - want).abs() < 1e-9, "{got} vs {want}");
        }
        let report = verify_pizza(&cfg, 1e-10).unwrap();
        assert!(report.passed);
        for r in &report.residuals {
            assert!(r.value.abs() < 1e-10 * PI);
        }
    }

    #[test]
    fn pizza_rejects_bad_cuts_and_exterior_point() {
        assert!(matches!(
            PizzaConfig::new(Point::new(0.0, 0.0), 1.0, Point::new(0.0, 0.0), 6, Angle::ZERO),
            Err(Error::InvalidCuts(_))
        ));
        assert_eq!(
            PizzaConfig::new(Point::new(0.0, 0.0), 1.0, Point::new(1.0, 0.0), 4, Angle::ZERO)
                .unwrap_err(),
            Error::PointOutsideInnerDisk
        );
    }

    #[test]
    fn reports_serialize_with_stable_keys() {
        let report = verify_theorem1(&annulus(2.0, 1.0, (0.4, 0.3), 4, 0.2), 1e-10).unwrap();
        let json = serde_json::to_string(&report).unwrap();
        let identity = json.find("\"identity\"").unwrap();
        let passed = json.find("\"passed\"").unwrap();
        let tolerance = json.find("\"tolerance\"").unwrap();
        let residuals = json.find("\"residuals\"").unwrap();
        let config = json.find("\"config\"").unwrap();
        assert!(identity < passed && passed < tolerance && tolerance < residuals && residuals < config);
    }
}
