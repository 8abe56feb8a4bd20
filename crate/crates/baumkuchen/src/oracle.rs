//! Independent numerical oracles for the exact area pipeline.
//!
//! Two routes that share no formulas with the triangle + segment
//! decomposition: adaptive Simpson quadrature of the polar wedge integral
//! ½∫ t(θ)² dθ, and seeded rejection Monte Carlo over the bounding square.
//! The Monte Carlo sampler is chunked on fixed 2¹⁶-sample substreams of a
//! counter-based generator (ChaCha8, one stream per chunk), so estimates are
//! bit-identical for any number of worker threads.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use std::f64::consts::{PI, TAU};

use crate::error::{Error, Result};
use crate::geom::{normalize_rad, ray_exit_distance, Angle, Circle, Point};
use crate::partition::BaumkuchenConfig;

/// Default absolute tolerance per wedge for the quadrature oracle.
pub const QUAD_ABS_TOL: f64 = 1e-12;

/// Maximum bisection depth of the adaptive Simpson recursion.
pub const QUAD_MAX_DEPTH: u32 = 60;

/// Samples per Monte Carlo chunk; one RNG substream per chunk.
pub const MC_CHUNK: u64 = 1 << 16;

/// Adaptive Simpson estimate of the slice area ½∫_{θ₁}^{θ₂} t(θ)² dθ, where
/// t is the ray exit distance from `p`. Deliberately avoids the triangle and
/// segment formulas so it can serve as an independent check on them.
pub fn quad_slice_area(
    circle: &Circle,
    p: Point,
    theta1: Angle,
    theta2: Angle,
    abs_tol: f64,
) -> Result<f64> {
    if !(abs_tol.is_finite() && abs_tol > 0.0) {
        return Err(Error::InvalidArgument(
            "quadrature tolerance must be finite and positive".into(),
        ));
    }
    if !circle.contains(p) {
        return Err(Error::OutsideCircle);
    }
    let a = theta1.radians();
    let raw_span = theta2.radians() - a;
    let span = if raw_span > 0.0 && raw_span <= TAU {
        raw_span
    } else {
        normalize_rad(raw_span)
    };
    if span <= 0.0 || span > TAU {
        return Err(Error::InvalidArgument(
            "integration span must lie in (0, 2π] after normalization".into(),
        ));
    }
    let b = a + span;

    let f = |theta: f64| -> Result<f64> {
        let t = ray_exit_distance(circle, p, Angle::new(theta)?)?;
        Ok(0.5 * t * t)
    };
    let m = 0.5 * (a + b);
    let (fa, fm, fb) = (f(a)?, f(m)?, f(b)?);
    let whole = simpson(a, b, fa, fm, fb);
    adaptive(&f, a, m, b, fa, fm, fb, whole, abs_tol, QUAD_MAX_DEPTH)
}

fn simpson(a: f64, b: f64, fa: f64, fm: f64, fb: f64) -> f64 {
    (b - a) / 6.0 * (fa + 4.0 * fm + fb)
}

#[allow(clippy::too_many_arguments)]
fn adaptive<F>(
    f: &F,
    a: f64,
    m: f64,
    b: f64,
    fa: f64,
    fm: f64,
    fb: f64,
    whole: f64,
    eps: f64,
    depth: u32,
) -> Result<f64>
where
    F: Fn(f64) -> Result<f64>,
{
    let lm = 0.5 * (a + m);
    let rm = 0.5 * (m + b);
    let (flm, frm) = (f(lm)?, f(rm)?);
    let left = simpson(a, m, fa, flm, fm);
    let right = simpson(m, b, fm, frm, fb);
    let delta = left + right - whole;
    if delta.abs() <= 15.0 * eps {
        return Ok(left + right + delta / 15.0);
    }
    if depth == 0 {
        return Err(Error::Convergence);
    }
    let half = 0.5 * eps;
    Ok(adaptive(f, a, lm, m, fa, flm, fm, left, half, depth - 1)?
        + adaptive(f, m, rm, b, fm, frm, fb, right, half, depth - 1)?)
}

/// One Monte Carlo area estimate with its binomial standard error.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct McEstimate {
    pub mean: f64,
    pub std_error: f64,
    pub samples: u64,
    pub seed: u64,
    /// Raw hit count behind the estimate.
    pub hits: u64,
}

impl McEstimate {
    fn from_hits(hits: u64, samples: u64, seed: u64, square_area: f64) -> Self {
        let p = hits as f64 / samples as f64;
        McEstimate {
            mean: p * square_area,
            std_error: square_area * (p * (1.0 - p) / samples as f64).sqrt(),
            samples,
            seed,
            hits,
        }
    }
}

/// Per-wedge Monte Carlo estimates for the outer slices, inner slices and
/// annulus pieces, plus whole-region totals.
#[derive(Debug, Clone, Serialize)]
pub struct McPartitionAreas {
    pub outer_slices: Vec<McEstimate>,
    pub inner_slices: Vec<McEstimate>,
    pub pieces: Vec<McEstimate>,
    pub outer_total: McEstimate,
    pub inner_total: McEstimate,
    pub annulus_total: McEstimate,
}

#[derive(Clone)]
struct Counts {
    outer: Vec<u64>,
    inner: Vec<u64>,
    piece: Vec<u64>,
    outer_total: u64,
    inner_total: u64,
    annulus_total: u64,
}

impl Counts {
    fn zero(two_n: usize) -> Self {
        Counts {
            outer: vec![0; two_n],
            inner: vec![0; two_n],
            piece: vec![0; two_n],
            outer_total: 0,
            inner_total: 0,
            annulus_total: 0,
        }
    }

    fn absorb(&mut self, other: &Counts) {
        for (a, b) in self.outer.iter_mut().zip(&other.outer) {
            *a += b;
        }
        for (a, b) in self.inner.iter_mut().zip(&other.inner) {
            *a += b;
        }
        for (a, b) in self.piece.iter_mut().zip(&other.piece) {
            *a += b;
        }
        self.outer_total += other.outer_total;
        self.inner_total += other.inner_total;
        self.annulus_total += other.annulus_total;
    }
}

/// Uniform rejection sampling over the bounding square of the outer disk.
///
/// Membership in the ring excludes the open inner disk, so every in-disk
/// sample lands in exactly one of "inner" and "piece" and the classified
/// counts add up without discrepancy. Samples exactly on a cut line go to
/// the lower wedge index. Deterministic for fixed (config, samples, seed)
/// regardless of thread count.
pub fn mc_partition_areas(
    cfg: &BaumkuchenConfig,
    samples: u64,
    seed: u64,
) -> Result<McPartitionAreas> {
    let cfg = cfg.validated()?;
    if samples < 10_000 {
        return Err(Error::InvalidArgument(
            "Monte Carlo needs at least 10^4 samples".into(),
        ));
    }
    let two_n = (2 * cfg.cuts) as usize;
    let chunks = samples.div_ceil(MC_CHUNK);
    let per_chunk: Vec<Counts> = (0..chunks)
        .into_par_iter()
        .map(|chunk| {
            let count = MC_CHUNK.min(samples - chunk * MC_CHUNK);
            sample_chunk(&cfg, seed, chunk, count)
        })
        .collect();
    // integer counts folded in chunk order: identical for any parallelism
    let mut total = Counts::zero(two_n);
    for c in &per_chunk {
        total.absorb(c);
    }

    let square_area = 4.0 * cfg.outer_radius * cfg.outer_radius;
    let est = |hits: u64| McEstimate::from_hits(hits, samples, seed, square_area);
    Ok(McPartitionAreas {
        outer_slices: total.outer.iter().map(|&h| est(h)).collect(),
        inner_slices: total.inner.iter().map(|&h| est(h)).collect(),
        pieces: total.piece.iter().map(|&h| est(h)).collect(),
        outer_total: est(total.outer_total),
        inner_total: est(total.inner_total),
        annulus_total: est(total.annulus_total),
    })
}

fn sample_chunk(cfg: &BaumkuchenConfig, seed: u64, chunk: u64, count: u64) -> Counts {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    rng.set_stream(chunk);
    let two_n = (2 * cfg.cuts) as usize;
    let mut counts = Counts::zero(two_n);

    let cx = cfg.center.x;
    let cy = cfg.center.y;
    let big_r = cfg.outer_radius;
    let r2_outer = big_r * big_r;
    let r2_inner = cfg.inner_radius * cfg.inner_radius;
    let p = cfg.cut_point;
    let phase = cfg.phase.radians();
    let step = PI / cfg.cuts as f64;

    for _ in 0..count {
        let x = cx - big_r + 2.0 * big_r * rng.gen::<f64>();
        let y = cy - big_r + 2.0 * big_r * rng.gen::<f64>();
        let dx = x - cx;
        let dy = y - cy;
        let d2 = dx * dx + dy * dy;
        if d2 > r2_outer {
            continue;
        }
        let rel = normalize_rad((y - p.y).atan2(x - p.x) - phase);
        let mut idx = ((rel / step) as usize).min(two_n - 1);
        if idx as f64 * step == rel {
            // sample exactly on a cut line: lower wedge index
            idx = (idx + two_n - 1) % two_n;
        }
        counts.outer[idx] += 1;
        counts.outer_total += 1;
        if d2 < r2_inner {
            counts.inner[idx] += 1;
            counts.inner_total += 1;
        } else {
            counts.piece[idx] += 1;
            counts.annulus_total += 1;
        }
    }
    counts
}
