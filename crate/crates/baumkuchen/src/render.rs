//! Deterministic SVG diagrams of fan partitions: both circles, the n cut
//! lines through P, marked centers, optional point labels and pair-shaded
//! ring pieces. Identical inputs produce byte-identical output, so the
//! diagrams can be pinned by golden files.

use std::f64::consts::PI;
use std::fmt::Write;

use crate::error::{Error, Result};
use crate::geom::{central_angle, Point};
use crate::partition::{BaumkuchenConfig, FanPartition};

/// Fixed fill palette cycled by piece-pair index.
const PALETTE: [&str; 16] = [
    "#4e79a7", "#f28e2b", "#e15759", "#76b7b2", "#59a14f", "#edc948", "#b07aa1", "#ff9da7",
    "#9c755f", "#bab0ac", "#1f77b4", "#ff7f0e", "#2ca02c", "#d62728", "#9467bd", "#8c564b",
];

/// Rendering knobs. Canvas must be at least 64 px; decimals at most 12.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RenderOptions {
    pub canvas_px: u32,
    pub stroke_width: f64,
    pub shade_pairs: bool,
    pub label_points: bool,
    /// Decimal places used for area annotations.
    pub decimals: u32,
}

impl Default for RenderOptions {
    fn default() -> Self {
        RenderOptions {
            canvas_px: 512,
            stroke_width: 1.5,
            shade_pairs: true,
            label_points: true,
            decimals: 6,
        }
    }
}

impl RenderOptions {
    fn validated(&self) -> Result<()> {
        if self.canvas_px < 64 {
            return Err(Error::InvalidArgument(
                "canvas must be at least 64 px".into(),
            ));
        }
        if self.decimals > 12 {
            return Err(Error::InvalidArgument(
                "area annotations support at most 12 decimals".into(),
            ));
        }
        if !(self.stroke_width.is_finite() && self.stroke_width > 0.0) {
            return Err(Error::InvalidArgument(
                "stroke width must be finite and positive".into(),
            ));
        }
        Ok(())
    }
}

/// Affine map from math coordinates to pixels. The y axis is flipped once
/// here (SVG y grows downward); everything else is a uniform scale.
struct Frame {
    scale: f64,
    x0: f64,
    y1: f64,
}

impl Frame {
    fn new(cfg: &BaumkuchenConfig, canvas_px: u32) -> Self {
        // 12% margin on each side of the outer disk leaves room for labels
        let half = 1.12 * cfg.outer_radius;
        Frame {
            scale: canvas_px as f64 / (2.0 * half),
            x0: cfg.center.x - half,
            y1: cfg.center.y + half,
        }
    }

    fn x(&self, x: f64) -> f64 {
        (x - self.x0) * self.scale
    }

    fn y(&self, y: f64) -> f64 {
        (self.y1 - y) * self.scale
    }
}

fn px(v: f64) -> String {
    format!("{v:.3}")
}

/// Renders a partition as an SVG 1.1 document.
pub fn render_svg(
    cfg: &BaumkuchenConfig,
    partition: &FanPartition,
    opts: &RenderOptions,
) -> Result<String> {
    opts.validated()?;
    let cfg = cfg.validated()?;
    let n = cfg.cuts as usize;
    let two_n = 2 * n;
    if partition.outer_points.len() != two_n || partition.inner_points.len() != two_n {
        return Err(Error::InvalidArgument(
            "partition does not match the configuration's cut count".into(),
        ));
    }
    let frame = Frame::new(&cfg, opts.canvas_px);
    let canvas = opts.canvas_px;
    let mut svg = String::new();

    writeln!(svg, r#"<?xml version="1.0" encoding="UTF-8"?>"#).unwrap();
    writeln!(
        svg,
        "<!-- pixel = ((x - {}) * {}, ({} - y) * {}): one uniform scale, y flipped once -->",
        px(frame.x0),
        px(frame.scale),
        px(frame.y1),
        px(frame.scale)
    )
    .unwrap();
    writeln!(
        svg,
        r#"<svg xmlns="http://www.w3.org/2000/svg" version="1.1" viewBox="0 0 {canvas} {canvas}" width="{canvas}" height="{canvas}">"#
    )
    .unwrap();

    if opts.shade_pairs {
        let outer_circle = cfg.outer_circle();
        let inner_circle = cfg.inner_circle();
        for k in 0..two_n {
            let k1 = (k + 1) % two_n;
            let a0 = partition.outer_points[k];
            let a1 = partition.outer_points[k1];
            let b0 = partition.inner_points[k];
            let b1 = partition.inner_points[k1];
            let outer_arc = central_angle(&outer_circle, a0, a1)?.radians();
            let inner_arc = central_angle(&inner_circle, b0, b1)?.radians();
            let color = PALETTE[(k % n) % PALETTE.len()];
            let r_out = px(cfg.outer_radius * frame.scale);
            let r_in = px(cfg.inner_radius * frame.scale);
            // math-ccw arcs become sweep=0 in flipped pixel coordinates
            let mut d = String::new();
            write!(d, "M {} {}", px(frame.x(a0.x)), px(frame.y(a0.y))).unwrap();
            write!(
                d,
                " A {r_out} {r_out} 0 {} 0 {} {}",
                u8::from(outer_arc > PI),
                px(frame.x(a1.x)),
                px(frame.y(a1.y))
            )
            .unwrap();
            write!(d, " L {} {}", px(frame.x(b1.x)), px(frame.y(b1.y))).unwrap();
            write!(
                d,
                " A {r_in} {r_in} 0 {} 1 {} {}",
                u8::from(inner_arc > PI),
                px(frame.x(b0.x)),
                px(frame.y(b0.y))
            )
            .unwrap();
            write!(d, " Z").unwrap();
            writeln!(
                svg,
                r#"  <path d="{d}" fill="{color}" fill-opacity="0.55" stroke="none"><title>Piece(A{}) = {:.prec$}</title></path>"#,
                k + 1,
                partition.pieces[k],
                prec = opts.decimals as usize
            )
            .unwrap();
        }
    }

    for radius in [cfg.outer_radius, cfg.inner_radius] {
        writeln!(
            svg,
            r##"  <circle cx="{}" cy="{}" r="{}" fill="none" stroke="#222222" stroke-width="{}"/>"##,
            px(frame.x(cfg.center.x)),
            px(frame.y(cfg.center.y)),
            px(radius * frame.scale),
            px(opts.stroke_width)
        )
        .unwrap();
    }

    // the n cut lines, each drawn once between opposite exit points
    for k in 0..n {
        let a = partition.outer_points[k];
        let b = partition.outer_points[k + n];
        writeln!(
            svg,
            r##"  <line x1="{}" y1="{}" x2="{}" y2="{}" stroke="#222222" stroke-width="{}"/>"##,
            px(frame.x(a.x)),
            px(frame.y(a.y)),
            px(frame.x(b.x)),
            px(frame.y(b.y)),
            px(opts.stroke_width)
        )
        .unwrap();
    }

    let marker = |svg: &mut String, p: Point, name: &str| {
        let x = frame.x(p.x);
        let y = frame.y(p.y);
        let s = (canvas as f64) / 128.0;
        writeln!(
            svg,
            r##"  <path d="M {} {} L {} {} M {} {} L {} {}" stroke="#000000" stroke-width="{}"/>"##,
            px(x - s),
            px(y),
            px(x + s),
            px(y),
            px(x),
            px(y - s),
            px(x),
            px(y + s),
            px(opts.stroke_width)
        )
        .unwrap();
        writeln!(
            svg,
            r#"  <text x="{}" y="{}" font-size="{}" font-family="sans-serif">{name}</text>"#,
            px(x + 1.2 * s),
            px(y - 0.6 * s),
            px(3.0 * s)
        )
        .unwrap();
    };
    marker(&mut svg, cfg.center, "O");
    marker(&mut svg, cfg.cut_point, "P");

    if opts.label_points {
        let font = px(canvas as f64 / 36.0);
        for (k, p) in partition.outer_points.iter().enumerate() {
            let (lx, ly) = label_pos(&frame, &cfg, *p, 1.07);
            writeln!(
                svg,
                r#"  <text x="{lx}" y="{ly}" font-size="{font}" font-family="sans-serif" text-anchor="middle">A{}</text>"#,
                k + 1
            )
            .unwrap();
        }
        for (k, p) in partition.inner_points.iter().enumerate() {
            let (lx, ly) = label_pos(&frame, &cfg, *p, 0.82);
            writeln!(
                svg,
                r#"  <text x="{lx}" y="{ly}" font-size="{font}" font-family="sans-serif" text-anchor="middle">Ã{}</text>"#,
                k + 1
            )
            .unwrap();
        }
    }

    writeln!(svg, "</svg>").unwrap();
    Ok(svg)
}

/// Positions a boundary label radially in or out from the circle center.
fn label_pos(frame: &Frame, cfg: &BaumkuchenConfig, p: Point, factor: f64) -> (String, String) {
    let dx = p.x - cfg.center.x;
    let dy = p.y - cfg.center.y;
    let d = dx.hypot(dy);
    let (ux, uy) = if d == 0.0 { (0.0, 0.0) } else { (dx / d, dy / d) };
    let lx = cfg.center.x + ux * d * factor;
    let ly = cfg.center.y + uy * d * factor;
    (px(frame.x(lx)), px(frame.y(ly)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::geom::Angle;
    use crate::partition::full_partition;

    fn sample() -> (BaumkuchenConfig, FanPartition) {
        let cfg = BaumkuchenConfig::new(
            Point::new(0.0, 0.0),
            2.0,
            1.0,
            Point::new(0.4, 0.3),
            4,
            Angle::new(0.2).unwrap(),
        )
        .unwrap();
        let part = full_partition(&cfg).unwrap();
        (cfg, part)
    }

    #[test]
    fn structural_counts() {
        let (cfg, part) = sample();
        let svg = render_svg(&cfg, &part, &RenderOptions::default()).unwrap();
        assert_eq!(svg.matches("<circle").count(), 2);
        assert_eq!(svg.matches("<line").count(), 4);
        assert!(svg.starts_with("<?xml"));
        assert!(svg.trim_end().ends_with("</svg>"));
    }

    #[test]
    fn pair_shading_uses_n_colors() {
        let (cfg, part) = sample();
        let svg = render_svg(&cfg, &part, &RenderOptions::default()).unwrap();
        let mut used: Vec<&str> = PALETTE
            .iter()
            .copied()
            .filter(|c| svg.contains(c))
            .collect();
        used.dedup();
        assert_eq!(used.len(), 4);
        assert_eq!(svg.matches("fill-opacity").count(), 8);
    }

    #[test]
    fn byte_identical_for_identical_inputs() {
        let (cfg, part) = sample();
        let a = render_svg(&cfg, &part, &RenderOptions::default()).unwrap();
        let b = render_svg(&cfg, &part, &RenderOptions::default()).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn options_are_validated() {
        let (cfg, part) = sample();
        let mut opts = RenderOptions::default();
        opts.canvas_px = 32;
        assert!(render_svg(&cfg, &part, &opts).is_err());
        let mut opts = RenderOptions::default();
        opts.decimals = 13;
        assert!(render_svg(&cfg, &part, &opts).is_err());
    }

    #[test]
    fn labeled_points_round_trip_through_the_frame() {
        let (cfg, part) = sample();
        let frame = Frame::new(&cfg, 512);
        for p in &part.outer_points {
            let (sx, sy) = (frame.x(p.x), frame.y(p.y));
            // invert the affine map and compare within one device pixel
            let back_x = sx / frame.scale + frame.x0;
            let back_y = frame.y1 - sy / frame.scale;
            assert!((back_x - p.x).abs() * frame.scale < 1.0);
            assert!((back_y - p.y).abs() * frame.scale < 1.0);
        }
    }
}
