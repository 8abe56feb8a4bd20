//! Subcommand surface over the library: compute partitions, verify the
//! identities, print the pizza assignment, run the oracles, render SVG.
//!
//! Exit codes: 0 success (and verification passed), 1 verification failed,
//! 2 invalid input, 3 numeric or convergence failure.

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;
use std::fs;
use std::path::PathBuf;

use crate::error::{Error, Result};
use crate::geom::{Angle, Point};
use crate::oracle::{mc_partition_areas, quad_slice_area, McEstimate, QUAD_ABS_TOL};
use crate::partition::{full_partition, BaumkuchenConfig, FanPartition};
use crate::render::{render_svg, RenderOptions};
use crate::theorems::{
    decompose_via_op, pizza_shares, verify_lemma2, verify_lemma3, verify_pizza, verify_theorem1,
    PizzaConfig, VerificationReport, DEFAULT_TOL,
};

/// Environment variable consulted for the default Monte Carlo seed.
pub const SEED_ENV: &str = "BAUMKUCHEN_SEED";

#[derive(Parser)]
#[command(
    name = "baumkuchen",
    version,
    about = "Equiangular fans through a point of a disk or ring: areas, identities, oracles, diagrams"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Compute the fan partition and print per-wedge areas
    Slices {
        #[command(flatten)]
        config: ConfigFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Verify an identity and exit 0 only if it holds
    Verify {
        /// Which identity to check
        #[arg(long, value_enum)]
        theorem: Theorem,
        /// Relative tolerance for the residuals
        #[arg(long, default_value_t = DEFAULT_TOL)]
        tolerance: f64,
        /// Disk radius (pizza verification only)
        #[arg(long)]
        radius: Option<f64>,
        #[command(flatten)]
        config: ConfigFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Print the equal-share slice assignment for a disk
    Pizza {
        /// Disk radius
        #[arg(long)]
        radius: Option<f64>,
        #[command(flatten)]
        config: ConfigFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Cross-check exact areas against quadrature and Monte Carlo
    Oracle {
        /// Monte Carlo sample count
        #[arg(long, default_value_t = 1_000_000)]
        samples: u64,
        /// RNG seed; defaults to $BAUMKUCHEN_SEED, then 0
        #[arg(long)]
        seed: Option<u64>,
        /// Worker threads for the Monte Carlo chunks (output-invariant)
        #[arg(long, default_value_t = 1)]
        threads: usize,
        /// Absolute tolerance per wedge for the quadrature
        #[arg(long, default_value_t = QUAD_ABS_TOL)]
        abs_tol: f64,
        #[command(flatten)]
        config: ConfigFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
    /// Write an SVG diagram of the partition
    Render {
        /// Canvas size in pixels
        #[arg(long, default_value_t = 512)]
        canvas: u32,
        #[arg(long, default_value_t = 1.5)]
        stroke_width: f64,
        /// Skip pair shading of the pieces
        #[arg(long)]
        no_shade: bool,
        /// Skip the boundary point labels
        #[arg(long)]
        no_labels: bool,
        /// Decimal places in area annotations
        #[arg(long, default_value_t = 6)]
        decimals: u32,
        #[command(flatten)]
        config: ConfigFlags,
        #[command(flatten)]
        output: OutputFlags,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum Theorem {
    Baumkuchen,
    Lemma2,
    Lemma3,
    Pizza,
    Decompose,
}

#[derive(Clone, Copy, ValueEnum, Default, PartialEq)]
enum Format {
    #[default]
    Text,
    Json,
}

#[derive(Args)]
struct OutputFlags {
    /// Output format for the emitted document
    #[arg(long, value_enum, default_value_t = Format::Text)]
    format: Format,
    /// Write the document to this path instead of standard output
    #[arg(long)]
    out: Option<PathBuf>,
}

#[derive(Args)]
struct ConfigFlags {
    /// JSON config file: {"center":[x,y],"outer_radius":R,"inner_radius":r,
    /// "point":[x,y],"cuts":n,"phase":t}
    #[arg(long)]
    config: Option<PathBuf>,
    /// Center of both circles, "x,y"
    #[arg(long, value_parser = parse_point)]
    center: Option<Point>,
    /// Outer radius R
    #[arg(long)]
    outer: Option<f64>,
    /// Inner radius r
    #[arg(long)]
    inner: Option<f64>,
    /// Cut point P, "x,y"
    #[arg(long, value_parser = parse_point)]
    point: Option<Point>,
    /// Number of cut lines n
    #[arg(long)]
    cuts: Option<u32>,
    /// Fan phase (radians unless --degrees)
    #[arg(long)]
    phase: Option<f64>,
    /// Interpret --phase in degrees
    #[arg(long)]
    degrees: bool,
}

fn parse_point(s: &str) -> std::result::Result<Point, String> {
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() != 2 {
        return Err(format!("expected \"x,y\", got {s:?}"));
    }
    let x: f64 = parts[0].trim().parse().map_err(|e| format!("{e}"))?;
    let y: f64 = parts[1].trim().parse().map_err(|e| format!("{e}"))?;
    Ok(Point::new(x, y))
}

impl ConfigFlags {
    fn phase_radians(&self) -> Option<f64> {
        self.phase
            .map(|p| if self.degrees { p.to_radians() } else { p })
    }

    /// File config merged with flag overrides; flags win with a warning.
    fn annulus(&self) -> Result<BaumkuchenConfig> {
        let file = self.load_file()?;
        let warn = |flag: &str, field: &str| {
            eprintln!("warning: --{flag} overrides {field} from the config file");
        };
        let mut center = Point::new(0.0, 0.0);
        let mut phase = 0.0;
        let (mut outer, mut inner, mut point, mut cuts) = (None, None, None, None);
        if let Some(cfg) = file {
            center = cfg.center;
            phase = cfg.phase.radians();
            outer = Some(cfg.outer_radius);
            inner = Some(cfg.inner_radius);
            point = Some(cfg.cut_point);
            cuts = Some(cfg.cuts);
        }
        if let Some(c) = self.center {
            if file.is_some() {
                warn("center", "center");
            }
            center = c;
        }
        if let Some(r) = self.outer {
            if file.is_some() {
                warn("outer", "outer_radius");
            }
            outer = Some(r);
        }
        if let Some(r) = self.inner {
            if file.is_some() {
                warn("inner", "inner_radius");
            }
            inner = Some(r);
        }
        if let Some(p) = self.point {
            if file.is_some() {
                warn("point", "point");
            }
            point = Some(p);
        }
        if let Some(n) = self.cuts {
            if file.is_some() {
                warn("cuts", "cuts");
            }
            cuts = Some(n);
        }
        if let Some(t) = self.phase_radians() {
            if file.is_some() {
                warn("phase", "phase");
            }
            phase = t;
        }
        let missing = |name: &str| Error::InvalidArgument(format!("missing --{name} (or --config)"));
        BaumkuchenConfig::new(
            center,
            outer.ok_or_else(|| missing("outer"))?,
            inner.ok_or_else(|| missing("inner"))?,
            point.ok_or_else(|| missing("point"))?,
            cuts.ok_or_else(|| missing("cuts"))?,
            Angle::new(phase)?,
        )
    }

    /// Disk config for the pizza commands; with --config the outer radius
    /// doubles as the pizza radius.
    fn pizza(&self, radius: Option<f64>) -> Result<PizzaConfig> {
        let file = self.load_file()?;
        let mut center = Point::new(0.0, 0.0);
        let mut phase = 0.0;
        let (mut r, mut point, mut cuts) = (radius, None, None);
        if let Some(cfg) = file {
            center = cfg.center;
            phase = cfg.phase.radians();
            r = r.or(Some(cfg.outer_radius));
            point = Some(cfg.cut_point);
            cuts = Some(cfg.cuts);
        }
        if let Some(c) = self.center {
            center = c;
        }
        if let Some(p) = self.point {
            point = Some(p);
        }
        if let Some(n) = self.cuts {
            cuts = Some(n);
        }
        if let Some(t) = self.phase_radians() {
            phase = t;
        }
        let missing = |name: &str| Error::InvalidArgument(format!("missing --{name} (or --config)"));
        PizzaConfig::new(
            center,
            r.ok_or_else(|| missing("radius"))?,
            point.ok_or_else(|| missing("point"))?,
            cuts.ok_or_else(|| missing("cuts"))?,
            Angle::new(phase)?,
        )
    }

    fn load_file(&self) -> Result<Option<BaumkuchenConfig>> {
        let Some(path) = &self.config else {
            return Ok(None);
        };
        let text = fs::read_to_string(path)
            .map_err(|e| Error::InvalidArgument(format!("cannot read {}: {e}", path.display())))?;
        let cfg: BaumkuchenConfig = serde_json::from_str(&text)
            .map_err(|e| Error::InvalidArgument(format!("bad config {}: {e}", path.display())))?;
        Ok(Some(cfg))
    }
}

/// Parses `args` (including argv[0]) and runs one command, returning the
/// process exit code.
pub fn run<I, T>(args: I) -> i32
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            // clap prints help/version to stdout with code 0, errors to
            // stderr with code 2
            let code = e.exit_code();
            let _ = e.print();
            return if code == 0 { 0 } else { 2 };
        }
    };
    match dispatch(cli) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            e.exit_code()
        }
    }
}

fn dispatch(cli: Cli) -> Result<i32> {
    match cli.command {
        Command::Slices { config, output } => {
            let cfg = config.annulus()?;
            let part = full_partition(&cfg)?;
            let doc = match output.format {
                Format::Json => to_json(&part)?,
                Format::Text => slices_text(&cfg, &part),
            };
            emit(&output, &doc)?;
            Ok(0)
        }
        Command::Verify {
            theorem,
            tolerance,
            radius,
            config,
            output,
        } => {
            let report = match theorem {
                Theorem::Baumkuchen => verify_theorem1(&config.annulus()?, tolerance)?,
                Theorem::Lemma2 => verify_lemma2(&config.annulus()?, tolerance)?,
                Theorem::Lemma3 => verify_lemma3(&config.annulus()?, tolerance)?,
                Theorem::Decompose => decompose_via_op(&config.annulus()?, tolerance)?,
                Theorem::Pizza => verify_pizza(&config.pizza(radius)?, tolerance)?,
            };
            let doc = match output.format {
                Format::Json => to_json(&report)?,
                Format::Text => report_text(&report),
            };
            emit(&output, &doc)?;
            Ok(if report.passed { 0 } else { 1 })
        }
        Command::Pizza {
            radius,
            config,
            output,
        } => {
            let cfg = config.pizza(radius)?;
            let assignment = pizza_shares(&cfg)?;
            let doc = match output.format {
                Format::Json => to_json(&assignment)?,
                Format::Text => {
                    let mut s = format!("people: {}\n", assignment.people);
                    for (i, (share, total)) in
                        assignment.shares.iter().zip(&assignment.totals).enumerate()
                    {
                        s.push_str(&format!(
                            "person {}: slices {:?} total {:.12}\n",
                            i + 1,
                            share,
                            total
                        ));
                    }
                    s
                }
            };
            emit(&output, &doc)?;
            Ok(0)
        }
        Command::Oracle {
            samples,
            seed,
            threads,
            abs_tol,
            config,
            output,
        } => {
            let cfg = config.annulus()?;
            let seed = match seed {
                Some(s) => s,
                None => std::env::var(SEED_ENV)
                    .ok()
                    .and_then(|v| v.parse().ok())
                    .unwrap_or(0),
            };
            if threads == 0 {
                return Err(Error::InvalidArgument("--threads must be at least 1".into()));
            }
            let doc = oracle_document(&cfg, samples, seed, threads, abs_tol)?;
            let text = match output.format {
                Format::Json => to_json(&doc)?,
                Format::Text => oracle_text(&doc),
            };
            emit(&output, &text)?;
            Ok(0)
        }
        Command::Render {
            canvas,
            stroke_width,
            no_shade,
            no_labels,
            decimals,
            config,
            output,
        } => {
            let cfg = config.annulus()?;
            let part = full_partition(&cfg)?;
            let opts = RenderOptions {
                canvas_px: canvas,
                stroke_width,
                shade_pairs: !no_shade,
                label_points: !no_labels,
                decimals,
            };
            let svg = render_svg(&cfg, &part, &opts)?;
            emit(&output, &svg)?;
            Ok(0)
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String> {
    let mut s = serde_json::to_string_pretty(value)
        .map_err(|e| Error::Numeric(format!("serialization failed: {e}")))?;
    s.push('\n');
    Ok(s)
}

fn emit(output: &OutputFlags, doc: &str) -> Result<()> {
    match &output.out {
        Some(path) => fs::write(path, doc)
            .map_err(|e| Error::InvalidArgument(format!("cannot write {}: {e}", path.display()))),
        None => {
            print!("{doc}");
            Ok(())
        }
    }
}

fn slices_text(cfg: &BaumkuchenConfig, part: &FanPartition) -> String {
    let mut s = String::new();
    s.push_str(&format!(
        "fan of {} lines through ({}, {}), phase {}\n",
        cfg.cuts,
        cfg.cut_point.x,
        cfg.cut_point.y,
        cfg.phase.radians()
    ));
    s.push_str("  k      direction      outer slice      inner slice     outer sector            piece\n");
    for k in 0..part.directions.len() {
        s.push_str(&format!(
            "{:>3} {:>14.9} {:>16.12} {:>16.12} {:>16.12} {:>16.12}\n",
            k + 1,
            part.directions[k].radians(),
            part.outer_slices[k],
            part.inner_slices[k],
            part.outer_sectors[k],
            part.pieces[k]
        ));
    }
    let sum = |v: &[f64]| v.iter().sum::<f64>();
    s.push_str(&format!(
        "sums: outer {:.12} inner {:.12} pieces {:.12}\n",
        sum(&part.outer_slices),
        sum(&part.inner_slices),
        sum(&part.pieces)
    ));
    s
}

fn report_text(report: &VerificationReport) -> String {
    let mut s = format!(
        "identity: {}\ntolerance: {:e}\n",
        report.identity, report.tolerance
    );
    for r in &report.residuals {
        s.push_str(&format!("  {:<60} {:>13.6e}\n", r.label, r.value));
    }
    s.push_str(&format!(
        "result: {}\n",
        if report.passed { "PASS" } else { "FAIL" }
    ));
    s
}

/// Per-wedge comparison of the exact pipeline against both oracles.
#[derive(Debug, Serialize)]
struct OracleDocument {
    config: BaumkuchenConfig,
    samples: u64,
    seed: u64,
    abs_tol: f64,
    wedges: Vec<OracleWedge>,
    outer_total: OracleTotal,
    inner_total: OracleTotal,
    annulus_total: OracleTotal,
}

#[derive(Debug, Serialize)]
struct OracleWedge {
    index: usize,
    exact_outer: f64,
    quad_outer: f64,
    exact_inner: f64,
    quad_inner: f64,
    exact_piece: f64,
    mc_outer: McEstimate,
    mc_inner: McEstimate,
    mc_piece: McEstimate,
}

#[derive(Debug, Serialize)]
struct OracleTotal {
    exact: f64,
    mc: McEstimate,
}

fn oracle_document(
    cfg: &BaumkuchenConfig,
    samples: u64,
    seed: u64,
    threads: usize,
    abs_tol: f64,
) -> Result<OracleDocument> {
    let part = full_partition(cfg)?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(threads)
        .build()
        .map_err(|e| Error::Numeric(format!("thread pool: {e}")))?;
    let mc = pool.install(|| mc_partition_areas(cfg, samples, seed))?;

    let step = std::f64::consts::PI / cfg.cuts as f64;
    let two_n = (2 * cfg.cuts) as usize;
    let mut wedges = Vec::with_capacity(two_n);
    for k in 0..two_n {
        let a = Angle::new(cfg.phase.radians() + k as f64 * step)?;
        let b = Angle::new(cfg.phase.radians() + (k + 1) as f64 * step)?;
        wedges.push(OracleWedge {
            index: k + 1,
            exact_outer: part.outer_slices[k],
            quad_outer: quad_slice_area(&cfg.outer_circle(), cfg.cut_point, a, b, abs_tol)?,
            exact_inner: part.inner_slices[k],
            quad_inner: quad_slice_area(&cfg.inner_circle(), cfg.cut_point, a, b, abs_tol)?,
            exact_piece: part.pieces[k],
            mc_outer: mc.outer_slices[k],
            mc_inner: mc.inner_slices[k],
            mc_piece: mc.pieces[k],
        });
    }
    Ok(OracleDocument {
        config: *cfg,
        samples,
        seed,
        abs_tol,
        wedges,
        outer_total: OracleTotal {
            exact: cfg.outer_circle().area(),
            mc: mc.outer_total,
        },
        inner_total: OracleTotal {
            exact: cfg.inner_circle().area(),
            mc: mc.inner_total,
        },
        annulus_total: OracleTotal {
            exact: cfg.annulus_area(),
            mc: mc.annulus_total,
        },
    })
}

fn oracle_text(doc: &OracleDocument) -> String {
    let mut s = format!(
        "oracle comparison: {} samples, seed {}, quadrature abs tol {:e}\n",
        doc.samples, doc.seed, doc.abs_tol
    );
    s.push_str("  k      exact outer       quad outer         mc outer      sigma      exact piece         mc piece      sigma\n");
    for w in &doc.wedges {
        s.push_str(&format!(
            "{:>3} {:>16.12} {:>16.12} {:>16.12} {:>10.3e} {:>16.12} {:>16.12} {:>10.3e}\n",
            w.index,
            w.exact_outer,
            w.quad_outer,
            w.mc_outer.mean,
            w.mc_outer.std_error,
            w.exact_piece,
            w.mc_piece.mean,
            w.mc_piece.std_error
        ));
    }
    s.push_str(&format!(
        "totals: outer {:.12} (mc {:.12}) inner {:.12} (mc {:.12}) ring {:.12} (mc {:.12})\n",
        doc.outer_total.exact,
        doc.outer_total.mc.mean,
        doc.inner_total.exact,
        doc.inner_total.mc.mean,
        doc.annulus_total.exact,
        doc.annulus_total.mc.mean
    ));
    s
}
