//! Equiangular line fans through a point of a disk or ring ("Baumkuchen"),
//! with exact slice / sector / piece areas, machine verification of the
//! pair-sum identities behind the fair-division results for annuli and
//! pizzas, and two independent numerical oracles.
//!
//! The library is the primary interface; each major capability has a
//! runnable example under `examples/`:
//!
//! ```bash
//! cargo run --example fan_partition
//! cargo run --example verify_baumkuchen
//! cargo run --example boundary_lemmas
//! cargo run --example pizza_division
//! cargo run --example oracle_crosscheck
//! cargo run --example render_figure
//! ```
//!
//! A thin `baumkuchen` binary exposes the same operations as subcommands
//! (`slices`, `verify`, `pizza`, `oracle`, `render`) for scripting.

pub mod cli;
pub mod error;
pub mod geom;
pub mod oracle;
pub mod partition;
pub mod render;
pub mod theorems;

pub use error::{Error, Result};
pub use geom::{
    central_angle, circular_segment_area, normalize_angle, ray_exit_distance, ray_exit_point,
    sector_area, triangle_area, Angle, Circle, Point,
};
pub use oracle::{mc_partition_areas, quad_slice_area, McEstimate, McPartitionAreas};
pub use partition::{
    boundary_case_slices, boundary_points, cut_directions, fan_slices, full_partition,
    validate_config, wedge_slice_area, BaumkuchenConfig, BoundaryCaseSlices, FanPartition,
};
pub use render::{render_svg, RenderOptions};
pub use theorems::{
    decompose_via_op, pizza_assignment, pizza_shares, verify_lemma2, verify_lemma3,
    verify_pizza, verify_theorem1, PizzaAssignment, PizzaConfig, Residual, VerificationReport,
};
