//! Machine-verify the pair-sum identity for ring pieces, plus the proof
//! decomposition through the disk on radius OP.
//!
//! ```bash
//! cargo run --example verify_baumkuchen
//! ```

use baumkuchen::{decompose_via_op, verify_theorem1, Angle, BaumkuchenConfig, Point};

fn main() {
    let cfg = BaumkuchenConfig::new(
        Point::new(0.0, 0.0),
        2.0,
        1.0,
        Point::new(0.4, 0.3),
        4,
        Angle::new(0.2).unwrap(),
    )
    .expect("valid configuration");

    let report = verify_theorem1(&cfg, 1e-10).expect("verification");
    println!("identity: {} (tolerance {:.3e})", report.identity, report.tolerance);
    for r in &report.residuals {
        println!("  {:<44} {:>12.3e}", r.label, r.value);
    }
    println!("=> {}\n", if report.passed { "PASS" } else { "FAIL" });

    // the proof splits the ring along the circle through P: B = B1 \ B2,
    // and both sub-rings have P on their inner boundary
    let report = decompose_via_op(&cfg, 1e-12).expect("decomposition");
    println!(
        "decomposition via the disk on OP: max |residual| = {:.3e}",
        report.max_abs_residual()
    );
    println!("=> {}", if report.passed { "PASS" } else { "FAIL" });
}
