//! Build an equiangular fan through a point of an annulus and print the
//! exact slice, sector and piece areas.
//!
//! ```bash
//! cargo run --example fan_partition
//! ```

use baumkuchen::{full_partition, Angle, BaumkuchenConfig, Point};

fn main() {
    let cfg = BaumkuchenConfig::new(
        Point::new(0.0, 0.0), // center O
        2.0,                  // outer radius R
        1.0,                  // inner radius r
        Point::new(0.4, 0.3), // cut point P
        4,                    // n lines -> 2n = 8 wedges
        Angle::new(0.2).unwrap(),
    )
    .expect("valid configuration");

    let part = full_partition(&cfg).expect("partition");

    println!("wedge  direction    outer slice    inner slice          piece");
    for k in 0..part.directions.len() {
        println!(
            "  A{}   {:>9.6} {:>14.10} {:>14.10} {:>14.10}",
            k + 1,
            part.directions[k].radians(),
            part.outer_slices[k],
            part.inner_slices[k],
            part.pieces[k]
        );
    }

    let outer: f64 = part.outer_slices.iter().sum();
    let inner: f64 = part.inner_slices.iter().sum();
    let pieces: f64 = part.pieces.iter().sum();
    println!("\nsums:    outer = {outer:.12}  (pi R^2 = {:.12})", cfg.outer_circle().area());
    println!("         inner = {inner:.12}  (pi r^2 = {:.12})", cfg.inner_circle().area());
    println!("        pieces = {pieces:.12}  (ring   = {:.12})", cfg.annulus_area());

    // opposite pieces always pair up to an equal share of the ring
    let n = cfg.cuts as usize;
    println!("\nopposite piece pairs (each should be ring/n = {:.12}):", cfg.annulus_area() / n as f64);
    for k in 0..n {
        println!(
            "  Piece(A{}) + Piece(A{}) = {:.12}",
            k + 1,
            k + 1 + n,
            part.pieces[k] + part.pieces[k + n]
        );
    }
}
