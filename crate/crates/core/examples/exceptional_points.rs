//! Thresholdless transition: the exceptional point of the lowest X pair moves
//! to the zone edge as the gain/loss contrast goes to zero.
//!
//!     cargo run --release --example exceptional_points

use ptcrystal::classify::{locate_exceptional_point, pair_imaginary_part, EP_TOL_K};
use ptcrystal::kpoint::BlochVector;
use ptcrystal::lattice::LatticeConfig;

fn main() -> ptcrystal::Result<()> {
    println!("{:>8} {:>12} {:>10} {:>10}", "n_i", "Im omega(X)", "k*", "1 - k*");
    for n_i in [0.1, 0.05, 0.025, 0.0125] {
        let cfg = LatticeConfig::default().with_ni(n_i);
        let im = pair_imaginary_part(&cfg, (0, 1), BlochVector::X)?;
        let ep = locate_exceptional_point(&cfg, (0, 1), BlochVector::new(0.9, 0.0), BlochVector::X, EP_TOL_K)?;
        println!("{n_i:>8} {im:>12.4e} {:>10.6} {:>10.2e}", ep.k_star.x(), ep.distance_to_end);
    }

    let cfg = LatticeConfig::default();
    let ep = locate_exceptional_point(&cfg, (2, 3), BlochVector::new(0.9, 0.9), BlochVector::M, EP_TOL_K)?;
    println!("\nM pair at 0.3536: k* = {} after {} solves", ep.k_star, ep.evaluations);
    match locate_exceptional_point(&cfg, (0, 1), BlochVector::new(0.9, 0.9), BlochVector::M, EP_TOL_K) {
        Ok(ep) => println!("M doublet: k* = {}", ep.k_star),
        Err(e) => println!("M doublet: {e}"),
    }
    Ok(())
}
