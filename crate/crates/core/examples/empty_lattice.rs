//! Homogeneous medium: the solver reproduces the folded light lines.
//!
//!     cargo run --example empty_lattice

use ptcrystal::kpoint::BlochVector;
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{solve, SolveOptions};

fn main() -> ptcrystal::Result<()> {
    let cfg = LatticeConfig::empty(2.0, 7);
    for (name, k) in [("Γ", BlochVector::GAMMA), ("X", BlochVector::X), ("M", BlochVector::M)] {
        let sol = solve(&cfg, k, &SolveOptions::eigenvalues_only(Some(13)))?;
        let mut exact: Vec<f64> = (0..sol.basis.len())
            .map(|i| {
                let q = sol.basis.wavevector(i);
                q[0].hypot(q[1]) / cfg.n_r
            })
            .collect();
        exact.sort_by(f64::total_cmp);
        println!("{name} ({} plane waves)", sol.basis.len());
        for (w, e) in sol.omegas().iter().zip(&exact) {
            println!("  {:.10}  |k+K|/n = {e:.10}  diff {:.1e}", w.re, (w.re - e).abs());
        }
    }
    Ok(())
}
