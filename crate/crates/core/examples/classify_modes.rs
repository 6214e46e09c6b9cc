//! Degeneracy clusters, PT pairs and corepresentation labels in the frequency
//! windows discussed for Γ, X and M.
//!
//!     cargo run --example classify_modes

use ptcrystal::classify::{classify_solution, rod_energy_ratio, BlockKind, ClassifyOptions};
use ptcrystal::kpoint::BlochVector;
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{solve, SolveOptions};

fn main() -> ptcrystal::Result<()> {
    let cfg = LatticeConfig::default();
    let windows = [
        ("Γ", BlochVector::GAMMA, 0.45, 0.55),
        ("X", BlochVector::X, 0.2, 0.3),
        ("X", BlochVector::X, 0.5, 0.6),
        ("M", BlochVector::M, 0.33, 0.37),
        ("M", BlochVector::M, 0.75, 0.82),
    ];
    for (name, k, lo, hi) in windows {
        let sol = solve(&cfg, k, &SolveOptions::bands(30))?;
        let c = classify_solution(&sol, &ClassifyOptions::window(lo, hi))?;
        println!("{name} [{lo}, {hi}]: {} PT pairs, real clusters {:?}", c.pair_count(), c.real_cluster_sizes());
        for b in &c.blocks {
            let modes: Vec<_> = b.modes.iter().map(|&i| &sol.modes[i]).collect();
            let extra = match b.kind {
                BlockKind::Real => format!("gain/loss rod energy {:.6}", rod_energy_ratio(&cfg, &modes)),
                BlockKind::PtPair => format!("Im {:+.3e}", b.omega[1]),
            };
            println!(
                "  {:?} x{} at {:.7}: {} ~ {{{}}}  mismatch {:.1e}  {extra}",
                b.kind,
                b.dim(),
                b.omega[0],
                b.label.label.as_deref().unwrap_or("?"),
                b.label.equivalents.join(", "),
                b.label.confidence,
            );
        }
    }
    Ok(())
}
