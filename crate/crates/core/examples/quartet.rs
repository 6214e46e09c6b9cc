//! The coalescing pair of PT pairs at M near 0.79: block structure of the
//! 4x4 corepresentation matrices in the (gain, gain, loss, loss) basis
//! (entries rounded; all are 0 or ±1 to about 1e-12).
//!
//!     cargo run --example quartet

use ptcrystal::classify::{classify_solution, verify_quartet_structure, ClassifyOptions};
use ptcrystal::kpoint::{BlochVector, HighSymmetryPoint};
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{solve, SolveOptions};
use ptcrystal::symmetry::LittleGroup;

fn main() -> ptcrystal::Result<()> {
    let sol = solve(&LatticeConfig::default(), BlochVector::M, &SolveOptions::bands(30))?;
    let c = classify_solution(&sol, &ClassifyOptions::window(0.75, 0.82))?;
    let group = LittleGroup::at(HighSymmetryPoint::M);
    for q in c.quartets() {
        let modes: Vec<_> = q.modes.iter().map(|&i| &sol.modes[i]).collect();
        let report = verify_quartet_structure(&modes, &group)?;
        println!(
            "quartet at {:.9} {:+.3e}i: passed {}, loss sign {}, max defect {:.1e}",
            q.omega[0], q.omega[1], report.passed, report.loss_sign, report.max_defect
        );
        for m in &report.matrices {
            let rows: Vec<String> = m
                .matrix
                .rows()
                .iter()
                .map(|r| r.iter().map(|z| format!("{:>3}", z.re.round() + z.im.round() + 0.0)).collect::<String>())
                .collect();
            println!("  {:>9} [{} ]", m.element, rows.join(" ;"));
        }
    }
    Ok(())
}
