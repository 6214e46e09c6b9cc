//! Builds the admissible corepresentations at X and M, prints a few matrices
//! in row convention and checks the tabulated equivalences.
//!
//!     cargo run --example corepresentations

use num_complex::Complex64 as C64;
use ptcrystal::corep::{corep_catalog, corep_equivalent, multiplication_defect, CMat, Corepresentation};
use ptcrystal::kpoint::HighSymmetryPoint;
use ptcrystal::symmetry::LittleGroup;

fn find<'a>(catalog: &'a [Corepresentation], name: &str) -> &'a Corepresentation {
    catalog.iter().find(|c| c.name == name).expect("catalog entry")
}

fn main() -> ptcrystal::Result<()> {
    for p in [HighSymmetryPoint::X, HighSymmetryPoint::M] {
        let group = LittleGroup::at(p);
        let catalog = corep_catalog(&group, true)?;
        println!("{}:", p.symbol());
        for c in &catalog {
            println!(
                "  {:<6} type ({}) from {:<8} dim {}  defect {:.1e}",
                c.label(),
                c.kind,
                c.source.join("+"),
                c.dim(),
                multiplication_defect(&group, &c.matrices)
            );
        }
        let first = &catalog[0];
        for l in ["C4", "mx", "xi", "mux"] {
            if let Some(m) = first.matrix_by_label(l) {
                println!("  {} D({l}) = {}", first.name, m.transpose());
            }
        }
    }

    // witnesses, written in row convention; the column-convention witness is the conjugate
    let x = LittleGroup::at(HighSymmetryPoint::X);
    let cx = corep_catalog(&x, true)?;
    let u = CMat::from_real(&[&[0.0, -1.0], &[1.0, 0.0]]).conj();
    for (a, b) in [("Γ5", "Γ7"), ("Γ6", "Γ8")] {
        let eq = corep_equivalent(&x, find(&cx, a), find(&cx, b), Some(&u))?;
        println!("X {a} ~ {b}: {:?}", eq.map(|e| e.defect));
    }
    let m = LittleGroup::at(HighSymmetryPoint::M);
    let cm = corep_catalog(&m, true)?;
    let c = C64::from_polar(1.0, 0.4);
    let mut w = CMat::zeros(2);
    w[(0, 1)] = c;
    w[(1, 0)] = c.conj();
    for (a, b) in [("Γ1", "Γ4"), ("Γ2", "Γ3")] {
        let eq = corep_equivalent(&m, find(&cm, a), find(&cm, b), Some(&w.conj()))?;
        println!("M {a} ~ {b}: {:?}", eq.map(|e| e.defect));
    }
    Ok(())
}
