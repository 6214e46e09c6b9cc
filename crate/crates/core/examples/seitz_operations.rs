//! Seitz algebra of the magnetic group and the action of its elements on
//! plane-wave coefficients.
//!
//!     cargo run --example seitz_operations

use num_complex::Complex64 as C64;
use ptcrystal::classify::SymmetryAction;
use ptcrystal::kpoint::{BlochVector, HighSymmetryPoint};
use ptcrystal::pwe::ReciprocalSet;
use ptcrystal::symmetry::{HalfVec, LittleGroup, PointOp, SymmetryElement};

fn main() -> ptcrystal::Result<()> {
    let xi = SymmetryElement::xi();
    let c4 = SymmetryElement::unitary(PointOp::C4, HalfVec::ZERO);
    println!("xi = {xi}, xi^2 = {}", xi.square());
    println!("xi C4 = {}, (xi C4)^2 = {}", xi.compose(&c4), xi.compose(&c4).square());

    let x = LittleGroup::at(HighSymmetryPoint::X);
    println!("\nconjugation by the half shift at X:");
    for i in 0..x.unitary_count() {
        println!("  {:>6} -> {}", x.label(i), x.label(x.shift_conjugate(i)));
    }

    let basis = ReciprocalSet::adapted(BlochVector::GAMMA, 1);
    let mut h = vec![C64::new(0.0, 0.0); basis.len()];
    h[basis.index_of([1, 0]).unwrap()] = C64::new(1.0, 0.0);
    println!("\nplane wave K = (1, 0) at Γ:");
    for e in [xi, c4] {
        let out = SymmetryAction::new(&e, &basis)?.apply(&h);
        for (i, v) in out.iter().enumerate().filter(|(_, v)| v.norm() > 1e-12) {
            println!("  {e}: K = {:?}, coefficient {:.3}", basis.get(i), v);
        }
    }
    Ok(())
}
