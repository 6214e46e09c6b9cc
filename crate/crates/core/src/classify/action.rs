use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::pwe::{BlochMode, ReciprocalSet};
use crate::symmetry::SymmetryElement;

/// A symmetry operation acting on plane-wave coefficients over a fixed basis.
///
/// For H(r) = sum_q h(q) exp(i 2 pi q.r), the unitary element {R|tau} gives
/// (gH)(r) = H(R^-1 (r - tau)) and the antiunitary one its complex conjugate,
/// so h'(q') = exp(-i 2 pi q'.tau) h(q) (conjugated when antiunitary) with
/// q' = R q or q' = -R q respectively.
#[derive(Debug, Clone)]
pub struct SymmetryAction {
    element: SymmetryElement,
    target: Vec<usize>,
    phase: Vec<C64>,
}

impl SymmetryAction {
    pub fn new(element: &SymmetryElement, basis: &ReciprocalSet) -> Result<Self> {
        let k = basis.bloch().in_reciprocal_units();
        let m = element.k_matrix();
        let tau = element.translation.as_f64();
        let mut target = Vec::with_capacity(basis.len());
        let mut phase = Vec::with_capacity(basis.len());
        for i in 0..basis.len() {
            let q = basis.wavevector(i);
            let qp = [m[0][0] as f64 * q[0] + m[0][1] as f64 * q[1], m[1][0] as f64 * q[0] + m[1][1] as f64 * q[1]];
            let g = [qp[0] - k[0], qp[1] - k[1]];
            let gi = [g[0].round(), g[1].round()];
            if (g[0] - gi[0]).abs() > 1e-9 || (g[1] - gi[1]).abs() > 1e-9 {
                return Err(Error::NotInLittleGroup(element.to_string()));
            }
            let j = basis
                .index_of([gi[0] as i32, gi[1] as i32])
                .ok_or_else(|| Error::BasisNotClosed(element.to_string()))?;
            target.push(j);
            let arg = -2.0 * std::f64::consts::PI * (qp[0] * tau[0] + qp[1] * tau[1]);
            phase.push(C64::from_polar(1.0, arg));
        }
        Ok(SymmetryAction { element: *element, target, phase })
    }

    pub fn element(&self) -> &SymmetryElement {
        &self.element
    }

    pub fn apply(&self, h: &[C64]) -> Vec<C64> {
        let mut out = vec![C64::new(0.0, 0.0); h.len()];
        for (i, &j) in self.target.iter().enumerate() {
            let v = if self.element.antiunitary { h[i].conj() } else { h[i] };
            out[j] = self.phase[i] * v;
        }
        out
    }
}

/// Applies a little-group element to a mode's coefficients.
pub fn apply_action(element: &SymmetryElement, mode: &BlochMode) -> Result<Vec<C64>> {
    Ok(SymmetryAction::new(element, &mode.basis)?.apply(&mode.coefficients))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpoint::BlochVector;
    use crate::symmetry::{HalfVec, PointOp};

    #[test]
    fn lattice_translation_gives_the_bloch_phase() {
        let basis = ReciprocalSet::adapted(BlochVector::X, 2);
        let t = SymmetryElement::unitary(PointOp::E, HalfVec::from_lattice([1, 0]));
        let a = SymmetryAction::new(&t, &basis).unwrap();
        let h: Vec<C64> = (0..basis.len()).map(|i| C64::new(i as f64, 1.0)).collect();
        let out = a.apply(&h);
        for (x, y) in out.iter().zip(&h) {
            assert!((x + y).norm() < 1e-12);
        }
    }

    #[test]
    fn rejects_elements_outside_the_little_group() {
        let basis = ReciprocalSet::adapted(BlochVector::X, 2);
        let c4 = SymmetryElement::unitary(PointOp::C4, HalfVec::ZERO);
        assert!(SymmetryAction::new(&c4, &basis).is_err());
    }
}
