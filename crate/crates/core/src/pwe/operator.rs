use std::sync::Arc;

use faer::Mat;
use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::kpoint::BlochVector;
use crate::lattice::{InversePermittivity, LatticeConfig};
use crate::pwe::basis::ReciprocalSet;

/// The TE master operator Theta[K, K'] = eta(K - K') (k + K).(k + K') in a plane-wave basis.
///
/// Its eigenvalues are (omega Lambda / 2 pi c)^2.
#[derive(Debug, Clone)]
pub struct TeOperator {
    basis: Arc<ReciprocalSet>,
    matrix: Mat<C64>,
    hermitian: bool,
}

impl TeOperator {
    /// Assembles the operator on the k-adapted basis.
    pub fn assemble(config: &LatticeConfig, k: BlochVector) -> Result<Self> {
        config.validate()?;
        let basis = Arc::new(ReciprocalSet::adapted(k, config.truncation));
        Ok(Self::assemble_on(config, basis))
    }

    /// Assembles the operator on an explicit basis.
    pub fn assemble_on(config: &LatticeConfig, basis: Arc<ReciprocalSet>) -> Self {
        let mut eta = InversePermittivity::new(config);
        let n = basis.len();
        let q: Vec<[f64; 2]> = (0..n).map(|i| basis.wavevector(i)).collect();
        let mut matrix = Mat::<C64>::zeros(n, n);
        for i in 0..n {
            let gi = basis.get(i);
            for j in 0..n {
                let gj = basis.get(j);
                let e = eta.get([gi[0] - gj[0], gi[1] - gj[1]]);
                matrix[(i, j)] = e * (q[i][0] * q[j][0] + q[i][1] * q[j][1]);
            }
        }
        TeOperator { basis, matrix, hermitian: config.is_hermitian() }
    }

    pub fn basis(&self) -> &Arc<ReciprocalSet> {
        &self.basis
    }

    pub fn matrix(&self) -> &Mat<C64> {
        &self.matrix
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn is_hermitian(&self) -> bool {
        self.hermitian
    }

    pub fn frobenius_norm(&self) -> f64 {
        self.matrix.norm_l2()
    }

    /// Diagonal gauge f_K = exp(-i pi (m + n) / 2) that makes F^-1 Theta F real.
    pub fn gauge(&self, i: usize) -> C64 {
        let [m, n] = self.basis.get(i);
        let quarter = (m + n).rem_euclid(4);
        match quarter {
            0 => C64::new(1.0, 0.0),
            1 => C64::new(0.0, -1.0),
            2 => C64::new(-1.0, 0.0),
            _ => C64::new(0.0, 1.0),
        }
    }

    /// F^-1 Theta F, which is exactly real because the rod pattern is PT symmetric.
    /// Returns the real matrix and the largest imaginary part that was discarded.
    pub fn real_form(&self) -> (Mat<f64>, f64) {
        let n = self.dim();
        let mut dropped = 0.0f64;
        let f: Vec<C64> = (0..n).map(|i| self.gauge(i)).collect();
        let m = Mat::<f64>::from_fn(n, n, |i, j| {
            let v = f[i].conj() * self.matrix[(i, j)] * f[j];
            dropped = dropped.max(v.im.abs());
            v.re
        });
        (m, dropped)
    }

    /// ||Theta h - lambda h||_2 for a coefficient vector.
    pub fn residual(&self, lambda: C64, h: &[C64]) -> f64 {
        let n = self.dim();
        let mut acc = 0.0;
        for i in 0..n {
            let mut s = -lambda * h[i];
            for (j, hj) in h.iter().enumerate() {
                s += self.matrix[(i, j)] * hj;
            }
            acc += s.norm_sqr();
        }
        acc.sqrt()
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn real_form_is_real() {
        let cfg = LatticeConfig { truncation: 3, delta_n: 0.2, ..Default::default() };
        for k in [BlochVector::GAMMA, BlochVector::X, BlochVector::M, BlochVector::new(0.37, 0.81)] {
            let op = TeOperator::assemble(&cfg, k).unwrap();
            let (_, dropped) = op.real_form();
            assert!(dropped < 1e-15, "dropped {dropped}");
        }
    }

    #[test]
    fn hermitian_without_gain() {
        let cfg = LatticeConfig { truncation: 2, n_i: 0.0, ..Default::default() };
        let op = TeOperator::assemble(&cfg, BlochVector::new(0.2, 0.1)).unwrap();
        let m = op.matrix();
        for i in 0..op.dim() {
            for j in 0..op.dim() {
                assert!((m[(i, j)] - m[(j, i)].conj()).norm() < 1e-15);
            }
        }
    }
}
