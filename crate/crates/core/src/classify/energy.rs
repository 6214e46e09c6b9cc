use num_complex::Complex64 as C64;

use crate::classify::subspace::orthonormalize;
use crate::lattice::LatticeConfig;
use crate::pwe::BlochMode;

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-12 {
        1.0
    } else {
        x.sin() / x
    }
}

/// Integral over the rectangle of size d_x by d_y centred at `center` of exp(i 2 pi G.r).
fn rod_transform(cfg: &LatticeConfig, g: [i32; 2], center: [f64; 2]) -> C64 {
    let pi = std::f64::consts::PI;
    let (gx, gy) = (g[0] as f64, g[1] as f64);
    let phase = C64::from_polar(1.0, 2.0 * pi * (gx * center[0] + gy * center[1]));
    phase * cfg.d_x * cfg.d_y * sinc(pi * gx * cfg.d_x) * sinc(pi * gy * cfg.d_y)
}

/// Integral of |H|^2 over a rod for H = sum_i c_i exp(i 2 pi q_i.r).
fn rod_energy(
    cfg: &LatticeConfig,
    mode_vectors: &[Vec<C64>],
    basis: &crate::pwe::ReciprocalSet,
    center: [f64; 2],
) -> f64 {
    let n = basis.len();
    let mut total = 0.0;
    for h in mode_vectors {
        let mut acc = C64::new(0.0, 0.0);
        for a in 0..n {
            if h[a].norm() < 1e-14 {
                continue;
            }
            let ka = basis.get(a);
            for b in 0..n {
                let kb = basis.get(b);
                acc += h[a].conj() * h[b] * rod_transform(cfg, [kb[0] - ka[0], kb[1] - ka[1]], center);
            }
        }
        total += acc.re;
    }
    total
}

/// |H_z|^2 integrated over the gain rod and over the loss rod, summed over an
/// orthonormal basis of the span of `modes`.
pub fn rod_energies(cfg: &LatticeConfig, modes: &[&BlochMode]) -> (f64, f64) {
    let q = orthonormalize(&modes.iter().map(|m| m.coefficients.clone()).collect::<Vec<_>>());
    let basis = &modes[0].basis;
    (rod_energy(cfg, &q, basis, [0.0, 0.0]), rod_energy(cfg, &q, basis, [0.5, 0.5]))
}

/// Gain-rod over loss-rod field energy; 1 for modes that PT symmetry maps onto themselves.
pub fn rod_energy_ratio(cfg: &LatticeConfig, modes: &[&BlochMode]) -> f64 {
    let (g, l) = rod_energies(cfg, modes);
    g / l
}
