use serde::Serialize;

use crate::classify::cluster::PAIR_TOL;
use crate::error::{Error, Result};
use crate::kpoint::BlochVector;
use crate::lattice::LatticeConfig;
use crate::pwe::frequencies;

/// Default bracket width for the bisection, in units of pi/Lambda.
pub const EP_TOL_K: f64 = 1e-5;

/// Boundary between the real and the complex regime of a band pair along a segment.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExceptionalPoint {
    pub bands: (usize, usize),
    pub k_star: BlochVector,
    /// Distance of k* from the segment end, in units of pi/Lambda.
    pub distance_to_end: f64,
    pub n_i: f64,
    pub bracket_width: f64,
    pub evaluations: usize,
}

/// Largest |Im omega| over bands `a` and `b` (0-based, in sorted order) at `k`.
pub fn pair_imaginary_part(config: &LatticeConfig, bands: (usize, usize), k: BlochVector) -> Result<f64> {
    let hi = bands.0.max(bands.1);
    let w = frequencies(config, k, Some(hi + 1))?;
    Ok(w[bands.0].im.abs().max(w[bands.1].im.abs()))
}

/// Bisects the segment `start`-`end` for the point where bands `bands` turn complex.
///
/// The pair must be real (|Im omega| <= 1e-8) at one end and complex at the other.
pub fn locate_exceptional_point(
    config: &LatticeConfig,
    bands: (usize, usize),
    start: BlochVector,
    end: BlochVector,
    tol_k: f64,
) -> Result<ExceptionalPoint> {
    let complex = |t: f64| -> Result<bool> { Ok(pair_imaginary_part(config, bands, start.lerp(&end, t))? > PAIR_TOL) };
    let (c0, c1) = (complex(0.0)?, complex(1.0)?);
    if c0 == c1 {
        return Err(Error::NoSignChange(format!(
            "bands {:?} are {} at both ends of {} -> {}",
            bands,
            if c0 { "complex" } else { "real" },
            start,
            end
        )));
    }
    let length = start.distance(&end);
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    let mut evaluations = 2;
    while (hi - lo) * length > tol_k {
        let mid = 0.5 * (lo + hi);
        evaluations += 1;
        if complex(mid)? == c0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    let t = 0.5 * (lo + hi);
    Ok(ExceptionalPoint {
        bands,
        k_star: start.lerp(&end, t),
        distance_to_end: (1.0 - t) * length,
        n_i: config.n_i,
        bracket_width: (hi - lo) * length,
        evaluations,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn hermitian_lattice_has_no_transition() {
        let cfg = LatticeConfig { n_i: 0.0, truncation: 3, ..Default::default() };
        let r = locate_exceptional_point(&cfg, (0, 1), BlochVector::new(0.9, 0.0), BlochVector::X, EP_TOL_K);
        assert!(matches!(r, Err(Error::NoSignChange(_))));
    }
}
