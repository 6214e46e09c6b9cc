use num_complex::Complex64 as C64;
use rayon::prelude::*;

use crate::error::Result;
use crate::kpoint::PathSample;
use crate::lattice::LatticeConfig;
use crate::pwe::solve::{solve, KSolution, SolveOptions};

/// Per-sample solutions along a path with band connections between neighbours.
#[derive(Debug, Clone)]
pub struct BandStructure {
    pub samples: Vec<PathSample>,
    pub solutions: Vec<KSolution>,
    /// `connections[j][b]` is the band at sample j + 1 continuing band b at sample j.
    pub connections: Vec<Vec<usize>>,
}

impl BandStructure {
    /// Number of bands tracked at every sample.
    pub fn band_count(&self) -> usize {
        self.solutions.iter().map(|s| s.modes.len()).min().unwrap_or(0)
    }
}

/// |<h_i(k) | h_l(k')>| summed over plane waves K present in both bases.
fn overlap(a: &KSolution, b: &KSolution, i: usize, l: usize) -> f64 {
    let (ha, hb) = (&a.modes[i].coefficients, &b.modes[l].coefficients);
    let mut acc = C64::new(0.0, 0.0);
    for (ia, g) in a.basis.vectors().iter().enumerate() {
        if let Some(ib) = b.basis.index_of(*g) {
            acc += ha[ia].conj() * hb[ib];
        }
    }
    acc.norm()
}

/// Greedy maximal-overlap assignment between the first `n` bands of two samples.
pub fn connect(a: &KSolution, b: &KSolution, n: usize) -> Vec<usize> {
    let mut pairs: Vec<(f64, usize, usize)> =
        (0..n).flat_map(|i| (0..n).map(move |l| (i, l))).map(|(i, l)| (overlap(a, b, i, l), i, l)).collect();
    pairs.sort_by(|x, y| y.0.total_cmp(&x.0).then(x.1.cmp(&y.1)).then(x.2.cmp(&y.2)));
    let mut map = vec![usize::MAX; n];
    let mut taken = vec![false; n];
    for (_, i, l) in pairs {
        if map[i] == usize::MAX && !taken[l] {
            map[i] = l;
            taken[l] = true;
        }
    }
    map
}

/// Solves every sample independently (in parallel) and connects neighbouring samples.
pub fn solve_path(config: &LatticeConfig, samples: &[PathSample], bands: usize) -> Result<BandStructure> {
    config.validate()?;
    let opts = SolveOptions::bands(bands);
    let solutions = samples.par_iter().map(|s| solve(config, s.k, &opts)).collect::<Result<Vec<_>>>()?;
    let n = solutions.iter().map(|s| s.modes.len()).min().unwrap_or(0).min(bands);
    let connections = solutions.windows(2).map(|w| connect(&w[0], &w[1], n)).collect();
    Ok(BandStructure { samples: samples.to_vec(), solutions, connections })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kpoint::KPath;

    #[test]
    fn connections_are_bijections() {
        let cfg = LatticeConfig { truncation: 3, ..Default::default() };
        let bs = solve_path(&cfg, &KPath::standard(3).samples(), 6).unwrap();
        for map in &bs.connections {
            let mut seen = map.clone();
            seen.sort_unstable();
            assert_eq!(seen, (0..map.len()).collect::<Vec<_>>());
        }
    }
}
