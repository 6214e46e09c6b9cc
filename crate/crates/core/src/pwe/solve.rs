use std::cmp::Ordering;
use std::sync::Arc;

use faer::linalg::solvers::Eigen;
use faer::{Mat, Side};
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::kpoint::BlochVector;
use crate::lattice::LatticeConfig;
use crate::pwe::basis::ReciprocalSet;
use crate::pwe::operator::TeOperator;

/// Relative residual ||Theta h - lambda h|| / ||Theta||_F accepted for an eigenpair.
pub const RESIDUAL_TOL: f64 = 1e-8;

/// Eigenvalues closer than this (relative) are treated as one degenerate eigenspace
/// when building orthonormal eigenvectors.
const DEGENERACY_TOL: f64 = 1e-10;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub enum SolverRoute {
    /// Diagonalise the real similarity transform F^-1 Theta F.
    RealForm,
    /// Diagonalise the complex operator directly.
    Complex,
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SolveOptions {
    pub route: SolverRoute,
    pub eigenvectors: bool,
    /// Number of lowest modes to keep; `None` keeps all.
    pub bands: Option<usize>,
}

impl Default for SolveOptions {
    fn default() -> Self {
        SolveOptions { route: SolverRoute::RealForm, eigenvectors: true, bands: None }
    }
}

impl SolveOptions {
    pub fn bands(n: usize) -> Self {
        SolveOptions { bands: Some(n), ..Default::default() }
    }

    pub fn eigenvalues_only(n: Option<usize>) -> Self {
        SolveOptions { eigenvectors: false, bands: n, ..Default::default() }
    }
}

/// One Bloch mode: the frequency omega Lambda / 2 pi c and its plane-wave coefficients.
#[derive(Debug, Clone)]
pub struct BlochMode {
    pub k: BlochVector,
    pub omega: C64,
    pub eigenvalue: C64,
    /// Unit-norm coefficients on `basis`; empty when eigenvectors were not requested.
    pub coefficients: Vec<C64>,
    pub residual: f64,
    pub basis: Arc<ReciprocalSet>,
}

impl BlochMode {
    pub fn is_real(&self, tol: f64) -> bool {
        self.omega.im.abs() <= tol
    }
}

#[derive(Debug, Clone)]
pub struct KSolution {
    pub k: BlochVector,
    pub basis: Arc<ReciprocalSet>,
    pub modes: Vec<BlochMode>,
    pub operator_norm: f64,
}

impl KSolution {
    pub fn omegas(&self) -> Vec<C64> {
        self.modes.iter().map(|m| m.omega).collect()
    }
}

/// Band order: ascending Re(omega), ties broken by descending Im(omega).
pub fn band_order(a: &C64, b: &C64) -> Ordering {
    match a.re.partial_cmp(&b.re).unwrap_or(Ordering::Equal) {
        Ordering::Equal => b.im.partial_cmp(&a.im).unwrap_or(Ordering::Equal),
        o => o,
    }
}

/// Principal square root of a computed eigenvalue. A non-negative real eigenvalue
/// yields an exactly real frequency.
fn frequency(lambda: C64) -> C64 {
    if lambda.im == 0.0 && lambda.re >= 0.0 {
        C64::new(lambda.re.sqrt(), 0.0)
    } else {
        lambda.sqrt()
    }
}

struct RawEigen {
    values: Vec<C64>,
    vectors: Option<Vec<Vec<C64>>>,
}

fn solve_real_form(op: &TeOperator, vectors: bool) -> Result<RawEigen> {
    let (m, _) = op.real_form();
    let n = op.dim();
    let gauge: Vec<C64> = (0..n).map(|i| op.gauge(i)).collect();
    if op.is_hermitian() {
        if !vectors {
            let vals = m.self_adjoint_eigenvalues(Side::Lower).map_err(|e| Error::Solver(format!("{e:?}")))?;
            return Ok(RawEigen { values: vals.into_iter().map(|v| C64::new(v, 0.0)).collect(), vectors: None });
        }
        let evd = m.self_adjoint_eigen(Side::Lower).map_err(|e| Error::Solver(format!("{e:?}")))?;
        let s = evd.S().column_vector();
        let u = evd.U();
        let values = (0..n).map(|i| C64::new(s[i], 0.0)).collect();
        let vecs = (0..n).map(|j| (0..n).map(|i| gauge[i] * u[(i, j)]).collect()).collect();
        return Ok(RawEigen { values, vectors: Some(vecs) });
    }
    if !vectors {
        let vals = m.eigenvalues().map_err(|e| Error::Solver(format!("{e:?}")))?;
        return Ok(RawEigen { values: vals, vectors: None });
    }
    let evd = Eigen::new_from_real(m.as_ref()).map_err(|e| Error::Solver(format!("{e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let values = (0..n).map(|i| s[i]).collect();
    let vecs = (0..n).map(|j| (0..n).map(|i| gauge[i] * u[(i, j)]).collect()).collect();
    Ok(RawEigen { values, vectors: Some(vecs) })
}

fn solve_complex(op: &TeOperator, vectors: bool) -> Result<RawEigen> {
    let m = op.matrix();
    let n = op.dim();
    if op.is_hermitian() {
        let evd = m.self_adjoint_eigen(Side::Lower).map_err(|e| Error::Solver(format!("{e:?}")))?;
        let s = evd.S().column_vector();
        let u = evd.U();
        let values = (0..n).map(|i| C64::new(s[i].re, 0.0)).collect();
        let vecs = vectors.then(|| (0..n).map(|j| (0..n).map(|i| u[(i, j)]).collect()).collect());
        return Ok(RawEigen { values, vectors: vecs });
    }
    if !vectors {
        let vals = m.eigenvalues().map_err(|e| Error::Solver(format!("{e:?}")))?;
        return Ok(RawEigen { values: vals, vectors: None });
    }
    let evd = m.eigen().map_err(|e| Error::Solver(format!("{e:?}")))?;
    let s = evd.S().column_vector();
    let u = evd.U();
    let values = (0..n).map(|i| s[i]).collect();
    let vecs = (0..n).map(|j| (0..n).map(|i| u[(i, j)]).collect()).collect();
    Ok(RawEigen { values, vectors: Some(vecs) })
}

fn normalize_and_fix_phase(h: &mut [C64]) {
    let norm = h.iter().map(|c| c.norm_sqr()).sum::<f64>().sqrt();
    if norm == 0.0 {
        return;
    }
    let mut best = 0;
    let mut best_abs = -1.0;
    for (i, c) in h.iter().enumerate() {
        let a = c.norm();
        if a > best_abs * (1.0 + 1e-12) {
            best = i;
            best_abs = a;
        }
    }
    let phase = h[best].conj() / (best_abs * norm);
    for c in h.iter_mut() {
        *c *= phase;
    }
}

/// Orthonormal basis of the (near) null space of Theta - lambda I with dimension `d`.
fn null_space(op: &TeOperator, lambda: C64, d: usize) -> Result<Vec<Vec<C64>>> {
    let n = op.dim();
    let a = Mat::<C64>::from_fn(n, n, |i, j| {
        let v = op.matrix()[(i, j)];
        if i == j {
            v - lambda
        } else {
            v
        }
    });
    let svd = a.svd().map_err(|e| Error::Solver(format!("{e:?}")))?;
    let v = svd.V();
    Ok((n - d..n).map(|j| (0..n).map(|i| v[(i, j)]).collect()).collect())
}

/// Groups indices (already sorted by eigenvalue order) whose eigenvalues coincide.
fn degenerate_runs(values: &[C64], order: &[usize]) -> Vec<Vec<usize>> {
    let mut runs: Vec<Vec<usize>> = Vec::new();
    for &i in order {
        let joined = runs.last_mut().and_then(|run| {
            let j = *run.last().unwrap();
            let scale = values[i].norm().max(1.0);
            ((values[i] - values[j]).norm() <= DEGENERACY_TOL * scale).then_some(run)
        });
        match joined {
            Some(run) => run.push(i),
            None => runs.push(vec![i]),
        }
    }
    runs
}

fn solve_with_route(op: &TeOperator, k: BlochVector, opts: &SolveOptions, route: SolverRoute) -> Result<KSolution> {
    let mut raw = match route {
        SolverRoute::RealForm => solve_real_form(op, opts.eigenvectors)?,
        SolverRoute::Complex => solve_complex(op, opts.eigenvectors)?,
    };
    // the k = 0, K = 0 wave has an exactly zero eigenvalue
    let round_off = 64.0 * f64::EPSILON * op.frobenius_norm();
    for v in raw.values.iter_mut().filter(|v| v.norm() <= round_off) {
        *v = C64::new(0.0, 0.0);
    }
    let n = raw.values.len();
    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by(|&a, &b| band_order(&frequency(raw.values[a]), &frequency(raw.values[b])));
    if let Some(bands) = opts.bands {
        let mut keep = bands.min(n);
        // keep a conjugate partner that would otherwise be cut off
        while keep < n && keep > 0 {
            let last = frequency(raw.values[order[keep - 1]]);
            let next = frequency(raw.values[order[keep]]);
            if last.im != 0.0 && (next - last.conj()).norm() <= 1e-12 * last.norm().max(1.0) {
                keep += 1;
            } else {
                break;
            }
        }
        order.truncate(keep);
    }

    let norm = op.frobenius_norm();
    let basis = op.basis().clone();
    let mut modes = Vec::with_capacity(order.len());
    let runs = degenerate_runs(&raw.values, &order);
    for run in runs {
        let mut vectors: Vec<Vec<C64>> = match (&raw.vectors, run.len()) {
            (None, _) => vec![Vec::new(); run.len()],
            (Some(v), 1) => vec![v[run[0]].clone()],
            (Some(_), d) => {
                let mean = run.iter().map(|&i| raw.values[i]).sum::<C64>() / d as f64;
                null_space(op, mean, d)?
            }
        };
        for (slot, &i) in run.iter().enumerate() {
            let lambda = raw.values[i];
            let mut h = std::mem::take(&mut vectors[slot]);
            let residual = if h.is_empty() {
                0.0
            } else {
                normalize_and_fix_phase(&mut h);
                op.residual(lambda, &h) / norm
            };
            modes.push(BlochMode {
                k,
                omega: frequency(lambda),
                eigenvalue: lambda,
                coefficients: h,
                residual,
                basis: basis.clone(),
            });
        }
    }
    modes.sort_by(|a, b| band_order(&a.omega, &b.omega));
    Ok(KSolution { k, basis, modes, operator_norm: norm })
}

/// Diagonalises an assembled operator. Falls back to the complex route if the
/// real-form eigenpairs miss the residual tolerance.
pub fn solve_operator(op: &TeOperator, k: BlochVector, opts: &SolveOptions) -> Result<KSolution> {
    let sol = solve_with_route(op, k, opts, opts.route)?;
    let worst = sol.modes.iter().map(|m| m.residual).fold(0.0, f64::max);
    if worst <= RESIDUAL_TOL {
        return Ok(sol);
    }
    if opts.route == SolverRoute::RealForm {
        let retry = solve_with_route(op, k, opts, SolverRoute::Complex)?;
        let worst = retry.modes.iter().map(|m| m.residual).fold(0.0, f64::max);
        if worst <= RESIDUAL_TOL {
            return Ok(retry);
        }
    }
    Err(Error::Residual { residual: worst, kx: k.x(), ky: k.y() })
}

/// Assembles and solves at one Bloch vector.
pub fn solve(config: &LatticeConfig, k: BlochVector, opts: &SolveOptions) -> Result<KSolution> {
    let op = TeOperator::assemble(config, k)?;
    solve_operator(&op, k, opts)
}

/// Sorted frequencies only.
pub fn frequencies(config: &LatticeConfig, k: BlochVector, bands: Option<usize>) -> Result<Vec<C64>> {
    Ok(solve(config, k, &SolveOptions::eigenvalues_only(bands))?.omegas())
}
