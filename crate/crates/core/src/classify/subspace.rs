use num_complex::Complex64 as C64;

use crate::classify::action::SymmetryAction;
use crate::corep::CMat;

pub(crate) fn inner(a: &[C64], b: &[C64]) -> C64 {
    a.iter().zip(b).map(|(x, y)| x.conj() * y).sum()
}

pub(crate) fn norm(a: &[C64]) -> f64 {
    a.iter().map(|x| x.norm_sqr()).sum::<f64>().sqrt()
}

/// Orthonormal basis of the span of `vectors` (modified Gram-Schmidt, applied twice).
pub(crate) fn orthonormalize(vectors: &[Vec<C64>]) -> Vec<Vec<C64>> {
    let mut out: Vec<Vec<C64>> = Vec::new();
    for v in vectors {
        let mut w = v.clone();
        for _ in 0..2 {
            for q in &out {
                let c = inner(q, &w);
                for (wi, qi) in w.iter_mut().zip(q) {
                    *wi -= c * qi;
                }
            }
        }
        let n = norm(&w);
        if n > 1e-10 * norm(v).max(1e-300) {
            out.push(w.into_iter().map(|x| x / n).collect());
        }
    }
    out
}

/// Matrix of an action on an orthonormal basis: D_ij = <q_i, g q_j>.
pub(crate) fn representation(action: &SymmetryAction, basis: &[Vec<C64>]) -> CMat {
    let images: Vec<Vec<C64>> = basis.iter().map(|q| action.apply(q)).collect();
    CMat::from_fn(basis.len(), |i, j| inner(&basis[i], &images[j]))
}

/// Largest norm of the component of g q_j outside span(`target`).
pub(crate) fn leakage(action: &SymmetryAction, source: &[Vec<C64>], target: &[Vec<C64>]) -> f64 {
    let mut worst = 0.0f64;
    for q in source {
        let mut w = action.apply(q);
        for t in target {
            let c = inner(t, &w);
            for (wi, ti) in w.iter_mut().zip(t) {
                *wi -= c * ti;
            }
        }
        worst = worst.max(norm(&w));
    }
    worst
}
