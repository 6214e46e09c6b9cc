use num_complex::Complex64 as C64;

use crate::error::{Error, Result};

/// Default |omega_i - omega_j| below which modes count as degenerate.
pub const CLUSTER_TOL: f64 = 1e-7;
/// Default |omega_i - conj(omega_j)| for PT partners, and |Im omega| below which a mode is real.
pub const PAIR_TOL: f64 = 1e-8;

fn side(w: C64, real_tol: f64) -> i8 {
    if w.im > real_tol {
        1
    } else if w.im < -real_tol {
        -1
    } else {
        0
    }
}

/// Groups modes whose frequencies chain together within `tol`. Real modes, gain
/// modes (Im > 0) and loss modes (Im < 0) are never mixed, so PT partners land in
/// separate clusters. Clusters are returned in order of their first member.
pub fn degeneracy_clusters(omegas: &[C64], tol: f64, real_tol: f64) -> Vec<Vec<usize>> {
    let n = omegas.len();
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], i: usize) -> usize {
        let mut r = i;
        while p[r] != r {
            r = p[r];
        }
        let mut j = i;
        while p[j] != r {
            let next = p[j];
            p[j] = r;
            j = next;
        }
        r
    }
    for i in 0..n {
        for j in i + 1..n {
            if side(omegas[i], real_tol) == side(omegas[j], real_tol) && (omegas[i] - omegas[j]).norm() < tol {
                let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                if a != b {
                    parent[a.max(b)] = a.min(b);
                }
            }
        }
    }
    let mut clusters: Vec<Vec<usize>> = Vec::new();
    let mut root_to_cluster = vec![usize::MAX; n];
    for i in 0..n {
        let r = find(&mut parent, i);
        if root_to_cluster[r] == usize::MAX {
            root_to_cluster[r] = clusters.len();
            clusters.push(Vec::new());
        }
        clusters[root_to_cluster[r]].push(i);
    }
    clusters
}

/// Partner index of every mode: non-real modes are matched to a conjugate within `tol`,
/// real modes get `None`. Fails if a non-real mode has no partner.
pub fn detect_pt_pairs(omegas: &[C64], tol: f64) -> Result<Vec<Option<usize>>> {
    let n = omegas.len();
    let mut partner = vec![None; n];
    for i in 0..n {
        if side(omegas[i], tol) <= 0 || partner[i].is_some() {
            continue;
        }
        let mut best: Option<(usize, f64)> = None;
        for j in 0..n {
            if j == i || partner[j].is_some() || side(omegas[j], tol) >= 0 {
                continue;
            }
            let d = (omegas[j] - omegas[i].conj()).norm();
            if d <= tol.max(tol * omegas[i].norm()) && best.is_none_or(|(_, bd)| d < bd) {
                best = Some((j, d));
            }
        }
        if let Some((j, _)) = best {
            partner[i] = Some(j);
            partner[j] = Some(i);
        }
    }
    for i in 0..n {
        if side(omegas[i], tol) != 0 && partner[i].is_none() {
            return Err(Error::PtClosure(format!("mode {i} at omega = {} has no conjugate partner", omegas[i])));
        }
    }
    Ok(partner)
}

/// Sequential pair identifiers (gain member first) for modes with a partner.
pub fn pair_ids(partner: &[Option<usize>]) -> Vec<Option<usize>> {
    let mut ids = vec![None; partner.len()];
    let mut next = 0;
    for i in 0..partner.len() {
        if let Some(j) = partner[i] {
            if ids[i].is_none() {
                ids[i] = Some(next);
                ids[j] = Some(next);
                next += 1;
            }
        }
    }
    ids
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn clusters_do_not_merge_partners() {
        let w = [c(0.25, 1e-5), c(0.25, -1e-5), c(0.3, 0.0), c(0.30000005, 0.0), c(0.4, 0.0)];
        let cl = degeneracy_clusters(&w, CLUSTER_TOL, PAIR_TOL);
        assert_eq!(cl, vec![vec![0], vec![1], vec![2, 3], vec![4]]);
    }

    #[test]
    fn pairs_and_failures() {
        let w = [c(0.25, 0.002), c(0.25, -0.002), c(0.3, 0.0)];
        let p = detect_pt_pairs(&w, PAIR_TOL).unwrap();
        assert_eq!(p, vec![Some(1), Some(0), None]);
        assert_eq!(pair_ids(&p), vec![Some(0), Some(0), None]);
        assert!(detect_pt_pairs(&[c(0.25, 0.002)], PAIR_TOL).is_err());
    }
}
