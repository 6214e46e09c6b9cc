use num_complex::Complex64 as C64;
use ptcrystal::kpoint::BlochVector;
use ptcrystal::kpoint::KPath;
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{frequencies, solve, solve_path, SolveOptions, SolverRoute, TeOperator};

fn points() -> [BlochVector; 3] {
    [BlochVector::GAMMA, BlochVector::X, BlochVector::M]
}

#[test]
fn empty_lattice_matches_folded_light_lines() {
    let cfg = LatticeConfig::empty(2.0, 7);
    for k in points().into_iter().chain([BlochVector::new(0.37, 0.21)]) {
        let sol = solve(&cfg, k, &SolveOptions::eigenvalues_only(None)).unwrap();
        let mut oracle: Vec<f64> = (0..sol.basis.len())
            .map(|i| {
                let q = sol.basis.wavevector(i);
                q[0].hypot(q[1]) / 2.0
            })
            .collect();
        oracle.sort_by(f64::total_cmp);
        for (w, o) in sol.omegas().iter().zip(&oracle) {
            assert!((w - o).norm() < 1e-10, "k = {k:?}: {w} vs {o}");
        }
    }
}

#[test]
fn empty_lattice_caption_frequencies() {
    let cfg = LatticeConfig::empty(2.0, 7);
    let count = |k: BlochVector, target: f64| {
        frequencies(&cfg, k, None).unwrap().iter().filter(|w| (w.re - target).abs() < 1e-10).count()
    };
    assert_eq!(count(BlochVector::X, 0.25), 2);
    assert_eq!(count(BlochVector::M, 2f64.sqrt() / 4.0), 4);
    assert_eq!(count(BlochVector::GAMMA, 0.5), 4);
    assert_eq!(count(BlochVector::X, 5f64.sqrt() / 4.0), 4);
    assert_eq!(count(BlochVector::M, 10f64.sqrt() / 4.0), 8);
    let w = frequencies(&cfg, BlochVector::GAMMA, Some(1)).unwrap();
    assert_eq!(w[0], C64::new(0.0, 0.0));
}

#[test]
fn one_by_one_operator() {
    let cfg = LatticeConfig::empty(2.0, 0);
    let w = frequencies(&cfg, BlochVector::new(0.5, 0.0), None).unwrap();
    assert_eq!(w.len(), 1);
    assert!((w[0].re - 0.125).abs() < 1e-15 && w[0].im == 0.0);
}

#[test]
fn light_line_slope_is_one_over_n() {
    let cfg = LatticeConfig::empty(2.0, 3);
    for t in [0.1, 0.4, 0.8] {
        let w = frequencies(&cfg, BlochVector::new(t, 0.0), Some(1)).unwrap();
        assert!((w[0].re - t / 4.0).abs() < 1e-12);
    }
}

fn assert_conjugate_closed(w: &[C64], tol: f64) {
    let mut used = vec![false; w.len()];
    for a in w {
        let j = (0..w.len())
            .filter(|&j| !used[j])
            .min_by(|&i, &j| (w[i] - a.conj()).norm().total_cmp(&(w[j] - a.conj()).norm()))
            .unwrap();
        assert!((w[j] - a.conj()).norm() <= tol * a.norm().max(1.0), "{a} has no conjugate partner");
        used[j] = true;
    }
}

#[test]
fn default_spectrum_is_conjugate_closed() {
    let cfg = LatticeConfig::default();
    for k in points().into_iter().chain([BlochVector::new(0.6, 0.2), BlochVector::new(0.9, 0.9)]) {
        assert_conjugate_closed(&frequencies(&cfg, k, None).unwrap(), 1e-8);
    }
}

#[test]
fn hermitian_limit_is_real() {
    let cfg = LatticeConfig::default().with_ni(0.0);
    for s in KPath::standard(6).samples() {
        let w = frequencies(&cfg, s.k, None).unwrap();
        let worst = w.iter().map(|w| w.im.abs()).fold(0.0, f64::max);
        assert!(worst < 1e-10, "max |Im| = {worst:e} at {:?}", s.k);
    }
}

#[test]
fn lowest_x_modes_form_a_conjugate_pair() {
    let w = frequencies(&LatticeConfig::default(), BlochVector::X, Some(2)).unwrap();
    assert!(w[0].im > 1e-4);
    assert!((w[0] - w[1].conj()).norm() < 1e-8);
}

#[test]
fn reciprocal_translation_leaves_the_spectrum_unchanged() {
    let cfg = LatticeConfig::default();
    for (k, shift) in [((0.3, 0.2), (2.0, 0.0)), ((0.7, 0.4), (-2.0, 2.0)), ((1.0, 0.0), (0.0, -2.0))] {
        let a = frequencies(&cfg, BlochVector::new(k.0, k.1), Some(20)).unwrap();
        let b = frequencies(&cfg, BlochVector::new(k.0 + shift.0, k.1 + shift.1), Some(20)).unwrap();
        for (x, y) in a.iter().zip(&b) {
            assert!((x - y).norm() < 1e-10, "{x} vs {y}");
        }
    }
}

#[test]
fn truncation_converges() {
    let six = LatticeConfig { truncation: 6, ..Default::default() };
    let seven = LatticeConfig::default();
    let mut worst = 0.0f64;
    for k in points() {
        let a = frequencies(&six, k, Some(10)).unwrap();
        let b = frequencies(&seven, k, Some(10)).unwrap();
        for (x, y) in a.iter().zip(&b) {
            worst = worst.max((x - y).norm());
        }
    }
    eprintln!("largest change from N = 6 to N = 7: {worst:e}");
    assert!(worst < 1e-4, "largest change {worst:e}");
}

#[test]
fn residuals_and_normalisation() {
    let cfg = LatticeConfig::default();
    for k in points() {
        let op = TeOperator::assemble(&cfg, k).unwrap();
        let sol = solve(&cfg, k, &SolveOptions::bands(16)).unwrap();
        for m in &sol.modes {
            let n: f64 = m.coefficients.iter().map(|c| c.norm_sqr()).sum();
            assert!((n - 1.0).abs() < 1e-12);
            assert!(op.residual(m.eigenvalue, &m.coefficients) <= 1e-8 * op.frobenius_norm());
            assert!(m.omega.re >= 0.0);
        }
    }
}

#[test]
fn solver_routes_agree() {
    let cfg = LatticeConfig::default();
    let real = solve(&cfg, BlochVector::M, &SolveOptions::eigenvalues_only(Some(30))).unwrap();
    let opts = SolveOptions { route: SolverRoute::Complex, ..SolveOptions::eigenvalues_only(Some(30)) };
    let complex = solve(&cfg, BlochVector::M, &opts).unwrap();
    // conjugate partners tie in Re, so either route may list them in either order
    let other = complex.omegas();
    for a in real.omegas() {
        let d = other.iter().map(|b| (a - b).norm()).fold(f64::INFINITY, f64::min);
        assert!(d < 1e-9, "{a} has no counterpart");
    }
}

#[test]
fn band_structure_connections_are_permutations() {
    let cfg = LatticeConfig::default();
    let samples = KPath::standard(4).samples();
    let bs = solve_path(&cfg, &samples, 8).unwrap();
    assert_eq!(bs.solutions.len(), samples.len());
    for c in &bs.connections {
        let mut seen = c.clone();
        seen.sort();
        assert_eq!(seen, (0..bs.band_count()).collect::<Vec<_>>());
    }
    for sol in &bs.solutions {
        let w = sol.omegas();
        for pair in w.windows(2) {
            assert!(pair[0].re <= pair[1].re + 1e-12);
        }
    }
}
