use num_complex::Complex64 as C64;
use ptcrystal::classify::{
    classify_at, classify_cluster, degeneracy_clusters, detect_pt_pairs, locate_exceptional_point, rod_energy_ratio,
    verify_quartet_structure, BlockKind, Classification, ClassifyOptions, CLUSTER_TOL, EP_TOL_K, PAIR_TOL,
};
use ptcrystal::corep::corep_catalog;
use ptcrystal::kpoint::{BlochVector, HighSymmetryPoint};
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{solve, BlochMode, KSolution, SolveOptions};
use ptcrystal::symmetry::LittleGroup;
use ptcrystal::Error;

fn classify(k: BlochVector, lo: f64, hi: f64) -> (KSolution, Classification) {
    let sol = solve(&LatticeConfig::default(), k, &SolveOptions::bands(30)).unwrap();
    let c = ptcrystal::classify::classify_solution(&sol, &ClassifyOptions::window(lo, hi)).unwrap();
    (sol, c)
}

fn labels(c: &Classification) -> Vec<String> {
    c.blocks.iter().map(|b| b.label.label.clone().unwrap_or_default()).collect()
}

fn modes<'a>(sol: &'a KSolution, ix: &[usize]) -> Vec<&'a BlochMode> {
    ix.iter().map(|&i| &sol.modes[i]).collect()
}

#[test]
fn cluster_and_pair_primitives() {
    let w = [C64::new(1.0, 0.1), C64::new(1.0, -0.1), C64::new(2.0, 0.0)];
    let partner = detect_pt_pairs(&w, PAIR_TOL).unwrap();
    assert_eq!(partner, [Some(1), Some(0), None]);
    let distinct = [C64::new(0.1, 0.0), C64::new(0.2, 0.0), C64::new(0.3, 0.0)];
    assert_eq!(degeneracy_clusters(&distinct, CLUSTER_TOL, PAIR_TOL).len(), 3);
    assert!(detect_pt_pairs(&[C64::new(1.0, 0.1)], PAIR_TOL).is_err());
    let real = [C64::new(0.5, 0.0), C64::new(0.6, 0.0)];
    assert_eq!(detect_pt_pairs(&real, PAIR_TOL).unwrap(), [None, None]);
}

#[test]
fn gamma_shell_is_real_with_one_doublet() {
    let (sol, c) = classify(BlochVector::GAMMA, 0.45, 0.55);
    assert_eq!(c.pair_count(), 0);
    let mut sizes = c.real_cluster_sizes();
    sizes.sort();
    assert_eq!(sizes, [1, 1, 2]);
    assert_eq!(labels(&c), ["Γ5", "Γ3", "Γ1"]);
    for b in &c.blocks {
        assert!(b.label.confidence < 1e-3);
        assert!(b.antiunitary_leakage < 1e-3);
        let ratio = rod_energy_ratio(&LatticeConfig::default(), &modes(&sol, &b.modes));
        assert!((ratio - 1.0).abs() < 1e-3, "gain/loss rod energy ratio {ratio}");
    }
    let singlet = c.blocks.iter().find(|b| b.dim() == 1).unwrap();
    let chars: Vec<f64> = singlet.characters.iter().map(|z| z.re).collect();
    assert!(chars.iter().all(|x| (x.abs() - 1.0).abs() < 1e-3));
}

#[test]
fn x_shells_are_pairs_only() {
    let (_, low) = classify(BlochVector::X, 0.2, 0.3);
    assert_eq!(low.pair_count(), 1);
    assert!(low.real_cluster_sizes().is_empty());
    let (_, high) = classify(BlochVector::X, 0.5, 0.6);
    assert_eq!(high.pair_count(), 2);
    assert!(high.real_cluster_sizes().is_empty());
    for b in low.blocks.iter().chain(&high.blocks) {
        assert_eq!(b.kind, BlockKind::PtPair);
        let eq = &b.label.equivalents;
        assert!(eq == &["Γ5", "Γ7"] || eq == &["Γ6", "Γ8"], "{eq:?}");
        assert!(b.antiunitary_leakage < 1e-3, "antiunitary image leaves the loss partner");
    }
}

#[test]
fn m_low_shell_mixes_a_pair_and_a_doublet() {
    let (_, c) = classify(BlochVector::M, 0.33, 0.37);
    assert_eq!(c.pair_count(), 1);
    assert_eq!(c.real_cluster_sizes(), [2]);
    assert_eq!(labels(&c), ["Γ5", "Γ2"]);
}

#[test]
fn m_high_shell_has_a_coalesced_quartet() {
    let (sol, c) = classify(BlochVector::M, 0.75, 0.82);
    assert_eq!(c.pair_count(), 4);
    assert!(c.real_cluster_sizes().is_empty());
    let quartets: Vec<_> = c.quartets().collect();
    assert_eq!(quartets.len(), 1);
    let group = LittleGroup::at(HighSymmetryPoint::M);
    let report = verify_quartet_structure(&modes(&sol, &quartets[0].modes), &group).unwrap();
    assert!(report.passed, "{:?}", report.failures);
    assert_eq!(report.matrices.len(), 32);
    // pairs from two different conjugate frequencies do not share the block pattern
    let singles: Vec<_> = c.blocks.iter().filter(|b| b.dim() == 2).collect();
    let mixed: Vec<usize> =
        [singles[0].modes[0], singles[1].modes[0], singles[0].modes[1], singles[1].modes[1]].to_vec();
    let report = verify_quartet_structure(&modes(&sol, &mixed), &group).unwrap();
    assert!(!report.passed);
}

#[test]
fn quartet_check_needs_two_pairs() {
    let cfg = LatticeConfig::default().with_ni(0.0);
    let sol = solve(&cfg, BlochVector::M, &SolveOptions::bands(30)).unwrap();
    let shell: Vec<&BlochMode> = sol.modes.iter().filter(|m| (m.omega.re - 0.79).abs() < 0.01).take(4).collect();
    let group = LittleGroup::at(HighSymmetryPoint::M);
    assert!(matches!(verify_quartet_structure(&shell, &group), Err(Error::Quartet(_))));
}

#[test]
fn cluster_labels_follow_the_catalog() {
    let sol = solve(&LatticeConfig::default(), BlochVector::GAMMA, &SolveOptions::bands(12)).unwrap();
    let group = LittleGroup::at(HighSymmetryPoint::Gamma);
    let catalog = corep_catalog(&group, true).unwrap();
    let third = sol.modes.iter().position(|m| (m.omega.re - 0.5001980).abs() < 1e-6).unwrap();
    let label = classify_cluster(&[&sol.modes[third]], &group, &catalog, 1e-3).unwrap();
    assert_eq!(label.label.as_deref(), Some("Γ1"));
    assert_eq!(label.equivalents, ["Γ1+", "Γ1-"]);
}

#[test]
fn generic_k_is_clustered_but_unlabelled() {
    let c = classify_at(&LatticeConfig::default(), BlochVector::new(0.4, 0.1), 8, &ClassifyOptions::default()).unwrap();
    assert_eq!(c.point, None);
    assert!(c.modes.iter().all(|m| m.label.is_none()));
}

#[test]
fn x_exceptional_point_approaches_the_zone_edge() {
    let mut last = 0.0;
    for n_i in [0.05, 0.025, 0.0125] {
        let cfg = LatticeConfig::default().with_ni(n_i);
        let ep = locate_exceptional_point(&cfg, (0, 1), BlochVector::new(0.9, 0.0), BlochVector::X, EP_TOL_K).unwrap();
        assert!(ep.k_star.x() > last);
        assert!(ep.distance_to_end < 0.01);
        assert!(ep.bracket_width <= EP_TOL_K);
        last = ep.k_star.x();
    }
}

#[test]
fn m_exceptional_point_is_just_inside_the_corner() {
    let cfg = LatticeConfig::default();
    let ep = locate_exceptional_point(&cfg, (2, 3), BlochVector::new(0.9, 0.9), BlochVector::M, EP_TOL_K).unwrap();
    assert!(ep.k_star.x() > 0.99 && ep.k_star.x() < 1.0);
    assert!((ep.k_star.x() - ep.k_star.y()).abs() < 1e-12);
    let none = locate_exceptional_point(&cfg, (0, 1), BlochVector::new(0.9, 0.9), BlochVector::M, EP_TOL_K);
    assert!(matches!(none, Err(Error::NoSignChange(_))));
}
