use num_complex::Complex64 as C64;
use proptest::prelude::*;
use ptcrystal::classify::{apply_action, SymmetryAction};
use ptcrystal::kpoint::{BlochVector, HighSymmetryPoint};
use ptcrystal::lattice::LatticeConfig;
use ptcrystal::pwe::{solve, ReciprocalSet, SolveOptions};
use ptcrystal::symmetry::{HalfVec, LittleGroup, PointOp, SymmetryElement};

fn unit_wave(basis: &ReciprocalSet, g: [i32; 2]) -> Vec<C64> {
    let mut h = vec![C64::new(0.0, 0.0); basis.len()];
    h[basis.index_of(g).unwrap()] = C64::new(1.0, 0.0);
    h
}

fn max_diff(a: &[C64], b: &[C64]) -> f64 {
    a.iter().zip(b).map(|(x, y)| (x - y).norm()).fold(0.0, f64::max)
}

#[test]
fn xi_conjugates_and_shifts_a_plane_wave() {
    let basis = ReciprocalSet::adapted(BlochVector::GAMMA, 2);
    let xi = SymmetryAction::new(&SymmetryElement::xi(), &basis).unwrap();
    let out = xi.apply(&unit_wave(&basis, [1, 0]));
    let expected: Vec<C64> = unit_wave(&basis, [-1, 0]).iter().map(|x| -x).collect();
    assert!(max_diff(&out, &expected) < 1e-15);
}

#[test]
fn rotation_moves_a_plane_wave() {
    let basis = ReciprocalSet::adapted(BlochVector::GAMMA, 2);
    let c4 = SymmetryAction::new(&SymmetryElement::unitary(PointOp::C4, HalfVec::ZERO), &basis).unwrap();
    let out = c4.apply(&unit_wave(&basis, [1, 0]));
    assert!(max_diff(&out, &unit_wave(&basis, [0, 1])) < 1e-15);
}

#[test]
fn identity_leaves_modes_unchanged() {
    let sol = solve(&LatticeConfig::default(), BlochVector::X, &SolveOptions::bands(4)).unwrap();
    for m in &sol.modes {
        let out = apply_action(&SymmetryElement::identity(), m).unwrap();
        assert_eq!(out, m.coefficients);
    }
}

#[test]
fn actions_preserve_the_norm() {
    let basis = ReciprocalSet::adapted(BlochVector::M, 3);
    let h: Vec<C64> = (0..basis.len()).map(|i| C64::new((i as f64).sin(), (i as f64 * 0.7).cos())).collect();
    let n: f64 = h.iter().map(|x| x.norm_sqr()).sum();
    let g = LittleGroup::at(HighSymmetryPoint::M);
    for e in g.elements() {
        let out = SymmetryAction::new(e, &basis).unwrap().apply(&h);
        let m: f64 = out.iter().map(|x| x.norm_sqr()).sum();
        assert!((m - n).abs() < 1e-12 * n);
    }
}

#[test]
fn elements_outside_the_little_group_are_rejected() {
    let sol = solve(&LatticeConfig::default(), BlochVector::new(0.3, 0.0), &SolveOptions::bands(1)).unwrap();
    let c4 = SymmetryElement::unitary(PointOp::C4, HalfVec::ZERO);
    assert!(apply_action(&c4, &sol.modes[0]).is_err());
}

fn vector_strategy(len: usize) -> impl Strategy<Value = Vec<C64>> {
    prop::collection::vec((-1.0f64..1.0, -1.0f64..1.0).prop_map(|(a, b)| C64::new(a, b)), len)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(100))]

    #[test]
    fn composition_matches_the_group_product(h in vector_strategy(ReciprocalSet::adapted(BlochVector::X, 3).len())) {
        let basis = ReciprocalSet::adapted(BlochVector::X, 3);
        let g = LittleGroup::at(HighSymmetryPoint::X);
        let actions: Vec<SymmetryAction> = g.elements().iter().map(|e| SymmetryAction::new(e, &basis).unwrap()).collect();
        for a in 0..g.order() {
            let ga = actions[a].apply(&h);
            for b in 0..g.order() {
                let lhs = actions[b].apply(&ga);
                let rhs = actions[g.product(b, a)].apply(&h);
                prop_assert!(max_diff(&lhs, &rhs) < 1e-10);
            }
        }
    }
}
