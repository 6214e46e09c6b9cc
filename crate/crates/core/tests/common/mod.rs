//! Reference tables shared by the group-theory tests and the acceptance run.
#![allow(dead_code)]

use std::collections::BTreeMap;

use num_complex::Complex64 as C64;
use ptcrystal::corep::{build_type_a, build_type_c, corep_number, type_a_matrices, CMat, CharacterTable};
use ptcrystal::kpoint::HighSymmetryPoint;
use ptcrystal::symmetry::{CorepType, LittleGroup};

pub const REFERENCE_COREPS: &str = include_str!("../data/reference_coreps.txt");
pub const REFERENCE_CHARACTERS: &str = include_str!("../data/reference_characters.txt");

pub fn rows(text: &str) -> impl Iterator<Item = Vec<&str>> {
    text.lines().filter(|l| !l.starts_with('#') && !l.trim().is_empty()).map(|l| l.split_whitespace().collect())
}

/// "[a,b;c,d]" or a bare integer, rows separated by ';'.
pub fn parse_matrix(s: &str) -> CMat {
    let body = s.trim_start_matches('[').trim_end_matches(']');
    let rows: Vec<Vec<f64>> =
        body.split(';').map(|r| r.split(',').map(|v| v.trim().parse().unwrap()).collect()).collect();
    let refs: Vec<&[f64]> = rows.iter().map(|r| r.as_slice()).collect();
    CMat::from_real(&refs)
}

/// The tabulated corepresentation `name` (G1+, G5, ...) rebuilt from its irrep.
pub fn construct(p: HighSymmetryPoint, name: &str) -> Vec<CMat> {
    let group = LittleGroup::at(p);
    let table = CharacterTable::for_group(&group).unwrap();
    let xi = group.xi_index().unwrap();
    let number: usize = name.trim_start_matches('G').trim_end_matches(['+', '-']).parse().unwrap();
    let irrep = table.irreps.iter().find(|ir| corep_number(p, ir.name) == Some(number)).unwrap();
    let one = C64::new(1.0, 0.0);
    match group.dimmock_wheeler(&irrep.characters()).unwrap() {
        CorepType::C => build_type_c(&group, irrep).unwrap().matrices,
        CorepType::A if p == HighSymmetryPoint::M => {
            // tabulated with beta = I, which is not a corepresentation here
            type_a_matrices(&group, irrep, xi, &CMat::identity(2))
        }
        CorepType::A => {
            let sign = if name.ends_with('-') { -one } else { one };
            let beta = CMat::identity(irrep.dim).scale(sign);
            build_type_a(&group, irrep, xi, &beta).unwrap().matrices
        }
        CorepType::B => unreachable!(),
    }
}

/// Compares every tabulated matrix with the transposed constructed one.
/// Returns the number of entries checked and the mismatching lines.
pub fn check_reference_coreps() -> (usize, Vec<String>) {
    let mut cache: BTreeMap<(String, String), Vec<CMat>> = BTreeMap::new();
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in rows(REFERENCE_COREPS) {
        let p: HighSymmetryPoint = f[0].parse().unwrap();
        let group = LittleGroup::at(p);
        let mats = cache.entry((f[0].into(), f[1].into())).or_insert_with(|| construct(p, f[1]));
        let i = group.index_of_label(f[2]).unwrap_or_else(|| panic!("unknown element {}", f[2]));
        if !mats[i].transpose().approx_eq(&parse_matrix(f[3]), 1e-12) {
            bad.push(f.join(" "));
        }
        checked += 1;
    }
    (checked, bad)
}

pub fn check_reference_characters() -> (usize, Vec<String>) {
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in rows(REFERENCE_CHARACTERS) {
        let group = LittleGroup::at(f[0].parse().unwrap());
        let table = CharacterTable::for_group(&group).unwrap();
        let chi = table.irrep(f[1]).unwrap().characters();
        let i = group.index_of_label(f[2]).unwrap();
        let expected: f64 = f[3].parse().unwrap();
        if (chi[i] - expected).norm() >= 1e-12 {
            bad.push(f.join(" "));
        }
        checked += 1;
    }
    (checked, bad)
}

pub fn squared_labels(p: HighSymmetryPoint) -> Vec<String> {
    let g = LittleGroup::at(p);
    g.squared_antiunitary().into_iter().map(|i| g.label(i)).collect()
}

pub const X_SQUARES: [&str; 8] = ["Ebar", "Ebar", "E", "E", "E", "E", "Ebar", "Ebar"];
pub const M_SQUARES: [&str; 16] =
    ["E", "E", "C2bar", "C2bar", "C2bar", "C2bar", "E", "E", "Ebar", "Ebar", "Ebar", "Ebar", "E", "E", "E", "E"];
/// As printed; the C2 entries belong to gamma_4 and gamma_4^-1, third and fourth in the element order.
pub const GAMMA_SQUARES_PRINTED: [&str; 8] = ["E", "E", "E", "E", "E", "E", "C2", "C2"];

/// Gamma: same multiset as printed, with gamma_4^2 = gamma_4^-1^2 = C2.
pub fn gamma_squares_consistent() -> bool {
    let g = LittleGroup::at(HighSymmetryPoint::Gamma);
    let sq = |l: &str| {
        let i = g.index_of_label(l).unwrap();
        g.label(g.product(i, i))
    };
    let mut ours = squared_labels(HighSymmetryPoint::Gamma);
    ours.sort();
    let mut printed: Vec<String> = GAMMA_SQUARES_PRINTED.iter().map(|s| s.to_string()).collect();
    printed.sort();
    ours == printed && sq("gamma") == "C2" && sq("gammai") == "C2"
}
