//! Irreducible representations of the unitary subgroups at Gamma, X and M.
//!
//! Two-dimensional matrices are tabulated in the row convention
//! g h_i = sum_j D_ij h_j and transposed on construction so that
//! D(a) D(b) = D(ab) holds for ordinary matrix products.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::corep::matrix::CMat;
use crate::error::{Error, Result};
use crate::kpoint::HighSymmetryPoint;
use crate::symmetry::{FiniteGroup, LittleGroup, PointOp};

#[derive(Debug, Clone, Serialize)]
pub struct Irrep {
    pub name: &'static str,
    pub dim: usize,
    /// Whether the character changes sign between g and g-bar, as required for Bloch waves.
    pub physical: bool,
    /// One matrix per unitary element of the little group.
    pub matrices: Vec<CMat>,
}

impl Irrep {
    pub fn characters(&self) -> Vec<C64> {
        self.matrices.iter().map(CMat::trace).collect()
    }

    /// Largest deviation from D(a) D(b) = D(ab) over the unitary subgroup.
    pub fn homomorphism_defect(&self, group: &LittleGroup) -> f64 {
        let n = group.unitary_count();
        let mut worst = 0.0f64;
        for a in 0..n {
            for b in 0..n {
                let lhs = &self.matrices[a] * &self.matrices[b];
                worst = worst.max(lhs.max_abs_diff(&self.matrices[group.product(a, b)]));
            }
        }
        worst
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CharacterTable {
    pub point: HighSymmetryPoint,
    pub group_name: &'static str,
    pub irreps: Vec<Irrep>,
}

fn real(v: f64) -> C64 {
    C64::new(v, 0.0)
}

fn row_convention(rows: [[f64; 2]; 2]) -> CMat {
    CMat::from_real(&[&rows[0], &rows[1]]).transpose()
}

fn c4v_e(p: PointOp) -> CMat {
    row_convention(match p {
        PointOp::E => [[1.0, 0.0], [0.0, 1.0]],
        PointOp::C2 => [[-1.0, 0.0], [0.0, -1.0]],
        PointOp::C4 => [[0.0, 1.0], [-1.0, 0.0]],
        PointOp::C4Inv => [[0.0, -1.0], [1.0, 0.0]],
        PointOp::Sx => [[0.0, -1.0], [-1.0, 0.0]],
        PointOp::Sy => [[0.0, 1.0], [1.0, 0.0]],
        PointOp::Sd => [[-1.0, 0.0], [0.0, 1.0]],
        PointOp::Sdp => [[1.0, 0.0], [0.0, -1.0]],
    })
}

/// E_u at M on (e, C4, C4i, C2, mx-bar, my-bar, sd-bar, sdp-bar); the partners differ by sign.
fn d4h_eu(p: PointOp, bar: bool) -> CMat {
    let mirror = matches!(p, PointOp::Sx | PointOp::Sy | PointOp::Sd | PointOp::Sdp);
    let m = row_convention(match p {
        PointOp::E => [[1.0, 0.0], [0.0, 1.0]],
        PointOp::C4 => [[0.0, -1.0], [1.0, 0.0]],
        PointOp::C4Inv => [[0.0, 1.0], [-1.0, 0.0]],
        PointOp::C2 => [[-1.0, 0.0], [0.0, -1.0]],
        PointOp::Sx => [[0.0, -1.0], [-1.0, 0.0]],
        PointOp::Sy => [[0.0, 1.0], [1.0, 0.0]],
        PointOp::Sd => [[1.0, 0.0], [0.0, -1.0]],
        PointOp::Sdp => [[-1.0, 0.0], [0.0, 1.0]],
    });
    if bar != mirror {
        m.neg()
    } else {
        m
    }
}

const C4V_ROWS: [(&str, [f64; 8]); 4] = [
    ("A1", [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]),
    ("A2", [1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0]),
    ("B1", [1.0, 1.0, -1.0, -1.0, 1.0, 1.0, -1.0, -1.0]),
    ("B2", [1.0, 1.0, -1.0, -1.0, -1.0, -1.0, 1.0, 1.0]),
];

/// D2h at X on (e, c, my, mx); the barred partner carries the parity sign.
const D2H_ROWS: [(&str, [f64; 4], f64); 8] = [
    ("Ag", [1.0, 1.0, 1.0, 1.0], 1.0),
    ("B1g", [1.0, 1.0, -1.0, -1.0], 1.0),
    ("B2g", [1.0, -1.0, 1.0, -1.0], 1.0),
    ("B3g", [1.0, -1.0, -1.0, 1.0], 1.0),
    ("Au", [1.0, 1.0, 1.0, 1.0], -1.0),
    ("B1u", [1.0, 1.0, -1.0, -1.0], -1.0),
    ("B2u", [1.0, -1.0, 1.0, -1.0], -1.0),
    ("B3u", [1.0, -1.0, -1.0, 1.0], -1.0),
];

/// D4h at M on the classes
/// e | C4,C4i | C2 | mx-bar,my-bar | sd-bar,sdp-bar | e-bar | C4-bar,C4i-bar | C2-bar | mx,my | sd,sdp.
const D4H_ROWS: [(&str, [f64; 10]); 8] = [
    ("A1g", [1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0, 1.0]),
    ("A2g", [1.0, 1.0, 1.0, -1.0, -1.0, 1.0, 1.0, 1.0, -1.0, -1.0]),
    ("B1g", [1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0]),
    ("B2g", [1.0, -1.0, 1.0, -1.0, 1.0, 1.0, -1.0, 1.0, -1.0, 1.0]),
    ("A1u", [1.0, 1.0, 1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0, -1.0]),
    ("A2u", [1.0, 1.0, 1.0, -1.0, -1.0, -1.0, -1.0, -1.0, 1.0, 1.0]),
    ("B1u", [1.0, -1.0, 1.0, 1.0, -1.0, -1.0, 1.0, -1.0, -1.0, 1.0]),
    ("B2u", [1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0, 1.0, -1.0]),
];

fn d4h_class(p: PointOp, bar: bool) -> usize {
    let mirror = matches!(p, PointOp::Sx | PointOp::Sy | PointOp::Sd | PointOp::Sdp);
    let base = match p {
        PointOp::E => 0,
        PointOp::C4 | PointOp::C4Inv => 1,
        PointOp::C2 => 2,
        PointOp::Sx | PointOp::Sy => 3,
        PointOp::Sd | PointOp::Sdp => 4,
    };
    // mirrors sit with the unbarred rotations when barred
    if bar != mirror {
        base + 5
    } else {
        base
    }
}

impl CharacterTable {
    pub fn for_group(group: &LittleGroup) -> Result<Self> {
        let point = group.point().ok_or_else(|| Error::NoCharacterTable(group.k().to_string()))?;
        let unitary: Vec<(PointOp, bool)> =
            (0..group.unitary_count()).map(|i| (group.element(i).point, group.is_bar(i))).collect();
        let scalar_rows = |f: &dyn Fn(PointOp, bool) -> f64| -> Vec<CMat> {
            unitary.iter().map(|&(p, b)| CMat::scalar(real(f(p, b)))).collect()
        };
        let mut irreps = Vec::new();
        let group_name = match point {
            HighSymmetryPoint::Gamma => {
                for (name, row) in C4V_ROWS {
                    let matrices = scalar_rows(&|p, _| row[p.index()]);
                    irreps.push(Irrep { name, dim: 1, physical: true, matrices });
                }
                let matrices = unitary.iter().map(|&(p, _)| c4v_e(p)).collect();
                irreps.push(Irrep { name: "E", dim: 2, physical: true, matrices });
                "C4v"
            }
            HighSymmetryPoint::X => {
                for (name, row, bar_sign) in D2H_ROWS {
                    let matrices = scalar_rows(&|p, b| {
                        let v = match p {
                            PointOp::E => row[0],
                            PointOp::C2 => row[1],
                            PointOp::Sy => row[2],
                            PointOp::Sx => row[3],
                            _ => unreachable!("not in the group of X"),
                        };
                        if b {
                            v * bar_sign
                        } else {
                            v
                        }
                    });
                    irreps.push(Irrep { name, dim: 1, physical: bar_sign < 0.0, matrices });
                }
                "D2h"
            }
            HighSymmetryPoint::M => {
                for (name, row) in D4H_ROWS {
                    let physical = row[5] < 0.0;
                    let matrices = scalar_rows(&|p, b| row[d4h_class(p, b)]);
                    irreps.push(Irrep { name, dim: 1, physical, matrices });
                    if name == "B2g" {
                        // E_g = E_u x A1u
                        let a1u = D4H_ROWS[4].1;
                        let matrices =
                            unitary.iter().map(|&(p, b)| d4h_eu(p, b).scale(real(a1u[d4h_class(p, b)]))).collect();
                        irreps.push(Irrep { name: "Eg", dim: 2, physical: false, matrices });
                    }
                }
                let matrices = unitary.iter().map(|&(p, b)| d4h_eu(p, b)).collect();
                irreps.push(Irrep { name: "Eu", dim: 2, physical: true, matrices });
                "D4h"
            }
        };
        Ok(CharacterTable { point, group_name, irreps })
    }

    pub fn irrep(&self, name: &str) -> Option<&Irrep> {
        self.irreps.iter().find(|i| i.name == name)
    }

    pub fn physical(&self) -> impl Iterator<Item = &Irrep> {
        self.irreps.iter().filter(|i| i.physical)
    }

    /// The abstract point group the unitary subgroup is isomorphic to.
    pub fn abstract_group(&self) -> FiniteGroup {
        match self.point {
            HighSymmetryPoint::Gamma => FiniteGroup::c4v(),
            HighSymmetryPoint::X => FiniteGroup::d2h(),
            HighSymmetryPoint::M => FiniteGroup::d4h(),
        }
    }
}
