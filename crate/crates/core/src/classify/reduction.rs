use serde::Serialize;

use crate::corep::CharacterTable;
use crate::error::{Error, Result};
use crate::kpoint::HighSymmetryPoint;
use crate::symmetry::{LittleGroup, PointOp};

/// Point operations in the column order of the C4v character table.
pub const C4V_ORDER: [PointOp; 8] =
    [PointOp::E, PointOp::C2, PointOp::C4, PointOp::C4Inv, PointOp::Sx, PointOp::Sy, PointOp::Sd, PointOp::Sdp];

/// A C4v orbit of wavevectors k + K, stored as integer points in units of pi/Lambda.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Star {
    pub name: String,
    pub points: Vec<[i32; 2]>,
}

impl Star {
    pub fn orbit(seed: [i32; 2]) -> Star {
        let mut points: Vec<[i32; 2]> = Vec::new();
        for op in C4V_ORDER {
            let p = op.apply(seed);
            if !points.contains(&p) {
                points.push(p);
            }
        }
        points.sort_unstable();
        Star { name: format!("orbit of ({}, {})", seed[0], seed[1]), points }
    }

    /// Named stars: "gamma1" (k = 0), "gamma2" (the (±2, ±2) points),
    /// "x1" ((±1, 0), (0, ±1)), "m1" ((±1, ±1)) and "m2" ((±3, ±1), (±1, ±3)).
    pub fn named(name: &str) -> Result<Star> {
        let seed = match name.to_ascii_lowercase().as_str() {
            "gamma1" | "γ1" => [0, 0],
            "gamma2" | "γ2" => [2, 2],
            "x1" => [1, 0],
            "m1" => [1, 1],
            "m2" => [3, 1],
            _ => return Err(Error::Config(format!("unknown star '{name}'"))),
        };
        Ok(Star { name: name.to_string(), ..Star::orbit(seed) })
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    /// |k + K|^2 in units of (pi/Lambda)^2.
    pub fn radius_sq(&self) -> i32 {
        let p = self.points[0];
        p[0] * p[0] + p[1] * p[1]
    }
}

/// Every C4v orbit of integer points with |p|^2 <= `max_radius_sq`.
pub fn stars_up_to(max_radius_sq: i32) -> Vec<Star> {
    let r = (max_radius_sq as f64).sqrt() as i32;
    let mut seen: Vec<[i32; 2]> = Vec::new();
    let mut out = Vec::new();
    for x in -r..=r {
        for y in -r..=r {
            if x * x + y * y <= max_radius_sq && !seen.contains(&[x, y]) {
                let s = Star::orbit([x, y]);
                seen.extend(&s.points);
                out.push(s);
            }
        }
    }
    out
}

/// Number of star points left literally fixed by each operation, in C4V_ORDER.
pub fn fixed_point_profile(star: &Star) -> [usize; 8] {
    C4V_ORDER.map(|op| star.points.iter().filter(|&&p| op.apply(p) == p).count())
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Reduction {
    pub profile: [usize; 8],
    pub irreps: Vec<&'static str>,
    pub multiplicities: Vec<usize>,
    pub dims: Vec<usize>,
}

impl Reduction {
    /// Sum of multiplicity times dimension; equals the star size.
    pub fn total_dimension(&self) -> usize {
        self.multiplicities.iter().zip(&self.dims).map(|(m, d)| m * d).sum()
    }
}

/// Multiplicities lambda_i = (1/8) sum_R P(R) chi_i(R) of the C4v irreps in a fixed-point profile.
pub fn reduce(profile: &[usize; 8]) -> Result<Reduction> {
    let table = CharacterTable::for_group(&LittleGroup::at(HighSymmetryPoint::Gamma))?;
    let mut multiplicities = Vec::new();
    for irrep in &table.irreps {
        let chi = irrep.characters();
        let sum: f64 = profile.iter().zip(&chi).map(|(&p, c)| p as f64 * c.re).sum::<f64>() / 8.0;
        let n = sum.round();
        if (sum - n).abs() > 1e-9 || n < 0.0 {
            return Err(Error::NonIntegerMultiplicity { irrep: irrep.name.to_string(), value: sum });
        }
        multiplicities.push(n as usize);
    }
    Ok(Reduction {
        profile: *profile,
        irreps: table.irreps.iter().map(|i| i.name).collect(),
        multiplicities,
        dims: table.irreps.iter().map(|i| i.dim).collect(),
    })
}

pub fn reduce_star(star: &Star) -> Result<Reduction> {
    reduce(&fixed_point_profile(star))
}
