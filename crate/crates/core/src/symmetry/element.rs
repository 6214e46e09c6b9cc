use std::fmt;

use serde::{Deserialize, Serialize};

/// The eight point operations of C4v. Rotations are counter-clockwise.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum PointOp {
    E,
    C2,
    C4,
    C4Inv,
    /// Mirror x -> -x.
    Sx,
    /// Mirror y -> -y.
    Sy,
    /// Mirror across the line y = x.
    Sd,
    /// Mirror across the line y = -x.
    Sdp,
}

impl PointOp {
    /// Conventional C4v listing order.
    pub const ALL: [PointOp; 8] =
        [PointOp::E, PointOp::C2, PointOp::C4, PointOp::C4Inv, PointOp::Sx, PointOp::Sy, PointOp::Sd, PointOp::Sdp];

    pub fn matrix(self) -> [[i32; 2]; 2] {
        match self {
            PointOp::E => [[1, 0], [0, 1]],
            PointOp::C2 => [[-1, 0], [0, -1]],
            PointOp::C4 => [[0, -1], [1, 0]],
            PointOp::C4Inv => [[0, 1], [-1, 0]],
            PointOp::Sx => [[-1, 0], [0, 1]],
            PointOp::Sy => [[1, 0], [0, -1]],
            PointOp::Sd => [[0, 1], [1, 0]],
            PointOp::Sdp => [[0, -1], [-1, 0]],
        }
    }

    pub fn from_matrix(m: [[i32; 2]; 2]) -> Option<PointOp> {
        PointOp::ALL.into_iter().find(|p| p.matrix() == m)
    }

    pub fn index(self) -> usize {
        PointOp::ALL.iter().position(|&p| p == self).unwrap()
    }

    pub fn apply(self, v: [i32; 2]) -> [i32; 2] {
        let m = self.matrix();
        [m[0][0] * v[0] + m[0][1] * v[1], m[1][0] * v[0] + m[1][1] * v[1]]
    }

    pub fn apply_f64(self, v: [f64; 2]) -> [f64; 2] {
        let m = self.matrix();
        [m[0][0] as f64 * v[0] + m[0][1] as f64 * v[1], m[1][0] as f64 * v[0] + m[1][1] as f64 * v[1]]
    }

    /// `self * other`: apply `other` first.
    pub fn compose(self, other: PointOp) -> PointOp {
        let a = self.matrix();
        let b = other.matrix();
        let mut c = [[0; 2]; 2];
        for i in 0..2 {
            for j in 0..2 {
                c[i][j] = a[i][0] * b[0][j] + a[i][1] * b[1][j];
            }
        }
        PointOp::from_matrix(c).expect("C4v is closed")
    }

    pub fn inverse(self) -> PointOp {
        match self {
            PointOp::C4 => PointOp::C4Inv,
            PointOp::C4Inv => PointOp::C4,
            p => p,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            PointOp::E => "E",
            PointOp::C2 => "C2",
            PointOp::C4 => "C4",
            PointOp::C4Inv => "C4i",
            PointOp::Sx => "mx",
            PointOp::Sy => "my",
            PointOp::Sd => "sd",
            PointOp::Sdp => "sdp",
        }
    }

    /// Name of the antiunitary element built from this rotation part.
    pub fn antiunitary_name(self) -> &'static str {
        match self {
            PointOp::E => "xi",
            PointOp::C2 => "zeta",
            PointOp::C4 => "gamma",
            PointOp::C4Inv => "gammai",
            PointOp::Sx => "mux",
            PointOp::Sy => "muy",
            PointOp::Sd => "mud",
            PointOp::Sdp => "mudp",
        }
    }
}

impl std::ops::Add for HalfVec {
    type Output = HalfVec;

    fn add(self, o: HalfVec) -> HalfVec {
        HalfVec([self.0[0] + o.0[0], self.0[1] + o.0[1]])
    }
}

impl std::ops::Neg for HalfVec {
    type Output = HalfVec;

    fn neg(self) -> HalfVec {
        HalfVec([-self.0[0], -self.0[1]])
    }
}

/// A lattice translation measured in half lattice constants.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct HalfVec(pub [i32; 2]);

impl HalfVec {
    pub const ZERO: HalfVec = HalfVec([0, 0]);
    /// (1/2, 1/2).
    pub const SHIFT: HalfVec = HalfVec([1, 1]);

    pub fn from_lattice(t: [i32; 2]) -> HalfVec {
        HalfVec([2 * t[0], 2 * t[1]])
    }

    /// In units of the lattice constant.
    pub fn as_f64(self) -> [f64; 2] {
        [self.0[0] as f64 / 2.0, self.0[1] as f64 / 2.0]
    }

    /// Splits into a fractional part in {0, 1/2}^2 (as numerators) and an integer lattice vector.
    pub fn split(self) -> (HalfVec, [i32; 2]) {
        let f = [self.0[0].rem_euclid(2), self.0[1].rem_euclid(2)];
        let t = [(self.0[0] - f[0]) / 2, (self.0[1] - f[1]) / 2];
        (HalfVec(f), t)
    }
}

/// A Seitz operation {R | tau}, optionally combined with time reversal.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct SymmetryElement {
    pub point: PointOp,
    pub translation: HalfVec,
    pub antiunitary: bool,
}

impl SymmetryElement {
    pub fn new(point: PointOp, translation: HalfVec, antiunitary: bool) -> Self {
        SymmetryElement { point, translation, antiunitary }
    }

    pub fn identity() -> Self {
        Self::unitary(PointOp::E, HalfVec::ZERO)
    }

    pub fn unitary(point: PointOp, translation: HalfVec) -> Self {
        Self::new(point, translation, false)
    }

    pub fn antiunitary(point: PointOp, translation: HalfVec) -> Self {
        Self::new(point, translation, true)
    }

    /// {E | 1/2, 1/2}.
    pub fn half_shift() -> Self {
        Self::unitary(PointOp::E, HalfVec::SHIFT)
    }

    /// T{E | 1/2, 1/2}.
    pub fn xi() -> Self {
        Self::antiunitary(PointOp::E, HalfVec::SHIFT)
    }

    /// `self * other` = {R_a R_b | tau_a + R_a tau_b}.
    pub fn compose(&self, other: &SymmetryElement) -> SymmetryElement {
        let rt = self.point.apply(other.translation.0);
        SymmetryElement {
            point: self.point.compose(other.point),
            translation: self.translation + HalfVec(rt),
            antiunitary: self.antiunitary ^ other.antiunitary,
        }
    }

    pub fn inverse(&self) -> SymmetryElement {
        let rinv = self.point.inverse();
        SymmetryElement {
            point: rinv,
            translation: -HalfVec(rinv.apply(self.translation.0)),
            antiunitary: self.antiunitary,
        }
    }

    pub fn square(&self) -> SymmetryElement {
        self.compose(self)
    }

    /// The linear part acting on wavevectors: R for unitary elements, -R for antiunitary ones.
    pub fn k_matrix(&self) -> [[i32; 2]; 2] {
        let m = self.point.matrix();
        if self.antiunitary {
            [[-m[0][0], -m[0][1]], [-m[1][0], -m[1][1]]]
        } else {
            m
        }
    }

    /// Action on a position: R r + tau.
    pub fn apply_position(&self, r: [f64; 2]) -> [f64; 2] {
        let p = self.point.apply_f64(r);
        let t = self.translation.as_f64();
        [p[0] + t[0], p[1] + t[1]]
    }
}

impl fmt::Display for SymmetryElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let t = self.translation.0;
        let half = |v: i32| {
            if v % 2 == 0 {
                format!("{}", v / 2)
            } else {
                format!("{}/2", v)
            }
        };
        if self.antiunitary {
            write!(f, "T")?;
        }
        write!(f, "{{{}|{},{}}}", self.point.name(), half(t[0]), half(t[1]))
    }
}

/// The sixteen coset representatives of the magnetic group C4v + {T | 1/2, 1/2} C4v.
pub fn space_group_cosets() -> Vec<SymmetryElement> {
    let mut out: Vec<SymmetryElement> =
        PointOp::ALL.iter().map(|&p| SymmetryElement::unitary(p, HalfVec::ZERO)).collect();
    out.extend(PointOp::ALL.iter().map(|&p| SymmetryElement::antiunitary(p, HalfVec::SHIFT)));
    out
}
