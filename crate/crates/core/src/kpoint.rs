//! Bloch vectors and paths through the square Brillouin zone.
//!
//! Bloch vectors are stored in units of pi/Lambda, so the zone corner is (1, 1)
//! and reciprocal lattice vectors have even components.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

const INTEGER_TOL: f64 = 1e-9;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BlochVector(pub [f64; 2]);

impl BlochVector {
    pub const GAMMA: BlochVector = BlochVector([0.0, 0.0]);
    pub const X: BlochVector = BlochVector([1.0, 0.0]);
    pub const M: BlochVector = BlochVector([1.0, 1.0]);

    pub fn new(kx: f64, ky: f64) -> Self {
        BlochVector([kx, ky])
    }

    pub fn x(&self) -> f64 {
        self.0[0]
    }

    pub fn y(&self) -> f64 {
        self.0[1]
    }

    /// Components in units of 2 pi / Lambda.
    pub fn in_reciprocal_units(&self) -> [f64; 2] {
        [self.0[0] / 2.0, self.0[1] / 2.0]
    }

    /// Integer components, if every component is an integer.
    pub fn as_integer(&self) -> Option<[i32; 2]> {
        let r = [self.0[0].round(), self.0[1].round()];
        if (self.0[0] - r[0]).abs() < INTEGER_TOL && (self.0[1] - r[1]).abs() < INTEGER_TOL {
            Some([r[0] as i32, r[1] as i32])
        } else {
            None
        }
    }

    /// Parity of each component that is an integer; non-integer components give 0.
    pub fn parity(&self) -> [i32; 2] {
        let p = |v: f64| {
            let r = v.round();
            if (v - r).abs() < INTEGER_TOL {
                (r as i64).rem_euclid(2) as i32
            } else {
                0
            }
        };
        [p(self.0[0]), p(self.0[1])]
    }

    /// True when `self - other` is a reciprocal lattice vector.
    pub fn equivalent(&self, other: &BlochVector) -> bool {
        let even = |v: f64| {
            let h = v / 2.0;
            (h - h.round()).abs() < INTEGER_TOL / 2.0
        };
        even(self.0[0] - other.0[0]) && even(self.0[1] - other.0[1])
    }

    pub fn neg(&self) -> BlochVector {
        BlochVector([-self.0[0], -self.0[1]])
    }

    pub fn lerp(&self, other: &BlochVector, t: f64) -> BlochVector {
        BlochVector([self.0[0] + (other.0[0] - self.0[0]) * t, self.0[1] + (other.0[1] - self.0[1]) * t])
    }

    pub fn distance(&self, other: &BlochVector) -> f64 {
        ((self.0[0] - other.0[0]).powi(2) + (self.0[1] - other.0[1]).powi(2)).sqrt()
    }

    pub fn high_symmetry_point(&self) -> Option<HighSymmetryPoint> {
        HighSymmetryPoint::ALL.into_iter().find(|p| p.bloch().equivalent(self))
    }
}

impl fmt::Display for BlochVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}, {})", self.0[0], self.0[1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum HighSymmetryPoint {
    Gamma,
    X,
    M,
}

impl HighSymmetryPoint {
    pub const ALL: [HighSymmetryPoint; 3] = [HighSymmetryPoint::Gamma, HighSymmetryPoint::X, HighSymmetryPoint::M];

    pub fn bloch(self) -> BlochVector {
        match self {
            HighSymmetryPoint::Gamma => BlochVector::GAMMA,
            HighSymmetryPoint::X => BlochVector::X,
            HighSymmetryPoint::M => BlochVector::M,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            HighSymmetryPoint::Gamma => "gamma",
            HighSymmetryPoint::X => "x",
            HighSymmetryPoint::M => "m",
        }
    }

    pub fn symbol(self) -> &'static str {
        match self {
            HighSymmetryPoint::Gamma => "Γ",
            HighSymmetryPoint::X => "X",
            HighSymmetryPoint::M => "M",
        }
    }
}

impl fmt::Display for HighSymmetryPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.symbol())
    }
}

impl FromStr for HighSymmetryPoint {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s.trim().to_ascii_lowercase().as_str() {
            "gamma" | "g" | "γ" => Ok(HighSymmetryPoint::Gamma),
            "x" => Ok(HighSymmetryPoint::X),
            "m" => Ok(HighSymmetryPoint::M),
            other => Err(Error::Config(format!("unknown high-symmetry point '{other}'"))),
        }
    }
}

/// Parses either a high-symmetry name or a pair "kx,ky" in units of pi/Lambda.
pub fn parse_bloch(s: &str) -> Result<BlochVector> {
    if let Ok(p) = s.parse::<HighSymmetryPoint>() {
        return Ok(p.bloch());
    }
    let parts: Vec<&str> = s.split(',').collect();
    if parts.len() == 2 {
        let kx = parts[0].trim().parse::<f64>();
        let ky = parts[1].trim().parse::<f64>();
        if let (Ok(kx), Ok(ky)) = (kx, ky) {
            if kx.is_finite() && ky.is_finite() {
                return Ok(BlochVector::new(kx, ky));
            }
        }
    }
    Err(Error::Config(format!("cannot parse k-point '{s}'")))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PathSample {
    pub segment: usize,
    pub index: usize,
    pub k: BlochVector,
    /// Distance from the start of the segment, in units of pi/Lambda.
    pub local: f64,
    /// Distance from the start of the path, in units of pi/Lambda.
    pub cumulative: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct KPath {
    pub vertices: Vec<HighSymmetryPoint>,
    pub samples_per_segment: usize,
}

impl KPath {
    pub fn new(vertices: Vec<HighSymmetryPoint>, samples_per_segment: usize) -> Result<Self> {
        if vertices.len() < 2 {
            return Err(Error::Config("a path needs at least two vertices".into()));
        }
        if samples_per_segment == 0 {
            return Err(Error::Config("samples per segment must be positive".into()));
        }
        if vertices.windows(2).any(|w| w[0] == w[1]) {
            return Err(Error::Config("consecutive path vertices must differ".into()));
        }
        Ok(KPath { vertices, samples_per_segment })
    }

    /// The Gamma-X-M-Gamma loop.
    pub fn standard(samples_per_segment: usize) -> Self {
        use HighSymmetryPoint::*;
        KPath { vertices: vec![Gamma, X, M, Gamma], samples_per_segment }
    }

    pub fn parse(spec: &str, samples_per_segment: usize) -> Result<Self> {
        let vertices =
            spec.split([',', '-']).filter(|s| !s.trim().is_empty()).map(str::parse).collect::<Result<Vec<_>>>()?;
        KPath::new(vertices, samples_per_segment)
    }

    pub fn segment_count(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Samples along every segment. Segment s holds `samples_per_segment + 1` points
    /// including both endpoints, so shared vertices appear at the end of one segment
    /// and the start of the next.
    pub fn samples(&self) -> Vec<PathSample> {
        let mut out = Vec::new();
        let mut offset = 0.0;
        for (s, w) in self.vertices.windows(2).enumerate() {
            let (a, b) = (w[0].bloch(), w[1].bloch());
            let len = a.distance(&b);
            for i in 0..=self.samples_per_segment {
                let t = i as f64 / self.samples_per_segment as f64;
                out.push(PathSample {
                    segment: s,
                    index: i,
                    k: a.lerp(&b, t),
                    local: t * len,
                    cumulative: offset + t * len,
                });
            }
            offset += len;
        }
        out
    }

    /// Dense samples over the last `fraction` of each segment that touches `vertex`,
    /// ordered so the vertex is the final point.
    pub fn refinement(&self, vertex: HighSymmetryPoint, points: usize, fraction: f64) -> Vec<PathSample> {
        let mut out = Vec::new();
        for (s, w) in self.vertices.windows(2).enumerate() {
            let (a, b) = (w[0], w[1]);
            let (far, near) = if b == vertex {
                (a.bloch(), b.bloch())
            } else if a == vertex {
                (b.bloch(), a.bloch())
            } else {
                continue;
            };
            let len = far.distance(&near);
            for i in 0..points {
                let t = 1.0 - fraction + fraction * i as f64 / (points - 1).max(1) as f64;
                out.push(PathSample {
                    segment: s,
                    index: i,
                    k: far.lerp(&near, t),
                    local: t * len,
                    cumulative: t * len,
                });
            }
        }
        out
    }
}
