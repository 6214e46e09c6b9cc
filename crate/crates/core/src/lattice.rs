//! Gain/loss rod lattice and the Fourier coefficients of its inverse permittivity.
//!
//! Lengths are in units of the lattice constant. The gain rod is centred at the
//! origin and the loss rod at (1/2, 1/2); both are `d_x` by `d_y` rectangles in a
//! background of index `n_r`.

use std::collections::HashMap;

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Largest accepted truncation order; the basis has roughly (2N+2)^2 waves.
pub const MAX_TRUNCATION: usize = 20;

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
#[serde(default, deny_unknown_fields)]
pub struct LatticeConfig {
    pub lattice_constant: f64,
    pub d_x: f64,
    pub d_y: f64,
    pub n_r: f64,
    pub n_i: f64,
    pub delta_n: f64,
    pub truncation: usize,
}

impl Default for LatticeConfig {
    fn default() -> Self {
        LatticeConfig { lattice_constant: 1.0, d_x: 0.5, d_y: 0.5, n_r: 2.0, n_i: 0.05, delta_n: 0.0, truncation: 7 }
    }
}

impl LatticeConfig {
    /// Homogeneous medium of index `n_r` (rods identical to the background).
    pub fn empty(n_r: f64, truncation: usize) -> Self {
        LatticeConfig { n_r, n_i: 0.0, delta_n: 0.0, truncation, ..Default::default() }
    }

    pub fn with_ni(&self, n_i: f64) -> Self {
        LatticeConfig { n_i, ..self.clone() }
    }

    pub fn validate(&self) -> Result<()> {
        let finite =
            [self.lattice_constant, self.d_x, self.d_y, self.n_r, self.n_i, self.delta_n].iter().all(|v| v.is_finite());
        if !finite {
            return Err(Error::Config("all parameters must be finite".into()));
        }
        if self.lattice_constant <= 0.0 {
            return Err(Error::Config("lattice_constant must be positive".into()));
        }
        if !(self.d_x > 0.0 && self.d_x <= 0.5 && self.d_y > 0.0 && self.d_y <= 0.5) {
            return Err(Error::Config("rod sides must satisfy 0 < d <= 1/2".into()));
        }
        if self.n_r <= 0.0 {
            return Err(Error::Config("n_r must be positive".into()));
        }
        if self.n_i < 0.0 || self.delta_n < 0.0 {
            return Err(Error::Config("n_i and delta_n must be non-negative".into()));
        }
        if self.truncation > MAX_TRUNCATION {
            return Err(Error::Config(format!("truncation must not exceed {MAX_TRUNCATION}")));
        }
        Ok(())
    }

    pub fn from_json_str(text: &str) -> Result<Self> {
        let cfg: LatticeConfig = serde_json::from_str(text).map_err(|e| Error::Config(e.to_string()))?;
        cfg.validate()?;
        Ok(cfg)
    }

    pub fn from_json_file(path: &std::path::Path) -> Result<Self> {
        Self::from_json_str(&std::fs::read_to_string(path)?)
    }

    pub fn is_hermitian(&self) -> bool {
        self.n_i == 0.0
    }

    /// Permittivity of the gain rod.
    pub fn eps_gain(&self) -> C64 {
        let n = C64::new(self.n_r + self.delta_n, self.n_i);
        n * n
    }

    /// Permittivity of the loss rod.
    pub fn eps_loss(&self) -> C64 {
        let n = C64::new(self.n_r + self.delta_n, -self.n_i);
        n * n
    }

    pub fn eps_background(&self) -> f64 {
        self.n_r * self.n_r
    }

    /// Relative permittivity at a point of the unit cell (coordinates wrap periodically).
    pub fn permittivity_at(&self, x: f64, y: f64) -> C64 {
        let inside = |cx: f64, cy: f64| {
            let dx = wrap(x - cx);
            let dy = wrap(y - cy);
            dx.abs() < self.d_x / 2.0 && dy.abs() < self.d_y / 2.0
        };
        if inside(0.0, 0.0) {
            self.eps_gain()
        } else if inside(0.5, 0.5) {
            self.eps_loss()
        } else {
            C64::new(self.eps_background(), 0.0)
        }
    }
}

fn wrap(v: f64) -> f64 {
    v - v.round()
}

fn sinc(x: f64) -> f64 {
    if x.abs() < 1e-8 {
        1.0 - x * x / 6.0
    } else {
        x.sin() / x
    }
}

/// Fourier coefficients eta(G) = (1/A) * integral of (1/eps) exp(-i G.r) over the cell,
/// with G = 2 pi (m, n).
#[derive(Debug, Clone)]
pub struct InversePermittivity {
    config: LatticeConfig,
    cache: HashMap<[i32; 2], C64>,
}

impl InversePermittivity {
    pub fn new(config: &LatticeConfig) -> Self {
        InversePermittivity { config: config.clone(), cache: HashMap::new() }
    }

    pub fn config(&self) -> &LatticeConfig {
        &self.config
    }

    /// Closed-form coefficient for the reciprocal vector (m, n).
    pub fn coefficient(&self, g: [i32; 2]) -> C64 {
        let c = &self.config;
        let [m, n] = g;
        let inv_bg = 1.0 / c.eps_background();
        let rod = c.d_x
            * c.d_y
            * sinc(std::f64::consts::PI * m as f64 * c.d_x)
            * sinc(std::f64::consts::PI * n as f64 * c.d_y);
        let dg = c.eps_gain().inv() - inv_bg;
        let dl = c.eps_loss().inv() - inv_bg;
        let sign = if (m + n).rem_euclid(2) == 0 { 1.0 } else { -1.0 };
        let mut eta = (dg + dl * sign) * rod;
        if m == 0 && n == 0 {
            eta += inv_bg;
        }
        eta
    }

    /// Memoised version of [`coefficient`](Self::coefficient).
    pub fn get(&mut self, g: [i32; 2]) -> C64 {
        if let Some(v) = self.cache.get(&g) {
            return *v;
        }
        let v = self.coefficient(g);
        self.cache.insert(g, v);
        v
    }
}
