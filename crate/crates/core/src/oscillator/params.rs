use serde::Serialize;

use crate::{Error, Result};

/// Mass, angular frequency and reduced Planck constant. Defaults are all 1.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct OscillatorParams {
    pub mass: f64,
    pub omega: f64,
    pub hbar: f64,
}

impl Default for OscillatorParams {
    fn default() -> Self {
        Self { mass: 1.0, omega: 1.0, hbar: 1.0 }
    }
}

impl OscillatorParams {
    pub fn new(mass: f64, omega: f64, hbar: f64) -> Result<Self> {
        for (name, v) in [("mass", mass), ("omega", omega), ("hbar", hbar)] {
            if !(v.is_finite() && v > 0.0) {
                return Err(Error::InvalidParams(format!("{name} must be a positive finite number, got {v}")));
            }
        }
        Ok(Self { mass, omega, hbar })
    }

    /// Scale of position: `sqrt(hbar / (2 m omega))`.
    pub fn position_scale(&self) -> f64 {
        (self.hbar / (2.0 * self.mass * self.omega)).sqrt()
    }

    /// Scale of momentum: `sqrt(m omega hbar / 2)`.
    pub fn momentum_scale(&self) -> f64 {
        (self.mass * self.omega * self.hbar / 2.0).sqrt()
    }
}
