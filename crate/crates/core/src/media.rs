//! Working media: physical constants, the spinless electron on a 1D quantum
//! ring, and a generic medium specified directly by its gaps.

use serde::{Deserialize, Serialize};

use crate::error::{QtmError, Result};
use crate::otto::{LevelPair, TwoLevelMedium};

/// CODATA 2018 reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;
/// CODATA 2018 Boltzmann constant (exact), J/K.
pub const BOLTZMANN_K: f64 = 1.380_649e-23;
/// CODATA 2018 electron rest mass, kg.
pub const ELECTRON_MASS: f64 = 9.109_383_701_5e-31;

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct PhysicalConstants {
    pub hbar: f64,
    pub boltzmann_k: f64,
    pub electron_mass: f64,
}

impl Default for PhysicalConstants {
    fn default() -> Self {
        Self {
            hbar: HBAR,
            boltzmann_k: BOLTZMANN_K,
            electron_mass: ELECTRON_MASS,
        }
    }
}

impl PhysicalConstants {
    /// Reduced units, `ħ = k_B = m_e = 1`.
    pub fn reduced() -> Self {
        Self {
            hbar: 1.0,
            boltzmann_k: 1.0,
            electron_mass: 1.0,
        }
    }

    pub fn validate(&self) -> Result<()> {
        for (name, v) in [
            ("hbar", self.hbar),
            ("boltzmann_k", self.boltzmann_k),
            ("electron_mass", self.electron_mass),
        ] {
            if !(v.is_finite() && v > 0.0) {
                return Err(QtmError::InvalidConstants(format!(
                    "{name} must be finite and positive, got {v}"
                )));
            }
        }
        Ok(())
    }
}

/// Spinless electron confined to a ring of radius `radius`. Only the two
/// lowest levels, `m = 1` and `m = 2`, take part in the cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct QuantumRing {
    radius: f64,
    effective_mass: f64,
}

impl QuantumRing {
    pub const M_GROUND: u32 = 1;
    pub const M_EXCITED: u32 = 2;

    pub fn new(radius: f64, effective_mass: f64) -> Result<Self> {
        let ok = radius.is_finite() && radius > 0.0 && effective_mass.is_finite() && effective_mass > 0.0;
        if !ok {
            return Err(QtmError::InvalidRing {
                radius,
                mass: effective_mass,
            });
        }
        Ok(Self {
            radius,
            effective_mass,
        })
    }

    /// Ring with the free-electron mass from `constants`.
    pub fn free_electron(radius: f64, constants: &PhysicalConstants) -> Result<Self> {
        Self::new(radius, constants.electron_mass)
    }

    pub fn radius(&self) -> f64 {
        self.radius
    }

    pub fn effective_mass(&self) -> f64 {
        self.effective_mass
    }

    /// `E_m = ħ² m² / (2 m_e r²)`.
    pub fn level(&self, m: u32, constants: &PhysicalConstants) -> f64 {
        let unit = constants.hbar * constants.hbar
            / (2.0 * self.effective_mass * self.radius * self.radius);
        unit * f64::from(m * m)
    }
}

/// Ground (`m = 1`) and first excited (`m = 2`) ring levels. The excited
/// level is always four times the ground level.
pub fn ring_levels(ring: &QuantumRing, constants: &PhysicalConstants) -> Result<LevelPair> {
    constants.validate()?;
    QuantumRing::new(ring.radius, ring.effective_mass)?;
    let ground = ring.level(QuantumRing::M_GROUND, constants);
    Ok(LevelPair::new(ground, 4.0 * ground))
}

/// Radii and reservoirs of a ring Otto cycle.
///
/// `r_low` is the radius while the gap is `Δ^l` (contact with `TR^l`) and
/// `r_high` the radius while the gap is `Δ^h` (contact with `TR^h`). The
/// compression ratio is `ρ = r_low / r_high = α`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RingOttoSetup {
    pub r_low: f64,
    pub r_high: f64,
    pub t_low: f64,
    pub theta_sq: f64,
    /// Falls back to the free-electron mass when `None`.
    pub effective_mass: Option<f64>,
}

impl RingOttoSetup {
    pub fn from_rho(r_low: f64, rho: f64, t_low: f64, theta_sq: f64) -> Result<Self> {
        if !(rho.is_finite() && rho > 0.0) {
            return Err(QtmError::InvalidSweep(format!(
                "compression ratio must be positive, got {rho}"
            )));
        }
        Ok(Self {
            r_low,
            r_high: r_low / rho,
            t_low,
            theta_sq,
            effective_mass: None,
        })
    }

    pub fn rho(&self) -> f64 {
        self.r_low / self.r_high
    }

    pub fn alpha_sq(&self) -> f64 {
        self.rho() * self.rho()
    }
}

/// Two-level medium realised by the ring at radii `r_low` and `r_high`.
pub fn ring_medium(setup: &RingOttoSetup, constants: &PhysicalConstants) -> Result<TwoLevelMedium> {
    let mass = setup.effective_mass.unwrap_or(constants.electron_mass);
    let low = ring_levels(&QuantumRing::new(setup.r_low, mass)?, constants)?;
    let high = ring_levels(&QuantumRing::new(setup.r_high, mass)?, constants)?;
    TwoLevelMedium::new(low, high)
}

/// Medium with explicit gaps: `Δ^l = gap_low`, `Δ^h = alpha_sq · gap_low`,
/// and ground levels placed at the given energies.
pub fn gap_medium(
    gap_low: f64,
    alpha_sq: f64,
    e_ground_low: f64,
    e_ground_high: f64,
) -> Result<TwoLevelMedium> {
    let ok = gap_low.is_finite() && gap_low > 0.0 && alpha_sq.is_finite() && alpha_sq > 0.0;
    if !ok {
        return Err(QtmError::InvalidGap { gap_low, alpha_sq });
    }
    TwoLevelMedium::new(
        LevelPair::new(e_ground_low, e_ground_low + gap_low),
        LevelPair::new(e_ground_high, e_ground_high + alpha_sq * gap_low),
    )
}
