//! Flat JSON configuration for sweeps.
//!
//! Every key is optional; omitted keys fall back to the reference ring setup
//! (`T^l = 1 K`, `θ² = 5`, `r^l = 100 nm`, 600-point grid on `[0.05, 3]`).
//! Physical constants come from CODATA 2018 (or reduced units), then from
//! the config file, then from the file named by `QTM_CONSTANTS`.

use std::path::Path;

use serde::Deserialize;

use crate::error::{QtmError, Result};
use crate::media::PhysicalConstants;
use crate::sweep::{
    uniform_grid, with_boundaries, MediumKind, Normalization, SweepSpec, DEFAULT_RHO_MAX,
    DEFAULT_RHO_MIN, DEFAULT_RHO_POINTS,
};
use crate::thermo::DEFAULT_TOLERANCE;

pub const CONSTANTS_ENV: &str = "QTM_CONSTANTS";

fn default_t_low() -> f64 {
    1.0
}
fn default_theta_sq() -> f64 {
    5.0
}
fn default_r_low() -> f64 {
    100e-9
}
fn default_rho_min() -> f64 {
    DEFAULT_RHO_MIN
}
fn default_rho_max() -> f64 {
    DEFAULT_RHO_MAX
}
fn default_rho_points() -> usize {
    DEFAULT_RHO_POINTS
}
fn default_true() -> bool {
    true
}
fn default_medium() -> MediumKind {
    MediumKind::QuantumRing
}
fn default_normalization() -> Normalization {
    Normalization::MaxAbsEnergy
}
fn default_tolerance() -> f64 {
    DEFAULT_TOLERANCE
}

#[derive(Debug, Clone, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct SweepConfig {
    #[serde(default = "default_t_low")]
    pub t_low: f64,
    #[serde(default = "default_theta_sq")]
    pub theta_sq: f64,
    #[serde(default = "default_r_low", alias = "gap_low")]
    pub r_low: f64,
    /// Explicit grid; overrides `rho_min`/`rho_max`/`rho_points`.
    #[serde(default)]
    pub rho_grid: Option<Vec<f64>>,
    #[serde(default = "default_rho_min")]
    pub rho_min: f64,
    #[serde(default = "default_rho_max")]
    pub rho_max: f64,
    #[serde(default = "default_rho_points")]
    pub rho_points: usize,
    #[serde(default = "default_true")]
    pub inject_boundaries: bool,
    #[serde(default = "default_medium")]
    pub medium_kind: MediumKind,
    #[serde(default = "default_normalization")]
    pub normalization: Normalization,
    #[serde(default)]
    pub effective_mass: Option<f64>,
    #[serde(default)]
    pub e_ground_low: f64,
    #[serde(default)]
    pub e_ground_high: f64,
    #[serde(default = "default_tolerance")]
    pub tolerance: f64,
    #[serde(default)]
    pub reduced_units: bool,
    #[serde(default)]
    pub hbar: Option<f64>,
    #[serde(default)]
    pub boltzmann_k: Option<f64>,
    #[serde(default)]
    pub electron_mass: Option<f64>,
}

impl Default for SweepConfig {
    fn default() -> Self {
        Self::from_json("{}").expect("empty config is valid")
    }
}

/// Partial constants read from the `QTM_CONSTANTS` file.
#[derive(Debug, Clone, Copy, Default, PartialEq, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct ConstantsOverride {
    #[serde(default)]
    pub hbar: Option<f64>,
    #[serde(default)]
    pub boltzmann_k: Option<f64>,
    #[serde(default)]
    pub electron_mass: Option<f64>,
}

impl ConstantsOverride {
    pub fn apply(&self, base: PhysicalConstants) -> PhysicalConstants {
        PhysicalConstants {
            hbar: self.hbar.unwrap_or(base.hbar),
            boltzmann_k: self.boltzmann_k.unwrap_or(base.boltzmann_k),
            electron_mass: self.electron_mass.unwrap_or(base.electron_mass),
        }
    }

    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QtmError::Config(format!("constants override: {e}")))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| QtmError::io(Some(path.to_path_buf()), e))?;
        Self::from_json(&text)
    }

    /// Reads the override named by `QTM_CONSTANTS`, if the variable is set.
    pub fn from_env() -> Result<Option<Self>> {
        match std::env::var_os(CONSTANTS_ENV) {
            Some(p) if !p.is_empty() => Self::load(Path::new(&p)).map(Some),
            _ => Ok(None),
        }
    }
}

impl SweepConfig {
    pub fn from_json(text: &str) -> Result<Self> {
        serde_json::from_str(text).map_err(|e| QtmError::Config(e.to_string()))
    }

    pub fn load(path: &Path) -> Result<Self> {
        let text = std::fs::read_to_string(path).map_err(|e| QtmError::io(Some(path.to_path_buf()), e))?;
        Self::from_json(&text)
    }

    pub fn sweep_spec(&self) -> Result<SweepSpec> {
        let base = match &self.rho_grid {
            Some(g) => g.clone(),
            None => {
                if self.rho_points == 0 || !(self.rho_max > self.rho_min) {
                    return Err(QtmError::Config(format!(
                        "need rho_points > 0 and rho_max > rho_min, got {} on [{}, {}]",
                        self.rho_points, self.rho_min, self.rho_max
                    )));
                }
                uniform_grid(self.rho_min, self.rho_max, self.rho_points)
            }
        };
        let mut spec = SweepSpec {
            t_low: self.t_low,
            theta_sq: self.theta_sq,
            r_low: self.r_low,
            rho_grid: base,
            medium_kind: self.medium_kind,
            normalization: self.normalization,
            effective_mass: self.effective_mass,
            e_ground_low: self.e_ground_low,
            e_ground_high: self.e_ground_high,
            tolerance: self.tolerance,
        };
        spec.validate()?;
        if self.inject_boundaries {
            spec.rho_grid = with_boundaries(&spec.rho_grid, self.theta_sq);
        }
        Ok(spec)
    }

    /// Constants after applying the config keys and then `env_override`.
    pub fn constants(&self, env_override: Option<&ConstantsOverride>) -> Result<PhysicalConstants> {
        let base = if self.reduced_units {
            PhysicalConstants::reduced()
        } else {
            PhysicalConstants::default()
        };
        let from_file = ConstantsOverride {
            hbar: self.hbar,
            boltzmann_k: self.boltzmann_k,
            electron_mass: self.electron_mass,
        }
        .apply(base);
        let c = env_override.map_or(from_file, |o| o.apply(from_file));
        c.validate()?;
        Ok(c)
    }
}
