//! Compression-ratio sweeps of a two-level Otto medium.
//!
//! Each grid point `ρ` builds a medium with `α² = ρ²`, runs the Otto cycle,
//! classifies the resulting exchange and evaluates the two admissible
//! designs. Points are independent and are evaluated in parallel; output
//! order always follows the grid.

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::designs::{alpha_bounds, carnot_efficiency, efficiency, intersections, CarnotLimitKind, QtmDesign};
use crate::error::{QtmError, Result};
use crate::media::{gap_medium, ring_medium, PhysicalConstants, RingOttoSetup};
use crate::otto::{otto_cycle_energies, TwoLevelMedium};
use crate::thermo::{
    admissible_designs, check_theta, classify_region, region_for_alpha_sq, OperationalRegion,
    DEFAULT_TOLERANCE,
};

pub const DEFAULT_RHO_MIN: f64 = 0.05;
pub const DEFAULT_RHO_MAX: f64 = 3.0;
pub const DEFAULT_RHO_POINTS: usize = 600;

/// Relative distance under which a grid point is replaced by an injected
/// boundary value, and under which `ρ²` snaps onto a Carnot bound.
const SNAP_TOL: f64 = 1e-12;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum MediumKind {
    QuantumRing,
    GenericGap,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum Normalization {
    None,
    MaxAbsEnergy,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepSpec {
    pub t_low: f64,
    pub theta_sq: f64,
    /// Ring radius `r^l` in metres, or `Δ^l` for generic-gap media.
    pub r_low: f64,
    pub rho_grid: Vec<f64>,
    pub medium_kind: MediumKind,
    pub normalization: Normalization,
    /// Ring effective mass; the free-electron mass when `None`.
    pub effective_mass: Option<f64>,
    /// Ground levels of the generic-gap medium.
    pub e_ground_low: f64,
    pub e_ground_high: f64,
    pub tolerance: f64,
}

impl SweepSpec {
    /// Ring sweep on the default grid with max-|E| normalisation.
    pub fn ring(t_low: f64, theta_sq: f64, r_low: f64) -> Self {
        Self {
            t_low,
            theta_sq,
            r_low,
            rho_grid: default_grid(theta_sq),
            medium_kind: MediumKind::QuantumRing,
            normalization: Normalization::MaxAbsEnergy,
            effective_mass: None,
            e_ground_low: 0.0,
            e_ground_high: 0.0,
            tolerance: DEFAULT_TOLERANCE,
        }
    }

    /// `T^l = 1 K`, `θ² = 5`, `r^l = 100 nm`.
    pub fn reference_ring() -> Self {
        Self::ring(1.0, 5.0, 100e-9)
    }

    pub fn validate(&self) -> Result<()> {
        if self.rho_grid.is_empty() {
            return Err(QtmError::EmptyGrid);
        }
        check_theta(self.theta_sq)?;
        if !(self.t_low.is_finite() && self.t_low > 0.0) {
            return Err(QtmError::InvalidTemperature(self.t_low));
        }
        if !(self.r_low.is_finite() && self.r_low > 0.0) {
            return Err(QtmError::InvalidSweep(format!(
                "r_low must be positive, got {}",
                self.r_low
            )));
        }
        if let Some(bad) = self.rho_grid.iter().find(|r| !(r.is_finite() && **r > 0.0)) {
            return Err(QtmError::InvalidSweep(format!("rho must be positive, got {bad}")));
        }
        if self.rho_grid.windows(2).any(|w| w[1] <= w[0]) {
            return Err(QtmError::InvalidSweep("rho_grid must be strictly increasing".into()));
        }
        if !(self.tolerance.is_finite() && self.tolerance >= 0.0) {
            return Err(QtmError::InvalidTolerance(self.tolerance));
        }
        Ok(())
    }

    fn medium_at(&self, rho: f64, constants: &PhysicalConstants) -> Result<TwoLevelMedium> {
        match self.medium_kind {
            MediumKind::QuantumRing => {
                let mut setup = RingOttoSetup::from_rho(self.r_low, rho, self.t_low, self.theta_sq)?;
                setup.effective_mass = self.effective_mass;
                ring_medium(&setup, constants)
            }
            MediumKind::GenericGap => {
                gap_medium(self.r_low, rho * rho, self.e_ground_low, self.e_ground_high)
            }
        }
    }
}

/// `n` evenly spaced points on `[min, max]`.
pub fn uniform_grid(min: f64, max: f64, n: usize) -> Vec<f64> {
    match n {
        0 => Vec::new(),
        1 => vec![min],
        _ => {
            let step = (max - min) / (n - 1) as f64;
            (0..n).map(|i| if i == n - 1 { max } else { min + step * i as f64 }).collect()
        }
    }
}

/// Region boundaries in `ρ`: `1/√θ²`, `1` and `√θ²`.
pub fn boundary_rhos(theta_sq: f64) -> [f64; 3] {
    [(1.0 / theta_sq).sqrt(), 1.0, theta_sq.sqrt()]
}

/// Adds the region boundaries that fall inside the grid's span, replacing
/// any grid point that already sits on one. The grid must be sorted.
pub fn with_boundaries(grid: &[f64], theta_sq: f64) -> Vec<f64> {
    let (Some(&lo), Some(&hi)) = (grid.first(), grid.last()) else {
        return Vec::new();
    };
    let inject: Vec<f64> = boundary_rhos(theta_sq)
        .into_iter()
        .filter(|b| *b >= lo && *b <= hi)
        .collect();
    let mut out: Vec<f64> = grid
        .iter()
        .copied()
        .filter(|r| inject.iter().all(|b| (r - b).abs() > SNAP_TOL * b))
        .chain(inject.iter().copied())
        .collect();
    out.sort_by(f64::total_cmp);
    out.dedup();
    out
}

/// 600 points on `[0.05, 3]` plus the three region boundaries for `θ²`.
pub fn default_grid(theta_sq: f64) -> Vec<f64> {
    with_boundaries(
        &uniform_grid(DEFAULT_RHO_MIN, DEFAULT_RHO_MAX, DEFAULT_RHO_POINTS),
        theta_sq,
    )
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct DesignEfficiency {
    pub design: QtmDesign,
    /// `None` when `α²` falls outside the design's window.
    pub efficiency: Option<f64>,
    pub carnot: f64,
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepRecord {
    pub rho: f64,
    pub alpha_sq: f64,
    pub e_high: f64,
    pub e_low: f64,
    pub e_out: f64,
    pub e_high_norm: Option<f64>,
    pub e_low_norm: Option<f64>,
    pub e_out_norm: Option<f64>,
    pub region: OperationalRegion,
    /// The two admissible designs; empty on boundaries.
    pub designs: Vec<DesignEfficiency>,
}

/// Region boundaries expressed in `ρ` and in `α²`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct BoundaryReport {
    pub theta_sq: f64,
    pub rho_subregion: f64,
    pub rho_2acq_outt: f64,
    pub rho_outt_pump: f64,
    pub alpha_sq_subregion: f64,
    pub alpha_sq_2acq_outt: f64,
    pub alpha_sq_outt_pump: f64,
}

impl BoundaryReport {
    pub fn new(theta_sq: f64) -> Result<Self> {
        let s = intersections(theta_sq)?;
        Ok(Self {
            theta_sq,
            rho_subregion: s.alpha_sq_subregion.sqrt(),
            rho_2acq_outt: s.alpha_sq_2acq_outt.sqrt(),
            rho_outt_pump: s.alpha_sq_outt_pump.sqrt(),
            alpha_sq_subregion: s.alpha_sq_subregion,
            alpha_sq_2acq_outt: s.alpha_sq_2acq_outt,
            alpha_sq_outt_pump: s.alpha_sq_outt_pump,
        })
    }
}

#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct SweepOutput {
    pub records: Vec<SweepRecord>,
    pub boundaries: BoundaryReport,
}

fn evaluate_point(spec: &SweepSpec, constants: &PhysicalConstants, rho: f64) -> Result<SweepRecord> {
    let medium = spec.medium_at(rho, constants)?;
    let alpha_sq = medium.alpha_sq();
    let energies = otto_cycle_energies(&medium, spec.t_low, spec.theta_sq, constants.boltzmann_k)?;
    let region = match energies.to_triple() {
        Ok(triple) => classify_region(&triple, spec.theta_sq, spec.tolerance)?,
        // idle cycle: the gap ratio still places the point
        Err(QtmError::DegenerateExchange { .. }) => {
            region_for_alpha_sq(alpha_sq, spec.theta_sq, spec.tolerance)?
        }
        Err(e) => return Err(e),
    };
    let designs = if region.is_boundary() {
        Vec::new()
    } else {
        admissible_designs(region)?
            .into_iter()
            .map(|design| {
                let bounds = alpha_bounds(design, spec.theta_sq)?;
                let efficiency = if bounds.admits(alpha_sq) {
                    Some(efficiency(design, alpha_sq)?)
                } else {
                    None
                };
                Ok(DesignEfficiency {
                    design,
                    efficiency,
                    carnot: carnot_efficiency(design, spec.theta_sq)?,
                })
            })
            .collect::<Result<Vec<_>>>()?
    };
    Ok(SweepRecord {
        rho,
        alpha_sq,
        e_high: energies.e_high_gamma,
        e_low: energies.e_low_gamma,
        e_out: energies.e_out,
        e_high_norm: None,
        e_low_norm: None,
        e_out_norm: None,
        region,
        designs,
    })
}

/// Runs the sweep over `spec.rho_grid`.
///
/// With [`Normalization::MaxAbsEnergy`] all three energy columns are divided
/// by one common scale, the largest `|E|` over every record and column.
pub fn run_sweep(spec: &SweepSpec, constants: &PhysicalConstants) -> Result<SweepOutput> {
    spec.validate()?;
    constants.validate()?;
    let mut records = spec
        .rho_grid
        .par_iter()
        .map(|&rho| evaluate_point(spec, constants, rho))
        .collect::<Result<Vec<_>>>()?;

    if spec.normalization == Normalization::MaxAbsEnergy {
        let scale = records
            .iter()
            .flat_map(|r| [r.e_high, r.e_low, r.e_out])
            .fold(0.0_f64, |m, e| m.max(e.abs()));
        let norm = |e: f64| if scale > 0.0 { e / scale } else { 0.0 };
        for r in &mut records {
            r.e_high_norm = Some(norm(r.e_high));
            r.e_low_norm = Some(norm(r.e_low));
            r.e_out_norm = Some(norm(r.e_out));
        }
    }

    Ok(SweepOutput {
        records,
        boundaries: BoundaryReport::new(spec.theta_sq)?,
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CurvePoint {
    pub rho: f64,
    pub alpha_sq: f64,
    pub efficiency: f64,
}

/// Efficiency of one design along the grid, restricted to its window.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct EfficiencySeries {
    pub design: QtmDesign,
    pub carnot: f64,
    pub carnot_rho: f64,
    pub limit_kind: CarnotLimitKind,
    pub points: Vec<CurvePoint>,
}

/// Per-design `(ρ, ε)` series, each clipped to the design's admissible
/// `α²` window, with the Carnot level of each design.
///
/// `ρ²` within a relative `1e-12` of a Carnot bound is snapped onto it so
/// that an injected boundary point lands exactly on `ε_c`.
pub fn efficiency_curves(spec: &SweepSpec) -> Result<Vec<EfficiencySeries>> {
    spec.validate()?;
    QtmDesign::ALL
        .into_iter()
        .map(|design| {
            let bounds = alpha_bounds(design, spec.theta_sq)?;
            let bound = bounds.carnot_alpha_sq;
            let mut points = Vec::new();
            for &rho in &spec.rho_grid {
                let mut alpha_sq = rho * rho;
                if (alpha_sq - bound).abs() <= SNAP_TOL * bound {
                    alpha_sq = bound;
                }
                if bounds.admits(alpha_sq) {
                    points.push(CurvePoint {
                        rho,
                        alpha_sq,
                        efficiency: efficiency(design, alpha_sq)?,
                    });
                }
            }
            Ok(EfficiencySeries {
                design,
                carnot: carnot_efficiency(design, spec.theta_sq)?,
                carnot_rho: bound.sqrt(),
                limit_kind: bounds.carnot_limit_kind,
                points,
            })
        })
        .collect()
}
