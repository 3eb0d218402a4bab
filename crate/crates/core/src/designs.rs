//! The eight machine designs and their efficiency algebra.
//!
//! Every efficiency is a closed form in `α²` and every Carnot limit the same
//! form evaluated at the design's bounding `α²` (`1/θ²` inside the
//! bi-acquirers region, `θ²` otherwise). The closed forms are written so that
//! paired designs share a denominator, which keeps the pairwise identities
//! (`ε_QHT - ε_QCO = 1` and friends) accurate to a few ulps.

use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{QtmError, Result};
use crate::thermo::{check_theta, OperationalRegion};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum QtmDesign {
    /// Quantum cooler: absorbs from `TR^h`, powered by the outside.
    #[serde(rename = "QCO")]
    Qco,
    /// Quantum heater: releases to `TR^l`, powered by the outside.
    #[serde(rename = "QHT")]
    Qht,
    /// Quantum thermal damper: receives outside energy, fed by `TR^h`.
    #[serde(rename = "QDP")]
    Qdp,
    /// Quantum heating optimizer: releases to `TR^l`, fed by `TR^h`.
    #[serde(rename = "QHO")]
    Qho,
    /// Quantum thermal engine.
    #[serde(rename = "QEN")]
    Qen,
    /// Quantum thermal laser-like machine: releases to `TR^l` while
    /// generating outside energy.
    #[serde(rename = "QLL")]
    Qll,
    /// Quantum refrigerator.
    #[serde(rename = "QRE")]
    Qre,
    /// Quantum heat pumper.
    #[serde(rename = "QHP")]
    Qhp,
}

/// Which energy flow a design prioritises or consumes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum EnergyRole {
    HighAbsorbed,
    HighReleased,
    LowAbsorbed,
    LowReleased,
    OutGenerated,
    OutReceived,
}

impl fmt::Display for EnergyRole {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            EnergyRole::HighAbsorbed => "E^h_abs",
            EnergyRole::HighReleased => "E^h_rel",
            EnergyRole::LowAbsorbed => "E^l_abs",
            EnergyRole::LowReleased => "E^l_rel",
            EnergyRole::OutGenerated => "E^out_ge",
            EnergyRole::OutReceived => "E^out_rec",
        })
    }
}

impl QtmDesign {
    pub const ALL: [QtmDesign; 8] = [
        QtmDesign::Qco,
        QtmDesign::Qht,
        QtmDesign::Qdp,
        QtmDesign::Qho,
        QtmDesign::Qen,
        QtmDesign::Qll,
        QtmDesign::Qre,
        QtmDesign::Qhp,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            QtmDesign::Qco => "QCO",
            QtmDesign::Qht => "QHT",
            QtmDesign::Qdp => "QDP",
            QtmDesign::Qho => "QHO",
            QtmDesign::Qen => "QEN",
            QtmDesign::Qll => "QLL",
            QtmDesign::Qre => "QRE",
            QtmDesign::Qhp => "QHP",
        }
    }

    /// The (sub)region this design operates in.
    pub fn region(&self) -> OperationalRegion {
        match self {
            QtmDesign::Qco | QtmDesign::Qht => OperationalRegion::TwoAcquirersOut,
            QtmDesign::Qdp | QtmDesign::Qho => OperationalRegion::TwoAcquirersHigh,
            QtmDesign::Qen | QtmDesign::Qll => OperationalRegion::OutTransfers,
            QtmDesign::Qre | QtmDesign::Qhp => OperationalRegion::Pumpers,
        }
    }

    /// Energy flow the design is built to promote (numerator of `ε`).
    pub fn target(&self) -> EnergyRole {
        match self {
            QtmDesign::Qco => EnergyRole::HighAbsorbed,
            QtmDesign::Qht | QtmDesign::Qho | QtmDesign::Qll => EnergyRole::LowReleased,
            QtmDesign::Qdp => EnergyRole::OutReceived,
            QtmDesign::Qen => EnergyRole::OutGenerated,
            QtmDesign::Qre => EnergyRole::LowAbsorbed,
            QtmDesign::Qhp => EnergyRole::HighReleased,
        }
    }

    /// Energy flow the design draws on (denominator of `ε`).
    pub fn source(&self) -> EnergyRole {
        match self {
            QtmDesign::Qco | QtmDesign::Qht | QtmDesign::Qre | QtmDesign::Qhp => {
                EnergyRole::OutReceived
            }
            QtmDesign::Qdp | QtmDesign::Qho | QtmDesign::Qen | QtmDesign::Qll => {
                EnergyRole::HighAbsorbed
            }
        }
    }

    fn in_bi_acquirers(&self) -> bool {
        matches!(self, QtmDesign::Qco | QtmDesign::Qht | QtmDesign::Qdp | QtmDesign::Qho)
    }

    /// Open `α²` interval of the design's operational region: `(0, 1)` or
    /// `(1, ∞)`.
    pub fn region_interval(&self) -> (f64, f64) {
        if self.in_bi_acquirers() {
            (0.0, 1.0)
        } else {
            (1.0, f64::INFINITY)
        }
    }
}

impl fmt::Display for QtmDesign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for QtmDesign {
    type Err = QtmError;

    fn from_str(s: &str) -> Result<Self> {
        QtmDesign::ALL
            .into_iter()
            .find(|d| d.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| QtmError::UnknownDesign(s.to_string()))
    }
}

/// Closed form of each design's efficiency. No domain checks.
fn formula(design: QtmDesign, a: f64) -> f64 {
    match design {
        // 1/(1/α² - 1)
        QtmDesign::Qco => a / (1.0 - a),
        QtmDesign::Qht => 1.0 / (1.0 - a),
        QtmDesign::Qdp => 1.0 / a - 1.0,
        QtmDesign::Qho => 1.0 / a,
        QtmDesign::Qen => 1.0 - 1.0 / a,
        QtmDesign::Qll => 1.0 / a,
        QtmDesign::Qre => 1.0 / (a - 1.0),
        // 1/(1 - 1/α²)
        QtmDesign::Qhp => a / (a - 1.0),
    }
}

/// Efficiency `ε` of `design` at `alpha_sq`.
///
/// `alpha_sq` must lie strictly inside the design's region interval; the
/// interval endpoints are excluded and raise [`QtmError::Singular`].
pub fn efficiency(design: QtmDesign, alpha_sq: f64) -> Result<f64> {
    let (lo, hi) = design.region_interval();
    if alpha_sq == lo || alpha_sq == hi {
        return Err(QtmError::Singular { design, alpha_sq });
    }
    if !(alpha_sq > lo && alpha_sq < hi) {
        return Err(QtmError::OutOfRegion { design, alpha_sq });
    }
    Ok(formula(design, alpha_sq))
}

/// Like [`efficiency`] but also accepts the region endpoints `0`, `1` and
/// `∞`, returning the one-sided limit of the closed form there (possibly
/// `+∞`). Used for tabulating the efficiency window of each design.
pub fn efficiency_limit(design: QtmDesign, alpha_sq: f64) -> Result<f64> {
    let (lo, hi) = design.region_interval();
    if alpha_sq == lo {
        return Ok(match design {
            QtmDesign::Qco | QtmDesign::Qen => 0.0,
            QtmDesign::Qht | QtmDesign::Qll => 1.0,
            QtmDesign::Qdp | QtmDesign::Qho | QtmDesign::Qre | QtmDesign::Qhp => f64::INFINITY,
        });
    }
    if alpha_sq == hi {
        return Ok(match design {
            QtmDesign::Qco | QtmDesign::Qht => f64::INFINITY,
            QtmDesign::Qdp | QtmDesign::Qll | QtmDesign::Qre => 0.0,
            QtmDesign::Qho | QtmDesign::Qen | QtmDesign::Qhp => 1.0,
        });
    }
    efficiency(design, alpha_sq)
}

/// Carnot-limit efficiency `ε_c` of `design` for temperature ratio `θ²`.
pub fn carnot_efficiency(design: QtmDesign, theta_sq: f64) -> Result<f64> {
    check_theta(theta_sq)?;
    let t = theta_sq;
    Ok(match design {
        QtmDesign::Qco => 1.0 / (t - 1.0),
        QtmDesign::Qht => t / (t - 1.0),
        QtmDesign::Qdp => t - 1.0,
        QtmDesign::Qho => t,
        QtmDesign::Qen => 1.0 - 1.0 / t,
        QtmDesign::Qll => 1.0 / t,
        QtmDesign::Qre => 1.0 / (t - 1.0),
        QtmDesign::Qhp => t / (t - 1.0),
    })
}

/// Whether the Carnot efficiency caps `ε` from above or below.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum CarnotLimitKind {
    Maximum,
    Minimum,
}

impl fmt::Display for CarnotLimitKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            CarnotLimitKind::Maximum => "maximum",
            CarnotLimitKind::Minimum => "minimum",
        })
    }
}

/// Admissible `α²` window of a design for a given `θ²`.
///
/// One end is a region endpoint (`0`, `1` or `∞`, excluded) and the other
/// the Carnot bound `carnot_alpha_sq` (included), where `ε = ε_c`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct AlphaBounds {
    pub alpha_sq_min: f64,
    pub alpha_sq_max: f64,
    pub carnot_limit_kind: CarnotLimitKind,
    pub carnot_alpha_sq: f64,
}

impl AlphaBounds {
    /// True when `alpha_sq` is in the window: closed at the Carnot bound,
    /// open at the region endpoint.
    pub fn admits(&self, alpha_sq: f64) -> bool {
        let lower_ok = if self.alpha_sq_min == self.carnot_alpha_sq {
            alpha_sq >= self.alpha_sq_min
        } else {
            alpha_sq > self.alpha_sq_min
        };
        let upper_ok = if self.alpha_sq_max == self.carnot_alpha_sq {
            alpha_sq <= self.alpha_sq_max
        } else {
            alpha_sq < self.alpha_sq_max
        };
        lower_ok && upper_ok
    }
}

pub fn alpha_bounds(design: QtmDesign, theta_sq: f64) -> Result<AlphaBounds> {
    check_theta(theta_sq)?;
    let sub = 1.0 / theta_sq;
    let (min, max, bound) = match design {
        QtmDesign::Qco | QtmDesign::Qht => (0.0, sub, sub),
        QtmDesign::Qdp | QtmDesign::Qho => (sub, 1.0, sub),
        QtmDesign::Qen | QtmDesign::Qll => (1.0, theta_sq, theta_sq),
        QtmDesign::Qre | QtmDesign::Qhp => (theta_sq, f64::INFINITY, theta_sq),
    };
    let kind = if design == QtmDesign::Qll {
        CarnotLimitKind::Minimum
    } else {
        CarnotLimitKind::Maximum
    };
    Ok(AlphaBounds {
        alpha_sq_min: min,
        alpha_sq_max: max,
        carnot_limit_kind: kind,
        carnot_alpha_sq: bound,
    })
}

/// `α²` values where neighbouring regions meet.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct IntersectionSet {
    /// `2Acq^out ∩ 2Acq^h`, equal to `1/θ²`.
    pub alpha_sq_subregion: f64,
    /// `2Acquirers ∩ OutTransfers`, always `1`.
    pub alpha_sq_2acq_outt: f64,
    /// `OutTransfers ∩ Pumpers`, equal to `θ²`.
    pub alpha_sq_outt_pump: f64,
}

pub fn intersections(theta_sq: f64) -> Result<IntersectionSet> {
    check_theta(theta_sq)?;
    Ok(IntersectionSet {
        alpha_sq_subregion: 1.0 / theta_sq,
        alpha_sq_2acq_outt: 1.0,
        alpha_sq_outt_pump: theta_sq,
    })
}

/// Residuals of the four pairwise efficiency identities. A pair outside its
/// region is `None`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct RelationResiduals {
    /// `ε_QHT - ε_QCO - 1`
    pub heater_cooler: Option<f64>,
    /// `ε_QHO - ε_QDP - 1`
    pub optimizer_damper: Option<f64>,
    /// `ε_QEN + ε_QLL - 1`
    pub engine_laser: Option<f64>,
    /// `ε_QHP - ε_QRE - 1`
    pub heat_pumper_refrigerator: Option<f64>,
}

pub fn relation_residuals(alpha_sq: f64, theta_sq: f64) -> Result<RelationResiduals> {
    check_theta(theta_sq)?;
    let eff = |d| efficiency(d, alpha_sq).ok();
    let pair = |a: QtmDesign, b: QtmDesign, f: fn(f64, f64) -> f64| {
        eff(a).zip(eff(b)).map(|(x, y)| f(x, y))
    };
    Ok(RelationResiduals {
        heater_cooler: pair(QtmDesign::Qht, QtmDesign::Qco, |x, y| x - y - 1.0),
        optimizer_damper: pair(QtmDesign::Qho, QtmDesign::Qdp, |x, y| x - y - 1.0),
        engine_laser: pair(QtmDesign::Qen, QtmDesign::Qll, |x, y| x + y - 1.0),
        heat_pumper_refrigerator: pair(QtmDesign::Qhp, QtmDesign::Qre, |x, y| x - y - 1.0),
    })
}

/// Otto efficiency of a classical monatomic ideal-gas engine with
/// compression ratio `rho > 1`: `1 - ρ^(-2/3)`.
pub fn classical_otto_efficiency(rho: f64) -> Result<f64> {
    if !(rho.is_finite() && rho > 1.0) {
        return Err(QtmError::InvalidRho(rho));
    }
    Ok(1.0 - rho.powf(-2.0 / 3.0))
}
