//! Reservoirs, signed energy exchanges and the operational-region classifier.
//!
//! Sign convention: energy absorbed from a reservoir or generated to the
//! outside is positive; energy released to a reservoir or received from the
//! outside is negative.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::designs::QtmDesign;
use crate::error::{QtmError, Result};

/// Default classification band, relative to the threshold being tested.
pub const DEFAULT_TOLERANCE: f64 = 1e-9;

pub(crate) fn check_theta(theta_sq: f64) -> Result<()> {
    if theta_sq.is_finite() && theta_sq > 1.0 {
        Ok(())
    } else {
        Err(QtmError::InvalidTheta(theta_sq))
    }
}

/// Hot and cold reservoir temperatures, `t_high > t_low > 0`.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct ReservoirPair {
    t_low: f64,
    t_high: f64,
}

impl ReservoirPair {
    pub fn new(t_low: f64, t_high: f64) -> Result<Self> {
        let ok = t_low.is_finite() && t_high.is_finite() && t_low > 0.0 && t_high > t_low;
        if !ok {
            return Err(QtmError::InvalidReservoir { t_low, t_high });
        }
        Ok(Self { t_low, t_high })
    }

    /// Builds the pair from the cold temperature and `θ²`.
    pub fn from_theta_sq(t_low: f64, theta_sq: f64) -> Result<Self> {
        check_theta(theta_sq)?;
        Self::new(t_low, t_low * theta_sq)
    }

    pub fn t_low(&self) -> f64 {
        self.t_low
    }

    pub fn t_high(&self) -> f64 {
        self.t_high
    }
}

/// `θ² = T^h / T^l`, always greater than one for a valid pair.
pub fn theta_squared(res: &ReservoirPair) -> f64 {
    res.t_high / res.t_low
}

/// Per-cycle energies exchanged with `TR^h`, `TR^l` and the outside.
///
/// Only `e_high` and `e_low` are supplied; `e_out` is always their sum, so
/// energy conservation cannot be violated by construction. Both exchanges
/// must be nonzero and of opposite sign: a medium that takes energy from one
/// reservoir has to hand energy to the other.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ExchangeTriple {
    e_high: f64,
    e_low: f64,
    e_out: f64,
}

impl ExchangeTriple {
    pub fn new(e_high: f64, e_low: f64) -> Result<Self> {
        if !e_high.is_finite() || !e_low.is_finite() || e_high == 0.0 || e_low == 0.0 {
            return Err(QtmError::DegenerateExchange { e_high, e_low });
        }
        if e_high.signum() == e_low.signum() {
            return Err(QtmError::InvalidSigns { e_high, e_low });
        }
        Ok(Self {
            e_high,
            e_low,
            e_out: e_high + e_low,
        })
    }

    pub fn e_high(&self) -> f64 {
        self.e_high
    }

    pub fn e_low(&self) -> f64 {
        self.e_low
    }

    pub fn e_out(&self) -> f64 {
        self.e_out
    }

    /// Same exchange with every energy scaled by `factor > 0`.
    pub fn scaled(&self, factor: f64) -> Result<Self> {
        Self::new(self.e_high * factor, self.e_low * factor)
    }

    /// The time-reversed cycle: every flow changes direction.
    pub fn negated(&self) -> Self {
        Self {
            e_high: -self.e_high,
            e_low: -self.e_low,
            e_out: -self.e_out,
        }
    }
}

/// Thermal high-low energy ratio `α² = -E^h / E^l`.
#[derive(Debug, Clone, Copy, PartialEq, PartialOrd, Serialize, Deserialize)]
pub struct AlphaSquared(f64);

impl AlphaSquared {
    pub fn new(value: f64) -> Result<Self> {
        if value.is_finite() && value > 0.0 {
            Ok(Self(value))
        } else {
            Err(QtmError::InvalidAlphaSq(value))
        }
    }

    pub fn value(&self) -> f64 {
        self.0
    }

    /// `α`, which equals the compression ratio for two-level Otto media.
    pub fn alpha(&self) -> f64 {
        self.0.sqrt()
    }
}

/// `α²` of a valid triple. Always positive because the two reservoir
/// exchanges carry opposite signs.
pub fn alpha_squared(ex: &ExchangeTriple) -> AlphaSquared {
    AlphaSquared(-ex.e_high / ex.e_low)
}

/// Operational regions and the boundaries between them.
///
/// The bi-acquirers region (outside energy received, hot energy absorbed,
/// cold energy released) splits into a subregion where the outside is the
/// main source (`TwoAcquirersOut`) and one where the hot reservoir is
/// (`TwoAcquirersHigh`).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum OperationalRegion {
    TwoAcquirersOut,
    TwoAcquirersHigh,
    OutTransfers,
    Pumpers,
    /// `α² = 1/θ²`
    Boundary2AcqSubregions,
    /// `α² = 1`
    Boundary2AcqOutT,
    /// `α² = θ²`
    BoundaryOutTPump,
}

impl OperationalRegion {
    pub const ALL: [OperationalRegion; 7] = [
        OperationalRegion::TwoAcquirersOut,
        OperationalRegion::TwoAcquirersHigh,
        OperationalRegion::OutTransfers,
        OperationalRegion::Pumpers,
        OperationalRegion::Boundary2AcqSubregions,
        OperationalRegion::Boundary2AcqOutT,
        OperationalRegion::BoundaryOutTPump,
    ];

    pub fn is_boundary(&self) -> bool {
        matches!(
            self,
            OperationalRegion::Boundary2AcqSubregions
                | OperationalRegion::Boundary2AcqOutT
                | OperationalRegion::BoundaryOutTPump
        )
    }

    pub fn name(&self) -> &'static str {
        match self {
            OperationalRegion::TwoAcquirersOut => "TwoAcquirersOut",
            OperationalRegion::TwoAcquirersHigh => "TwoAcquirersHigh",
            OperationalRegion::OutTransfers => "OutTransfers",
            OperationalRegion::Pumpers => "Pumpers",
            OperationalRegion::Boundary2AcqSubregions => "Boundary2AcqSubregions",
            OperationalRegion::Boundary2AcqOutT => "Boundary2AcqOutT",
            OperationalRegion::BoundaryOutTPump => "BoundaryOutTPump",
        }
    }
}

impl fmt::Display for OperationalRegion {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

fn near(value: f64, threshold: f64, tol: f64) -> bool {
    (value - threshold).abs() <= tol * threshold
}

/// Region of a medium that absorbs from `TR^h` and releases to `TR^l`
/// (`e_high > 0`), or `None` if `α²` exceeds the Carnot bound `θ²`.
fn region_hot_absorbing(alpha_sq: f64, theta_sq: f64, tol: f64) -> Option<OperationalRegion> {
    use OperationalRegion::*;
    let sub = 1.0 / theta_sq;
    if near(alpha_sq, sub, tol) {
        Some(Boundary2AcqSubregions)
    } else if near(alpha_sq, 1.0, tol) {
        Some(Boundary2AcqOutT)
    } else if near(alpha_sq, theta_sq, tol) {
        Some(BoundaryOutTPump)
    } else if alpha_sq < sub {
        Some(TwoAcquirersOut)
    } else if alpha_sq < 1.0 {
        Some(TwoAcquirersHigh)
    } else if alpha_sq < theta_sq {
        Some(OutTransfers)
    } else {
        None
    }
}

/// Region of a medium pumping energy from `TR^l` into `TR^h`
/// (`e_high < 0`); only possible above the Carnot bound.
fn region_hot_releasing(alpha_sq: f64, theta_sq: f64, tol: f64) -> Option<OperationalRegion> {
    if near(alpha_sq, theta_sq, tol) {
        Some(OperationalRegion::BoundaryOutTPump)
    } else if alpha_sq > theta_sq {
        Some(OperationalRegion::Pumpers)
    } else {
        None
    }
}

/// Region implied by `α²` alone for a medium that respects the second law,
/// as every thermal Otto cycle does: below `θ²` the hot reservoir feeds the
/// medium, above it the medium pumps into the hot reservoir.
pub fn region_for_alpha_sq(alpha_sq: f64, theta_sq: f64, tol: f64) -> Result<OperationalRegion> {
    check_theta(theta_sq)?;
    check_tol(tol)?;
    if !(alpha_sq.is_finite() && alpha_sq > 0.0) {
        return Err(QtmError::InvalidAlphaSq(alpha_sq));
    }
    Ok(region_hot_absorbing(alpha_sq, theta_sq, tol)
        .or_else(|| region_hot_releasing(alpha_sq, theta_sq, tol))
        .expect("every positive alpha_sq maps to a region"))
}

fn check_tol(tol: f64) -> Result<()> {
    if tol.is_finite() && tol >= 0.0 {
        Ok(())
    } else {
        Err(QtmError::InvalidTolerance(tol))
    }
}

/// Classifies a triple into its operational region.
///
/// Thresholds sit at `α² = 1/θ²`, `1` and `θ²`; a value within `tol`
/// (relative to the threshold) of one of them is reported as the matching
/// boundary. Sign patterns that would beat the Carnot bound (hot absorption
/// with `α² > θ²`, or pumping with `α² < θ²`) are unclassifiable.
pub fn classify_region(ex: &ExchangeTriple, theta_sq: f64, tol: f64) -> Result<OperationalRegion> {
    check_theta(theta_sq)?;
    check_tol(tol)?;
    let alpha_sq = alpha_squared(ex).value();
    let region = if ex.e_high > 0.0 {
        region_hot_absorbing(alpha_sq, theta_sq, tol)
    } else {
        region_hot_releasing(alpha_sq, theta_sq, tol)
    };
    region.ok_or(QtmError::Unclassifiable {
        e_high: ex.e_high,
        alpha_sq,
        theta_sq,
    })
}

/// The two designs that can operate in a (non-boundary) region.
pub fn admissible_designs(region: OperationalRegion) -> Result<[QtmDesign; 2]> {
    use QtmDesign::*;
    match region {
        OperationalRegion::TwoAcquirersOut => Ok([Qco, Qht]),
        OperationalRegion::TwoAcquirersHigh => Ok([Qdp, Qho]),
        OperationalRegion::OutTransfers => Ok([Qen, Qll]),
        OperationalRegion::Pumpers => Ok([Qre, Qhp]),
        b => Err(QtmError::BoundaryRegion(b)),
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use OperationalRegion::*;

    fn triple(h: f64, l: f64) -> ExchangeTriple {
        ExchangeTriple::new(h, l).unwrap()
    }

    #[test]
    fn theta_squared_examples() {
        assert_eq!(theta_squared(&ReservoirPair::new(1.0, 5.0).unwrap()), 5.0);
        assert_eq!(theta_squared(&ReservoirPair::new(300.0, 600.0).unwrap()), 2.0);
        let near_one = theta_squared(&ReservoirPair::new(2.0, 2.000_000_1).unwrap());
        assert!(near_one > 1.0 && near_one - 1.0 < 1e-7);
    }

    #[test]
    fn invalid_reservoirs() {
        for (l, h) in [(0.0, 1.0), (-1.0, 2.0), (2.0, 2.0), (3.0, 2.0), (f64::NAN, 2.0)] {
            assert!(matches!(
                ReservoirPair::new(l, h),
                Err(QtmError::InvalidReservoir { .. })
            ));
        }
    }

    #[test]
    fn conservation_is_exact() {
        let ex = triple(2.5, -1.25);
        assert_eq!(ex.e_out() - (ex.e_high() + ex.e_low()), 0.0);
    }

    #[test]
    fn alpha_squared_examples() {
        assert_eq!(alpha_squared(&triple(1.0, -2.0)).value(), 0.5);
        assert_eq!(alpha_squared(&triple(2.0, -1.0)).value(), 2.0);
        assert_eq!(alpha_squared(&triple(-5.0, 1.0)).value(), 5.0);
    }

    #[test]
    fn degenerate_and_same_sign_triples_rejected() {
        assert!(matches!(
            ExchangeTriple::new(0.0, -1.0),
            Err(QtmError::DegenerateExchange { .. })
        ));
        assert!(matches!(
            ExchangeTriple::new(1.0, 0.0),
            Err(QtmError::DegenerateExchange { .. })
        ));
        assert!(matches!(
            ExchangeTriple::new(1.0, 2.0),
            Err(QtmError::InvalidSigns { .. })
        ));
        assert!(matches!(
            ExchangeTriple::new(-1.0, -2.0),
            Err(QtmError::InvalidSigns { .. })
        ));
    }

    #[test]
    fn classify_examples() {
        let tol = DEFAULT_TOLERANCE;
        assert_eq!(classify_region(&triple(1.0, -2.0), 5.0, tol).unwrap(), TwoAcquirersHigh);
        assert_eq!(classify_region(&triple(2.0, -1.0), 5.0, tol).unwrap(), OutTransfers);
        assert_eq!(classify_region(&triple(-5.0, 1.0), 4.0, tol).unwrap(), Pumpers);
        assert_eq!(
            classify_region(&triple(1.0, -5.0), 5.0, tol).unwrap(),
            Boundary2AcqSubregions
        );
        assert_eq!(classify_region(&triple(1.0, -10.0), 5.0, tol).unwrap(), TwoAcquirersOut);
        assert_eq!(classify_region(&triple(3.0, -3.0), 5.0, tol).unwrap(), Boundary2AcqOutT);
        assert_eq!(classify_region(&triple(5.0, -1.0), 5.0, tol).unwrap(), BoundaryOutTPump);
        assert_eq!(classify_region(&triple(-5.0, 1.0), 5.0, tol).unwrap(), BoundaryOutTPump);
    }

    #[test]
    fn carnot_violating_patterns_are_unclassifiable() {
        // engine pattern beyond the Carnot bound
        assert!(matches!(
            classify_region(&triple(10.0, -1.0), 5.0, DEFAULT_TOLERANCE),
            Err(QtmError::Unclassifiable { .. })
        ));
        // heat flowing cold -> hot while generating outside energy
        assert!(matches!(
            classify_region(&triple(-1.0, 2.0), 5.0, DEFAULT_TOLERANCE),
            Err(QtmError::Unclassifiable { .. })
        ));
        assert!(matches!(
            classify_region(&triple(-3.0, 1.0), 5.0, DEFAULT_TOLERANCE),
            Err(QtmError::Unclassifiable { .. })
        ));
    }

    #[test]
    fn classify_rejects_bad_parameters() {
        let ex = triple(2.0, -1.0);
        assert!(matches!(classify_region(&ex, 1.0, 0.0), Err(QtmError::InvalidTheta(_))));
        assert!(matches!(classify_region(&ex, 5.0, -1.0), Err(QtmError::InvalidTolerance(_))));
    }

    #[test]
    fn tolerance_band_widens_boundaries() {
        let ex = triple(1.0 + 1e-6, -1.0);
        assert_eq!(classify_region(&ex, 5.0, 0.0).unwrap(), OutTransfers);
        assert_eq!(classify_region(&ex, 5.0, 1e-5).unwrap(), Boundary2AcqOutT);
    }

    #[test]
    fn admissible_design_pairs() {
        use QtmDesign::*;
        assert_eq!(admissible_designs(OutTransfers).unwrap(), [Qen, Qll]);
        assert_eq!(admissible_designs(Pumpers).unwrap(), [Qre, Qhp]);
        assert_eq!(admissible_designs(TwoAcquirersOut).unwrap(), [Qco, Qht]);
        assert_eq!(admissible_designs(TwoAcquirersHigh).unwrap(), [Qdp, Qho]);
        for b in [Boundary2AcqSubregions, Boundary2AcqOutT, BoundaryOutTPump] {
            assert!(matches!(admissible_designs(b), Err(QtmError::BoundaryRegion(_))));
        }
    }

    #[test]
    fn negated_pumper_has_engine_signs() {
        let pump = triple(-5.0, 1.0);
        let neg = pump.negated();
        assert!(neg.e_high() > 0.0 && neg.e_low() < 0.0 && neg.e_out() > 0.0);
        assert_eq!(alpha_squared(&neg), alpha_squared(&pump));
    }
}
