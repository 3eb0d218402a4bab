//! Canonical-ensemble occupations and the quasi-static Otto cycle.
//!
//! The four strokes of a two-level Otto cycle, with the medium in
//! configuration `l` (gap `Δ^l`) or `h` (gap `Δ^h`):
//!
//! ```text
//!   I  --work-->  II  --heat TR^h-->  III  --work-->  IV  --heat TR^l-->  I
//!   l, P^l        h, P^l              h, P^h          l, P^h
//! ```
//!
//! Heat strokes change occupations at fixed levels; isolation (work) strokes
//! change levels at frozen occupations. `P^l` is thermal in configuration `l`
//! at `T^l` and `P^h` thermal in configuration `h` at `T^h = θ² T^l`.

use serde::{Deserialize, Serialize};

use crate::error::{QtmError, Result};
use crate::thermo::{check_theta, ExchangeTriple};

const OCCUPATION_MATCH_TOL: f64 = 1e-12;

fn check_temperature(temperature: f64) -> Result<()> {
    if temperature.is_finite() && temperature > 0.0 {
        Ok(())
    } else {
        Err(QtmError::InvalidTemperature(temperature))
    }
}

/// Non-degenerate energy eigenvalues in increasing order.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LevelSpectrum(Vec<f64>);

impl LevelSpectrum {
    pub fn new(levels: Vec<f64>) -> Result<Self> {
        if levels.len() < 2 {
            return Err(QtmError::InvalidSpectrum(format!(
                "need at least two levels, got {}",
                levels.len()
            )));
        }
        if let Some(bad) = levels.iter().find(|e| !e.is_finite()) {
            return Err(QtmError::InvalidSpectrum(format!("non-finite level {bad}")));
        }
        if levels.windows(2).any(|w| w[1] <= w[0]) {
            return Err(QtmError::InvalidSpectrum(
                "levels must be strictly increasing".into(),
            ));
        }
        Ok(Self(levels))
    }

    pub fn levels(&self) -> &[f64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Canonical occupations `P_n = exp(-E_n / k T) / Z`.
///
/// Exponents are shifted by the lowest eigenvalue so the ground weight is
/// exactly one, which keeps `Z` finite for large gaps or low temperatures.
pub fn occupation(spectrum: &LevelSpectrum, temperature: f64, boltzmann_k: f64) -> Result<Vec<f64>> {
    check_temperature(temperature)?;
    if !(boltzmann_k.is_finite() && boltzmann_k > 0.0) {
        return Err(QtmError::InvalidConstants(format!(
            "boltzmann_k must be positive, got {boltzmann_k}"
        )));
    }
    let kt = boltzmann_k * temperature;
    let shift = spectrum.0[0];
    let weights: Vec<f64> = spectrum.0.iter().map(|e| (-(e - shift) / kt).exp()).collect();
    let z: f64 = weights.iter().sum();
    Ok(weights.into_iter().map(|w| w / z).collect())
}

/// Ground and excited eigenvalue of one dimensional configuration.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct LevelPair {
    pub ground: f64,
    pub excited: f64,
}

impl LevelPair {
    pub fn new(ground: f64, excited: f64) -> Self {
        Self { ground, excited }
    }

    pub fn gap(&self) -> f64 {
        self.excited - self.ground
    }

    pub fn spectrum(&self) -> Result<LevelSpectrum> {
        LevelSpectrum::new(vec![self.ground, self.excited])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OccupationPair {
    pub p_ground: f64,
    pub p_excited: f64,
}

impl OccupationPair {
    /// Thermal occupations of `levels` at `temperature`.
    pub fn thermal(levels: LevelPair, temperature: f64, boltzmann_k: f64) -> Result<Self> {
        let p = occupation(&levels.spectrum()?, temperature, boltzmann_k)?;
        Ok(Self {
            p_ground: p[0],
            p_excited: p[1],
        })
    }

    pub fn as_vec(&self) -> Vec<f64> {
        vec![self.p_ground, self.p_excited]
    }
}

/// A two-level working medium in its two dimensional configurations:
/// `low` (states I and IV, gap `Δ^l`) and `high` (states II and III, gap
/// `Δ^h`). "Low" and "high" name the reservoir each configuration meets,
/// not which gap is larger.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct TwoLevelMedium {
    low: LevelPair,
    high: LevelPair,
}

impl TwoLevelMedium {
    pub fn new(low: LevelPair, high: LevelPair) -> Result<Self> {
        let (gap_low, gap_high) = (low.gap(), high.gap());
        let finite = [low.ground, low.excited, high.ground, high.excited]
            .iter()
            .all(|e| e.is_finite());
        if !finite || !(gap_low > 0.0) || !(gap_high > 0.0) {
            return Err(QtmError::DegenerateMedium { gap_low, gap_high });
        }
        Ok(Self { low, high })
    }

    pub fn low_config(&self) -> LevelPair {
        self.low
    }

    pub fn high_config(&self) -> LevelPair {
        self.high
    }

    pub fn gap_low(&self) -> f64 {
        self.low.gap()
    }

    pub fn gap_high(&self) -> f64 {
        self.high.gap()
    }

    /// `α² = Δ^h / Δ^l`.
    pub fn alpha_sq(&self) -> f64 {
        self.gap_high() / self.gap_low()
    }
}

/// Per-cycle energies of a two-level Otto cycle.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct CycleEnergies {
    pub e_high_gamma: f64,
    pub e_low_gamma: f64,
    pub e_out: f64,
}

impl CycleEnergies {
    /// The exchange triple for region classification. Fails when the cycle
    /// is idle (both exchanges zero), as happens exactly at `α² = θ²`.
    pub fn to_triple(&self) -> Result<ExchangeTriple> {
        ExchangeTriple::new(self.e_high_gamma, self.e_low_gamma)
    }
}

/// Reservoir exchanges of the two-level Otto cycle.
///
/// With `X = P^h_e - P^l_e`, the medium absorbs `Δ^h X` from `TR^h` and
/// `-Δ^l X` from `TR^l`; the outside exchange is their sum.
pub fn otto_cycle_energies(
    medium: &TwoLevelMedium,
    t_low: f64,
    theta_sq: f64,
    boltzmann_k: f64,
) -> Result<CycleEnergies> {
    check_temperature(t_low)?;
    check_theta(theta_sq)?;
    let t_high = theta_sq * t_low;
    let p_low = OccupationPair::thermal(medium.low, t_low, boltzmann_k)?;
    let p_high = OccupationPair::thermal(medium.high, t_high, boltzmann_k)?;
    let x = p_high.p_excited - p_low.p_excited;
    let e_high_gamma = medium.gap_high() * x;
    let e_low_gamma = -medium.gap_low() * x;
    Ok(CycleEnergies {
        e_high_gamma,
        e_low_gamma,
        e_out: e_high_gamma + e_low_gamma,
    })
}

/// Heat absorbed over a stroke at fixed levels: `Σ E_n (P_n(end) - P_n(start))`.
pub fn heat_exchange(spectrum: &LevelSpectrum, p_start: &[f64], p_end: &[f64]) -> Result<f64> {
    if p_start.len() != spectrum.len() || p_end.len() != spectrum.len() {
        return Err(QtmError::SpectrumMismatch);
    }
    Ok(spectrum
        .0
        .iter()
        .zip(p_start.iter().zip(p_end))
        .map(|(e, (a, b))| e * (b - a))
        .sum())
}

/// Energy absorbed by the medium on an isospectral stroke between two
/// thermal states of the same spectrum. Positive means absorbed.
pub fn multilevel_exchange(
    start: (&LevelSpectrum, f64),
    end: (&LevelSpectrum, f64),
    boltzmann_k: f64,
) -> Result<f64> {
    if start.0 != end.0 {
        return Err(QtmError::SpectrumMismatch);
    }
    let p_start = occupation(start.0, start.1, boltzmann_k)?;
    let p_end = occupation(end.0, end.1, boltzmann_k)?;
    heat_exchange(start.0, &p_start, &p_end)
}

/// Energy change of the medium on an isolation stroke with frozen
/// occupations: `Σ P_n (E_n(end) - E_n(start))`.
///
/// The value is medium-side: positive when the medium gains energy, i.e.
/// receives it from the outside. Over a full cycle the two isolation strokes
/// sum to `-E^out`.
pub fn work_exchange(start: (&LevelSpectrum, &[f64]), end: (&LevelSpectrum, &[f64])) -> Result<f64> {
    let (spec_a, occ_a) = start;
    let (spec_b, occ_b) = end;
    if spec_a.len() != spec_b.len() {
        return Err(QtmError::SpectrumMismatch);
    }
    if occ_a.len() != spec_a.len()
        || occ_b.len() != spec_b.len()
        || occ_a
            .iter()
            .zip(occ_b)
            .any(|(a, b)| (a - b).abs() > OCCUPATION_MATCH_TOL)
    {
        return Err(QtmError::OccupationMismatch);
    }
    Ok(spec_a
        .0
        .iter()
        .zip(&spec_b.0)
        .zip(occ_a)
        .map(|((ea, eb), p)| p * (eb - ea))
        .sum())
}

/// The four stroke energies of a two-level Otto cycle, medium-side.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub struct OttoStrokes {
    /// I → II, levels `l → h` at occupations `P^l`.
    pub work_in: f64,
    /// II → III, contact with `TR^h`.
    pub heat_high: f64,
    /// III → IV, levels `h → l` at occupations `P^h`.
    pub work_out: f64,
    /// IV → I, contact with `TR^l`.
    pub heat_low: f64,
}

impl OttoStrokes {
    /// Net change of the medium's internal energy over the cycle.
    pub fn net(&self) -> f64 {
        self.work_in + self.heat_high + self.work_out + self.heat_low
    }

    /// Scale for relative comparisons of [`net`](Self::net).
    pub fn magnitude(&self) -> f64 {
        [self.work_in, self.heat_high, self.work_out, self.heat_low]
            .iter()
            .map(|v| v.abs())
            .fold(0.0, f64::max)
    }
}

/// Evaluates every stroke of the cycle individually.
///
/// The heat strokes go through [`multilevel_exchange`]: state II holds the
/// `h` levels with occupations that are thermal at the effective temperature
/// `α² T^l`, state IV the `l` levels at `T^h / α²`.
pub fn otto_strokes(
    medium: &TwoLevelMedium,
    t_low: f64,
    theta_sq: f64,
    boltzmann_k: f64,
) -> Result<OttoStrokes> {
    check_temperature(t_low)?;
    check_theta(theta_sq)?;
    let t_high = theta_sq * t_low;
    let alpha_sq = medium.alpha_sq();
    let low = medium.low.spectrum()?;
    let high = medium.high.spectrum()?;
    let p_low = occupation(&low, t_low, boltzmann_k)?;
    let p_high = occupation(&high, t_high, boltzmann_k)?;

    let work_in = work_exchange((&low, &p_low), (&high, &p_low))?;
    let heat_high = multilevel_exchange((&high, alpha_sq * t_low), (&high, t_high), boltzmann_k)?;
    let work_out = work_exchange((&high, &p_high), (&low, &p_high))?;
    let heat_low = multilevel_exchange((&low, t_high / alpha_sq), (&low, t_low), boltzmann_k)?;
    Ok(OttoStrokes {
        work_in,
        heat_high,
        work_out,
        heat_low,
    })
}
