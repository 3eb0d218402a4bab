use std::path::PathBuf;

use thiserror::Error;

use crate::designs::QtmDesign;
use crate::thermo::OperationalRegion;

pub type Result<T> = std::result::Result<T, QtmError>;

#[derive(Debug, Error)]
pub enum QtmError {
    #[error("invalid reservoirs: need 0 < t_low < t_high, got t_low={t_low}, t_high={t_high}")]
    InvalidReservoir { t_low: f64, t_high: f64 },

    #[error("invalid temperature ratio theta_sq={0}: must be finite and > 1")]
    InvalidTheta(f64),

    #[error("invalid temperature {0}: must be finite and > 0")]
    InvalidTemperature(f64),

    #[error("invalid tolerance {0}: must be finite and >= 0")]
    InvalidTolerance(f64),

    #[error("degenerate exchange: e_high={e_high} and e_low={e_low} must both be finite and nonzero")]
    DegenerateExchange { e_high: f64, e_low: f64 },

    #[error("invalid signs: e_high={e_high} and e_low={e_low} share a sign")]
    InvalidSigns { e_high: f64, e_low: f64 },

    #[error("unclassifiable exchange: alpha_sq={alpha_sq} with e_high={e_high} matches no operational region for theta_sq={theta_sq}")]
    Unclassifiable {
        e_high: f64,
        alpha_sq: f64,
        theta_sq: f64,
    },

    #[error("{0} is a region boundary and admits no design")]
    BoundaryRegion(OperationalRegion),

    #[error("alpha_sq={alpha_sq} lies outside the region interval of {design}")]
    OutOfRegion { design: QtmDesign, alpha_sq: f64 },

    #[error("{design} is singular at alpha_sq={alpha_sq}")]
    Singular { design: QtmDesign, alpha_sq: f64 },

    #[error("invalid alpha_sq {0}: must be finite and > 0")]
    InvalidAlphaSq(f64),

    #[error("invalid compression ratio rho={0}: must be > 1")]
    InvalidRho(f64),

    #[error("invalid spectrum: {0}")]
    InvalidSpectrum(String),

    #[error("degenerate medium: gaps must be positive (gap_low={gap_low}, gap_high={gap_high})")]
    DegenerateMedium { gap_low: f64, gap_high: f64 },

    #[error("spectrum mismatch: heat strokes require identical eigenvalues at both ends")]
    SpectrumMismatch,

    #[error("occupation mismatch: isolation strokes require frozen occupations")]
    OccupationMismatch,

    #[error("invalid ring: radius={radius}, effective_mass={mass} must both be positive")]
    InvalidRing { radius: f64, mass: f64 },

    #[error("invalid gap medium: gap_low={gap_low}, alpha_sq={alpha_sq}")]
    InvalidGap { gap_low: f64, alpha_sq: f64 },

    #[error("invalid physical constants: {0}")]
    InvalidConstants(String),

    #[error("empty rho grid")]
    EmptyGrid,

    #[error("invalid sweep: {0}")]
    InvalidSweep(String),

    #[error("invalid configuration: {0}")]
    Config(String),

    #[error("unknown design {0:?} (expected one of QCO, QHT, QDP, QHO, QEN, QLL, QRE, QHP)")]
    UnknownDesign(String),

    #[error("{}: {source}", path.as_ref().map(|p| p.display().to_string()).unwrap_or_else(|| "<stdout>".into()))]
    Io {
        path: Option<PathBuf>,
        #[source]
        source: std::io::Error,
    },

    #[error("serialization failed: {0}")]
    Serialize(String),
}

impl QtmError {
    pub fn io(path: Option<PathBuf>, source: std::io::Error) -> Self {
        QtmError::Io { path, source }
    }

    /// I/O failures are reported separately from validation failures by the CLI.
    pub fn is_io(&self) -> bool {
        matches!(self, QtmError::Io { .. })
    }
}
