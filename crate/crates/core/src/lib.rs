//! Analysis toolkit for quantum thermal machines (QTMs).
//!
//! A QTM couples a quantum working medium to a hot reservoir `TR^h`, a cold
//! reservoir `TR^l` and an outside environment. Every cycle exchanges three
//! signed energies `(E^h, E^l, E^out)` with `E^out = E^h + E^l`; the ratio
//! `α² = -E^h/E^l` and the temperature ratio `θ² = T^h/T^l` decide which
//! operational region the machine runs in and which designs it can realise.
//!
//! Module map:
//!
//! - [`thermo`]: reservoir pairs, exchange triples and the region classifier.
//! - [`designs`]: the eight machine designs, their efficiencies, Carnot limits
//!   and admissible `α²` windows.
//! - [`otto`]: canonical occupations and the two-level Otto cycle.
//! - [`media`]: physical constants, the quantum-ring medium and a generic
//!   explicit-gap medium.
//! - [`sweep`] and [`output`]: compression-ratio sweeps and CSV/JSON output.
//! - [`config`]: the flat JSON configuration consumed by the `qtm` binary.

pub mod config;
pub mod designs;
pub mod error;
pub mod media;
pub mod otto;
pub mod output;
pub mod sweep;
pub mod thermo;

pub use designs::{
    alpha_bounds, carnot_efficiency, classical_otto_efficiency, efficiency, intersections,
    relation_residuals, AlphaBounds, CarnotLimitKind, EnergyRole, IntersectionSet, QtmDesign,
    RelationResiduals,
};
pub use error::{QtmError, Result};
pub use media::{gap_medium, ring_levels, ring_medium, PhysicalConstants, QuantumRing, RingOttoSetup};
pub use otto::{
    multilevel_exchange, occupation, otto_cycle_energies, work_exchange, CycleEnergies, LevelPair,
    LevelSpectrum, OccupationPair, TwoLevelMedium,
};
pub use sweep::{
    efficiency_curves, run_sweep, BoundaryReport, EfficiencySeries, MediumKind, Normalization,
    SweepOutput, SweepRecord, SweepSpec,
};
pub use thermo::{
    admissible_designs, alpha_squared, classify_region, theta_squared, AlphaSquared,
    ExchangeTriple, OperationalRegion, ReservoirPair, DEFAULT_TOLERANCE,
};
