//! Independent oracles shared by the integration tests.
#![allow(dead_code)]

use qtm_core::OperationalRegion;

/// Reservoir exchanges evaluated directly from the explicit exponential
/// expressions, with `T^h` written as `θ² T^l` and no energy shift.
pub fn printed_form_energies(
    low: (f64, f64),
    high: (f64, f64),
    t_low: f64,
    theta_sq: f64,
    k: f64,
) -> (f64, f64) {
    let (elg, ele) = low;
    let (ehg, ehe) = high;
    let b = 1.0 / (k * t_low);
    let num = (-b * elg).exp() * (-b * ehe / theta_sq).exp()
        - (-b * ehg / theta_sq).exp() * (-b * ele).exp();
    let den = ((-b * ehg / theta_sq).exp() + (-b * ehe / theta_sq).exp())
        * ((-b * elg).exp() + (-b * ele).exp());
    ((ehe - ehg) * num / den, -(ele - elg) * num / den)
}

/// Ring ground level `ħ²/(2 m r²)` from literal CODATA 2018 values.
pub fn ring_ground_oracle(radius: f64) -> f64 {
    let hbar = 1.054_571_817e-34_f64;
    let me = 9.109_383_701_5e-31_f64;
    hbar.powi(2) / (2.0 * me * radius.powi(2))
}

/// Region by plain interval test on `α²`.
pub fn interval_region(alpha_sq: f64, theta_sq: f64) -> OperationalRegion {
    if alpha_sq < 1.0 / theta_sq {
        OperationalRegion::TwoAcquirersOut
    } else if alpha_sq < 1.0 {
        OperationalRegion::TwoAcquirersHigh
    } else if alpha_sq < theta_sq {
        OperationalRegion::OutTransfers
    } else {
        OperationalRegion::Pumpers
    }
}

/// Relative distance of `alpha_sq` to the nearest region threshold.
pub fn boundary_distance(alpha_sq: f64, theta_sq: f64) -> f64 {
    [1.0 / theta_sq, 1.0, theta_sq]
        .iter()
        .map(|t| ((alpha_sq - t) / t).abs())
        .fold(f64::INFINITY, f64::min)
}

pub fn rel_diff(a: f64, b: f64) -> f64 {
    let scale = a.abs().max(b.abs());
    if scale == 0.0 {
        0.0
    } else {
        (a - b).abs() / scale
    }
}
