//! Exchange fingerprint synthesis.
//!
//! A fingerprint maps triplet return probability over a (detuning, barrier
//! voltage) grid for a train of identical exchange pulses applied to a
//! singlet-initialized pair. Within the two-level singlet/triplet reduction
//! each pulse rotates by `J(v, eps) * t_p`, so `n` pulses give
//! `P_T = sin^2(n * J * t_p / 2)`.
//!
//! The detuning dependence uses the symmetric enhancement factor
//! `d(eps) = (1/(1 - eps/U) + 1/(1 + eps/U)) / 2 = 1 / (1 - (eps/U)^2)`,
//! which is 1 at the symmetry point and diverges toward the charge-transition
//! edges at `|eps| = U`; the published fingerprints are plotted, not
//! parameterized, so this standard phenomenological shape stands in.

use crate::calibration::ExchangeCalibration;
use crate::error::DeviceModelError;

/// Triplet-probability map over a detuning x barrier-voltage grid.
#[derive(Debug, Clone, PartialEq)]
pub struct FingerprintMap {
    /// Detuning grid in mV (rows).
    pub detuning_mv: Vec<f64>,
    /// Barrier voltage grid in mV (columns).
    pub barrier_mv: Vec<f64>,
    /// `p_triplet[i][j]` for detuning `i`, barrier voltage `j`.
    pub p_triplet: Vec<Vec<f64>>,
}

/// Symmetric detuning enhancement factor `d(eps) >= 1` with charging scale
/// `u` (mV); errors at the charge-transition edges `|eps| >= u`.
pub fn detuning_factor(eps: f64, u: f64) -> Result<f64, DeviceModelError> {
    if !(u > 0.0) {
        return Err(DeviceModelError::InvalidCalibration(format!(
            "charging scale must be positive, got {u}"
        )));
    }
    let x = eps / u;
    if x.abs() >= 1.0 {
        return Err(DeviceModelError::DetuningOutOfRange { eps, u });
    }
    Ok(0.5 * (1.0 / (1.0 - x) + 1.0 / (1.0 + x)))
}

/// Synthesizes the fingerprint of `n_pulses` identical pulses of duration
/// `t_p` (seconds) with charging scale `charging_mv`.
pub fn synth_fingerprint(
    cal: &ExchangeCalibration,
    detuning_grid: &[f64],
    barrier_grid: &[f64],
    n_pulses: usize,
    t_p: f64,
    charging_mv: f64,
) -> Result<FingerprintMap, DeviceModelError> {
    if n_pulses == 0 {
        return Err(DeviceModelError::InvalidCalibration(
            "fingerprint needs at least one pulse".into(),
        ));
    }
    let mut p_triplet = Vec::with_capacity(detuning_grid.len());
    for &eps in detuning_grid {
        let d = detuning_factor(eps, charging_mv)?;
        let mut row = Vec::with_capacity(barrier_grid.len());
        for &v in barrier_grid {
            let j = cal.exchange_from_voltage(v)? * d;
            let total = n_pulses as f64 * j * t_p;
            row.push((total / 2.0).sin().powi(2));
        }
        p_triplet.push(row);
    }
    Ok(FingerprintMap {
        detuning_mv: detuning_grid.to_vec(),
        barrier_mv: barrier_grid.to_vec(),
        p_triplet,
    })
}
