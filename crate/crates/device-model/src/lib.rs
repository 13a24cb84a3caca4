//! Voltage-domain model of the six-dot device.
//!
//! Bridges the abstract pulse layer (barriers and rotation angles) to the
//! electrode voltage domain:
//!
//! - [`ExchangeCalibration`]: the calibrated exponential
//!   `J(V) = alpha * exp(gamma*V + kappa*V^2)` per barrier and its exact
//!   closed-form inverse [`ExchangeCalibration::voltage_for_angle`];
//! - [`CrosstalkMatrix`]: the electrode virtualization table, used forward
//!   as the linear crosstalk model and inverted for compensation;
//! - [`synth_fingerprint`]: triplet-probability fingerprints of repeated
//!   exchange pulses over a (detuning, barrier voltage) grid;
//! - [`distort_pulse_train`] / [`predistort_pulse_train`]: pulse-domain
//!   exponential memory of the transmission line and its exact inversion,
//!   plus [`buffer_time_spectroscopy`] reproducing the 12-pulse diagnostic.
//!
//! Units are mV for voltages, rad/s for exchange rates and seconds for
//! durations throughout.

mod calibration;
mod crosstalk;
mod distortion;
mod error;
mod fingerprint;

pub use calibration::ExchangeCalibration;
pub use crosstalk::{CrosstalkMatrix, VoltageMap};
pub use distortion::{
    buffer_time_spectroscopy, distort_pulse_train, predistort_pulse_train, FilterParams,
    PulseTiming,
};
pub use error::DeviceModelError;
pub use fingerprint::{detuning_factor, synth_fingerprint, FingerprintMap};
