use thiserror::Error;

/// Errors raised by the voltage-domain device model.
#[derive(Debug, Error)]
pub enum DeviceModelError {
    #[error("calibration parameters invalid: {0}")]
    InvalidCalibration(String),

    #[error("voltage {v} mV drives the exchange exponent past the overflow limit")]
    ExchangeOverflow { v: f64 },

    #[error("rotation angle must be positive, got {0} rad")]
    NonPositiveAngle(f64),

    #[error("angle {phi} rad needs {v} mV, below the idle floor {v_min} mV")]
    VoltageOutOfRange { phi: f64, v: f64, v_min: f64 },

    #[error("angle {phi} rad is outside the calibration domain (negative discriminant)")]
    CalibrationDomain { phi: f64 },

    #[error("unknown electrode label {0:?}")]
    UnknownLabel(String),

    #[error("crosstalk matrix is singular or too ill-conditioned to invert")]
    SingularMatrix,

    #[error("crosstalk matrix malformed: {0}")]
    MalformedMatrix(String),

    #[error("filter parameters invalid: {0}")]
    InvalidFilter(String),

    #[error("detuning {eps} mV reaches the charge-transition edge (|eps| >= {u} mV)")]
    DetuningOutOfRange { eps: f64, u: f64 },

    #[error("csv: {0}")]
    Csv(#[from] csv::Error),

    #[error("io: {0}")]
    Io(#[from] std::io::Error),
}
