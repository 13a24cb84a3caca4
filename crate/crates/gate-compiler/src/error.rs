use thiserror::Error;

/// Errors produced while building group tables, synthesizing pulse
/// sequences, or verifying them against targets.
#[derive(Debug, Error)]
pub enum GateCompilerError {
    #[error("expected a {expected}-qubit Clifford element, got {got} qubits")]
    WrongQubitCount { expected: u8, got: u8 },

    #[error("pulse angle {0} rad outside the open interval (0, 2π)")]
    InvalidAngle(f64),

    #[error("barrier B{0} is not a simulated exchange axis (B5..B9)")]
    InvalidBarrier(usize),

    #[error("unsupported configuration pair: {0}")]
    UnsupportedConfiguration(String),

    #[error("verification target size does not match the configuration count")]
    TargetConfigMismatch,

    #[error("group table artifact is malformed: {0}")]
    CacheFormat(String),

    #[error("sequence data file is malformed: {0}")]
    DataFormat(String),

    #[error(transparent)]
    Io(#[from] std::io::Error),

    #[error(transparent)]
    Json(#[from] serde_json::Error),

    #[error(transparent)]
    SpinCore(#[from] spin_core::SpinCoreError),

    #[error(transparent)]
    Encoding(#[from] eo_encoding::EoEncodingError),
}
