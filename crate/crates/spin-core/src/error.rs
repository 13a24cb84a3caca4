use thiserror::Error;

/// Errors from statevector construction and pulse application.
#[derive(Debug, Error, Clone, PartialEq)]
pub enum SpinCoreError {
    #[error("amplitude vector has length {len}, expected 2^{n_spins}")]
    DimensionMismatch { len: usize, n_spins: usize },

    #[error("basis index {index} out of range for {n_spins} spins")]
    BasisOutOfRange { index: usize, n_spins: usize },

    #[error("spin index {spin} out of range for {n_spins} spins")]
    SpinOutOfRange { spin: usize, n_spins: usize },

    #[error("exchange pulse needs two distinct spins, got ({i}, {j})")]
    DegeneratePair { i: usize, j: usize },

    #[error("barrier B{barrier} does not couple two simulated dots")]
    BarrierOutOfRange { barrier: usize },

    #[error("schedule step {step} pulses conflicting barriers B{b1} and B{b2}")]
    AdjacentPulses { step: usize, b1: usize, b2: usize },

    #[error("expected one detuning per spin: got {got}, need {need}")]
    DetuningCount { got: usize, need: usize },

    #[error("state norm collapsed below {min} (numerically invalid state)")]
    NormUnderflow { min: f64 },
}
