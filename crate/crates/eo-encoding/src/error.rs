use thiserror::Error;

/// Errors raised by encoding, measurement and leakage operations.
#[derive(Debug, Error, PartialEq)]
pub enum EoEncodingError {
    #[error("dots {0:?} are not three consecutive device dots")]
    InvalidTriple((usize, usize, usize)),

    #[error("barrier B{barrier} does not couple the {role} pair of dots {dots:?}")]
    BarrierMismatch {
        barrier: usize,
        role: &'static str,
        dots: (usize, usize, usize),
    },

    #[error("qubit configs overlap or do not cover six distinct dots")]
    OverlappingDots,

    #[error("logical amplitudes have norm {0}, expected 1 within 1e-10")]
    UnnormalizedAmplitudes(f64),

    #[error("state has {actual} spins, operation requires at least {required}")]
    StateTooSmall { required: usize, actual: usize },

    #[error("measurement pair {0:?} is not a pair of distinct device dots")]
    InvalidPair((usize, usize)),

    #[error("projection probability {0} too small to collapse the state")]
    ProbabilityUnderflow(f64),

    #[error(transparent)]
    SpinCore(#[from] spin_core::SpinCoreError),
}
