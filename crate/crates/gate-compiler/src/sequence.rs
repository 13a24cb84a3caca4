use eo_encoding::QubitConfig;
use spin_core::{PulseSchedule, T_B, T_P};

use crate::error::GateCompilerError;

/// An ordered exchange-pulse program for one gate: (barrier, angle) pairs in
/// execution order, the gate it came from, and the qubit configuration(s) it
/// was compiled for (one entry for a single-qubit gate, two for a two-qubit
/// gate).
///
/// Invariant: every angle lies strictly inside (0, 2π) — the hardware plays
/// positive-angle rotations only, and a zero-angle pulse is simply omitted.
#[derive(Debug, Clone, PartialEq)]
pub struct GateSequence {
    pulses: Vec<(usize, f64)>,
    source: String,
    configs: Vec<QubitConfig>,
}

impl GateSequence {
    pub fn new(
        pulses: Vec<(usize, f64)>,
        source: impl Into<String>,
        configs: Vec<QubitConfig>,
    ) -> Result<Self, GateCompilerError> {
        for &(barrier, angle) in &pulses {
            if !(5..=9).contains(&barrier) {
                return Err(GateCompilerError::InvalidBarrier(barrier));
            }
            if !(angle > 0.0 && angle < 2.0 * std::f64::consts::PI) {
                return Err(GateCompilerError::InvalidAngle(angle));
            }
        }
        Ok(Self {
            pulses,
            source: source.into(),
            configs,
        })
    }

    pub fn empty(source: impl Into<String>, configs: Vec<QubitConfig>) -> Self {
        Self {
            pulses: Vec::new(),
            source: source.into(),
            configs,
        }
    }

    pub fn pulses(&self) -> &[(usize, f64)] {
        &self.pulses
    }

    pub fn n_pulses(&self) -> usize {
        self.pulses.len()
    }

    /// Name of the gate this sequence implements.
    pub fn source(&self) -> &str {
        &self.source
    }

    /// Configurations the sequence was compiled for.
    pub fn configs(&self) -> &[QubitConfig] {
        &self.configs
    }

    /// One-pulse-per-step schedule with the standard timings.
    pub fn to_sequential_schedule(&self) -> PulseSchedule {
        PulseSchedule::sequential(self.pulses.iter().copied(), T_P, T_B)
    }

    /// Append another sequence's pulses (used to stitch compiled stages).
    pub(crate) fn extend_from(&mut self, other: &GateSequence) {
        self.pulses.extend_from_slice(&other.pulses);
    }

    pub(crate) fn push(&mut self, barrier: usize, angle: f64) {
        debug_assert!(angle > 0.0 && angle < 2.0 * std::f64::consts::PI);
        self.pulses.push((barrier, angle));
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn rejects_out_of_range_angles() {
        let cfg = vec![QubitConfig::q1()];
        for bad in [0.0, -1.0, 2.0 * std::f64::consts::PI, 7.0] {
            assert!(matches!(
                GateSequence::new(vec![(5, bad)], "test", cfg.clone()),
                Err(GateCompilerError::InvalidAngle(_))
            ));
        }
    }

    #[test]
    fn rejects_unknown_barrier() {
        assert!(matches!(
            GateSequence::new(vec![(4, 1.0)], "test", vec![QubitConfig::q1()]),
            Err(GateCompilerError::InvalidBarrier(4))
        ));
    }
}
