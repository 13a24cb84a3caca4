use crate::{barrier_spin_pair, barriers_conflict, SpinCoreError, StateVector};

/// Standard exchange-pulse duration t_p of the control stack, in seconds.
pub const T_P: f64 = 10.92e-9;

/// Standard buffer window t_b between pulse steps, in seconds.
pub const T_B: f64 = 10.92e-9;

/// One exchange pulse: barrier electrode, rotation angle, and pulse duration.
///
/// The angle is the target spin rotation φ = J·t_p accumulated over the
/// pulse; duration matters only for wall-clock accounting (noise windows),
/// not for the ideal unitary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ExchangePulse {
    /// Barrier electrode index (5..=9 couple simulated dot pairs).
    pub barrier: usize,
    /// Rotation angle in radians, normalized to [0, 2π).
    pub angle: f64,
    /// Pulse duration t_p in seconds.
    pub duration: f64,
}

impl ExchangePulse {
    pub fn new(barrier: usize, angle: f64, duration: f64) -> Self {
        Self {
            barrier,
            angle: angle.rem_euclid(2.0 * std::f64::consts::PI),
            duration,
        }
    }
}

/// An ordered sequence of time steps, each a set of exchange pulses on
/// mutually non-conflicting barriers, separated by buffer windows.
///
/// Invariant: within any step no two pulses occupy equal or adjacent
/// barriers (|b₁ − b₂| ≤ 1), so all pulses of a step act on disjoint spin
/// pairs and commute; the device additionally forbids neighbouring-barrier
/// simultaneity because of barrier-barrier crosstalk.
#[derive(Debug, Clone, PartialEq)]
pub struct PulseSchedule {
    steps: Vec<Vec<ExchangePulse>>,
    /// Uniform pulse duration t_p in seconds.
    pub t_p: f64,
    /// Buffer duration t_b between steps in seconds.
    pub t_b: f64,
}

impl PulseSchedule {
    /// Build a schedule, validating the per-step non-adjacency invariant.
    pub fn new(
        steps: Vec<Vec<ExchangePulse>>,
        t_p: f64,
        t_b: f64,
    ) -> Result<Self, SpinCoreError> {
        for (k, step) in steps.iter().enumerate() {
            for (a, p1) in step.iter().enumerate() {
                for p2 in &step[a + 1..] {
                    if barriers_conflict(p1.barrier, p2.barrier) {
                        return Err(SpinCoreError::AdjacentPulses {
                            step: k,
                            b1: p1.barrier,
                            b2: p2.barrier,
                        });
                    }
                }
            }
        }
        Ok(Self { steps, t_p, t_b })
    }

    /// Strictly sequential schedule: one pulse per step.
    pub fn sequential(
        pulses: impl IntoIterator<Item = (usize, f64)>,
        t_p: f64,
        t_b: f64,
    ) -> Self {
        let steps = pulses
            .into_iter()
            .map(|(barrier, angle)| vec![ExchangePulse::new(barrier, angle, t_p)])
            .collect();
        // one pulse per step can never violate adjacency
        Self { steps, t_p, t_b }
    }

    pub fn steps(&self) -> &[Vec<ExchangePulse>] {
        &self.steps
    }

    pub fn n_steps(&self) -> usize {
        self.steps.len()
    }

    pub fn n_pulses(&self) -> usize {
        self.steps.iter().map(Vec::len).sum()
    }

    /// Total wall time: every step costs t_p plus a trailing buffer t_b.
    pub fn wall_time(&self) -> f64 {
        self.steps.len() as f64 * (self.t_p + self.t_b)
    }

    /// Pulses flattened in execution order (steps in order, pulses within a
    /// step in stored order — any within-step order gives the same unitary).
    pub fn flatten(&self) -> Vec<ExchangePulse> {
        self.steps.iter().flatten().copied().collect()
    }
}

/// Apply a schedule to a six-spin state: each step applies its commuting
/// pulses in sequence. Norm, total S_z and total S² are conserved (exchange
/// commutes with total spin).
pub fn apply_schedule(
    state: &mut StateVector,
    schedule: &PulseSchedule,
) -> Result<(), SpinCoreError> {
    for step in schedule.steps() {
        for pulse in step {
            let pair = barrier_spin_pair(pulse.barrier)?;
            state.apply_exchange(pair, pulse.angle)?;
        }
    }
    Ok(())
}

/// Apply a schedule interleaved with Zeeman evolution: each pulse step
/// evolves detuning phases for t_p, each buffer for t_b. Noise acts during
/// both windows because total sequence wall time drives dephasing.
pub fn apply_schedule_with_zeeman(
    state: &mut StateVector,
    schedule: &PulseSchedule,
    detunings: &[f64],
) -> Result<(), SpinCoreError> {
    for step in schedule.steps() {
        for pulse in step {
            let pair = barrier_spin_pair(pulse.barrier)?;
            state.apply_exchange(pair, pulse.angle)?;
        }
        state.zeeman_evolution(detunings, schedule.t_p)?;
        state.zeeman_evolution(detunings, schedule.t_b)?;
    }
    Ok(())
}
