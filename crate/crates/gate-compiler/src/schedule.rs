use spin_core::{ExchangePulse, PulseSchedule, T_B, T_P};

use crate::sequence::GateSequence;

/// Greedy as-soon-as-possible parallelization of a pulse sequence.
///
/// Each pulse is placed in the earliest step after every earlier pulse on
/// the same or a neighbouring barrier (|Δb| ≤ 1): same-barrier order is
/// preserved exactly, and pulses on adjacent barriers — the only
/// non-commuting pairs, and the pairs the hardware forbids from firing
/// together — keep their relative order and never share a step.  Pulses on
/// barriers at distance ≥ 2 commute, so hoisting them into a shared step
/// leaves the composed unitary unchanged.
pub fn parallelize_schedule(seq: &GateSequence) -> PulseSchedule {
    let mut steps: Vec<Vec<ExchangePulse>> = Vec::new();
    // next_free[b] = first step index allowed for a pulse on barrier b.
    let mut next_free = [0usize; 11];
    for &(barrier, angle) in seq.pulses() {
        let step = next_free[barrier - 1]
            .max(next_free[barrier])
            .max(next_free[barrier + 1]);
        if step == steps.len() {
            steps.push(Vec::new());
        }
        steps[step].push(ExchangePulse::new(barrier, angle, T_P));
        next_free[barrier] = step + 1;
    }
    PulseSchedule::new(steps, T_P, T_B)
        .expect("ASAP placement never schedules adjacent barriers together")
}
