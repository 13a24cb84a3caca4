//! Dense statevector simulation of n spin-1/2 particles under Heisenberg
//! exchange pulses and Zeeman phase evolution.
//!
//! This crate is the numerical bedrock of the toolkit: everything above it
//! (encoded-qubit operations, gate compilation, noise Monte Carlo) reduces to
//! sequences of the two primitives implemented here.
//!
//! # Basis conventions
//!
//! States live in the 2^n dimensional spin-z product basis, ordered by
//! little-endian bitstring: basis index `x` assigns spin `i` the value of bit
//! `i` of `x`, with bit value **0 = ↑** and **1 = ↓**. These conventions are
//! load-bearing — the encoded-qubit definitions, sequence data files, and all
//! serialized results depend on them — so they are fixed here once.
//!
//! # Exchange convention
//!
//! An exchange pulse of angle θ on the spin pair (i, j) applies
//!
//! ```text
//! U(θ) = exp(−i·θ/2·(SWAP_ij − I)) = P_T + e^{iθ}·P_S
//! ```
//!
//! where `P_S`/`P_T` project onto the singlet/triplet subspace of the pair.
//! Triplet states acquire no phase; the singlet acquires `e^{iθ}`. Hence
//! θ = π is exactly SWAP and θ = 2π is the identity. This fixes the global
//! phase of the Heisenberg evolution `exp(−i·J·t·S⃗_i·S⃗_j)` with θ = J·t; all
//! observables used downstream (probabilities, fidelities up to phase) are
//! independent of that choice.
//!
//! # Device layout
//!
//! For the six-dot array the crate also provides the fixed mapping from
//! barrier electrode index to the spin pair it couples: barrier `b` acts on
//! dots (b−1, b), and the six simulated dots 4..=9 map to spins 0..=5. Only
//! barriers B5..B9 couple two simulated spins.

mod error;
mod schedule;
mod state;

pub use error::SpinCoreError;
pub use schedule::{
    apply_schedule, apply_schedule_with_zeeman, ExchangePulse, PulseSchedule, T_B, T_P,
};
pub use state::StateVector;

use num_complex::Complex64;

/// Index of the first simulated quantum dot on the device array (QD₄).
pub const FIRST_DOT: usize = 4;

/// Number of simulated dots/spins on the six-dot array.
pub const DEVICE_SPINS: usize = 6;

/// Spin pair coupled by barrier electrode `b` in the six-spin device space.
///
/// Barrier `b` sits between dots (b−1, b); with dot 4 mapped to spin 0 this
/// is the spin pair (b−5, b−4). Valid device barriers for exchange pulses are
/// B5..B9 (B4 and B10 couple to dots outside the simulated array).
pub fn barrier_spin_pair(barrier: usize) -> Result<(usize, usize), SpinCoreError> {
    if !(5..=9).contains(&barrier) {
        return Err(SpinCoreError::BarrierOutOfRange { barrier });
    }
    Ok((barrier - FIRST_DOT - 1, barrier - FIRST_DOT))
}

/// Whether two barriers conflict for parallel scheduling: equal or adjacent
/// barrier electrodes (|b₁ − b₂| ≤ 1) share a dot or are next-nearest
/// neighbours whose simultaneous pulsing the device forbids.
pub fn barriers_conflict(b1: usize, b2: usize) -> bool {
    b1.abs_diff(b2) <= 1
}

/// Dense unitary of an exchange pulse, returned as a row-major 2^n × 2^n
/// matrix. Mostly useful for oracles and small-n tests; the statevector
/// methods apply pulses without materializing the matrix.
pub fn exchange_unitary(
    pair: (usize, usize),
    angle: f64,
    n_spins: usize,
) -> Result<Vec<Complex64>, SpinCoreError> {
    let dim = 1usize << n_spins;
    let mut u = vec![Complex64::new(0.0, 0.0); dim * dim];
    for col in 0..dim {
        let mut e = StateVector::basis(n_spins, col)?;
        e.apply_exchange(pair, angle)?;
        for row in 0..dim {
            u[row * dim + col] = e.amplitudes()[row];
        }
    }
    Ok(u)
}
