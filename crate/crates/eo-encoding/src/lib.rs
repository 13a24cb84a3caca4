//! Exchange-only qubit encoding and measurement for the six-dot device.
//!
//! Each qubit lives on three adjacent quantum dots. Its computational states
//! occupy the two degenerate total-spin-1/2 multiplets of the three spins,
//! labelled by the singlet/triplet character of a designated *readout pair*:
//!
//! ```text
//!   |0, g⟩ = |S⟩|g⟩
//!   |1, ↑⟩ = √(2/3)|T₊⟩|↓⟩ − √(1/3)|T₀⟩|↑⟩
//!   |1, ↓⟩ = √(1/3)|T₀⟩|↓⟩ − √(2/3)|T₋⟩|↑⟩
//! ```
//!
//! with the pair states written first and the remaining *gauge* spin last.
//! The gauge spin orientation g carries no logical information and does not
//! need to be initialized; encoding defaults to g = ↓ and all computational
//! observables are gauge-independent. Population outside the two spin-1/2
//! multiplets (the total-spin-3/2 quadruplet) is *leakage*.
//!
//! Exchange on the readout pair rotates the qubit about the logical z-axis;
//! exchange on the other adjacent pair rotates about an axis at 120° from z
//! in the x-z plane. Pauli spin blockade (PSB) reads out the singlet
//! probability of a pair; leaked states register as triplet, the same
//! signature as |1⟩.
//!
//! The module provides encoding into the 64-dim six-spin state space,
//! projective PSB measurement, per-qubit and joint leakage accounting, and
//! the three-pulse mirroring gates that relocate a qubit's readout pair to
//! the other adjacent pair of its triple.

mod config;
mod encode;
mod error;
mod leakage;
mod measure;
mod mirror;

pub use config::{QubitConfig, ReadoutPair};
pub use encode::{
    computational_kets, encode_two_qubit_state, Gauge, LogicalQubit, LogicalState,
};
pub use error::EoEncodingError;
pub use leakage::{computational_projection, joint_leakage_population, leakage_population};
pub use measure::{psb_measure, singlet_probability, PsbOutcome};
pub use mirror::mirroring_sequence;
