//! Clifford-gate synthesis for two exchange-only spin qubits on a six-dot
//! linear array.
//!
//! The crate enumerates the single- and two-qubit Clifford groups exactly
//! (24 and 11,520 elements) in the cyclotomic ring ℤ[ω], classifies every
//! two-qubit element by the entangler its canonical local decomposition
//! contains (none / SWAP / CNOT / iSWAP), and compiles elements to
//! exchange-pulse programs: single-qubit words of positive-angle rotations
//! about the two accessible axes, hand-tuned entangler sequences shipped as
//! data files, greedy as-soon-as-possible parallelization under the
//! neighbouring-barrier exclusion rule, and a brute-force 64-dim verifier.

mod clifford1;
mod clifford2;
mod element;
mod entangler;
mod error;
mod ring;
mod schedule;
mod sequence;
mod synth1q;
mod verify;

pub use clifford1::Clifford1Group;
pub use clifford2::{
    build_2q_clifford_group, decompose_2q_clifford, Clifford2Group, EntanglerClass,
    LocalDecomposition,
};
pub use element::CliffordElement;
pub use entangler::{entangler_sequence, EntanglerGate};
pub use error::GateCompilerError;
pub use schedule::parallelize_schedule;
pub use sequence::GateSequence;
pub use synth1q::decompose_1q_clifford;
pub use verify::{verify_schedule, verify_sequence, VerificationReport, VerifyTarget};
