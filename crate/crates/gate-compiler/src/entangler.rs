//! Two-qubit entangler sequences shipped as data files.
//!
//! Each data file names a gate, the configuration pair(s) it is certified
//! for, its provenance, and the ordered pulse list as (barrier label, angle)
//! records.  The sequences return the computational subspace to itself with
//! zero leakage and equal the named gate up to global phase and the
//! gauge-sector phase freedom described in [`crate::verify`]; the 64-dim
//! verifier makes every shipped file self-certifying in the test suite.

use std::sync::OnceLock;

use eo_encoding::{QubitConfig, ReadoutPair};
use num_complex::Complex64;
use serde::Deserialize;

use crate::clifford2::EntanglerClass;
use crate::error::GateCompilerError;
use crate::sequence::GateSequence;

/// The entangling gates with hand-tuned pulse implementations.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum EntanglerGate {
    Cnot,
    Iswap,
    Swap,
}

impl EntanglerGate {
    pub fn name(&self) -> &'static str {
        match self {
            EntanglerGate::Cnot => "cnot",
            EntanglerGate::Iswap => "iswap",
            EntanglerGate::Swap => "swap",
        }
    }

    pub(crate) fn class(&self) -> EntanglerClass {
        match self {
            EntanglerGate::Cnot => EntanglerClass::Cnot,
            EntanglerGate::Iswap => EntanglerClass::Iswap,
            EntanglerGate::Swap => EntanglerClass::Swap,
        }
    }

    /// Logical 4×4 unitary of the gate (qubit 1 = most significant bit;
    /// CNOT's control is qubit 1; iSWAP maps |01⟩ ↔ i|10⟩).
    pub fn logical_unitary(&self) -> [[Complex64; 4]; 4] {
        let m = crate::clifford2::Clifford2Group::entangler_ring_matrix(self.class());
        let flat = m.to_complex();
        let mut out = [[Complex64::new(0.0, 0.0); 4]; 4];
        for (t, v) in flat.into_iter().enumerate() {
            out[t / 4][t % 4] = v;
        }
        out
    }
}

impl std::fmt::Display for EntanglerGate {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(self.name())
    }
}

/// Embedded sequence data files.  Every file in `data/` ships with the
/// crate so compilation needs no runtime file lookup.
const EMBEDDED_DATA: &[&str] = &[include_str!("../data/swap.json")];

#[derive(Deserialize)]
struct DataFile {
    gate: String,
    configurations: Vec<DataConfigPair>,
    #[allow(dead_code)]
    provenance: String,
    pulses: Vec<DataPulse>,
}

#[derive(Deserialize)]
struct DataConfigPair {
    qubit1: DataConfig,
    qubit2: DataConfig,
}

#[derive(Deserialize)]
struct DataConfig {
    dots: [usize; 3],
    readout_pair: String,
}

#[derive(Deserialize)]
struct DataPulse {
    barrier_label: String,
    angle_rad: f64,
}

struct SequenceData {
    gate: String,
    configs: Vec<(QubitConfig, QubitConfig)>,
    pulses: Vec<(usize, f64)>,
}

fn parse_config(d: &DataConfig) -> Result<QubitConfig, GateCompilerError> {
    let [d0, d1, d2] = d.dots;
    let pair = match d.readout_pair.as_str() {
        "first" => ReadoutPair::First,
        "last" => ReadoutPair::Last,
        other => {
            return Err(GateCompilerError::DataFormat(format!(
                "unknown readout_pair '{other}'"
            )))
        }
    };
    let (z, n) = match pair {
        ReadoutPair::First => (d1, d2),
        ReadoutPair::Last => (d2, d1),
    };
    Ok(QubitConfig::new((d0, d1, d2), pair, z, n)?)
}

fn parse_barrier(label: &str) -> Result<usize, GateCompilerError> {
    label
        .strip_prefix('B')
        .and_then(|s| s.parse::<usize>().ok())
        .ok_or_else(|| {
            GateCompilerError::DataFormat(format!("barrier label '{label}' is not 'B<digit>'"))
        })
}

fn parse_data_file(text: &str) -> Result<SequenceData, GateCompilerError> {
    let file: DataFile = serde_json::from_str(text)?;
    let mut configs = Vec::with_capacity(file.configurations.len());
    for pair in &file.configurations {
        configs.push((parse_config(&pair.qubit1)?, parse_config(&pair.qubit2)?));
    }
    let mut pulses = Vec::with_capacity(file.pulses.len());
    for p in &file.pulses {
        pulses.push((parse_barrier(&p.barrier_label)?, p.angle_rad));
    }
    Ok(SequenceData {
        gate: file.gate,
        configs,
        pulses,
    })
}

fn library() -> &'static [SequenceData] {
    static LIBRARY: OnceLock<Vec<SequenceData>> = OnceLock::new();
    LIBRARY.get_or_init(|| {
        EMBEDDED_DATA
            .iter()
            .map(|text| parse_data_file(text).expect("embedded sequence data is well-formed"))
            .collect()
    })
}

/// Configuration pairs for which a shipped sequence implements `gate`.
pub(crate) fn supported_pairs(gate: EntanglerGate) -> Vec<(QubitConfig, QubitConfig)> {
    library()
        .iter()
        .filter(|d| d.gate == gate.name())
        .flat_map(|d| d.configs.iter().copied())
        .collect()
}

/// The shipped pulse sequence implementing `gate` on the given configuration
/// pair, exactly as stored (no mirroring is inserted here; see
/// [`crate::decompose_2q_clifford`] for automatic configuration selection).
pub fn entangler_sequence(
    gate: EntanglerGate,
    configs: (&QubitConfig, &QubitConfig),
) -> Result<GateSequence, GateCompilerError> {
    for data in library().iter().filter(|d| d.gate == gate.name()) {
        if data.configs.contains(&(*configs.0, *configs.1)) {
            return GateSequence::new(
                data.pulses.clone(),
                gate.name(),
                vec![*configs.0, *configs.1],
            );
        }
    }
    let supported: Vec<String> = supported_pairs(gate)
        .iter()
        .map(|(a, b)| {
            format!(
                "(dots {:?} {:?}, dots {:?} {:?})",
                a.dots(),
                a.readout_pair(),
                b.dots(),
                b.readout_pair()
            )
        })
        .collect();
    Err(GateCompilerError::UnsupportedConfiguration(format!(
        "no {gate} sequence for (dots {:?} {:?}, dots {:?} {:?}); shipped: {}",
        configs.0.dots(),
        configs.0.readout_pair(),
        configs.1.dots(),
        configs.1.readout_pair(),
        supported.join(", ")
    )))
}
