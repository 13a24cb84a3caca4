use num_complex::Complex64;
use spin_core::{StateVector, DEVICE_SPINS};

use crate::{EoEncodingError, QubitConfig, ReadoutPair};

/// Orientation of a qubit's gauge spin. The gauge spin carries no logical
/// information; it fixes which of the two degenerate spin-1/2 multiplets the
/// qubit occupies. Encoding defaults to ↓.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum Gauge {
    #[default]
    Down,
    Up,
}

/// Logical content of one exchange-only qubit: amplitudes on |0⟩/|1⟩ plus
/// the gauge orientation it is encoded with.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct LogicalQubit {
    pub a0: Complex64,
    pub a1: Complex64,
    pub gauge: Gauge,
}

impl LogicalQubit {
    /// Validate |a0|² + |a1|² = 1 within 1e-10.
    pub fn new(a0: Complex64, a1: Complex64, gauge: Gauge) -> Result<Self, EoEncodingError> {
        let norm = a0.norm_sqr() + a1.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(EoEncodingError::UnnormalizedAmplitudes(norm.sqrt()));
        }
        Ok(Self { a0, a1, gauge })
    }

    pub fn zero(gauge: Gauge) -> Self {
        Self {
            a0: Complex64::new(1.0, 0.0),
            a1: Complex64::new(0.0, 0.0),
            gauge,
        }
    }

    pub fn one(gauge: Gauge) -> Self {
        Self {
            a0: Complex64::new(0.0, 0.0),
            a1: Complex64::new(1.0, 0.0),
            gauge,
        }
    }
}

/// Product logical state of the device's qubits (one entry per qubit).
#[derive(Debug, Clone, PartialEq)]
pub struct LogicalState {
    pub qubits: Vec<LogicalQubit>,
}

impl LogicalState {
    pub fn new(qubits: Vec<LogicalQubit>) -> Self {
        Self { qubits }
    }

    /// Two-qubit computational basis state |l₁l₂⟩ with both gauges ↓.
    pub fn two_qubit_basis(l1: u8, l2: u8) -> Self {
        let q = |l: u8| {
            if l == 0 {
                LogicalQubit::zero(Gauge::Down)
            } else {
                LogicalQubit::one(Gauge::Down)
            }
        };
        Self::new(vec![q(l1), q(l2)])
    }
}

/// The four computational kets |l, g⟩ of one triple as amplitudes over its
/// local 3-spin space (index bit m = m-th dot of the triple in ascending dot
/// order; bit 0 = ↑, 1 = ↓), ordered [(0,↓), (0,↑), (1,↓), (1,↑)].
///
/// With |S⟩, |T₀⟩, |T₊⟩, |T₋⟩ the singlet/triplet states of the readout
/// pair and the remaining (gauge) spin written last:
///   |0, g⟩ = |S⟩|g⟩
///   |1, ↑⟩ = √(2/3)|T₊⟩|↓⟩ − √(1/3)|T₀⟩|↑⟩
///   |1, ↓⟩ = √(1/3)|T₀⟩|↓⟩ − √(2/3)|T₋⟩|↑⟩
/// The singlet sign convention is (|↑↓⟩ − |↓↑⟩)/√2 in ascending dot order.
pub fn computational_kets(config: &QubitConfig) -> [[Complex64; 8]; 4] {
    // Local positions of the pair (p, q ascending) and the odd (gauge) dot.
    let (p, q, odd) = match config.readout_pair() {
        ReadoutPair::First => (0usize, 1usize, 2usize),
        ReadoutPair::Last => (1, 2, 0),
    };
    let z = Complex64::new(0.0, 0.0);
    let mut kets = [[z; 8]; 4];

    let sqrt_half = std::f64::consts::FRAC_1_SQRT_2;
    let sqrt_third = (1.0f64 / 3.0).sqrt();
    let sqrt_two_thirds = (2.0f64 / 3.0).sqrt();

    // Bit masks: spin ↓ on a local position sets that bit.
    let up_dn = 1usize << q; // |↑_p ↓_q⟩
    let dn_up = 1usize << p; // |↓_p ↑_q⟩
    let dn_dn = (1 << p) | (1 << q);
    let gauge_dn = 1usize << odd;

    // |0, ↓⟩ and |0, ↑⟩: singlet on the pair, gauge spin on the odd dot.
    for (slot, g_mask) in [(0usize, gauge_dn), (1, 0)] {
        kets[slot][up_dn | g_mask] = Complex64::new(sqrt_half, 0.0);
        kets[slot][dn_up | g_mask] = Complex64::new(-sqrt_half, 0.0);
    }

    // |1, ↓⟩ = √(1/3)|T₀⟩|↓⟩ − √(2/3)|T₋⟩|↑⟩
    kets[2][up_dn | gauge_dn] = Complex64::new(sqrt_third * sqrt_half, 0.0);
    kets[2][dn_up | gauge_dn] = Complex64::new(sqrt_third * sqrt_half, 0.0);
    kets[2][dn_dn] = Complex64::new(-sqrt_two_thirds, 0.0);

    // |1, ↑⟩ = √(2/3)|T₊⟩|↓⟩ − √(1/3)|T₀⟩|↑⟩
    kets[3][gauge_dn] = Complex64::new(sqrt_two_thirds, 0.0);
    kets[3][up_dn] = Complex64::new(-sqrt_third * sqrt_half, 0.0);
    kets[3][dn_up] = Complex64::new(-sqrt_third * sqrt_half, 0.0);

    kets
}

/// Index into the `computational_kets` array for (logical, gauge).
pub(crate) fn ket_slot(logical: u8, gauge: Gauge) -> usize {
     2 * logical as usize
        + match gauge {
            Gauge::Down => 0,
            Gauge::Up => 1,
        }
}

/// Encode a product logical state of two qubits into the 64-dim six-spin
/// state vector. The result is exactly in the computational subspace
/// (leakage 0 by construction).
pub fn encode_two_qubit_state(
    logical: &LogicalState,
    configs: (&QubitConfig, &QubitConfig),
) -> Result<StateVector, EoEncodingError> {
    let (c1, c2) = configs;
    if logical.qubits.len() != 2 {
        return Err(EoEncodingError::OverlappingDots);
    }
    if !c1.disjoint(c2) {
        return Err(EoEncodingError::OverlappingDots);
    }
    for q in &logical.qubits {
        let norm = q.a0.norm_sqr() + q.a1.norm_sqr();
        if (norm - 1.0).abs() > 1e-10 {
            return Err(EoEncodingError::UnnormalizedAmplitudes(norm.sqrt()));
        }
    }

    // Per-qubit 8-dim superposition a₀|0,g⟩ + a₁|1,g⟩ on the triple.
    let local = |config: &QubitConfig, q: &LogicalQubit| -> [Complex64; 8] {
        let kets = computational_kets(config);
        let k0 = kets[ket_slot(0, q.gauge)];
        let k1 = kets[ket_slot(1, q.gauge)];
        let mut out = [Complex64::new(0.0, 0.0); 8];
        for t in 0..8 {
            out[t] = q.a0 * k0[t] + q.a1 * k1[t];
        }
        out
    };
    let l1 = local(c1, &logical.qubits[0]);
    let l2 = local(c2, &logical.qubits[1]);

    let b1 = c1.spin_bits();
    let b2 = c2.spin_bits();
    let mut amps = vec![Complex64::new(0.0, 0.0); 1 << DEVICE_SPINS];
    for (x, amp) in amps.iter_mut().enumerate() {
        let t1 = local_index(x, &b1);
        let t2 = local_index(x, &b2);
        *amp = l1[t1] * l2[t2];
    }
    Ok(StateVector::from_amplitudes(DEVICE_SPINS, amps)?)
}

/// Extract the 3-bit local index of a triple from a full basis index.
pub(crate) fn local_index(x: usize, bits: &[usize; 3]) -> usize {
    (((x >> bits[0]) & 1)) | (((x >> bits[1]) & 1) << 1) | (((x >> bits[2]) & 1) << 2)
}
