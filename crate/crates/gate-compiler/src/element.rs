use num_complex::Complex64;

/// One element of the single- or two-qubit Clifford group.
///
/// The `index` is the element's canonical position in its group table:
/// elements are represented exactly in the cyclotomic ring ℤ[ω]/√2ᵏ,
/// reduced to a unique phase-free canonical form, and sorted; the index is
/// the rank in that order.  The stored unitary is one concrete
/// representative of the phase class (2×2 for one qubit, 4×4 for two),
/// row-major.
#[derive(Debug, Clone, PartialEq)]
pub struct CliffordElement {
    n_qubits: u8,
    index: u16,
    unitary: Vec<Complex64>,
}

impl CliffordElement {
    pub(crate) fn new(n_qubits: u8, index: u16, unitary: Vec<Complex64>) -> Self {
        debug_assert_eq!(unitary.len(), 1 << (2 * n_qubits));
        Self {
            n_qubits,
            index,
            unitary,
        }
    }

    pub fn n_qubits(&self) -> u8 {
        self.n_qubits
    }

    /// Canonical index within the group table (0..24 or 0..11520).
    pub fn index(&self) -> u16 {
        self.index
    }

    /// Matrix dimension: 2 for one qubit, 4 for two.
    pub fn dim(&self) -> usize {
        1 << self.n_qubits
    }

    /// Row-major unitary representative (defined up to global phase).
    pub fn unitary(&self) -> &[Complex64] {
        &self.unitary
    }

    pub fn entry(&self, row: usize, col: usize) -> Complex64 {
        self.unitary[row * self.dim() + col]
    }
}
