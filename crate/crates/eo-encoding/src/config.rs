use crate::EoEncodingError;
use spin_core::FIRST_DOT;

/// Which adjacent dot pair inside a qubit's triple carries the singlet of
/// |0⟩ and is read out by Pauli spin blockade.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ReadoutPair {
    /// The first two dots of the triple.
    First,
    /// The last two dots of the triple.
    Last,
}

/// Static description of one exchange-only qubit: which three dots it
/// occupies, which adjacent pair defines its z-axis (the readout pair), and
/// which barrier electrodes realize the two control axes J_z and J_n.
///
/// J_z couples the readout pair itself; J_n couples the other adjacent pair
/// (readout pair's outer dot with the remaining dot), giving a control axis
/// at 120° from z on the logical Bloch sphere.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QubitConfig {
    dots: (usize, usize, usize),
    readout_pair: ReadoutPair,
    z_barrier: usize,
    n_barrier: usize,
}

impl QubitConfig {
    /// Build and validate a configuration. The dots must be three
    /// consecutive device dots; `z_barrier` must couple the readout pair and
    /// `n_barrier` the other adjacent pair (so they share exactly one dot).
    pub fn new(
        dots: (usize, usize, usize),
        readout_pair: ReadoutPair,
        z_barrier: usize,
        n_barrier: usize,
    ) -> Result<Self, EoEncodingError> {
        let (d0, d1, d2) = dots;
        if d1 != d0 + 1 || d2 != d0 + 2 || d0 < FIRST_DOT {
            return Err(EoEncodingError::InvalidTriple(dots));
        }
        // Barrier b couples dots (b−1, b): the inner barriers of the triple
        // are d1 (coupling d0-d1) and d2 (coupling d1-d2).
        let (want_z, want_n) = match readout_pair {
            ReadoutPair::First => (d1, d2),
            ReadoutPair::Last => (d2, d1),
        };
        if z_barrier != want_z {
            return Err(EoEncodingError::BarrierMismatch {
                barrier: z_barrier,
                role: "readout (z)",
                dots,
            });
        }
        if n_barrier != want_n {
            return Err(EoEncodingError::BarrierMismatch {
                barrier: n_barrier,
                role: "complementary (n)",
                dots,
            });
        }
        Ok(Self {
            dots,
            readout_pair,
            z_barrier,
            n_barrier,
        })
    }

    /// Qubit 1 of the six-dot device: dots 4-6, readout pair (4,5),
    /// z-axis on B₅ and n-axis on B₆.
    pub fn q1() -> Self {
        Self::new((4, 5, 6), ReadoutPair::First, 5, 6).expect("static Q1 config is valid")
    }

    /// Qubit 2 of the six-dot device as tuned for readout: dots 7-9 with the
    /// readout pair on the far side (8,9), z-axis on B₉ and n-axis on B₈.
    pub fn q2() -> Self {
        Self::new((7, 8, 9), ReadoutPair::Last, 9, 8).expect("static Q2 config is valid")
    }

    /// The same triple with the readout pair moved to the other adjacent
    /// pair, which exchanges the roles of the two control barriers.
    pub fn mirrored(&self) -> Self {
        let readout_pair = match self.readout_pair {
            ReadoutPair::First => ReadoutPair::Last,
            ReadoutPair::Last => ReadoutPair::First,
        };
        Self {
            dots: self.dots,
            readout_pair,
            z_barrier: self.n_barrier,
            n_barrier: self.z_barrier,
        }
    }

    pub fn dots(&self) -> (usize, usize, usize) {
        self.dots
    }

    pub fn readout_pair(&self) -> ReadoutPair {
        self.readout_pair
    }

    pub fn z_barrier(&self) -> usize {
        self.z_barrier
    }

    pub fn n_barrier(&self) -> usize {
        self.n_barrier
    }

    /// The two dots read out by Pauli spin blockade.
    pub fn pair_dots(&self) -> (usize, usize) {
        let (d0, d1, d2) = self.dots;
        match self.readout_pair {
            ReadoutPair::First => (d0, d1),
            ReadoutPair::Last => (d1, d2),
        }
    }

    /// The dot carrying the gauge spin (the one outside the readout pair).
    pub fn odd_dot(&self) -> usize {
        let (d0, _, d2) = self.dots;
        match self.readout_pair {
            ReadoutPair::First => d2,
            ReadoutPair::Last => d0,
        }
    }

    /// Spin (bit) indices of the triple in a simulated state vector, in
    /// ascending dot order.
    pub fn spin_bits(&self) -> [usize; 3] {
        let (d0, d1, d2) = self.dots;
        [d0 - FIRST_DOT, d1 - FIRST_DOT, d2 - FIRST_DOT]
    }

    /// True when the two configs occupy six pairwise-distinct dots.
    pub fn disjoint(&self, other: &Self) -> bool {
        let a = [self.dots.0, self.dots.1, self.dots.2];
        let b = [other.dots.0, other.dots.1, other.dots.2];
        a.iter().all(|d| !b.contains(d))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn device_configs_are_valid() {
        let q1 = QubitConfig::q1();
        assert_eq!(q1.pair_dots(), (4, 5));
        assert_eq!(q1.odd_dot(), 6);
        assert_eq!((q1.z_barrier(), q1.n_barrier()), (5, 6));

        let q2 = QubitConfig::q2();
        assert_eq!(q2.pair_dots(), (8, 9));
        assert_eq!(q2.odd_dot(), 7);
        assert_eq!((q2.z_barrier(), q2.n_barrier()), (9, 8));
        assert!(q1.disjoint(&q2));
    }

    #[test]
    fn mirroring_config_swaps_axes() {
        let m = QubitConfig::q1().mirrored();
        assert_eq!(m.pair_dots(), (5, 6));
        assert_eq!(m.odd_dot(), 4);
        assert_eq!((m.z_barrier(), m.n_barrier()), (6, 5));
        assert_eq!(m.mirrored(), QubitConfig::q1());
    }

    #[test]
    fn rejects_mismatched_barriers() {
        assert!(QubitConfig::new((4, 5, 6), ReadoutPair::First, 6, 5).is_err());
        assert!(QubitConfig::new((4, 6, 8), ReadoutPair::First, 5, 6).is_err());
    }
}
