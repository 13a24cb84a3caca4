use num_complex::Complex64;

use crate::SpinCoreError;

/// Statevector of `n_spins` spin-1/2 particles in the spin-z product basis.
///
/// Basis index `x` assigns spin `i` the value of bit `i` (little-endian),
/// with 0 = ↑ and 1 = ↓. The vector owns its amplitudes; all operations are
/// value-semantic and the type is `Send + Sync`.
#[derive(Debug, Clone, PartialEq)]
pub struct StateVector {
    n_spins: usize,
    amps: Vec<Complex64>,
}

impl StateVector {
    /// Computational basis state |x⟩.
    pub fn basis(n_spins: usize, index: usize) -> Result<Self, SpinCoreError> {
        let dim = 1usize << n_spins;
        if index >= dim {
            return Err(SpinCoreError::BasisOutOfRange { index, n_spins });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); dim];
        amps[index] = Complex64::new(1.0, 0.0);
        Ok(Self { n_spins, amps })
    }

    /// State from raw amplitudes (length must be 2^n_spins). The vector is
    /// not renormalized; callers own the normalization contract.
    pub fn from_amplitudes(n_spins: usize, amps: Vec<Complex64>) -> Result<Self, SpinCoreError> {
        if amps.len() != 1usize << n_spins {
            return Err(SpinCoreError::DimensionMismatch {
                len: amps.len(),
                n_spins,
            });
        }
        Ok(Self { n_spins, amps })
    }

    pub fn n_spins(&self) -> usize {
        self.n_spins
    }

    pub fn dim(&self) -> usize {
        self.amps.len()
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    pub fn amplitudes_mut(&mut self) -> &mut [Complex64] {
        &mut self.amps
    }

    /// ⟨self|other⟩.
    pub fn inner(&self, other: &Self) -> Complex64 {
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum()
    }

    pub fn norm(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum::<f64>().sqrt()
    }

    /// Rescale to unit norm; errors out if the norm has collapsed to the
    /// point where the direction is numerically meaningless.
    pub fn normalize(&mut self) -> Result<(), SpinCoreError> {
        let n = self.norm();
        if n < 1e-12 {
            return Err(SpinCoreError::NormUnderflow { min: 1e-12 });
        }
        let inv = 1.0 / n;
        for a in &mut self.amps {
            *a *= inv;
        }
        Ok(())
    }

    /// Apply the exchange unitary `P_T + e^{iθ}·P_S` on the spin pair.
    ///
    /// Acts in place in O(2^n): |↑↑⟩/|↓↓⟩ components are untouched (pure
    /// triplet); each {|↑↓⟩, |↓↑⟩} pair mixes through
    /// `[[ (1+e^{iθ})/2, (1−e^{iθ})/2 ], [ (1−e^{iθ})/2, (1+e^{iθ})/2 ]]`.
    pub fn apply_exchange(
        &mut self,
        pair: (usize, usize),
        angle: f64,
    ) -> Result<(), SpinCoreError> {
        let (i, j) = pair;
        if i == j {
            return Err(SpinCoreError::DegeneratePair { i, j });
        }
        for s in [i, j] {
            if s >= self.n_spins {
                return Err(SpinCoreError::SpinOutOfRange {
                    spin: s,
                    n_spins: self.n_spins,
                });
            }
        }
        let (mi, mj) = (1usize << i, 1usize << j);
        let phase = Complex64::from_polar(1.0, angle);
        let half = Complex64::new(0.5, 0.0);
        let c_plus = half * (Complex64::new(1.0, 0.0) + phase);
        let c_minus = half * (Complex64::new(1.0, 0.0) - phase);
        // Enumerate each {|↑↓⟩, |↓↑⟩} index pair exactly once: x has spin i
        // up (bit clear) and spin j down (bit set); partner swaps both bits.
        for x in 0..self.amps.len() {
            if x & mi == 0 && x & mj != 0 {
                let y = x ^ mi ^ mj;
                let (ax, ay) = (self.amps[x], self.amps[y]);
                self.amps[x] = c_plus * ax + c_minus * ay;
                self.amps[y] = c_minus * ax + c_plus * ay;
            }
        }
        Ok(())
    }

    /// Zeeman phase evolution: applies ⊗_i diag(e^{−iδω_i·t/2}, e^{+iδω_i·t/2})
    /// with one angular-frequency detuning δω_i per spin.
    pub fn zeeman_evolution(
        &mut self,
        detunings: &[f64],
        time: f64,
    ) -> Result<(), SpinCoreError> {
        if detunings.len() != self.n_spins {
            return Err(SpinCoreError::DetuningCount {
                got: detunings.len(),
                need: self.n_spins,
            });
        }
        // Per-spin phase ±δω·t/2; accumulate per basis state. Precompute the
        // two phases per spin and walk the bits of each index.
        let half_t = 0.5 * time;
        let phases: Vec<(Complex64, Complex64)> = detunings
            .iter()
            .map(|&dw| {
                (
                    Complex64::from_polar(1.0, -dw * half_t), // ↑, bit 0
                    Complex64::from_polar(1.0, dw * half_t),  // ↓, bit 1
                )
            })
            .collect();
        for (x, a) in self.amps.iter_mut().enumerate() {
            let mut p = Complex64::new(1.0, 0.0);
            for (i, ph) in phases.iter().enumerate() {
                p *= if x & (1 << i) == 0 { ph.0 } else { ph.1 };
            }
            *a *= p;
        }
        Ok(())
    }

    /// Expectation of total S_z in units of ħ (each spin contributes ±1/2).
    pub fn total_sz(&self) -> f64 {
        self.amps
            .iter()
            .enumerate()
            .map(|(x, a)| {
                let downs = (x & ((1 << self.n_spins) - 1)).count_ones() as f64;
                let sz = 0.5 * (self.n_spins as f64 - 2.0 * downs);
                sz * a.norm_sqr()
            })
            .sum()
    }

    /// Expectation of total S² in units of ħ², via
    /// S² = 3n/4 + Σ_{i<j} (⟨SWAP_ij⟩ − 1/2)
    /// (each pairwise Heisenberg term is (SWAP − 1/2)/... folded exactly).
    pub fn total_s_squared(&self) -> f64 {
        let n = self.n_spins;
        let mut total = 0.75 * n as f64;
        for i in 0..n {
            for j in (i + 1)..n {
                total += self.swap_expectation((i, j)) - 0.5;
            }
        }
        total
    }

    /// ⟨SWAP_ij⟩ (real for any state since SWAP is Hermitian). The two-spin
    /// singlet projector expectation follows as (1 − ⟨SWAP⟩)/2.
    pub fn swap_expectation(&self, pair: (usize, usize)) -> f64 {
        let (mi, mj) = (1usize << pair.0, 1usize << pair.1);
        let mut acc = 0.0;
        for (x, a) in self.amps.iter().enumerate() {
            let bi = x & mi != 0;
            let bj = x & mj != 0;
            if bi == bj {
                acc += a.norm_sqr();
            } else {
                let y = x ^ mi ^ mj;
                acc += (a.conj() * self.amps[y]).re;
            }
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn singlet_is_exchange_eigenstate() {
        // |S⟩ = (|↑↓⟩ − |↓↑⟩)/√2 on 2 spins: indices |↑↓⟩ = bit1 set = 2,
        // |↓↑⟩ = bit0 set = 1.
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let mut st = StateVector::from_amplitudes(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(-s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        let before = st.clone();
        st.apply_exchange((0, 1), 1.234).unwrap();
        // amplitude picks up exactly e^{iθ}
        let overlap = before.inner(&st);
        assert!((overlap - Complex64::from_polar(1.0, 1.234)).norm() < 1e-12);
    }

    #[test]
    fn pi_pulse_is_swap() {
        let mut st = StateVector::basis(2, 0b01).unwrap(); // spin0 ↓, spin1 ↑
        st.apply_exchange((0, 1), std::f64::consts::PI).unwrap();
        assert!((st.amplitudes()[0b10].norm() - 1.0).abs() < 1e-12);
    }

    #[test]
    fn s_squared_of_singlet_and_triplet() {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let singlet = StateVector::from_amplitudes(
            2,
            vec![
                Complex64::new(0.0, 0.0),
                Complex64::new(-s, 0.0),
                Complex64::new(s, 0.0),
                Complex64::new(0.0, 0.0),
            ],
        )
        .unwrap();
        assert!(singlet.total_s_squared().abs() < 1e-12);
        let tplus = StateVector::basis(2, 0).unwrap(); // |↑↑⟩
        assert!((tplus.total_s_squared() - 2.0).abs() < 1e-12);
        assert!((tplus.total_sz() - 1.0).abs() < 1e-12);
    }
}
