use rand::Rng;
use spin_core::{StateVector, FIRST_DOT};

use crate::EoEncodingError;

/// Outcome of a Pauli-spin-blockade readout of one dot pair.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PsbOutcome {
    /// The pair was projected onto its two-spin singlet.
    Singlet,
    /// The pair was projected onto the triplet (blockaded) subspace.
    Triplet,
}

/// Convert a device dot pair into state-vector spin bits.
fn pair_bits(state: &StateVector, pair: (usize, usize)) -> Result<(usize, usize), EoEncodingError> {
    let (di, dj) = pair;
    if di == dj || di < FIRST_DOT || dj < FIRST_DOT {
        return Err(EoEncodingError::InvalidPair(pair));
    }
    let (i, j) = (di - FIRST_DOT, dj - FIRST_DOT);
    let n = state.n_spins();
    if i >= n || j >= n {
        return Err(EoEncodingError::StateTooSmall {
            required: i.max(j) + 1,
            actual: n,
        });
    }
    Ok((i, j))
}

/// Probability that a PSB readout of `pair` yields the singlet outcome:
/// the expectation of the two-spin singlet projector (1 − SWAP)/2.
pub fn singlet_probability(
    state: &StateVector,
    pair: (usize, usize),
) -> Result<f64, EoEncodingError> {
    let bits = pair_bits(state, pair)?;
    Ok(((1.0 - state.swap_expectation(bits)) / 2.0).clamp(0.0, 1.0))
}

/// Sampled projective PSB measurement of a dot pair. Draws the outcome with
/// Born probabilities, projects onto the corresponding subspace (singlet, or
/// its triplet complement) and renormalizes.
///
/// Leaked states register as triplet: the fully-polarized components of a
/// leaked triple have no singlet weight on any internal pair, so leakage has
/// the same readout signature as |1⟩.
pub fn psb_measure<R: Rng + ?Sized>(
    state: &StateVector,
    pair: (usize, usize),
    rng: &mut R,
) -> Result<(PsbOutcome, StateVector), EoEncodingError> {
    let (i, j) = pair_bits(state, pair)?;
    let p_singlet = singlet_probability(state, pair)?;
    let outcome = if rng.gen::<f64>() < p_singlet {
        PsbOutcome::Singlet
    } else {
        PsbOutcome::Triplet
    };

    // Project: P_S = (1 − SWAP)/2 on bits (i, j); P_T = (1 + SWAP)/2.
    let sign = match outcome {
        PsbOutcome::Singlet => -1.0,
        PsbOutcome::Triplet => 1.0,
    };
    let (mi, mj) = (1usize << i, 1usize << j);
    let amps = state.amplitudes();
    let mut projected = vec![num_complex::Complex64::new(0.0, 0.0); amps.len()];
    for (x, out) in projected.iter_mut().enumerate() {
        let swapped = if ((x & mi != 0) as u8) == ((x & mj != 0) as u8) {
            amps[x]
        } else {
            amps[x ^ mi ^ mj]
        };
        *out = (amps[x] + sign * swapped) / 2.0;
    }
    let mut collapsed = StateVector::from_amplitudes(state.n_spins(), projected)?;
    let norm = collapsed.norm();
    if norm * norm < 1e-12 {
        return Err(EoEncodingError::ProbabilityUnderflow(norm * norm));
    }
    collapsed.normalize()?;
    Ok((outcome, collapsed))
}
