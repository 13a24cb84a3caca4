use num_complex::Complex64;
use spin_core::StateVector;

use crate::encode::{computational_kets, local_index};
use crate::{EoEncodingError, QubitConfig};

/// Project a state onto the 4-dim computational subspace of one qubit's
/// triple (span{|0⟩,|1⟩} ⊗ gauge, i.e. the total-spin-1/2 part of the three
/// spins), leaving all other spins untouched. The result is not normalized;
/// its squared norm is the computational population.
pub fn computational_projection(
    state: &StateVector,
    config: &QubitConfig,
) -> Result<StateVector, EoEncodingError> {
    let bits = config.spin_bits();
    let n = state.n_spins();
    if bits[2] >= n {
        return Err(EoEncodingError::StateTooSmall {
            required: bits[2] + 1,
            actual: n,
        });
    }
    let kets = computational_kets(config);
    let amps = state.amplitudes();
    let dim = amps.len();

    // Mask of the non-triple bits; `rest_index` compresses them to 0..2^(n-3).
    let others: Vec<usize> = (0..n).filter(|b| !bits.contains(b)).collect();
    let rest_index = |x: usize| -> usize {
        others
            .iter()
            .enumerate()
            .fold(0, |acc, (m, &b)| acc | (((x >> b) & 1) << m))
    };

    let mut projected = vec![Complex64::new(0.0, 0.0); dim];
    let mut coeff = vec![Complex64::new(0.0, 0.0); dim >> 3];
    for ket in &kets {
        coeff.iter_mut().for_each(|c| *c = Complex64::new(0.0, 0.0));
        for (x, a) in amps.iter().enumerate() {
            let t = local_index(x, &bits);
            coeff[rest_index(x)] += ket[t].conj() * a;
        }
        for (x, out) in projected.iter_mut().enumerate() {
            let t = local_index(x, &bits);
            *out += ket[t] * coeff[rest_index(x)];
        }
    }
    Ok(StateVector::from_amplitudes(n, projected)?)
}

/// Population of `state` outside the computational subspace of one qubit:
/// the weight of the total-spin-3/2 component of its triple. Exchange pulses
/// inside the triple conserve its total spin, so this is invariant under any
/// intra-qubit schedule. Assumes a normalized input state.
pub fn leakage_population(
    state: &StateVector,
    config: &QubitConfig,
) -> Result<f64, EoEncodingError> {
    let proj = computational_projection(state, config)?;
    let pop = proj.norm().powi(2);
    Ok((1.0 - pop).clamp(0.0, 1.0))
}

/// Joint two-qubit leakage: 1 minus the population of the 4-dim two-qubit
/// computational subsystem (both triples simultaneously in their spin-1/2
/// subspaces).
pub fn joint_leakage_population(
    state: &StateVector,
    configs: (&QubitConfig, &QubitConfig),
) -> Result<f64, EoEncodingError> {
    if !configs.0.disjoint(configs.1) {
        return Err(EoEncodingError::OverlappingDots);
    }
    let proj = computational_projection(state, configs.0)?;
    let proj = computational_projection(&proj, configs.1)?;
    let pop = proj.norm().powi(2);
    Ok((1.0 - pop).clamp(0.0, 1.0))
}
