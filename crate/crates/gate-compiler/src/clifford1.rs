use std::collections::{HashMap, VecDeque};
use std::sync::OnceLock;

use num_complex::Complex64;

use crate::element::CliffordElement;
use crate::ring::{hadamard, phase_s, CycMat};

/// The 24-element single-qubit Clifford group (phase-free), enumerated
/// exactly in the cyclotomic ring and indexed canonically.
#[derive(Debug)]
pub struct Clifford1Group {
    elems: Vec<CycMat<2>>,
    index: HashMap<CycMat<2>, u16>,
    identity: u16,
}

static GROUP_1Q: OnceLock<Clifford1Group> = OnceLock::new();

impl Clifford1Group {
    /// Shared immutable instance (built once, thread-safe).
    pub fn get() -> &'static Self {
        GROUP_1Q.get_or_init(Self::build)
    }

    fn build() -> Self {
        let gens = [hadamard().canonical(), phase_s().canonical()];
        let start = CycMat::<2>::identity().canonical();
        let mut seen: HashMap<CycMat<2>, ()> = HashMap::new();
        seen.insert(start, ());
        let mut queue = VecDeque::from([start]);
        while let Some(m) = queue.pop_front() {
            for g in &gens {
                let n = m.mul(g).canonical();
                if seen.insert(n, ()).is_none() {
                    queue.push_back(n);
                }
            }
        }
        let mut elems: Vec<CycMat<2>> = seen.into_keys().collect();
        elems.sort();
        assert_eq!(elems.len(), 24, "single-qubit Clifford group order");
        let index: HashMap<CycMat<2>, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i as u16))
            .collect();
        let identity = index[&CycMat::<2>::identity().canonical()];
        Self {
            elems,
            index,
            identity,
        }
    }

    pub fn len(&self) -> usize {
        self.elems.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn identity_index(&self) -> u16 {
        self.identity
    }

    pub fn element(&self, index: u16) -> CliffordElement {
        CliffordElement::new(1, index, self.elems[index as usize].to_complex())
    }

    /// Index of `a · b` (apply `b` first, then `a`).
    pub fn compose(&self, a: u16, b: u16) -> u16 {
        let m = self.elems[a as usize]
            .mul(&self.elems[b as usize])
            .canonical();
        self.index[&m]
    }

    pub fn inverse(&self, a: u16) -> u16 {
        let m = self.elems[a as usize].dagger().canonical();
        self.index[&m]
    }

    pub(crate) fn mat(&self, index: u16) -> &CycMat<2> {
        &self.elems[index as usize]
    }

    pub(crate) fn index_of_mat(&self, m: &CycMat<2>) -> Option<u16> {
        self.index.get(&m.canonical()).copied()
    }

    /// Find the group element equal to `u` up to global phase, if any.
    pub fn index_of_unitary(&self, u: &[[Complex64; 2]; 2]) -> Option<u16> {
        for (i, m) in self.elems.iter().enumerate() {
            let v = m.to_complex();
            // Optimal phase aligns the largest-overlap direction.
            let overlap: Complex64 = (0..4)
                .map(|t| v[t].conj() * u[t / 2][t % 2])
                .sum();
            if overlap.norm() < 2.0 - 1e-6 {
                continue;
            }
            let phase = overlap / overlap.norm();
            let ok = (0..4).all(|t| (u[t / 2][t % 2] - phase * v[t]).norm() < 1e-8);
            if ok {
                return Some(i as u16);
            }
        }
        None
    }
}
