use std::collections::HashMap;
use std::path::Path;

use eo_encoding::{mirroring_sequence, QubitConfig};
use num_complex::Complex64;
use serde::{Deserialize, Serialize};

use crate::clifford1::Clifford1Group;
use crate::element::CliffordElement;
use crate::entangler::{entangler_sequence, supported_pairs, EntanglerGate};
use crate::error::GateCompilerError;
use crate::ring::{cnot, hadamard, iswap, kron2, phase_s, swap, Cyc, CycMat};
use crate::sequence::GateSequence;
use crate::synth1q::decompose_1q_clifford;

/// Which entangling gate a two-qubit Clifford's canonical local
/// decomposition contains.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum EntanglerClass {
    None,
    Swap,
    Cnot,
    Iswap,
}

impl std::fmt::Display for EntanglerClass {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let s = match self {
            EntanglerClass::None => "none",
            EntanglerClass::Swap => "swap",
            EntanglerClass::Cnot => "cnot",
            EntanglerClass::Iswap => "iswap",
        };
        f.write_str(s)
    }
}

/// Canonical local decomposition C = (L₁⊗L₂)·G·(R₁⊗R₂) of a two-qubit
/// Clifford, with G the class entangler (identity for class `none`) and the
/// four factors given as single-qubit Clifford indices.  L₁ and L₂ range
/// over the whole 24-element group; R₁ and R₂ are restricted to the
/// three-element axis-cycling set {identity, S·H, (S·H)²}, which makes the
/// factorization unique — every element appears exactly once among the
/// 576·(1 + 1 + 9 + 9) products.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct LocalDecomposition {
    pub class: EntanglerClass,
    pub l1: u16,
    pub l2: u16,
    pub r1: u16,
    pub r2: u16,
}

/// The 11,520-element two-qubit Clifford group: exact canonical ring forms
/// and the canonical local-entangler-local decomposition of every element.
#[derive(Debug)]
pub struct Clifford2Group {
    elems: Vec<CycMat<4>>,
    index: HashMap<CycMat<4>, u16>,
    table: Vec<LocalDecomposition>,
    identity: u16,
}

/// Enumerate the full two-qubit Clifford group and classify every element.
///
/// The group is constructed directly from its canonical local-equivalence
/// decomposition: products (A⊗B)·G·(s₁⊗s₂) over the full 24×24 local group
/// on the left, G ∈ {identity, SWAP, CNOT, iSWAP}, and the three-element
/// axis-cycling set on each right factor for the CNOT and iSWAP classes
/// (identity-only right factors for the other two).  The
/// 576 + 576 + 5,184 + 5,184 = 11,520 products are pairwise distinct —
/// asserted during the build — so this exhausts the group, proves the class
/// partition, and assigns every element its unique decomposition in one
/// pass.  All arithmetic is exact over ℤ[ω], so membership and equality are
/// never decided by floating-point comparison.
pub fn build_2q_clifford_group() -> Clifford2Group {
    Clifford2Group::build()
}

impl Clifford2Group {
    fn build() -> Self {
        let c1 = Clifford1Group::get();
        let n1 = c1.len() as u16;
        let id1 = c1.identity_index();

        // Right-factor transversal: identity plus the two axis-cycling
        // Cliffords (S·H)^±1, which rotate the Bloch frame by ∓120° about
        // the (1,1,1) diagonal and permute the Pauli axes cyclically.
        let sh = phase_s().mul(&hadamard());
        let sh_idx = c1.index_of_mat(&sh).expect("S·H is a Clifford");
        let sh2_idx = c1.compose(sh_idx, sh_idx);
        let cycle = [id1, sh_idx, sh2_idx];

        // All 576 local products, kept un-canonicalized for exact products.
        let mut local_kron = Vec::with_capacity((n1 as usize) * (n1 as usize));
        for a in 0..n1 {
            for b in 0..n1 {
                local_kron.push(kron2(c1.mat(a), c1.mat(b)));
            }
        }
        let kron_of = |a: u16, b: u16| &local_kron[(a * n1 + b) as usize];

        let mut map: HashMap<CycMat<4>, LocalDecomposition> =
            HashMap::with_capacity(16_384);
        let mut insert = |m: CycMat<4>, d: LocalDecomposition| {
            if let Some(prev) = map.insert(m, d) {
                panic!(
                    "duplicate canonical form: classes {} and {} overlap",
                    prev.class, d.class
                );
            }
        };

        for a in 0..n1 {
            for b in 0..n1 {
                let ab = kron_of(a, b);
                insert(
                    ab.canonical(),
                    LocalDecomposition {
                        class: EntanglerClass::None,
                        l1: a,
                        l2: b,
                        r1: id1,
                        r2: id1,
                    },
                );
                insert(
                    ab.mul(&swap()).canonical(),
                    LocalDecomposition {
                        class: EntanglerClass::Swap,
                        l1: a,
                        l2: b,
                        r1: id1,
                        r2: id1,
                    },
                );
                for (class, g) in [
                    (EntanglerClass::Cnot, cnot()),
                    (EntanglerClass::Iswap, iswap()),
                ] {
                    let abg = ab.mul(&g);
                    for r1 in cycle {
                        for r2 in cycle {
                            insert(
                                abg.mul(kron_of(r1, r2)).canonical(),
                                LocalDecomposition {
                                    class,
                                    l1: a,
                                    l2: b,
                                    r1,
                                    r2,
                                },
                            );
                        }
                    }
                }
            }
        }
        assert_eq!(map.len(), 11_520, "two-qubit Clifford group order");

        let mut elems: Vec<CycMat<4>> = map.keys().copied().collect();
        elems.sort();
        let index: HashMap<CycMat<4>, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i as u16))
            .collect();
        let table: Vec<LocalDecomposition> = elems.iter().map(|m| map[m]).collect();
        let identity = index[&CycMat::<4>::identity().canonical()];

        let group = Self {
            elems,
            index,
            table,
            identity,
        };
        assert_eq!(
            group.class_counts(),
            [576, 576, 5_184, 5_184],
            "entangler class partition"
        );
        group
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
        CliffordElement::new(2, index, self.elems[index as usize].to_complex())
    }

    /// Entangler class and canonical local factors of element `index`.
    pub fn decomposition(&self, index: u16) -> &LocalDecomposition {
        &self.table[index as usize]
    }

    /// Number of elements in each class, ordered (none, SWAP, CNOT, iSWAP).
    pub fn class_counts(&self) -> [usize; 4] {
        let mut counts = [0usize; 4];
        for d in &self.table {
            counts[d.class as usize] += 1;
        }
        counts
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

    /// Find the group element equal to `u` (row-major 4×4) up to global
    /// phase, if any.
    pub fn index_of_unitary(&self, u: &[[Complex64; 4]; 4]) -> Option<u16> {
        for (i, m) in self.elems.iter().enumerate() {
            let v = m.to_complex();
            let overlap: Complex64 = (0..16)
                .map(|t| v[t].conj() * u[t / 4][t % 4])
                .sum();
            if overlap.norm() < 4.0 - 1e-6 {
                continue;
            }
            let phase = overlap / overlap.norm();
            if (0..16).all(|t| (u[t / 4][t % 4] - phase * v[t]).norm() < 1e-8) {
                return Some(i as u16);
            }
        }
        None
    }

    /// Serialize the group table to a JSON artifact.
    ///
    /// Layout: `{ "group": "two-qubit-clifford", "order": 11520,
    /// "elements": [ { "k": u8, "entries": [[a,b,c,d]; 16] (row-major ℤ[ω]
    /// coefficients of the canonical representative, scaled by 1/√2ᵏ),
    /// "class": "none|swap|cnot|iswap", "locals": [l1,l2,r1,r2] }, … ] }`
    /// with elements in canonical index order.
    pub fn save_json(&self, path: &Path) -> Result<(), GateCompilerError> {
        let elements: Vec<ArtifactElement> = self
            .elems
            .iter()
            .zip(&self.table)
            .map(|(m, d)| ArtifactElement {
                k: m.k,
                entries: m
                    .e
                    .iter()
                    .flatten()
                    .map(|cy| cy.c)
                    .collect(),
                class: d.class,
                locals: [d.l1, d.l2, d.r1, d.r2],
            })
            .collect();
        let artifact = Artifact {
            group: "two-qubit-clifford".to_string(),
            order: self.elems.len(),
            elements,
        };
        let file = std::fs::File::create(path)?;
        serde_json::to_writer(std::io::BufWriter::new(file), &artifact)?;
        Ok(())
    }

    /// Load a table previously written by [`Clifford2Group::save_json`],
    /// re-validating element count, canonical order, and class sizes.
    pub fn load_json(path: &Path) -> Result<Self, GateCompilerError> {
        let file = std::fs::File::open(path)?;
        let artifact: Artifact = serde_json::from_reader(std::io::BufReader::new(file))?;
        if artifact.group != "two-qubit-clifford" || artifact.order != 11_520 {
            return Err(GateCompilerError::CacheFormat(format!(
                "unexpected group '{}' of order {}",
                artifact.group, artifact.order
            )));
        }
        if artifact.elements.len() != 11_520 {
            return Err(GateCompilerError::CacheFormat(format!(
                "expected 11520 elements, found {}",
                artifact.elements.len()
            )));
        }
        let mut elems = Vec::with_capacity(11_520);
        let mut table = Vec::with_capacity(11_520);
        for el in &artifact.elements {
            if el.entries.len() != 16 {
                return Err(GateCompilerError::CacheFormat(
                    "element without 16 entries".to_string(),
                ));
            }
            let mut e = [[Cyc::ZERO; 4]; 4];
            for (t, coeffs) in el.entries.iter().enumerate() {
                e[t / 4][t % 4] = Cyc { c: *coeffs };
            }
            let m = CycMat { k: el.k, e };
            if m.canonical() != m {
                return Err(GateCompilerError::CacheFormat(
                    "element not in canonical form".to_string(),
                ));
            }
            elems.push(m);
            table.push(LocalDecomposition {
                class: el.class,
                l1: el.locals[0],
                l2: el.locals[1],
                r1: el.locals[2],
                r2: el.locals[3],
            });
        }
        if !elems.windows(2).all(|w| w[0] < w[1]) {
            return Err(GateCompilerError::CacheFormat(
                "elements not sorted by canonical order".to_string(),
            ));
        }
        let index: HashMap<CycMat<4>, u16> = elems
            .iter()
            .enumerate()
            .map(|(i, m)| (*m, i as u16))
            .collect();
        let identity = *index
            .get(&CycMat::<4>::identity().canonical())
            .ok_or_else(|| {
                GateCompilerError::CacheFormat("identity element missing".to_string())
            })?;
        let group = Self {
            elems,
            index,
            table,
            identity,
        };
        if group.class_counts() != [576, 576, 5_184, 5_184] {
            return Err(GateCompilerError::CacheFormat(
                "entangler class sizes do not match 576/576/5184/5184".to_string(),
            ));
        }
        Ok(group)
    }

    pub(crate) fn entangler_ring_matrix(class: EntanglerClass) -> CycMat<4> {
        match class {
            EntanglerClass::None => CycMat::<4>::identity(),
            EntanglerClass::Swap => swap(),
            EntanglerClass::Cnot => cnot(),
            EntanglerClass::Iswap => iswap(),
        }
    }
}

/// Compile a two-qubit Clifford to an exchange-pulse sequence for the given
/// configuration pair.
///
/// The element's stored local decomposition C = (L₁⊗L₂)·G·(R₁⊗R₂) is played
/// right to left: R words, then the entangler sequence for G, then L words.
/// If the shipped entangler data does not cover the requested readout
/// orientations, the qubits are re-encoded with three-pulse mirroring gates
/// around the entangler — the orientation choice minimizing the added pulse
/// count is selected automatically.
pub fn decompose_2q_clifford(
    group: &Clifford2Group,
    c: &CliffordElement,
    configs: (&QubitConfig, &QubitConfig),
) -> Result<GateSequence, GateCompilerError> {
    if c.n_qubits() != 2 {
        return Err(GateCompilerError::WrongQubitCount {
            expected: 2,
            got: c.n_qubits(),
        });
    }
    let (c1, c2) = configs;
    let d = *group.decomposition(c.index());
    let ones = Clifford1Group::get();
    let mut seq = GateSequence::empty(
        format!("2q-clifford[{}] ({} class)", c.index(), d.class),
        vec![*c1, *c2],
    );

    // R factors act first.
    seq.extend_from(&decompose_1q_clifford(&ones.element(d.r1), c1)?);
    seq.extend_from(&decompose_1q_clifford(&ones.element(d.r2), c2)?);

    if d.class != EntanglerClass::None {
        let gate = match d.class {
            EntanglerClass::Swap => EntanglerGate::Swap,
            EntanglerClass::Cnot => EntanglerGate::Cnot,
            EntanglerClass::Iswap => EntanglerGate::Iswap,
            EntanglerClass::None => unreachable!(),
        };
        let (t1, t2) = select_entangler_frame(gate, (c1, c2))?;
        for (requested, target) in [(c1, &t1), (c2, &t2)] {
            if requested != target {
                for p in mirroring_sequence(requested).flatten() {
                    seq.push(p.barrier, p.angle);
                }
            }
        }
        seq.extend_from(&entangler_sequence(gate, (&t1, &t2))?);
        for (requested, target) in [(c1, &t1), (c2, &t2)] {
            if requested != target {
                for p in mirroring_sequence(target).flatten() {
                    seq.push(p.barrier, p.angle);
                }
            }
        }
    }

    // L factors act last.
    seq.extend_from(&decompose_1q_clifford(&ones.element(d.l1), c1)?);
    seq.extend_from(&decompose_1q_clifford(&ones.element(d.l2), c2)?);
    Ok(seq)
}

/// Pick the shipped configuration pair for `gate` reachable from the
/// requested pair with the fewest mirroring gates (each mirrored qubit costs
/// three π pulses before the entangler and three after).
fn select_entangler_frame(
    gate: EntanglerGate,
    configs: (&QubitConfig, &QubitConfig),
) -> Result<(QubitConfig, QubitConfig), GateCompilerError> {
    let (c1, c2) = configs;
    let mut best: Option<(usize, (QubitConfig, QubitConfig))> = None;
    for (t1, t2) in supported_pairs(gate) {
        let ok1 = t1 == *c1 || t1 == c1.mirrored();
        let ok2 = t2 == *c2 || t2 == c2.mirrored();
        if !(ok1 && ok2) {
            continue;
        }
        let mirrors = usize::from(t1 != *c1) + usize::from(t2 != *c2);
        if best.map_or(true, |(m, _)| mirrors < m) {
            best = Some((mirrors, (t1, t2)));
        }
    }
    best.map(|(_, pair)| pair).ok_or_else(|| {
        GateCompilerError::UnsupportedConfiguration(format!(
            "no {gate} sequence reachable by mirroring from (dots {:?} {:?}, dots {:?} {:?})",
            c1.dots(),
            c1.readout_pair(),
            c2.dots(),
            c2.readout_pair()
        ))
    })
}

#[derive(Serialize, Deserialize)]
struct Artifact {
    group: String,
    order: usize,
    elements: Vec<ArtifactElement>,
}

#[derive(Serialize, Deserialize)]
struct ArtifactElement {
    k: u8,
    entries: Vec<[i64; 4]>,
    class: EntanglerClass,
    locals: [u16; 4],
}

#[cfg(test)]
mod tests {
    use super::*;

    // The group build is exercised by the integration tests; unit tests here
    // cover only pieces that do not need the full table.

    #[test]
    fn entangler_matrices_are_unitary_ring_elements() {
        for class in [
            EntanglerClass::Swap,
            EntanglerClass::Cnot,
            EntanglerClass::Iswap,
        ] {
            let g = Clifford2Group::entangler_ring_matrix(class);
            let gg = g.mul(&g.dagger());
            assert_eq!(
                gg.canonical(),
                CycMat::<4>::identity().canonical(),
                "{class} representative not unitary"
            );
        }
    }
}
