//! Exact matrix arithmetic over the cyclotomic ring ℤ[ω], ω = e^{iπ/4}.
//!
//! Every Clifford unitary (single- or two-qubit) generated by {H, S, CNOT}
//! can be written with entries (a + bω + cω² + dω³)/√2ᵏ for integers
//! a, b, c, d and a shared exponent k ≥ 0.  Working in this ring makes group
//! enumeration, hashing and equality exact — no floating-point tolerance
//! enters the group tables.  Global phases are themselves powers of ω, so a
//! projective (phase-free) element has a unique canonical representative:
//! the lexicographically smallest of its eight phase rotations after the
//! exponent k has been fully reduced.

use num_complex::Complex64;

/// One ring element a + bω + cω² + dω³ with ω⁴ = −1.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub(crate) struct Cyc {
    pub c: [i64; 4],
}

impl Cyc {
    pub const ZERO: Cyc = Cyc { c: [0, 0, 0, 0] };
    pub const ONE: Cyc = Cyc { c: [1, 0, 0, 0] };
    /// ω² = i.
    pub const I: Cyc = Cyc { c: [0, 0, 1, 0] };

    pub fn from_int(n: i64) -> Cyc {
        Cyc { c: [n, 0, 0, 0] }
    }

    pub fn is_zero(self) -> bool {
        self.c == [0, 0, 0, 0]
    }

    pub fn add(self, o: Cyc) -> Cyc {
        Cyc {
            c: [
                self.c[0] + o.c[0],
                self.c[1] + o.c[1],
                self.c[2] + o.c[2],
                self.c[3] + o.c[3],
            ],
        }
    }

    pub fn mul(self, o: Cyc) -> Cyc {
        let mut r = [0i64; 4];
        for i in 0..4 {
            if self.c[i] == 0 {
                continue;
            }
            for j in 0..4 {
                let p = self.c[i] * o.c[j];
                let m = i + j;
                if m < 4 {
                    r[m] += p;
                } else {
                    r[m - 4] -= p; // ω⁴ = −1
                }
            }
        }
        Cyc { c: r }
    }

    /// Complex conjugate: ω̄ = −ω³, ω̄² = −ω², ω̄³ = −ω.
    pub fn conj(self) -> Cyc {
        Cyc {
            c: [self.c[0], -self.c[3], -self.c[2], -self.c[1]],
        }
    }

    /// Multiply by ω (coefficient rotation with sign wrap).
    pub fn times_omega(self) -> Cyc {
        Cyc {
            c: [-self.c[3], self.c[0], self.c[1], self.c[2]],
        }
    }

    /// Exact division by √2 = ω − ω³, if the quotient stays in the ring.
    pub fn div_sqrt2(self) -> Option<Cyc> {
        let y = self.c;
        if (y[0] + y[2]) % 2 != 0 || (y[1] + y[3]) % 2 != 0 {
            return None;
        }
        Some(Cyc {
            c: [
                (y[1] - y[3]) / 2,
                (y[0] + y[2]) / 2,
                (y[1] + y[3]) / 2,
                (y[2] - y[0]) / 2,
            ],
        })
    }

    /// Numeric value (before any /√2ᵏ scaling).
    pub fn to_complex(self) -> Complex64 {
        let s = std::f64::consts::FRAC_1_SQRT_2;
        let [a, b, c, d] = self.c.map(|v| v as f64);
        Complex64::new(a + (b - d) * s, c + (b + d) * s)
    }
}

/// N×N matrix with entries in ℤ[ω], globally scaled by 1/√2ᵏ.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub(crate) struct CycMat<const N: usize> {
    /// Denominator exponent: the matrix value is `e / √2ᵏ`.
    pub k: u8,
    pub e: [[Cyc; N]; N],
}

impl<const N: usize> CycMat<N> {
    pub fn identity() -> Self {
        let mut e = [[Cyc::ZERO; N]; N];
        for (i, row) in e.iter_mut().enumerate() {
            row[i] = Cyc::ONE;
        }
        CycMat { k: 0, e }
    }

    /// Matrix product, with the exponent re-reduced to its minimum.
    pub fn mul(&self, o: &Self) -> Self {
        let mut e = [[Cyc::ZERO; N]; N];
        for r in 0..N {
            for c in 0..N {
                let mut acc = Cyc::ZERO;
                for m in 0..N {
                    if !self.e[r][m].is_zero() && !o.e[m][c].is_zero() {
                        acc = acc.add(self.e[r][m].mul(o.e[m][c]));
                    }
                }
                e[r][c] = acc;
            }
        }
        CycMat { k: self.k + o.k, e }.reduce()
    }

    /// Conjugate transpose (the group inverse for unitary elements).
    pub fn dagger(&self) -> Self {
        let mut e = [[Cyc::ZERO; N]; N];
        for r in 0..N {
            for c in 0..N {
                e[r][c] = self.e[c][r].conj();
            }
        }
        CycMat { k: self.k, e }
    }

    /// Divide out every common factor of √2 so k is minimal.
    fn reduce(mut self) -> Self {
        'strip: while self.k > 0 {
            let mut next = [[Cyc::ZERO; N]; N];
            for r in 0..N {
                for c in 0..N {
                    match self.e[r][c].div_sqrt2() {
                        Some(q) => next[r][c] = q,
                        None => break 'strip,
                    }
                }
            }
            self.e = next;
            self.k -= 1;
        }
        self
    }

    /// Multiply every entry by ω (a global-phase rotation).
    fn times_omega(&self) -> Self {
        let mut e = self.e;
        for row in e.iter_mut() {
            for v in row.iter_mut() {
                *v = v.times_omega();
            }
        }
        CycMat { k: self.k, e }
    }

    /// Canonical projective representative: the smallest of the eight
    /// global-phase rotations ωʲ·M under the derived lexicographic order.
    pub fn canonical(&self) -> Self {
        let mut best = self.reduce_copy();
        let mut cur = best;
        for _ in 1..8 {
            cur = cur.times_omega();
            if cur < best {
                best = cur;
            }
        }
        best
    }

    fn reduce_copy(&self) -> Self {
        (*self).reduce()
    }

    /// Numeric matrix value including the 1/√2ᵏ scale.
    pub fn to_complex(&self) -> Vec<Complex64> {
        let scale = 2f64.powf(-(self.k as f64) / 2.0);
        let mut out = Vec::with_capacity(N * N);
        for row in &self.e {
            for v in row {
                out.push(v.to_complex() * scale);
            }
        }
        out
    }
}

/// Kronecker product of two 2×2 ring matrices (qubit 1 ⊗ qubit 2; qubit 1
/// indexes the most significant bit of the 4-dim basis).
pub(crate) fn kron2(a: &CycMat<2>, b: &CycMat<2>) -> CycMat<4> {
    let mut e = [[Cyc::ZERO; 4]; 4];
    for i1 in 0..2 {
        for i2 in 0..2 {
            for j1 in 0..2 {
                for j2 in 0..2 {
                    e[2 * i1 + i2][2 * j1 + j2] = a.e[i1][j1].mul(b.e[i2][j2]);
                }
            }
        }
    }
    CycMat { k: a.k + b.k, e }
}

/// H = [[1, 1], [1, −1]]/√2.
pub(crate) fn hadamard() -> CycMat<2> {
    CycMat {
        k: 1,
        e: [
            [Cyc::ONE, Cyc::ONE],
            [Cyc::ONE, Cyc::from_int(-1)],
        ],
    }
}

/// S = diag(1, i).
pub(crate) fn phase_s() -> CycMat<2> {
    CycMat {
        k: 0,
        e: [[Cyc::ONE, Cyc::ZERO], [Cyc::ZERO, Cyc::I]],
    }
}

/// CNOT with qubit 1 (most significant bit) as control.
pub(crate) fn cnot() -> CycMat<4> {
    let mut e = [[Cyc::ZERO; 4]; 4];
    for (r, c) in [(0, 0), (1, 1), (2, 3), (3, 2)] {
        e[r][c] = Cyc::ONE;
    }
    CycMat { k: 0, e }
}

/// SWAP of the two qubits.
pub(crate) fn swap() -> CycMat<4> {
    let mut e = [[Cyc::ZERO; 4]; 4];
    for (r, c) in [(0, 0), (1, 2), (2, 1), (3, 3)] {
        e[r][c] = Cyc::ONE;
    }
    CycMat { k: 0, e }
}

/// iSWAP: |01⟩ ↔ i|10⟩.
pub(crate) fn iswap() -> CycMat<4> {
    let mut e = [[Cyc::ZERO; 4]; 4];
    e[0][0] = Cyc::ONE;
    e[3][3] = Cyc::ONE;
    e[1][2] = Cyc::I;
    e[2][1] = Cyc::I;
    CycMat { k: 0, e }
}
