//! Small complex matrices: the 2×2 building block of the spinor algebra.
//!
//! Everything downstream (γ₊, Γ-blocks, quadratic moments, the Kähler
//! model) is assembled from `M2`. Norms are Hilbert-Schmidt (Frobenius)
//! unless stated otherwise.

use num_complex::Complex64;

pub type C = Complex64;

pub const fn c(re: f64, im: f64) -> C {
    Complex64::new(re, im)
}

pub const ZERO: C = c(0.0, 0.0);
pub const ONE: C = c(1.0, 0.0);
pub const I: C = c(0.0, 1.0);

/// A 2×2 complex matrix in row-major layout.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct M2(pub [[C; 2]; 2]);

impl M2 {
    pub const ZERO: M2 = M2([[ZERO, ZERO], [ZERO, ZERO]]);
    pub const ID: M2 = M2([[ONE, ZERO], [ZERO, ONE]]);

    /// σ₁ = [[0,1],[1,0]]
    pub const SIGMA1: M2 = M2([[ZERO, ONE], [ONE, ZERO]]);
    /// σ₂ = [[0,−i],[i,0]]
    pub const SIGMA2: M2 = M2([[ZERO, c(0.0, -1.0)], [I, ZERO]]);
    /// σ₃ = [[1,0],[0,−1]]
    pub const SIGMA3: M2 = M2([[ONE, ZERO], [ZERO, c(-1.0, 0.0)]]);

    pub const SIGMA: [M2; 3] = [M2::SIGMA1, M2::SIGMA2, M2::SIGMA3];

    pub fn add(&self, o: &M2) -> M2 {
        let mut r = M2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[i][j] + o.0[i][j];
            }
        }
        r
    }

    pub fn sub(&self, o: &M2) -> M2 {
        let mut r = M2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[i][j] - o.0[i][j];
            }
        }
        r
    }

    pub fn neg(&self) -> M2 {
        self.scale(c(-1.0, 0.0))
    }

    pub fn scale(&self, s: C) -> M2 {
        let mut r = M2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = s * self.0[i][j];
            }
        }
        r
    }

    pub fn mul(&self, o: &M2) -> M2 {
        let mut r = M2::ZERO;
        for i in 0..2 {
            for j in 0..2 {
                r.0[i][j] = self.0[i][0] * o.0[0][j] + self.0[i][1] * o.0[1][j];
            }
        }
        r
    }

    /// Conjugate transpose.
    pub fn adjoint(&self) -> M2 {
        M2([
            [self.0[0][0].conj(), self.0[1][0].conj()],
            [self.0[0][1].conj(), self.0[1][1].conj()],
        ])
    }

    pub fn trace(&self) -> C {
        self.0[0][0] + self.0[1][1]
    }

    /// Hilbert-Schmidt inner product ⟨A,B⟩ = tr(A†B).
    pub fn hs_inner(&self, o: &M2) -> C {
        let mut s = ZERO;
        for i in 0..2 {
            for j in 0..2 {
                s += self.0[i][j].conj() * o.0[i][j];
            }
        }
        s
    }

    /// Squared Hilbert-Schmidt norm.
    pub fn norm_sq(&self) -> f64 {
        let mut s = 0.0;
        for i in 0..2 {
            for j in 0..2 {
                s += self.0[i][j].norm_sqr();
            }
        }
        s
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_hermitian(&self, tol: f64) -> bool {
        self.sub(&self.adjoint()).norm() <= tol
    }

    pub fn is_skew_hermitian(&self, tol: f64) -> bool {
        self.add(&self.adjoint()).norm() <= tol
    }

    /// Apply to a column vector.
    pub fn apply(&self, v: [C; 2]) -> [C; 2] {
        [
            self.0[0][0] * v[0] + self.0[0][1] * v[1],
            self.0[1][0] * v[0] + self.0[1][1] * v[1],
        ]
    }

    /// Commutator [A,B] = AB − BA.
    pub fn commutator(&self, o: &M2) -> M2 {
        self.mul(o).sub(&o.mul(self))
    }

    /// Coefficients (c₁,c₂,c₃) of the σ-expansion of a traceless Hermitian
    /// matrix A = Σ cₐ σₐ; cₐ = ½ tr(σₐ A), real up to rounding.
    pub fn pauli_coefficients(&self) -> [f64; 3] {
        let mut out = [0.0; 3];
        for (a, s) in M2::SIGMA.iter().enumerate() {
            out[a] = 0.5 * s.mul(self).trace().re;
        }
        out
    }
}

/// Norm squared of a ℂ²-vector.
pub fn vec2_norm_sq(v: [C; 2]) -> f64 {
    v[0].norm_sqr() + v[1].norm_sqr()
}

/// Hermitian inner product ⟨u,v⟩ = ū₀v₀ + ū₁v₁.
pub fn vec2_inner(u: [C; 2], v: [C; 2]) -> C {
    u[0].conj() * v[0] + u[1].conj() * v[1]
}

/// Outer product v ⊗ w̄ as a matrix: (v w†)ᵢⱼ = vᵢ w̄ⱼ.
pub fn outer(v: [C; 2], w: [C; 2]) -> M2 {
    M2([
        [v[0] * w[0].conj(), v[0] * w[1].conj()],
        [v[1] * w[0].conj(), v[1] * w[1].conj()],
    ])
}
