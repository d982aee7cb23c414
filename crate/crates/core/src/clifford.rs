//! Pointwise Spin^c(4) linear algebra on Euclidean ℝ⁴.
//!
//! The concrete model is pinned once and for all:
//!
//! - γ₊(e⁰) = Id, γ₊(eᵏ) = i·σₖ for k = 1,2,3, so that
//!   γ₊(u)†γ₊(v) + γ₊(v)†γ₊(u) = 2 g(u,v) Id for real u, v;
//! - γ(u) = [[0, −γ₊(u)†], [γ₊(u), 0]] on Σ = Σ⁺ ⊕ Σ⁻;
//! - Γ(u∧v) = ½[γ(u), γ(v)], extended ℂ-bilinearly to Λ²⊗ℂ;
//! - volume form e⁰∧e¹∧e²∧e³; self-dual basis
//!   ω₁ = e⁰∧e¹+e²∧e³, ω₂ = e⁰∧e²+e³∧e¹, ω₃ = e⁰∧e³+e¹∧e²;
//! - basis 2-forms eⁱ∧eʲ (i<j) are orthonormal.
//!
//! Γ restricted to Λ²₊ maps onto the trace-free skew-Hermitian
//! endomorphisms of Σ⁺ (basis images Γ(ωₐ)|Σ⁺ = −2iσₐ) and annihilates Σ⁻;
//! the anti-self-dual part acts only on Σ⁻.
//!
//! For the Kähler model we identify ℝ⁴ ≅ ℂ² via z₁ = x⁰+ix¹, z₂ = x²+ix³,
//! so ω_g = ω₁, Λ²⁰ = ℂ·(ω₂+iω₃), Λ⁰² = ℂ·(ω₂−iω₃); the unit-norm frames
//! are (ω₂±iω₃)/2. The frame change Σ⁺ → Λ⁰⁰ ⊕ Λ⁰² is the pinned unitary
//! [`KAEHLER_FRAME`].

use crate::mat::{c, outer, vec2_norm_sq, C, I, M2, ONE, ZERO};
use thiserror::Error;

/// A real cotangent vector at a point of ℝ⁴.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Vector4(pub [f64; 4]);

impl Vector4 {
    pub const E0: Vector4 = Vector4([1.0, 0.0, 0.0, 0.0]);
    pub const E1: Vector4 = Vector4([0.0, 1.0, 0.0, 0.0]);
    pub const E2: Vector4 = Vector4([0.0, 0.0, 1.0, 0.0]);
    pub const E3: Vector4 = Vector4([0.0, 0.0, 0.0, 1.0]);

    pub fn dot(&self, o: &Vector4) -> f64 {
        self.0.iter().zip(o.0.iter()).map(|(a, b)| a * b).sum()
    }

    pub fn norm(&self) -> f64 {
        self.dot(self).sqrt()
    }
}

/// Index pairs of the six basis 2-forms, in component order.
pub const BASIS_PAIRS: [(usize, usize); 6] = [(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)];

/// A (possibly complexified) 2-form at a point, with components indexed by
/// ordered pairs per [`BASIS_PAIRS`]. Real forms carry zero imaginary parts;
/// curvature forms of unitary connections are purely imaginary.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TwoForm(pub [C; 6]);

impl TwoForm {
    pub const ZERO: TwoForm = TwoForm([ZERO; 6]);

    pub fn from_real(r: [f64; 6]) -> TwoForm {
        let mut f = TwoForm::ZERO;
        for k in 0..6 {
            f.0[k] = c(r[k], 0.0);
        }
        f
    }

    /// The decomposable form u∧v.
    pub fn wedge(u: &Vector4, v: &Vector4) -> TwoForm {
        let mut f = TwoForm::ZERO;
        for (k, (i, j)) in BASIS_PAIRS.iter().enumerate() {
            f.0[k] = c(u.0[*i] * v.0[*j] - u.0[*j] * v.0[*i], 0.0);
        }
        f
    }

    pub fn add(&self, o: &TwoForm) -> TwoForm {
        let mut f = TwoForm::ZERO;
        for k in 0..6 {
            f.0[k] = self.0[k] + o.0[k];
        }
        f
    }

    pub fn sub(&self, o: &TwoForm) -> TwoForm {
        let mut f = TwoForm::ZERO;
        for k in 0..6 {
            f.0[k] = self.0[k] - o.0[k];
        }
        f
    }

    pub fn scale(&self, s: C) -> TwoForm {
        let mut f = TwoForm::ZERO;
        for k in 0..6 {
            f.0[k] = s * self.0[k];
        }
        f
    }

    /// Hodge star for the Euclidean metric and orientation e⁰∧e¹∧e²∧e³.
    pub fn hodge_star(&self) -> TwoForm {
        let f = &self.0;
        TwoForm([f[5], -f[4], f[3], f[2], -f[1], f[0]])
    }

    /// Hermitian inner product in the orthonormal-basis convention.
    pub fn inner(&self, o: &TwoForm) -> C {
        let mut s = ZERO;
        for k in 0..6 {
            s += self.0[k].conj() * o.0[k];
        }
        s
    }

    pub fn norm_sq(&self) -> f64 {
        self.0.iter().map(|z| z.norm_sqr()).sum()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    /// Self-dual basis ωₐ, a = 1,2,3.
    pub fn selfdual_basis(a: usize) -> TwoForm {
        let mut f = [0.0; 6];
        match a {
            0 => {
                f[0] = 1.0;
                f[5] = 1.0;
            }
            1 => {
                f[1] = 1.0;
                f[4] = -1.0;
            }
            2 => {
                f[2] = 1.0;
                f[3] = 1.0;
            }
            _ => panic!("self-dual basis index out of range"),
        }
        TwoForm::from_real(f)
    }

    /// Anti-self-dual basis ω̄ₐ.
    pub fn antiselfdual_basis(a: usize) -> TwoForm {
        let mut f = [0.0; 6];
        match a {
            0 => {
                f[0] = 1.0;
                f[5] = -1.0;
            }
            1 => {
                f[1] = 1.0;
                f[4] = 1.0;
            }
            2 => {
                f[2] = 1.0;
                f[3] = -1.0;
            }
            _ => panic!("anti-self-dual basis index out of range"),
        }
        TwoForm::from_real(f)
    }

    /// Coefficients (g₁,g₂,g₃) of the self-dual part in the ωₐ basis.
    pub fn selfdual_coefficients(&self) -> [C; 3] {
        let f = &self.0;
        [
            0.5 * (f[0] + f[5]),
            0.5 * (f[1] - f[4]),
            0.5 * (f[2] + f[3]),
        ]
    }

    /// Coefficients of the anti-self-dual part in the ω̄ₐ basis.
    pub fn antiselfdual_coefficients(&self) -> [C; 3] {
        let f = &self.0;
        [
            0.5 * (f[0] - f[5]),
            0.5 * (f[1] + f[4]),
            0.5 * (f[2] - f[3]),
        ]
    }
}

/// A fiber element of Σ⁺ or Σ⁻.
pub type HalfSpinor = [C; 2];

/// Block placement produced by an endomorphism constructor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum BlockStructure {
    /// Γ(F): preserves chirality.
    Diagonal,
    /// γ(u): swaps chirality.
    OffDiagonal,
    General,
}

/// An endomorphism of Σ = Σ⁺ ⊕ Σ⁻ in 2+2 block form.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SpinorEndo {
    /// Σ⁺ → Σ⁺
    pub pp: M2,
    /// Σ⁻ → Σ⁺
    pub pm: M2,
    /// Σ⁺ → Σ⁻
    pub mp: M2,
    /// Σ⁻ → Σ⁻
    pub mm: M2,
    pub structure: BlockStructure,
}

impl SpinorEndo {
    pub const ZERO: SpinorEndo = SpinorEndo {
        pp: M2::ZERO,
        pm: M2::ZERO,
        mp: M2::ZERO,
        mm: M2::ZERO,
        structure: BlockStructure::General,
    };

    pub fn add(&self, o: &SpinorEndo) -> SpinorEndo {
        SpinorEndo {
            pp: self.pp.add(&o.pp),
            pm: self.pm.add(&o.pm),
            mp: self.mp.add(&o.mp),
            mm: self.mm.add(&o.mm),
            structure: if self.structure == o.structure {
                self.structure
            } else {
                BlockStructure::General
            },
        }
    }

    pub fn sub(&self, o: &SpinorEndo) -> SpinorEndo {
        self.add(&o.scale(c(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C) -> SpinorEndo {
        SpinorEndo {
            pp: self.pp.scale(s),
            pm: self.pm.scale(s),
            mp: self.mp.scale(s),
            mm: self.mm.scale(s),
            structure: self.structure,
        }
    }

    pub fn mul(&self, o: &SpinorEndo) -> SpinorEndo {
        SpinorEndo {
            pp: self.pp.mul(&o.pp).add(&self.pm.mul(&o.mp)),
            pm: self.pp.mul(&o.pm).add(&self.pm.mul(&o.mm)),
            mp: self.mp.mul(&o.pp).add(&self.mm.mul(&o.mp)),
            mm: self.mp.mul(&o.pm).add(&self.mm.mul(&o.mm)),
            structure: BlockStructure::General,
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.pp.norm_sq() + self.pm.norm_sq() + self.mp.norm_sq() + self.mm.norm_sq()
    }

    pub fn norm(&self) -> f64 {
        self.norm_sq().sqrt()
    }

    pub fn is_block_diagonal(&self, tol: f64) -> bool {
        self.pm.norm() <= tol && self.mp.norm() <= tol
    }

    pub fn is_block_off_diagonal(&self, tol: f64) -> bool {
        self.pp.norm() <= tol && self.mm.norm() <= tol
    }
}

/// A positive half-spinor in the Kähler frame Λ⁰⁰ ⊕ Λ⁰².
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaehlerSpinorPlus {
    /// Λ⁰⁰ component.
    pub f: C,
    /// Coefficient of the unit-norm (0,2)-form.
    pub a02: C,
}

#[derive(Debug, Error, PartialEq)]
pub enum CliffordError {
    #[error("2-form is not self-dual: anti-self-dual norm {asd_norm} exceeds tolerance {tol}")]
    NotSelfDual { asd_norm: f64, tol: f64 },
}

/// γ₊(u) for a real cotangent vector u, in the pinned model
/// γ₊(e⁰) = Id, γ₊(eᵏ) = iσₖ.
pub fn gamma_plus(u: &Vector4) -> M2 {
    let mut m = M2::ID.scale(c(u.0[0], 0.0));
    for k in 0..3 {
        m = m.add(&M2::SIGMA[k].scale(c(0.0, u.0[k + 1])));
    }
    m
}

/// ℂ-linear extension of γ₊ to complexified coefficients.
pub fn gamma_plus_c(u: &[C; 4]) -> M2 {
    let mut m = M2::ID.scale(u[0]);
    for k in 0..3 {
        m = m.add(&M2::SIGMA[k].scale(I * u[k + 1]));
    }
    m
}

/// Clifford multiplication γ(u) = [[0, −γ₊(u)†], [γ₊(u), 0]].
pub fn gamma(u: &Vector4) -> SpinorEndo {
    let gp = gamma_plus(u);
    SpinorEndo {
        pp: M2::ZERO,
        pm: gp.adjoint().neg(),
        mp: gp,
        mm: M2::ZERO,
        structure: BlockStructure::OffDiagonal,
    }
}

/// Γ(F) = Σ_{i<j} F_{ij} · ½[γ(eⁱ), γ(eʲ)], the ℂ-bilinear extension of
/// Γ(u∧v) = ½[γ(u),γ(v)] to Λ²⊗ℂ. Block-diagonal; Γ(Λ²₊) acts on Σ⁺ only
/// and Γ(Λ²₋) on Σ⁻ only.
#[allow(non_snake_case)]
pub fn Gamma(f: &TwoForm) -> SpinorEndo {
    let basis: [Vector4; 4] = [Vector4::E0, Vector4::E1, Vector4::E2, Vector4::E3];
    let mut out = SpinorEndo {
        structure: BlockStructure::Diagonal,
        ..SpinorEndo::ZERO
    };
    for (k, (i, j)) in BASIS_PAIRS.iter().enumerate() {
        if f.0[k] == ZERO {
            continue;
        }
        let gi = gamma(&basis[*i]);
        let gj = gamma(&basis[*j]);
        let comm = gi.mul(&gj).sub(&gj.mul(&gi)).scale(c(0.5, 0.0));
        out = out.add(&comm.scale(f.0[k]));
    }
    out.structure = BlockStructure::Diagonal;
    out
}

/// Orthogonal splitting F = F⁺ + F⁻ into (anti-)self-dual parts.
pub fn selfdual_split(f: &TwoForm) -> (TwoForm, TwoForm) {
    let star = f.hodge_star();
    let half = c(0.5, 0.0);
    let plus = f.add(&star).scale(half);
    let minus = f.sub(&star).scale(half);
    (plus, minus)
}

/// The trace-free quadratic moment (Ψ⊗Ψ̄)₀ = ΨΨ† − ½|Ψ|² Id.
pub fn quadratic_moment(psi: &HalfSpinor) -> M2 {
    let p = outer(*psi, *psi);
    let half_norm = 0.5 * vec2_norm_sq(*psi);
    p.sub(&M2::ID.scale(c(half_norm, 0.0)))
}

/// Pointwise monopole-equation residual: the Σ⁺ block of Γ(F⁺) minus
/// 2(Ψ⊗Ψ̄)₀. `f_plus` must be self-dual (complexified coefficients allowed,
/// the purely imaginary case being curvature of a unitary connection).
pub fn sw_pointwise_residual(f_plus: &TwoForm, psi: &HalfSpinor) -> Result<M2, CliffordError> {
    let tol = 1e-12 * f_plus.norm().max(1.0);
    let (_, minus) = selfdual_split(f_plus);
    let asd_norm = minus.norm();
    if asd_norm > tol {
        return Err(CliffordError::NotSelfDual { asd_norm, tol });
    }
    let gam = Gamma(f_plus);
    Ok(gam.pp.sub(&quadratic_moment(psi).scale(c(2.0, 0.0))))
}

/// The pinned unitary frame change Σ⁺ → Λ⁰⁰ ⊕ Λ⁰² for the standard flat
/// Kähler structure (z₁ = x⁰+ix¹, z₂ = x²+ix³, ω_g = ω₁): rows express the
/// Λ⁰⁰ and Λ⁰² frame vectors in the model Σ⁺ frame. Any other admissible
/// frame differs by a unit phase on the Λ⁰² factor.
pub const KAEHLER_FRAME: M2 = M2([
    [c(std::f64::consts::FRAC_1_SQRT_2, 0.0), c(std::f64::consts::FRAC_1_SQRT_2, 0.0)],
    [c(-std::f64::consts::FRAC_1_SQRT_2, 0.0), c(std::f64::consts::FRAC_1_SQRT_2, 0.0)],
]);

/// Unit-norm (2,0) form (ω₂+iω₃)/2.
pub fn unit_form_20() -> TwoForm {
    TwoForm::selfdual_basis(1)
        .add(&TwoForm::selfdual_basis(2).scale(I))
        .scale(c(0.5, 0.0))
}

/// Unit-norm (0,2) form (ω₂−iω₃)/2.
pub fn unit_form_02() -> TwoForm {
    TwoForm::selfdual_basis(1)
        .sub(&TwoForm::selfdual_basis(2).scale(I))
        .scale(c(0.5, 0.0))
}

/// The Kähler block model of Γ on Λ⁰⁰ ⊕ Λ⁰²: for a self-dual complexified
/// form λ²⁰ + λ⁰² + f·ω_g (coefficients in the unit-norm frames),
///
///   Γ = 2 [[−i f, −λ²⁰], [λ⁰², i f]] .
///
/// Agrees with [`Gamma`] conjugated by [`KAEHLER_FRAME`].
pub fn kaehler_gamma(l20: C, l02: C, f: C) -> M2 {
    let two = c(2.0, 0.0);
    M2([[-I * f, -l20], [l02, I * f]]).scale(two)
}

/// Residuals of the pointwise algebraic part of the monopole system on a
/// Kähler surface, in the unit-norm frames:
///
///   r₁ = F²⁰ + φ·ᾱ         (F_a²⁰ = −φ⊗ᾱ)
///   r₂ = F⁰² − α·φ̄         (F_a⁰² = α⊗φ̄)
///   r₃ = iΛF + |φ|² − |α|²  (iΛF_a = −(φφ̄ − *(α∧ᾱ)))
///
/// `lambda_f` is the real value of iΛF_a. The derivative equation
/// ∂̄φ = iΛ∂α has no pointwise content and lives with the grid operators.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct KaehlerSwResidual {
    pub r_f20: C,
    pub r_f02: C,
    pub r_lambda: f64,
    pub norm: f64,
}

pub fn kaehler_sw_system(f20: C, f02: C, lambda_f: f64, phi: C, alpha: C) -> KaehlerSwResidual {
    let r_f20 = f20 + phi * alpha.conj();
    let r_f02 = f02 - alpha * phi.conj();
    let r_lambda = lambda_f + phi.norm_sqr() - alpha.norm_sqr();
    let norm = (r_f20.norm_sqr() + r_f02.norm_sqr() + r_lambda * r_lambda).sqrt();
    KaehlerSwResidual {
        r_f20,
        r_f02,
        r_lambda,
        norm,
    }
}
