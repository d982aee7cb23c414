//! Discrete differential geometry on flat periodic tori.
//!
//! The lattice is a flat T² or T⁴ with N sites per active axis and uniform
//! spacing h = L/N. All four Clifford directions are always present; on a
//! 2-torus the fields simply do not vary along the two inactive axes
//! (extent 1), which realizes T² as a dimensional reduction of T⁴ and keeps
//! every fiberwise identity intact.
//!
//! A U(1) connection is stored through its link phases
//! θᵢ(x) ≈ h·βᵢ(x+½eᵢ); the covariant difference
//!
//!   (∇ᵢΨ)(x) = [e^{iθᵢ(x)} Ψ(x+eᵢ) − e^{−iθᵢ(x−eᵢ)} Ψ(x−eᵢ)] / 2h
//!
//! is exactly skew-adjoint for the site inner product (so integration by
//! parts is exact) and exactly gauge covariant under
//! θᵢ(x) ↦ θᵢ(x) + χ(x+eᵢ) − χ(x), Ψ ↦ e^{−iχ}Ψ. Curvature is the
//! site-averaged plaquette angle, exactly gauge invariant with d∘d = 0.
//!
//! Charge convention: spinor components couple to β with charge 1; the
//! determinant line then carries a = 2iβ, so the stored real curvature
//! field G represents F_a = i·G with G = 2·dβ.

pub mod connection;
pub mod dirac;
pub mod minimize;
pub mod sampling;

pub use connection::{curvature, gauge_transform, GaugePhase, U1Connection};
pub use dirac::{
    covariant_derivative, covariant_divergence, dirac, energy_identity_gap, sw_residual,
    weitzenboeck_residual, EnergyIdentity, SwResidual,
};
pub use minimize::{minimize_sw_energy, MinimizeOptions, MinimizeResult};

use crate::mat::{C, M2};
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum GridError {
    #[error("grid needs at least 4 sites per axis, got {n}")]
    TooCoarse { n: usize },
    #[error("dimension must be 2 or 4, got {dim}")]
    BadDimension { dim: usize },
    #[error("fields live on different grids")]
    GridMismatch,
    #[error("expected a {expected:?} spinor field")]
    ChiralityMismatch { expected: Chirality },
    #[error("spinor field has zero norm")]
    ZeroSpinor,
    #[error("phase field is not unit: max deviation {max_dev}")]
    NonUnitPhase { max_dev: f64 },
    #[error("perturbation is not self-dual: anti-self-dual norm {asd_norm}")]
    NotSelfDualPerturbation { asd_norm: f64 },
    #[error("energy descent diverged at step {step}")]
    Diverged { step: usize },
}

/// Flat periodic torus lattice. Axes 2 and 3 have extent 1 in the 2-torus
/// case; index arithmetic wraps exactly.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TorusGrid {
    extents: [usize; 4],
    strides: [usize; 4],
    spacing: [f64; 4],
    periods: [f64; 4],
    dim: usize,
    len: usize,
}

impl TorusGrid {
    pub fn new(dim: usize, n: usize, period: f64) -> Result<Self, GridError> {
        if dim != 2 && dim != 4 {
            return Err(GridError::BadDimension { dim });
        }
        if n < 4 {
            return Err(GridError::TooCoarse { n });
        }
        let mut extents = [1usize; 4];
        let mut spacing = [period; 4];
        let mut periods = [period; 4];
        for a in 0..dim {
            extents[a] = n;
            spacing[a] = period / n as f64;
            periods[a] = period;
        }
        let mut strides = [0usize; 4];
        let mut acc = 1usize;
        for a in 0..4 {
            strides[a] = acc;
            acc *= extents[a];
        }
        Ok(TorusGrid {
            extents,
            strides,
            spacing,
            periods,
            dim,
            len: acc,
        })
    }

    /// T⁴ with period 2π.
    pub fn t4(n: usize) -> Result<Self, GridError> {
        TorusGrid::new(4, n, std::f64::consts::TAU)
    }

    /// T² with period 2π.
    pub fn t2(n: usize) -> Result<Self, GridError> {
        TorusGrid::new(2, n, std::f64::consts::TAU)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sites_per_axis(&self) -> usize {
        self.extents[0]
    }

    pub fn extents(&self) -> [usize; 4] {
        self.extents
    }

    pub fn len(&self) -> usize {
        self.len
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self, axis: usize) -> f64 {
        self.spacing[axis]
    }

    pub fn period(&self, axis: usize) -> f64 {
        self.periods[axis]
    }

    /// Quadrature weight h^dim of one site.
    pub fn weight(&self) -> f64 {
        (0..self.dim).map(|a| self.spacing[a]).product()
    }

    pub fn volume(&self) -> f64 {
        (0..self.dim).map(|a| self.periods[a]).product()
    }

    pub fn coords(&self, site: usize) -> [usize; 4] {
        let mut c = [0usize; 4];
        for a in 0..4 {
            c[a] = site / self.strides[a] % self.extents[a];
        }
        c
    }

    pub fn site(&self, coords: [usize; 4]) -> usize {
        let mut s = 0;
        for a in 0..4 {
            debug_assert!(coords[a] < self.extents[a]);
            s += coords[a] * self.strides[a];
        }
        s
    }

    /// Physical position of a site (active axes).
    pub fn position(&self, site: usize) -> [f64; 4] {
        let c = self.coords(site);
        let mut p = [0.0; 4];
        for a in 0..4 {
            p[a] = c[a] as f64 * self.spacing[a];
        }
        p
    }

    /// Periodic neighbor one step along `axis`; `dir` is ±1.
    pub fn shift(&self, site: usize, axis: usize, dir: i64) -> usize {
        let ext = self.extents[axis];
        if ext == 1 {
            return site;
        }
        let x = site / self.strides[axis] % ext;
        let nx = (x as i64 + dir).rem_euclid(ext as i64) as usize;
        site - x * self.strides[axis] + nx * self.strides[axis]
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Chirality {
    Plus,
    Minus,
}

impl Chirality {
    pub fn other(self) -> Chirality {
        match self {
            Chirality::Plus => Chirality::Minus,
            Chirality::Minus => Chirality::Plus,
        }
    }
}

/// Real scalar field.
#[derive(Debug, Clone, PartialEq)]
pub struct ScalarField {
    pub grid: TorusGrid,
    pub data: Vec<f64>,
}

impl ScalarField {
    pub fn zeros(grid: TorusGrid) -> Self {
        ScalarField {
            grid,
            data: vec![0.0; grid.len()],
        }
    }

    pub fn constant(grid: TorusGrid, value: f64) -> Self {
        ScalarField {
            grid,
            data: vec![value; grid.len()],
        }
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn([f64; 4]) -> f64) -> Self {
        let data = (0..grid.len()).map(|s| f(grid.position(s))).collect();
        ScalarField { grid, data }
    }

    pub fn mean(&self) -> f64 {
        self.data.iter().sum::<f64>() / self.data.len() as f64
    }

    /// ∫ f over the torus by the site quadrature.
    pub fn integral(&self) -> f64 {
        self.data.iter().sum::<f64>() * self.grid.weight()
    }

    pub fn norm_l2(&self) -> f64 {
        (self.data.iter().map(|x| x * x).sum::<f64>() * self.grid.weight()).sqrt()
    }

    pub fn norm_sup(&self) -> f64 {
        self.data.iter().fold(0.0f64, |m, x| m.max(x.abs()))
    }

    pub fn map(&self, f: impl Fn(f64) -> f64) -> ScalarField {
        ScalarField {
            grid: self.grid,
            data: self.data.iter().map(|&x| f(x)).collect(),
        }
    }

    pub fn zip(&self, o: &ScalarField, f: impl Fn(f64, f64) -> f64) -> ScalarField {
        assert_eq!(self.grid, o.grid);
        ScalarField {
            grid: self.grid,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(&a, &b)| f(a, b))
                .collect(),
        }
    }

    pub fn add(&self, o: &ScalarField) -> ScalarField {
        self.zip(o, |a, b| a + b)
    }

    pub fn sub(&self, o: &ScalarField) -> ScalarField {
        self.zip(o, |a, b| a - b)
    }

    pub fn scale(&self, s: f64) -> ScalarField {
        self.map(|x| s * x)
    }

    pub fn shift_by(&self, s: f64) -> ScalarField {
        self.map(|x| x + s)
    }
}

/// Real 1-form field (site-based), used to build connections.
#[derive(Debug, Clone, PartialEq)]
pub struct OneFormField {
    pub grid: TorusGrid,
    pub data: Vec<[f64; 4]>,
}

impl OneFormField {
    pub fn zeros(grid: TorusGrid) -> Self {
        OneFormField {
            grid,
            data: vec![[0.0; 4]; grid.len()],
        }
    }

    pub fn from_fn(grid: TorusGrid, f: impl Fn([f64; 4]) -> [f64; 4]) -> Self {
        let data = (0..grid.len()).map(|s| f(grid.position(s))).collect();
        OneFormField { grid, data }
    }
}

/// Half-spinor field of a fixed chirality.
#[derive(Debug, Clone, PartialEq)]
pub struct SpinorField {
    pub grid: TorusGrid,
    pub chirality: Chirality,
    pub data: Vec<[C; 2]>,
}

impl SpinorField {
    pub fn zeros(grid: TorusGrid, chirality: Chirality) -> Self {
        SpinorField {
            grid,
            chirality,
            data: vec![[crate::mat::ZERO; 2]; grid.len()],
        }
    }

    pub fn constant(grid: TorusGrid, chirality: Chirality, value: [C; 2]) -> Self {
        SpinorField {
            grid,
            chirality,
            data: vec![value; grid.len()],
        }
    }

    /// L² norm with the site quadrature.
    pub fn norm_l2(&self) -> f64 {
        (self.norm_sq()).sqrt()
    }

    pub fn norm_sq(&self) -> f64 {
        self.data
            .iter()
            .map(|v| crate::mat::vec2_norm_sq(*v))
            .sum::<f64>()
            * self.grid.weight()
    }

    pub fn norm_sup(&self) -> f64 {
        self.data
            .iter()
            .map(|v| crate::mat::vec2_norm_sq(*v).sqrt())
            .fold(0.0f64, f64::max)
    }

    /// Hermitian L² inner product.
    pub fn inner(&self, o: &SpinorField) -> C {
        assert_eq!(self.grid, o.grid);
        let mut acc = crate::mat::ZERO;
        for (a, b) in self.data.iter().zip(&o.data) {
            acc += crate::mat::vec2_inner(*a, *b);
        }
        acc * self.grid.weight()
    }

    pub fn add(&self, o: &SpinorField) -> SpinorField {
        assert_eq!(self.grid, o.grid);
        assert_eq!(self.chirality, o.chirality);
        SpinorField {
            grid: self.grid,
            chirality: self.chirality,
            data: self
                .data
                .iter()
                .zip(&o.data)
                .map(|(a, b)| [a[0] + b[0], a[1] + b[1]])
                .collect(),
        }
    }

    pub fn sub(&self, o: &SpinorField) -> SpinorField {
        self.add(&o.scale(crate::mat::c(-1.0, 0.0)))
    }

    pub fn scale(&self, s: C) -> SpinorField {
        SpinorField {
            grid: self.grid,
            chirality: self.chirality,
            data: self.data.iter().map(|a| [s * a[0], s * a[1]]).collect(),
        }
    }

    /// |Ψ|² as a scalar field.
    pub fn density(&self) -> ScalarField {
        ScalarField {
            grid: self.grid,
            data: self
                .data
                .iter()
                .map(|v| crate::mat::vec2_norm_sq(*v))
                .collect(),
        }
    }
}

/// 1-form with half-spinor values (the image of ∇_A).
#[derive(Debug, Clone)]
pub struct OneFormSpinor {
    pub grid: TorusGrid,
    pub chirality: Chirality,
    pub data: Vec<[[C; 2]; 4]>,
}

impl OneFormSpinor {
    pub fn zeros(grid: TorusGrid, chirality: Chirality) -> Self {
        OneFormSpinor {
            grid,
            chirality,
            data: vec![[[crate::mat::ZERO; 2]; 4]; grid.len()],
        }
    }

    pub fn norm_sq(&self) -> f64 {
        self.data
            .iter()
            .map(|comps| {
                comps
                    .iter()
                    .map(|v| crate::mat::vec2_norm_sq(*v))
                    .sum::<f64>()
            })
            .sum::<f64>()
            * self.grid.weight()
    }

    /// L² inner product summed over form components.
    pub fn inner(&self, o: &OneFormSpinor) -> C {
        assert_eq!(self.grid, o.grid);
        let mut acc = crate::mat::ZERO;
        for (a, b) in self.data.iter().zip(&o.data) {
            for i in 0..4 {
                acc += crate::mat::vec2_inner(a[i], b[i]);
            }
        }
        acc * self.grid.weight()
    }
}

/// Real-component 2-form field; the physical curvature is F_a = i·G with G
/// stored here. Component order matches [`crate::clifford::BASIS_PAIRS`].
#[derive(Debug, Clone, PartialEq)]
pub struct TwoFormField {
    pub grid: TorusGrid,
    pub data: Vec<[f64; 6]>,
}

impl TwoFormField {
    pub fn zeros(grid: TorusGrid) -> Self {
        TwoFormField {
            grid,
            data: vec![[0.0; 6]; grid.len()],
        }
    }

    /// Self-dual coefficients (g₁,g₂,g₃) at a site in the ωₐ basis.
    pub fn selfdual_at(&self, site: usize) -> [f64; 3] {
        let f = &self.data[site];
        [
            0.5 * (f[0] + f[5]),
            0.5 * (f[1] - f[4]),
            0.5 * (f[2] + f[3]),
        ]
    }

    pub fn antiselfdual_at(&self, site: usize) -> [f64; 3] {
        let f = &self.data[site];
        [
            0.5 * (f[0] - f[5]),
            0.5 * (f[1] + f[4]),
            0.5 * (f[2] - f[3]),
        ]
    }

    /// L² norm of the whole field (orthonormal-basis components).
    pub fn norm_l2(&self) -> f64 {
        (self
            .data
            .iter()
            .map(|f| f.iter().map(|x| x * x).sum::<f64>())
            .sum::<f64>()
            * self.grid.weight())
        .sqrt()
    }

    /// L² norm of the self-dual part, ‖G⁺‖ = √(∫ 2Σₐ gₐ²).
    pub fn selfdual_norm_l2(&self) -> f64 {
        let mut acc = 0.0;
        for site in 0..self.grid.len() {
            let g = self.selfdual_at(site);
            acc += 2.0 * (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        }
        (acc * self.grid.weight()).sqrt()
    }

    pub fn antiselfdual_norm_l2(&self) -> f64 {
        let mut acc = 0.0;
        for site in 0..self.grid.len() {
            let g = self.antiselfdual_at(site);
            acc += 2.0 * (g[0] * g[0] + g[1] * g[1] + g[2] * g[2]);
        }
        (acc * self.grid.weight()).sqrt()
    }
}

/// A self-dual perturbation 2-form (stored like curvature: the physical
/// perturbation is i·μ).
#[derive(Debug, Clone)]
pub struct Perturbation(pub TwoFormField);

impl Perturbation {
    pub fn new(field: TwoFormField) -> Result<Self, GridError> {
        let asd_norm = field.antiselfdual_norm_l2();
        if asd_norm > 1e-12 * field.norm_l2().max(1.0) {
            return Err(GridError::NotSelfDualPerturbation { asd_norm });
        }
        Ok(Perturbation(field))
    }

    /// Build from self-dual coefficients gₐ(x).
    pub fn from_selfdual_coefficients(grid: TorusGrid, g: impl Fn(usize) -> [f64; 3]) -> Self {
        let mut field = TwoFormField::zeros(grid);
        for site in 0..grid.len() {
            let [g1, g2, g3] = g(site);
            field.data[site] = [g1, g2, g3, g3, -g2, g1];
        }
        Perturbation(field)
    }
}

/// Field of 2×2 endomorphisms of Σ⁺ (monopole-map residuals).
#[derive(Debug, Clone)]
pub struct EndoField {
    pub grid: TorusGrid,
    pub data: Vec<M2>,
}

impl EndoField {
    pub fn norm_l2(&self) -> f64 {
        (self.data.iter().map(|m| m.norm_sq()).sum::<f64>() * self.grid.weight()).sqrt()
    }
}
