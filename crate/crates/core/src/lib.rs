//! Numerical and arithmetic toolkit for the monopole (Seiberg-Witten)
//! equations on Kähler surfaces.
//!
//! The crate is organised in four mathematical layers plus plumbing:
//!
//! - [`clifford`] — pointwise Spin^c(4) linear algebra: the isomorphism
//!   γ₊: Λ¹⊗ℂ → Hom(Σ⁺,Σ⁻), Clifford multiplication γ, the curvature action
//!   Γ: Λ² → End₀(Σ), the self-dual splitting of 2-forms, the spinor
//!   quadratic map (Ψ⊗Ψ̄)₀, and the Kähler block model of Γ on
//!   Λ⁰⁰ ⊕ Λ⁰².
//! - [`lattice`] — exact integer/rational arithmetic on H²(X,ℤ):
//!   intersection forms, characteristic and almost canonical classes,
//!   expected dimensions, the positive cone, walls and chambers, blow-up
//!   lattices and the chamber-claim certificates used in the rationality
//!   argument.
//! - [`grid`] — discrete differential geometry on flat periodic tori:
//!   U(1) connections as link phases, plaquette curvature, the Dirac
//!   operator, Weitzenböck and energy identities verified by refinement
//!   studies, and an energy-descent search for monopole solutions.
//! - [`vortex`] — the abelian vortex reduction: degree constant, spectral
//!   Poisson step, Newton/Kazdan-Warner solver with sharp solvability
//!   criterion, and reassembly of the conformal factor.
//!
//! Plumbing: [`rng`] (seeded, stream-splittable randomness), [`report`]
//! (deterministic JSON reports), [`fieldio`] (binary field blobs with JSON
//! sidecars), [`fft`] (periodic multi-axis FFT helpers).

pub mod clifford;
pub mod fft;
pub mod fieldio;
pub mod grid;
pub mod lattice;
pub mod mat;
pub mod report;
pub mod rng;
pub mod vortex;

pub use num_complex::Complex64;
