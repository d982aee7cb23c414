//! Band-limited random fields for convergence studies.
//!
//! A `ModeField` is a finite list of Fourier modes with fixed amplitudes;
//! evaluating the same descriptor on grids of different resolution samples
//! one continuum field, which keeps refinement studies in the clean O(h²)
//! regime as long as the band stays below the Nyquist limit.

use super::{Chirality, OneFormField, ScalarField, SpinorField, TorusGrid};
use crate::mat::C;
use crate::rng::SplitRng;

/// A real scalar field expressed by Fourier modes:
/// f(x) = Σ Re(c_m · e^{i⟨m, 2πx/L⟩}).
#[derive(Debug, Clone)]
pub struct ModeField {
    pub modes: Vec<([i64; 4], C)>,
}

impl ModeField {
    /// Draw `count` modes with integer wave numbers bounded by `band` on
    /// the first `dim` axes.
    pub fn sample(rng: &mut SplitRng, dim: usize, band: i64, count: usize, amp: f64) -> Self {
        let mut modes = Vec::with_capacity(count);
        for _ in 0..count {
            let mut k = [0i64; 4];
            for comp in k.iter_mut().take(dim) {
                *comp = rng.int_range(-band, band);
            }
            modes.push((k, rng.complex(amp)));
        }
        ModeField { modes }
    }

    pub fn eval_at(&self, grid: &TorusGrid, position: [f64; 4]) -> f64 {
        let mut acc = 0.0;
        for (k, c) in &self.modes {
            let mut phase = 0.0;
            for a in 0..4 {
                if k[a] != 0 {
                    phase += k[a] as f64 * std::f64::consts::TAU * position[a] / grid.period(a);
                }
            }
            acc += c.re * phase.cos() - c.im * phase.sin();
        }
        acc
    }

    pub fn eval(&self, grid: TorusGrid) -> ScalarField {
        let data = (0..grid.len())
            .map(|s| self.eval_at(&grid, grid.position(s)))
            .collect();
        ScalarField { grid, data }
    }

    /// Largest |k_a| over the mode list.
    pub fn band(&self) -> i64 {
        self.modes
            .iter()
            .flat_map(|(k, _)| k.iter().map(|x| x.abs()))
            .max()
            .unwrap_or(0)
    }
}

/// Complex scalar field from Fourier modes (no reality constraint).
#[derive(Debug, Clone)]
pub struct ComplexModeField {
    pub modes: Vec<([i64; 4], C)>,
}

impl ComplexModeField {
    pub fn sample(rng: &mut SplitRng, dim: usize, band: i64, count: usize, amp: f64) -> Self {
        let mut modes = Vec::with_capacity(count);
        for _ in 0..count {
            let mut k = [0i64; 4];
            for comp in k.iter_mut().take(dim) {
                *comp = rng.int_range(-band, band);
            }
            modes.push((k, rng.complex(amp)));
        }
        ComplexModeField { modes }
    }

    pub fn eval_at(&self, grid: &TorusGrid, position: [f64; 4]) -> C {
        let mut acc = crate::mat::ZERO;
        for (k, c) in &self.modes {
            let mut phase = 0.0;
            for a in 0..4 {
                if k[a] != 0 {
                    phase += k[a] as f64 * std::f64::consts::TAU * position[a] / grid.period(a);
                }
            }
            acc += c * C::new(phase.cos(), phase.sin());
        }
        acc
    }
}

/// Band-limited spinor descriptor: one complex mode field per component.
#[derive(Debug, Clone)]
pub struct SpinorModes {
    pub components: [ComplexModeField; 2],
    pub chirality: Chirality,
}

impl SpinorModes {
    pub fn sample(
        rng: &mut SplitRng,
        chirality: Chirality,
        dim: usize,
        band: i64,
        count: usize,
        amp: f64,
    ) -> Self {
        SpinorModes {
            components: [
                ComplexModeField::sample(rng, dim, band, count, amp),
                ComplexModeField::sample(rng, dim, band, count, amp),
            ],
            chirality,
        }
    }

    pub fn eval(&self, grid: TorusGrid) -> SpinorField {
        let data = (0..grid.len())
            .map(|s| {
                let p = grid.position(s);
                [
                    self.components[0].eval_at(&grid, p),
                    self.components[1].eval_at(&grid, p),
                ]
            })
            .collect();
        SpinorField {
            grid,
            chirality: self.chirality,
            data,
        }
    }
}

/// Band-limited real 1-form descriptor (component fields on active axes).
#[derive(Debug, Clone)]
pub struct OneFormModes {
    pub components: [ModeField; 4],
}

impl OneFormModes {
    pub fn sample(rng: &mut SplitRng, dim: usize, band: i64, count: usize, amp: f64) -> Self {
        let make = |rng: &mut SplitRng| ModeField::sample(rng, dim, band, count, amp);
        OneFormModes {
            components: [make(rng), make(rng), make(rng), make(rng)],
        }
    }

    pub fn eval(&self, grid: TorusGrid) -> OneFormField {
        let data = (0..grid.len())
            .map(|s| {
                let p = grid.position(s);
                let mut v = [0.0; 4];
                for a in 0..4 {
                    v[a] = self.components[a].eval_at(&grid, p);
                }
                v
            })
            .collect();
        OneFormField { grid, data }
    }
}

pub fn random_scalar(rng: &mut SplitRng, grid: TorusGrid, band: i64, amp: f64) -> ScalarField {
    ModeField::sample(rng, grid.dim(), band, 2 * grid.dim(), amp).eval(grid)
}

pub fn random_one_form(rng: &mut SplitRng, grid: TorusGrid, band: i64, amp: f64) -> OneFormField {
    OneFormModes::sample(rng, grid.dim(), band, grid.dim(), amp).eval(grid)
}

pub fn random_spinor(
    rng: &mut SplitRng,
    grid: TorusGrid,
    chirality: Chirality,
    band: i64,
    amp: f64,
) -> SpinorField {
    SpinorModes::sample(rng, chirality, grid.dim(), band, 2 * grid.dim(), amp).eval(grid)
}
