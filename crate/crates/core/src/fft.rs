//! Multi-axis complex FFT on torus grids, built on rustfft.
//!
//! Data layout matches [`crate::grid::TorusGrid`]: axis 0 has stride 1.
//! `inverse` applies the 1/N normalization so that inverse∘forward is the
//! identity up to rounding.

use crate::grid::TorusGrid;
use num_complex::Complex64;
use rustfft::{Fft, FftPlanner};
use std::collections::HashMap;
use std::sync::Arc;

pub struct MultiFft {
    grid: TorusGrid,
    forward: HashMap<usize, Arc<dyn Fft<f64>>>,
    inverse: HashMap<usize, Arc<dyn Fft<f64>>>,
}

impl MultiFft {
    pub fn new(grid: TorusGrid) -> Self {
        let mut planner = FftPlanner::new();
        let mut forward = HashMap::new();
        let mut inverse = HashMap::new();
        for axis in 0..4 {
            let n = grid.extents()[axis];
            if n > 1 {
                forward
                    .entry(n)
                    .or_insert_with(|| planner.plan_fft_forward(n));
                inverse
                    .entry(n)
                    .or_insert_with(|| planner.plan_fft_inverse(n));
            }
        }
        MultiFft {
            grid,
            forward,
            inverse,
        }
    }

    pub fn grid(&self) -> TorusGrid {
        self.grid
    }

    fn transform_axis(&self, data: &mut [Complex64], axis: usize, fwd: bool) {
        let ext = self.grid.extents();
        let n = ext[axis];
        if n == 1 {
            return;
        }
        let plan = if fwd {
            &self.forward[&n]
        } else {
            &self.inverse[&n]
        };
        let stride: usize = ext[..axis].iter().product();
        let mut line = vec![Complex64::new(0.0, 0.0); n];
        let total = self.grid.len();
        let block = stride * n;
        for base_block in (0..total).step_by(block) {
            for offset in 0..stride {
                let base = base_block + offset;
                for (j, l) in line.iter_mut().enumerate() {
                    *l = data[base + j * stride];
                }
                plan.process(&mut line);
                for (j, l) in line.iter().enumerate() {
                    data[base + j * stride] = *l;
                }
            }
        }
    }

    pub fn forward(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.grid.len());
        for axis in 0..4 {
            self.transform_axis(data, axis, true);
        }
    }

    pub fn inverse(&self, data: &mut [Complex64]) {
        assert_eq!(data.len(), self.grid.len());
        for axis in 0..4 {
            self.transform_axis(data, axis, false);
        }
        let scale = 1.0 / self.grid.len() as f64;
        for z in data.iter_mut() {
            *z *= scale;
        }
    }

    /// Integer wave numbers (k₀,…,k₃) of a flattened spectral index, folded
    /// to the symmetric range (−N/2, N/2].
    pub fn wave_numbers(&self, index: usize) -> [i64; 4] {
        let coords = self.grid.coords(index);
        let ext = self.grid.extents();
        let mut k = [0i64; 4];
        for a in 0..4 {
            let n = ext[a] as i64;
            let mut v = coords[a] as i64;
            if v > n / 2 {
                v -= n;
            }
            k[a] = v;
        }
        k
    }

    /// Symbol of the compact (3-point per axis) Laplacian Δ = Σ∂²:
    /// λ(k) = −Σᵢ (2 − 2cos(2πkᵢ/Nᵢ)) / hᵢ² ≤ 0.
    pub fn laplacian_symbol(&self, index: usize) -> f64 {
        let coords = self.grid.coords(index);
        let ext = self.grid.extents();
        let mut acc = 0.0;
        for a in 0..4 {
            let n = ext[a];
            if n == 1 {
                continue;
            }
            let h = self.grid.spacing(a);
            let angle = std::f64::consts::TAU * coords[a] as f64 / n as f64;
            acc -= (2.0 - 2.0 * angle.cos()) / (h * h);
        }
        acc
    }
}
