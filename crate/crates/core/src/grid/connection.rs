//! U(1) connections as link phases, plaquette curvature, gauge action.

use super::{GridError, OneFormField, ScalarField, SpinorField, TorusGrid, TwoFormField};
use crate::clifford::BASIS_PAIRS;
use crate::mat::c;

/// A U(1) connection in the ½-charge bookkeeping: the spinor-component
/// connection form β is realized by link angles θᵢ(x) ≈ h·βᵢ(x+½eᵢ), one
/// angle per site per axis. Gauge equivalence acts by the exact link
/// gradient of a phase function.
#[derive(Debug, Clone, PartialEq)]
pub struct U1Connection {
    pub grid: TorusGrid,
    /// θᵢ(x) on the link from x to x+eᵢ.
    pub theta: Vec<[f64; 4]>,
}

impl U1Connection {
    /// The flat connection β = 0.
    pub fn flat(grid: TorusGrid) -> Self {
        U1Connection {
            grid,
            theta: vec![[0.0; 4]; grid.len()],
        }
    }

    /// Midpoint realization of a site-based 1-form:
    /// θᵢ(x) = hᵢ·(βᵢ(x) + βᵢ(x+eᵢ))/2, second-order accurate.
    pub fn from_one_form(beta: &OneFormField) -> Self {
        let grid = beta.grid;
        let mut theta = vec![[0.0; 4]; grid.len()];
        for site in 0..grid.len() {
            for axis in 0..4 {
                let fwd = grid.shift(site, axis, 1);
                theta[site][axis] =
                    0.5 * grid.spacing(axis) * (beta.data[site][axis] + beta.data[fwd][axis]);
            }
        }
        U1Connection { grid, theta }
    }

    /// Pure gauge connection β = dχ: the exact link gradient
    /// θᵢ(x) = χ(x+eᵢ) − χ(x), whose plaquette curvature vanishes
    /// identically.
    pub fn pure_gauge(chi: &ScalarField) -> Self {
        let grid = chi.grid;
        let mut theta = vec![[0.0; 4]; grid.len()];
        for site in 0..grid.len() {
            for axis in 0..4 {
                let fwd = grid.shift(site, axis, 1);
                theta[site][axis] = chi.data[fwd] - chi.data[site];
            }
        }
        U1Connection { grid, theta }
    }

    /// Site-based reconstruction βᵢ(x) ≈ (θᵢ(x) + θᵢ(x−eᵢ))/(2hᵢ), for
    /// reporting.
    pub fn one_form(&self) -> OneFormField {
        let grid = self.grid;
        let mut data = vec![[0.0; 4]; grid.len()];
        for site in 0..grid.len() {
            for axis in 0..4 {
                let back = grid.shift(site, axis, -1);
                data[site][axis] =
                    (self.theta[site][axis] + self.theta[back][axis]) / (2.0 * grid.spacing(axis));
            }
        }
        OneFormField { grid, data }
    }
}

/// Curvature of the determinant line in the stored convention F_a = i·G:
/// G = 2·dβ with dβ the average of the four plaquette angles around each
/// site, divided by the plaquette area. Exactly gauge invariant; exactly
/// zero on pure-gauge connections; satisfies the discrete Bianchi identity.
pub fn curvature(conn: &U1Connection) -> TwoFormField {
    let grid = conn.grid;
    let mut out = TwoFormField::zeros(grid);
    for site in 0..grid.len() {
        for (k, (i, j)) in BASIS_PAIRS.iter().enumerate() {
            let area = grid.spacing(*i) * grid.spacing(*j);
            // plaquette angles at the four corners touching this site
            let mut acc = 0.0;
            for (si, sj) in [(0, 0), (-1, 0), (0, -1), (-1, -1)] {
                let base = {
                    let s1 = grid.shift(site, *i, si);
                    grid.shift(s1, *j, sj)
                };
                acc += plaquette_angle(conn, base, *i, *j);
            }
            out.data[site][k] = 2.0 * acc / (4.0 * area);
        }
    }
    out
}

/// Oriented plaquette angle at the plaquette with corner x spanned by axes
/// i, j: θᵢ(x) + θⱼ(x+eᵢ) − θᵢ(x+eⱼ) − θⱼ(x).
fn plaquette_angle(conn: &U1Connection, site: usize, i: usize, j: usize) -> f64 {
    let grid = conn.grid;
    let xpi = grid.shift(site, i, 1);
    let xpj = grid.shift(site, j, 1);
    conn.theta[site][i] + conn.theta[xpi][j] - conn.theta[xpj][i] - conn.theta[site][j]
}

/// Discrete exterior derivative of the curvature: the Bianchi residual
/// (dG)ᵢⱼₖ per site, which vanishes identically for plaquette curvature.
/// Exposed for tests.
pub fn bianchi_residual(conn: &U1Connection) -> f64 {
    let grid = conn.grid;
    let g = curvature(conn);
    let comp = |site: usize, i: usize, j: usize| -> f64 {
        let idx = BASIS_PAIRS.iter().position(|p| *p == (i.min(j), i.max(j)));
        let v = g.data[site][idx.unwrap()];
        if i < j {
            v
        } else {
            -v
        }
    };
    let dpartial = |site: usize, axis: usize, i: usize, j: usize| -> f64 {
        let fwd = grid.shift(site, axis, 1);
        let back = grid.shift(site, axis, -1);
        (comp(fwd, i, j) - comp(back, i, j)) / (2.0 * grid.spacing(axis))
    };
    let mut max_res: f64 = 0.0;
    let triples = [(0, 1, 2), (0, 1, 3), (0, 2, 3), (1, 2, 3)];
    for site in 0..grid.len() {
        for (i, j, k) in triples {
            let r = dpartial(site, i, j, k) - dpartial(site, j, i, k) + dpartial(site, k, i, j);
            max_res = max_res.max(r.abs());
        }
    }
    max_res
}

/// A gauge transformation f = e^{iχ}, carried by its phase exponent so the
/// connection shift is the exact link gradient of χ.
#[derive(Debug, Clone)]
pub struct GaugePhase {
    pub chi: ScalarField,
}

impl GaugePhase {
    pub fn from_angle(chi: ScalarField) -> Self {
        GaugePhase { chi }
    }

    /// Extract χ = arg f from a unit complex field. Fails with
    /// `NonUnitPhase` when |f| deviates from 1.
    pub fn from_complex(grid: TorusGrid, f: &[crate::mat::C]) -> Result<Self, GridError> {
        assert_eq!(f.len(), grid.len());
        let max_dev = f
            .iter()
            .map(|z| (z.norm() - 1.0).abs())
            .fold(0.0f64, f64::max);
        if max_dev > 1e-12 {
            return Err(GridError::NonUnitPhase { max_dev });
        }
        let chi = ScalarField {
            grid,
            data: f.iter().map(|z| z.arg()).collect(),
        };
        Ok(GaugePhase { chi })
    }
}

/// The gauge action (a,Ψ)·f = (a + 2f⁻¹df, f⁻¹Ψ) in the ½-charge
/// convention: β ↦ β + dχ (links shift by the exact link gradient) and
/// Ψ ↦ e^{−iχ}Ψ.
pub fn gauge_transform(
    conn: &U1Connection,
    psi: &SpinorField,
    phase: &GaugePhase,
) -> Result<(U1Connection, SpinorField), GridError> {
    if conn.grid != psi.grid || conn.grid != phase.chi.grid {
        return Err(GridError::GridMismatch);
    }
    let grid = conn.grid;
    let mut theta = conn.theta.clone();
    for site in 0..grid.len() {
        for axis in 0..4 {
            let fwd = grid.shift(site, axis, 1);
            theta[site][axis] += phase.chi.data[fwd] - phase.chi.data[site];
        }
    }
    let data = psi
        .data
        .iter()
        .zip(&phase.chi.data)
        .map(|(v, &x)| {
            let p = c(x.cos(), -x.sin());
            [p * v[0], p * v[1]]
        })
        .collect();
    Ok((
        U1Connection { grid, theta },
        SpinorField {
            grid,
            chirality: psi.chirality,
            data,
        },
    ))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::grid::sampling::ModeField;
    use crate::grid::Chirality;
    use crate::rng::SplitRng;

    #[test]
    fn flat_and_constant_have_zero_curvature() {
        let grid = TorusGrid::t2(8).unwrap();
        assert_eq!(curvature(&U1Connection::flat(grid)).norm_l2(), 0.0);

        let beta = OneFormField::from_fn(grid, |_| [0.3, -0.7, 0.1, 0.0]);
        let conn = U1Connection::from_one_form(&beta);
        assert!(curvature(&conn).norm_l2() < 1e-14);
    }

    #[test]
    fn pure_gauge_curvature_vanishes() {
        let grid = TorusGrid::t2(16).unwrap();
        let mut rng = SplitRng::new(2, 0);
        let chi_modes = ModeField::sample(&mut rng, 2, 3, 5, 1.0);
        let chi = chi_modes.eval(grid);
        let conn = U1Connection::pure_gauge(&chi);
        // d² = 0 for the link/plaquette complex, up to float cancellation
        assert!(curvature(&conn).norm_l2() < 1e-12);
    }

    #[test]
    fn curvature_matches_analytic_derivative() {
        // single Fourier mode β₁ = sin(x⁰): dβ has (dβ)₀₁ = cos(x⁰)
        let mut errs = Vec::new();
        for n in [8usize, 16, 32] {
            let grid = TorusGrid::t2(n).unwrap();
            let beta = OneFormField::from_fn(grid, |p| [0.0, p[0].sin(), 0.0, 0.0]);
            let conn = U1Connection::from_one_form(&beta);
            let g = curvature(&conn);
            let mut max_err: f64 = 0.0;
            for site in 0..grid.len() {
                let p = grid.position(site);
                // stored field = 2·dβ
                max_err = max_err.max((g.data[site][0] - 2.0 * p[0].cos()).abs());
            }
            errs.push(max_err);
        }
        let order01 = (errs[0] / errs[1]).log2();
        let order12 = (errs[1] / errs[2]).log2();
        assert!(order01 > 1.9 && order12 > 1.9, "orders {order01} {order12}");
    }

    #[test]
    fn curvature_is_gauge_invariant_and_bianchi_holds() {
        let grid = TorusGrid::t2(12).unwrap();
        let mut rng = SplitRng::new(3, 1);
        let beta = crate::grid::sampling::random_one_form(&mut rng, grid, 2, 0.8);
        let conn = U1Connection::from_one_form(&beta);
        let chi = ModeField::sample(&mut rng, 2, 2, 4, 0.9).eval(grid);
        let psi = SpinorField::zeros(grid, Chirality::Plus);
        let (conn2, _) = gauge_transform(&conn, &psi, &GaugePhase::from_angle(chi)).unwrap();
        let g1 = curvature(&conn);
        let g2 = curvature(&conn2);
        let mut max_dev: f64 = 0.0;
        for s in 0..grid.len() {
            for k in 0..6 {
                max_dev = max_dev.max((g1.data[s][k] - g2.data[s][k]).abs());
            }
        }
        assert!(max_dev < 1e-12, "gauge deviation {max_dev}");
        assert!(bianchi_residual(&conn) < 1e-11);
    }

    #[test]
    fn gauge_round_trip_is_exact() {
        let grid = TorusGrid::t2(8).unwrap();
        let mut rng = SplitRng::new(5, 2);
        let beta = crate::grid::sampling::random_one_form(&mut rng, grid, 2, 1.0);
        let conn = U1Connection::from_one_form(&beta);
        let psi = crate::grid::sampling::random_spinor(&mut rng, grid, Chirality::Plus, 2, 1.0);
        let chi = ModeField::sample(&mut rng, 2, 2, 4, 1.1).eval(grid);

        // f ≡ 1 is the identity
        let ident = GaugePhase::from_angle(ScalarField::zeros(grid));
        let (c1, p1) = gauge_transform(&conn, &psi, &ident).unwrap();
        assert_eq!(c1, conn);
        assert_eq!(p1, psi);

        let (c2, p2) =
            gauge_transform(&conn, &psi, &GaugePhase::from_angle(chi.clone())).unwrap();
        let (c3, p3) =
            gauge_transform(&c2, &p2, &GaugePhase::from_angle(chi.scale(-1.0))).unwrap();
        let theta_dev = c3
            .theta
            .iter()
            .zip(&conn.theta)
            .map(|(a, b)| (0..4).map(|i| (a[i] - b[i]).abs()).fold(0.0f64, f64::max))
            .fold(0.0f64, f64::max);
        assert!(theta_dev <= 1e-15);
        let psi_dev = p3.sub(&psi).norm_sup();
        assert!(psi_dev <= 1e-15);
    }

    #[test]
    fn non_unit_phase_rejected() {
        let grid = TorusGrid::t2(4).unwrap();
        let mut f = vec![crate::mat::ONE; grid.len()];
        f[3] = crate::mat::c(1.5, 0.0);
        assert!(matches!(
            GaugePhase::from_complex(grid, &f),
            Err(GridError::NonUnitPhase { .. })
        ));
        let ok = vec![crate::mat::c(0.6, 0.8); grid.len()];
        assert!(GaugePhase::from_complex(grid, &ok).is_ok());
    }
}
