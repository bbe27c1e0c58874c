//! Finite-difference check of the oscillating proton's exterior field.
//!
//! The radial Poisson problem is solved for the dynamic source at a fixed
//! instant. The exterior field is then compared with the closed-form
//! `q_D/r²`: the shape (slope −2) is asserted, the overall constant is only
//! measured and reported.

use std::f64::consts::PI;

use serde::Serialize;

use crate::numerics::{integrate_1d, loglog_slope, solve_radial_poisson, PoissonError, RadialGrid};
use crate::oscillator::ProtonOscillation;

/// Largest outer boundary of the solver domain, in proton radii.
pub const MAX_DOMAIN_RADII: f64 = 5.0;

/// Nodes kept inside the proton when sizing the domain.
const SOURCE_NODES: f64 = 40.0;

/// Outer boundary (in proton radii) for an `n`-point grid: at most
/// [`MAX_DOMAIN_RADII`], shrunk so the source keeps at least 40 nodes.
pub fn domain_radii(grid_points: usize) -> f64 {
    ((grid_points - 1) as f64 / SOURCE_NODES).min(MAX_DOMAIN_RADII)
}

#[derive(Debug, Clone, Serialize)]
pub struct ExteriorCheck {
    pub grid_points: usize,
    /// Log-log slope of |E| against r on the exterior nodes.
    pub slope: f64,
    /// Mean of `E_fd r² / q_D`.
    pub calibration: f64,
    /// `(max − min)/mean` of `E_fd r²` over the exterior nodes.
    pub spread: f64,
    /// RMS relative deviation from the exact Gauss-law field on the exterior nodes.
    pub rms_error: f64,
}

/// Instant used for the checks: a quarter period, where `q_D` peaks.
pub fn reference_time(p: &ProtonOscillation) -> f64 {
    p.period() / 4.0
}

pub fn exterior_check(
    p: &ProtonOscillation,
    t: f64,
    grid_points: usize,
) -> Result<ExteriorCheck, PoissonError> {
    let grid = RadialGrid::new(0.0, domain_radii(grid_points) * p.radius, grid_points)?;
    let q = p.dynamic_charge(t);
    let sol = solve_radial_poisson(|r| p.poisson_source(r, t), grid, q)?;
    let h = grid.spacing();

    // Enclosed source from direct quadrature, independent of the charge formula.
    let enclosed =
        4.0 * PI * integrate_1d(|r| p.poisson_source(r, t) * r * r, 0.0, p.radius, 1e-12)?;
    let exact = |r: f64| enclosed / (4.0 * PI * r * r);

    let mut radii = Vec::new();
    let mut fields = Vec::new();
    let mut sq = 0.0;
    let mut count = 0usize;
    for i in 1..grid.len() - 1 {
        let r = grid.node(i);
        if r - h < p.radius {
            continue;
        }
        radii.push(r);
        fields.push(sol.field[i]);
        sq += (sol.field[i] / exact(r) - 1.0).powi(2);
        count += 1;
    }
    let scaled: Vec<f64> = radii.iter().zip(&fields).map(|(r, e)| e * r * r).collect();
    let mean = scaled.iter().sum::<f64>() / scaled.len() as f64;
    let (lo, hi) = scaled
        .iter()
        .fold((f64::INFINITY, f64::NEG_INFINITY), |(a, b), v| {
            (a.min(*v), b.max(*v))
        });

    Ok(ExteriorCheck {
        grid_points,
        slope: loglog_slope(&radii, &fields),
        calibration: mean / q,
        spread: (hi - lo) / mean.abs(),
        rms_error: (sq / count as f64).sqrt(),
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct ConvergenceStudy {
    pub checks: Vec<ExteriorCheck>,
    /// `error(n_k) / error(n_{k+1})` for successive grids.
    pub ratios: Vec<f64>,
}

pub fn convergence_study(
    p: &ProtonOscillation,
    t: f64,
    grids: &[usize],
) -> Result<ConvergenceStudy, PoissonError> {
    let checks = grids
        .iter()
        .map(|&n| exterior_check(p, t, n))
        .collect::<Result<Vec<_>, _>>()?;
    let ratios = checks
        .windows(2)
        .map(|w| w[0].rms_error / w[1].rms_error)
        .collect();
    Ok(ConvergenceStudy { checks, ratios })
}
