//! Finite-volume solver for the spherically symmetric Poisson problem
//!
//! ```text
//! (1/r²) d/dr (r² dφ/dr) = −s(r)
//! ```
//!
//! Each node owns a spherical shell; the face fluxes `r² φ′` are balanced
//! against the exact shell integral of the source, so the discrete Gauss law
//! holds to rounding and the exterior field is a sharp 1/r² test.

use std::f64::consts::PI;
use std::io::{self, Write};

use thiserror::Error;

use super::quadrature::{Quadrature, QuadratureError};

/// Minimum number of nodes that must cover the source support.
pub const MIN_SOURCE_NODES: usize = 32;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum PoissonError {
    #[error("invalid grid: {0}")]
    InvalidGrid(String),
    #[error("source is not resolved: {nodes} nodes inside its support, need {MIN_SOURCE_NODES}")]
    UnderResolvedSource { nodes: usize },
    #[error("source does not vanish at the outer boundary r = {0:e}")]
    SourceAtBoundary(f64),
    #[error("singular linear system at row {0}")]
    Singular(usize),
    #[error("source quadrature failed: {0}")]
    Quadrature(#[from] QuadratureError),
}

/// Uniform radial grid `r_min, r_min + h, ..., r_max`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct RadialGrid {
    r_min: f64,
    r_max: f64,
    n_points: usize,
}

impl RadialGrid {
    pub fn new(r_min: f64, r_max: f64, n_points: usize) -> Result<Self, PoissonError> {
        if !(r_min.is_finite() && r_max.is_finite() && r_min >= 0.0 && r_min < r_max) {
            return Err(PoissonError::InvalidGrid(format!(
                "need 0 <= r_min < r_max, got [{r_min:e}, {r_max:e}]"
            )));
        }
        if n_points < 16 {
            return Err(PoissonError::InvalidGrid(format!(
                "need at least 16 points, got {n_points}"
            )));
        }
        Ok(RadialGrid {
            r_min,
            r_max,
            n_points,
        })
    }

    pub fn r_min(&self) -> f64 {
        self.r_min
    }

    pub fn r_max(&self) -> f64 {
        self.r_max
    }

    pub fn len(&self) -> usize {
        self.n_points
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn spacing(&self) -> f64 {
        (self.r_max - self.r_min) / (self.n_points - 1) as f64
    }

    pub fn node(&self, i: usize) -> f64 {
        if i + 1 == self.n_points {
            self.r_max
        } else {
            self.r_min + i as f64 * self.spacing()
        }
    }

    pub fn nodes(&self) -> Vec<f64> {
        (0..self.n_points).map(|i| self.node(i)).collect()
    }
}

#[derive(Debug, Clone)]
pub struct RadialSolution {
    pub grid: RadialGrid,
    pub phi: Vec<f64>,
    /// `E = −dφ/dr`: central differences inside, second-order one-sided at the ends.
    pub field: Vec<f64>,
}

impl RadialSolution {
    /// Writes `r_m,phi,E` rows with 17 significant digits.
    pub fn write_csv<W: Write>(&self, mut out: W) -> io::Result<()> {
        writeln!(out, "r_m,phi,E")?;
        for (i, (phi, e)) in self.phi.iter().zip(&self.field).enumerate() {
            writeln!(out, "{:.16e},{:.16e},{:.16e}", self.grid.node(i), phi, e)?;
        }
        Ok(())
    }
}

/// Solves the radial Poisson problem on `grid`.
///
/// `total_charge` is the volume integral of the source, `∫ s dV`; the outer
/// Dirichlet value is `total_charge / (4π r_max)`. The inner boundary carries
/// zero flux: regularity at the origin when `r_min = 0`, no enclosed source
/// otherwise.
pub fn solve_radial_poisson<F: Fn(f64) -> f64>(
    source: F,
    grid: RadialGrid,
    total_charge: f64,
) -> Result<RadialSolution, PoissonError> {
    let n = grid.len();
    let h = grid.spacing();
    let nodes = grid.nodes();

    if source(grid.r_max()) != 0.0 {
        return Err(PoissonError::SourceAtBoundary(grid.r_max()));
    }
    let support = nodes.iter().rposition(|&r| source(r) != 0.0);
    if let Some(last) = support {
        if last + 1 < MIN_SOURCE_NODES {
            return Err(PoissonError::UnderResolvedSource { nodes: last + 1 });
        }
    }

    let face = |i: usize| -> f64 {
        // Face between node i and i+1.
        (grid.r_min() + (i as f64 + 0.5) * h).min(grid.r_max())
    };
    let quad = Quadrature::new(1e-12);

    // Tridiagonal system over φ_0 .. φ_{n-2}; φ_{n-1} is fixed.
    let m = n - 1;
    let mut lower = vec![0.0; m];
    let mut diag = vec![0.0; m];
    let mut upper = vec![0.0; m];
    let mut rhs = vec![0.0; m];
    for i in 0..m {
        let left = if i == 0 { grid.r_min() } else { face(i - 1) };
        let right = face(i);
        let w_left = if i == 0 { 0.0 } else { left * left };
        let w_right = right * right;
        lower[i] = w_left;
        upper[i] = w_right;
        diag[i] = -(w_left + w_right);
        let shell = if support.is_some() {
            quad.integrate(|r| source(r) * r * r, left, right)?.value
        } else {
            0.0
        };
        rhs[i] = -h * shell;
    }
    let phi_outer = total_charge / (4.0 * PI * grid.r_max());
    rhs[m - 1] -= upper[m - 1] * phi_outer;

    let mut phi = thomas(&lower, &diag, &upper, &rhs)?;
    phi.push(phi_outer);

    let mut field = vec![0.0; n];
    field[0] = -(-3.0 * phi[0] + 4.0 * phi[1] - phi[2]) / (2.0 * h);
    for i in 1..n - 1 {
        field[i] = -(phi[i + 1] - phi[i - 1]) / (2.0 * h);
    }
    field[n - 1] = -(3.0 * phi[n - 1] - 4.0 * phi[n - 2] + phi[n - 3]) / (2.0 * h);

    Ok(RadialSolution { grid, phi, field })
}

fn thomas(
    lower: &[f64],
    diag: &[f64],
    upper: &[f64],
    rhs: &[f64],
) -> Result<Vec<f64>, PoissonError> {
    let n = diag.len();
    let mut c = vec![0.0; n];
    let mut d = vec![0.0; n];
    let scale = diag.iter().fold(0.0f64, |acc, v| acc.max(v.abs()));
    for i in 0..n {
        let denom = if i == 0 {
            diag[0]
        } else {
            diag[i] - lower[i] * c[i - 1]
        };
        if denom.abs() <= f64::EPSILON * scale || !denom.is_finite() {
            return Err(PoissonError::Singular(i));
        }
        c[i] = upper[i] / denom;
        d[i] = if i == 0 {
            rhs[0] / denom
        } else {
            (rhs[i] - lower[i] * d[i - 1]) / denom
        };
    }
    let mut x = vec![0.0; n];
    x[n - 1] = d[n - 1];
    for i in (0..n - 1).rev() {
        x[i] = d[i] - c[i] * x[i + 1];
    }
    Ok(x)
}

/// Least-squares slope of `ln|y|` against `ln x`.
pub fn loglog_slope(x: &[f64], y: &[f64]) -> f64 {
    let pts: Vec<(f64, f64)> = x
        .iter()
        .zip(y)
        .map(|(a, b)| (a.ln(), b.abs().ln()))
        .collect();
    let n = pts.len() as f64;
    let mx = pts.iter().map(|p| p.0).sum::<f64>() / n;
    let my = pts.iter().map(|p| p.1).sum::<f64>() / n;
    let sxy: f64 = pts.iter().map(|p| (p.0 - mx) * (p.1 - my)).sum();
    let sxx: f64 = pts.iter().map(|p| (p.0 - mx).powi(2)).sum();
    sxy / sxx
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn grid_validation() {
        assert!(RadialGrid::new(0.0, 1.0, 15).is_err());
        assert!(RadialGrid::new(1.0, 1.0, 64).is_err());
        assert!(RadialGrid::new(-1.0, 1.0, 64).is_err());
        let g = RadialGrid::new(0.0, 1.0, 11 + 10).unwrap();
        assert_eq!(g.node(0), 0.0);
        assert_eq!(g.node(20), 1.0);
        assert!((g.spacing() - 0.05).abs() < 1e-15);
    }

    #[test]
    fn zero_source_gives_flat_potential() {
        let g = RadialGrid::new(0.0, 1.0, 64).unwrap();
        let sol = solve_radial_poisson(|_| 0.0, g, 0.0).unwrap();
        assert!(sol.phi.iter().all(|p| p.abs() < 1e-14));
        assert!(sol.field.iter().all(|e| e.abs() < 1e-12));
    }

    #[test]
    fn uniform_ball_matches_gauss_law() {
        // s = 1 inside r < 0.1: enclosed ∫ s r² dr = r³/3, so E r² = R³/3 outside.
        let radius: f64 = 0.1;
        let g = RadialGrid::new(0.0, 1.0, 1024).unwrap();
        let q = 4.0 * PI * radius.powi(3) / 3.0;
        let sol = solve_radial_poisson(|r| if r < radius { 1.0 } else { 0.0 }, g, q).unwrap();
        let h = g.spacing();
        for i in 1..g.len() - 1 {
            let r = g.node(i);
            if r >= radius + h {
                let expected = radius.powi(3) / 3.0 / (r * r);
                assert!((sol.field[i] / expected - 1.0).abs() < 1e-3, "r = {r}");
            }
        }
        // Interior: E = s r / 3.
        let i = 500 / 10;
        let r = g.node(i);
        assert!((sol.field[i] / (r / 3.0) - 1.0).abs() < 1e-3);
    }

    #[test]
    fn under_resolved_source_rejected() {
        let g = RadialGrid::new(0.0, 1.0, 64).unwrap();
        assert_eq!(
            solve_radial_poisson(|r| if r < 0.1 { 1.0 } else { 0.0 }, g, 1.0).unwrap_err(),
            PoissonError::UnderResolvedSource { nodes: 7 }
        );
        assert!(matches!(
            solve_radial_poisson(|_| 1.0, g, 1.0),
            Err(PoissonError::SourceAtBoundary(_))
        ));
    }

    #[test]
    fn csv_has_header_and_rows() {
        let g = RadialGrid::new(0.0, 1.0, 16).unwrap();
        let sol = solve_radial_poisson(|_| 0.0, g, 0.0).unwrap();
        let mut buf = Vec::new();
        sol.write_csv(&mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        let lines: Vec<_> = text.lines().collect();
        assert_eq!(lines[0], "r_m,phi,E");
        assert_eq!(lines.len(), 17);
        assert_eq!(lines[16].split(',').count(), 3);
    }

    #[test]
    fn slope_of_power_law() {
        let x: Vec<f64> = (1..50).map(|i| i as f64).collect();
        let y: Vec<f64> = x.iter().map(|v| 3.0 / (v * v)).collect();
        assert!((loglog_slope(&x, &y) + 2.0).abs() < 1e-12);
    }
}
