//! Radially oscillating proton and the dynamic charge it produces.
//!
//! The radius follows `R_p + d sin ωt`. To first order in `x = 3d/R_p` the
//! mass density is `ρ₀(1 − x sin ωt)`, and its second time derivative acts
//! as a uniform charge density `β x ρ₀ ω² sin ωt` inside the proton. The
//! volume integral of that source is the dynamic charge `q_D = β x M_p ω² sin ωt`.

use std::f64::consts::{E, PI};
use std::io::{self, Write};

use serde::Serialize;
use thiserror::Error;

use crate::numerics::{find_root, RootError};

/// Above this value of `x` the first-order density expansion is flagged.
pub const FIRST_ORDER_LIMIT: f64 = 0.1;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum OscillatorError {
    #[error("invalid oscillation parameters: {0}")]
    InvalidParameters(String),
    #[error("exterior field requested inside the proton (r = {r:e} m < R_p = {r_p:e} m)")]
    InsideProton { r: f64, r_p: f64 },
    #[error("invalid Woods-Saxon profile: {0}")]
    InvalidProfile(String),
    #[error("e-fold radius not bracketed in [0, 20] fm: {0}")]
    NotBracketed(#[from] RootError),
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct ProtonOscillation {
    /// Rest radius, m.
    pub radius: f64,
    /// Oscillation amplitude, m.
    pub amplitude: f64,
    /// Angular frequency, rad/s.
    pub omega: f64,
    /// Proton mass, kg.
    pub mass: f64,
    /// Dynamic/electromagnetic coupling β; 1 in natural units.
    pub beta: f64,
    /// Multiplies the exterior field `q_D/r²`. 1 reproduces the
    /// per-steradian form; `1/(4π)` gives the Gauss-law normalisation.
    pub field_calibration: f64,
}

impl ProtonOscillation {
    pub fn new(
        radius: f64,
        amplitude: f64,
        omega: f64,
        mass: f64,
    ) -> Result<Self, OscillatorError> {
        let p = ProtonOscillation {
            radius,
            amplitude,
            omega,
            mass,
            beta: 1.0,
            field_calibration: 1.0,
        };
        p.validate()?;
        Ok(p)
    }

    /// Builds from the relative amplitude `d/R_p` and the frequency in Hz.
    pub fn from_relative(
        radius: f64,
        d_over_r: f64,
        frequency_hz: f64,
        mass: f64,
    ) -> Result<Self, OscillatorError> {
        Self::new(radius, d_over_r * radius, 2.0 * PI * frequency_hz, mass)
    }

    pub fn with_beta(mut self, beta: f64) -> Result<Self, OscillatorError> {
        self.beta = beta;
        self.validate()?;
        Ok(self)
    }

    pub fn with_field_calibration(mut self, k: f64) -> Result<Self, OscillatorError> {
        self.field_calibration = k;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<(), OscillatorError> {
        let bad = |m: String| Err(OscillatorError::InvalidParameters(m));
        let vals = [
            self.radius,
            self.amplitude,
            self.omega,
            self.mass,
            self.beta,
            self.field_calibration,
        ];
        if vals.iter().any(|v| !v.is_finite()) {
            return bad("all parameters must be finite".into());
        }
        if !(self.radius > 0.0 && self.mass > 0.0 && self.omega > 0.0) {
            return bad("radius, mass and omega must be positive".into());
        }
        if !(self.amplitude > 0.0 && self.amplitude < self.radius) {
            return bad(format!(
                "need 0 < d < R_p, got d = {:e}, R_p = {:e}",
                self.amplitude, self.radius
            ));
        }
        if !(self.beta > 0.0 && self.field_calibration > 0.0) {
            return bad("beta and field calibration must be positive".into());
        }
        Ok(())
    }

    /// `x = 3d/R_p`.
    pub fn x(&self) -> f64 {
        3.0 * self.amplitude / self.radius
    }

    /// True when `x` is too large for the first-order density model.
    pub fn exceeds_first_order_validity(&self) -> bool {
        self.x() > FIRST_ORDER_LIMIT
    }

    pub fn period(&self) -> f64 {
        2.0 * PI / self.omega
    }

    /// Rest density `3M_p/(4πR_p³)`.
    pub fn rest_density(&self) -> f64 {
        3.0 * self.mass / (4.0 * PI * self.radius.powi(3))
    }

    pub fn radius_at(&self, t: f64) -> f64 {
        self.radius + self.amplitude * (self.omega * t).sin()
    }

    pub fn density_first_order(&self, t: f64) -> f64 {
        self.rest_density() * (1.0 - self.x() * (self.omega * t).sin())
    }

    /// Uniform-sphere density without linearisation.
    pub fn density_exact(&self, t: f64) -> f64 {
        3.0 * self.mass / (4.0 * PI) * self.radius_at(t).powi(-3)
    }

    /// `∂ρ/∂t` of the first-order density.
    pub fn density_rate(&self, t: f64) -> f64 {
        -self.rest_density() * self.x() * self.omega * (self.omega * t).cos()
    }

    /// Radial momentum density implied by mass conservation for the
    /// first-order density: `p(r) = −(r/3) ∂ρ/∂t` inside the proton.
    pub fn momentum_density(&self, r: f64, t: f64) -> f64 {
        if r <= self.radius {
            -r / 3.0 * self.density_rate(t)
        } else {
            0.0
        }
    }

    /// `β x M_p ω² sin ωt`, in natural charge units (J/m²).
    pub fn dynamic_charge(&self, t: f64) -> f64 {
        self.beta * self.x() * self.mass * self.omega.powi(2) * (self.omega * t).sin()
    }

    /// Uniform source density `σ_dyn` with `Δφ = −σ_dyn`; zero outside the proton.
    pub fn poisson_source(&self, r: f64, t: f64) -> f64 {
        if r < self.radius {
            self.beta * self.x() * self.rest_density() * self.omega.powi(2) * (self.omega * t).sin()
        } else {
            0.0
        }
    }

    /// Exterior field `k q_D(t)/r²` for `r ≥ R_p`, `k` being the field calibration.
    #[allow(clippy::neg_cmp_op_on_partial_ord)]
    pub fn exterior_field(&self, r: f64, t: f64) -> Result<f64, OscillatorError> {
        if !(r >= self.radius) {
            return Err(OscillatorError::InsideProton {
                r,
                r_p: self.radius,
            });
        }
        Ok(self.field_calibration * self.dynamic_charge(t) / (r * r))
    }

    /// Largest relative residual of `∇·p + ∂ρ/∂t` over `n_points` cells
    /// spanning the proton, using the finite-volume divergence of the
    /// momentum density. Normalised by the amplitude `ρ₀ x ω`.
    pub fn continuity_residual(&self, t: f64, n_points: usize) -> f64 {
        let h = self.radius / n_points as f64;
        let scale = self.rest_density() * self.x() * self.omega;
        let rate = self.density_rate(t);
        (0..n_points)
            .map(|i| {
                let (lo, hi) = (i as f64 * h, (i + 1) as f64 * h);
                let flux =
                    hi * hi * self.momentum_density(hi, t) - lo * lo * self.momentum_density(lo, t);
                let volume = (hi.powi(3) - lo.powi(3)) / 3.0;
                ((flux / volume + rate) / scale).abs()
            })
            .fold(0.0, f64::max)
    }

    /// `samples` evenly spaced instants over one period, both ends included.
    pub fn time_series(
        &self,
        r_probe: f64,
        samples: usize,
    ) -> Result<Vec<TimeSample>, OscillatorError> {
        if samples < 2 {
            return Err(OscillatorError::InvalidParameters(
                "need at least 2 samples".into(),
            ));
        }
        let step = self.period() / (samples - 1) as f64;
        (0..samples)
            .map(|i| {
                let t = i as f64 * step;
                Ok(TimeSample {
                    t,
                    charge: self.dynamic_charge(t),
                    field: self.exterior_field(r_probe, t)?,
                })
            })
            .collect()
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct TimeSample {
    pub t: f64,
    pub charge: f64,
    pub field: f64,
}

/// Writes `t_s,q_D,E_at_r` rows with 17 significant digits.
pub fn write_time_series_csv<W: Write>(rows: &[TimeSample], mut out: W) -> io::Result<()> {
    writeln!(out, "t_s,q_D,E_at_r")?;
    for s in rows {
        writeln!(out, "{:.16e},{:.16e},{:.16e}", s.t, s.charge, s.field)?;
    }
    Ok(())
}

/// Logistic nuclear density profile, radii in fm.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct WoodsSaxonProfile {
    pub r_half: f64,
    pub skin: f64,
    pub rho0: f64,
}

impl Default for WoodsSaxonProfile {
    fn default() -> Self {
        WoodsSaxonProfile {
            r_half: 1.07,
            skin: 0.55,
            rho0: 1.0,
        }
    }
}

impl WoodsSaxonProfile {
    pub fn new(r_half: f64, skin: f64, rho0: f64) -> Result<Self, OscillatorError> {
        if ![r_half, skin, rho0]
            .iter()
            .all(|v| v.is_finite() && *v > 0.0)
        {
            return Err(OscillatorError::InvalidProfile(format!(
                "parameters must be positive and finite: r_half = {r_half}, skin = {skin}, rho0 = {rho0}"
            )));
        }
        Ok(WoodsSaxonProfile { r_half, skin, rho0 })
    }

    /// Density relative to `rho0`.
    pub fn relative_density(&self, r: f64) -> f64 {
        1.0 / (1.0 + ((r - self.r_half) / self.skin).exp())
    }

    pub fn density(&self, r: f64) -> f64 {
        self.rho0 * self.relative_density(r)
    }

    /// Radius (fm) where the relative density falls to `1/e`.
    pub fn efold_radius(&self) -> Result<f64, OscillatorError> {
        let target = 1.0 / E;
        Ok(find_root(
            |r| self.relative_density(r) - target,
            0.0,
            20.0,
            1e-6,
        )?)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn proton(x: f64) -> ProtonOscillation {
        let r = 1.4e-15;
        ProtonOscillation::new(r, x * r / 3.0, 2.0 * PI * 6.57e15, 1.672_621_923_69e-27).unwrap()
    }

    fn rel(a: f64, b: f64) -> f64 {
        ((a - b) / b).abs()
    }

    #[test]
    fn rejects_invalid_parameters() {
        assert!(ProtonOscillation::new(1.0, 0.0, 1.0, 1.0).is_err());
        assert!(ProtonOscillation::new(1.0, 1.0, 1.0, 1.0).is_err());
        assert!(ProtonOscillation::new(1.0, 0.1, -1.0, 1.0).is_err());
        assert!(ProtonOscillation::new(1.0, 0.1, 1.0, f64::NAN).is_err());
        assert!(proton(0.01).with_beta(0.0).is_err());
    }

    #[test]
    fn validity_flag() {
        assert!(!proton(0.05).exceeds_first_order_validity());
        assert!(proton(0.2).exceeds_first_order_validity());
    }

    #[test]
    fn radius_over_a_period() {
        let p = proton(0.01);
        assert_eq!(p.radius_at(0.0), p.radius);
        let peak = p.radius_at(PI / (2.0 * p.omega));
        assert!(rel(peak, p.radius + p.amplitude) < 1e-15);
        assert!(rel(p.radius_at(p.period()), p.radius) < 1e-12);
    }

    #[test]
    fn first_order_density() {
        let p = proton(0.01);
        assert_eq!(p.density_first_order(0.0), p.rest_density());
        let q = p.density_first_order(PI / (2.0 * p.omega));
        assert!(rel(q, 0.99 * p.rest_density()) < 1e-14);
    }

    #[test]
    fn first_order_density_tracks_exact_form() {
        for x in [1e-4, 1e-3, 0.01, 0.03, 0.05] {
            let p = proton(x);
            let worst = (0..10_000)
                .map(|i| {
                    let t = p.period() * i as f64 / 10_000.0;
                    rel(p.density_first_order(t), p.density_exact(t))
                })
                .fold(0.0, f64::max);
            assert!(worst <= 2.0 * x * x, "x = {x}: {worst}");
        }
    }

    #[test]
    fn dynamic_charge_is_odd_and_periodic() {
        let p = proton(0.01);
        assert_eq!(p.dynamic_charge(0.0), 0.0);
        let peak = p.beta * p.x() * p.mass * p.omega.powi(2);
        let tau = p.period();
        for i in 0..50 {
            let t = tau * i as f64 / 50.0;
            assert!((p.dynamic_charge(t + tau) - p.dynamic_charge(t)).abs() < 1e-9 * peak);
            assert!(
                (p.dynamic_charge(tau / 2.0 + t) + p.dynamic_charge(tau / 2.0 - t)).abs()
                    < 1e-9 * peak
            );
        }
    }

    #[test]
    fn source_sign_and_support() {
        let p = proton(0.01);
        assert_eq!(p.poisson_source(0.5 * p.radius, 0.0), 0.0);
        for i in 1..20 {
            let t = p.period() / 2.0 * i as f64 / 20.0;
            assert!(p.poisson_source(0.3 * p.radius, t) > 0.0);
        }
        assert_eq!(p.poisson_source(1.01 * p.radius, p.period() / 4.0), 0.0);
    }

    #[test]
    fn exterior_field_domain_and_shape() {
        let p = proton(0.01);
        let t = p.period() / 8.0;
        assert!(matches!(
            p.exterior_field(0.5 * p.radius, t),
            Err(OscillatorError::InsideProton { .. })
        ));
        assert_eq!(p.exterior_field(2.0 * p.radius, 0.0).unwrap(), 0.0);
        let e1 = p.exterior_field(2.0 * p.radius, t).unwrap();
        let e2 = p.exterior_field(4.0 * p.radius, t).unwrap();
        assert!(rel(e2, e1 / 4.0) < 1e-15);
    }

    #[test]
    fn continuity_holds_on_200_cells() {
        let p = proton(1.38e-5);
        for t in [0.0, 0.1, 0.37, 0.8].map(|f| f * p.period()) {
            assert!(p.continuity_residual(t, 200) <= 1e-8);
        }
    }

    #[test]
    fn woods_saxon_values() {
        let w = WoodsSaxonProfile::default();
        assert!((w.relative_density(1.07) - 0.5).abs() < 1e-15);
        // 1/(1 + e^(-1.07/0.55)) evaluated independently.
        assert!((w.relative_density(0.0) - 0.874_950_159_841_769_7).abs() < 1e-12);
        let mut prev = w.relative_density(0.0);
        for i in 1..200 {
            let v = w.relative_density(i as f64 * 0.1);
            assert!(v < prev);
            prev = v;
        }
        assert!(prev < 1e-12);
        assert!(WoodsSaxonProfile::new(1.0, 0.0, 1.0).is_err());
    }

    #[test]
    fn efold_radius_closed_form() {
        let w = WoodsSaxonProfile::default();
        let r = w.efold_radius().unwrap();
        let closed = 1.07 + 0.55 * (E - 1.0).ln();
        assert!((r - closed).abs() <= 1e-6);
        assert!((1.3..=1.4).contains(&r));
    }

    #[test]
    fn efold_radius_limits_and_scaling() {
        let sharp = WoodsSaxonProfile::new(1.07, 1e-5, 1.0).unwrap();
        assert!((sharp.efold_radius().unwrap() - 1.07).abs() < 1e-3);
        let base = WoodsSaxonProfile::default();
        let wide = WoodsSaxonProfile::new(1.07, 1.10, 1.0).unwrap();
        let d1 = base.efold_radius().unwrap() - 1.07;
        let d2 = wide.efold_radius().unwrap() - 1.07;
        assert!((d2 - 2.0 * d1).abs() < 3e-6);
        let far = WoodsSaxonProfile::new(25.0, 0.5, 1.0).unwrap();
        assert!(matches!(
            far.efold_radius(),
            Err(OscillatorError::NotBracketed(_))
        ));
    }

    #[test]
    fn time_series_csv() {
        let p = proton(0.01);
        let rows = p.time_series(2.0 * p.radius, 5).unwrap();
        assert_eq!(rows.len(), 5);
        let peak = p.beta * p.x() * p.mass * p.omega.powi(2);
        assert!((rows[0].charge - rows[4].charge).abs() <= 1e-12 * peak);
        let mut buf = Vec::new();
        write_time_series_csv(&rows, &mut buf).unwrap();
        let text = String::from_utf8(buf).unwrap();
        assert!(text.starts_with("t_s,q_D,E_at_r\n"));
        assert_eq!(text.lines().count(), 6);
        assert!(p.time_series(2.0 * p.radius, 1).is_err());
        assert!(p.time_series(0.5 * p.radius, 3).is_err());
    }
}
