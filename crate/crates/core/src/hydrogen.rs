//! Hydrogen energy ledger and the coupling-constant chain that ends in a
//! numerical value for ħ.
//!
//! The electron state is characterised by the hydrogen frequency `ν_H`, the
//! atomic radius `R_H` and the principal number `n`. The proton enters
//! through its radius `R_p`, which fixes the coupling `η` between mechanic
//! and electromagnetic quantities.

use std::cell::RefCell;
use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::constants::ConstantsTable;
use crate::numerics::{integrate_1d, QuadratureError};

/// Atomic radius that makes `½ M_e (ν_H R_H)² = 13.6 eV` at `ν_H = 6.57e15 Hz`.
pub const DEFAULT_ATOMIC_RADIUS: f64 = 3.33e-10;

/// Largest admissible `R_p/R_H`.
pub const MAX_RADIUS_RATIO: f64 = 1e-3;

/// Proton radii (fm) outside this window are flagged in [`HbarEstimate`].
pub const PROTON_RADIUS_WINDOW_FM: (f64, f64) = (0.5, 3.0);

pub const FEMTOMETRE: f64 = 1e-15;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum HydrogenError {
    #[error("invalid hydrogen model: {0}")]
    InvalidModel(String),
    #[error("radial coordinate must lie in (0, R_H], got {0:e} m")]
    OutsideAtom(f64),
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HydrogenModel {
    /// Hydrogen frequency ν_H, Hz.
    pub nu_H: f64,
    /// Atomic radius, m.
    pub R_H: f64,
    /// Proton radius, m.
    pub R_p: f64,
    pub n: u32,
    pub M_e: f64,
    pub M_p: f64,
    /// Planck constant (SI), J s.
    pub h: f64,
}

impl HydrogenModel {
    #[allow(non_snake_case)]
    pub fn new(
        nu_H: f64,
        R_H: f64,
        R_p: f64,
        n: u32,
        M_e: f64,
        M_p: f64,
        h: f64,
    ) -> Result<Self, HydrogenError> {
        let model = HydrogenModel {
            nu_H,
            R_H,
            R_p,
            n,
            M_e,
            M_p,
            h,
        };
        model.validate()?;
        Ok(model)
    }

    /// Model with constants from `table`, default `R_H`, and the given state.
    pub fn from_constants(table: &ConstantsTable, n: u32, r_p: f64) -> Result<Self, HydrogenError> {
        Self::new(
            table.nu_H,
            DEFAULT_ATOMIC_RADIUS,
            r_p,
            n,
            table.M_e,
            table.M_p,
            table.h,
        )
    }

    pub fn with_atomic_radius(mut self, r_h: f64) -> Result<Self, HydrogenError> {
        self.R_H = r_h;
        self.validate()?;
        Ok(self)
    }

    pub fn with_proton_radius(mut self, r_p: f64) -> Result<Self, HydrogenError> {
        self.R_p = r_p;
        self.validate()?;
        Ok(self)
    }

    pub fn with_state(mut self, n: u32) -> Result<Self, HydrogenError> {
        self.n = n;
        self.validate()?;
        Ok(self)
    }

    fn validate(&self) -> Result<(), HydrogenError> {
        let fields = [self.nu_H, self.R_H, self.R_p, self.M_e, self.M_p, self.h];
        if !fields.iter().all(|v| v.is_finite() && *v > 0.0) {
            return Err(HydrogenError::InvalidModel(
                "frequency, radii, masses and h must be positive and finite".into(),
            ));
        }
        if self.n == 0 {
            return Err(HydrogenError::InvalidModel(
                "principal quantum number must be at least 1".into(),
            ));
        }
        if self.R_p / self.R_H >= MAX_RADIUS_RATIO {
            return Err(HydrogenError::InvalidModel(format!(
                "R_p/R_H = {:e} is not small (limit {MAX_RADIUS_RATIO:e})",
                self.R_p / self.R_H
            )));
        }
        Ok(())
    }

    pub fn omega(&self) -> f64 {
        2.0 * PI * self.nu_H
    }

    pub fn period(&self) -> f64 {
        1.0 / self.nu_H
    }

    /// `u_n = ω_H R_H / (2π n) = ν_H R_H / n`.
    pub fn state_velocity(&self) -> f64 {
        self.nu_H * self.R_H / self.n as f64
    }

    fn ground_velocity(&self) -> f64 {
        self.nu_H * self.R_H
    }

    /// `ρ₀ = M_e / (2π R_H)`, kg/m.
    pub fn density_amplitude(&self) -> f64 {
        self.M_e / (2.0 * PI * self.R_H)
    }

    /// Relative proton oscillation amplitude `x = M_e / ((2π)² M_p n)`.
    pub fn oscillation_amplitude(&self) -> f64 {
        self.M_e / ((2.0 * PI).powi(2) * self.M_p * self.n as f64)
    }

    /// Ground-state wavevector, chosen so the density has a node at `R_H`.
    pub fn wavevector(&self) -> f64 {
        PI / self.R_H
    }

    /// Kinetic and field energy densities of the ground state at `(r, t)`.
    pub fn energy_densities(&self, r: f64, t: f64) -> Result<EnergyDensities, HydrogenError> {
        if !(r > 0.0 && r <= self.R_H) {
            return Err(HydrogenError::OutsideAtom(r));
        }
        let u1 = self.ground_velocity();
        let envelope =
            self.density_amplitude() * u1 * u1 / (r * r) * (self.omega() * t).cos().powi(2);
        let kr = self.wavevector() * r;
        Ok(EnergyDensities {
            kinetic: envelope * kr.sin().powi(2),
            field: envelope * kr.cos().powi(2),
            total: envelope,
        })
    }

    /// Ground-state ledger: electron, free-electron, binding and radiation energies.
    pub fn electron_energy(&self) -> EnergyLedger {
        let u1 = self.ground_velocity();
        let w_free = self.M_e * u1 * u1;
        let w_el = 0.5 * w_free;
        let delta = w_free - w_el;
        EnergyLedger {
            w_el,
            w_free,
            delta_w: delta,
            w_rad: delta,
        }
    }

    /// Period-averaged volume integral of `φ_K + φ_EM` over the atom,
    /// evaluated numerically from the densities.
    pub fn electron_energy_quadrature(&self) -> Result<f64, HydrogenError> {
        let tau = self.period();
        let tol = 1e-10;
        let spatial = |t: f64| {
            integrate_1d(
                |r| match self.energy_densities(r, t) {
                    Ok(d) => 4.0 * PI * r * r * (d.kinetic + d.field),
                    Err(_) => f64::NAN,
                },
                0.0,
                self.R_H,
                tol,
            )
        };
        // Quadrature nodes never touch the endpoints, so r = 0 is not evaluated.
        let failure = RefCell::new(None);
        let total = integrate_1d(
            |t| match spatial(t) {
                Ok(v) => v,
                Err(e) => {
                    failure.borrow_mut().get_or_insert(e);
                    f64::NAN
                }
            },
            0.0,
            tau,
            tol,
        );
        match (failure.into_inner(), total) {
            (Some(e), _) => Err(e.into()),
            (None, r) => Ok(r? / tau),
        }
    }

    /// `W_Rad = M_p² ω⁴ x² / (4 η R_p)` for the given coupling.
    pub fn radiation_energy_closed_form(&self, eta_coupling: f64) -> f64 {
        let x = self.oscillation_amplitude();
        self.M_p.powi(2) * self.omega().powi(4) * x * x / (4.0 * eta_coupling * self.R_p)
    }

    /// `η = M_e² ν_H³ / (2 h R_p)` together with the radius-free product `η R_p`.
    pub fn derive_eta_coupling(&self) -> EtaCoupling {
        let eta_times_rp = self.M_e.powi(2) * self.nu_H.powi(3) / (2.0 * self.h);
        EtaCoupling {
            eta: eta_times_rp / self.R_p,
            eta_times_rp,
        }
    }

    /// `4π/η` at proton radius `r_p` (m), compared with `reference`.
    pub fn hbar_from_radius(&self, r_p: f64, reference: f64) -> HbarEstimate {
        let eta_times_rp = self.M_e.powi(2) * self.nu_H.powi(3) / (2.0 * self.h);
        let eta = eta_times_rp / r_p;
        let value = 4.0 * PI / eta;
        let r_p_fm = r_p / FEMTOMETRE;
        let (lo, hi) = PROTON_RADIUS_WINDOW_FM;
        HbarEstimate {
            r_p_fm,
            eta_coupling: eta,
            value,
            reference,
            rel_dev: (value - reference) / reference,
            outside_window: !(lo..=hi).contains(&r_p_fm),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyDensities {
    pub kinetic: f64,
    pub field: f64,
    /// `ρ₀ u₁² cos²ωt / r²`.
    pub total: f64,
}

/// Energies in joules.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EnergyLedger {
    pub w_el: f64,
    pub w_free: f64,
    pub delta_w: f64,
    pub w_rad: f64,
}

impl EnergyLedger {
    pub fn in_ev(&self, table: &ConstantsTable) -> EnergyLedger {
        EnergyLedger {
            w_el: table.to_ev(self.w_el),
            w_free: table.to_ev(self.w_free),
            delta_w: table.to_ev(self.delta_w),
            w_rad: table.to_ev(self.w_rad),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct EtaCoupling {
    /// N/m⁴.
    pub eta: f64,
    pub eta_times_rp: f64,
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HbarEstimate {
    pub r_p_fm: f64,
    pub eta_coupling: f64,
    /// `4π/η`.
    pub value: f64,
    pub reference: f64,
    pub rel_dev: f64,
    pub outside_window: bool,
}
