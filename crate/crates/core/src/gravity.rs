//! Dynamic-gravity estimates: frequency ratio, radiation band and the
//! energy flux at Earth's orbit.
//!
//! Two quantities here share a symbol elsewhere: the electromagnetic
//! frequency (`omega_em`, scaled into the gravity band) and Earth's orbital
//! angular frequency (`omega_orbital`, from the sidereal year).

use std::f64::consts::PI;

use serde::Serialize;
use thiserror::Error;

use crate::constants::ConstantsTable;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum GravityError {
    #[error("invalid gravity scenario: {0}")]
    InvalidScenario(String),
    #[error("invalid frequency band [{lo:e}, {hi:e}]")]
    InvalidBand { lo: f64, hi: f64 },
}

#[allow(non_snake_case)]
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GravityScenario {
    pub M_E: f64,
    pub R_E: f64,
    pub R_O: f64,
    pub tau_E: f64,
    pub N_A: f64,
    pub c: f64,
    pub hbar_natural: f64,
    /// Dimensional calibration of the static field ratio; 1 by default.
    pub k_u: f64,
}

impl GravityScenario {
    pub fn from_constants(table: &ConstantsTable, k_u: f64) -> Result<Self, GravityError> {
        let s = GravityScenario {
            M_E: table.M_E,
            R_E: table.R_E,
            R_O: table.R_O,
            tau_E: table.tau_E,
            N_A: table.N_A,
            c: table.c,
            hbar_natural: table.hbar_natural,
            k_u,
        };
        s.validate()?;
        Ok(s)
    }

    pub fn validate(&self) -> Result<(), GravityError> {
        let vals = [
            self.M_E,
            self.R_E,
            self.R_O,
            self.tau_E,
            self.N_A,
            self.c,
            self.hbar_natural,
            self.k_u,
        ];
        if !vals.iter().all(|v| v.is_finite() && *v > 0.0) {
            return Err(GravityError::InvalidScenario(
                "all parameters must be positive and finite".into(),
            ));
        }
        if self.R_E >= self.R_O {
            return Err(GravityError::InvalidScenario(format!(
                "Earth radius {:e} m must be below orbital radius {:e} m",
                self.R_E, self.R_O
            )));
        }
        Ok(())
    }

    pub fn omega_orbital(&self) -> f64 {
        2.0 * PI / self.tau_E
    }

    /// Mean terrestrial density, kg/m³.
    pub fn earth_density(&self) -> f64 {
        3.0 * self.M_E / (4.0 * PI * self.R_E.powi(3))
    }

    /// Centripetal acceleration on the orbit, m/s².
    pub fn centripetal_acceleration(&self) -> f64 {
        self.omega_orbital().powi(2) * self.R_O
    }
}

/// Bounds on the electromagnetic-to-gravity frequency ratio.
#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrequencyRatio {
    /// From the static field ratio, `√(k_u 4π ε₀ G M / e)`.
    pub eta_lo: f64,
    /// From the unit-source field ratio, `√(ε₀ G)`.
    pub eta_hi: f64,
}

pub fn freq_ratio_bounds(constants: &ConstantsTable, mass: f64, k_u: f64) -> FrequencyRatio {
    let eta_hi = (constants.eps0 * constants.G).sqrt();
    let eta_lo = (k_u * 4.0 * PI * constants.eps0 * constants.G * mass / constants.e_charge).sqrt();
    FrequencyRatio { eta_lo, eta_hi }
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FrequencyBand {
    pub lo: f64,
    pub hi: f64,
}

impl FrequencyBand {
    pub fn new(lo: f64, hi: f64) -> Result<Self, GravityError> {
        if !(lo.is_finite() && hi.is_finite() && lo > 0.0 && lo <= hi) {
            return Err(GravityError::InvalidBand { lo, hi });
        }
        Ok(FrequencyBand { lo, hi })
    }

    pub fn overlaps(&self, lo: f64, hi: f64) -> bool {
        self.lo <= hi && lo <= self.hi
    }
}

/// Scales the electromagnetic frequency `nu_em` (Hz) by the ratio bounds.
pub fn gravity_band(nu_em: f64, bounds: FrequencyRatio) -> Result<FrequencyBand, GravityError> {
    if !(nu_em > 0.0 && nu_em.is_finite()) {
        return Err(GravityError::InvalidBand {
            lo: bounds.eta_lo * nu_em,
            hi: bounds.eta_hi * nu_em,
        });
    }
    FrequencyBand::new(bounds.eta_lo * nu_em, bounds.eta_hi * nu_em)
}

/// Solar gravity field `ρ_E a_C`, in natural field units (N/m³).
pub fn solar_field(s: &GravityScenario) -> f64 {
    s.earth_density() * s.centripetal_acceleration()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct GravityFlux {
    /// Energy density at the orbit, N/m².
    pub phi_g: f64,
    /// Energy flux, W/m².
    pub j_g: f64,
}

/// Energy density `(ħ/2)(G_S/4π)²` for a given field and the flux `φ_G N_A c`.
pub fn flux_from_field(s: &GravityScenario, g_s: f64) -> GravityFlux {
    let phi_g = 0.5 * s.hbar_natural * (g_s / (4.0 * PI)).powi(2);
    GravityFlux {
        phi_g,
        j_g: phi_g * s.N_A * s.c,
    }
}

pub fn gravity_flux(s: &GravityScenario) -> GravityFlux {
    flux_from_field(s, solar_field(s))
}
