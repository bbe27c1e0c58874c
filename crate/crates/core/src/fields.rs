//! Electromagnetic observables in natural units, scaled by ħ (N⁻¹ m⁴).

use std::f64::consts::PI;

use serde::Serialize;

pub type Vec3 = [f64; 3];

fn cross(a: Vec3, b: Vec3) -> Vec3 {
    [
        a[1] * b[2] - a[2] * b[1],
        a[2] * b[0] - a[0] * b[2],
        a[0] * b[1] - a[1] * b[0],
    ]
}

pub fn norm(a: Vec3) -> f64 {
    a.iter().map(|v| v * v).sum::<f64>().sqrt()
}

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct FieldState {
    /// Electric field, N/m³.
    pub e: Vec3,
    /// Magnetic field, N s/m⁴.
    pub b: Vec3,
    /// Velocity, m/s.
    pub u: Vec3,
    /// Charge, J/m².
    pub q: f64,
    /// Lever arm, m.
    pub r: Vec3,
}

impl FieldState {
    pub fn is_finite(&self) -> bool {
        [self.e, self.b, self.u, self.r]
            .iter()
            .flatten()
            .chain(std::iter::once(&self.q))
            .all(|v| v.is_finite())
    }

    /// Nothing in the force law bounds |u|; callers may want to warn.
    pub fn exceeds_light_speed(&self, c: f64) -> bool {
        norm(self.u) >= c
    }

    /// `E/4π + u × B/4π`.
    fn reduced_field(&self) -> Vec3 {
        let m = cross(self.u, self.b);
        [0, 1, 2].map(|i| (self.e[i] + m[i]) / (4.0 * PI))
    }
}

/// `F = ħ q (E/4π + u × B/4π)`, newtons.
pub fn lorentz_force(s: &FieldState, hbar_natural: f64) -> Vec3 {
    s.reduced_field().map(|v| hbar_natural * s.q * v)
}

/// `L = ħ q r × (E/4π + u × B/4π)`, N m.
pub fn angular_momentum(s: &FieldState, hbar_natural: f64) -> Vec3 {
    cross(s.r, lorentz_force(s, hbar_natural))
}

/// `φ_Rad = (ħ/2)[(E/4π)² + c²(B/4π)²]`, N/m².
pub fn radiation_density(e: f64, b: f64, hbar_natural: f64, c: f64) -> f64 {
    let ef = e / (4.0 * PI);
    let bf = c * b / (4.0 * PI);
    0.5 * hbar_natural * (ef * ef + bf * bf)
}

/// `φ_Rad = (E² + c²B²) / (8πη)`, the same density written with the coupling η.
pub fn radiation_density_eta(e: f64, b: f64, eta_coupling: f64, c: f64) -> f64 {
    (e * e + c * c * b * b) / (8.0 * PI * eta_coupling)
}

#[cfg(test)]
mod tests {
    use super::*;

    const HBAR: f64 = 1.0546e-34;
    const C: f64 = 299_792_458.0;

    fn state() -> FieldState {
        FieldState {
            e: [0.3, -1.2, 2.0],
            b: [1.5e-3, 0.7e-3, -2.0e-3],
            u: [1.0e5, -3.0e4, 2.0e4],
            q: 2.5,
            r: [1e-10, 2e-10, -0.5e-10],
        }
    }

    #[test]
    fn pure_electric_force() {
        let s = FieldState {
            e: [1.0, 0.0, 0.0],
            b: [0.0; 3],
            u: [0.0; 3],
            q: 1.0,
            r: [0.0; 3],
        };
        let f = lorentz_force(&s, HBAR);
        assert!((f[0] - HBAR / (4.0 * PI)).abs() < 1e-50);
        assert_eq!(f[1], 0.0);
        assert_eq!(f[2], 0.0);
    }

    #[test]
    fn parallel_velocity_has_no_magnetic_force() {
        let mut s = state();
        s.e = [0.0; 3];
        s.u = s.b.map(|v| 7.0 * v);
        let scale = HBAR * s.q * norm(s.u) * norm(s.b);
        assert!(norm(lorentz_force(&s, HBAR)) <= 1e-15 * scale);
    }

    #[test]
    fn linear_in_charge_and_field() {
        let s = state();
        let f = lorentz_force(&s, HBAR);
        let mut s2 = s;
        s2.q *= 3.0;
        let f2 = lorentz_force(&s2, HBAR);
        for i in 0..3 {
            assert!((f2[i] - 3.0 * f[i]).abs() <= 1e-14 * norm(f));
        }
        let mut only_e = s;
        only_e.b = [0.0; 3];
        let base = lorentz_force(&only_e, HBAR);
        only_e.e = only_e.e.map(|v| 2.0 * v);
        let doubled = lorentz_force(&only_e, HBAR);
        for i in 0..3 {
            assert!((doubled[i] - 2.0 * base[i]).abs() <= 1e-14 * norm(base));
        }
    }

    #[test]
    fn magnetic_term_flips_with_velocity() {
        let mut s = state();
        s.e = [0.0; 3];
        let f = lorentz_force(&s, HBAR);
        s.u = s.u.map(|v| -v);
        let g = lorentz_force(&s, HBAR);
        for i in 0..3 {
            assert!((f[i] + g[i]).abs() <= 1e-14 * norm(f));
        }
    }

    #[test]
    fn angular_momentum_geometry() {
        let s = state();
        let f = lorentz_force(&s, HBAR);
        let l = angular_momentum(&s, HBAR);
        let cos = (0..3).map(|i| s.r[i] * f[i]).sum::<f64>() / (norm(s.r) * norm(f));
        let sin = (1.0 - cos * cos).sqrt();
        assert!((norm(l) / (norm(s.r) * norm(f) * sin) - 1.0).abs() < 1e-12);

        let mut aligned = s;
        aligned.r = f.map(|v| v * 1e20);
        assert!(norm(angular_momentum(&aligned, HBAR)) <= 1e-14 * norm(aligned.r) * norm(f));
    }

    #[test]
    fn radiation_density_basics() {
        assert_eq!(radiation_density(0.0, 0.0, HBAR, C), 0.0);
        let one = radiation_density(1.3, 0.0, HBAR, C);
        let two = radiation_density(2.6, 0.0, HBAR, C);
        assert!((two / one - 4.0).abs() < 1e-14);
    }

    #[test]
    fn eta_and_hbar_forms_agree() {
        let eta = 4.0 * PI / HBAR;
        for (e, b) in [(1.0, 0.0), (3.7e4, 0.0), (2.0, 1e-8), (0.0, 5e-9)] {
            let a = radiation_density(e, b, HBAR, C);
            let bb = radiation_density_eta(e, b, eta, C);
            assert!((a / bb - 1.0).abs() < 1e-14);
        }
    }

    #[test]
    fn light_speed_flag() {
        let mut s = state();
        assert!(!s.exceeds_light_speed(C));
        s.u = [C, 0.0, 0.0];
        assert!(s.exceeds_light_speed(C));
        assert!(s.is_finite());
    }
}
