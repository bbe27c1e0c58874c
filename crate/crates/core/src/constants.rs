//! Registry of physical constants with per-key override provenance.
//!
//! Defaults are CODATA-2018 SI values, plus the hydrogen frequency and the
//! natural-unit Planck constant used throughout the crate. Overrides come
//! from a flat `key=value` document (see [`ConstantsTable::load`]).

use std::collections::BTreeMap;
use std::f64::consts::PI;
use std::fmt;
use std::path::Path;

use serde::Serialize;
use thiserror::Error;

/// Joules per electron-volt (exact, SI 2019).
pub const JOULES_PER_EV: f64 = 1.602_176_634e-19;

#[derive(Debug, Error, PartialEq)]
pub enum ConstantsError {
    #[error("line {line}: unknown constant `{key}`")]
    UnknownKey { line: usize, key: String },
    #[error("line {line}: `{key}` is derived from `h` and cannot be overridden")]
    DerivedKey { line: usize, key: String },
    #[error("line {line}: value for `{key}` must be positive and finite, got `{value}`")]
    InvalidValue {
        line: usize,
        key: String,
        value: String,
    },
    #[error("line {line}: expected `key=value`, got `{text}`")]
    Malformed { line: usize, text: String },
    #[error("line {line}: `{key}` given more than once")]
    Duplicate { line: usize, key: String },
    #[error("cannot read constants file {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Provenance {
    Default,
    Overridden,
}

impl fmt::Display for Provenance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Provenance::Default => f.write_str("default"),
            Provenance::Overridden => f.write_str("overridden"),
        }
    }
}

/// Every physical input used by the models. Immutable once built.
#[allow(non_snake_case)]
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct ConstantsTable {
    /// Electron mass, kg.
    pub M_e: f64,
    /// Proton mass, kg.
    pub M_p: f64,
    /// Planck constant, J s.
    pub h: f64,
    /// Reduced Planck constant h/2π, J s. Always derived from `h`.
    pub hbar_si: f64,
    /// Elementary charge, C (SI).
    pub e_charge: f64,
    /// Vacuum permittivity, F/m.
    pub eps0: f64,
    /// Newtonian constant of gravitation, m³ kg⁻¹ s⁻².
    pub G: f64,
    /// Avogadro number, mol⁻¹.
    pub N_A: f64,
    /// Speed of light, m/s.
    pub c: f64,
    /// Earth mass, kg.
    pub M_E: f64,
    /// Earth mean radius, m.
    pub R_E: f64,
    /// Earth orbital radius, m.
    pub R_O: f64,
    /// Earth orbital period (sidereal year), s.
    pub tau_E: f64,
    /// Hydrogen frequency, Hz.
    pub nu_H: f64,
    /// Planck constant reinterpreted in natural units, N⁻¹ m⁴.
    pub hbar_natural: f64,
    #[serde(skip)]
    provenance: BTreeMap<&'static str, Provenance>,
}

const KEYS: [&str; 15] = [
    "M_e",
    "M_p",
    "h",
    "hbar_si",
    "e_charge",
    "eps0",
    "G",
    "N_A",
    "c",
    "M_E",
    "R_E",
    "R_O",
    "tau_E",
    "nu_H",
    "hbar_natural",
];

impl Default for ConstantsTable {
    fn default() -> Self {
        let h = 6.626_070_15e-34;
        ConstantsTable {
            M_e: 9.109_383_701_5e-31,
            M_p: 1.672_621_923_69e-27,
            h,
            hbar_si: h / (2.0 * PI),
            e_charge: 1.602_176_634e-19,
            eps0: 8.854_187_812_8e-12,
            G: 6.674_30e-11,
            N_A: 6.022_140_76e23,
            c: 299_792_458.0,
            M_E: 5.972e24,
            R_E: 6.371e6,
            R_O: 1.496e11,
            tau_E: 3.156e7,
            nu_H: 6.57e15,
            hbar_natural: 1.0546e-34,
            provenance: KEYS.iter().map(|k| (*k, Provenance::Default)).collect(),
        }
    }
}

impl ConstantsTable {
    /// Builds the table from defaults, applying the overrides in `source`
    /// when one is given.
    ///
    /// The override format is one `key=value` pair per line. Blank lines and
    /// anything after `#` are ignored. Keys are the field names of this
    /// struct; `hbar_si` is rejected because it always follows `h`.
    pub fn load(source: Option<&str>) -> Result<Self, ConstantsError> {
        let mut table = ConstantsTable::default();
        let Some(text) = source else {
            return Ok(table);
        };
        for (idx, raw) in text.lines().enumerate() {
            let line = idx + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let (key, value) =
                content
                    .split_once('=')
                    .ok_or_else(|| ConstantsError::Malformed {
                        line,
                        text: content.to_string(),
                    })?;
            let key = key.trim();
            let value = value.trim();
            let canonical = KEYS.iter().copied().find(|k| *k == key).ok_or_else(|| {
                ConstantsError::UnknownKey {
                    line,
                    key: key.to_string(),
                }
            })?;
            if canonical == "hbar_si" {
                return Err(ConstantsError::DerivedKey {
                    line,
                    key: key.to_string(),
                });
            }
            let parsed: f64 = value
                .parse()
                .ok()
                .filter(|v: &f64| v.is_finite() && *v > 0.0)
                .ok_or_else(|| ConstantsError::InvalidValue {
                    line,
                    key: key.to_string(),
                    value: value.to_string(),
                })?;
            if table.provenance[canonical] == Provenance::Overridden {
                return Err(ConstantsError::Duplicate {
                    line,
                    key: key.to_string(),
                });
            }
            *table.slot_mut(canonical) = parsed;
            table.provenance.insert(canonical, Provenance::Overridden);
        }
        table.hbar_si = table.h / (2.0 * PI);
        Ok(table)
    }

    pub fn load_file(path: &Path) -> Result<Self, ConstantsError> {
        let text = std::fs::read_to_string(path).map_err(|e| ConstantsError::Io {
            path: path.display().to_string(),
            message: e.to_string(),
        })?;
        Self::load(Some(&text))
    }

    pub fn provenance(&self, key: &str) -> Option<Provenance> {
        self.provenance.get(key).copied()
    }

    /// Keys that were set by an override document, in sorted order.
    pub fn overridden_keys(&self) -> Vec<&'static str> {
        self.provenance
            .iter()
            .filter(|(_, p)| **p == Provenance::Overridden)
            .map(|(k, _)| *k)
            .collect()
    }

    /// `(key, value, provenance)` for every constant, in declaration order.
    pub fn entries(&self) -> Vec<(&'static str, f64, Provenance)> {
        KEYS.iter()
            .map(|k| (*k, self.get(k).unwrap_or(f64::NAN), self.provenance[k]))
            .collect()
    }

    pub fn get(&self, key: &str) -> Option<f64> {
        let v = match key {
            "M_e" => self.M_e,
            "M_p" => self.M_p,
            "h" => self.h,
            "hbar_si" => self.hbar_si,
            "e_charge" => self.e_charge,
            "eps0" => self.eps0,
            "G" => self.G,
            "N_A" => self.N_A,
            "c" => self.c,
            "M_E" => self.M_E,
            "R_E" => self.R_E,
            "R_O" => self.R_O,
            "tau_E" => self.tau_E,
            "nu_H" => self.nu_H,
            "hbar_natural" => self.hbar_natural,
            _ => return None,
        };
        Some(v)
    }

    fn slot_mut(&mut self, key: &str) -> &mut f64 {
        match key {
            "M_e" => &mut self.M_e,
            "M_p" => &mut self.M_p,
            "h" => &mut self.h,
            "hbar_si" => &mut self.hbar_si,
            "e_charge" => &mut self.e_charge,
            "eps0" => &mut self.eps0,
            "G" => &mut self.G,
            "N_A" => &mut self.N_A,
            "c" => &mut self.c,
            "M_E" => &mut self.M_E,
            "R_E" => &mut self.R_E,
            "R_O" => &mut self.R_O,
            "tau_E" => &mut self.tau_E,
            "nu_H" => &mut self.nu_H,
            "hbar_natural" => &mut self.hbar_natural,
            _ => unreachable!("key validated against KEYS"),
        }
    }

    /// Converts joules to electron-volts.
    pub fn to_ev(&self, joules: f64) -> f64 {
        joules / JOULES_PER_EV
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn defaults_carry_hydrogen_frequency() {
        let t = ConstantsTable::load(None).unwrap();
        assert_eq!(t.nu_H, 6.57e15);
        assert_eq!(t.hbar_natural, 1.0546e-34);
        assert_eq!(t.provenance("nu_H"), Some(Provenance::Default));
    }

    #[test]
    fn reduced_planck_follows_h() {
        let t = ConstantsTable::default();
        assert!((t.hbar_si / t.h - 1.0 / (2.0 * PI)).abs() < 1e-12 / (2.0 * PI));
        let o = ConstantsTable::load(Some("h = 6.0e-34")).unwrap();
        assert!((o.hbar_si / o.h - 1.0 / (2.0 * PI)).abs() < 1e-12);
    }

    #[test]
    fn override_applies_and_records_provenance() {
        let t = ConstantsTable::load(Some("# test\nnu_H=1.0e15  # lower\n\n")).unwrap();
        assert_eq!(t.nu_H, 1.0e15);
        assert_eq!(t.provenance("nu_H"), Some(Provenance::Overridden));
        assert_eq!(t.provenance("M_e"), Some(Provenance::Default));
        assert_eq!(t.overridden_keys(), vec!["nu_H"]);
    }

    #[test]
    fn keys_are_case_sensitive() {
        let t = ConstantsTable::load(Some("M_E=6e24\n")).unwrap();
        assert_eq!(t.M_E, 6e24);
        assert_eq!(t.M_e, ConstantsTable::default().M_e);
    }

    #[test]
    fn rejects_unknown_key() {
        let err = ConstantsTable::load(Some("c=3e8\nfoo=1")).unwrap_err();
        assert_eq!(
            err,
            ConstantsError::UnknownKey {
                line: 2,
                key: "foo".into()
            }
        );
        assert!(err.to_string().contains("foo"));
    }

    #[test]
    fn rejects_bad_values() {
        for bad in ["G=0", "G=-1", "G=inf", "G=NaN", "G=abc"] {
            assert!(
                matches!(
                    ConstantsTable::load(Some(bad)),
                    Err(ConstantsError::InvalidValue { .. })
                ),
                "{bad}"
            );
        }
        assert!(matches!(
            ConstantsTable::load(Some("G 1")),
            Err(ConstantsError::Malformed { .. })
        ));
        assert!(matches!(
            ConstantsTable::load(Some("hbar_si=1e-34")),
            Err(ConstantsError::DerivedKey { .. })
        ));
        assert!(matches!(
            ConstantsTable::load(Some("G=1\nG=2")),
            Err(ConstantsError::Duplicate { .. })
        ));
    }

    #[test]
    fn loading_is_deterministic() {
        let src = "nu_H=6.6e15\nM_E=5.9e24\n";
        let a = ConstantsTable::load(Some(src)).unwrap();
        let b = ConstantsTable::load(Some(src)).unwrap();
        let bits = |t: &ConstantsTable| {
            t.entries()
                .iter()
                .map(|(k, v, p)| (k.to_string(), v.to_bits(), *p))
                .collect::<Vec<_>>()
        };
        assert_eq!(bits(&a), bits(&b));
    }

    #[test]
    fn free_electron_energy_is_27_2_ev() {
        let t = ConstantsTable::default();
        let ev = t.to_ev(t.h * t.nu_H);
        assert!((ev / 27.2 - 1.0).abs() < 0.005, "{ev}");
    }

    #[test]
    fn all_defaults_positive() {
        for (k, v, _) in ConstantsTable::default().entries() {
            assert!(v.is_finite() && v > 0.0, "{k}");
        }
    }
}
