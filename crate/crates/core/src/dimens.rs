//! Dimensional analysis over the three base units m, kg and s.
//!
//! In the natural electromagnetic system charge carries the dimension of
//! energy per area (`C = J/m² = kg s⁻²`), so every electromagnetic unit
//! reduces to a product of powers of m, kg and s. The unit parser accepts a
//! flat product/quotient of table symbols such as `C s^2/kg` or `N m^-4`.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Div, Mul};

use num_rational::Rational64;
use num_traits::{One, Zero};
use serde::Serialize;
use thiserror::Error;

#[derive(Debug, Error, PartialEq)]
pub enum DimensError {
    #[error("unknown unit symbol `{symbol}` at position {position}")]
    UnknownSymbol { symbol: String, position: usize },
    #[error("malformed exponent at position {position}: {reason}")]
    BadExponent { position: usize, reason: String },
    #[error("parse error at position {position}: {reason}")]
    Syntax { position: usize, reason: String },
    #[error("dimension mismatch: {left} vs {right}")]
    Mismatch { left: Dimension, right: Dimension },
    #[error("division by a zero-valued quantity")]
    DivideByZero,
}

/// Rational exponents of (m, kg, s), always in lowest terms.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Dimension {
    m: Rational64,
    kg: Rational64,
    s: Rational64,
}

impl Dimension {
    pub const fn new_int(m: i64, kg: i64, s: i64) -> Self {
        Dimension {
            m: Rational64::new_raw(m, 1),
            kg: Rational64::new_raw(kg, 1),
            s: Rational64::new_raw(s, 1),
        }
    }

    pub fn new(m: Rational64, kg: Rational64, s: Rational64) -> Self {
        // Rational64 normalises on construction and arithmetic.
        Dimension { m, kg, s }
    }

    pub const fn dimensionless() -> Self {
        Self::new_int(0, 0, 0)
    }

    pub fn m_exp(&self) -> Rational64 {
        self.m
    }

    pub fn kg_exp(&self) -> Rational64 {
        self.kg
    }

    pub fn s_exp(&self) -> Rational64 {
        self.s
    }

    pub fn is_dimensionless(&self) -> bool {
        self.m.is_zero() && self.kg.is_zero() && self.s.is_zero()
    }

    pub fn powi(self, n: i64) -> Self {
        self.pow(Rational64::from_integer(n))
    }

    pub fn pow(self, p: Rational64) -> Self {
        Dimension::new(self.m * p, self.kg * p, self.s * p)
    }

    pub fn inv(self) -> Self {
        self.powi(-1)
    }
}

impl Mul for Dimension {
    type Output = Dimension;
    fn mul(self, rhs: Dimension) -> Dimension {
        Dimension::new(self.m + rhs.m, self.kg + rhs.kg, self.s + rhs.s)
    }
}

impl Div for Dimension {
    type Output = Dimension;
    #[allow(clippy::suspicious_arithmetic_impl)]
    fn div(self, rhs: Dimension) -> Dimension {
        self * rhs.inv()
    }
}

fn fmt_exp(r: Rational64) -> String {
    if r.is_integer() {
        r.to_integer().to_string()
    } else {
        format!("({}/{})", r.numer(), r.denom())
    }
}

/// Canonical rendering `m^a kg^b s^c`; zero exponents are omitted, unit
/// exponents are written bare and the dimensionless value renders as `1`.
/// Non-integer exponents are parenthesised, e.g. `m^(1/2)`.
impl fmt::Display for Dimension {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = [("m", self.m), ("kg", self.kg), ("s", self.s)]
            .into_iter()
            .filter(|(_, e)| !e.is_zero())
            .map(|(sym, e)| {
                if e.is_one() {
                    sym.to_string()
                } else {
                    format!("{sym}^{}", fmt_exp(e))
                }
            })
            .collect();
        if parts.is_empty() {
            f.write_str("1")
        } else {
            f.write_str(&parts.join(" "))
        }
    }
}

impl Serialize for Dimension {
    fn serialize<S: serde::Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(self)
    }
}

/// Symbol table for the natural electromagnetic unit system.
#[derive(Debug, Clone)]
pub struct UnitTable {
    units: BTreeMap<&'static str, Dimension>,
}

pub const METRE: Dimension = Dimension::new_int(1, 0, 0);
pub const KILOGRAM: Dimension = Dimension::new_int(0, 1, 0);
pub const SECOND: Dimension = Dimension::new_int(0, 0, 1);
pub const NEWTON: Dimension = Dimension::new_int(1, 1, -2);
pub const JOULE: Dimension = Dimension::new_int(2, 1, -2);
/// Natural charge unit, J/m².
pub const COULOMB: Dimension = Dimension::new_int(0, 1, -2);
/// Electric field, N/m³.
pub const E_FIELD: Dimension = Dimension::new_int(-2, 1, -2);
/// Magnetic field, N s/m⁴.
pub const B_FIELD: Dimension = Dimension::new_int(-3, 1, -1);
pub const VELOCITY: Dimension = Dimension::new_int(1, 0, -1);
/// Inverse permittivity, m⁴/N.
pub const INV_EPSILON: Dimension = Dimension::new_int(3, -1, 2);
/// Mechanic/electromagnetic coupling, N/m⁴.
pub const ETA_COUPLING: Dimension = Dimension::new_int(-3, 1, -2);
/// Natural-unit Planck constant, N⁻¹ m⁴.
pub const HBAR_NATURAL: Dimension = Dimension::new_int(3, -1, 2);
/// Charge density, C/m³.
pub const CHARGE_DENSITY: Dimension = Dimension::new_int(-3, 1, -2);
/// Energy density, N/m² = J/m³.
pub const ENERGY_DENSITY: Dimension = Dimension::new_int(-1, 1, -2);

impl Default for UnitTable {
    fn default() -> Self {
        let entries: [(&'static str, Dimension); 22] = [
            ("1", Dimension::dimensionless()),
            ("m", METRE),
            ("kg", KILOGRAM),
            ("s", SECOND),
            ("N", NEWTON),
            ("J", JOULE),
            ("W", Dimension::new_int(2, 1, -3)),
            ("Pa", Dimension::new_int(-1, 1, -2)),
            ("Hz", Dimension::new_int(0, 0, -1)),
            ("C", COULOMB),
            ("E", E_FIELD),
            ("B", B_FIELD),
            ("u", VELOCITY),
            ("c", VELOCITY),
            ("inv_eps", INV_EPSILON),
            ("eps", INV_EPSILON.inv()),
            ("eta", ETA_COUPLING),
            ("beta", Dimension::dimensionless()),
            ("hbar", HBAR_NATURAL),
            ("sigma", CHARGE_DENSITY),
            ("q", COULOMB),
            ("rho", Dimension::new_int(-3, 1, 0)),
        ];
        UnitTable {
            units: entries.into_iter().collect(),
        }
    }
}

impl UnitTable {
    pub fn get(&self, symbol: &str) -> Option<Dimension> {
        self.units.get(symbol).copied()
    }

    pub fn symbols(&self) -> impl Iterator<Item = (&'static str, Dimension)> + '_ {
        self.units.iter().map(|(k, v)| (*k, *v))
    }

    /// Parses a flat unit expression into its reduced dimension.
    ///
    /// Grammar: factors separated by whitespace, `·` or `*`; at most one `/`,
    /// after which every factor is in the denominator. A factor is a symbol
    /// optionally followed by `^` and a signed integer, or a parenthesised
    /// rational such as `^(1/2)`. Positions in errors are character offsets.
    pub fn parse(&self, expr: &str) -> Result<Dimension, DimensError> {
        let chars: Vec<char> = expr.chars().collect();
        let mut pos = 0;
        let mut acc = Dimension::dimensionless();
        let mut in_denominator = false;
        let mut factors_in_group = 0usize;
        let mut total_factors = 0usize;

        while pos < chars.len() {
            let ch = chars[pos];
            if ch.is_whitespace() || ch == '·' || ch == '*' {
                pos += 1;
                continue;
            }
            if ch == '/' {
                if in_denominator {
                    return Err(DimensError::Syntax {
                        position: pos,
                        reason: "only one `/` is allowed".into(),
                    });
                }
                if factors_in_group == 0 {
                    return Err(DimensError::Syntax {
                        position: pos,
                        reason: "`/` must follow a numerator".into(),
                    });
                }
                in_denominator = true;
                factors_in_group = 0;
                pos += 1;
                continue;
            }
            if !(ch.is_alphanumeric() || ch == '_') {
                return Err(DimensError::Syntax {
                    position: pos,
                    reason: format!("unexpected character `{ch}`"),
                });
            }
            let start = pos;
            while pos < chars.len() && (chars[pos].is_alphanumeric() || chars[pos] == '_') {
                pos += 1;
            }
            let symbol: String = chars[start..pos].iter().collect();
            let dim = self.get(&symbol).ok_or(DimensError::UnknownSymbol {
                symbol: symbol.clone(),
                position: start,
            })?;
            let mut exp = Rational64::one();
            if pos < chars.len() && chars[pos] == '^' {
                pos += 1;
                let (e, next) = parse_exponent(&chars, pos)?;
                exp = e;
                pos = next;
            }
            let factor = dim.pow(exp);
            acc = if in_denominator {
                acc / factor
            } else {
                acc * factor
            };
            factors_in_group += 1;
            total_factors += 1;
        }

        if total_factors == 0 {
            return Err(DimensError::Syntax {
                position: 0,
                reason: "empty unit expression".into(),
            });
        }
        if in_denominator && factors_in_group == 0 {
            return Err(DimensError::Syntax {
                position: chars.len(),
                reason: "missing denominator after `/`".into(),
            });
        }
        Ok(acc)
    }
}

fn parse_int(chars: &[char], mut pos: usize) -> Result<(i64, usize), DimensError> {
    let start = pos;
    if pos < chars.len() && (chars[pos] == '-' || chars[pos] == '+') {
        pos += 1;
    }
    let digits_start = pos;
    while pos < chars.len() && chars[pos].is_ascii_digit() {
        pos += 1;
    }
    if digits_start == pos {
        return Err(DimensError::BadExponent {
            position: start,
            reason: "expected a signed integer".into(),
        });
    }
    let text: String = chars[start..pos].iter().collect();
    let value = text.parse::<i64>().map_err(|e| DimensError::BadExponent {
        position: start,
        reason: e.to_string(),
    })?;
    Ok((value, pos))
}

fn parse_exponent(chars: &[char], pos: usize) -> Result<(Rational64, usize), DimensError> {
    if pos < chars.len() && chars[pos] == '(' {
        let (num, p) = parse_int(chars, pos + 1)?;
        if p >= chars.len() || chars[p] != '/' {
            return Err(DimensError::BadExponent {
                position: p,
                reason: "expected `/` in rational exponent".into(),
            });
        }
        let (den, p) = parse_int(chars, p + 1)?;
        if p >= chars.len() || chars[p] != ')' {
            return Err(DimensError::BadExponent {
                position: p,
                reason: "expected `)`".into(),
            });
        }
        if den == 0 {
            return Err(DimensError::BadExponent {
                position: pos,
                reason: "zero denominator".into(),
            });
        }
        Ok((Rational64::new(num, den), p + 1))
    } else {
        let (n, p) = parse_int(chars, pos)?;
        Ok((Rational64::from_integer(n), p))
    }
}

/// Parses with the default natural-unit table.
pub fn parse_unit(expr: &str) -> Result<Dimension, DimensError> {
    UnitTable::default().parse(expr)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Verdict {
    Consistent,
    Inconsistent,
}

#[derive(Debug, Clone, Serialize)]
pub struct TermCheck {
    pub dimension: Dimension,
    /// `term / target`; dimensionless when the term matches.
    pub mismatch: Dimension,
}

#[derive(Debug, Clone, Serialize)]
pub struct ConsistencyReport {
    pub target: Dimension,
    pub terms: Vec<TermCheck>,
    pub verdict: Verdict,
}

impl ConsistencyReport {
    pub fn is_consistent(&self) -> bool {
        self.verdict == Verdict::Consistent
    }

    /// Indices and mismatch ratios of every offending term.
    pub fn offending(&self) -> impl Iterator<Item = (usize, Dimension)> + '_ {
        self.terms
            .iter()
            .enumerate()
            .filter(|(_, t)| !t.mismatch.is_dimensionless())
            .map(|(i, t)| (i, t.mismatch))
    }
}

/// Compares each term of an equation against the target dimension.
///
/// An empty term list is vacuously consistent.
pub fn check_equation(target: Dimension, terms: &[Dimension]) -> ConsistencyReport {
    let terms: Vec<TermCheck> = terms
        .iter()
        .map(|d| TermCheck {
            dimension: *d,
            mismatch: *d / target,
        })
        .collect();
    let verdict = if terms.iter().all(|t| t.mismatch.is_dimensionless()) {
        Verdict::Consistent
    } else {
        Verdict::Inconsistent
    };
    ConsistencyReport {
        target,
        terms,
        verdict,
    }
}

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Quantity {
    pub value: f64,
    pub dim: Dimension,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum QuantityOp {
    Add,
    Sub,
    Mul,
    Div,
    Pow(i32),
}

impl Quantity {
    pub fn new(value: f64, dim: Dimension) -> Self {
        Quantity { value, dim }
    }

    pub fn try_add(self, rhs: Quantity) -> Result<Quantity, DimensError> {
        self.same_dim(rhs)?;
        Ok(Quantity::new(self.value + rhs.value, self.dim))
    }

    pub fn try_sub(self, rhs: Quantity) -> Result<Quantity, DimensError> {
        self.same_dim(rhs)?;
        Ok(Quantity::new(self.value - rhs.value, self.dim))
    }

    pub fn powi(self, n: i32) -> Quantity {
        Quantity::new(self.value.powi(n), self.dim.powi(n as i64))
    }

    fn same_dim(&self, rhs: Quantity) -> Result<(), DimensError> {
        if self.dim == rhs.dim {
            Ok(())
        } else {
            Err(DimensError::Mismatch {
                left: self.dim,
                right: rhs.dim,
            })
        }
    }
}

impl Mul for Quantity {
    type Output = Quantity;
    fn mul(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value * rhs.value, self.dim * rhs.dim)
    }
}

impl Div for Quantity {
    type Output = Quantity;
    fn div(self, rhs: Quantity) -> Quantity {
        Quantity::new(self.value / rhs.value, self.dim / rhs.dim)
    }
}

/// Applies `op` to `a` and `b`; `b` is ignored for `Pow`.
pub fn quantity_arith(a: Quantity, b: Quantity, op: QuantityOp) -> Result<Quantity, DimensError> {
    match op {
        QuantityOp::Add => a.try_add(b),
        QuantityOp::Sub => a.try_sub(b),
        QuantityOp::Mul => Ok(a * b),
        QuantityOp::Div => {
            if b.value == 0.0 {
                Err(DimensError::DivideByZero)
            } else {
                Ok(a / b)
            }
        }
        QuantityOp::Pow(n) => Ok(a.powi(n)),
    }
}

impl fmt::Display for Quantity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dim.is_dimensionless() {
            write!(f, "{}", self.value)
        } else {
            write!(f, "{} {}", self.value, self.dim)
        }
    }
}

/// Equations with a known expected verdict, used by the units check.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum StandardEquation {
    /// `F = q(ε⁻¹E + u×B)`; the magnetic term is off by N/m⁴.
    LorentzNaive,
    /// `F = (q/η)(E + u×B)`.
    LorentzRepaired,
    /// `φ_Rad = (ħ/2)[(E/4π)² + c²(B/4π)²]`.
    RadiationDensity,
    /// `F = ħ q (E/4π + u×B/4π)` and `L = ħ q r×(...)`.
    ForceNatural,
}

impl StandardEquation {
    pub const ALL: [StandardEquation; 4] = [
        StandardEquation::LorentzNaive,
        StandardEquation::LorentzRepaired,
        StandardEquation::RadiationDensity,
        StandardEquation::ForceNatural,
    ];

    pub fn id(&self) -> &'static str {
        match self {
            StandardEquation::LorentzNaive => "lorentz-naive",
            StandardEquation::LorentzRepaired => "lorentz-repaired",
            StandardEquation::RadiationDensity => "radiation-density",
            StandardEquation::ForceNatural => "force-natural",
        }
    }

    pub fn from_id(id: &str) -> Option<Self> {
        Self::ALL.into_iter().find(|e| e.id() == id)
    }

    /// Whether the equation is expected to balance dimensionally.
    pub fn expected(&self) -> Verdict {
        match self {
            StandardEquation::LorentzNaive => Verdict::Inconsistent,
            _ => Verdict::Consistent,
        }
    }

    /// Named terms and their target dimension, written as unit expressions.
    pub fn terms(&self) -> (&'static str, Vec<(&'static str, &'static str)>) {
        match self {
            StandardEquation::LorentzNaive => {
                ("N", vec![("q eps^-1 E", "q inv_eps E"), ("q u B", "q u B")])
            }
            StandardEquation::LorentzRepaired => (
                "N",
                vec![("(q/eta) E", "q E/eta"), ("(q/eta) u B", "q u B/eta")],
            ),
            StandardEquation::RadiationDensity => (
                "N/m^2",
                vec![
                    ("(hbar/2)(E/4pi)^2", "hbar E^2"),
                    ("(hbar/2) c^2 (B/4pi)^2", "hbar c^2 B^2"),
                ],
            ),
            StandardEquation::ForceNatural => (
                "N",
                vec![
                    ("hbar q E/4pi", "hbar q E"),
                    ("hbar q u B/4pi", "hbar q u B"),
                ],
            ),
        }
    }

    pub fn check(&self) -> Result<ConsistencyReport, DimensError> {
        let table = UnitTable::default();
        let (target, terms) = self.terms();
        let dims = terms
            .iter()
            .map(|(_, expr)| table.parse(expr))
            .collect::<Result<Vec<_>, _>>()?;
        Ok(check_equation(table.parse(target)?, &dims))
    }
}

/// Angular momentum companion of [`StandardEquation::ForceNatural`], target N m.
pub fn check_angular_momentum() -> Result<ConsistencyReport, DimensError> {
    let table = UnitTable::default();
    let dims = ["m hbar q E", "m hbar q u B"]
        .iter()
        .map(|e| table.parse(e))
        .collect::<Result<Vec<_>, _>>()?;
    Ok(check_equation(table.parse("N m")?, &dims))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn dim(m: i64, kg: i64, s: i64) -> Dimension {
        Dimension::new_int(m, kg, s)
    }

    #[test]
    fn beta_unit_is_dimensionless_in_natural_units() {
        assert!(parse_unit("C s^2/kg").unwrap().is_dimensionless());
        assert!(parse_unit("C m^2/J").unwrap().is_dimensionless());
    }

    #[test]
    fn base_and_derived() {
        assert_eq!(parse_unit("m").unwrap(), dim(1, 0, 0));
        assert_eq!(parse_unit("N m^-4").unwrap(), dim(-3, 1, -2));
        assert_eq!(parse_unit("N·m^-4").unwrap(), dim(-3, 1, -2));
        assert_eq!(parse_unit("J/m^2").unwrap(), parse_unit("C").unwrap());
        assert_eq!(parse_unit("C/m^3").unwrap(), parse_unit("N m^-4").unwrap());
        assert_eq!(parse_unit("1/s").unwrap(), parse_unit("Hz").unwrap());
    }

    #[test]
    fn table_entries_match_their_definitions() {
        assert_eq!(parse_unit("N/m^3").unwrap(), E_FIELD);
        assert_eq!(parse_unit("N s/m^4").unwrap(), B_FIELD);
        assert_eq!(parse_unit("m^4/N").unwrap(), INV_EPSILON);
        assert_eq!(parse_unit("N^-1 m^4").unwrap(), HBAR_NATURAL);
        assert_eq!(parse_unit("J/m^3").unwrap(), ENERGY_DENSITY);
        assert_eq!(parse_unit("eta").unwrap(), parse_unit("sigma").unwrap());
        assert_eq!(parse_unit("eps").unwrap(), ETA_COUPLING);
    }

    #[test]
    fn unknown_symbol_reports_position() {
        assert_eq!(
            parse_unit("kg foo"),
            Err(DimensError::UnknownSymbol {
                symbol: "foo".into(),
                position: 3
            })
        );
    }

    #[test]
    fn malformed_exponents() {
        assert!(matches!(
            parse_unit("m^"),
            Err(DimensError::BadExponent { position: 2, .. })
        ));
        assert!(matches!(
            parse_unit("m^x"),
            Err(DimensError::BadExponent { position: 2, .. })
        ));
        assert!(matches!(
            parse_unit("m^(1/0)"),
            Err(DimensError::BadExponent { .. })
        ));
    }

    #[test]
    fn syntax_errors() {
        assert!(matches!(parse_unit(""), Err(DimensError::Syntax { .. })));
        assert!(matches!(parse_unit("/s"), Err(DimensError::Syntax { .. })));
        assert!(matches!(parse_unit("m/"), Err(DimensError::Syntax { .. })));
        assert!(matches!(
            parse_unit("m/s/s"),
            Err(DimensError::Syntax { position: 3, .. })
        ));
        assert!(matches!(
            parse_unit("(m)"),
            Err(DimensError::Syntax { position: 0, .. })
        ));
    }

    #[test]
    fn rendering() {
        assert_eq!(dim(-3, 1, -2).to_string(), "m^-3 kg s^-2");
        assert_eq!(Dimension::dimensionless().to_string(), "1");
        let half = Dimension::new(
            Rational64::new(2, 4),
            Rational64::zero(),
            Rational64::zero(),
        );
        assert_eq!(half.to_string(), "m^(1/2)");
        assert_eq!(parse_unit(&half.to_string()).unwrap(), half);
    }

    #[test]
    fn naive_lorentz_force_magnetic_term_off_by_eta() {
        let q = COULOMB;
        let electric = q * INV_EPSILON * E_FIELD;
        let magnetic = q * VELOCITY * B_FIELD;
        let report = check_equation(NEWTON, &[electric, magnetic]);
        assert_eq!(report.verdict, Verdict::Inconsistent);
        let off: Vec<_> = report.offending().collect();
        assert_eq!(off, vec![(1, parse_unit("N/m^4").unwrap())]);
    }

    #[test]
    fn repaired_lorentz_force_is_consistent() {
        let scale = COULOMB / ETA_COUPLING;
        let report = check_equation(NEWTON, &[scale * E_FIELD, scale * VELOCITY * B_FIELD]);
        assert!(report.is_consistent());
    }

    #[test]
    fn natural_radiation_density_is_energy_density() {
        let e_term = HBAR_NATURAL * E_FIELD.powi(2);
        let b_term = HBAR_NATURAL * VELOCITY.powi(2) * B_FIELD.powi(2);
        assert!(check_equation(ENERGY_DENSITY, &[e_term, b_term]).is_consistent());
    }

    #[test]
    fn natural_force_and_angular_momentum() {
        let force = HBAR_NATURAL * COULOMB * E_FIELD;
        assert!(check_equation(NEWTON, &[force, force * VELOCITY / VELOCITY]).is_consistent());
        assert!(check_equation(NEWTON * METRE, &[METRE * force]).is_consistent());
    }

    #[test]
    fn standard_equations_meet_expectations() {
        for eq in StandardEquation::ALL {
            let report = eq.check().unwrap();
            assert_eq!(report.verdict, eq.expected(), "{}", eq.id());
        }
        let naive = StandardEquation::LorentzNaive.check().unwrap();
        assert_eq!(
            naive.offending().collect::<Vec<_>>(),
            vec![(1, ETA_COUPLING)]
        );
        assert!(check_angular_momentum().unwrap().is_consistent());
        assert_eq!(
            StandardEquation::from_id("force-natural"),
            Some(StandardEquation::ForceNatural)
        );
        assert_eq!(StandardEquation::from_id("bogus"), None);
    }

    #[test]
    fn quantity_arithmetic() {
        let n = |v| Quantity::new(v, NEWTON);
        assert_eq!(
            quantity_arith(n(3.0), n(4.0), QuantityOp::Add).unwrap(),
            n(7.0)
        );
        assert_eq!(
            quantity_arith(n(3.0), n(4.0), QuantityOp::Sub).unwrap(),
            n(-1.0)
        );
        let m = Quantity::new(2.0, METRE);
        assert_eq!(
            quantity_arith(m, m, QuantityOp::Mul).unwrap(),
            Quantity::new(4.0, dim(2, 0, 0))
        );
        let ratio = quantity_arith(
            Quantity::new(1.0, COULOMB),
            Quantity::new(1.0, parse_unit("J/m^2").unwrap()),
            QuantityOp::Div,
        )
        .unwrap();
        assert_eq!(ratio, Quantity::new(1.0, Dimension::dimensionless()));
        assert_eq!(
            quantity_arith(m, m, QuantityOp::Pow(3)).unwrap(),
            Quantity::new(8.0, dim(3, 0, 0))
        );
    }

    #[test]
    fn add_mismatch_carries_both_dimensions() {
        let err = quantity_arith(
            Quantity::new(1.0, NEWTON),
            Quantity::new(1.0, METRE),
            QuantityOp::Add,
        )
        .unwrap_err();
        assert_eq!(
            err,
            DimensError::Mismatch {
                left: NEWTON,
                right: METRE
            }
        );
        assert!(matches!(
            quantity_arith(
                Quantity::new(1.0, METRE),
                Quantity::new(0.0, METRE),
                QuantityOp::Div
            ),
            Err(DimensError::DivideByZero)
        ));
    }
}
