//! Dynamic electric charge of an oscillating proton, the natural
//! electromagnetic unit system, the hydrogen energy ledger that fixes the
//! mechanic/electromagnetic coupling (and with it a numerical value of ħ),
//! and dynamic-gravity frequency and flux estimates.
//!
//! Every closed form in the crate has an independent numerical counterpart
//! in [`numerics`]: adaptive quadrature, bracketed root finding and a radial
//! finite-volume Poisson solver.

pub mod constants;
pub mod dimens;
pub mod fields;
pub mod gravity;
pub mod hydrogen;
pub mod numerics;
pub mod oscillator;
pub mod verify;

pub use constants::{ConstantsError, ConstantsTable, Provenance};
pub use dimens::{check_equation, parse_unit, ConsistencyReport, Dimension, Quantity, Verdict};
pub use hydrogen::{EnergyLedger, HydrogenModel};
pub use oscillator::{ProtonOscillation, WoodsSaxonProfile};
