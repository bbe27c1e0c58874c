//! Verification kernels used as independent oracles for the closed forms.

pub mod poisson;
pub mod quadrature;
pub mod roots;

pub use poisson::{loglog_slope, solve_radial_poisson, PoissonError, RadialGrid, RadialSolution};
pub use quadrature::{integrate_1d, Integral, Quadrature, QuadratureError};
pub use roots::{find_root, RootError};
