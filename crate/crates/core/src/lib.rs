//! Averages of products and ratios of characteristic polynomials over Gaussian
//! random matrix ensembles with an external source.
//!
//! Every average is available through two independent routes:
//!
//! * a Monte Carlo route that samples the explicit Gaussian measure
//!   ([`ensembles`], [`montecarlo`]) and evaluates the determinant
//!   ([`observables`]) on each draw, and
//! * a heat-kernel route that evaluates a low-dimensional integral over the
//!   deformation parameters by quadrature ([`formulas`], [`specfun`]).
//!
//! [`verify`] pits the two routes against each other and also checks reduction
//! identities and the parameter-space heat equations by finite differences.
//! The `rmtdiff` binary ([`cli`]) drives all of it from the command line.
//!
//! ```
//! use num_complex::Complex64 as C64;
//! use rmtdiff::formulas::ratio_average;
//!
//! // N = 1, source 0, tau = 1: E[(z - x) / (w - x)] for x ~ N(0, 1).
//! let r = ratio_average(C64::new(1.0, 0.0), C64::new(0.0, 1.0), &[0.0], 1.0).unwrap();
//! assert!((r.value - C64::new(0.344320457581, -0.655679542419)).norm() < 1e-9);
//! ```

pub mod cli;
pub mod ensembles;
mod error;
pub mod formulas;
pub mod linalg;
pub mod montecarlo;
pub mod observables;
pub mod specfun;
pub mod verify;

pub use error::{Error, Result};
pub use linalg::ComplexMatrix;
pub use num_complex::Complex64 as C64;
