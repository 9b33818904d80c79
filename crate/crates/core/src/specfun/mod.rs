//! Special functions and Gaussian quadrature rules.

mod bessel;
mod erfc;
mod hermite;
mod hyp2f1;
mod quadrature;

pub use bessel::{bessel_k0, log_bessel_k0};
pub use erfc::erfc;
pub use hermite::{cauchy_transform_f, cauchy_transform_f_with, monic_pi_hermite};
pub use hyp2f1::hyp2f1_terminating;
pub use quadrature::{
    gauss_hermite, gauss_laguerre, gauss_legendre, refine, QuadConfig, QuadratureFamily,
    QuadratureRule,
};
