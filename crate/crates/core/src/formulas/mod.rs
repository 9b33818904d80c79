//! Closed-form and low-dimensional integral evaluators for the averages.
//!
//! Each average over an `N × N` ensemble is rewritten as a Gaussian
//! integral over a handful of scalar parameters and evaluated by quadrature.
//! Where a parameter integral would need more than four real dimensions
//! (the duality with `k ≥ 2`) it is sampled instead.

mod correlated;
mod crossover;
mod duality;
mod product;
pub(crate) mod radial;
mod ratio;

pub use correlated::{correlated_average, forrester_rains_reduction};
pub use crossover::{
    crossover_average, crossover_average_with, crossover_bump, crossover_bump_finite,
    crossover_bump_normalized, crossover_log_average_zero_source, crossover_measure_mass,
    CrossoverPrefactor,
};
pub use duality::{
    duality_check, duality_lhs, duality_rhs, duality_rhs_k1, ginibre_radial_average, DualityRhs,
};
pub use product::{
    product2_average, product2_direct, product2_quadrature, product2_reduced, ReducedForm,
};
pub use ratio::{
    gamma_k, gue_ratio_reduction, pi_poly, ratio_average, ratio_average_with, theta_fun,
    theta_fun_with, MultiIndex, RatioResult,
};

use num_complex::Complex64 as C64;
use serde::Serialize;

/// A quadrature result and the rule order that produced it.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Evaluated {
    pub value: C64,
    pub quad_order: usize,
}

pub(crate) fn check_tau(tau: f64) -> crate::Result<()> {
    if tau > 0.0 && tau.is_finite() {
        Ok(())
    } else {
        Err(crate::Error::Domain(format!("tau must be positive, got {tau}")))
    }
}
