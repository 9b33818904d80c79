//! Ginibre matrices with separable row and column correlations,
//! `X = Γ Y Ω` for positive diagonal `Γ`, `Ω`.

use num_complex::Complex64 as C64;

use super::radial::{exp_average_log, plane_rule};
use super::{check_tau, Evaluated};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::observables::correlated_d;
use crate::specfun::{refine, QuadConfig};

/// `E_u D^{(Γ,Ω)}(z, x0; u)` for a complex Gaussian `u` with
/// `E|u|² = τ/N`.
pub fn correlated_average(
    z: C64,
    x0: &ComplexMatrix,
    gamma: &[f64],
    omega: &[f64],
    tau: f64,
) -> Result<Evaluated> {
    check_tau(tau)?;
    let n = x0.n_rows();
    let cfg = QuadConfig {
        start_order: n + 1,
        max_order: 64 * (n + 1),
        rel_tol: 1e-9,
    };
    let (value, quad_order) = refine(&cfg, |angles| {
        let mut acc = C64::new(0.0, 0.0);
        for (u, w) in plane_rule(tau / n as f64, n, angles)? {
            acc += correlated_d(z, x0, gamma, omega, u)? * w;
        }
        Ok(acc)
    })?;
    Ok(Evaluated { value, quad_order })
}

/// Zero-source value `(2N/τ) ∫₀^∞ ρ e^{−Nρ²/τ} ∏ᵢ (|z|² + ρ² Γᵢᵢ⁻² Ωᵢᵢ⁻²) dρ`.
pub fn forrester_rains_reduction(
    z: C64,
    gamma: &[f64],
    omega: &[f64],
    tau: f64,
    n: usize,
) -> Result<f64> {
    check_tau(tau)?;
    if gamma.len() != n || omega.len() != n {
        return Err(Error::dimension("gamma and omega must have n entries"));
    }
    if gamma.iter().chain(omega).any(|&g| !(g > 0.0 && g.is_finite())) {
        return Err(Error::domain("gamma and omega must be strictly positive"));
    }
    let z2 = z.norm_sqr();
    let coef: Vec<f64> = gamma
        .iter()
        .zip(omega)
        .map(|(g, o)| 1.0 / (g * g * o * o))
        .collect();
    exp_average_log(tau / n as f64, n, |t| {
        coef.iter().map(|c| (z2 + t * c).ln()).sum()
    })
}
