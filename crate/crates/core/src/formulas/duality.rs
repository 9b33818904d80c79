//! The duality between an `N × N` Ginibre average of `∏ᵢ|det(zᵢ − X)|²` and a
//! `k × k` Gaussian average of the block determinant.

use num_complex::Complex64 as C64;
use serde::Serialize;

use super::radial::{exp_average_log, plane_rule};
use super::{check_tau, Evaluated};
use crate::ensembles::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::montecarlo::{estimate_with, McConfig, McEstimate};
use crate::observables::keacp_d;
use crate::specfun::{refine, QuadConfig};
use crate::verify::{crosscheck_two, CheckReport, Z_THRESHOLD};

/// `E (|z|² + t)^N` for `t ~ Exp(mean τ/N)`: the one-point duality at zero
/// source, `(2N/τ) ∫₀^∞ ρ e^{−Nρ²/τ} (|z|² + ρ²)^N dρ`.
pub fn ginibre_radial_average(z: C64, n: usize, tau: f64) -> Result<f64> {
    check_tau(tau)?;
    let z2 = z.norm_sqr();
    let nf = n as f64;
    exp_average_log(tau / nf, n, |t| nf * (z2 + t).ln())
}

/// `E_b D(z, x0; b)` over a scalar complex Gaussian `b` with
/// `E|b|² = τ/N`, by a Laguerre × equispaced-angle rule.
///
/// The angle count starts at `N + 1`, where the rule is already exact, and
/// is doubled once to confirm.
pub fn duality_rhs_k1(z: C64, x0: &ComplexMatrix, tau: f64) -> Result<Evaluated> {
    check_tau(tau)?;
    let n = x0.n_rows();
    let cfg = QuadConfig {
        start_order: n + 1,
        max_order: 64 * (n + 1),
        rel_tol: 1e-9,
    };
    let (value, quad_order) = refine(&cfg, |angles| {
        let mut acc = C64::new(0.0, 0.0);
        for (b, w) in plane_rule(tau / n as f64, n, angles)? {
            acc += keacp_d(&[z], &ComplexMatrix::scalar(1, b), x0)? * w;
        }
        Ok(acc)
    })?;
    Ok(Evaluated { value, quad_order })
}

/// The parameter-space side: exact quadrature for one spectral argument,
/// Monte Carlo over `k × k` Gaussian `B` otherwise.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum DualityRhs {
    Quadrature(Evaluated),
    Sampled(McEstimate),
}

impl DualityRhs {
    pub fn value(&self) -> C64 {
        match self {
            DualityRhs::Quadrature(e) => e.value,
            DualityRhs::Sampled(m) => m.mean,
        }
    }
}

fn check_zs(zs: &[C64]) -> Result<()> {
    if zs.is_empty() {
        Err(Error::dimension("need at least one spectral argument"))
    } else {
        Ok(())
    }
}

pub fn duality_rhs(zs: &[C64], x0: &ComplexMatrix, tau: f64, mc: &McConfig) -> Result<DualityRhs> {
    check_zs(zs)?;
    if zs.len() == 1 {
        return duality_rhs_k1(zs[0], x0, tau).map(DualityRhs::Quadrature);
    }
    check_tau(tau)?;
    let k = zs.len();
    // Ginibre of size k has entry variance τ'/k; match τ/N
    let spec = EnsembleSpec::ginibre(ComplexMatrix::zeros(k, k), tau * k as f64 / x0.n_rows() as f64)?;
    let est = estimate_with(|rng| spec.sample(rng), |b| keacp_d(zs, b.first(), x0), mc)?;
    Ok(DualityRhs::Sampled(est))
}

/// The matrix-space side, `E_X ∏ᵢ |det(zᵢ − X)|²` over the Ginibre ensemble
/// centred at `x0`, by Monte Carlo.
pub fn duality_lhs(zs: &[C64], x0: &ComplexMatrix, tau: f64, mc: &McConfig) -> Result<McEstimate> {
    check_zs(zs)?;
    let k = zs.len();
    let spec = EnsembleSpec::ginibre(x0.clone(), tau)?;
    let zero = ComplexMatrix::zeros(k, k);
    estimate_with(|rng| spec.sample(rng), |x| keacp_d(zs, &zero, x.first()), mc)
}

/// Both sides of the duality and their z-score. The parameter side uses
/// `seed + 1` when it is sampled.
pub fn duality_check(
    zs: &[C64],
    x0: &ComplexMatrix,
    tau: f64,
    samples: u64,
    seed: u64,
) -> Result<CheckReport> {
    let start = std::time::Instant::now();
    let lhs = duality_lhs(zs, x0, tau, &McConfig::new(samples, seed))?;
    let rhs = duality_rhs(zs, x0, tau, &McConfig::new(samples, seed.wrapping_add(1)))?;
    let name = format!("duality k={} N={}", zs.len(), x0.n_rows());
    let mut report = match rhs {
        DualityRhs::Quadrature(e) => crate::verify::crosscheck(e.value, &lhs, Z_THRESHOLD),
        DualityRhs::Sampled(m) => crosscheck_two(&lhs, &m, Z_THRESHOLD),
    };
    report.name = name;
    report.runtime = start.elapsed().as_secs_f64();
    Ok(report)
}
