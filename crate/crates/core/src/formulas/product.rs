//! `|det(z − X₁X₂)|²` averaged over a product of two independent Ginibre
//! matrices.

use num_complex::Complex64 as C64;
use rand_distr::{Distribution, Normal};
use serde::{Deserialize, Serialize};

use super::radial::{log_integrate, log_sum_exp, plane_rule};
use super::{check_tau, Evaluated};
use crate::ensembles::EnsembleSpec;
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::montecarlo::{estimate_with, McConfig, McEstimate};
use crate::observables::{product2_d, VBlock};
use crate::specfun::{gauss_laguerre, hyp2f1_terminating, log_bessel_k0};

fn check_sources(x10: &ComplexMatrix, x20: &ComplexMatrix) -> Result<usize> {
    let n = x10.n_rows();
    if !x10.is_square() || x20.n_rows() != n || x20.n_cols() != n {
        return Err(Error::dimension("sources must be square and of equal size"));
    }
    Ok(n)
}

/// `E_{v,w} D(z, x10, x20; 1, v, w)` over independent complex Gaussians
/// with `E|v|² = E|w|² = τ/N`, sampled.
pub fn product2_average(
    z: C64,
    x10: &ComplexMatrix,
    x20: &ComplexMatrix,
    tau: f64,
    v_block: VBlock,
    mc: &McConfig,
) -> Result<McEstimate> {
    check_tau(tau)?;
    let n = check_sources(x10, x20)?;
    let normal = Normal::new(0.0, (tau / (2.0 * n as f64)).sqrt()).expect("finite width");
    let one = C64::new(1.0, 0.0);
    estimate_with(
        |rng| {
            let mut draw = || C64::new(normal.sample(rng), normal.sample(rng));
            (draw(), draw())
        },
        |&(v, w)| product2_d(z, x10, x20, one, v, w, v_block),
        mc,
    )
}

/// The same parameter average by a tensor product of two plane rules.
///
/// The integrand has degree at most `N` in each of `v, v̄, w, w̄`, so
/// `N + 1` angles and a Laguerre order of `N/2 + 2` per parameter make the
/// rule exact.
pub fn product2_quadrature(
    z: C64,
    x10: &ComplexMatrix,
    x20: &ComplexMatrix,
    tau: f64,
    v_block: VBlock,
) -> Result<Evaluated> {
    check_tau(tau)?;
    let n = check_sources(x10, x20)?;
    let pts = plane_rule(tau / n as f64, n, n + 1)?;
    let one = C64::new(1.0, 0.0);
    let mut acc = C64::new(0.0, 0.0);
    for &(v, wv) in &pts {
        for &(w, ww) in &pts {
            acc += product2_d(z, x10, x20, one, v, w, v_block)? * (wv * ww);
        }
    }
    Ok(Evaluated {
        value: acc,
        quad_order: n + 1,
    })
}

/// Direct route: `E |det(z − X₁X₂)|²` over the two Ginibre matrices.
pub fn product2_direct(
    z: C64,
    x10: &ComplexMatrix,
    x20: &ComplexMatrix,
    tau: f64,
    mc: &McConfig,
) -> Result<McEstimate> {
    let spec = EnsembleSpec::two_ginibre(x10.clone(), x20.clone(), tau)?;
    estimate_with(
        |rng| spec.sample(rng),
        |draw| match draw {
            crate::ensembles::Draw::Pair(a, b) => {
                let d = a.matmul(b)?.shifted_from(z)?.determinant()?;
                Ok(C64::new(d.norm_sqr(), 0.0))
            }
            crate::ensembles::Draw::Single(_) => unreachable!("two-ginibre draws come in pairs"),
        },
        mc,
    )
}

/// Zero-source reduced representations.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum ReducedForm {
    /// Two radial integrals over `p, q` with a terminating ₂F₁.
    Hyp2f1TwoD,
    /// One integral over `t = pq` against `t K₀(2Nt/τ)`.
    BesselK0OneD,
}

// ln[(|z|² + y)^N ₂F₁((1−N)/2, −N/2; 1; 4|z|²y/(|z|²+y)²)]
fn log_kernel(z2: f64, y: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    let s = z2 + y;
    if s == 0.0 {
        return Ok(if n == 0 { 0.0 } else { f64::NEG_INFINITY });
    }
    let x = 4.0 * z2 * y / (s * s);
    let f = hyp2f1_terminating((1.0 - nf) / 2.0, -nf / 2.0, 1.0, x)?;
    Ok(nf * s.ln() + f.ln())
}

/// `E |det(z − X₁X₂)|²` at zero source via one of the reduced integrals.
pub fn product2_reduced(z: C64, n: usize, tau: f64, form: ReducedForm) -> Result<f64> {
    check_tau(tau)?;
    if n == 0 {
        return Err(Error::domain("matrix size must be positive"));
    }
    let z2 = z.norm_sqr();
    let mean = tau / n as f64;
    match form {
        ReducedForm::Hyp2f1TwoD => {
            // t_p = p², t_q = q² are independent Exp(mean τ/N); the kernel is
            // a polynomial of degree N in each
            let rule = gauss_laguerre(n / 2 + 2)?;
            let mut terms = Vec::with_capacity(rule.order * rule.order);
            for (&xp, &wp) in rule.nodes.iter().zip(&rule.weights) {
                for (&xq, &wq) in rule.nodes.iter().zip(&rule.weights) {
                    if wp > 0.0 && wq > 0.0 {
                        terms.push(wp.ln() + wq.ln() + log_kernel(z2, mean * xp * mean * xq, n)?);
                    }
                }
            }
            Ok(log_sum_exp(&terms).exp())
        }
        ReducedForm::BesselK0OneD => {
            // (2N/τ)² ∫₀^∞ t K₀(2Nt/τ) kernel(t²) dt
            let lambda = n as f64 / tau;
            let phi = |t: f64| {
                2.0 * (2.0 * lambda).ln()
                    + t.ln()
                    + log_bessel_k0(2.0 * lambda * t).unwrap_or(f64::NEG_INFINITY)
                    + log_kernel(z2, t * t, n).unwrap_or(f64::NEG_INFINITY)
            };
            // coarse search for the mode on a log grid
            let peak = (0..=400)
                .map(|j| 1e-4 * (1e7f64).powf(j as f64 / 400.0) / lambda)
                .max_by(|a, b| phi(*a).total_cmp(&phi(*b)))
                .expect("non-empty grid");
            let width = ((n + 1) as f64).sqrt() / lambda;
            Ok(log_integrate(phi, 0.0, peak, width)?.exp())
        }
    }
}
