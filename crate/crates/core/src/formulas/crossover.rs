//! Interpolation between real (`α = 0`) and complex (`α = 1`) Ginibre
//! matrices, and the edge bump that appears for weakly non-real matrices.

use num_complex::Complex64 as C64;
use serde::{Deserialize, Serialize};

use super::radial::log_integrate;
use super::{check_tau, Evaluated};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;
use crate::observables::crossover_d;
use crate::specfun::{erfc, gauss_laguerre};

/// Prefactor in front of the radial integral
/// `c ∫₀^∞ r e^{−2Nr²/(τ(1+α²))} D(z, X₀; r) dr`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CrossoverPrefactor {
    /// `c = 4N/(τ(1+α²))`, a probability measure for every `α`.
    #[default]
    Normalized,
    /// `c = 2N/τ`, which only normalizes at `α = 1`.
    Literal,
}

fn check_alpha(alpha: f64) -> Result<()> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(Error::domain(format!("alpha must lie in [0, 1], got {alpha}")))
    }
}

// rate of the exponential weight in t = r²
fn rate(n: usize, alpha: f64, tau: f64) -> f64 {
    2.0 * n as f64 / (tau * (1.0 + alpha * alpha))
}

fn prefactor_scale(prefactor: CrossoverPrefactor, alpha: f64) -> f64 {
    match prefactor {
        CrossoverPrefactor::Normalized => 1.0,
        CrossoverPrefactor::Literal => (1.0 + alpha * alpha) / 2.0,
    }
}

/// `E |det(z − X)|²` over the crossover ensemble centred at `x0`.
pub fn crossover_average(z: C64, x0: &ComplexMatrix, alpha: f64, tau: f64) -> Result<Evaluated> {
    crossover_average_with(z, x0, alpha, tau, CrossoverPrefactor::Normalized)
}

/// [`crossover_average`] with a choice of prefactor.
///
/// `D` depends on `w` only through `|w|²` and is a polynomial of degree `N`
/// in it, so a Laguerre rule of order `N/2 + 2` in `t = r²` is exact.
pub fn crossover_average_with(
    z: C64,
    x0: &ComplexMatrix,
    alpha: f64,
    tau: f64,
    prefactor: CrossoverPrefactor,
) -> Result<Evaluated> {
    check_alpha(alpha)?;
    check_tau(tau)?;
    let n = x0.n_rows();
    let a = rate(n, alpha, tau);
    let order = n / 2 + 2;
    let rule = gauss_laguerre(order)?;
    let mut acc = C64::new(0.0, 0.0);
    for (&x, &w) in rule.nodes.iter().zip(&rule.weights) {
        if w > 0.0 {
            acc += crossover_d(z, x0, C64::new((x / a).sqrt(), 0.0))? * w;
        }
    }
    Ok(Evaluated {
        value: acc * prefactor_scale(prefactor, alpha),
        quad_order: order,
    })
}

/// Total mass of the radial weight under the chosen prefactor, computed with
/// the same rule as [`crossover_average_with`].
pub fn crossover_measure_mass(n: usize, alpha: f64, tau: f64, prefactor: CrossoverPrefactor) -> Result<f64> {
    check_alpha(alpha)?;
    check_tau(tau)?;
    let rule = gauss_laguerre(n / 2 + 2)?;
    Ok(rule.weights.iter().sum::<f64>() * prefactor_scale(prefactor, alpha))
}

/// `ln E (|z|² + t)^N` for `t ~ Exp(rate 2N/(τ(1+α²)))`: the zero-source
/// average as a function of `z2 = |z|²`, stable for very large `N`.
pub fn crossover_log_average_zero_source(z2: f64, n: usize, alpha: f64, tau: f64) -> Result<f64> {
    check_alpha(alpha)?;
    check_tau(tau)?;
    if n == 0 || z2 < 0.0 {
        return Err(Error::domain("need n >= 1 and |z|^2 >= 0"));
    }
    let nf = n as f64;
    let a = rate(n, alpha, tau);
    // ∫₀^∞ e^{−x} (z2 + x/A)^N dx, peaked where A z2 + x = N
    let phi = |x: f64| -x + nf * (z2 + x / a).ln();
    let peak = (nf - a * z2).max(0.0);
    let slope = (-1.0 + nf / (a * z2 + peak)).abs();
    let mut width = (a * z2 + peak) / nf.sqrt();
    if slope > 0.0 {
        width = width.min(1.0 / slope);
    }
    log_integrate(phi, 0.0, peak, width.max(1e-12))
}

/// Large-`N` edge profile
/// `e^{−a⁴/2} e^{−2a²η²/τ} erfc(√2η²/τ − a²/√2)`, up to a constant.
pub fn crossover_bump(eta: f64, a: f64, tau: f64) -> f64 {
    let a2 = a * a;
    let e2 = eta * eta;
    (-a2 * a2 / 2.0).exp()
        * (-2.0 * a2 * e2 / tau).exp()
        * erfc(2f64.sqrt() * e2 / tau - a2 / 2f64.sqrt())
}

/// [`crossover_bump`] divided by its value at `η = 0`.
pub fn crossover_bump_normalized(eta: f64, a: f64, tau: f64) -> f64 {
    let a2 = a * a;
    let e2 = eta * eta;
    (-2.0 * a2 * e2 / tau).exp() * erfc(2f64.sqrt() * e2 / tau - a2 / 2f64.sqrt())
        / erfc(-a2 / 2f64.sqrt())
}

/// Finite-`N` counterpart of [`crossover_bump_normalized`].
///
/// With `α = a N^{−1/4}` and `|z|² = τ/2 + η²/√N`, returns the zero-source
/// average relative to its value at the edge `|z|² = τ/2`, with the smooth
/// factor `e^{2√N η²/τ}` divided out.
pub fn crossover_bump_finite(eta: f64, a: f64, tau: f64, n: usize) -> Result<f64> {
    let nf = n as f64;
    let alpha = a * nf.powf(-0.25);
    let root = nf.sqrt();
    let edge = tau / 2.0;
    let at = crossover_log_average_zero_source(edge + eta * eta / root, n, alpha, tau)?;
    let base = crossover_log_average_zero_source(edge, n, alpha, tau)?;
    Ok((at - base - 2.0 * root * eta * eta / tau).exp())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::EnsembleSpec;
    use crate::formulas::ginibre_radial_average;
    use crate::montecarlo::estimate;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn scalar_moment() {
        let e = crossover_average(c(0.0, 0.0), &ComplexMatrix::zeros(1, 1), 1.0, 1.0).unwrap();
        assert!((e.value - c(1.0, 0.0)).norm() < 1e-14);
        // N = 1: E|z − x|² = |z − x₀|² + τ(1+α²)/2
        let (z, x0, alpha, tau) = (c(0.3, 0.4), c(-0.2, 0.1), 0.4, 0.9);
        let e = crossover_average(z, &ComplexMatrix::scalar(1, x0), alpha, tau).unwrap();
        let exact = (z - x0).norm_sqr() + tau * (1.0 + alpha * alpha) / 2.0;
        assert!((e.value.re - exact).abs() < 1e-13);
    }

    #[test]
    fn measure_is_normalized() {
        for alpha in [0.0, 0.3, 0.7, 1.0] {
            for n in [1, 4, 9] {
                let m = crossover_measure_mass(n, alpha, 1.0, CrossoverPrefactor::Normalized).unwrap();
                assert!((m - 1.0).abs() < 1e-12);
            }
        }
        let m = crossover_measure_mass(3, 0.5, 1.0, CrossoverPrefactor::Literal).unwrap();
        assert!((m - 0.625).abs() < 1e-12);
    }

    #[test]
    fn complex_limit_is_ginibre() {
        for n in 1..=4 {
            let z = c(0.5, -0.8);
            let a = crossover_average(z, &ComplexMatrix::zeros(n, n), 1.0, 1.2).unwrap();
            let b = ginibre_radial_average(z, n, 1.2).unwrap();
            assert!((a.value.re - b).abs() < 1e-10 * b);
        }
    }

    #[test]
    fn alpha_out_of_range() {
        assert!(crossover_average(c(0.0, 0.0), &ComplexMatrix::zeros(1, 1), 1.5, 1.0).is_err());
    }

    #[test]
    fn agrees_with_sampling() {
        let mut rng = ChaCha8Rng::seed_from_u64(41);
        let x0 = ComplexMatrix::from_fn(2, 2, |_, _| c(rng.random_range(-0.5..0.5), rng.random_range(-0.5..0.5)));
        let z = c(0.4, 0.1);
        let f = crossover_average(z, &x0, 0.5, 1.0).unwrap().value;
        let spec = EnsembleSpec::crossover(x0.clone(), 1.0, 0.5).unwrap();
        let mc = estimate(|x| Ok(c(x.shifted_from(z)?.determinant()?.norm_sqr(), 0.0)), &spec, 40_000, 8).unwrap();
        assert!((mc.mean.re - f.re).abs() < 4.0 * mc.stderr.0);
    }

    #[test]
    fn log_average_matches_direct_sum() {
        for (n, z2, alpha) in [(1, 0.3f64, 0.2), (5, 0.0, 1.0), (12, 0.7, 0.5)] {
            let direct = crossover_average(c(z2.sqrt(), 0.0), &ComplexMatrix::zeros(n, n), alpha, 1.0)
                .unwrap()
                .value
                .re;
            let l = crossover_log_average_zero_source(z2, n, alpha, 1.0).unwrap();
            assert!((l - direct.ln()).abs() < 1e-11, "n={n}");
        }
    }

    #[test]
    fn bump_profile() {
        assert!((crossover_bump(0.0, 0.0, 1.0) - 1.0).abs() < 1e-15);
        let eta: f64 = 0.6;
        assert!((crossover_bump(eta, 0.0, 1.0) - erfc(2f64.sqrt() * eta * eta)).abs() < 1e-15);
        let direct = (-0.5f64).exp() * erfc(-1.0 / 2f64.sqrt());
        assert!((crossover_bump(0.0, 1.0, 1.0) - direct).abs() < 1e-12);
        let tail: Vec<f64> = (10..40).map(|k| crossover_bump(0.1 * k as f64, 1.0, 1.0)).collect();
        assert!(tail.windows(2).all(|p| p[1] < p[0]));
        assert!(tail.last().unwrap() < &1e-10);
        assert!((crossover_bump_normalized(0.0, 1.0, 1.0) - 1.0).abs() < 1e-15);
    }

    #[test]
    fn finite_profile_approaches_asymptotic() {
        let sup = |n: usize| {
            (0..=40)
                .map(|k| {
                    let eta = 0.05 * k as f64;
                    (crossover_bump_finite(eta, 1.0, 1.0, n).unwrap() - crossover_bump_normalized(eta, 1.0, 1.0)).abs()
                })
                .fold(0.0, f64::max)
        };
        let (s2, s3) = (sup(100), sup(1000));
        assert!(s3 < s2, "{s2} {s3}");
        assert!((crossover_bump_finite(0.0, 1.0, 1.0, 100).unwrap() - 1.0).abs() < 1e-14);
    }
}
