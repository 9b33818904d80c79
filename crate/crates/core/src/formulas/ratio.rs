//! Average of `det(z − H) / det(w − H)` over the GUE with a diagonal real
//! source.

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::specfun::{cauchy_transform_f_with, gauss_hermite, monic_pi_hermite, refine, QuadConfig};

/// Real source eigenvalues `hᵢ` with a multiplicity `nᵢ` for each.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct MultiIndex {
    sources: Vec<f64>,
    multiplicities: Vec<u32>,
}

impl MultiIndex {
    pub fn new(sources: Vec<f64>, multiplicities: Vec<u32>) -> Result<Self> {
        if sources.len() != multiplicities.len() {
            return Err(Error::dimension(format!(
                "{} sources but {} multiplicities",
                sources.len(),
                multiplicities.len()
            )));
        }
        if sources.iter().any(|h| !h.is_finite()) {
            return Err(Error::domain("sources must be finite"));
        }
        Ok(Self {
            sources,
            multiplicities,
        })
    }

    /// Every source with multiplicity one.
    pub fn uniform(sources: &[f64]) -> Result<Self> {
        Self::new(sources.to_vec(), vec![1; sources.len()])
    }

    pub fn sources(&self) -> &[f64] {
        &self.sources
    }

    pub fn multiplicities(&self) -> &[u32] {
        &self.multiplicities
    }

    pub fn total_degree(&self) -> u32 {
        self.multiplicities.iter().sum()
    }

    /// Copy with the multiplicity of factor `i` replaced.
    pub fn with_multiplicity(&self, i: usize, m: u32) -> Self {
        let mut out = self.clone();
        out.multiplicities[i] = m;
        out
    }

    fn factors(&self) -> impl Iterator<Item = (f64, i32)> + '_ {
        self.sources
            .iter()
            .zip(&self.multiplicities)
            .filter(|(_, &m)| m > 0)
            .map(|(&h, &m)| (h, m as i32))
    }
}

fn check_tau_n(tau: f64, n: usize) -> Result<()> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::domain(format!("tau must be positive, got {tau}")));
    }
    if n == 0 {
        return Err(Error::domain("matrix size must be positive"));
    }
    Ok(())
}

/// `π_h(z) = E_s ∏ᵢ (z − i s − hᵢ)^{nᵢ}` for `s ~ N(0, τ/N)`.
///
/// The integrand is a polynomial in `s`, so a Gauss–Hermite rule of order
/// `deg/2 + 1` is exact.
pub fn pi_poly(z: C64, idx: &MultiIndex, tau: f64, n: usize) -> Result<C64> {
    check_tau_n(tau, n)?;
    let order = idx.total_degree() as usize / 2 + 1;
    let rule = gauss_hermite(order)?;
    let scale = (2.0 * tau / n as f64).sqrt();
    let v = rule.integrate(|x| {
        let shift = z - C64::new(0.0, scale * x);
        idx.factors().map(|(h, m)| (shift - h).powi(m)).product()
    });
    Ok(v / std::f64::consts::PI.sqrt())
}

/// `θ_h(w) = E_s ∏ᵢ (w + s − hᵢ)^{−nᵢ}` for `s ~ N(0, τ/N)`, the Gaussian
/// integral taken along the horizontal line through `w`.
pub fn theta_fun(w: C64, idx: &MultiIndex, tau: f64, n: usize) -> Result<C64> {
    theta_fun_with(w, idx, tau, n, &QuadConfig::default()).map(|(v, _)| v)
}

/// [`theta_fun`] with an explicit refinement schedule; returns the accepted
/// Gauss–Hermite order as well.
pub fn theta_fun_with(
    w: C64,
    idx: &MultiIndex,
    tau: f64,
    n: usize,
    cfg: &QuadConfig,
) -> Result<(C64, usize)> {
    check_tau_n(tau, n)?;
    if w.im == 0.0 {
        return Err(Error::domain("Im(w) must be nonzero"));
    }
    let scale = (2.0 * tau / n as f64).sqrt();
    refine(cfg, |order| {
        let rule = gauss_hermite(order)?;
        let v = rule.integrate(|x| {
            let shift = w + scale * x;
            idx.factors().map(|(h, m)| (shift - h).powi(-m)).product()
        });
        Ok(v / std::f64::consts::PI.sqrt())
    })
}

/// Value of the ratio average together with its two constituents.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct RatioResult {
    pub value: C64,
    /// `(π_h(z)·θ_h(w), Σᵢ π_{h−eᵢ}(z)·θ_{h+eᵢ}(w))`; the value is
    /// `first − (τ/N)·second`.
    pub pieces: (C64, C64),
    /// Largest Gauss–Hermite order any θ needed.
    pub quad_order: usize,
}

/// `E det(z − H)/det(w − H)` for `H` drawn from the GUE of variance `τ/N`
/// around `diag(sources)`:
///
/// `π_h(z) θ_h(w) − (τ/N) Σᵢ π_{h−eᵢ}(z) θ_{h+eᵢ}(w)`,
///
/// where `h − eᵢ` drops factor `i` and `h + eᵢ` doubles it.
pub fn ratio_average(z: C64, w: C64, sources: &[f64], tau: f64) -> Result<RatioResult> {
    ratio_average_with(z, w, sources, tau, &QuadConfig::default())
}

pub fn ratio_average_with(
    z: C64,
    w: C64,
    sources: &[f64],
    tau: f64,
    cfg: &QuadConfig,
) -> Result<RatioResult> {
    let n = sources.len();
    let idx = MultiIndex::uniform(sources)?;
    let (theta, mut quad_order) = theta_fun_with(w, &idx, tau, n, cfg)?;
    let first = pi_poly(z, &idx, tau, n)? * theta;
    let mut correction = C64::new(0.0, 0.0);
    for i in 0..n {
        let p = pi_poly(z, &idx.with_multiplicity(i, 0), tau, n)?;
        let (t, order) = theta_fun_with(w, &idx.with_multiplicity(i, 2), tau, n, cfg)?;
        quad_order = quad_order.max(order);
        correction += p * t;
    }
    Ok(RatioResult {
        value: first - correction * (tau / n as f64),
        pieces: (first, correction),
        quad_order,
    })
}

/// `γ_k = (N/τ)^k / k! · √(N/(2πτ))`.
pub fn gamma_k(k: usize, n: usize, tau: f64) -> f64 {
    let ratio = n as f64 / tau;
    let mut g = (ratio / (2.0 * std::f64::consts::PI)).sqrt();
    for j in 1..=k {
        g *= ratio / j as f64;
    }
    g
}

/// Zero-source form `γ_{N−1} π_N(z) f_{N−1}(w) − τ γ_N f_N(w) π_{N−1}(z)`,
/// built from the monic Hermite polynomials and their Cauchy transforms.
pub fn gue_ratio_reduction(z: C64, w: C64, n: usize, tau: f64) -> Result<C64> {
    check_tau_n(tau, n)?;
    let cfg = QuadConfig::default();
    let sigma2 = tau / n as f64;
    let (f_lo, _) = cauchy_transform_f_with(n - 1, w, tau, n, &cfg)?;
    let (f_hi, _) = cauchy_transform_f_with(n, w, tau, n, &cfg)?;
    let p_hi = monic_pi_hermite(n, sigma2, z);
    let p_lo = monic_pi_hermite(n - 1, sigma2, z);
    Ok(p_hi * f_lo * gamma_k(n - 1, n, tau) - f_hi * p_lo * (tau * gamma_k(n, n, tau)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ensembles::EnsembleSpec;
    use crate::linalg::ComplexMatrix;
    use crate::montecarlo::estimate;
    use crate::observables::ratio_d;
    use crate::specfun::erfc;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    fn rel(a: C64, b: C64) -> f64 {
        (a - b).norm() / b.norm()
    }

    #[test]
    fn pi_examples() {
        let (z, h) = (c(0.4, -1.1), 0.3);
        let idx = MultiIndex::uniform(&[h]).unwrap();
        assert!(rel(pi_poly(z, &idx, 0.8, 1).unwrap(), z - h) < 1e-14);
        let idx = MultiIndex::new(vec![0.1, 0.2], vec![0, 0]).unwrap();
        assert_eq!(pi_poly(z, &idx, 1.0, 2).unwrap(), c(1.0, 0.0));
        for n in 1..=8 {
            let idx = MultiIndex::uniform(&vec![0.0; n]).unwrap();
            let p = pi_poly(z, &idx, 1.3, n).unwrap();
            let q = monic_pi_hermite(n, 1.3 / n as f64, z);
            assert!(rel(p, q) < 1e-10, "n={n}");
        }
    }

    #[test]
    fn pi_is_monic() {
        let idx = MultiIndex::new(vec![0.3, -0.5, 1.1], vec![2, 1, 3]).unwrap();
        let deg = idx.total_degree() as usize;
        // deg-th forward difference = deg! × leading coefficient
        let mut diff = C64::new(0.0, 0.0);
        let mut binom = 1.0;
        for j in 0..=deg {
            let sign = if (deg - j) % 2 == 0 { 1.0 } else { -1.0 };
            diff += pi_poly(c(j as f64, 0.0), &idx, 1.0, 3).unwrap() * (sign * binom);
            binom *= (deg - j) as f64 / (j + 1) as f64;
        }
        let fact: f64 = (1..=deg).map(|k| k as f64).product();
        assert!((diff / fact - 1.0).norm() < 1e-8);
        // π/z^deg = 1 − (Σ nᵢhᵢ)/z + O(1/z²)
        let z = C64::from_polar(1e4, 1.2);
        let r = pi_poly(z, &idx, 1.0, 3).unwrap() / z.powu(deg as u32);
        let first = 2.0 * 0.3 - 0.5 + 3.0 * 1.1;
        assert!((r - 1.0 + first / z).norm() < 1e-6);
        let zero = MultiIndex::new(vec![0.0; 3], vec![2, 1, 3]).unwrap();
        let r = pi_poly(z, &zero, 0.1, 3).unwrap() / z.powu(deg as u32);
        assert!((r - 1.0).norm() < 1e-8);
    }

    #[test]
    fn theta_examples() {
        let idx = MultiIndex::new(vec![0.2, -0.4], vec![2, 1]).unwrap();
        let w = c((1e6f64 - 1.0).sqrt(), 1.0);
        let t = theta_fun(w, &idx, 1.0, 2).unwrap();
        assert!((t * w.powu(3) - 1.0).norm() < 1e-3);

        let w = c(0.5, 0.8);
        let a = theta_fun(w, &idx, 1.0, 2).unwrap();
        let b = theta_fun(w.conj(), &idx, 1.0, 2).unwrap();
        assert!(rel(b, a.conj()) < 1e-12);

        assert!(theta_fun(c(0.5, 0.0), &idx, 1.0, 2).is_err());
    }

    #[test]
    fn theta_single_factor_closed_form() {
        // E 1/(w + s) for s ~ N(0,1) at w = i: −i √(π/2) e^{1/2} erfc(1/√2)
        let idx = MultiIndex::uniform(&[0.0]).unwrap();
        let t = theta_fun(c(0.0, 1.0), &idx, 1.0, 1).unwrap();
        let m = (std::f64::consts::PI / 2.0).sqrt() * 0.5f64.exp() * erfc(0.5f64.sqrt());
        assert!(rel(t, c(0.0, -m)) < 1e-9);
    }

    #[test]
    fn scalar_oracle() {
        // E (1 − x)/(i − x), x ~ N(0, 1)
        let r = ratio_average(c(1.0, 0.0), c(0.0, 1.0), &[0.0], 1.0).unwrap();
        let reference = c(0.344320457581201528, -0.655679542418798472);
        assert!(rel(r.value, reference) < 1e-8);
        let (first, corr) = r.pieces;
        assert!(rel(first - corr, r.value) < 1e-14);
    }

    #[test]
    fn large_w_limit() {
        let sources = [0.1, -0.3, 0.25];
        let z = c(0.7, 0.2);
        let w = c((1e6f64 - 1.0).sqrt(), 1.0);
        let r = ratio_average(z, w, &sources, 1.0).unwrap();
        let p = pi_poly(z, &MultiIndex::uniform(&sources).unwrap(), 1.0, 3).unwrap();
        assert!(rel(r.value * w.powu(3), p) < 1e-3);
    }

    #[test]
    fn gamma_ratio_is_inverse_tau() {
        for n in 1..10 {
            let r = gamma_k(n, n, 0.5) / gamma_k(n - 1, n, 0.5);
            assert!((r - 2.0).abs() < 1e-14);
        }
    }

    #[test]
    fn reduction_matches_general_formula() {
        for (n, z, w) in [
            (1, c(1.0, 0.0), c(0.0, 1.0)),
            (4, c(0.7, 0.0), c(0.5, 0.8)),
            (6, c(-0.3, 0.4), c(1.2, -0.6)),
        ] {
            let a = ratio_average(z, w, &vec![0.0; n], 1.0).unwrap().value;
            let b = gue_ratio_reduction(z, w, n, 1.0).unwrap();
            assert!(rel(a, b) < 1e-8, "n={n}: {a} vs {b}");
        }
    }

    #[test]
    fn agrees_with_sampling() {
        let sources = [0.1, -0.3];
        let (z, w) = (c(0.7, 0.0), c(0.5, 0.8));
        let exact = ratio_average(z, w, &sources, 1.0).unwrap().value;
        let spec = EnsembleSpec::gue(ComplexMatrix::from_real_diag(&sources), 1.0).unwrap();
        let mc = estimate(|h| ratio_d(z, w, h), &spec, 40_000, 7).unwrap();
        assert!((mc.mean.re - exact.re).abs() < 4.0 * mc.stderr.0);
        assert!((mc.mean.im - exact.im).abs() < 4.0 * mc.stderr.1);
    }
}
