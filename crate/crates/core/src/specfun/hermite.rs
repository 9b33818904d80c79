use num_complex::Complex64 as C64;

use super::quadrature::{gauss_hermite, refine, QuadConfig};
use crate::error::{Error, Result};

/// Monic orthogonal polynomial of degree `k` for the Gaussian weight of
/// variance `sigma2`: `π_{k+1} = z π_k − σ² k π_{k−1}`.
pub fn monic_pi_hermite(k: usize, sigma2: f64, z: C64) -> C64 {
    let mut prev = C64::new(0.0, 0.0);
    let mut cur = C64::new(1.0, 0.0);
    for j in 0..k {
        let next = z * cur - prev * (sigma2 * j as f64);
        prev = cur;
        cur = next;
    }
    cur
}

/// `f_k(w) = ∫ e^{−N s²/(2τ)} π_k(s) / (w − s) ds` over the real line, with
/// `π_k` the monic polynomial of variance `τ/N`.
pub fn cauchy_transform_f(k: usize, w: C64, tau: f64, n: usize) -> Result<C64> {
    cauchy_transform_f_with(k, w, tau, n, &QuadConfig::default()).map(|(v, _)| v)
}

/// [`cauchy_transform_f`] with an explicit refinement schedule; also returns
/// the Gauss–Hermite order that was accepted.
pub fn cauchy_transform_f_with(
    k: usize,
    w: C64,
    tau: f64,
    n: usize,
    cfg: &QuadConfig,
) -> Result<(C64, usize)> {
    if w.im == 0.0 {
        return Err(Error::domain("Im(w) must be nonzero"));
    }
    if !(tau > 0.0) || n == 0 {
        return Err(Error::domain("tau and n must be positive"));
    }
    let sigma2 = tau / n as f64;
    // s = √(2σ²) x turns the weight into e^{−x²}
    let scale = (2.0 * sigma2).sqrt();
    let cfg = QuadConfig {
        start_order: cfg.start_order.max(k / 2 + 1),
        ..*cfg
    };
    refine(&cfg, |order| {
        let rule = gauss_hermite(order)?;
        let v = rule.integrate(|x| {
            let s = C64::new(scale * x, 0.0);
            monic_pi_hermite(k, sigma2, s) / (w - s)
        });
        Ok(v * scale)
    })
}
