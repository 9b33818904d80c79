//! Shared quadratures over complex Gaussian parameters and radial weights.

use num_complex::Complex64 as C64;

use crate::error::Result;
use crate::specfun::{gauss_laguerre, gauss_legendre};

/// Points and weights (summing to one) for `E f(u)`, `u` a circular complex
/// Gaussian with `E|u|² = mean_sq`.
///
/// Exact when `f` is a polynomial in `u, ū` of degree at most `degree` in
/// each and `angles > degree`.
pub(crate) fn plane_rule(mean_sq: f64, degree: usize, angles: usize) -> Result<Vec<(C64, f64)>> {
    let radial = gauss_laguerre(degree / 2 + 2)?;
    let mut out = Vec::with_capacity(radial.order * angles);
    for (&x, &w) in radial.nodes.iter().zip(&radial.weights) {
        if w == 0.0 {
            continue;
        }
        let r = (mean_sq * x).sqrt();
        for m in 0..angles {
            let phi = 2.0 * std::f64::consts::PI * m as f64 / angles as f64;
            out.push((C64::from_polar(r, phi), w / angles as f64));
        }
    }
    Ok(out)
}

/// `E_t exp(log_f(t))` for `t ~ Exp(mean)`, accumulated in log domain.
///
/// Exact for `exp(log_f)` a polynomial of degree at most `degree`.
pub(crate) fn exp_average_log(mean: f64, degree: usize, log_f: impl Fn(f64) -> f64) -> Result<f64> {
    let rule = gauss_laguerre(degree / 2 + 2)?;
    let terms: Vec<f64> = rule
        .nodes
        .iter()
        .zip(&rule.weights)
        .filter(|(_, &w)| w > 0.0)
        .map(|(&x, &w)| w.ln() + log_f(mean * x))
        .collect();
    Ok(log_sum_exp(&terms).exp())
}

pub(crate) fn log_sum_exp(terms: &[f64]) -> f64 {
    let max = terms.iter().cloned().fold(f64::NEG_INFINITY, f64::max);
    if max == f64::NEG_INFINITY {
        return max;
    }
    max + terms.iter().map(|t| (t - max).exp()).sum::<f64>().ln()
}

/// `ln ∫_a^∞ e^{φ(x)} dx` for a unimodal `φ` peaking near `peak` with
/// curvature scale `width`.
///
/// Composite Gauss–Legendre panels of size `width/2` are laid out from the
/// peak in both directions until `φ` has dropped by 60 below its maximum.
/// Left of `a + width` the panels shrink geometrically toward `a` so an
/// integrable endpoint singularity is resolved.
pub(crate) fn log_integrate(
    phi: impl Fn(f64) -> f64,
    a: f64,
    peak: f64,
    width: f64,
) -> Result<f64> {
    const DROP: f64 = 60.0;
    let rule = gauss_legendre(24)?;
    let h = width / 2.0;
    let mut terms = Vec::new();
    let mut max = f64::NEG_INFINITY;
    let panel = |lo: f64, hi: f64, terms: &mut Vec<f64>, max: &mut f64| {
        for (x, w) in rule.mapped(lo, hi) {
            let v = w.ln() + phi(x);
            *max = max.max(v);
            terms.push(v);
        }
    };
    let floor = a + width;
    let start = peak.max(floor);
    // rightwards
    let mut lo = start;
    loop {
        let hi = lo + h;
        panel(lo, hi, &mut terms, &mut max);
        lo = hi;
        if phi(lo) < max - DROP {
            break;
        }
    }
    // leftwards down to a + width, then geometric toward a
    let mut hi = start;
    while hi > floor {
        let lo = (hi - h).max(floor);
        panel(lo, hi, &mut terms, &mut max);
        hi = lo;
        if phi(hi) < max - DROP {
            return Ok(log_sum_exp(&terms));
        }
    }
    let mut span = width;
    for _ in 0..60 {
        let lo = a + span / 4.0;
        panel(lo, a + span, &mut terms, &mut max);
        span /= 4.0;
        if phi(lo) < max - DROP {
            break;
        }
    }
    panel(a, a + span, &mut terms, &mut max);
    Ok(log_sum_exp(&terms))
}
