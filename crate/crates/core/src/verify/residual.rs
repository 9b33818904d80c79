//! Finite-difference residuals of the parameter-space heat equations.

use num_complex::Complex64 as C64;

use crate::error::{Error, Result};
use crate::formulas::{ratio_average, ratio_average_with};
use crate::specfun::QuadConfig;

/// Values of a function of `(τ, z, w)` on the seven-point central stencil
/// with real-direction steps.
#[derive(Clone, Copy, Debug, PartialEq)]
pub struct Stencil<T> {
    pub center: T,
    pub tau: (T, T),
    pub z: (T, T),
    pub w: (T, T),
    pub step: f64,
}

impl<T: Copy> Stencil<T> {
    pub fn evaluate(
        f: impl Fn(f64, C64, C64) -> Result<T>,
        tau: f64,
        z: C64,
        w: C64,
        step: f64,
    ) -> Result<Self> {
        if !(step > 0.0) || tau - step <= 0.0 {
            return Err(Error::domain(format!("step {step} must lie in (0, tau)")));
        }
        Ok(Self {
            center: f(tau, z, w)?,
            tau: (f(tau + step, z, w)?, f(tau - step, z, w)?),
            z: (f(tau, z + step, w)?, f(tau, z - step, w)?),
            w: (f(tau, z, w + step)?, f(tau, z, w - step)?),
            step,
        })
    }

    pub fn map<U>(&self, g: impl Fn(T) -> U) -> Stencil<U> {
        Stencil {
            center: g(self.center),
            tau: (g(self.tau.0), g(self.tau.1)),
            z: (g(self.z.0), g(self.z.1)),
            w: (g(self.w.0), g(self.w.1)),
            step: self.step,
        }
    }
}

/// `|∂_τ F − (1/2N)(∂²_w − ∂²_z) F + g|` by central differences.
pub fn heat_residual(s: &Stencil<C64>, n: usize, inhomogeneity: C64) -> f64 {
    let h = s.step;
    let dtau = (s.tau.0 - s.tau.1) / (2.0 * h);
    let dzz = (s.z.0 - s.center * 2.0 + s.z.1) / (h * h);
    let dww = (s.w.0 - s.center * 2.0 + s.w.1) / (h * h);
    (dtau - (dww - dzz) / (2.0 * n as f64) + inhomogeneity).norm()
}

/// Residuals `(res1, res4)` of the ratio-average heat equations:
///
/// * `∂_τ F¹ = (1/2N)(∂²_w − ∂²_z) F¹ − (1/N) F⁴` for `F¹` the ratio average,
/// * `∂_τ F⁴ = (1/2N)(∂²_w − ∂²_z) F⁴` for `F⁴ = Σᵢ π_{h−eᵢ} θ_{h+eᵢ}`.
///
/// All stencil points share one Gauss–Hermite order, twice the order the
/// centre needed, so that the differences see a single smooth function.
pub fn pde_residual_example1(
    z: C64,
    w: C64,
    tau: f64,
    sources: &[f64],
    step: f64,
) -> Result<(f64, f64)> {
    let n = sources.len();
    let order = ratio_average(z, w, sources, tau)?.quad_order;
    let cfg = QuadConfig::fixed(2 * order);
    let s = Stencil::evaluate(
        |t, z, w| ratio_average_with(z, w, sources, t, &cfg).map(|r| (r.value, r.pieces.1)),
        tau,
        z,
        w,
        step,
    )?;
    let f1 = s.map(|p| p.0);
    let f4 = s.map(|p| p.1);
    let res1 = heat_residual(&f1, n, f4.center / n as f64);
    let res4 = heat_residual(&f4, n, C64::new(0.0, 0.0));
    Ok((res1, res4))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn c(re: f64, im: f64) -> C64 {
        C64::new(re, im)
    }

    #[test]
    fn second_order_convergence() {
        let (z, w, tau, src) = (c(0.3, 0.1), c(0.5, 0.8), 1.0, [0.2, -0.4]);
        let (a1, a4) = pde_residual_example1(z, w, tau, &src, 0.02).unwrap();
        let (b1, b4) = pde_residual_example1(z, w, tau, &src, 0.01).unwrap();
        assert!((3.2..=4.8).contains(&(a1 / b1)), "res1 ratio {}", a1 / b1);
        assert!((3.2..=4.8).contains(&(a4 / b4)), "res4 ratio {}", a4 / b4);
    }

    #[test]
    fn small_homogeneous_residual() {
        let (z, w, tau, src) = (c(0.3, 0.1), c(0.5, 0.8), 1.0, [0.2, -0.4]);
        let (_, r4) = pde_residual_example1(z, w, tau, &src, 1e-3).unwrap();
        let scale = ratio_average(z, w, &src, tau).unwrap().pieces.1.norm();
        assert!(r4 / scale < 1e-4, "{}", r4 / scale);
    }

    #[test]
    fn constant_in_space_reduces_to_time_difference() {
        let f = |t: f64, _: C64, _: C64| Ok(c(t * t, 3.0 * t));
        let s = Stencil::evaluate(f, 0.7, c(0.1, 0.2), c(0.3, 0.4), 0.05).unwrap();
        let dtau = (s.tau.0 - s.tau.1) / 0.1;
        assert!((heat_residual(&s, 2, c(0.0, 0.0)) - dtau.norm()).abs() < 1e-14);
    }

    #[test]
    fn step_must_fit() {
        assert!(pde_residual_example1(c(0.0, 0.0), c(0.0, 1.0), 0.5, &[0.0], 0.6).is_err());
    }
}
