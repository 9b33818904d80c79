//! Gauss–Hermite, Gauss–Laguerre and Gauss–Legendre rules.
//!
//! Nodes start from the eigenvalues of the Jacobi matrix (Golub–Welsch) and
//! are polished by Newton steps on the orthonormal three-term recurrence,
//! which is evaluated with running rescaling so that orders up to a few
//! thousand neither overflow nor lose the tiny outer weights. Weights that
//! fall below the smallest representable `f64` underflow to zero.

use std::collections::HashMap;
use std::sync::{Arc, Mutex, OnceLock};

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum QuadratureFamily {
    /// Weight `e^{−x²}` on the real line.
    GaussHermite,
    /// Weight `e^{−x}` on `[0, ∞)`.
    GaussLaguerre,
    /// Weight `1` on `[−1, 1]`; map to any finite interval with
    /// [`QuadratureRule::mapped`].
    GaussLegendre,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct QuadratureRule {
    pub family: QuadratureFamily,
    pub order: usize,
    pub nodes: Vec<f64>,
    pub weights: Vec<f64>,
}

impl QuadratureRule {
    /// `Σ wᵢ f(xᵢ)`.
    pub fn integrate(&self, mut f: impl FnMut(f64) -> C64) -> C64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w > 0.0)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }

    /// Real-valued variant of [`integrate`](Self::integrate).
    pub fn integrate_real(&self, mut f: impl FnMut(f64) -> f64) -> f64 {
        self.nodes
            .iter()
            .zip(&self.weights)
            .filter(|(_, &w)| w > 0.0)
            .map(|(&x, &w)| f(x) * w)
            .sum()
    }

    /// Nodes and weights of a Legendre rule moved to `[a, b]`.
    pub fn mapped(&self, a: f64, b: f64) -> impl Iterator<Item = (f64, f64)> + '_ {
        debug_assert_eq!(self.family, QuadratureFamily::GaussLegendre);
        let (mid, half) = ((a + b) / 2.0, (b - a) / 2.0);
        self.nodes
            .iter()
            .zip(&self.weights)
            .map(move |(&x, &w)| (mid + half * x, half * w))
    }
}

type Cache = Mutex<HashMap<(QuadratureFamily, usize), Arc<QuadratureRule>>>;

fn cached(
    family: QuadratureFamily,
    order: usize,
    build: impl FnOnce(usize) -> QuadratureRule,
) -> Result<Arc<QuadratureRule>> {
    if order == 0 {
        return Err(Error::domain("quadrature order must be at least 1"));
    }
    static CACHE: OnceLock<Cache> = OnceLock::new();
    let cache = CACHE.get_or_init(Default::default);
    if let Some(rule) = cache.lock().expect("rule cache poisoned").get(&(family, order)) {
        return Ok(Arc::clone(rule));
    }
    let rule = Arc::new(build(order));
    cache
        .lock()
        .expect("rule cache poisoned")
        .insert((family, order), Arc::clone(&rule));
    Ok(rule)
}

/// Gauss–Hermite rule for `∫ e^{−x²} f(x) dx`, exact for polynomials of
/// degree `≤ 2·order − 1`.
pub fn gauss_hermite(order: usize) -> Result<Arc<QuadratureRule>> {
    cached(QuadratureFamily::GaussHermite, order, build_hermite)
}

/// Gauss–Laguerre rule for `∫₀^∞ e^{−x} f(x) dx`.
pub fn gauss_laguerre(order: usize) -> Result<Arc<QuadratureRule>> {
    cached(QuadratureFamily::GaussLaguerre, order, build_laguerre)
}

/// Gauss–Legendre rule on `[−1, 1]`.
pub fn gauss_legendre(order: usize) -> Result<Arc<QuadratureRule>> {
    cached(QuadratureFamily::GaussLegendre, order, build_legendre)
}

const RESCALE: f64 = 1e150;

/// Orthonormal Hermite values `(p_n, p_{n−1})` at `x`, sharing a common
/// scale factor `e^{log_scale}`.
fn hermite_pair(n: usize, x: f64) -> (f64, f64, f64) {
    let mut prev = 0.0;
    let mut cur = std::f64::consts::PI.powf(-0.25);
    let mut log_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = x * (2.0 / (kf + 1.0)).sqrt() * cur - (kf / (kf + 1.0)).sqrt() * prev;
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            prev /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    (cur, prev, log_scale)
}

fn build_hermite(n: usize) -> QuadratureRule {
    let diag = vec![0.0; n];
    let off: Vec<f64> = (1..n).map(|k| (k as f64 / 2.0).sqrt()).collect();
    let mut nodes = tridiagonal_eigenvalues(diag, &off);
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, q, _) = hermite_pair(n, *x);
            let dp = (2.0 * n as f64).sqrt() * q;
            if dp == 0.0 {
                break;
            }
            let step = p / dp;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs().max(1.0) {
                break;
            }
        }
    }
    symmetrize(&mut nodes);
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, q, log_scale) = hermite_pair(n, x);
            let log_dp = 0.5 * (2.0 * n as f64).ln() + q.abs().ln() + log_scale;
            2.0 * (-2.0 * log_dp).exp()
        })
        .collect();
    QuadratureRule {
        family: QuadratureFamily::GaussHermite,
        order: n,
        nodes,
        weights,
    }
}

// Enforces exact antisymmetry of the node set around zero.
fn symmetrize(nodes: &mut [f64]) {
    let n = nodes.len();
    for i in 0..n / 2 {
        let m = (nodes[n - 1 - i] - nodes[i]) / 2.0;
        nodes[i] = -m;
        nodes[n - 1 - i] = m;
    }
    if n % 2 == 1 {
        nodes[n / 2] = 0.0;
    }
}

/// Laguerre values `(L_n, L_{n−1})` with common scale `e^{log_scale}`.
fn laguerre_pair(n: usize, x: f64) -> (f64, f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    let mut log_scale = 0.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0 - x) * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
        if cur.abs() > RESCALE {
            cur /= RESCALE;
            prev /= RESCALE;
            log_scale += RESCALE.ln();
        }
    }
    (cur, prev, log_scale)
}

fn build_laguerre(n: usize) -> QuadratureRule {
    let diag: Vec<f64> = (0..n).map(|k| 2.0 * k as f64 + 1.0).collect();
    let off: Vec<f64> = (1..n).map(|k| k as f64).collect();
    let mut nodes = tridiagonal_eigenvalues(diag, &off);
    let nf = n as f64;
    for x in nodes.iter_mut() {
        for _ in 0..4 {
            let (p, q, _) = laguerre_pair(n, *x);
            // x L_n' = n (L_n − L_{n−1})
            let dp = nf * (p - q) / *x;
            if dp == 0.0 || !dp.is_finite() {
                break;
            }
            let step = p / dp;
            *x -= step;
            if step.abs() <= 1e-16 * x.abs() {
                break;
            }
        }
    }
    let weights = nodes
        .iter()
        .map(|&x| {
            let (_, q, log_scale) = laguerre_pair(n, x);
            // w = x / (n L_{n−1}(x))²
            let log_q = q.abs().ln() + log_scale;
            (x.ln() - 2.0 * (nf.ln() + log_q)).exp()
        })
        .collect();
    QuadratureRule {
        family: QuadratureFamily::GaussLaguerre,
        order: n,
        nodes,
        weights,
    }
}

fn legendre_pair(n: usize, x: f64) -> (f64, f64) {
    let mut prev = 0.0;
    let mut cur = 1.0;
    for k in 0..n {
        let kf = k as f64;
        let next = ((2.0 * kf + 1.0) * x * cur - kf * prev) / (kf + 1.0);
        prev = cur;
        cur = next;
    }
    (cur, prev)
}

fn build_legendre(n: usize) -> QuadratureRule {
    let nf = n as f64;
    let mut nodes = Vec::with_capacity(n);
    let mut weights = Vec::with_capacity(n);
    for i in 0..n {
        // i-th root counted from the left
        let mut x = -(std::f64::consts::PI * (i as f64 + 0.75) / (nf + 0.5)).cos();
        let mut dp = 1.0;
        for _ in 0..100 {
            let (p, q) = legendre_pair(n, x);
            dp = nf * (x * p - q) / (x * x - 1.0);
            let step = p / dp;
            x -= step;
            if step.abs() <= 1e-16 {
                break;
            }
        }
        let (p, q) = legendre_pair(n, x);
        if p != 0.0 {
            dp = nf * (x * p - q) / (x * x - 1.0);
        }
        nodes.push(x);
        weights.push(2.0 / ((1.0 - x * x) * dp * dp));
    }
    symmetrize(&mut nodes);
    QuadratureRule {
        family: QuadratureFamily::GaussLegendre,
        order: n,
        nodes,
        weights,
    }
}

/// Eigenvalues of the symmetric tridiagonal matrix with diagonal `d` and
/// off-diagonal `off` (`off[i]` couples `i` and `i + 1`), ascending.
///
/// Implicit QL with Wilkinson-type shifts.
fn tridiagonal_eigenvalues(mut d: Vec<f64>, off: &[f64]) -> Vec<f64> {
    let n = d.len();
    let mut e = vec![0.0; n];
    e[..off.len()].copy_from_slice(off);
    for l in 0..n {
        let mut iter = 0;
        loop {
            let mut m = l;
            while m + 1 < n {
                let dd = d[m].abs() + d[m + 1].abs();
                if e[m].abs() <= f64::EPSILON * dd {
                    break;
                }
                m += 1;
            }
            if m == l {
                break;
            }
            iter += 1;
            assert!(iter < 200, "tridiagonal QL failed to converge");
            let mut g = (d[l + 1] - d[l]) / (2.0 * e[l]);
            let mut r = g.hypot(1.0);
            g = d[m] - d[l] + e[l] / (g + r.copysign(g));
            let (mut s, mut c, mut p) = (1.0, 1.0, 0.0);
            let mut deflated = false;
            let mut i = m;
            while i > l {
                i -= 1;
                let f = s * e[i];
                let b = c * e[i];
                r = f.hypot(g);
                e[i + 1] = r;
                if r == 0.0 {
                    d[i + 1] -= p;
                    e[m] = 0.0;
                    deflated = true;
                    break;
                }
                s = f / r;
                c = g / r;
                g = d[i + 1] - p;
                r = (d[i] - g) * s + 2.0 * c * b;
                p = s * r;
                d[i + 1] = g + p;
                g = c * r - b;
            }
            if deflated {
                continue;
            }
            d[l] -= p;
            e[l] = g;
            e[m] = 0.0;
        }
    }
    d.sort_by(|a, b| a.partial_cmp(b).expect("eigenvalues are finite"));
    d
}

/// Order schedule and stopping rule for adaptively refined quadratures.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct QuadConfig {
    pub start_order: usize,
    pub max_order: usize,
    pub rel_tol: f64,
}

impl Default for QuadConfig {
    fn default() -> Self {
        Self {
            start_order: 64,
            max_order: 1024,
            rel_tol: 1e-9,
        }
    }
}

impl QuadConfig {
    /// A schedule that evaluates once at `order` and never refines.
    pub fn fixed(order: usize) -> Self {
        Self {
            start_order: order,
            max_order: order,
            rel_tol: f64::INFINITY,
        }
    }
}

/// Doubles the order until two successive evaluations agree to `rel_tol`.
///
/// Returns the finer value and the order that produced it.
pub fn refine(
    cfg: &QuadConfig,
    mut eval: impl FnMut(usize) -> Result<C64>,
) -> Result<(C64, usize)> {
    let mut order = cfg.start_order.max(1);
    let mut prev = eval(order)?;
    if cfg.rel_tol.is_infinite() {
        return Ok((prev, order));
    }
    while order * 2 <= cfg.max_order {
        order *= 2;
        let cur = eval(order)?;
        let diff = (cur - prev).norm();
        if diff == 0.0 || diff <= cfg.rel_tol * cur.norm() {
            return Ok((cur, order));
        }
        prev = cur;
    }
    Err(Error::NoConvergence(format!(
        "no agreement to {:e} up to order {}",
        cfg.rel_tol, cfg.max_order
    )))
}

#[cfg(test)]
mod tests {
    use super::*;

    // ∫ x^k e^{−x²} dx = Γ((k+1)/2) for even k, computed as a ratio chain.
    fn hermite_moment(k: usize) -> f64 {
        if k % 2 == 1 {
            return 0.0;
        }
        let mut m = std::f64::consts::PI.sqrt();
        for j in (1..k).step_by(2) {
            m *= j as f64 / 2.0;
        }
        m
    }

    #[test]
    fn order_zero_is_rejected() {
        assert!(gauss_hermite(0).is_err());
        assert!(gauss_laguerre(0).is_err());
        assert!(gauss_legendre(0).is_err());
    }

    #[test]
    fn one_point_hermite() {
        let r = gauss_hermite(1).unwrap();
        assert_eq!(r.nodes, vec![0.0]);
        assert!((r.weights[0] - std::f64::consts::PI.sqrt()).abs() < 1e-15);
    }

    #[test]
    fn hermite_fourth_moment_order_eight() {
        let r = gauss_hermite(8).unwrap();
        let v = r.integrate_real(|x| x.powi(4));
        assert!((v - 0.75 * std::f64::consts::PI.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn hermite_exactness_up_to_degree_2n_minus_1() {
        for n in [4usize, 8, 16] {
            let r = gauss_hermite(n).unwrap();
            for k in 0..2 * n {
                let v = r.integrate_real(|x| x.powi(k as i32));
                let exact = hermite_moment(k);
                if exact == 0.0 {
                    // odd moments: compare against the scale of |x|^k
                    let scale = hermite_moment(k + 1).max(1.0);
                    assert!(v.abs() <= 1e-12 * scale, "n={n} k={k} v={v}");
                } else {
                    assert!(((v - exact) / exact).abs() < 1e-12, "n={n} k={k}");
                }
            }
        }
    }

    #[test]
    fn rules_are_sorted_with_positive_weights() {
        for n in [1usize, 2, 7, 64, 150] {
            for rule in [gauss_hermite(n), gauss_laguerre(n), gauss_legendre(n)] {
                let r = rule.unwrap();
                assert_eq!(r.nodes.len(), n);
                assert_eq!(r.weights.len(), n);
                assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
                assert!(r.weights.iter().all(|&w| w > 0.0));
            }
        }
    }

    #[test]
    fn high_orders_stay_finite() {
        for rule in [gauss_hermite(1024), gauss_laguerre(1024)] {
            let r = rule.unwrap();
            assert!(r.nodes.windows(2).all(|p| p[0] < p[1]));
            assert!(r.weights.iter().all(|&w| w >= 0.0 && w.is_finite()));
        }
        let r = gauss_hermite(1024).unwrap();
        let total: f64 = r.weights.iter().sum();
        assert!((total - std::f64::consts::PI.sqrt()).abs() < 1e-12);
        let v = r.integrate_real(|x| x * x);
        assert!((v - std::f64::consts::PI.sqrt() / 2.0).abs() < 1e-12);
    }

    #[test]
    fn hermite_nodes_symmetric() {
        for n in [3usize, 10, 65, 128] {
            let r = gauss_hermite(n).unwrap();
            for i in 0..n {
                assert_eq!(r.nodes[i], -r.nodes[n - 1 - i]);
            }
        }
    }

    #[test]
    fn laguerre_moments_are_factorials() {
        let r = gauss_laguerre(12).unwrap();
        let mut fact = 1.0;
        for k in 0..24 {
            if k > 0 {
                fact *= k as f64;
            }
            let v = r.integrate_real(|x| x.powi(k));
            assert!(((v - fact) / fact).abs() < 1e-11, "k={k}");
        }
    }

    #[test]
    fn legendre_integrates_polynomials_on_mapped_interval() {
        let r = gauss_legendre(6).unwrap();
        // ∫_1^3 x^11 dx = (3^12 − 1)/12
        let v: f64 = r.mapped(1.0, 3.0).map(|(x, w)| w * x.powi(11)).sum();
        let exact = (3f64.powi(12) - 1.0) / 12.0;
        assert!(((v - exact) / exact).abs() < 1e-13);
    }

    #[test]
    fn tridiagonal_eigenvalues_of_known_matrix() {
        // 1D Laplacian: 2 − 2 cos(kπ/(n+1))
        let n = 9;
        let ev = tridiagonal_eigenvalues(vec![2.0; n], &vec![-1.0; n - 1]);
        for (k, e) in ev.iter().enumerate() {
            let exact = 2.0 - 2.0 * ((k + 1) as f64 * std::f64::consts::PI / (n + 1) as f64).cos();
            assert!((e - exact).abs() < 1e-13);
        }
    }

    #[test]
    fn refine_converges_and_reports_order() {
        let cfg = QuadConfig::default();
        let (v, order) = refine(&cfg, |n| Ok(C64::new(1.0 + 1.0 / (n as f64).powi(8), 0.0))).unwrap();
        assert!((v.re - 1.0).abs() < 1e-9);
        assert!(order >= 128);
        let err = refine(&cfg, |n| Ok(C64::new(n as f64, 0.0)));
        assert!(matches!(err, Err(Error::NoConvergence(_))));
        let (_, order) = refine(&QuadConfig::fixed(32), |n| Ok(C64::new(n as f64, 0.0))).unwrap();
        assert_eq!(order, 32);
    }
}
