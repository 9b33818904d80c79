use crate::error::{Error, Result};

const EULER_GAMMA: f64 = 0.577_215_664_901_532_9;

/// Modified Bessel function of the second kind, order zero.
///
/// Uses the ascending series below `x = 2` and a trapezoidal sum of
/// `∫₀^∞ e^{−x cosh t} dt` above it. Underflows to zero past `x ≈ 705`; use
/// [`log_bessel_k0`] there.
pub fn bessel_k0(x: f64) -> Result<f64> {
    check_positive(x)?;
    if x < 2.0 {
        Ok(k0_series(x))
    } else {
        Ok((-x).exp() * scaled_k0_integral(x))
    }
}

/// `ln K₀(x)`, finite for every positive `x`.
pub fn log_bessel_k0(x: f64) -> Result<f64> {
    check_positive(x)?;
    if x < 2.0 {
        Ok(k0_series(x).ln())
    } else {
        Ok(-x + scaled_k0_integral(x).ln())
    }
}

fn check_positive(x: f64) -> Result<()> {
    if x > 0.0 && x.is_finite() {
        Ok(())
    } else {
        Err(Error::domain(format!("K0 needs a positive argument, got {x}")))
    }
}

// K₀(x) = −(ln(x/2) + γ) I₀(x) + Σ_{k≥1} (x²/4)^k / (k!)² · H_k
fn k0_series(x: f64) -> f64 {
    let q = x * x / 4.0;
    let mut term = 1.0;
    let mut i0 = 1.0;
    let mut tail = 0.0;
    let mut harmonic = 0.0;
    for k in 1..60 {
        let kf = k as f64;
        term *= q / (kf * kf);
        harmonic += 1.0 / kf;
        i0 += term;
        tail += term * harmonic;
        if term < 1e-18 * i0 {
            break;
        }
    }
    -((x / 2.0).ln() + EULER_GAMMA) * i0 + tail
}

// e^{x} K₀(x) = ∫₀^∞ e^{−x(cosh t − 1)} dt by the trapezoidal rule, which is
// spectrally accurate for this analytic, rapidly decaying integrand.
fn scaled_k0_integral(x: f64) -> f64 {
    let h = (0.5 / x.sqrt()).min(0.25);
    let t_max = (1.0 + 45.0 / x).acosh();
    let steps = (t_max / h).ceil() as usize;
    let mut sum = 0.5;
    for j in 1..=steps {
        let t = j as f64 * h;
        sum += (-x * (t.cosh() - 1.0)).exp();
    }
    h * sum
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::specfun::gauss_legendre;

    const TABLE: [(f64, f64); 10] = [
        (1e-6, 13.931442073626419459),
        (0.1, 2.4270690247020165578),
        (0.5, 0.92441907122766586178),
        (1.0, 0.42102443824070833334),
        (1.9, 0.12884597927604749404),
        (2.0, 0.11389387274953343565),
        (2.5, 0.062347553200366186029),
        (5.0, 0.0036910983340425942747),
        (10.0, 1.7780062316167651811e-5),
        (50.0, 3.4101677497894955139e-23),
    ];

    #[test]
    fn reference_values() {
        for (x, v) in TABLE {
            let k = bessel_k0(x).unwrap();
            assert!(((k - v) / v).abs() < 1e-12, "K0({x}) = {k} vs {v}");
        }
    }

    #[test]
    fn log_variant_far_out() {
        let table = [
            (50.0, -51.732695655290929618),
            (200.0, -202.42399077620448183),
            (700.0, -703.04992725894391223),
        ];
        for (x, v) in table {
            let l = log_bessel_k0(x).unwrap();
            assert!(((l - v) / v).abs() < 1e-13, "log K0({x}) = {l}");
        }
        let k = bessel_k0(700.0).unwrap();
        assert!(((k - 4.669776431685376881e-306) / k).abs() < 1e-10);
        for (x, v) in TABLE {
            assert!((log_bessel_k0(x).unwrap() - v.ln()).abs() < 1e-12);
        }
    }

    #[test]
    fn leading_asymptotic_at_five() {
        let x: f64 = 5.0;
        let r = bessel_k0(x).unwrap() * x.exp() * (2.0 * x / std::f64::consts::PI).sqrt();
        // the next term of the expansion is −1/(8x) = −2.5%
        assert!((r - 1.0).abs() < 0.03);
        assert!((r - (1.0 - 1.0 / (8.0 * x) + 9.0 / (128.0 * x * x))).abs() < 1e-3);
    }

    #[test]
    fn monotone_decreasing() {
        let grid: Vec<f64> = (1..=100).map(|i| 0.1 * i as f64).collect();
        let vals: Vec<f64> = grid.iter().map(|&x| bessel_k0(x).unwrap()).collect();
        assert!(vals.windows(2).all(|p| p[0] > p[1]));
        assert!(vals.iter().all(|&v| v > 0.0));
    }

    #[test]
    fn first_moment_is_one() {
        // ∫₀^∞ t K₀(t) dt = 1, with panels refined geometrically toward 0
        let rule = gauss_legendre(20).unwrap();
        let mut edges = vec![0.0];
        edges.extend((0..30).rev().map(|j| 2f64.powi(-j)));
        edges.extend((1..=60).map(|j| 1.0 + j as f64));
        let mut total = 0.0;
        for p in edges.windows(2) {
            total += rule
                .mapped(p[0], p[1])
                .map(|(t, w)| w * t * bessel_k0(t).unwrap())
                .sum::<f64>();
        }
        assert!((total - 1.0).abs() < 1e-8, "{total}");
    }

    #[test]
    fn rejects_nonpositive() {
        assert!(bessel_k0(0.0).is_err());
        assert!(bessel_k0(-1.0).is_err());
        assert!(log_bessel_k0(f64::NAN).is_err());
    }
}
