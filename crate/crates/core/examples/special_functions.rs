//! Quadrature rules and the special functions behind the formulas.

use rmtdiff::specfun::{
    bessel_k0, cauchy_transform_f, erfc, gauss_hermite, gauss_laguerre, hyp2f1_terminating,
    monic_pi_hermite,
};
use rmtdiff::C64;

fn main() -> rmtdiff::Result<()> {
    // ∫ e^{-x²} x⁴ dx = 3√π/4
    let gh = gauss_hermite(8)?;
    let m4 = gh.integrate_real(|x| x.powi(4));
    println!("Hermite n=8: {m4:.15} vs {:.15}", 0.75 * std::f64::consts::PI.sqrt());
    // ∫ e^{-x} x⁵ dx = 120
    let gl = gauss_laguerre(6)?;
    println!("Laguerre n=6: {:.12}", gl.integrate_real(|x| x.powi(5)));

    for x in [0.0, 0.5, 1.0, 2.0, 4.0] {
        println!("erfc({x}) = {:.15e}", erfc(x));
    }
    for x in [0.1, 1.0, 5.0, 50.0] {
        println!("K0({x}) = {:.15e}", bessel_k0(x)?);
    }
    println!("2F1(-3, 2; 1; 0.5) = {}", hyp2f1_terminating(-3.0, 2.0, 1.0, 0.5)?);

    let z = C64::new(0.4, 0.1);
    for k in 0..4 {
        println!("pi_{k}(z) = {:.6}", monic_pi_hermite(k, 0.5, z));
    }
    println!("f_1(i) = {:.12}", cauchy_transform_f(1, C64::new(0.0, 1.0), 1.0, 1)?);
    Ok(())
}
