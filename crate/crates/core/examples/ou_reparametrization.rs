//! The Ornstein–Uhlenbeck flow maps a start at X₀ after time τ onto the
//! plain diffusion with (τ', X₀') = ((1 − e^{−2τ})/2, X₀e^{−τ}). As τ grows
//! the memory of X₀ fades like e^{−τ}.

use rmtdiff::ensembles::ou_reparametrize;
use rmtdiff::formulas::crossover_average;
use rmtdiff::{ComplexMatrix, C64};

fn main() -> rmtdiff::Result<()> {
    let z = C64::new(0.5, 0.3);
    let x0 = ComplexMatrix::from_diag(&[C64::new(0.8, -0.2), C64::new(-0.4, 0.5)]);
    let stationary = crossover_average(z, &ComplexMatrix::zeros(2, 2), 0.5, 0.5)?.value;
    println!("{:>5} {:>10} {:>14} {:>12}", "tau", "tau'", "deviation", "dev * e^tau");
    for tau in [1.0, 2.0, 4.0, 6.0, 8.0, 10.0, 12.0] {
        let (t, src) = ou_reparametrize(tau, &x0)?;
        let v = crossover_average(z, &src, 0.5, t)?.value;
        let dev = (v - stationary).norm();
        println!("{tau:>5} {t:>10.6} {dev:>14.3e} {:>12.5}", dev * f64::exp(tau));
    }
    Ok(())
}
