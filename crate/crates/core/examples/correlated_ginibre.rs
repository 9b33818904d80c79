//! Ginibre matrices with diagonal left and right correlations.

use rmtdiff::ensembles::EnsembleSpec;
use rmtdiff::formulas::{correlated_average, forrester_rains_reduction};
use rmtdiff::montecarlo::estimate;
use rmtdiff::observables::correlated_d;
use rmtdiff::{ComplexMatrix, C64};

fn main() -> rmtdiff::Result<()> {
    let z = C64::new(0.6, 0.2);
    let (gamma, omega) = ([1.0, 1.5, 0.8], [0.7, 1.0, 1.2]);

    let zero = ComplexMatrix::zeros(3, 3);
    let q = correlated_average(z, &zero, &gamma, &omega, 1.0)?;
    let r = forrester_rains_reduction(z, &gamma, &omega, 1.0, 3)?;
    println!("zero source: quadrature {:.12} (order {}), radial {r:.12}", q.value.re, q.quad_order);

    let x0 = ComplexMatrix::from_diag(&[C64::new(0.2, 0.0), C64::new(0.0, -0.3), C64::new(0.1, 0.1)]);
    let f = correlated_average(z, &x0, &gamma, &omega, 1.0)?;
    let spec = EnsembleSpec::ginibre(x0, 1.0)?;
    let mc = estimate(|x| correlated_d(z, x, &gamma, &omega, C64::new(0.0, 0.0)), &spec, 200_000, 3)?;
    println!("with source: formula {:.5}  sampled {:.5} +/- {:.1e}", f.value.re, mc.mean.re, mc.stderr.0);
    Ok(())
}
