//! The Hermitian-to-Ginibre crossover: E|det(z − X)|² as a function of the
//! non-Hermiticity α.

use rmtdiff::ensembles::EnsembleSpec;
use rmtdiff::formulas::{crossover_average, crossover_average_with, CrossoverPrefactor};
use rmtdiff::montecarlo::estimate;
use rmtdiff::{ComplexMatrix, C64};

fn main() -> rmtdiff::Result<()> {
    let z = C64::new(0.3, 0.4);
    let x0 = ComplexMatrix::from_diag(&[C64::new(0.5, 0.0), C64::new(-0.2, 0.1), C64::new(0.0, 0.0)]);
    for (k, alpha) in [0.0, 0.25, 0.5, 0.75, 1.0].into_iter().enumerate() {
        let f = crossover_average(z, &x0, alpha, 1.0)?;
        let spec = EnsembleSpec::crossover(x0.clone(), 1.0, alpha)?;
        let mc = estimate(
            |x| Ok(C64::new(x.shifted_from(z)?.determinant()?.norm_sqr(), 0.0)),
            &spec,
            100_000,
            5 + k as u64,
        )?;
        let literal = crossover_average_with(z, &x0, alpha, 1.0, CrossoverPrefactor::Literal)?;
        println!(
            "alpha={alpha:<5} formula {:.5}  sampled {:.5} +/- {:.1e}  unnormalized {:.5}",
            f.value.re, mc.mean.re, mc.stderr.0, literal.value.re
        );
    }
    Ok(())
}
