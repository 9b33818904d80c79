//! E|det(z − X₁X₂)|² for two independent Ginibre matrices: exact tensor
//! quadrature, the two zero-source reductions, and direct sampling.

use rmtdiff::formulas::{product2_direct, product2_quadrature, product2_reduced, ReducedForm};
use rmtdiff::montecarlo::McConfig;
use rmtdiff::observables::VBlock;
use rmtdiff::{ComplexMatrix, C64};

fn main() -> rmtdiff::Result<()> {
    let z = C64::new(0.5, 0.25);
    let tau = 1.0;
    println!("{:>3} {:>18} {:>18} {:>18}", "N", "quadrature", "2F1 form", "K0 form");
    for n in 1..=6 {
        let zero = ComplexMatrix::zeros(n, n);
        let q = product2_quadrature(z, &zero, &zero, tau, VBlock::Conjugated)?.value.re;
        let h = product2_reduced(z, n, tau, ReducedForm::Hyp2f1TwoD)?;
        let k = product2_reduced(z, n, tau, ReducedForm::BesselK0OneD)?;
        println!("{n:>3} {q:>18.12} {h:>18.12} {k:>18.12}");
    }

    let x1 = ComplexMatrix::from_diag(&[C64::new(0.3, 0.0), C64::new(0.0, 0.2)]);
    let x2 = ComplexMatrix::from_diag(&[C64::new(-0.1, 0.1), C64::new(0.4, 0.0)]);
    let q = product2_quadrature(z, &x1, &x2, tau, VBlock::Conjugated)?;
    let plain = product2_quadrature(z, &x1, &x2, tau, VBlock::Plain)?;
    let mc = product2_direct(z, &x1, &x2, tau, &McConfig::new(200_000, 11))?;
    println!("with sources: -v-bar {:.5}  -v {:.5}  sampled {:.5} +/- {:.1e}", q.value.re, plain.value.re, mc.mean.re, mc.stderr.0);
    Ok(())
}
