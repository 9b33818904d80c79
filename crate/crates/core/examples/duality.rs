//! Products of |det(z_j − X)|² over the Ginibre ensemble, rewritten as an
//! average over a k × k parameter matrix.

use rmtdiff::formulas::{duality_check, duality_rhs_k1, ginibre_radial_average};
use rmtdiff::{ComplexMatrix, C64};

fn main() -> rmtdiff::Result<()> {
    let tau = 1.0;
    let z = C64::new(0.4, -0.3);

    // one point, zero source: the parameter integral is radial
    for n in 1..=4 {
        let q = duality_rhs_k1(z, &ComplexMatrix::zeros(n, n), tau)?;
        println!(
            "N={n}  quadrature {:.12}  radial {:.12}",
            q.value.re,
            ginibre_radial_average(z, n, tau)?
        );
    }

    let x0 = ComplexMatrix::from_diag(&[C64::new(0.3, 0.1), C64::new(-0.2, 0.0)]);
    let one = duality_check(&[z], &x0, tau, 100_000, 7)?;
    println!("k=1  lhs {:.5}  rhs {:.5}  z={:.2}", one.lhs.value, one.rhs.value, one.z_score.unwrap());

    // two points: both sides are sampled
    let two = duality_check(&[z, C64::new(-0.5, 0.2)], &x0, tau, 100_000, 7)?;
    println!("k=2  lhs {:.5}  rhs {:.5}  z={:.2}", two.lhs.value, two.rhs.value, two.z_score.unwrap());
    Ok(())
}
