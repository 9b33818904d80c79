//! The ratio average solves a heat equation in (τ, z, w). Central
//! differences leave a residual that shrinks like the square of the step.

use rmtdiff::verify::pde_residual_example1;
use rmtdiff::C64;

fn main() -> rmtdiff::Result<()> {
    let (z, w) = (C64::new(0.3, 0.0), C64::new(0.2, 0.9));
    let sources = [0.25, -0.4];
    let mut prev: Option<(f64, f64)> = None;
    println!("{:>8} {:>12} {:>12} {:>8} {:>8}", "step", "res1", "res4", "ratio1", "ratio4");
    for step in [0.08, 0.04, 0.02, 0.01] {
        let (r1, r4) = pde_residual_example1(z, w, 1.0, &sources, step)?;
        let (q1, q4) = prev.map_or((f64::NAN, f64::NAN), |(p1, p4)| (p1 / r1, p4 / r4));
        println!("{step:>8} {r1:>12.3e} {r4:>12.3e} {q1:>8.2} {q4:>8.2}");
        prev = Some((r1, r4));
    }
    Ok(())
}
