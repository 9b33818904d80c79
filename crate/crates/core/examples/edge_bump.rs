//! Weak non-Hermiticity α = a N^{-1/4} near the edge |z|² = τ/2: the
//! finite-N profile approaches the erfc law.

use rmtdiff::formulas::{crossover_bump_finite, crossover_bump_normalized};

fn main() -> rmtdiff::Result<()> {
    let (a, tau) = (1.0, 1.0);
    let ns = [100usize, 1_000, 10_000, 100_000];
    print!("{:>6} {:>12}", "eta", "limit");
    for n in ns {
        print!(" {:>12}", format!("N={n}"));
    }
    println!();
    for k in 0..=10 {
        let eta = 0.2 * k as f64;
        print!("{eta:>6.2} {:>12.6}", crossover_bump_normalized(eta, a, tau));
        for n in ns {
            print!(" {:>12.6}", crossover_bump_finite(eta, a, tau, n)?);
        }
        println!();
    }
    Ok(())
}
