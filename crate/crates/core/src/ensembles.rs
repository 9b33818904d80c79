//! Seeded samplers for the Gaussian external-source ensembles.
//!
//! Each ensemble is the time-`tau` solution of an entrywise heat equation
//! started from a delta at the source matrix, so a draw is always
//! `source + Gaussian noise`. Per-entry variances:
//!
//! | kind          | entry                     | variance                      |
//! |---------------|---------------------------|-------------------------------|
//! | `Gue`         | diagonal (real)           | `tau/N`                       |
//! | `Gue`         | off-diagonal (complex)    | `E|g|² = tau/N`, `E g² = 0`   |
//! | `Ginibre`     | every entry (complex)     | `E|g|² = tau/N`, `E g² = 0`   |
//! | `Crossover`   | real / imaginary part     | `tau/(2N)` / `alpha² tau/(2N)`|
//! | `TwoGinibre`  | two independent Ginibre draws                             |

use num_complex::Complex64 as C64;
use rand::Rng;
use rand_chacha::ChaCha8Rng;
use rand::SeedableRng;
use rand_distr::StandardNormal;
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

const HERMITIAN_TOL: f64 = 1e-12;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnsembleKind {
    Gue,
    Ginibre,
    Crossover,
    TwoGinibre,
}

/// One of the diffusive Gaussian measures, fully specified.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct EnsembleSpec {
    kind: EnsembleKind,
    n: usize,
    tau: f64,
    source: ComplexMatrix,
    second_source: Option<ComplexMatrix>,
    alpha: f64,
}

fn check_tau(tau: f64) -> Result<()> {
    if !(tau > 0.0 && tau.is_finite()) {
        return Err(Error::domain(format!("tau must be positive and finite, got {tau}")));
    }
    Ok(())
}

fn check_square(m: &ComplexMatrix, what: &str) -> Result<usize> {
    if !m.is_square() || m.n_rows() == 0 {
        return Err(Error::dimension(format!("{what} must be a non-empty square matrix")));
    }
    Ok(m.n_rows())
}

impl EnsembleSpec {
    /// Hermitian ensemble with density ∝ exp(−(N/2τ) Tr (H − H₀)²).
    pub fn gue(source: ComplexMatrix, tau: f64) -> Result<Self> {
        check_tau(tau)?;
        let n = check_square(&source, "GUE source")?;
        if !source.is_hermitian(HERMITIAN_TOL) {
            return Err(Error::domain("GUE source must be Hermitian"));
        }
        Ok(Self {
            kind: EnsembleKind::Gue,
            n,
            tau,
            source,
            second_source: None,
            alpha: 1.0,
        })
    }

    /// Complex Ginibre ensemble with density ∝ exp(−(N/τ) Tr (X − X₀)†(X − X₀)).
    pub fn ginibre(source: ComplexMatrix, tau: f64) -> Result<Self> {
        check_tau(tau)?;
        let n = check_square(&source, "Ginibre source")?;
        Ok(Self {
            kind: EnsembleKind::Ginibre,
            n,
            tau,
            source,
            second_source: None,
            alpha: 1.0,
        })
    }

    /// Real/complex crossover: imaginary parts diffuse `alpha²` times slower.
    pub fn crossover(source: ComplexMatrix, tau: f64, alpha: f64) -> Result<Self> {
        check_tau(tau)?;
        if !(0.0..=1.0).contains(&alpha) {
            return Err(Error::domain(format!("alpha must lie in [0, 1], got {alpha}")));
        }
        let n = check_square(&source, "crossover source")?;
        Ok(Self {
            kind: EnsembleKind::Crossover,
            n,
            tau,
            source,
            second_source: None,
            alpha,
        })
    }

    /// Two independent Ginibre matrices with their own sources.
    pub fn two_ginibre(first: ComplexMatrix, second: ComplexMatrix, tau: f64) -> Result<Self> {
        check_tau(tau)?;
        let n = check_square(&first, "first source")?;
        if check_square(&second, "second source")? != n {
            return Err(Error::dimension("both sources must have the same size"));
        }
        Ok(Self {
            kind: EnsembleKind::TwoGinibre,
            n,
            tau,
            source: first,
            second_source: Some(second),
            alpha: 1.0,
        })
    }

    pub fn kind(&self) -> EnsembleKind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn tau(&self) -> f64 {
        self.tau
    }

    pub fn alpha(&self) -> f64 {
        self.alpha
    }

    pub fn source(&self) -> &ComplexMatrix {
        &self.source
    }

    pub fn second_source(&self) -> Option<&ComplexMatrix> {
        self.second_source.as_ref()
    }

    /// Draws one sample of whatever this ensemble produces.
    pub fn sample<R: Rng + ?Sized>(&self, rng: &mut R) -> Draw {
        match self.kind {
            EnsembleKind::Gue => Draw::Single(gue_draw(self, rng)),
            EnsembleKind::Ginibre => Draw::Single(ginibre_draw(&self.source, self.tau, rng)),
            EnsembleKind::Crossover => Draw::Single(crossover_draw(self, rng)),
            EnsembleKind::TwoGinibre => {
                let (a, b) = two_ginibre_draw(self, rng);
                Draw::Pair(a, b)
            }
        }
    }
}

/// Result of one draw: a single matrix, or a pair for the product ensemble.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub enum Draw {
    Single(ComplexMatrix),
    Pair(ComplexMatrix, ComplexMatrix),
}

impl Draw {
    /// The first (or only) matrix.
    pub fn first(&self) -> &ComplexMatrix {
        match self {
            Draw::Single(m) | Draw::Pair(m, _) => m,
        }
    }
}

/// A reproducible random stream, identified by a seed and a stream id.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RngStream {
    pub seed: u64,
    pub stream: u64,
}

impl RngStream {
    pub fn new(seed: u64, stream: u64) -> Self {
        Self { seed, stream }
    }

    /// ChaCha8 generator keyed by `seed`, on ChaCha stream `stream`.
    pub fn rng(&self) -> ChaCha8Rng {
        let mut rng = ChaCha8Rng::seed_from_u64(self.seed);
        rng.set_stream(self.stream);
        rng
    }
}

fn normal<R: Rng + ?Sized>(rng: &mut R) -> f64 {
    rng.sample(StandardNormal)
}

fn wrong_kind(expected: &str, spec: &EnsembleSpec) -> Error {
    Error::domain(format!("expected a {expected} spec, got {:?}", spec.kind))
}

fn gue_draw<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> ComplexMatrix {
    let n = spec.n;
    let var = spec.tau / n as f64;
    let sd_diag = var.sqrt();
    let sd_part = (var / 2.0).sqrt();
    let mut h = spec.source.clone();
    for i in 0..n {
        h[(i, i)] = C64::new(h[(i, i)].re + sd_diag * normal(rng), 0.0);
        for j in (i + 1)..n {
            let g = C64::new(sd_part * normal(rng), sd_part * normal(rng));
            h[(i, j)] += g;
            h[(j, i)] = h[(i, j)].conj();
        }
    }
    h
}

fn ginibre_draw<R: Rng + ?Sized>(source: &ComplexMatrix, tau: f64, rng: &mut R) -> ComplexMatrix {
    let n = source.n_rows();
    let sd = (tau / (2.0 * n as f64)).sqrt();
    ComplexMatrix::from_fn(n, n, |i, j| {
        source[(i, j)] + C64::new(sd * normal(rng), sd * normal(rng))
    })
}

fn crossover_draw<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> ComplexMatrix {
    let n = spec.n;
    let sd = (spec.tau / (2.0 * n as f64)).sqrt();
    let sd_im = spec.alpha * sd;
    ComplexMatrix::from_fn(n, n, |i, j| {
        let re = sd * normal(rng);
        let im = sd_im * normal(rng);
        spec.source[(i, j)] + C64::new(re, im)
    })
}

fn two_ginibre_draw<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    rng: &mut R,
) -> (ComplexMatrix, ComplexMatrix) {
    let second = spec
        .second_source
        .as_ref()
        .expect("two-ginibre spec always carries a second source");
    let a = ginibre_draw(&spec.source, spec.tau, rng);
    let b = ginibre_draw(second, spec.tau, rng);
    (a, b)
}

/// `H = H₀ + G` with `G` drawn from the GUE of variance `tau/N`.
pub fn sample_gue<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<ComplexMatrix> {
    if spec.kind != EnsembleKind::Gue {
        return Err(wrong_kind("gue", spec));
    }
    Ok(gue_draw(spec, rng))
}

/// `X = X₀ + G`, i.i.d. complex Gaussian entries with `E|G_ij|² = tau/N`.
pub fn sample_ginibre<R: Rng + ?Sized>(spec: &EnsembleSpec, rng: &mut R) -> Result<ComplexMatrix> {
    if spec.kind != EnsembleKind::Ginibre {
        return Err(wrong_kind("ginibre", spec));
    }
    Ok(ginibre_draw(&spec.source, spec.tau, rng))
}

pub fn sample_crossover<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    rng: &mut R,
) -> Result<ComplexMatrix> {
    if spec.kind != EnsembleKind::Crossover {
        return Err(wrong_kind("crossover", spec));
    }
    Ok(crossover_draw(spec, rng))
}

pub fn sample_two_ginibre<R: Rng + ?Sized>(
    spec: &EnsembleSpec,
    rng: &mut R,
) -> Result<(ComplexMatrix, ComplexMatrix)> {
    if spec.kind != EnsembleKind::TwoGinibre {
        return Err(wrong_kind("two-ginibre", spec));
    }
    Ok(two_ginibre_draw(spec, rng))
}

/// Maps an Ornstein–Uhlenbeck (harmonic potential) evolution onto the free
/// heat flow: time `tau` with source `M₀` becomes time `(1 − e^{−2τ})/2` with
/// source `M₀ e^{−τ}`.
pub fn ou_reparametrize(tau: f64, source: &ComplexMatrix) -> Result<(f64, ComplexMatrix)> {
    if !(tau >= 0.0) {
        return Err(Error::domain(format!("tau must be nonnegative, got {tau}")));
    }
    let tau_eff = -(-2.0 * tau).exp_m1() / 2.0;
    Ok((tau_eff, source.scale(C64::new((-tau).exp(), 0.0))))
}
