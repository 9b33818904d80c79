//! Streaming Monte Carlo estimation with mergeable accumulators.
//!
//! A run of `samples` draws is split over a fixed number of ChaCha streams
//! keyed by one seed. Streams are evaluated in parallel and merged in stream
//! order, so an estimate is bitwise reproducible for a given
//! `(seed, streams, samples)` regardless of how many threads execute it.

use num_complex::Complex64 as C64;
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::ensembles::{EnsembleSpec, RngStream};
use crate::error::{Error, Result};
use crate::linalg::ComplexMatrix;

/// Running mean and centred second moment of a complex observable, kept
/// separately for the real and imaginary parts.
#[derive(Clone, Copy, Debug, Default, PartialEq)]
pub struct Accumulator {
    count: u64,
    mean: [f64; 2],
    m2: [f64; 2],
}

impl Accumulator {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn push(&mut self, x: C64) {
        self.count += 1;
        let n = self.count as f64;
        for (k, v) in [x.re, x.im].into_iter().enumerate() {
            let delta = v - self.mean[k];
            self.mean[k] += delta / n;
            self.m2[k] += delta * (v - self.mean[k]);
        }
    }

    /// Pools `other` into `self` (Chan et al. parallel update).
    pub fn merge(&mut self, other: &Accumulator) {
        if other.count == 0 {
            return;
        }
        if self.count == 0 {
            *self = *other;
            return;
        }
        let (na, nb) = (self.count as f64, other.count as f64);
        let n = na + nb;
        for k in 0..2 {
            let delta = other.mean[k] - self.mean[k];
            self.mean[k] += delta * nb / n;
            self.m2[k] += other.m2[k] + delta * delta * na * nb / n;
        }
        self.count += other.count;
    }

    pub fn count(&self) -> u64 {
        self.count
    }

    pub fn mean(&self) -> C64 {
        C64::new(self.mean[0], self.mean[1])
    }

    /// Componentwise standard errors of the mean; zero below two samples.
    pub fn stderr(&self) -> (f64, f64) {
        if self.count < 2 {
            return (0.0, 0.0);
        }
        let n = self.count as f64;
        let se = |m2: f64| (m2.max(0.0) / (n - 1.0) / n).sqrt();
        (se(self.m2[0]), se(self.m2[1]))
    }

    pub fn to_estimate(&self, seed: u64, streams: u64) -> McEstimate {
        McEstimate {
            mean: self.mean(),
            stderr: self.stderr(),
            count: self.count,
            seed,
            streams,
        }
    }
}

/// A reportable Monte Carlo result.
#[derive(Clone, Copy, Debug, PartialEq, Serialize, Deserialize)]
pub struct McEstimate {
    pub mean: C64,
    /// Standard errors of the real and imaginary parts.
    pub stderr: (f64, f64),
    pub count: u64,
    pub seed: u64,
    pub streams: u64,
}

impl McEstimate {
    /// The neutral element of [`merge`].
    pub fn empty() -> Self {
        Self {
            mean: C64::new(0.0, 0.0),
            stderr: (0.0, 0.0),
            count: 0,
            seed: 0,
            streams: 0,
        }
    }

    fn to_accumulator(self) -> Accumulator {
        let n = self.count as f64;
        let m2 = |se: f64| if self.count < 2 { 0.0 } else { se * se * n * (n - 1.0) };
        Accumulator {
            count: self.count,
            mean: [self.mean.re, self.mean.im],
            m2: [m2(self.stderr.0), m2(self.stderr.1)],
        }
    }
}

/// Pools two estimates of the same quantity.
///
/// Seed and stream metadata are taken from the larger estimate; stream counts
/// add up.
pub fn merge(a: &McEstimate, b: &McEstimate) -> McEstimate {
    if b.count == 0 {
        return *a;
    }
    if a.count == 0 {
        return *b;
    }
    let mut acc = a.to_accumulator();
    acc.merge(&b.to_accumulator());
    let lead = if a.count >= b.count { a } else { b };
    acc.to_estimate(lead.seed, a.streams + b.streams)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct McConfig {
    pub samples: u64,
    pub seed: u64,
    /// Independent ChaCha streams the samples are split across. Part of the
    /// reproducibility key; unrelated to the number of threads.
    pub streams: u64,
}

impl McConfig {
    pub const DEFAULT_STREAMS: u64 = 8;

    pub fn new(samples: u64, seed: u64) -> Self {
        Self {
            samples,
            seed,
            streams: Self::DEFAULT_STREAMS,
        }
    }
}

/// Mean of `observable` over `samples` draws from `spec`.
pub fn estimate(
    observable: impl Fn(&ComplexMatrix) -> Result<C64> + Sync,
    spec: &EnsembleSpec,
    samples: u64,
    seed: u64,
) -> Result<McEstimate> {
    estimate_with(
        |rng| spec.sample(rng),
        |draw| observable(draw.first()),
        &McConfig::new(samples, seed),
    )
}

/// Mean of `observable(sampler(rng))` over `cfg.samples` draws.
///
/// The first error raised by any draw aborts the run.
pub fn estimate_with<T>(
    sampler: impl Fn(&mut ChaCha8Rng) -> T + Sync,
    observable: impl Fn(&T) -> Result<C64> + Sync,
    cfg: &McConfig,
) -> Result<McEstimate> {
    if cfg.samples < 2 {
        return Err(Error::domain(
            "at least two samples are needed for a standard error",
        ));
    }
    let streams = cfg.streams.clamp(1, cfg.samples);
    let per = cfg.samples / streams;
    let extra = cfg.samples % streams;
    let parts: Vec<Result<Accumulator>> = (0..streams)
        .into_par_iter()
        .map(|s| {
            let mut rng = RngStream::new(cfg.seed, s).rng();
            let mut acc = Accumulator::new();
            for _ in 0..per + u64::from(s < extra) {
                let draw = sampler(&mut rng);
                acc.push(observable(&draw)?);
            }
            Ok(acc)
        })
        .collect();
    let mut total = Accumulator::new();
    for part in parts {
        total.merge(&part?);
    }
    Ok(total.to_estimate(cfg.seed, streams))
}
