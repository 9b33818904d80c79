//! The `rmtdiff` command line.
//!
//! Every numerical command prints a JSON record
//! `{command, inputs, formula_value, quad_order, mc_estimate, check_report,
//! seeds, versions}` or, with `--format csv`, rows with the header
//! `re_z,im_z,value_re,value_im,stderr_re,stderr_im,method`. `scan` and
//! `bump` default to CSV, `verify` prints a JSON array of check reports.
//!
//! Exit status: 0 on success, 1 when `verify` ran but a check failed,
//! 2 for usage errors, 3 for numeric domain errors, 4 for I/O errors.

mod exec;
pub mod parse;

use std::ffi::OsString;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::verify::SuiteKind;
use parse::{parse_complex, parse_grid, parse_real, parse_scalar, Grid};

pub use exec::{execute, Artifact};

/// Environment variable holding the worker thread count.
pub const THREADS_ENV: &str = "RMTDIFF_THREADS";

#[derive(Debug, thiserror::Error)]
pub enum CliError {
    #[error(transparent)]
    Clap(#[from] clap::Error),
    #[error("{0}")]
    Usage(String),
    #[error(transparent)]
    Numeric(#[from] crate::Error),
    #[error("{context}: {source}")]
    Io {
        context: String,
        source: std::io::Error,
    },
}

impl CliError {
    pub fn exit_code(&self) -> i32 {
        match self {
            CliError::Clap(e) if !e.use_stderr() => 0,
            CliError::Clap(_) | CliError::Usage(_) => 2,
            CliError::Numeric(_) => 3,
            CliError::Io { .. } => 4,
        }
    }

    pub(crate) fn io(context: impl Into<String>, source: std::io::Error) -> Self {
        CliError::Io {
            context: context.into(),
            source,
        }
    }
}

fn usage(msg: impl Into<String>) -> CliError {
    CliError::Usage(msg.into())
}

#[derive(Parser, Clone, Debug, Serialize)]
#[command(name = "rmtdiff", version, about = "Characteristic-polynomial averages over Gaussian ensembles with an external source")]
pub struct RunConfig {
    #[command(subcommand)]
    pub command: Command,
}

#[derive(Subcommand, Clone, Debug, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    /// E det(z - H)/det(w - H) over the GUE with a diagonal source.
    Ratio(RatioArgs),
    /// E prod_j |det(z_j - X)|^2 over the Ginibre ensemble.
    Duality(DualityArgs),
    /// E |det(z - G^-1 X O^-1)|^2 with diagonal correlations.
    Correlated(CorrelatedArgs),
    /// E |det(z - X1 X2)|^2 over two independent Ginibre matrices.
    Product2(Product2Args),
    /// E |det(z - X)|^2 over the Hermitian/Ginibre crossover.
    Crossover(CrossoverArgs),
    /// Edge profile of the weakly non-Hermitian crossover.
    Bump(BumpArgs),
    /// Draw matrices from one of the ensembles.
    Sample(SampleArgs),
    /// Run the verification suite.
    Verify(VerifyArgs),
    /// Evaluate an average over a grid of z.
    Scan(ScanArgs),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::Ratio(_) => "ratio",
            Command::Duality(_) => "duality",
            Command::Correlated(_) => "correlated",
            Command::Product2(_) => "product2",
            Command::Crossover(_) => "crossover",
            Command::Bump(_) => "bump",
            Command::Sample(_) => "sample",
            Command::Verify(_) => "verify",
            Command::Scan(_) => "scan",
        }
    }
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Format {
    Json,
    Csv,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct SourceArgs {
    /// Matrix size; inferred from the source when omitted.
    #[arg(long)]
    pub n: Option<usize>,
    /// Diagonal of the source, comma separated (reals or a+bi).
    #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true, conflicts_with = "source_file")]
    pub source: Vec<C64>,
    /// JSON file holding {n_rows, n_cols, entries: [[re, im], ...]}.
    #[arg(long)]
    pub source_file: Option<PathBuf>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct McArgs {
    /// Monte Carlo samples; 0 skips the sampled route.
    #[arg(long, default_value_t = 0)]
    pub samples: u64,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct OutputArgs {
    /// Write here instead of stdout.
    #[arg(long)]
    pub out: Option<PathBuf>,
    #[arg(long, value_enum)]
    pub format: Option<Format>,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct RatioArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: C64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub w: C64,
    /// Starting Gauss–Hermite order of the adaptive rule.
    #[arg(long)]
    pub quad_order: Option<usize>,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct DualityArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    /// Points z_1..z_k, comma separated.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_complex, allow_hyphen_values = true)]
    pub zs: Vec<C64>,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct CorrelatedArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: C64,
    /// Diagonal of the left correlation, positive.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
    pub gamma: Vec<f64>,
    /// Diagonal of the right correlation, positive.
    #[arg(long, required = true, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
    pub omega: Vec<f64>,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ProductForm {
    /// Exact tensor quadrature over both parameters.
    Quadrature,
    /// Zero source only.
    #[value(name = "hyp2f1-2d")]
    #[serde(rename = "hyp2f1-2d")]
    Hyp2f1TwoD,
    /// Zero source only.
    #[value(name = "besselk0-1d")]
    #[serde(rename = "besselk0-1d")]
    BesselK0OneD,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct Product2Args {
    #[arg(long)]
    pub n: Option<usize>,
    #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true, conflicts_with = "source1_file")]
    pub source1: Vec<C64>,
    #[arg(long)]
    pub source1_file: Option<PathBuf>,
    #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true, conflicts_with = "source2_file")]
    pub source2: Vec<C64>,
    #[arg(long)]
    pub source2_file: Option<PathBuf>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: C64,
    #[arg(long, value_enum, default_value = "quadrature")]
    pub form: ProductForm,
    /// Use −v instead of −v̄ in the linearizing determinant.
    #[arg(long)]
    pub plain_v: bool,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct CrossoverArgs {
    #[command(flatten)]
    pub source: SourceArgs,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub z: C64,
    /// Non-Hermiticity in [0, 1].
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub alpha: f64,
    /// Use the unnormalized radial prefactor.
    #[arg(long)]
    pub literal_prefactor: bool,
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct BumpArgs {
    #[arg(long)]
    pub n: usize,
    /// Rescaled non-Hermiticity, alpha = a N^(-1/4).
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub a: f64,
    #[arg(long, value_parser = parse_real, default_value = "1")]
    pub tau: f64,
    /// Grid of eta as start:stop:count.
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    pub eta: Grid,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum EnsembleName {
    Gue,
    Ginibre,
    Crossover,
    TwoGinibre,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct SampleArgs {
    #[arg(long, value_enum)]
    pub ensemble: EnsembleName,
    #[command(flatten)]
    pub source: SourceArgs,
    /// Second source for the product ensemble; zero when omitted.
    #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true)]
    pub source2: Vec<C64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub tau: f64,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    #[arg(long, default_value_t = 1)]
    pub count: usize,
    #[arg(long, default_value_t = 1)]
    pub seed: u64,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum SuiteName {
    Default,
    Deterministic,
    Quick,
}

impl From<SuiteName> for SuiteKind {
    fn from(s: SuiteName) -> Self {
        match s {
            SuiteName::Default => SuiteKind::Default,
            SuiteName::Deterministic => SuiteKind::Deterministic,
            SuiteName::Quick => SuiteKind::Quick,
        }
    }
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct VerifyArgs {
    #[arg(long, value_enum, default_value = "default")]
    pub suite: SuiteName,
    /// Overrides the suite's root seed.
    #[arg(long)]
    pub seed: Option<u64>,
    /// Overrides the suite's sample count.
    #[arg(long)]
    pub samples: Option<u64>,
    /// Only these criteria (1-11), comma separated.
    #[arg(long, value_delimiter = ',')]
    pub criteria: Vec<u8>,
    #[command(flatten)]
    pub output: OutputArgs,
}

#[derive(ValueEnum, Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum ScanTarget {
    Ratio,
    Duality,
    Correlated,
    Product2,
    Crossover,
}

#[derive(Args, Clone, Debug, Serialize)]
pub struct ScanArgs {
    /// Average to evaluate at each grid point.
    #[arg(long = "command", value_enum)]
    pub target: ScanTarget,
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    pub grid_re: Grid,
    #[arg(long, value_parser = parse_grid, allow_hyphen_values = true)]
    pub grid_im: Grid,
    #[command(flatten)]
    pub source: SourceArgs,
    /// Second source (product2 only).
    #[arg(long, value_delimiter = ',', value_parser = parse_scalar, allow_hyphen_values = true)]
    pub source2: Vec<C64>,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true, default_value = "1")]
    pub tau: f64,
    #[arg(long, value_parser = parse_real, allow_hyphen_values = true)]
    pub alpha: Option<f64>,
    /// Denominator point (ratio only).
    #[arg(long, value_parser = parse_complex, allow_hyphen_values = true)]
    pub w: Option<C64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
    pub gamma: Vec<f64>,
    #[arg(long, value_delimiter = ',', value_parser = parse_real, allow_hyphen_values = true)]
    pub omega: Vec<f64>,
    #[arg(long)]
    pub literal_prefactor: bool,
    #[arg(long)]
    pub plain_v: bool,
    /// Per-point Monte Carlo samples; the seed of point k is seed + k.
    #[command(flatten)]
    pub mc: McArgs,
    #[command(flatten)]
    pub output: OutputArgs,
}

fn check_tau(tau: f64) -> Result<(), CliError> {
    if tau > 0.0 {
        Ok(())
    } else {
        Err(usage(format!("invalid value for '--tau': must be positive, got {tau}")))
    }
}

fn check_alpha(alpha: f64) -> Result<(), CliError> {
    if (0.0..=1.0).contains(&alpha) {
        Ok(())
    } else {
        Err(usage(format!("invalid value for '--alpha': {alpha} is outside [0, 1]")))
    }
}

fn check_w(w: C64) -> Result<(), CliError> {
    if w.im == 0.0 {
        Err(usage("invalid value for '--w': Im(w) must be nonzero"))
    } else {
        Ok(())
    }
}

fn check_samples(samples: u64) -> Result<(), CliError> {
    if samples == 1 {
        Err(usage("invalid value for '--samples': use 0 or at least 2"))
    } else {
        Ok(())
    }
}

fn check_positive(name: &str, xs: &[f64]) -> Result<(), CliError> {
    match xs.iter().find(|x| **x <= 0.0) {
        Some(x) => Err(usage(format!("invalid value for '--{name}': {x} is not positive"))),
        None => Ok(()),
    }
}

fn check_size(n: Option<usize>, inline: &[C64], name: &str) -> Result<(), CliError> {
    if n == Some(0) {
        return Err(usage("invalid value for '--n': must be positive"));
    }
    if let Some(n) = n {
        if !inline.is_empty() && inline.len() != n {
            return Err(usage(format!(
                "invalid value for '--{name}': {} entries but --n {n}",
                inline.len()
            )));
        }
    }
    Ok(())
}

fn check_sources(s: &SourceArgs) -> Result<(), CliError> {
    check_size(s.n, &s.source, "source")?;
    if s.n.is_none() && s.source.is_empty() && s.source_file.is_none() {
        return Err(usage("one of '--n', '--source' or '--source-file' is required"));
    }
    Ok(())
}

fn check_lengths(name: &str, xs: &[f64], s: &SourceArgs) -> Result<(), CliError> {
    let n = s.n.or((!s.source.is_empty()).then_some(s.source.len()));
    match n {
        Some(n) if xs.len() != n => Err(usage(format!(
            "invalid value for '--{name}': {} entries for size {n}",
            xs.len()
        ))),
        _ => Ok(()),
    }
}

fn validate(cfg: &RunConfig) -> Result<(), CliError> {
    match &cfg.command {
        Command::Ratio(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            check_w(a.w)?;
            check_samples(a.mc.samples)?;
            if a.quad_order == Some(0) {
                return Err(usage("invalid value for '--quad-order': must be positive"));
            }
            if a.source.source.iter().any(|s| s.im != 0.0) {
                return Err(usage("invalid value for '--source': GUE sources must be real"));
            }
        }
        Command::Duality(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            check_samples(a.mc.samples)?;
            if a.zs.len() > 1 && a.mc.samples == 0 {
                return Err(usage("invalid value for '--samples': more than one z needs sampling"));
            }
        }
        Command::Correlated(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            check_samples(a.mc.samples)?;
            check_positive("gamma", &a.gamma)?;
            check_positive("omega", &a.omega)?;
            check_lengths("gamma", &a.gamma, &a.source)?;
            check_lengths("omega", &a.omega, &a.source)?;
        }
        Command::Product2(a) => {
            check_size(a.n, &a.source1, "source1")?;
            check_size(a.n, &a.source2, "source2")?;
            if !a.source1.is_empty() && !a.source2.is_empty() && a.source1.len() != a.source2.len() {
                return Err(usage("invalid value for '--source2': sizes of the two sources differ"));
            }
            let known = a.n.is_some()
                || !a.source1.is_empty()
                || !a.source2.is_empty()
                || a.source1_file.is_some()
                || a.source2_file.is_some();
            if !known {
                return Err(usage("one of '--n', '--source1' or '--source2' is required"));
            }
            check_tau(a.tau)?;
            check_samples(a.mc.samples)?;
        }
        Command::Crossover(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            check_alpha(a.alpha)?;
            check_samples(a.mc.samples)?;
        }
        Command::Bump(a) => {
            if a.n == 0 {
                return Err(usage("invalid value for '--n': must be positive"));
            }
            check_tau(a.tau)?;
            if a.a < 0.0 {
                return Err(usage("invalid value for '--a': must be non-negative"));
            }
        }
        Command::Sample(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            match (a.ensemble, a.alpha) {
                (EnsembleName::Crossover, None) => {
                    return Err(usage("'--alpha' is required for the crossover ensemble"))
                }
                (_, Some(alpha)) => check_alpha(alpha)?,
                _ => {}
            }
            if a.ensemble == EnsembleName::Gue && a.source.source.iter().any(|s| s.im != 0.0) {
                return Err(usage("invalid value for '--source': GUE sources must be real"));
            }
            if a.output.format == Some(Format::Csv) {
                return Err(usage("invalid value for '--format': sample output is JSON only"));
            }
        }
        Command::Verify(a) => {
            if let Some(c) = a.criteria.iter().find(|c| !(1..=11).contains(*c)) {
                return Err(usage(format!("invalid value for '--criteria': no criterion {c}")));
            }
            if let Some(s) = a.samples {
                check_samples(s)?;
            }
        }
        Command::Scan(a) => {
            check_sources(&a.source)?;
            check_tau(a.tau)?;
            check_samples(a.mc.samples)?;
            match a.target {
                ScanTarget::Ratio => {
                    let w = a.w.ok_or_else(|| usage("'--w' is required when scanning ratio"))?;
                    check_w(w)?;
                }
                ScanTarget::Crossover => {
                    let alpha = a
                        .alpha
                        .ok_or_else(|| usage("'--alpha' is required when scanning crossover"))?;
                    check_alpha(alpha)?;
                }
                ScanTarget::Correlated => {
                    check_positive("gamma", &a.gamma)?;
                    check_positive("omega", &a.omega)?;
                    check_lengths("gamma", &a.gamma, &a.source)?;
                    check_lengths("omega", &a.omega, &a.source)?;
                }
                ScanTarget::Product2 => check_size(a.source.n, &a.source2, "source2")?,
                ScanTarget::Duality => {}
            }
        }
    }
    Ok(())
}

/// Parses and validates a full argument vector, program name included.
pub fn parse_args<I, T>(argv: I) -> Result<RunConfig, CliError>
where
    I: IntoIterator<Item = T>,
    T: Into<OsString> + Clone,
{
    let cfg = RunConfig::try_parse_from(argv)?;
    validate(&cfg)?;
    Ok(cfg)
}

/// Executes `config`, writes its output and returns the exit status.
pub fn run(config: &RunConfig) -> i32 {
    match execute(config).and_then(|a| a.write(output_path(config)).map(|_| a)) {
        Ok(a) if a.checks_failed => 1,
        Ok(_) => 0,
        Err(e) => {
            eprintln!("rmtdiff: {e}");
            e.exit_code()
        }
    }
}

fn output_path(cfg: &RunConfig) -> Option<&std::path::Path> {
    let out = match &cfg.command {
        Command::Ratio(a) => &a.output,
        Command::Duality(a) => &a.output,
        Command::Correlated(a) => &a.output,
        Command::Product2(a) => &a.output,
        Command::Crossover(a) => &a.output,
        Command::Bump(a) => &a.output,
        Command::Sample(a) => &a.output,
        Command::Verify(a) => &a.output,
        Command::Scan(a) => &a.output,
    };
    out.out.as_deref()
}

fn init_threads() -> Result<(), CliError> {
    let Ok(raw) = std::env::var(THREADS_ENV) else {
        return Ok(());
    };
    let n: usize = raw
        .trim()
        .parse()
        .ok()
        .filter(|&n| n > 0)
        .ok_or_else(|| usage(format!("{THREADS_ENV} must be a positive integer, got '{raw}'")))?;
    rayon::ThreadPoolBuilder::new()
        .num_threads(n)
        .build_global()
        .map_err(|e| usage(format!("cannot size the thread pool: {e}")))
}

/// Entry point of the binary.
pub fn main() -> i32 {
    if let Err(e) = init_threads() {
        eprintln!("rmtdiff: {e}");
        return e.exit_code();
    }
    match parse_args(std::env::args_os()) {
        Ok(cfg) => run(&cfg),
        Err(CliError::Clap(e)) => {
            let _ = e.print();
            if e.use_stderr() {
                2
            } else {
                0
            }
        }
        Err(e) => {
            eprintln!("rmtdiff: {e}");
            e.exit_code()
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn args(s: &str) -> Vec<String> {
        std::iter::once("rmtdiff".to_string())
            .chain(s.split_whitespace().map(str::to_string))
            .collect()
    }

    fn code(s: &str) -> i32 {
        parse_args(args(s)).map(|_| 0).unwrap_or_else(|e| e.exit_code())
    }

    #[test]
    fn ratio_config() {
        let cfg = parse_args(args(
            "ratio --n 2 --tau 1 --z 0.7+0.0i --w 0.5+0.8i --source 0.1,-0.3 --samples 100000 --seed 42",
        ))
        .unwrap();
        let Command::Ratio(a) = cfg.command else { panic!() };
        assert_eq!(a.source.source, vec![C64::new(0.1, 0.0), C64::new(-0.3, 0.0)]);
        assert_eq!(a.z, C64::new(0.7, 0.0));
        assert_eq!((a.mc.samples, a.mc.seed), (100_000, 42));
    }

    #[test]
    fn rejections() {
        let e = parse_args(args("ratio --n 1 --tau 1 --z 0.7+0.0i --w 0.5+0.0i")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("Im(w) must be nonzero"), "{e}");

        let e = parse_args(args("crossover --n 2 --tau 1 --z 0.1+0.1i --alpha 1.5")).unwrap_err();
        assert_eq!(e.exit_code(), 2);
        assert!(e.to_string().contains("--alpha"));

        assert_eq!(code("frobnicate --n 2"), 2);
        assert_eq!(code("ratio --n 2 --tau 1 --z 0.7 --w 0.5+1i"), 2);
        assert_eq!(code("ratio --n 3 --tau 1 --z 0+0i --w 0+1i --source 1,2"), 2);
        assert_eq!(code("ratio --tau 1 --z 0+0i --w 0+1i"), 2);
        assert_eq!(code("ratio --n 1 --tau 0 --z 0+0i --w 0+1i"), 2);
        assert_eq!(code("ratio --n 1 --tau 1 --z 0+0i --w 0+1i --samples 1"), 2);
        assert_eq!(code("duality --n 2 --tau 1 --zs 0+0i,1+0i"), 2);
        assert_eq!(code("correlated --n 2 --tau 1 --z 0+0i --gamma 1 --omega 1,1"), 2);
        assert_eq!(code("correlated --n 1 --tau 1 --z 0+0i --gamma -1 --omega 1"), 2);
        assert_eq!(code("verify --criteria 12"), 2);
        assert_eq!(code("scan --command ratio --grid-re 0:1:2 --grid-im 0:1:2 --n 1"), 2);
        assert_eq!(code("bump --n 100 --a 1 --eta 0:2"), 2);
        assert_eq!(code("--help"), 0);
    }

    #[test]
    fn hyphenated_values() {
        let cfg = parse_args(args(
            "scan --command crossover --alpha 0.5 --grid-re -2:2:81 --grid-im -2:2:81 --n 2",
        ))
        .unwrap();
        let Command::Scan(a) = cfg.command else { panic!() };
        assert_eq!(a.grid_re.start, -2.0);
        assert_eq!(a.grid_im.count, 81);
        assert!(parse_args(args("duality --n 1 --tau 1 --zs -0.5-0.5i")).is_ok());
    }
}
