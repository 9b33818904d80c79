use std::io::Write;
use std::path::Path;

use num_complex::Complex64 as C64;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::Value;

use super::{
    usage, BumpArgs, CliError, Command, CorrelatedArgs, CrossoverArgs, DualityArgs, EnsembleName,
    Format, Product2Args, ProductForm, RatioArgs, RunConfig, SampleArgs, ScanArgs, ScanTarget,
    SourceArgs, VerifyArgs,
};
use crate::ensembles::{Draw, EnsembleSpec, RngStream};
use crate::formulas::{
    correlated_average, crossover_average_with, crossover_bump_finite, crossover_bump_normalized,
    duality_lhs, duality_rhs, duality_rhs_k1, product2_direct, product2_quadrature,
    product2_reduced, ratio_average_with, CrossoverPrefactor, DualityRhs, ReducedForm,
};
use crate::linalg::ComplexMatrix;
use crate::montecarlo::{estimate, McConfig, McEstimate};
use crate::observables::{correlated_d, ratio_d, VBlock};
use crate::specfun::QuadConfig;
use crate::verify::{crosscheck, crosscheck_two, run_suite, CheckReport, SuiteConfig, Z_THRESHOLD};

/// Rendered output of a command.
#[derive(Clone, Debug, PartialEq)]
pub struct Artifact {
    pub body: String,
    /// Some verification check did not pass.
    pub checks_failed: bool,
    /// Lines for stderr.
    pub notes: Vec<String>,
}

impl Artifact {
    fn new(body: String) -> Self {
        Self {
            body,
            checks_failed: false,
            notes: Vec::new(),
        }
    }

    /// Writes the body to `path`, or stdout when `None`, and the notes to
    /// stderr.
    pub fn write(&self, path: Option<&Path>) -> Result<(), CliError> {
        for line in &self.notes {
            eprintln!("{line}");
        }
        match path {
            Some(p) => std::fs::write(p, &self.body)
                .map_err(|e| CliError::io(format!("cannot write {}", p.display()), e)),
            None => std::io::stdout()
                .lock()
                .write_all(self.body.as_bytes())
                .map_err(|e| CliError::io("cannot write to stdout", e)),
        }
    }
}

#[derive(Serialize)]
struct Versions {
    rmtdiff: &'static str,
    rng: &'static str,
    mc_streams: u64,
}

const VERSIONS: Versions = Versions {
    rmtdiff: env!("CARGO_PKG_VERSION"),
    rng: "chacha8",
    mc_streams: McConfig::DEFAULT_STREAMS,
};

#[derive(Serialize)]
struct Record {
    command: &'static str,
    inputs: Value,
    formula_value: Option<C64>,
    quad_order: Option<usize>,
    mc_estimate: Option<McEstimate>,
    /// Second sampled side, when both sides of a check are sampled.
    #[serde(skip_serializing_if = "Option::is_none")]
    reference_estimate: Option<McEstimate>,
    check_report: Option<CheckReport>,
    seeds: Vec<u64>,
    versions: Versions,
}

#[derive(Serialize)]
struct Row {
    re_z: f64,
    im_z: f64,
    value_re: f64,
    value_im: f64,
    stderr_re: f64,
    stderr_im: f64,
    method: &'static str,
}

impl Row {
    fn formula(z: C64, v: C64) -> Self {
        Self {
            re_z: z.re,
            im_z: z.im,
            value_re: v.re,
            value_im: v.im,
            stderr_re: 0.0,
            stderr_im: 0.0,
            method: "quadrature",
        }
    }

    fn sampled(z: C64, m: &McEstimate) -> Self {
        Self {
            re_z: z.re,
            im_z: z.im,
            value_re: m.mean.re,
            value_im: m.mean.im,
            stderr_re: m.stderr.0,
            stderr_im: m.stderr.1,
            method: "monte-carlo",
        }
    }
}

fn csv_body<T: Serialize>(rows: &[T]) -> Result<String, CliError> {
    let mut w = csv::Writer::from_writer(Vec::new());
    for r in rows {
        w.serialize(r)
            .map_err(|e| CliError::io("cannot encode csv", std::io::Error::other(e)))?;
    }
    let bytes = w
        .into_inner()
        .map_err(|e| CliError::io("cannot encode csv", std::io::Error::other(e.to_string())))?;
    Ok(String::from_utf8(bytes).expect("csv output is utf-8"))
}

fn json_body<T: Serialize>(v: &T) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("records serialize");
    s.push('\n');
    s
}

fn read_matrix(path: &Path) -> Result<ComplexMatrix, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::io(format!("cannot read {}", path.display()), e))?;
    serde_json::from_str(&text).map_err(|e| {
        CliError::io(
            format!("cannot parse {}", path.display()),
            std::io::Error::new(std::io::ErrorKind::InvalidData, e),
        )
    })
}

fn resolve(
    n: Option<usize>,
    inline: &[C64],
    file: Option<&Path>,
    flag: &str,
) -> Result<ComplexMatrix, CliError> {
    let m = match file {
        Some(p) => read_matrix(p)?,
        None if !inline.is_empty() => ComplexMatrix::from_diag(inline),
        None => {
            let n = n.ok_or_else(|| usage(format!("'--{flag}' or '--n' is required")))?;
            ComplexMatrix::zeros(n, n)
        }
    };
    if !m.is_square() || m.n_rows() == 0 {
        return Err(usage(format!("invalid value for '--{flag}': source must be square")));
    }
    if n.is_some_and(|n| n != m.n_rows()) {
        return Err(usage(format!(
            "invalid value for '--{flag}': size {} but --n {}",
            m.n_rows(),
            n.unwrap()
        )));
    }
    Ok(m)
}

fn source_of(s: &SourceArgs) -> Result<ComplexMatrix, CliError> {
    resolve(s.n, &s.source, s.source_file.as_deref(), "source")
}

fn real_diagonal(m: &ComplexMatrix) -> Result<Vec<f64>, CliError> {
    let n = m.n_rows();
    for i in 0..n {
        for j in 0..n {
            let x = m[(i, j)];
            if (i != j && x != C64::new(0.0, 0.0)) || x.im != 0.0 {
                return Err(usage(
                    "invalid value for '--source': the ratio formula needs a real diagonal source",
                ));
            }
        }
    }
    Ok(m.diagonal().iter().map(|c| c.re).collect())
}

fn inputs(args: &impl Serialize, sources: &[(&str, &ComplexMatrix)]) -> Value {
    let mut v = serde_json::to_value(args).expect("arguments serialize");
    if let Value::Object(map) = &mut v {
        for (k, m) in sources {
            map.insert((*k).into(), serde_json::to_value(m).expect("matrices serialize"));
        }
    }
    v
}

fn mc_cfg(samples: u64, seed: u64) -> McConfig {
    McConfig::new(samples, seed)
}

struct Outcome {
    record: Record,
    z: C64,
}

impl Outcome {
    fn render(self, format: Option<Format>) -> Result<Artifact, CliError> {
        let failed = self.record.check_report.as_ref().is_some_and(|r| !r.pass);
        let body = match format.unwrap_or(Format::Json) {
            Format::Json => json_body(&self.record),
            Format::Csv => {
                let mut rows = Vec::new();
                if let Some(v) = self.record.formula_value {
                    rows.push(Row::formula(self.z, v));
                }
                if let Some(m) = &self.record.mc_estimate {
                    rows.push(Row::sampled(self.z, m));
                }
                if let Some(m) = &self.record.reference_estimate {
                    rows.push(Row {
                        method: "monte-carlo-parameter",
                        ..Row::sampled(self.z, m)
                    });
                }
                csv_body(&rows)?
            }
        };
        let mut a = Artifact::new(body);
        if let Some(r) = &self.record.check_report {
            a.notes.push(summary_line(r));
        }
        a.checks_failed = failed;
        Ok(a)
    }
}

fn summary_line(r: &CheckReport) -> String {
    let mut line = format!("{}: {}", if r.pass { "PASS" } else { "FAIL" }, r.name);
    if let Some(z) = r.z_score {
        line.push_str(&format!(" (z = {z:.2})"));
    }
    if let Some(e) = r.rel_err {
        line.push_str(&format!(" (rel err = {e:.2e})"));
    }
    line
}

fn record(command: &'static str, inputs: Value) -> Record {
    Record {
        command,
        inputs,
        formula_value: None,
        quad_order: None,
        mc_estimate: None,
        reference_estimate: None,
        check_report: None,
        seeds: Vec::new(),
        versions: VERSIONS,
    }
}

fn attach(rec: &mut Record, mc: McEstimate) {
    if let Some(v) = rec.formula_value {
        rec.check_report = Some(crosscheck(v, &mc, Z_THRESHOLD).named(rec.command));
    }
    rec.seeds.push(mc.seed);
    rec.mc_estimate = Some(mc);
}

fn quad_cfg(start: Option<usize>) -> QuadConfig {
    let d = QuadConfig::default();
    match start {
        Some(s) => QuadConfig {
            start_order: s,
            max_order: d.max_order.max(s),
            ..d
        },
        None => d,
    }
}

fn ratio(a: &RatioArgs) -> Result<Outcome, CliError> {
    let x0 = source_of(&a.source)?;
    let sources = real_diagonal(&x0)?;
    let r = ratio_average_with(a.z, a.w, &sources, a.tau, &quad_cfg(a.quad_order))?;
    let mut rec = record("ratio", inputs(a, &[("source_matrix", &x0)]));
    rec.formula_value = Some(r.value);
    rec.quad_order = Some(r.quad_order);
    if a.mc.samples > 0 {
        let spec = EnsembleSpec::gue(x0, a.tau)?;
        let mc = estimate(|h| ratio_d(a.z, a.w, h), &spec, a.mc.samples, a.mc.seed)?;
        attach(&mut rec, mc);
    }
    Ok(Outcome { record: rec, z: a.z })
}

fn duality(a: &DualityArgs) -> Result<Outcome, CliError> {
    let x0 = source_of(&a.source)?;
    let mut rec = record("duality", inputs(a, &[("source_matrix", &x0)]));
    if a.zs.len() == 1 {
        let e = duality_rhs_k1(a.zs[0], &x0, a.tau)?;
        rec.formula_value = Some(e.value);
        rec.quad_order = Some(e.quad_order);
        if a.mc.samples > 0 {
            let lhs = duality_lhs(&a.zs, &x0, a.tau, &mc_cfg(a.mc.samples, a.mc.seed))?;
            attach(&mut rec, lhs);
        }
    } else {
        // no quadrature for k ≥ 2: both sides are sampled, the parameter side
        // with seed + 1
        let lhs = duality_lhs(&a.zs, &x0, a.tau, &mc_cfg(a.mc.samples, a.mc.seed))?;
        let rhs_seed = a.mc.seed.wrapping_add(1);
        let DualityRhs::Sampled(rhs) = duality_rhs(&a.zs, &x0, a.tau, &mc_cfg(a.mc.samples, rhs_seed))? else {
            unreachable!("several points are always sampled")
        };
        rec.check_report = Some(
            crosscheck_two(&lhs, &rhs, Z_THRESHOLD).named("duality"),
        );
        rec.seeds = vec![lhs.seed, rhs.seed];
        rec.mc_estimate = Some(lhs);
        rec.reference_estimate = Some(rhs);
    }
    Ok(Outcome { record: rec, z: a.zs[0] })
}

fn correlated(a: &CorrelatedArgs) -> Result<Outcome, CliError> {
    let x0 = source_of(&a.source)?;
    if a.gamma.len() != x0.n_rows() || a.omega.len() != x0.n_rows() {
        return Err(usage("invalid value for '--gamma'/'--omega': lengths must match the source size"));
    }
    let e = correlated_average(a.z, &x0, &a.gamma, &a.omega, a.tau)?;
    let mut rec = record("correlated", inputs(a, &[("source_matrix", &x0)]));
    rec.formula_value = Some(e.value);
    rec.quad_order = Some(e.quad_order);
    if a.mc.samples > 0 {
        let spec = EnsembleSpec::ginibre(x0, a.tau)?;
        let zero = C64::new(0.0, 0.0);
        let mc = estimate(|x| correlated_d(a.z, x, &a.gamma, &a.omega, zero), &spec, a.mc.samples, a.mc.seed)?;
        attach(&mut rec, mc);
    }
    Ok(Outcome { record: rec, z: a.z })
}

fn product_sources(a: &Product2Args) -> Result<(ComplexMatrix, ComplexMatrix), CliError> {
    let n = a
        .n
        .or((!a.source1.is_empty()).then_some(a.source1.len()))
        .or((!a.source2.is_empty()).then_some(a.source2.len()));
    let first = if a.source1_file.is_some() || n.is_some() {
        Some(resolve(n, &a.source1, a.source1_file.as_deref(), "source1")?)
    } else {
        None
    };
    let n = n.or(first.as_ref().map(|m| m.n_rows()));
    let second = resolve(n, &a.source2, a.source2_file.as_deref(), "source2")?;
    let first = match first {
        Some(m) => m,
        None => resolve(Some(second.n_rows()), &[], None, "source1")?,
    };
    Ok((first, second))
}

fn v_block(plain: bool) -> VBlock {
    if plain {
        VBlock::Plain
    } else {
        VBlock::Conjugated
    }
}

fn is_zero(m: &ComplexMatrix) -> bool {
    m.entries().iter().all(|c| *c == C64::new(0.0, 0.0))
}

fn product2(a: &Product2Args) -> Result<Outcome, CliError> {
    let (x1, x2) = product_sources(a)?;
    let mut rec = record("product2", inputs(a, &[("source1_matrix", &x1), ("source2_matrix", &x2)]));
    let reduced = match a.form {
        ProductForm::Quadrature => None,
        ProductForm::Hyp2f1TwoD => Some(ReducedForm::Hyp2f1TwoD),
        ProductForm::BesselK0OneD => Some(ReducedForm::BesselK0OneD),
    };
    match reduced {
        None => {
            let e = product2_quadrature(a.z, &x1, &x2, a.tau, v_block(a.plain_v))?;
            rec.formula_value = Some(e.value);
            rec.quad_order = Some(e.quad_order);
        }
        Some(form) => {
            if !is_zero(&x1) || !is_zero(&x2) {
                return Err(usage("invalid value for '--form': reduced forms need zero sources"));
            }
            rec.formula_value = Some(C64::new(product2_reduced(a.z, x1.n_rows(), a.tau, form)?, 0.0));
        }
    }
    if a.mc.samples > 0 {
        let mc = product2_direct(a.z, &x1, &x2, a.tau, &mc_cfg(a.mc.samples, a.mc.seed))?;
        attach(&mut rec, mc);
    }
    Ok(Outcome { record: rec, z: a.z })
}

fn prefactor(literal: bool) -> CrossoverPrefactor {
    if literal {
        CrossoverPrefactor::Literal
    } else {
        CrossoverPrefactor::Normalized
    }
}

fn abs_det_sq(z: C64, x: &ComplexMatrix) -> crate::Result<C64> {
    Ok(C64::new(x.shifted_from(z)?.determinant()?.norm_sqr(), 0.0))
}

fn crossover(a: &CrossoverArgs) -> Result<Outcome, CliError> {
    let x0 = source_of(&a.source)?;
    let e = crossover_average_with(a.z, &x0, a.alpha, a.tau, prefactor(a.literal_prefactor))?;
    let mut rec = record("crossover", inputs(a, &[("source_matrix", &x0)]));
    rec.formula_value = Some(e.value);
    rec.quad_order = Some(e.quad_order);
    if a.mc.samples > 0 {
        let spec = EnsembleSpec::crossover(x0, a.tau, a.alpha)?;
        let mc = estimate(|x| abs_det_sq(a.z, x), &spec, a.mc.samples, a.mc.seed)?;
        attach(&mut rec, mc);
    }
    Ok(Outcome { record: rec, z: a.z })
}

#[derive(Serialize)]
struct BumpRow {
    eta: f64,
    finite_n: f64,
    asymptotic: f64,
}

fn bump(a: &BumpArgs) -> Result<Artifact, CliError> {
    let rows = a
        .eta
        .points()
        .into_par_iter()
        .map(|eta| {
            Ok(BumpRow {
                eta,
                finite_n: crossover_bump_finite(eta, a.a, a.tau, a.n)?,
                asymptotic: crossover_bump_normalized(eta, a.a, a.tau),
            })
        })
        .collect::<crate::Result<Vec<_>>>()?;
    let body = match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => csv_body(&rows)?,
        Format::Json => json_body(&rows),
    };
    Ok(Artifact::new(body))
}

#[derive(Serialize)]
struct Samples {
    command: &'static str,
    inputs: Value,
    seeds: Vec<u64>,
    versions: Versions,
    draws: Vec<Draw>,
}

fn sample(a: &SampleArgs) -> Result<Artifact, CliError> {
    let x0 = source_of(&a.source)?;
    let spec = match a.ensemble {
        EnsembleName::Gue => EnsembleSpec::gue(x0.clone(), a.tau)?,
        EnsembleName::Ginibre => EnsembleSpec::ginibre(x0.clone(), a.tau)?,
        EnsembleName::Crossover => {
            EnsembleSpec::crossover(x0.clone(), a.tau, a.alpha.expect("checked at parse time"))?
        }
        EnsembleName::TwoGinibre => {
            let second = resolve(Some(x0.n_rows()), &a.source2, None, "source2")?;
            EnsembleSpec::two_ginibre(x0.clone(), second, a.tau)?
        }
    };
    let mut rng = RngStream::new(a.seed, 0).rng();
    let draws = (0..a.count).map(|_| spec.sample(&mut rng)).collect();
    Ok(Artifact::new(json_body(&Samples {
        command: "sample",
        inputs: inputs(a, &[("source_matrix", &x0)]),
        seeds: vec![a.seed],
        versions: VERSIONS,
        draws,
    })))
}

#[derive(Serialize)]
struct ReportRow<'a> {
    name: &'a str,
    criterion: Option<u8>,
    pass: bool,
    z_score: Option<f64>,
    rel_err: Option<f64>,
    tolerance: f64,
    runtime: f64,
}

fn verify(a: &VerifyArgs) -> Result<Artifact, CliError> {
    let mut cfg = SuiteConfig::new(a.suite.into());
    if let Some(s) = a.seed {
        cfg.seed = s;
    }
    if let Some(n) = a.samples {
        cfg.samples = n;
    }
    cfg.criteria = a.criteria.clone();
    let reports = run_suite(&cfg);
    let body = match a.output.format.unwrap_or(Format::Json) {
        Format::Json => json_body(&reports),
        Format::Csv => csv_body(
            &reports
                .iter()
                .map(|r| ReportRow {
                    name: &r.name,
                    criterion: r.criterion,
                    pass: r.pass,
                    z_score: r.z_score,
                    rel_err: r.rel_err,
                    tolerance: r.tolerance,
                    runtime: r.runtime,
                })
                .collect::<Vec<_>>(),
        )?,
    };
    let mut art = Artifact::new(body);
    art.notes = reports.iter().map(summary_line).collect();
    let failed = reports.iter().filter(|r| !r.pass).count();
    art.notes.push(format!("{} checks, {} failed", reports.len(), failed));
    art.checks_failed = failed > 0;
    Ok(art)
}

struct ScanPoint {
    z: C64,
    value: C64,
    mc: Option<McEstimate>,
}

fn scan_point(a: &ScanArgs, ctx: &ScanContext, k: u64, z: C64) -> crate::Result<ScanPoint> {
    let mc = mc_cfg(a.mc.samples, a.mc.seed.wrapping_add(k));
    let sampling = a.mc.samples > 0;
    let (value, mc) = match a.target {
        ScanTarget::Ratio => {
            let w = a.w.expect("checked at parse time");
            let sources: Vec<f64> = ctx.x0.diagonal().iter().map(|c| c.re).collect();
            let v = ratio_average_with(z, w, &sources, a.tau, &QuadConfig::default())?.value;
            let m = sampling
                .then(|| estimate(|h| ratio_d(z, w, h), &EnsembleSpec::gue(ctx.x0.clone(), a.tau)?, mc.samples, mc.seed))
                .transpose()?;
            (v, m)
        }
        ScanTarget::Duality => {
            let v = duality_rhs_k1(z, &ctx.x0, a.tau)?.value;
            let m = sampling.then(|| duality_lhs(&[z], &ctx.x0, a.tau, &mc)).transpose()?;
            (v, m)
        }
        ScanTarget::Correlated => {
            let v = correlated_average(z, &ctx.x0, &a.gamma, &a.omega, a.tau)?.value;
            let zero = C64::new(0.0, 0.0);
            let m = sampling
                .then(|| {
                    estimate(
                        |x| correlated_d(z, x, &a.gamma, &a.omega, zero),
                        &EnsembleSpec::ginibre(ctx.x0.clone(), a.tau)?,
                        mc.samples,
                        mc.seed,
                    )
                })
                .transpose()?;
            (v, m)
        }
        ScanTarget::Product2 => {
            let v = product2_quadrature(z, &ctx.x0, &ctx.x2, a.tau, v_block(a.plain_v))?.value;
            let m = sampling
                .then(|| product2_direct(z, &ctx.x0, &ctx.x2, a.tau, &mc))
                .transpose()?;
            (v, m)
        }
        ScanTarget::Crossover => {
            let alpha = a.alpha.expect("checked at parse time");
            let v = crossover_average_with(z, &ctx.x0, alpha, a.tau, prefactor(a.literal_prefactor))?.value;
            let m = sampling
                .then(|| {
                    estimate(
                        |x| abs_det_sq(z, x),
                        &EnsembleSpec::crossover(ctx.x0.clone(), a.tau, alpha)?,
                        mc.samples,
                        mc.seed,
                    )
                })
                .transpose()?;
            (v, m)
        }
    };
    Ok(ScanPoint { z, value, mc })
}

struct ScanContext {
    x0: ComplexMatrix,
    x2: ComplexMatrix,
}

#[derive(Serialize)]
struct ScanRecord {
    command: &'static str,
    inputs: Value,
    seeds: Vec<u64>,
    versions: Versions,
    points: Vec<ScanJsonPoint>,
}

#[derive(Serialize)]
struct ScanJsonPoint {
    z: C64,
    formula_value: C64,
    mc_estimate: Option<McEstimate>,
}

fn scan(a: &ScanArgs) -> Result<Artifact, CliError> {
    let x0 = source_of(&a.source)?;
    let n = x0.n_rows();
    match a.target {
        ScanTarget::Ratio => {
            real_diagonal(&x0)?;
        }
        ScanTarget::Correlated if a.gamma.len() != n || a.omega.len() != n => {
            return Err(usage("invalid value for '--gamma'/'--omega': lengths must match the source size"));
        }
        _ => {}
    }
    let x2 = resolve(Some(n), &a.source2, None, "source2")?;
    let ctx = ScanContext { x0, x2 };
    // row-major over (im, re) with re varying fastest
    let zs: Vec<C64> = a
        .grid_im
        .points()
        .into_iter()
        .flat_map(|y| a.grid_re.points().into_iter().map(move |x| C64::new(x, y)))
        .collect();
    let points = zs
        .par_iter()
        .enumerate()
        .map(|(k, &z)| scan_point(a, &ctx, k as u64, z))
        .collect::<crate::Result<Vec<_>>>()?;
    let body = match a.output.format.unwrap_or(Format::Csv) {
        Format::Csv => {
            let mut rows = Vec::with_capacity(points.len() * 2);
            for p in &points {
                rows.push(Row::formula(p.z, p.value));
                if let Some(m) = &p.mc {
                    rows.push(Row::sampled(p.z, m));
                }
            }
            csv_body(&rows)?
        }
        Format::Json => {
            let seeds = points.iter().filter_map(|p| p.mc.map(|m| m.seed)).collect();
            json_body(&ScanRecord {
                command: "scan",
                inputs: inputs(a, &[("source_matrix", &ctx.x0), ("source2_matrix", &ctx.x2)]),
                seeds,
                versions: VERSIONS,
                points: points
                    .iter()
                    .map(|p| ScanJsonPoint {
                        z: p.z,
                        formula_value: p.value,
                        mc_estimate: p.mc,
                    })
                    .collect(),
            })
        }
    };
    Ok(Artifact::new(body))
}

/// Runs the command in `config` and renders its output without writing it.
pub fn execute(config: &RunConfig) -> Result<Artifact, CliError> {
    match &config.command {
        Command::Ratio(a) => ratio(a)?.render(a.output.format),
        Command::Duality(a) => duality(a)?.render(a.output.format),
        Command::Correlated(a) => correlated(a)?.render(a.output.format),
        Command::Product2(a) => product2(a)?.render(a.output.format),
        Command::Crossover(a) => crossover(a)?.render(a.output.format),
        Command::Bump(a) => bump(a),
        Command::Sample(a) => sample(a),
        Command::Verify(a) => verify(a),
        Command::Scan(a) => scan(a),
    }
}
