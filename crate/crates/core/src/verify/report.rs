use std::time::Instant;

use num_complex::Complex64 as C64;
use serde::Serialize;

use crate::montecarlo::McEstimate;

/// Pass threshold for stochastic comparisons, in combined standard errors.
pub const Z_THRESHOLD: f64 = 4.0;
/// Default relative tolerance for deterministic identities.
pub const DET_TOL: f64 = 1e-8;

/// One side of a comparison.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
pub struct Side {
    pub value: C64,
    /// Componentwise standard errors when the side is a Monte Carlo estimate.
    pub stderr: Option<(f64, f64)>,
}

impl Side {
    pub fn exact(value: C64) -> Self {
        Self { value, stderr: None }
    }

    pub fn real(value: f64) -> Self {
        Self::exact(C64::new(value, 0.0))
    }

    pub fn sampled(mc: &McEstimate) -> Self {
        Self {
            value: mc.mean,
            stderr: Some(mc.stderr),
        }
    }
}

/// How `pass` was decided.
#[derive(Clone, Copy, Debug, PartialEq, Serialize)]
#[serde(rename_all = "kebab-case", tag = "kind")]
pub enum CheckRule {
    /// `z_score ≤ tolerance`.
    ZScore,
    /// `z_score > tolerance`; used to show that a wrong variant is detected.
    ZScoreAbove,
    /// `|lhs − rhs| / |rhs| ≤ tolerance`.
    RelErr,
    /// `|lhs − rhs| ≤ tolerance`.
    AbsErr,
    /// `Re lhs < Re rhs`.
    LessThan,
    /// `lo ≤ Re lhs ≤ hi`.
    Range { lo: f64, hi: f64 },
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct CheckReport {
    pub name: String,
    /// Acceptance criterion this check belongs to, if any.
    pub criterion: Option<u8>,
    pub lhs: Side,
    pub rhs: Side,
    pub z_score: Option<f64>,
    pub rel_err: Option<f64>,
    pub pass: bool,
    pub tolerance: f64,
    /// Wall time in seconds.
    pub runtime: f64,
    pub rule: CheckRule,
    /// Seeds of any sampled side, for re-running.
    pub seeds: Vec<u64>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub note: Option<String>,
}

impl CheckReport {
    fn base(lhs: Side, rhs: Side, rule: CheckRule, tolerance: f64) -> Self {
        Self {
            name: String::new(),
            criterion: None,
            lhs,
            rhs,
            z_score: None,
            rel_err: None,
            pass: false,
            tolerance,
            runtime: 0.0,
            rule,
            seeds: Vec::new(),
            note: None,
        }
    }

    /// A failed report standing in for a check that raised an error.
    pub fn errored(name: impl Into<String>, err: &crate::Error) -> Self {
        let nan = Side::real(f64::NAN);
        let mut r = Self::base(nan, nan, CheckRule::AbsErr, 0.0).named(name);
        r.note = Some(err.to_string());
        r
    }

    pub fn with_note(mut self, note: impl Into<String>) -> Self {
        self.note = Some(note.into());
        self
    }

    pub fn named(mut self, name: impl Into<String>) -> Self {
        self.name = name.into();
        self
    }

    pub fn criterion(mut self, c: u8) -> Self {
        self.criterion = Some(c);
        self
    }

    pub fn timed(mut self, start: Instant) -> Self {
        self.runtime = start.elapsed().as_secs_f64();
        self
    }

    pub fn with_seeds(mut self, seeds: &[u64]) -> Self {
        self.seeds.extend_from_slice(seeds);
        self
    }
}

fn component_z(diff: f64, se: f64) -> f64 {
    if diff == 0.0 {
        0.0
    } else if se == 0.0 {
        f64::INFINITY
    } else {
        diff.abs() / se
    }
}

/// Relative size of the rounding floor added to every standard error, so a
/// component that is identically zero in exact arithmetic (the imaginary
/// part of a real observable) does not score infinity from `1e-17` noise.
pub const ROUNDOFF_FLOOR: f64 = 1e-10;

fn z_score(a: &Side, b: &Side) -> f64 {
    let (sa, sb) = (a.stderr.unwrap_or((0.0, 0.0)), b.stderr.unwrap_or((0.0, 0.0)));
    let d = a.value - b.value;
    let floor = ROUNDOFF_FLOOR * (a.value.norm() + b.value.norm());
    let se = |x: f64, y: f64| x.hypot(y).hypot(floor);
    component_z(d.re, se(sa.0, sb.0)).max(component_z(d.im, se(sa.1, sb.1)))
}

/// Formula value against a Monte Carlo estimate: the larger of the two
/// componentwise `|formula − mean| / stderr`, passing at `≤ z_threshold`.
///
/// Standard errors are floored at [`ROUNDOFF_FLOOR`] times the magnitudes
/// compared; beyond that a component with zero error and any mismatch
/// scores infinity.
pub fn crosscheck(formula_value: C64, mc: &McEstimate, z_threshold: f64) -> CheckReport {
    let (lhs, rhs) = (Side::exact(formula_value), Side::sampled(mc));
    let z = z_score(&lhs, &rhs);
    let mut r = CheckReport::base(lhs, rhs, CheckRule::ZScore, z_threshold).with_seeds(&[mc.seed]);
    r.z_score = Some(z);
    r.pass = z <= z_threshold;
    r
}

/// Two Monte Carlo estimates against each other, errors combined in
/// quadrature.
pub fn crosscheck_two(a: &McEstimate, b: &McEstimate, z_threshold: f64) -> CheckReport {
    let (lhs, rhs) = (Side::sampled(a), Side::sampled(b));
    let z = z_score(&lhs, &rhs);
    let mut r = CheckReport::base(lhs, rhs, CheckRule::ZScore, z_threshold).with_seeds(&[a.seed, b.seed]);
    r.z_score = Some(z);
    r.pass = z <= z_threshold;
    r
}

/// Passes when the formula is *rejected* by the estimate at `z_threshold`.
pub fn discriminate(formula_value: C64, mc: &McEstimate, z_threshold: f64) -> CheckReport {
    let mut r = crosscheck(formula_value, mc, z_threshold);
    r.rule = CheckRule::ZScoreAbove;
    r.pass = r.z_score.is_some_and(|z| z > z_threshold);
    r
}

/// Deterministic relative comparison against `rhs`.
pub fn compare_rel(lhs: C64, rhs: C64, tolerance: f64) -> CheckReport {
    let err = if lhs == rhs { 0.0 } else { (lhs - rhs).norm() / rhs.norm() };
    let mut r = CheckReport::base(Side::exact(lhs), Side::exact(rhs), CheckRule::RelErr, tolerance);
    r.rel_err = Some(err);
    r.pass = err <= tolerance;
    r
}

/// Deterministic absolute comparison; `rel_err` holds the absolute error.
pub fn compare_abs(lhs: C64, rhs: C64, tolerance: f64) -> CheckReport {
    let err = (lhs - rhs).norm();
    let mut r = CheckReport::base(Side::exact(lhs), Side::exact(rhs), CheckRule::AbsErr, tolerance);
    r.rel_err = Some(err);
    r.pass = err <= tolerance;
    r
}

pub fn less_than(lhs: f64, rhs: f64) -> CheckReport {
    let mut r = CheckReport::base(Side::real(lhs), Side::real(rhs), CheckRule::LessThan, 0.0);
    r.pass = lhs < rhs;
    r
}

pub fn in_range(value: f64, lo: f64, hi: f64) -> CheckReport {
    let mut r = CheckReport::base(Side::real(value), Side::real((lo + hi) / 2.0), CheckRule::Range { lo, hi }, (hi - lo) / 2.0);
    r.pass = (lo..=hi).contains(&value);
    r
}
