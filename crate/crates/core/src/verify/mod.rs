//! Cross-route verification: formula against Monte Carlo, identities
//! between evaluators, and heat-equation residuals.

mod report;
mod residual;
mod suite;

pub use report::{
    compare_abs, compare_rel, crosscheck, crosscheck_two, discriminate, in_range, less_than,
    CheckReport, CheckRule, Side, DET_TOL, ROUNDOFF_FLOOR, Z_THRESHOLD,
};
pub use residual::{heat_residual, pde_residual_example1, Stencil};
pub use suite::{run_criterion, run_suite, SuiteConfig, SuiteKind, CRITERIA};
