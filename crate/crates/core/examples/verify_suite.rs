//! Runs the deterministic part of the verification suite (no sampling) and
//! prints one line per check.

use rmtdiff::verify::{run_suite, SuiteConfig, SuiteKind};

fn main() {
    let reports = run_suite(&SuiteConfig::new(SuiteKind::Deterministic));
    for r in &reports {
        let err = r.rel_err.map(|e| format!("{e:.2e}")).unwrap_or_default();
        println!("{:<4} {:<60} {err}", if r.pass { "ok" } else { "FAIL" }, r.name);
    }
    let failed = reports.iter().filter(|r| !r.pass).count();
    println!("{} checks, {failed} failed", reports.len());
}
