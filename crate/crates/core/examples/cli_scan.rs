//! Drives the command line programmatically: a small crossover scan
//! rendered as CSV.

use rmtdiff::cli::{execute, parse_args};

fn main() {
    let argv = "rmtdiff scan --command crossover --alpha 0.5 --n 3 --grid-re -1:1:5 --grid-im 0:1:3";
    let cfg = parse_args(argv.split_whitespace()).unwrap_or_else(|e| {
        eprintln!("{e}");
        std::process::exit(e.exit_code());
    });
    match execute(&cfg) {
        Ok(out) => print!("{}", out.body),
        Err(e) => {
            eprintln!("{e}");
            std::process::exit(e.exit_code());
        }
    }
}
