fn main() {
    std::process::exit(rmtdiff::cli::main());
}
